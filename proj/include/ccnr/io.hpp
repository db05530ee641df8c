#pragma once

#include <string>

#include <json.hpp>

#include "ccnr/bipartite.hpp"

namespace ccnr {

// Matrix file schema: {"dims": [m, n], "re": [[...]], "im": [[...]]} with
// re/im of shape mn x mn, row-major. Serialization round-trips entries
// exactly.

struct LoadedState {
    DensityMatrix state;
    bool swapped = false;  // input had m > n and was normalized to (n, m)
};

// Throws ParseError on malformed files, ValidationError (with trace and
// minimum eigenvalue in the message) when the matrix is not a density matrix.
// Inputs with m > n are auto-normalized by a subsystem swap; the flag records
// it so callers can warn.
LoadedState load_density_file(const std::string& path);

void write_density_file(const std::string& path, const DensityMatrix& rho);

// Conversions shared by the file format and CLI reports.
nlohmann::json complex_matrix_to_json(const Matrix& a);
nlohmann::json density_to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const nlohmann::json& j);

}  // namespace ccnr
