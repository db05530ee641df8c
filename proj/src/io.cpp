#include "ccnr/io.hpp"

#include <fstream>

namespace ccnr {

namespace {

using nlohmann::json;

json real_part_rows(const Matrix& a, bool imaginary) {
    json rows = json::array();
    for (Index i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (Index j = 0; j < a.cols(); ++j)
            row.push_back(imaginary ? a(i, j).imag() : a(i, j).real());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_parts(const json& re, const json& im, Index rows, Index cols) {
    if (!re.is_array() || !im.is_array() || static_cast<Index>(re.size()) != rows ||
        static_cast<Index>(im.size()) != rows)
        throw ParseError("matrix file: re/im must be arrays of " + std::to_string(rows) +
                         " rows");
    Matrix a(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        const json& rre = re[i];
        const json& rim = im[i];
        if (!rre.is_array() || !rim.is_array() || static_cast<Index>(rre.size()) != cols ||
            static_cast<Index>(rim.size()) != cols)
            throw ParseError("matrix file: row " + std::to_string(i) + " must have " +
                             std::to_string(cols) + " entries");
        for (Index j = 0; j < cols; ++j) {
            if (!rre[j].is_number() || !rim[j].is_number())
                throw ParseError("matrix file: non-numeric entry at (" + std::to_string(i) +
                                 ", " + std::to_string(j) + ")");
            a(i, j) = Complex(rre[j].get<double>(), rim[j].get<double>());
        }
    }
    return a;
}

}  // namespace

nlohmann::json complex_matrix_to_json(const Matrix& a) {
    return json{{"rows", a.rows()},
                {"cols", a.cols()},
                {"re", real_part_rows(a, false)},
                {"im", real_part_rows(a, true)}};
}

nlohmann::json density_to_json(const DensityMatrix& rho) {
    return json{{"dims", {rho.dims().m, rho.dims().n}},
                {"re", real_part_rows(rho.mat(), false)},
                {"im", real_part_rows(rho.mat(), true)}};
}

DensityMatrix density_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("matrix file: top level must be an object");
    for (const char* key : {"dims", "re", "im"})
        if (!j.contains(key)) throw ParseError(std::string("matrix file: missing key '") + key + "'");

    const json& dims = j["dims"];
    if (!dims.is_array() || dims.size() != 2 || !dims[0].is_number_integer() ||
        !dims[1].is_number_integer())
        throw ParseError("matrix file: dims must be [m, n]");
    const Index m = dims[0].get<Index>();
    const Index n = dims[1].get<Index>();
    if (m < 1 || n < 1) throw ParseError("matrix file: dims must be positive");

    Matrix a = matrix_from_parts(j["re"], j["im"], m * n, m * n);
    return DensityMatrix::make(std::move(a), {m, n});
}

LoadedState load_density_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("'" + path + "': " + e.what());
    }

    DensityMatrix rho = density_from_json(j);
    if (rho.dims().m > rho.dims().n) return {swap_subsystems(rho), true};
    return {std::move(rho), false};
}

void write_density_file(const std::string& path, const DensityMatrix& rho) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    out << density_to_json(rho).dump(1) << "\n";
}

}  // namespace ccnr
