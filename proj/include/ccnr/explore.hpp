#pragma once

#include <cstdint>
#include <optional>

#include "ccnr/bipartite.hpp"
#include "ccnr/rng.hpp"

namespace ccnr {

enum class SearchMode {
    AllStatesConstrained,  // estimates b_tilde: any state, trace norm <= 1 enforced
    SeparableStates,       // estimates b_sep: explicit convex product mixtures
};

struct SearchConfig {
    int m = 2;
    int n = 2;
    int ell = 2;
    std::int64_t budget = 0;  // number of random candidates drawn
    std::uint64_t seed = 0;
    SearchMode mode = SearchMode::AllStatesConstrained;
    // Evaluate the closed-form extremal construction first when one exists
    // for (m, n, mode). Seeded candidates are evaluated even when budget = 0.
    bool seed_with_constructions = true;
    int workers = 1;
};

struct SearchResult {
    // Largest f_ell(singular spectrum of the realignment) over evaluated
    // candidates; a rigorous lower bound on the quantity being estimated.
    double best_value = 0.0;
    std::optional<DensityMatrix> best_state;
    std::int64_t evaluations = 0;  // candidates actually scored (rejections excluded)
    // Closed form when known: b_tilde for AllStatesConstrained (absent in the
    // open gap), b_sep when m = n for SeparableStates, absent otherwise.
    std::optional<double> closed_form;
    std::optional<double> gap;  // closed_form - best_value
};

// Hilbert-Schmidt random state: G G^dagger / trace, G with iid standard
// complex normal entries.
DensityMatrix sample_density(int m, int n, Rng& rng);

// Convex combination of k pure product states; Haar-random unit factors and
// flat simplex weights. Separable by construction.
DensityMatrix sample_separable(int m, int n, int k, Rng& rng);

// Randomized maximization of f_ell over realignment spectra: fresh samples
// interleaved with contractions toward the running best, organized in
// synchronous rounds so the result is identical for every worker count.
// Deterministic given cfg.
SearchResult maximize_esf(const SearchConfig& cfg);

}  // namespace ccnr
