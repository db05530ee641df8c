#include "ccnr/explore.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include "ccnr/bounds.hpp"
#include "ccnr/construct.hpp"
#include "ccnr/errors.hpp"
#include "ccnr/symmetric.hpp"

namespace ccnr {

DensityMatrix sample_density(int m, int n, Rng& rng) {
    const Index dim = static_cast<Index>(m) * n;
    Matrix g(dim, dim);
    for (Index j = 0; j < dim; ++j)
        for (Index i = 0; i < dim; ++i) g(i, j) = rng.complex_gaussian();
    Matrix gram = g * g.adjoint();
    gram = 0.5 * (gram + gram.adjoint()).eval();
    gram /= gram.trace().real();
    return DensityMatrix::make(std::move(gram), {m, n});
}

DensityMatrix sample_separable(int m, int n, int k, Rng& rng) {
    if (k < 1) throw BadDims("sample_separable: need k >= 1, got " + std::to_string(k));
    const Index dim = static_cast<Index>(m) * n;

    // Flat simplex draw: normalized exponentials.
    std::vector<double> weights(k);
    double total = 0.0;
    for (double& w : weights) {
        w = -std::log(1.0 - rng.uniform());
        total += w;
    }

    const auto haar_unit = [&rng](Index d) {
        Vector u(d);
        for (Index i = 0; i < d; ++i) u(i) = rng.complex_gaussian();
        u /= u.norm();
        return u;
    };

    Matrix rho = Matrix::Zero(dim, dim);
    for (int j = 0; j < k; ++j) {
        const Vector u = haar_unit(m);
        const Vector v = haar_unit(n);
        const Vector uv = tensor(u, v);
        rho += (weights[j] / total) * (uv * uv.adjoint());
    }
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return DensityMatrix::make(std::move(rho), {m, n});
}

namespace {

constexpr double kConstraintTol = 1e-12;
constexpr Index kRoundSize = 64;

struct Candidate {
    double value;
    std::int64_t index;
    std::optional<DensityMatrix> state;
};

// Lower index wins ties so the reduction is associative and order-free.
bool better(const Candidate& a, const Candidate& b) {
    if (a.value != b.value) return a.value > b.value;
    return a.index < b.index;
}

// Score one state; nullopt when the mode's constraint rejects it.
std::optional<double> evaluate(const SearchConfig& cfg, const DensityMatrix& rho) {
    const RealVector s = singular_values(realign(rho));
    if (cfg.mode == SearchMode::AllStatesConstrained && s.sum() > 1.0 + kConstraintTol)
        return std::nullopt;
    return esf(s, cfg.ell);
}

DensityMatrix fresh_sample(const SearchConfig& cfg, Rng& rng) {
    if (cfg.mode == SearchMode::SeparableStates) {
        const int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(cfg.m) * cfg.n));
        return sample_separable(cfg.m, cfg.n, k, rng);
    }
    return sample_density(cfg.m, cfg.n, rng);
}

// Candidate for stream index i: a fresh sample, or (on odd indices once a
// best exists) a contraction (1-eps) best + eps sigma with eps cycling
// {0.2, 0.05, 0.01}. Mixtures keep separability, so both modes may refine.
DensityMatrix make_candidate(const SearchConfig& cfg, std::int64_t index,
                             const std::optional<DensityMatrix>& best) {
    Rng rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(index)));
    const bool refine = best.has_value() && (index % 2 == 1);
    DensityMatrix sigma = fresh_sample(cfg, rng);
    if (!refine) return sigma;

    static constexpr double kEps[3] = {0.2, 0.05, 0.01};
    const double eps = kEps[(index / 2) % 3];
    Matrix mixed = (1.0 - eps) * best->mat() + eps * sigma.mat();
    return DensityMatrix::make(std::move(mixed), best->dims());
}

}  // namespace

SearchResult maximize_esf(const SearchConfig& cfg) {
    if (cfg.m < 2 || cfg.n < cfg.m)
        throw BadDims("maximize_esf: need 2 <= m <= n, got (" + std::to_string(cfg.m) + ", " +
                      std::to_string(cfg.n) + ")");
    if (cfg.ell < 1 || cfg.ell > cfg.m * cfg.m)
        throw BadOrder("maximize_esf: order " + std::to_string(cfg.ell) + " out of range [1, " +
                       std::to_string(cfg.m * cfg.m) + "]");
    if (cfg.budget < 0) throw BadDims("maximize_esf: negative budget");
    const int workers = std::max(1, cfg.workers);

    SearchResult result;
    Candidate best{-1.0, -1, std::nullopt};

    const auto consider = [&](Candidate c) {
        if (!best.state.has_value() || better(c, best)) best = std::move(c);
    };

    // Construction seeds, evaluated ahead of the random stream. Indices -2/-1
    // keep them distinguishable from stream candidates in the tiebreak.
    if (cfg.seed_with_constructions) {
        std::vector<DensityMatrix> seeds;
        if (cfg.mode == SearchMode::AllStatesConstrained) {
            const long long mcubed = static_cast<long long>(cfg.m) * cfg.m * cfg.m;
            if (cfg.n >= mcubed)
                seeds.push_back(extremal_flat(cfg.m, cfg.n));
            else if (construction_feasible(cfg.m, cfg.n).feasible)
                seeds.push_back(extremal_spike(cfg.m, cfg.n).first);
        } else if (cfg.m == cfg.n) {
            seeds.push_back(separable_witness(cfg.n));
        }
        std::int64_t seed_index = -static_cast<std::int64_t>(seeds.size());
        for (auto& s : seeds) {
            if (const auto v = evaluate(cfg, s)) {
                ++result.evaluations;
                consider({*v, seed_index, std::move(s)});
            }
            ++seed_index;
        }
    }

    // Synchronous rounds: candidates in a round all contract toward the best
    // of the previous rounds, so the outcome is a pure function of cfg no
    // matter how indices are split across workers.
    for (std::int64_t round_start = 0; round_start < cfg.budget; round_start += kRoundSize) {
        const std::int64_t round_end = std::min<std::int64_t>(round_start + kRoundSize, cfg.budget);

        std::vector<Candidate> local(workers, Candidate{-1.0, -1, std::nullopt});
        std::vector<std::int64_t> evals(workers, 0);

        const auto run_worker = [&](int w) {
            for (std::int64_t i = round_start + w; i < round_end; i += workers) {
                DensityMatrix candidate = make_candidate(cfg, i, best.state);
                const auto v = evaluate(cfg, candidate);
                if (!v) continue;
                ++evals[w];
                Candidate c{*v, i, std::move(candidate)};
                if (!local[w].state.has_value() || better(c, local[w])) local[w] = std::move(c);
            }
        };

        if (workers == 1) {
            run_worker(0);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(workers);
            for (int w = 0; w < workers; ++w) pool.emplace_back(run_worker, w);
            for (auto& t : pool) t.join();
        }

        for (int w = 0; w < workers; ++w) {
            result.evaluations += evals[w];
            if (local[w].state.has_value()) consider(std::move(local[w]));
        }
    }

    result.best_value = best.state.has_value() ? best.value : 0.0;
    result.best_state = std::move(best.state);

    if (cfg.mode == SearchMode::AllStatesConstrained) {
        result.closed_form = b_tilde(cfg.m, cfg.n, cfg.ell).value;
    } else if (cfg.m == cfg.n) {
        result.closed_form = b_sep(cfg.n, cfg.ell);
    }
    if (result.closed_form) result.gap = *result.closed_form - result.best_value;
    return result;
}

}  // namespace ccnr
