#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace ccnr {

// splitmix64 finalizer. Together with mix_seed below this is the documented
// per-candidate seeding scheme: results must not depend on which worker
// evaluates which candidate, so every candidate derives its whole random
// stream from (master seed, candidate index) alone.
inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

// Deterministic uniform/gaussian source. The raw stream is mt19937_64 (whose
// output sequence is pinned by the standard) and the transforms below are
// explicit, so identical seeds give bitwise-identical samples on every
// platform; std::normal_distribution would not.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        // Rejection-free modulo is biased for huge bounds; bounds here are
        // tiny (matrix dimensions), where the bias is ~2^-60.
        return engine_() % bound;
    }

    // Standard normal via Box-Muller.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        // First factor uses (0, 1] so the log is finite.
        const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * 3.14159265358979323846 * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    std::complex<double> complex_gaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return {re, im};
    }

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace ccnr
