#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace monolab {

/// splitmix64 step; used to derive stream seeds (e.g. per shard) from a base seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    std::uint64_t s = base + 0x9E3779B97F4A7C15ull * (stream + 1);
    return splitmix64(s);
}

/// Deterministic random source: mt19937_64 with explicit Box-Muller normals.
/// std::normal_distribution is not pinned down by the standard, so Gaussian
/// draws are generated here to keep streams identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// uniform in [0, 1)
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// uniform in [lo, hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// uniform in (0, 1]
    double uniform_open0() { return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53; }

    std::uint64_t integer(std::uint64_t bound) { return engine_() % bound; }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform_open0();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double phi = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(phi);
        have_spare_ = true;
        return r * std::cos(phi);
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace monolab
