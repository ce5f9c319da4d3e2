#pragma once
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace tanglekit {

// Deterministic gaussian source. std::normal_distribution is implementation
// defined, so Box-Muller is spelled out here to keep fixed-seed output
// bit-identical across compilers and across the serial/parallel code paths.
class gaussian_stream {
public:
    explicit gaussian_stream(std::uint64_t seed) : gen_(seed) {}

    // uniform in [0,1)
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // uniform in (0,1], safe as a log argument
    double uniform_pos() { return (static_cast<double>(gen_() >> 11) + 1.0) * 0x1.0p-53; }

    double gauss() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
        const double t = 6.283185307179586476925286766559 * uniform();
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

    std::complex<double> cgauss() {
        const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
        const double t = 6.283185307179586476925286766559 * uniform();
        return {r * std::cos(t), r * std::sin(t)};
    }

    std::uint64_t raw() { return gen_(); }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// stable per-task seed derivation (splitmix64 finalizer)
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace tanglekit
