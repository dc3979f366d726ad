#pragma once

#include <cstdint>

#include "mtensor/tensor3.hpp"
#include "mtensor/transform.hpp"

namespace mtensor {

/// Counter-based generator: draw i of stream `seed` is a pure function of (seed, i).
///
///   bits(seed, i)   = splitmix64_mix(seed + (i + 1) * 0x9E3779B97F4A7C15)
///   uniform(seed,i) = ((bits >> 11) + 0.5) * 2^-53          in (0, 1)
///   normal pair j   = Box-Muller on u1 = uniform(2j), u2 = uniform(2j + 1):
///                     sqrt(-2 ln u1) * cos(2 pi u2), sqrt(-2 ln u1) * sin(2 pi u2)
///
/// where splitmix64_mix(z) applies z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
/// z ^= z >> 27; z *= 0x94D049BB133111EB; z ^= z >> 31. Streams reproduce bit
/// for bit on any IEEE-754 platform with a correctly rounded libm log/cos/sin.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) noexcept : seed_(seed) {}

    static std::uint64_t bits(std::uint64_t seed, std::uint64_t counter) noexcept;
    static double uniform(std::uint64_t seed, std::uint64_t counter) noexcept;

    std::uint64_t next_bits() noexcept { return bits(seed_, counter_++); }
    /// Uniform in (0, 1).
    double uniform() noexcept { return uniform(seed_, counter_++); }
    /// Uniform in (lo, hi).
    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }
    /// Standard normal; consecutive calls consume the two halves of one Box-Muller pair.
    double normal() noexcept;

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t counter() const noexcept { return counter_; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Real tensor with entries uniform in (lo, hi).
Tensor3 random_real_tensor(Index m, Index n, Index p, CounterRng& rng, double lo = -1.0, double hi = 1.0);
/// Complex tensor with real and imaginary parts uniform in (lo, hi).
Tensor3 random_complex_tensor(Index m, Index n, Index p, CounterRng& rng, double lo = -1.0, double hi = 1.0);
/// Real matrix with entries uniform in (lo, hi).
Matrix random_real_matrix(Index rows, Index cols, CounterRng& rng, double lo = -1.0, double hi = 1.0);

/// Transform with entries uniform in (0, 1); redrawn while numerically singular.
Transform random_transform(Index p, CounterRng& rng);

/// Real n x n x p tensor whose transform-domain slices are strictly diagonally
/// dominant: off-diagonal entries uniform in (-1, 1) and each diagonal entry
/// (1 + margin) times its off-diagonal row sum plus a uniform (0, 1) draw.
Tensor3 random_hat_sdd_tensor(Index n, const Transform& t, CounterRng& rng, double margin = 0.1);

}  // namespace mtensor
