#include "mtensor/random.hpp"

#include <cmath>
#include <numbers>

#include "mtensor/error.hpp"

namespace mtensor {

std::uint64_t CounterRng::bits(std::uint64_t seed, std::uint64_t counter) noexcept {
    std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double CounterRng::uniform(std::uint64_t seed, std::uint64_t counter) noexcept {
    return (static_cast<double>(bits(seed, counter) >> 11) + 0.5) * 0x1.0p-53;
}

double CounterRng::normal() noexcept {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

Tensor3 random_real_tensor(Index m, Index n, Index p, CounterRng& rng, double lo, double hi) {
    Tensor3 out(m, n, p);
    for (auto& z : out.data()) z = rng.uniform(lo, hi);
    return out;
}

Tensor3 random_complex_tensor(Index m, Index n, Index p, CounterRng& rng, double lo, double hi) {
    Tensor3 out(m, n, p);
    for (auto& z : out.data()) {
        const double re = rng.uniform(lo, hi);
        z = Complex(re, rng.uniform(lo, hi));
    }
    return out;
}

Matrix random_real_matrix(Index rows, Index cols, CounterRng& rng, double lo, double hi) {
    Matrix out(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        for (Index j = 0; j < cols; ++j) out(i, j) = rng.uniform(lo, hi);
    }
    return out;
}

Transform random_transform(Index p, CounterRng& rng) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        try {
            return Transform(random_real_matrix(p, p, rng, 0.0, 1.0));
        } catch (const SingularTransform&) {
        }
    }
    throw SingularTransform("random_transform: no invertible draw in 100 attempts");
}

Tensor3 random_hat_sdd_tensor(Index n, const Transform& t, CounterRng& rng, double margin) {
    HatTensor h(Tensor3(n, n, t.order()));
    for (Index k = 0; k < t.order(); ++k) {
        auto s = h.slice(k);
        for (Index i = 0; i < n; ++i) {
            double off = 0.0;
            for (Index j = 0; j < n; ++j) {
                if (j == i) continue;
                const double v = rng.uniform(-1.0, 1.0);
                s(i, j) = v;
                off += std::abs(v);
            }
            s(i, i) = (1.0 + margin) * off + rng.uniform();
        }
    }
    return from_hat(h, t);
}

}  // namespace mtensor
