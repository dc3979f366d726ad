#include "mtensor/deblur.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "mtensor/error.hpp"
#include "mtensor/random.hpp"
#include "mtensor/tensor_ops.hpp"

namespace mtensor {

void validate(const BlurModel& model) {
    if (model.size < 1) throw InvalidArgument("blur size must be positive");
    if (!(model.sigma > 0.0) || !std::isfinite(model.sigma)) throw InvalidArgument("blur sigma must be positive");
    if (model.bandwidth < 0) throw InvalidArgument("blur bandwidth must be nonnegative");
    for (double d : model.deltas) {
        if (!std::isfinite(d)) throw InvalidArgument("blur deltas must be finite");
    }
}

std::optional<std::string> delta_warning(const BlurModel& model) {
    const double sum = model.deltas[0] + model.deltas[1] + model.deltas[2];
    if (std::abs(sum - 1.0) <= 1e-12) return std::nullopt;
    return "blur deltas sum to " + std::to_string(sum) + ", not 1; using them as given";
}

std::string_view to_string(BlurMode m) noexcept { return m == BlurMode::one_sided ? "one_sided" : "two_sided"; }

std::optional<BlurMode> parse_blur_mode(std::string_view s) noexcept {
    if (s == "one_sided" || s == "one-sided") return BlurMode::one_sided;
    if (s == "two_sided" || s == "two-sided") return BlurMode::two_sided;
    return std::nullopt;
}

Matrix blur_matrix(Index size, double sigma, Index bandwidth) {
    if (size < 1 || !(sigma > 0.0) || bandwidth < 0) throw InvalidArgument("blur_matrix: invalid parameters");
    const double norm = 1.0 / (sigma * std::sqrt(2.0 * std::numbers::pi));
    Matrix g = Matrix::Zero(size, size);
    for (Index i = 0; i < size; ++i) {
        for (Index j = std::max<Index>(0, i - bandwidth); j <= std::min(size - 1, i + bandwidth); ++j) {
            const double d = static_cast<double>(i - j);
            g(i, j) = norm * std::exp(-d * d / (2.0 * sigma * sigma));
        }
    }
    return g;
}

BlurPair build_blur_pair(const BlurModel& model, Index n, BlurMode mode, const Transform& t) {
    validate(model);
    if (n < 1) throw InvalidArgument("build_blur_pair: n must be positive");
    if (t.order() != 3) throw DimensionMismatch("build_blur_pair: the transform must have order 3");
    const Matrix g = blur_matrix(model.size, model.sigma, model.effective_bandwidth());
    BlurPair out{Tensor3(model.size, model.size, 3), Tensor3(n, n, 3)};
    for (Index k = 0; k < 3; ++k) out.a.slice(k) = model.deltas[static_cast<std::size_t>(k)] * g;
    if (mode == BlurMode::one_sided) {
        out.b = identity_tensor(n, t);
    } else {
        const Matrix gn = blur_matrix(n, model.sigma, std::min(model.bandwidth, n - 1));
        out.b.slice(0) = model.deltas[0] * gn.transpose();
    }
    return out;
}

Tensor3 synthesize_observation(const Tensor3& x_true, const Tensor3& a, const Tensor3& b, const Transform& t,
                               double noise_var, std::uint64_t seed) {
    if (!(noise_var >= 0.0) || !std::isfinite(noise_var)) throw InvalidArgument("noise variance must be >= 0");
    Tensor3 c = m_product(m_product(a, x_true, t), b, t);
    if (noise_var > 0.0) {
        CounterRng rng(seed);
        const double sd = std::sqrt(noise_var);
        for (auto& z : c.data()) z += sd * rng.normal();
    }
    return c;
}

Tensor3 clamp_unit(const Tensor3& x) {
    Tensor3 out(x.rows(), x.cols(), x.depth());
    auto src = x.data();
    auto dst = out.data();
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] = std::clamp(src[i].real(), 0.0, 1.0);
    return out;
}

Reconstruction reconstruct(const Tensor3& observed, const Tensor3& a, const Tensor3& b, const Transform& t,
                           const RegularizationParams& reg) {
    const Tensor3 x = tikhonov_solve(a, b, observed, reg, t);
    double max_imag = 0.0;
    for (const auto& z : x.data()) max_imag = std::max(max_imag, std::abs(z.imag()));
    return {clamp_unit(x), max_imag};
}

double psnr(const Tensor3& x, const Tensor3& y) {
    if (!same_shape(x, y)) throw DimensionMismatch("psnr: images differ in shape");
    double sum = 0.0;
    auto xs = x.data();
    auto ys = y.data();
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double d = xs[i].real() - ys[i].real();
        sum += d * d;
    }
    if (sum == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(static_cast<double>(xs.size()) / sum);
}

Tensor3 synthetic_image(Index size) {
    if (size < 1) throw InvalidArgument("synthetic_image: size must be positive");
    Tensor3 img(size, size, 3);
    const double s = static_cast<double>(size);
    for (Index i = 0; i < size; ++i) {
        for (Index j = 0; j < size; ++j) {
            const double y = static_cast<double>(i) / s;
            const double x = static_cast<double>(j) / s;
            double r = 0.3 + 0.5 * x;
            double g = 0.2 + 0.6 * y;
            double bl = 0.5 + 0.3 * std::sin(6.0 * x) * std::cos(4.0 * y);
            if ((x - 0.35) * (x - 0.35) + (y - 0.4) * (y - 0.4) < 0.04) {
                r = 0.95;
                g = 0.1;
            }
            if (x > 0.6 && x < 0.85 && y > 0.55 && y < 0.9) {
                bl = 0.05;
                r = 0.1;
            }
            img(i, j, 0) = r;
            img(i, j, 1) = g;
            img(i, j, 2) = bl;
        }
    }
    return img;
}

}  // namespace mtensor
