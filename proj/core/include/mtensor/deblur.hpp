#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "mtensor/lstsq.hpp"
#include "mtensor/tensor3.hpp"
#include "mtensor/transform.hpp"

namespace mtensor {

/// Gaussian cross-channel blur: A(:,:,k) = delta_k * G with
/// G(i,j) = exp(-(i-j)^2 / (2 sigma^2)) / (sigma sqrt(2 pi)) for |i-j| <= bandwidth.
struct BlurModel {
    Index size = 64;
    double sigma = 4.0;
    /// Requested bandwidth; values >= size are clipped to size - 1.
    Index bandwidth = 30;
    std::array<double, 3> deltas{0.75, 0.25, 0.25};

    Index effective_bandwidth() const noexcept { return bandwidth < size ? bandwidth : size - 1; }
};

/// Throws InvalidArgument on size < 1, sigma <= 0, negative bandwidth or non-finite deltas.
void validate(const BlurModel& model);

/// Warning text when the deltas do not sum to 1 (within 1e-12), otherwise nothing.
std::optional<std::string> delta_warning(const BlurModel& model);

/// One-sided: C = A *_M X, the right operator is the identity tensor.
/// Two-sided: C = A *_M X *_M B with B(:,:,1) = delta_1 G^T and B(:,:,2) = B(:,:,3) = O.
enum class BlurMode { one_sided, two_sided };

std::string_view to_string(BlurMode m) noexcept;
std::optional<BlurMode> parse_blur_mode(std::string_view s) noexcept;

/// Banded Gaussian matrix of the given order.
Matrix blur_matrix(Index size, double sigma, Index bandwidth);

struct BlurPair {
    Tensor3 a;  // m x m x 3
    Tensor3 b;  // n x n x 3
};

/// A from `model` (m = model.size); B of order n built from the same sigma,
/// bandwidth (clipped to n - 1) and delta_1.
BlurPair build_blur_pair(const BlurModel& model, Index n, BlurMode mode, const Transform& t);

/// A *_M X *_M B + N. N has independent N(0, noise_var) real parts drawn from
/// CounterRng(seed) in storage order; imaginary parts are untouched.
Tensor3 synthesize_observation(const Tensor3& x_true, const Tensor3& a, const Tensor3& b, const Transform& t,
                               double noise_var, std::uint64_t seed);

struct Reconstruction {
    /// Real parts of the regularized solution clamped to [0, 1].
    Tensor3 image;
    /// Largest |imag| of the unclamped solution (diagnostic; expected <= 1e-8).
    double max_imag = 0.0;
};

Reconstruction reconstruct(const Tensor3& observed, const Tensor3& a, const Tensor3& b, const Transform& t,
                           const RegularizationParams& reg);

/// Real parts clamped to [0, 1], imaginary parts dropped.
Tensor3 clamp_unit(const Tensor3& x);

/// 10 log10(1 / MSE) over all entries (real parts); +inf when the inputs are equal.
double psnr(const Tensor3& x, const Tensor3& y);

/// Deterministic size x size x 3 test image with smooth gradients, a disk and a rectangle.
Tensor3 synthetic_image(Index size);

}  // namespace mtensor
