#include "mtensor/splitting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mtensor/error.hpp"
#include "mtensor/tensor_ops.hpp"

namespace mtensor {

std::string_view to_string(SplittingClass c) noexcept {
    switch (c) {
        case SplittingClass::regular: return "regular";
        case SplittingClass::weak_regular: return "weak_regular";
        case SplittingClass::nonnegative: return "nonnegative";
        case SplittingClass::unclassified: return "unclassified";
    }
    return "unclassified";
}

void validate(const AorParams& params) {
    if (!std::isfinite(params.omega) || !(params.omega > 0.0) || params.omega > 2.0) {
        throw InvalidArgument("AOR omega must lie in (0, 2], got " + std::to_string(params.omega));
    }
    if (!std::isfinite(params.kappa) || params.kappa < 0.0) {
        throw InvalidArgument("AOR kappa must be nonnegative, got " + std::to_string(params.kappa));
    }
}

DluParts extract_dlu(const Tensor3& a) {
    if (!a.is_square()) throw DimensionMismatch("extract_dlu: tensor is not square");
    return {diagonal_part(a), strictly_lower_part(a), strictly_upper_part(a)};
}

Splitting aor_splitting(const Tensor3& a, const AorParams& params, const Transform& t) {
    validate(params);
    if (!a.is_square()) throw DimensionMismatch("aor_splitting: tensor is not square");
    if (a.depth() != t.order()) throw DimensionMismatch("aor_splitting: transform order does not match tensor");

    const HatTensor hat = to_hat(a, t);
    const double scale = std::max(1.0, hat.values().data().empty() ? 0.0 : [&] {
        double mx = 0.0;
        for (const auto& z : hat.values().data()) mx = std::max(mx, std::abs(z));
        return mx;
    }());
    const double zero_tol = 16.0 * std::numeric_limits<double>::epsilon() * scale;
    for (Index k = 0; k < hat.depth(); ++k) {
        for (Index i = 0; i < hat.rows(); ++i) {
            if (std::abs(hat.slice(k)(i, i)) <= zero_tol) {
                throw ZeroDiagonal(static_cast<std::size_t>(k), static_cast<std::size_t>(i));
            }
        }
    }

    // Per-entry construction over the D/L/U partition.
    const double w = params.omega;
    const double kappa = params.kappa;
    Splitting s{Tensor3(a.rows(), a.cols(), a.depth()), Tensor3(a.rows(), a.cols(), a.depth()),
                SplittingClass::unclassified};
    for (Index k = 0; k < a.depth(); ++k) {
        for (Index i = 0; i < a.rows(); ++i) {
            for (Index j = 0; j < a.cols(); ++j) {
                const Complex v = a(i, j, k);
                if (i == j) {
                    s.f(i, j, k) = v / w;
                    s.g(i, j, k) = (1.0 - w) * v / w;
                } else if (i > j) {
                    s.f(i, j, k) = kappa * v / w;
                    s.g(i, j, k) = (kappa - w) * v / w;
                } else {
                    s.g(i, j, k) = -v;
                }
            }
        }
    }
    s.kind = classify(a, s.f, s.g, t);
    return s;
}

Splitting splitting_from_f(const Tensor3& a, Tensor3 f, const Transform& t) {
    if (!same_shape(a, f)) throw DimensionMismatch("splitting_from_f: F and A differ in shape");
    Tensor3 g = f - a;
    const SplittingClass kind = classify(a, f, g, t);
    return {std::move(f), std::move(g), kind};
}

SplittingClass classify(const Tensor3& a, const Tensor3& f, const Tensor3& g, const Transform& t) {
    if (!same_shape(a, f) || !same_shape(a, g)) throw DimensionMismatch("classify: A, F, G differ in shape");
    if (!a.is_square()) throw DimensionMismatch("classify: tensors are not square");
    const double defect = frobenius_norm(f - g - a);
    if (defect > 1e-12 * std::max(1.0, frobenius_norm(a))) {
        throw InconsistentSplitting("classify: ||F - G - A||_F = " + std::to_string(defect));
    }

    const HatTensor f_inv = inverse(to_hat(f, t));
    const HatTensor g_hat = to_hat(g, t);
    const bool f_inv_nonneg = is_nonnegative(f_inv);
    const bool g_nonneg = is_nonnegative(g_hat);
    const bool iter_nonneg = is_nonnegative(face_product(f_inv, g_hat));

    if (f_inv_nonneg && g_nonneg) return SplittingClass::regular;
    if (f_inv_nonneg && iter_nonneg) return SplittingClass::weak_regular;
    if (iter_nonneg) return SplittingClass::nonnegative;
    return SplittingClass::unclassified;
}

double convergence_radius(const Splitting& s, const Transform& t) {
    return spectral_radius(face_product(inverse(to_hat(s.f, t)), to_hat(s.g, t)));
}

double alpha_bound_from_radius(double rho) { return 2.0 / (1.0 + rho); }

double alpha_bound(const Splitting& s, const Transform& t) {
    return alpha_bound_from_radius(convergence_radius(s, t));
}

NonnegativeSplittingCheck check_nonnegative_splitting(const Tensor3& a, const Splitting& s, const Transform& t) {
    const HatTensor f_hat = to_hat(s.f, t);
    const HatTensor iteration = face_product(inverse(f_hat), to_hat(s.g, t));
    NonnegativeSplittingCheck out;
    out.is_nonnegative_splitting = is_nonnegative(iteration);
    out.a_inv_f_nonnegative = is_nonnegative(face_product(inverse(to_hat(a, t)), f_hat));
    out.radius = spectral_radius(iteration);
    return out;
}

}  // namespace mtensor
