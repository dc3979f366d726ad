#pragma once

#include <string_view>

#include "mtensor/tensor3.hpp"
#include "mtensor/transform.hpp"

namespace mtensor {

/// Sign class of a splitting A = F - G, strongest first. Every regular
/// splitting is weak regular, and every weak regular splitting is nonnegative.
enum class SplittingClass { regular, weak_regular, nonnegative, unclassified };

std::string_view to_string(SplittingClass c) noexcept;

/// True when a splitting of class `actual` also has every property of `required`
/// (the classes nest, so this is an order comparison).
constexpr bool satisfies(SplittingClass actual, SplittingClass required) noexcept {
    return static_cast<int>(actual) <= static_cast<int>(required);
}

/// A = F - G with F invertible under *_M.
struct Splitting {
    Tensor3 f;
    Tensor3 g;
    SplittingClass kind = SplittingClass::unclassified;
};

/// Relaxation (omega) and acceleration (kappa) of an AOR splitting.
struct AorParams {
    double omega = 1.0;
    double kappa = 0.0;

    static constexpr AorParams jacobi() noexcept { return {1.0, 0.0}; }
    static constexpr AorParams gauss_seidel() noexcept { return {1.0, 1.0}; }
    static constexpr AorParams sor(double omega) noexcept { return {omega, omega}; }
};

/// Throws InvalidArgument unless omega is in (0, 2] and kappa >= 0.
void validate(const AorParams& params);

/// Facewise diagonal, strictly lower and strictly upper parts of the
/// original-domain slices, with D + L + U = A entry for entry.
struct DluParts {
    Tensor3 d;
    Tensor3 l;
    Tensor3 u;
};

DluParts extract_dlu(const Tensor3& a);

/// F = (D + kappa*L)/omega and G = ((1-omega)D + (kappa-omega)L - omega*U)/omega.
///
/// Throws ZeroDiagonal when a transform-domain diagonal entry of A vanishes,
/// since F's transform-domain slices are lower triangular with that diagonal.
/// The returned splitting is classified.
Splitting aor_splitting(const Tensor3& a, const AorParams& params, const Transform& t);

inline Splitting jacobi_splitting(const Tensor3& a, const Transform& t) {
    return aor_splitting(a, AorParams::jacobi(), t);
}
inline Splitting gauss_seidel_splitting(const Tensor3& a, const Transform& t) {
    return aor_splitting(a, AorParams::gauss_seidel(), t);
}

/// Splitting with a caller-supplied F: G = F - A, classified.
Splitting splitting_from_f(const Tensor3& a, Tensor3 f, const Transform& t);

/// Strongest applicable class. Throws InconsistentSplitting when
/// ||F - G - A||_F > 1e-12 * max(1, ||A||_F), SingularSlice when F is singular.
SplittingClass classify(const Tensor3& a, const Tensor3& f, const Tensor3& g, const Transform& t);

/// rho(F^-1 *_M G).
double convergence_radius(const Splitting& s, const Transform& t);

/// Open upper bound 2 / (1 + rho(F^-1 *_M G)) on the step parameter.
double alpha_bound(const Splitting& s, const Transform& t);
double alpha_bound_from_radius(double rho);

/// Both sides of the nonnegative-splitting equivalence: for a nonnegative
/// splitting, A^-1 *_M F >= 0 exactly when rho(F^-1 *_M G) < 1.
struct NonnegativeSplittingCheck {
    bool is_nonnegative_splitting = false;
    bool a_inv_f_nonnegative = false;
    double radius = 0.0;

    bool radius_below_one() const noexcept { return radius < 1.0; }
    /// True when the equivalence holds on this instance (vacuous unless the splitting is nonnegative).
    bool equivalence_holds() const noexcept {
        return !is_nonnegative_splitting || a_inv_f_nonnegative == radius_below_one();
    }
};

NonnegativeSplittingCheck check_nonnegative_splitting(const Tensor3& a, const Splitting& s, const Transform& t);

}  // namespace mtensor
