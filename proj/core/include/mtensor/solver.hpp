#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "mtensor/splitting.hpp"
#include "mtensor/tensor3.hpp"
#include "mtensor/transform.hpp"

namespace mtensor {

enum class StopRule { relative_residual, absolute_residual };
enum class StopReason { tolerance_met, max_iter, precheck_failed };

std::string_view to_string(StopRule r) noexcept;
std::string_view to_string(StopReason r) noexcept;

struct SolverConfig {
    double alpha = 1.0;
    double beta = 1.0;
    double tol = 1e-10;
    int max_iter = 10000;
    StopRule stop_rule = StopRule::relative_residual;
    /// Check rho(T_Y) < 1 and rho(T_X) < 1 before iterating.
    bool precheck = false;
    /// Evaluate the residual every `residual_stride` iterations (and at the last one).
    int residual_stride = 1;
};

/// Throws InvalidArgument on nonpositive alpha, beta, tol, max_iter or stride.
void validate(const SolverConfig& cfg);

struct SolveReport {
    Tensor3 x;
    int iterations = 0;
    /// Residual of X0 first, then one entry per evaluated iteration.
    std::vector<double> residual_history;
    bool converged = false;
    StopReason stop_reason = StopReason::max_iter;
    /// Spectral radii of T_Y and T_X, filled only when the precheck ran.
    std::optional<double> rho_y;
    std::optional<double> rho_x;
    double elapsed_seconds = 0.0;

    double final_residual() const { return residual_history.empty() ? 0.0 : residual_history.back(); }
};

/// ||C - A *_M X *_M B||_F.
double residual(const Tensor3& a, const Tensor3& x, const Tensor3& b, const Tensor3& c, const Transform& t);
/// Residual divided by ||C||_F; falls back to the absolute value when C = O.
double relative_residual(const Tensor3& a, const Tensor3& x, const Tensor3& b, const Tensor3& c,
                         const Transform& t);

/// Two-step iteration for A *_M X *_M B = C with splittings A = F1 - G1, B = F2 - G2:
///   Y_{k+1} = (I - a F1^-1 A) Y_k + a F1^-1 C
///   X_{k+1} = X_k (I - b B F2^-1) + b Y_{k+1} F2^-1
/// starting from X0 (zero by default) and Y0 = X0 *_M B.
SolveReport two_step_solve(const Tensor3& a, const Tensor3& b, const Tensor3& c, const Splitting& s1,
                           const Splitting& s2, const Transform& t, const SolverConfig& cfg,
                           const std::optional<Tensor3>& x0 = std::nullopt);

enum class AorPreset { hoj_tsi, hoj_tspi, hogs_tsi, hogs_tspi, hosor_tspi };

std::string_view to_string(AorPreset p) noexcept;
/// Parses "hoj-tsi", "hoj-tspi", "hogs-tsi", "hogs-tspi", "hosor-tspi".
std::optional<AorPreset> parse_preset(std::string_view name) noexcept;

struct AorSetup {
    AorParams left;
    AorParams right;
};

/// Relaxation parameters for a preset. The "-tsi" presets also pin alpha = beta = 1
/// (see preset_fixes_steps); hosor-tspi uses omega_i = kappa_i on each side.
AorSetup preset_setup(AorPreset p, double omega1 = 1.0, double omega2 = 1.0);
bool preset_fixes_steps(AorPreset p) noexcept;

/// two_step_solve with aor_splitting(A, left) and aor_splitting(B, right).
SolveReport aor_tspi_solve(const Tensor3& a, const Tensor3& b, const Tensor3& c, const Transform& t,
                           const AorSetup& setup, const SolverConfig& cfg,
                           const std::optional<Tensor3>& x0 = std::nullopt);

/// Two-step iteration on P1 *_M A *_M X *_M B *_M P2 = P1 *_M C *_M P2, with s1
/// splitting P1 *_M A and s2 splitting B *_M P2. The residual is measured on the
/// original equation. Y0 = X0 *_M B *_M P2.
SolveReport ptspi_solve(const Tensor3& a, const Tensor3& b, const Tensor3& c, const Tensor3& p1,
                        const Tensor3& p2, const Splitting& s1, const Splitting& s2, const Transform& t,
                        const SolverConfig& cfg, const std::optional<Tensor3>& x0 = std::nullopt);

/// A^-1 *_M C *_M B^-1.
Tensor3 direct_solve(const Tensor3& a, const Tensor3& b, const Tensor3& c, const Transform& t);

}  // namespace mtensor
