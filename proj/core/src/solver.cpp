#include "mtensor/solver.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include "mtensor/error.hpp"
#include "mtensor/tensor_ops.hpp"

namespace mtensor {

namespace {

using Slices = std::vector<Matrix>;

Slices hat_slices(const Tensor3& a, const Transform& t) {
    const HatTensor h = to_hat(a, t);
    Slices out(static_cast<std::size_t>(a.depth()));
    for (Index k = 0; k < a.depth(); ++k) out[static_cast<std::size_t>(k)] = h.slice(k);
    return out;
}

Slices hat_slices(const HatTensor& h) {
    Slices out(static_cast<std::size_t>(h.depth()));
    for (Index k = 0; k < h.depth(); ++k) out[static_cast<std::size_t>(k)] = h.slice(k);
    return out;
}

Tensor3 from_slices_hat(const Slices& s, const Transform& t) {
    return from_hat(HatTensor(Tensor3::from_slices(std::span<const Matrix>(s))), t);
}

double slices_radius(const Slices& s) {
    return spectral_radius(HatTensor(Tensor3::from_slices(std::span<const Matrix>(s))));
}

// Precomputed hat-domain quantities of one two-step run.
struct Engine {
    Slices ty;   // I - alpha F1^-1 A_op
    Slices cy;   // alpha F1^-1 C_op
    Slices tx;   // I - beta B_op F2^-1
    Slices wx;   // beta F2^-1
    Slices a;    // original A, for the residual
    Slices b;    // original B
    Slices c;    // original C
    Matrix m_inv_t;
    double c_norm = 0.0;

    double residual_of(const Slices& x) const {
        const Index rows = c.front().rows();
        const Index cols = c.front().cols();
        const Index p = static_cast<Index>(c.size());
        Matrix stacked(rows * cols, p);
        for (Index k = 0; k < p; ++k) {
            const auto ku = static_cast<std::size_t>(k);
            Matrix r = c[ku] - a[ku] * x[ku] * b[ku];
            stacked.col(k) = Eigen::Map<const Eigen::VectorXcd>(r.data(), rows * cols);
        }
        return (stacked * m_inv_t).norm();
    }
};

void require_system(const Tensor3& a, const Tensor3& b, const Tensor3& c, const Transform& t, const char* op) {
    if (!a.is_square() || !b.is_square()) {
        throw DimensionMismatch(std::string(op) + ": A and B must be square");
    }
    if (c.rows() != a.rows() || c.cols() != b.rows() || a.depth() != b.depth() || c.depth() != a.depth()) {
        throw DimensionMismatch(std::string(op) + ": C must be m x n x p for A m x m x p and B n x n x p");
    }
    if (a.depth() != t.order()) throw DimensionMismatch(std::string(op) + ": transform order mismatch");
}

SolveReport run(const Tensor3& a, const Tensor3& b, const Tensor3& c, const Tensor3& a_op, const Tensor3& b_op,
                const Tensor3& c_op, const Splitting& s1, const Splitting& s2, const Transform& t,
                const SolverConfig& cfg, const std::optional<Tensor3>& x0) {
    validate(cfg);
    const auto start = std::chrono::steady_clock::now();
    if (!same_shape(s1.f, a_op) || !same_shape(s2.f, b_op)) {
        throw DimensionMismatch("two-step solve: splitting shapes do not match the operators");
    }
    if (x0 && !same_shape(*x0, c)) throw DimensionMismatch("two-step solve: X0 must have the shape of C");

    const Index p = a.depth();
    const Index m = a.rows();
    const Index n = b.rows();
    const Slices f1_inv = hat_slices(inverse(to_hat(s1.f, t)));
    const Slices f2_inv = hat_slices(inverse(to_hat(s2.f, t)));
    const Slices a_op_h = hat_slices(a_op, t);
    const Slices b_op_h = hat_slices(b_op, t);
    const Slices c_op_h = hat_slices(c_op, t);

    Engine e;
    e.a = hat_slices(a, t);
    e.b = hat_slices(b, t);
    e.c = hat_slices(c, t);
    e.m_inv_t = t.inverse().transpose();
    e.c_norm = frobenius_norm(c);
    for (Index k = 0; k < p; ++k) {
        const auto ku = static_cast<std::size_t>(k);
        e.ty.push_back(Matrix::Identity(m, m) - cfg.alpha * f1_inv[ku] * a_op_h[ku]);
        e.cy.push_back(cfg.alpha * f1_inv[ku] * c_op_h[ku]);
        e.tx.push_back(Matrix::Identity(n, n) - cfg.beta * b_op_h[ku] * f2_inv[ku]);
        e.wx.push_back(cfg.beta * f2_inv[ku]);
    }

    SolveReport report;
    if (cfg.precheck) {
        report.rho_y = slices_radius(e.ty);
        report.rho_x = slices_radius(e.tx);
        if (!(*report.rho_y < 1.0) || !(*report.rho_x < 1.0)) {
            report.x = x0 ? *x0 : Tensor3(m, n, p);
            report.stop_reason = StopReason::precheck_failed;
            report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            return report;
        }
    }

    const double scale = (cfg.stop_rule == StopRule::relative_residual && e.c_norm > 0.0) ? e.c_norm : 1.0;
    Slices x = x0 ? hat_slices(*x0, t) : Slices(static_cast<std::size_t>(p), Matrix::Zero(m, n));
    Slices y(static_cast<std::size_t>(p));
    for (std::size_t k = 0; k < y.size(); ++k) y[k] = x[k] * b_op_h[k];

    double r = e.residual_of(x) / scale;
    report.residual_history.push_back(r);
    int it = 0;
    bool done = r <= cfg.tol;
    while (!done && it < cfg.max_iter) {
        for (std::size_t k = 0; k < y.size(); ++k) {
            y[k] = e.ty[k] * y[k] + e.cy[k];
            x[k] = x[k] * e.tx[k] + y[k] * e.wx[k];
        }
        ++it;
        if (it % cfg.residual_stride == 0 || it == cfg.max_iter) {
            r = e.residual_of(x) / scale;
            report.residual_history.push_back(r);
            done = r <= cfg.tol;
        }
    }

    report.x = from_slices_hat(x, t);
    report.iterations = it;
    report.converged = done;
    report.stop_reason = done ? StopReason::tolerance_met : StopReason::max_iter;
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace

std::string_view to_string(StopRule r) noexcept {
    return r == StopRule::relative_residual ? "relative_residual" : "absolute_residual";
}

std::string_view to_string(StopReason r) noexcept {
    switch (r) {
        case StopReason::tolerance_met: return "tolerance_met";
        case StopReason::max_iter: return "max_iter";
        case StopReason::precheck_failed: return "precheck_failed";
    }
    return "max_iter";
}

void validate(const SolverConfig& cfg) {
    if (!(cfg.alpha > 0.0) || !std::isfinite(cfg.alpha)) throw InvalidArgument("alpha must be positive");
    if (!(cfg.beta > 0.0) || !std::isfinite(cfg.beta)) throw InvalidArgument("beta must be positive");
    if (!(cfg.tol > 0.0)) throw InvalidArgument("tol must be positive");
    if (cfg.max_iter < 1) throw InvalidArgument("max_iter must be at least 1");
    if (cfg.residual_stride < 1) throw InvalidArgument("residual_stride must be at least 1");
}

double residual(const Tensor3& a, const Tensor3& x, const Tensor3& b, const Tensor3& c, const Transform& t) {
    return frobenius_norm(c - m_product(m_product(a, x, t), b, t));
}

double relative_residual(const Tensor3& a, const Tensor3& x, const Tensor3& b, const Tensor3& c,
                         const Transform& t) {
    const double r = residual(a, x, b, c, t);
    const double cn = frobenius_norm(c);
    return cn > 0.0 ? r / cn : r;
}

SolveReport two_step_solve(const Tensor3& a, const Tensor3& b, const Tensor3& c, const Splitting& s1,
                           const Splitting& s2, const Transform& t, const SolverConfig& cfg,
                           const std::optional<Tensor3>& x0) {
    require_system(a, b, c, t, "two_step_solve");
    return run(a, b, c, a, b, c, s1, s2, t, cfg, x0);
}

std::string_view to_string(AorPreset p) noexcept {
    switch (p) {
        case AorPreset::hoj_tsi: return "hoj-tsi";
        case AorPreset::hoj_tspi: return "hoj-tspi";
        case AorPreset::hogs_tsi: return "hogs-tsi";
        case AorPreset::hogs_tspi: return "hogs-tspi";
        case AorPreset::hosor_tspi: return "hosor-tspi";
    }
    return "hoj-tspi";
}

std::optional<AorPreset> parse_preset(std::string_view name) noexcept {
    for (AorPreset p : {AorPreset::hoj_tsi, AorPreset::hoj_tspi, AorPreset::hogs_tsi, AorPreset::hogs_tspi,
                        AorPreset::hosor_tspi}) {
        if (to_string(p) == name) return p;
    }
    return std::nullopt;
}

AorSetup preset_setup(AorPreset p, double omega1, double omega2) {
    switch (p) {
        case AorPreset::hoj_tsi:
        case AorPreset::hoj_tspi: return {AorParams::jacobi(), AorParams::jacobi()};
        case AorPreset::hogs_tsi:
        case AorPreset::hogs_tspi: return {AorParams::gauss_seidel(), AorParams::gauss_seidel()};
        case AorPreset::hosor_tspi: return {AorParams::sor(omega1), AorParams::sor(omega2)};
    }
    return {};
}

bool preset_fixes_steps(AorPreset p) noexcept { return p == AorPreset::hoj_tsi || p == AorPreset::hogs_tsi; }

SolveReport aor_tspi_solve(const Tensor3& a, const Tensor3& b, const Tensor3& c, const Transform& t,
                           const AorSetup& setup, const SolverConfig& cfg, const std::optional<Tensor3>& x0) {
    require_system(a, b, c, t, "aor_tspi_solve");
    const Splitting s1 = aor_splitting(a, setup.left, t);
    const Splitting s2 = aor_splitting(b, setup.right, t);
    return run(a, b, c, a, b, c, s1, s2, t, cfg, x0);
}

SolveReport ptspi_solve(const Tensor3& a, const Tensor3& b, const Tensor3& c, const Tensor3& p1,
                        const Tensor3& p2, const Splitting& s1, const Splitting& s2, const Transform& t,
                        const SolverConfig& cfg, const std::optional<Tensor3>& x0) {
    require_system(a, b, c, t, "ptspi_solve");
    if (!p1.is_square() || p1.rows() != a.rows() || p1.depth() != a.depth()) {
        throw DimensionMismatch("ptspi_solve: P1 must be m x m x p");
    }
    if (!p2.is_square() || p2.rows() != b.rows() || p2.depth() != b.depth()) {
        throw DimensionMismatch("ptspi_solve: P2 must be n x n x p");
    }
    const Tensor3 a_op = m_product(p1, a, t);
    const Tensor3 b_op = m_product(b, p2, t);
    const Tensor3 c_op = m_product(m_product(p1, c, t), p2, t);
    return run(a, b, c, a_op, b_op, c_op, s1, s2, t, cfg, x0);
}

Tensor3 direct_solve(const Tensor3& a, const Tensor3& b, const Tensor3& c, const Transform& t) {
    require_system(a, b, c, t, "direct_solve");
    const HatTensor x = face_product(face_product(inverse(to_hat(a, t)), to_hat(c, t)), inverse(to_hat(b, t)));
    return from_hat(x, t);
}

}  // namespace mtensor
