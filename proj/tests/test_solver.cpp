#include <gtest/gtest.h>

#include "mtensor/error.hpp"
#include "mtensor/random.hpp"
#include "mtensor/reference_problem.hpp"
#include "mtensor/solver.hpp"
#include "mtensor/tensor_ops.hpp"
#include "support/oracles.hpp"

using namespace mtensor;

namespace {

struct System {
    Transform t;
    Tensor3 a, b, c;
};

System sdd_system(std::uint64_t seed, Index m = 5, Index n = 4, Index p = 3) {
    CounterRng rng(seed);
    Transform t = random_transform(p, rng);
    Tensor3 a = random_hat_sdd_tensor(m, t, rng);
    Tensor3 b = random_hat_sdd_tensor(n, t, rng);
    Tensor3 c = random_real_tensor(m, n, p, rng);
    return {std::move(t), std::move(a), std::move(b), std::move(c)};
}

SolverConfig config(double alpha, double beta, double tol, int max_iter = 10000) {
    SolverConfig cfg;
    cfg.alpha = alpha;
    cfg.beta = beta;
    cfg.tol = tol;
    cfg.max_iter = max_iter;
    return cfg;
}

// Hat slices tridiag(-c, 2, -c): the Jacobi iteration has a spectrum symmetric about 0.
Tensor3 tridiagonal_hat(Index n, double c, const Transform& t) {
    HatTensor h(Tensor3(n, n, t.order()));
    for (Index k = 0; k < t.order(); ++k) {
        for (Index i = 0; i < n; ++i) {
            h.slice(k)(i, i) = 2.0;
            if (i > 0) h.slice(k)(i, i - 1) = -c;
            if (i + 1 < n) h.slice(k)(i, i + 1) = -c;
        }
    }
    return from_hat(h, t);
}

}  // namespace

TEST(Residual, Basics) {
    const System s = sdd_system(1);
    const Tensor3 x = direct_solve(s.a, s.b, s.c, s.t);
    EXPECT_LE(residual(s.a, x, s.b, s.c, s.t), 1e-10);
    EXPECT_NEAR(residual(s.a, Tensor3(5, 4, 3), s.b, s.c, s.t), frobenius_norm(s.c), 1e-14);
    EXPECT_NEAR(relative_residual(s.a, Tensor3(5, 4, 3), s.b, s.c, s.t), 1.0, 1e-14);
    CounterRng rng(2);
    const Tensor3 xr = random_real_tensor(5, 4, 3, rng);
    const Tensor3 expected = s.c - oracle::m_product(oracle::m_product(s.a, xr, s.t.matrix()), s.b, s.t.matrix());
    EXPECT_NEAR(residual(s.a, xr, s.b, s.c, s.t), oracle::frobenius(expected), 1e-13 * oracle::frobenius(expected));
    const Tensor3 zero_c(5, 4, 3);
    EXPECT_EQ(relative_residual(s.a, xr, s.b, zero_c, s.t), residual(s.a, xr, s.b, zero_c, s.t));
}

TEST(DirectSolve, IdentityAndReference) {
    const Transform t = reference::transform();
    const Tensor3 eye = identity_tensor(3, t);
    EXPECT_LE(oracle::max_abs_diff(direct_solve(eye, eye, reference::c(), t), reference::c()), 1e-14);
    const Tensor3 x = direct_solve(reference::a(), reference::b(), reference::c(), t);
    EXPECT_LE(residual(reference::a(), x, reference::b(), reference::c(), t), 1e-12);
}

TEST(DirectSolve, RoundTrip) {
    const System s = sdd_system(3, 4, 4, 3);
    const Tensor3 x = direct_solve(s.a, s.b, s.c, s.t);
    EXPECT_LE(oracle::rel_diff(m_product(m_product(s.a, x, s.t), s.b, s.t), s.c), 1e-10);
}

TEST(TwoStep, ExactSplittingConvergesInOneStep) {
    const System s = sdd_system(4);
    const Splitting s1{s.a, Tensor3(5, 5, 3), SplittingClass::regular};
    const Splitting s2{s.b, Tensor3(4, 4, 3), SplittingClass::regular};
    const SolveReport r = two_step_solve(s.a, s.b, s.c, s1, s2, s.t, config(1.0, 1.0, 1e-10));
    EXPECT_TRUE(r.converged);
    EXPECT_EQ(r.iterations, 1);
    EXPECT_LE(oracle::rel_diff(r.x, direct_solve(s.a, s.b, s.c, s.t)), 1e-12);
}

TEST(TwoStep, ReferenceSystem) {
    const Transform t = reference::transform();
    const Tensor3 a = reference::a(), b = reference::b(), c = reference::c();
    SolverConfig cfg = config(0.95, 0.95, 1e-7);
    cfg.stop_rule = StopRule::absolute_residual;  // the table reports unscaled residual norms
    const SolveReport r = two_step_solve(a, b, c, jacobi_splitting(a, t), jacobi_splitting(b, t), t, cfg);
    EXPECT_TRUE(r.converged);
    EXPECT_EQ(r.stop_reason, StopReason::tolerance_met);
    EXPECT_LE(r.final_residual(), 1e-7);
    EXPECT_EQ(r.residual_history.size(), static_cast<std::size_t>(r.iterations) + 1);
    EXPECT_LE(oracle::frobenius(r.x - direct_solve(a, b, c, t)), 2e-6);
}

TEST(TwoStep, RandomDominantSystem) {
    const System s = sdd_system(5);
    const SolveReport r = two_step_solve(s.a, s.b, s.c, jacobi_splitting(s.a, s.t), jacobi_splitting(s.b, s.t), s.t,
                                         config(0.9, 0.9, 1e-13));
    ASSERT_TRUE(r.converged);
    EXPECT_LE(oracle::frobenius(r.x - direct_solve(s.a, s.b, s.c, s.t)), 1e-9);
}

TEST(TwoStep, StationaryStart) {
    const System s = sdd_system(6);
    const Tensor3 x = direct_solve(s.a, s.b, s.c, s.t);
    const SolveReport r = two_step_solve(s.a, s.b, s.c, jacobi_splitting(s.a, s.t), jacobi_splitting(s.b, s.t), s.t,
                                         config(0.9, 0.9, 1e-10), x);
    EXPECT_TRUE(r.converged);
    EXPECT_EQ(r.iterations, 0);
    EXPECT_EQ(r.residual_history.size(), 1u);
}

TEST(TwoStep, Deterministic) {
    const System s = sdd_system(7);
    const auto run = [&] {
        return two_step_solve(s.a, s.b, s.c, jacobi_splitting(s.a, s.t), gauss_seidel_splitting(s.b, s.t), s.t,
                              config(0.8, 0.7, 1e-11));
    };
    const SolveReport r1 = run(), r2 = run();
    EXPECT_EQ(r1.x, r2.x);
    EXPECT_EQ(r1.iterations, r2.iterations);
    EXPECT_EQ(r1.residual_history, r2.residual_history);
}

TEST(TwoStep, MaxIterAndStride) {
    const System s = sdd_system(8);
    SolverConfig cfg = config(0.9, 0.9, 1e-300, 5);
    SolveReport r = two_step_solve(s.a, s.b, s.c, jacobi_splitting(s.a, s.t), jacobi_splitting(s.b, s.t), s.t, cfg);
    EXPECT_FALSE(r.converged);
    EXPECT_EQ(r.stop_reason, StopReason::max_iter);
    EXPECT_EQ(r.iterations, 5);
    EXPECT_EQ(r.residual_history.size(), 6u);

    cfg.max_iter = 10;
    cfg.residual_stride = 4;
    r = two_step_solve(s.a, s.b, s.c, jacobi_splitting(s.a, s.t), jacobi_splitting(s.b, s.t), s.t, cfg);
    EXPECT_EQ(r.iterations, 10);
    EXPECT_EQ(r.residual_history.size(), 4u);  // X0, 4, 8, 10
}

TEST(TwoStep, AbsoluteStopRule) {
    const System s = sdd_system(9);
    SolverConfig cfg = config(0.9, 0.9, 1e-9);
    cfg.stop_rule = StopRule::absolute_residual;
    const SolveReport r =
        two_step_solve(s.a, s.b, s.c, jacobi_splitting(s.a, s.t), jacobi_splitting(s.b, s.t), s.t, cfg);
    ASSERT_TRUE(r.converged);
    EXPECT_LE(residual(s.a, r.x, s.b, s.c, s.t), 1e-9 * (1.0 + 1e-6));
}

TEST(TwoStep, InvalidConfig) {
    const System s = sdd_system(10);
    const Splitting s1 = jacobi_splitting(s.a, s.t), s2 = jacobi_splitting(s.b, s.t);
    EXPECT_THROW(two_step_solve(s.a, s.b, s.c, s1, s2, s.t, config(0.0, 1.0, 1e-8)), InvalidArgument);
    EXPECT_THROW(two_step_solve(s.a, s.b, s.c, s1, s2, s.t, config(1.0, -1.0, 1e-8)), InvalidArgument);
    EXPECT_THROW(two_step_solve(s.a, s.b, s.c, s1, s2, s.t, config(1.0, 1.0, 0.0)), InvalidArgument);
    EXPECT_THROW(two_step_solve(s.a, s.b, s.c, s1, s2, s.t, config(1.0, 1.0, 1e-8, 0)), InvalidArgument);
    EXPECT_THROW(two_step_solve(s.a, s.b, Tensor3(4, 4, 3), s1, s2, s.t, config(1.0, 1.0, 1e-8)),
                 DimensionMismatch);
}

TEST(TwoStep, PrecheckFailsBeyondBound) {
    const Transform t = reference::transform();
    const Tensor3 a = tridiagonal_hat(6, 0.99, t);
    const Splitting s = jacobi_splitting(a, t);
    const double bound = alpha_bound(s, t);
    SolverConfig cfg = config(1.5 * bound, 1.5 * bound, 1e-10);
    cfg.precheck = true;
    const SolveReport r = two_step_solve(a, a, Tensor3(6, 6, 2), s, s, t, cfg);
    EXPECT_EQ(r.stop_reason, StopReason::precheck_failed);
    EXPECT_FALSE(r.converged);
    EXPECT_EQ(r.iterations, 0);
    ASSERT_TRUE(r.rho_y.has_value());
    EXPECT_GE(*r.rho_y, 1.0);
}

TEST(TwoStep, PrecheckPassesInsideBound) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const System s = sdd_system(100 + seed);
        CounterRng rng(seed);
        const Splitting s1 = jacobi_splitting(s.a, s.t), s2 = gauss_seidel_splitting(s.b, s.t);
        SolverConfig cfg = config(rng.uniform(0.01, 0.99) * alpha_bound(s1, s.t),
                                  rng.uniform(0.01, 0.99) * alpha_bound(s2, s.t), 1e-10, 100000);
        cfg.precheck = true;
        const SolveReport r = two_step_solve(s.a, s.b, s.c, s1, s2, s.t, cfg);
        EXPECT_NE(r.stop_reason, StopReason::precheck_failed);
        EXPECT_LT(*r.rho_y, 1.0);
        EXPECT_LT(*r.rho_x, 1.0);
        EXPECT_TRUE(r.converged);
    }
}

TEST(TwoStep, ConvergenceWheneverRadiiBelowOne) {
    int counted = 0;
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const System s = sdd_system(200 + seed, 4, 3, 2);
        SolverConfig cfg = config(0.9, 0.9, 1e-10, 100000);
        cfg.precheck = true;
        const SolveReport r =
            two_step_solve(s.a, s.b, s.c, jacobi_splitting(s.a, s.t), jacobi_splitting(s.b, s.t), s.t, cfg);
        if (r.stop_reason == StopReason::precheck_failed) continue;
        ++counted;
        EXPECT_TRUE(r.converged) << "seed " << seed;
        EXPECT_LE(r.final_residual(), 1e-10);
    }
    EXPECT_GE(counted, 20);
}

TEST(AorTspi, GaussSeidelEqualsTwoStep) {
    const System s = sdd_system(11);
    const SolverConfig cfg = config(1.0, 1.0, 1e-12);
    const SolveReport r1 = aor_tspi_solve(s.a, s.b, s.c, s.t, preset_setup(AorPreset::hogs_tsi), cfg);
    const SolveReport r2 = two_step_solve(s.a, s.b, s.c, gauss_seidel_splitting(s.a, s.t),
                                          gauss_seidel_splitting(s.b, s.t), s.t, cfg);
    EXPECT_EQ(r1.iterations, r2.iterations);
    EXPECT_LE(oracle::max_abs_diff(r1.x, r2.x), 1e-14);
}

TEST(AorTspi, HojTsiConvergesMonotonically) {
    const System s = sdd_system(12);
    const SolveReport r = aor_tspi_solve(s.a, s.b, s.c, s.t, preset_setup(AorPreset::hoj_tsi), config(1.0, 1.0, 1e-12));
    ASSERT_TRUE(r.converged);
    EXPECT_LE(oracle::frobenius(r.x - direct_solve(s.a, s.b, s.c, s.t)), 1e-9);
    const auto& h = r.residual_history;
    const std::size_t transient = h.size() / 4;
    for (std::size_t i = transient + 1; i < h.size(); ++i) EXPECT_LE(h[i], h[i - 1] * (1.0 + 1e-9)) << i;
}

TEST(AorTspi, GaussSeidelNeedsNoMoreIterationsThanJacobi) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const System s = sdd_system(300 + seed, 8, 8, 3);
        const SolverConfig cfg = config(0.9, 0.9, 1e-10);
        const SolveReport gs = aor_tspi_solve(s.a, s.b, s.c, s.t, preset_setup(AorPreset::hogs_tspi), cfg);
        const SolveReport j = aor_tspi_solve(s.a, s.b, s.c, s.t, preset_setup(AorPreset::hoj_tspi), cfg);
        ASSERT_TRUE(gs.converged && j.converged);
        EXPECT_LE(gs.iterations, j.iterations) << "seed " << seed;
    }
}

TEST(AorTspi, SorPreset) {
    const System s = sdd_system(13);
    const AorSetup setup = preset_setup(AorPreset::hosor_tspi, 1.1, 0.9);
    EXPECT_EQ(setup.left.omega, 1.1);
    EXPECT_EQ(setup.left.kappa, 1.1);
    EXPECT_EQ(setup.right.omega, 0.9);
    const SolveReport r = aor_tspi_solve(s.a, s.b, s.c, s.t, setup, config(0.9, 0.9, 1e-10));
    EXPECT_TRUE(r.converged);
}

TEST(AorTspi, PresetNames) {
    for (const char* name : {"hoj-tsi", "hoj-tspi", "hogs-tsi", "hogs-tspi", "hosor-tspi"}) {
        const auto p = parse_preset(name);
        ASSERT_TRUE(p.has_value()) << name;
        EXPECT_EQ(to_string(*p), name);
    }
    EXPECT_FALSE(parse_preset("sor").has_value());
    EXPECT_TRUE(preset_fixes_steps(AorPreset::hoj_tsi));
    EXPECT_FALSE(preset_fixes_steps(AorPreset::hogs_tspi));
}

TEST(Ptspi, TrivialPreconditionerMatchesTwoStep) {
    const System s = sdd_system(14);
    const Tensor3 p1 = identity_tensor(5, s.t), p2 = identity_tensor(4, s.t);
    const Splitting s1 = jacobi_splitting(s.a, s.t), s2 = jacobi_splitting(s.b, s.t);
    const SolverConfig cfg = config(0.9, 0.8, 1e-11);
    const SolveReport r1 = ptspi_solve(s.a, s.b, s.c, p1, p2, s1, s2, s.t, cfg);
    const SolveReport r2 = two_step_solve(s.a, s.b, s.c, s1, s2, s.t, cfg);
    EXPECT_EQ(r1.iterations, r2.iterations);
    EXPECT_LE(oracle::max_abs_diff(r1.x, r2.x), 1e-14);
    for (std::size_t i = 0; i < r1.residual_history.size(); ++i) {
        EXPECT_NEAR(r1.residual_history[i], r2.residual_history[i], 1e-14);
    }
}

TEST(Ptspi, ReferenceSystemNeedsFewerIterations) {
    const Transform t = reference::transform();
    const Tensor3 a = reference::a(), b = reference::b(), c = reference::c(), p = reference::p();
    SolverConfig cfg = config(0.95, 0.95, 1e-7);
    cfg.stop_rule = StopRule::absolute_residual;
    const SolveReport plain = two_step_solve(a, b, c, jacobi_splitting(a, t), jacobi_splitting(b, t), t, cfg);
    const SolveReport pre = ptspi_solve(a, b, c, p, p, jacobi_splitting(m_product(p, a, t), t),
                                        jacobi_splitting(m_product(b, p, t), t), t, cfg);
    ASSERT_TRUE(plain.converged && pre.converged);
    EXPECT_LT(pre.iterations, plain.iterations);
    EXPECT_LE(oracle::frobenius(pre.x - direct_solve(a, b, c, t)), 2e-6);
    EXPECT_LE(residual(a, pre.x, b, c, t), 1e-7);
}

TEST(Ptspi, ComparisonTheoremOnConstructedInstances) {
    // Hat slices sI - N with N >= 0; P = I + (strictly lower part of N)/s on the
    // left and its transpose-pattern counterpart on the right.
    int counted = 0;
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        CounterRng rng(400 + seed);
        const Index n = 5;
        const Transform t = Transform::identity(2);
        HatTensor ah(Tensor3(n, n, 2)), ph(Tensor3(n, n, 2)), qh(Tensor3(n, n, 2));
        for (Index k = 0; k < 2; ++k) {
            Matrix nk = random_real_matrix(n, n, rng, 0.0, 1.0);
            nk.diagonal().setZero();
            const double s = 1.3 * oracle::max_abs_eigenvalue(nk);
            ah.slice(k) = s * Matrix::Identity(n, n) - nk;
            ph.slice(k) = Matrix::Identity(n, n) + Matrix(nk.triangularView<Eigen::StrictlyLower>()) / s;
            qh.slice(k) = Matrix::Identity(n, n) + Matrix(nk.triangularView<Eigen::StrictlyUpper>()) / s;
        }
        const Tensor3 a = from_hat(ah, t), p1 = from_hat(ph, t), p2 = from_hat(qh, t);
        const Tensor3 c = random_real_tensor(n, n, 2, rng);
        const Splitting s1 = jacobi_splitting(a, t), s2 = jacobi_splitting(a, t);
        const Splitting sp1 = jacobi_splitting(m_product(p1, a, t), t);
        const Splitting sp2 = jacobi_splitting(m_product(a, p2, t), t);
        if (!(convergence_radius(sp1, t) < convergence_radius(s1, t)) ||
            !(convergence_radius(sp2, t) < convergence_radius(s2, t))) {
            continue;
        }
        ++counted;
        const SolverConfig cfg = config(0.9, 0.9, 1e-10, 100000);
        const SolveReport plain = two_step_solve(a, a, c, s1, s2, t, cfg);
        const SolveReport pre = ptspi_solve(a, a, c, p1, p2, sp1, sp2, t, cfg);
        ASSERT_TRUE(plain.converged && pre.converged);
        EXPECT_LE(pre.iterations, plain.iterations) << "seed " << seed;
    }
    EXPECT_GE(counted, 8);
}
