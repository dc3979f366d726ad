#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "mtensor/deblur.hpp"
#include "mtensor/error.hpp"
#include "mtensor/tensor_ops.hpp"
#include "support/oracles.hpp"

using namespace mtensor;

namespace {

Tensor3 blurred(const Tensor3& x, const BlurPair& op, const Transform& t) {
    return m_product(m_product(op.a, x, t), op.b, t);
}

}  // namespace

TEST(BlurMatrix, GaussianEntries) {
    const Matrix g = blur_matrix(64, 4.0, 30);
    EXPECT_NEAR(g(0, 0).real(), 0.0997356, 5e-8);
    EXPECT_NEAR(g(10, 10).real(), 1.0 / (4.0 * std::sqrt(2.0 * std::numbers::pi)), 1e-15);
    EXPECT_NEAR(g(10, 13).real(), std::exp(-9.0 / 32.0) / (4.0 * std::sqrt(2.0 * std::numbers::pi)), 1e-15);
    for (Index i = 0; i < 64; ++i) {
        for (Index j = 0; j < 64; ++j) {
            EXPECT_EQ(g(i, j), g(j, i));
            EXPECT_EQ(g(i, j).imag(), 0.0);
            if (std::abs(i - j) <= 30) {
                EXPECT_GT(g(i, j).real(), 0.0);
            } else {
                EXPECT_EQ(g(i, j), Complex(0.0));
            }
        }
    }
}

TEST(BlurMatrix, ZeroBandwidthIsDiagonal) {
    const Matrix g = blur_matrix(8, 2.0, 0);
    EXPECT_TRUE(g.isDiagonal(0.0));
    EXPECT_NEAR(g(3, 3).real(), 1.0 / (2.0 * std::sqrt(2.0 * std::numbers::pi)), 1e-15);
}

TEST(BlurModel, Validation) {
    BlurModel m;
    EXPECT_NO_THROW(validate(m));
    m.sigma = 0.0;
    EXPECT_THROW(validate(m), InvalidArgument);
    m = BlurModel{};
    m.size = 0;
    EXPECT_THROW(validate(m), InvalidArgument);
    m = BlurModel{};
    m.bandwidth = -1;
    EXPECT_THROW(validate(m), InvalidArgument);
    m = BlurModel{};
    m.deltas[1] = std::nan("");
    EXPECT_THROW(validate(m), InvalidArgument);
    m = BlurModel{};
    m.size = 16;
    m.bandwidth = 40;
    EXPECT_EQ(m.effective_bandwidth(), 15);
}

TEST(BlurModel, DeltaWarning) {
    BlurModel m;
    EXPECT_TRUE(delta_warning(m).has_value());
    m.deltas = {0.5, 0.25, 0.25};
    EXPECT_FALSE(delta_warning(m).has_value());
}

TEST(BlurMode, Parse) {
    EXPECT_EQ(parse_blur_mode("one_sided"), BlurMode::one_sided);
    EXPECT_EQ(parse_blur_mode("one-sided"), BlurMode::one_sided);
    EXPECT_EQ(parse_blur_mode("two_sided"), BlurMode::two_sided);
    EXPECT_FALSE(parse_blur_mode("both").has_value());
    EXPECT_EQ(to_string(BlurMode::two_sided), "two_sided");
}

TEST(BlurPair, Slices) {
    const Transform t = Transform::identity(3);
    BlurModel m;
    m.size = 16;
    m.bandwidth = 5;
    m.deltas = {1.0, 0.0, 0.0};
    const BlurPair one = build_blur_pair(m, 12, BlurMode::one_sided, t);
    const Matrix g = blur_matrix(16, m.sigma, 5);
    EXPECT_EQ(oracle::slice(one.a, 0), g);
    EXPECT_TRUE(oracle::slice(one.a, 1).isZero(0.0));
    EXPECT_TRUE(oracle::slice(one.a, 2).isZero(0.0));
    EXPECT_EQ(one.b, identity_tensor(12, t));

    m.deltas = {0.75, 0.25, 0.25};
    const BlurPair two = build_blur_pair(m, 12, BlurMode::two_sided, t);
    EXPECT_LE((oracle::slice(two.a, 1) - 0.25 * g).cwiseAbs().maxCoeff(), 1e-16);
    const Matrix gn = blur_matrix(12, m.sigma, 5);
    EXPECT_LE((oracle::slice(two.b, 0) - 0.75 * gn.transpose()).cwiseAbs().maxCoeff(), 1e-16);
    EXPECT_TRUE(oracle::slice(two.b, 1).isZero(0.0));
    EXPECT_TRUE(oracle::slice(two.b, 2).isZero(0.0));

    EXPECT_THROW(build_blur_pair(m, 12, BlurMode::one_sided, Transform::identity(2)), DimensionMismatch);
}

TEST(Observation, NoiselessIsTheBlurredProduct) {
    const Transform t = Transform::dft(3);
    BlurModel m;
    m.size = 16;
    const BlurPair op = build_blur_pair(m, 16, BlurMode::two_sided, t);
    const Tensor3 x = synthetic_image(16);
    EXPECT_EQ(synthesize_observation(x, op.a, op.b, t, 0.0, 5), blurred(x, op, t));
    EXPECT_THROW(synthesize_observation(x, op.a, op.b, t, -1.0, 5), InvalidArgument);
}

TEST(Observation, DeterministicPerSeed) {
    const Transform t = Transform::identity(3);
    BlurModel m;
    m.size = 16;
    const BlurPair op = build_blur_pair(m, 16, BlurMode::one_sided, t);
    const Tensor3 x = synthetic_image(16);
    const Tensor3 c1 = synthesize_observation(x, op.a, op.b, t, 1e-3, 42);
    EXPECT_EQ(c1, synthesize_observation(x, op.a, op.b, t, 1e-3, 42));
    EXPECT_NE(c1, synthesize_observation(x, op.a, op.b, t, 1e-3, 43));
}

TEST(Observation, NoiseVariance) {
    const Transform t = Transform::identity(3);
    const Tensor3 zero(128, 128, 3);
    const Tensor3 eye = identity_tensor(128, t);
    const Tensor3 n = synthesize_observation(zero, eye, eye, t, 1e-3, 7);
    double sum = 0.0, sq = 0.0;
    for (const auto& z : n.data()) {
        EXPECT_EQ(z.imag(), 0.0);
        sum += z.real();
        sq += z.real() * z.real();
    }
    const double count = static_cast<double>(n.data().size());
    const double mean = sum / count;
    const double var = sq / count - mean * mean;
    EXPECT_NEAR(var, 1e-3, 0.05e-3);
    EXPECT_NEAR(mean, 0.0, 5.0 * std::sqrt(1e-3 / count));
}

TEST(Reconstruct, NearExactInversion) {
    const Transform t = Transform::identity(3);
    BlurModel m;
    m.size = 16;
    m.sigma = 0.7;
    m.bandwidth = 2;
    const BlurPair op = build_blur_pair(m, 16, BlurMode::one_sided, t);
    const Tensor3 x = synthetic_image(16);
    const Tensor3 c = synthesize_observation(x, op.a, op.b, t, 0.0, 1);
    const Reconstruction r = reconstruct(c, op.a, op.b, t, {1e-10, 1e-10});
    EXPECT_LE(oracle::rel_diff(r.image, x), 1e-4);
    EXPECT_LE(r.max_imag, 1e-8);
}

TEST(Reconstruct, ImprovesOnTheObservation) {
    const Transform t = Transform::identity(3);
    const BlurModel m;
    const BlurPair op = build_blur_pair(m, 64, BlurMode::one_sided, t);
    const Tensor3 x = synthetic_image(64);
    const Tensor3 c = synthesize_observation(x, op.a, op.b, t, 1e-3, 2024);
    const Reconstruction r = reconstruct(c, op.a, op.b, t, {1e-2, 1e-2});
    EXPECT_GT(psnr(r.image, x), psnr(clamp_unit(c), x));
    for (const auto& z : r.image.data()) {
        EXPECT_GE(z.real(), 0.0);
        EXPECT_LE(z.real(), 1.0);
        EXPECT_EQ(z.imag(), 0.0);
    }
}

TEST(Reconstruct, ImprovementWithTunedRegularization) {
    const Transform t = Transform::identity(3);
    BlurModel m;
    m.size = 32;
    const BlurPair op = build_blur_pair(m, 32, BlurMode::one_sided, t);
    const Tensor3 x = synthetic_image(32);
    const double grid[] = {1e-4, 3e-4, 1e-3, 3e-3, 1e-2, 3e-2, 1e-1, 3e-1, 1.0};
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        for (double noise : {1e-4, 1e-3}) {
            const Tensor3 c = synthesize_observation(x, op.a, op.b, t, noise, seed);
            double best = -1.0;
            for (double reg : grid) best = std::max(best, psnr(reconstruct(c, op.a, op.b, t, {reg, reg}).image, x));
            EXPECT_GT(best, psnr(clamp_unit(c), x)) << "seed " << seed << " noise " << noise;
        }
    }
}

TEST(Reconstruct, HeavyRegularizationShrinksToZero) {
    const Transform t = Transform::identity(3);
    BlurModel m;
    m.size = 16;
    const BlurPair op = build_blur_pair(m, 16, BlurMode::two_sided, t);
    const Tensor3 x = synthetic_image(16);
    const Tensor3 c = synthesize_observation(x, op.a, op.b, t, 1e-3, 3);
    const Reconstruction r = reconstruct(c, op.a, op.b, t, {1e6, 1e6});
    EXPECT_LE(oracle::frobenius(r.image), 1e-6);
}

TEST(Reconstruct, IdentityTransformMatchesChannelwiseDense) {
    const Transform t = Transform::identity(3);
    BlurModel m;
    m.size = 24;
    m.bandwidth = 10;
    const BlurPair op = build_blur_pair(m, 20, BlurMode::two_sided, t);
    const Tensor3 x(synthetic_image(24));
    Tensor3 x_true(24, 20, 3);
    for (Index k = 0; k < 3; ++k)
        for (Index i = 0; i < 24; ++i)
            for (Index j = 0; j < 20; ++j) x_true(i, j, k) = x(i, j, k);
    const Tensor3 c = synthesize_observation(x_true, op.a, op.b, t, 1e-3, 9);
    const double lambda = 3e-2, mu = 5e-2;
    const Reconstruction r = reconstruct(c, op.a, op.b, t, {lambda, mu});

    std::vector<Matrix> channels;
    for (Index k = 0; k < 3; ++k) {
        const Matrix a = oracle::slice(op.a, k), b = oracle::slice(op.b, k), ck = oracle::slice(c, k);
        const Matrix ra = Eigen::PartialPivLU<Matrix>(a.adjoint() * a + lambda * Matrix::Identity(24, 24))
                              .solve(a.adjoint() * ck);
        const Matrix rb = Eigen::PartialPivLU<Matrix>(b * b.adjoint() + mu * Matrix::Identity(20, 20))
                              .solve(b * ra.adjoint());
        channels.push_back(rb.adjoint());
    }
    EXPECT_LE(oracle::max_abs_diff(r.image, clamp_unit(oracle::stack(channels))), 1e-8);
}

TEST(Psnr, Cases) {
    const Tensor3 x = synthetic_image(8);
    EXPECT_TRUE(std::isinf(psnr(x, x)));
    Tensor3 y(8, 8, 3);
    Tensor3 z(8, 8, 3);
    for (auto& v : z.data()) v = 0.1;
    EXPECT_NEAR(psnr(y, z), 20.0, 1e-12);
    Tensor3 w = clamp_unit(x + z);
    EXPECT_EQ(psnr(x, w), psnr(w, x));
    EXPECT_THROW(psnr(x, Tensor3(8, 8, 2)), DimensionMismatch);
}

TEST(SyntheticImage, RangeAndShape) {
    const Tensor3 x = synthetic_image(32);
    EXPECT_EQ(x.rows(), 32);
    EXPECT_EQ(x.depth(), 3);
    for (const auto& z : x.data()) {
        EXPECT_GE(z.real(), 0.0);
        EXPECT_LE(z.real(), 1.0);
        EXPECT_EQ(z.imag(), 0.0);
    }
}
