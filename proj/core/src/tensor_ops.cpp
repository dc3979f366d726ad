#include "mtensor/tensor_ops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>

#include "mtensor/error.hpp"

namespace mtensor {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

std::string shape_str(const Tensor3& a) {
    return std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + "x" + std::to_string(a.depth());
}

void require_product_shapes(const Tensor3& a, const Tensor3& b, const char* op) {
    if (a.cols() != b.rows() || a.depth() != b.depth()) {
        throw DimensionMismatch(std::string(op) + ": cannot multiply " + shape_str(a) + " by " + shape_str(b));
    }
}

void require_square(const Tensor3& a, const char* op) {
    if (!a.is_square()) throw DimensionMismatch(std::string(op) + ": tensor is not square (" + shape_str(a) + ")");
}

void require_order(const Tensor3& a, const Transform& t, const char* op) {
    if (a.depth() != t.order()) {
        throw DimensionMismatch(std::string(op) + ": tensor has " + std::to_string(a.depth()) +
                                " slices, transform has order " + std::to_string(t.order()));
    }
}

Eigen::JacobiSVD<Matrix> slice_svd(const ConstSliceView& s, int options) {
    return Eigen::JacobiSVD<Matrix>(Matrix(s), options);
}

}  // namespace

Tensor3 face_product(const Tensor3& a, const Tensor3& b) {
    require_product_shapes(a, b, "face_product");
    Tensor3 out(a.rows(), b.cols(), a.depth());
    for (Index k = 0; k < a.depth(); ++k) out.slice(k).noalias() = a.slice(k) * b.slice(k);
    return out;
}

HatTensor face_product(const HatTensor& a, const HatTensor& b) {
    return HatTensor(face_product(a.values(), b.values()));
}

Tensor3 m_product(const Tensor3& a, const Tensor3& b, const Transform& t) {
    require_product_shapes(a, b, "m_product");
    require_order(a, t, "m_product");
    return from_hat(face_product(to_hat(a, t), to_hat(b, t)), t);
}

Tensor3 conj_transpose(const Tensor3& a, const Transform& t) {
    require_order(a, t, "conj_transpose");
    const HatTensor h = to_hat(a, t);
    HatTensor out(Tensor3(a.cols(), a.rows(), a.depth()));
    for (Index k = 0; k < a.depth(); ++k) out.slice(k) = h.slice(k).adjoint();
    return from_hat(out, t);
}

Tensor3 identity_tensor(Index m, const Transform& t) {
    HatTensor h(Tensor3(m, m, t.order()));
    for (Index k = 0; k < t.order(); ++k) h.slice(k).setIdentity();
    return from_hat(h, t);
}

Tensor3 zero_tensor(Index m, Index n, Index p) { return Tensor3(m, n, p); }

HatTensor inverse(const HatTensor& a) {
    require_square(a.values(), "inverse");
    HatTensor out(Tensor3(a.rows(), a.cols(), a.depth()));
    for (Index k = 0; k < a.depth(); ++k) {
        Eigen::PartialPivLU<Matrix> lu(Matrix(a.slice(k)));
        const double rcond = lu.rcond();
        if (!(rcond >= 1e3 * kEps)) throw SingularSlice(static_cast<std::size_t>(k));
        out.slice(k) = lu.inverse();
    }
    return out;
}

Tensor3 inverse(const Tensor3& a, const Transform& t) {
    require_order(a, t, "inverse");
    return from_hat(inverse(to_hat(a, t)), t);
}

HatTensor mp_inverse(const HatTensor& a, double noise) {
    HatTensor out(Tensor3(a.cols(), a.rows(), a.depth()));
    const double size_factor = static_cast<double>(std::max(a.rows(), a.cols()));
    for (Index k = 0; k < a.depth(); ++k) {
        const auto svd = slice_svd(a.slice(k), Eigen::ComputeThinU | Eigen::ComputeThinV);
        const auto& sigma = svd.singularValues();
        const double tol = sigma.size() > 0 ? noise * size_factor * kEps * sigma(0) : 0.0;
        Matrix pinv = Matrix::Zero(a.cols(), a.rows());
        for (Index r = 0; r < sigma.size(); ++r) {
            if (sigma(r) > tol) {
                pinv.noalias() += (svd.matrixV().col(r) / sigma(r)) * svd.matrixU().col(r).adjoint();
            }
        }
        out.slice(k) = pinv;
    }
    return out;
}

Tensor3 mp_inverse(const Tensor3& a, const Transform& t) {
    require_order(a, t, "mp_inverse");
    return from_hat(mp_inverse(to_hat(a, t), t.condition()), t);
}

Tensor3 power(const Tensor3& a, int k, const Transform& t) {
    require_square(a, "power");
    require_order(a, t, "power");
    if (k < 0) throw InvalidArgument("power: exponent must be nonnegative");
    const HatTensor h = to_hat(a, t);
    HatTensor out(Tensor3(a.rows(), a.cols(), a.depth()));
    for (Index s = 0; s < a.depth(); ++s) {
        Matrix base = h.slice(s);
        Matrix acc = Matrix::Identity(a.rows(), a.cols());
        for (int e = k; e > 0; e >>= 1) {
            if (e & 1) acc = acc * base;
            if (e > 1) base = base * base;
        }
        out.slice(s) = acc;
    }
    return from_hat(out, t);
}

double tubal_norm(const Tensor3& a, const Transform& t) {
    require_order(a, t, "tubal_norm");
    const HatTensor h = to_hat(a, t);
    double best = 0.0;
    for (Index k = 0; k < a.depth(); ++k) {
        const auto svd = slice_svd(h.slice(k), 0);
        if (svd.singularValues().size() > 0) best = std::max(best, svd.singularValues()(0));
    }
    return best;
}

std::vector<Index> slice_ranks(const Tensor3& a, const Transform& t) {
    require_order(a, t, "slice_ranks");
    const HatTensor h = to_hat(a, t);
    const double size_factor = static_cast<double>(std::max(a.rows(), a.cols()));
    const double noise = t.condition();
    std::vector<Index> ranks;
    ranks.reserve(static_cast<std::size_t>(a.depth()));
    for (Index k = 0; k < a.depth(); ++k) {
        const auto svd = slice_svd(h.slice(k), 0);
        const auto& sigma = svd.singularValues();
        const double tol = sigma.size() > 0 ? noise * size_factor * kEps * sigma(0) : 0.0;
        ranks.push_back((sigma.array() > tol).count());
    }
    return ranks;
}

Index tubal_rank(const Tensor3& a, const Transform& t) {
    const auto ranks = slice_ranks(a, t);
    return *std::max_element(ranks.begin(), ranks.end());
}

double spectral_radius(const HatTensor& a) {
    require_square(a.values(), "spectral_radius");
    double rho = 0.0;
    for (Index k = 0; k < a.depth(); ++k) {
        Eigen::ComplexEigenSolver<Matrix> solver(Matrix(a.slice(k)), /*computeEigenvectors=*/false);
        if (solver.info() != Eigen::Success) {
            throw Error("spectral_radius: eigenvalue iteration did not converge on slice " + std::to_string(k));
        }
        rho = std::max(rho, solver.eigenvalues().cwiseAbs().maxCoeff());
    }
    return rho;
}

double spectral_radius(const Tensor3& a, const Transform& t) {
    require_order(a, t, "spectral_radius");
    return spectral_radius(to_hat(a, t));
}

double frobenius_norm(const Tensor3& a) noexcept {
    double sum = 0.0;
    for (const auto& z : a.data()) sum += std::norm(z);
    return std::sqrt(sum);
}

bool is_nonnegative(const HatTensor& a) noexcept {
    const auto data = a.values().data();
    return std::all_of(data.begin(), data.end(), [](const Complex& z) {
        return z.real() >= -kNonnegRealTol && std::abs(z.imag()) <= kNonnegImagTol;
    });
}

bool is_nonnegative(const Tensor3& a, const Transform& t) {
    require_order(a, t, "is_nonnegative");
    return is_nonnegative(to_hat(a, t));
}

bool is_strictly_diag_dominant(const HatTensor& a) noexcept {
    if (!a.values().is_square()) return false;
    for (Index k = 0; k < a.depth(); ++k) {
        const auto s = a.slice(k);
        for (Index i = 0; i < s.rows(); ++i) {
            const double off = s.row(i).cwiseAbs().sum() - std::abs(s(i, i));
            if (!(std::abs(s(i, i)) > off)) return false;
        }
    }
    return true;
}

bool is_hermitian_positive_definite(const HatTensor& a) {
    if (!a.values().is_square()) return false;
    for (Index k = 0; k < a.depth(); ++k) {
        const Matrix s = a.slice(k);
        const double scale = std::max(1.0, s.cwiseAbs().maxCoeff());
        if ((s - s.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol * scale) return false;
        const Matrix herm = 0.5 * (s + s.adjoint());
        Eigen::LLT<Matrix> llt(herm);
        if (llt.info() != Eigen::Success) return false;
    }
    return true;
}

StructuralPredicates structural_predicates(const Tensor3& a, const Transform& t) {
    require_order(a, t, "structural_predicates");
    const HatTensor h = to_hat(a, t);
    return {is_nonnegative(h), is_strictly_diag_dominant(h), is_hermitian_positive_definite(h)};
}

Tensor3 diagonal_part(const Tensor3& a) {
    require_square(a, "diagonal_part");
    Tensor3 out(a.rows(), a.cols(), a.depth());
    for (Index k = 0; k < a.depth(); ++k) out.slice(k).diagonal() = a.slice(k).diagonal();
    return out;
}

Tensor3 strictly_lower_part(const Tensor3& a) {
    require_square(a, "strictly_lower_part");
    Tensor3 out(a.rows(), a.cols(), a.depth());
    for (Index k = 0; k < a.depth(); ++k) {
        out.slice(k).triangularView<Eigen::StrictlyLower>() = a.slice(k).triangularView<Eigen::StrictlyLower>();
    }
    return out;
}

Tensor3 strictly_upper_part(const Tensor3& a) {
    require_square(a, "strictly_upper_part");
    Tensor3 out(a.rows(), a.cols(), a.depth());
    for (Index k = 0; k < a.depth(); ++k) {
        out.slice(k).triangularView<Eigen::StrictlyUpper>() = a.slice(k).triangularView<Eigen::StrictlyUpper>();
    }
    return out;
}

Tensor3 hconcat(const Tensor3& b, const Tensor3& c) {
    if (b.rows() != c.rows() || b.depth() != c.depth()) {
        throw DimensionMismatch("hconcat: cannot place " + shape_str(b) + " beside " + shape_str(c));
    }
    Tensor3 out(b.rows(), b.cols() + c.cols(), b.depth());
    for (Index k = 0; k < b.depth(); ++k) {
        out.slice(k).leftCols(b.cols()) = b.slice(k);
        out.slice(k).rightCols(c.cols()) = c.slice(k);
    }
    return out;
}

Tensor3 vconcat(const Tensor3& b, const Tensor3& c) {
    if (b.cols() != c.cols() || b.depth() != c.depth()) {
        throw DimensionMismatch("vconcat: cannot stack " + shape_str(b) + " over " + shape_str(c));
    }
    Tensor3 out(b.rows() + c.rows(), b.cols(), b.depth());
    for (Index k = 0; k < b.depth(); ++k) {
        out.slice(k).topRows(b.rows()) = b.slice(k);
        out.slice(k).bottomRows(c.rows()) = c.slice(k);
    }
    return out;
}

Tensor3 block2x2(const Tensor3& b, const Tensor3& c, const Tensor3& d, const Tensor3& e) {
    return vconcat(hconcat(b, c), hconcat(d, e));
}

Tensor3 sub_block(const Tensor3& a, Index row0, Index col0, Index rows, Index cols) {
    if (row0 < 0 || col0 < 0 || rows <= 0 || cols <= 0 || row0 + rows > a.rows() || col0 + cols > a.cols()) {
        throw DimensionMismatch("sub_block: requested block lies outside " + shape_str(a));
    }
    Tensor3 out(rows, cols, a.depth());
    for (Index k = 0; k < a.depth(); ++k) out.slice(k) = a.slice(k).block(row0, col0, rows, cols);
    return out;
}

}  // namespace mtensor
