#include "mtensor/tensor3.hpp"

#include <algorithm>
#include <string>

#include "mtensor/error.hpp"

namespace mtensor {

Tensor3::Tensor3(Index m, Index n, Index p) : m_(m), n_(n), p_(p) {
    if (m <= 0 || n <= 0 || p <= 0) {
        throw InvalidArgument("tensor dimensions must be positive, got " + std::to_string(m) + "x" +
                              std::to_string(n) + "x" + std::to_string(p));
    }
    data_.assign(static_cast<std::size_t>(m * n * p), Complex(0.0));
}

Tensor3 Tensor3::from_slices(std::span<const Matrix> slices) {
    if (slices.empty()) throw InvalidArgument("from_slices needs at least one slice");
    const Index m = slices.front().rows();
    const Index n = slices.front().cols();
    Tensor3 t(m, n, static_cast<Index>(slices.size()));
    for (Index k = 0; k < t.depth(); ++k) {
        const auto& s = slices[static_cast<std::size_t>(k)];
        if (s.rows() != m || s.cols() != n) throw DimensionMismatch("from_slices: slices differ in shape");
        t.slice(k) = s;
    }
    return t;
}

Tensor3 Tensor3::from_slices(std::initializer_list<Matrix> slices) {
    return from_slices(std::span<const Matrix>(slices.begin(), slices.size()));
}

Tensor3 Tensor3::from_real_slices(std::initializer_list<RealMatrix> slices) {
    std::vector<Matrix> complex_slices;
    complex_slices.reserve(slices.size());
    for (const auto& s : slices) complex_slices.emplace_back(s.cast<Complex>());
    return from_slices(complex_slices);
}

bool Tensor3::is_real(double tol) const noexcept {
    return std::all_of(data_.begin(), data_.end(), [tol](const Complex& z) { return std::abs(z.imag()) <= tol; });
}

void Tensor3::require_same_shape(const Tensor3& other, const char* op) const {
    if (!same_shape(*this, other)) {
        throw DimensionMismatch(std::string(op) + ": shapes differ");
    }
}

Tensor3& Tensor3::operator+=(const Tensor3& other) {
    require_same_shape(other, "operator+");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& other) {
    require_same_shape(other, "operator-");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

Tensor3& Tensor3::operator*=(Complex s) noexcept {
    for (auto& z : data_) z *= s;
    return *this;
}

bool same_shape(const Tensor3& a, const Tensor3& b) noexcept {
    return a.rows() == b.rows() && a.cols() == b.cols() && a.depth() == b.depth();
}

}  // namespace mtensor
