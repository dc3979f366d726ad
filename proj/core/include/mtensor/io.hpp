#pragma once

#include <filesystem>
#include <iosfwd>

#include "mtensor/tensor3.hpp"

namespace mtensor::io {

/// MT3D tensor file:
///   "MTEN1\n<m> <n> <p> <flag>\n" then m*n*p little-endian doubles (flag 0)
///   or 2*m*n*p interleaved (re, im) doubles (flag 1), slice-major and
///   row-major within each slice.
Tensor3 read_tensor(std::istream& in);
Tensor3 read_tensor(const std::filesystem::path& path);
/// Writes flag 0 when every imaginary part is exactly zero.
void write_tensor(std::ostream& out, const Tensor3& t);
void write_tensor(const std::filesystem::path& path, const Tensor3& t);

/// MMAT1 transform file: "MMAT1\n<p> <p> 1 <flag>\n" then the p x p matrix
/// row-major with the same encoding as MT3D.
Matrix read_matrix(std::istream& in);
Matrix read_matrix(const std::filesystem::path& path);
void write_matrix(std::ostream& out, const Matrix& m);
void write_matrix(const std::filesystem::path& path, const Matrix& m);

/// Binary PPM (P6) to a height x width x 3 tensor with entries sample / maxval.
Tensor3 read_ppm(std::istream& in);
Tensor3 read_ppm(const std::filesystem::path& path);
/// Writes P6 with maxval 255; real parts clamped to [0, 1] and rounded.
void write_ppm(std::ostream& out, const Tensor3& image);
void write_ppm(const std::filesystem::path& path, const Tensor3& image);

/// Binary PGM (P5) to a height x width x 1 tensor.
Tensor3 read_pgm(std::istream& in);
Tensor3 read_pgm(const std::filesystem::path& path);
/// Writes slice `channel` of the image as P5 with maxval 255.
void write_pgm(std::ostream& out, const Tensor3& image, Index channel = 0);
void write_pgm(const std::filesystem::path& path, const Tensor3& image, Index channel = 0);

}  // namespace mtensor::io
