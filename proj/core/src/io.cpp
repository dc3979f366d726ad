#include "mtensor/io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cctype>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "mtensor/error.hpp"

namespace mtensor::io {

namespace {

constexpr Index kMaxEntries = Index{1} << 31;

std::uint64_t to_le(std::uint64_t v) {
    if constexpr (std::endian::native == std::endian::big) {
        std::uint64_t r = 0;
        for (int i = 0; i < 8; ++i) r |= ((v >> (8 * i)) & 0xFFu) << (8 * (7 - i));
        return r;
    } else {
        return v;
    }
}

void put_double(std::ostream& out, double d) {
    const std::uint64_t le = to_le(std::bit_cast<std::uint64_t>(d));
    char buf[8];
    std::memcpy(buf, &le, 8);
    out.write(buf, 8);
}

double get_double(std::istream& in) {
    char buf[8];
    if (!in.read(buf, 8)) throw FormatError("unexpected end of data");
    std::uint64_t le = 0;
    std::memcpy(&le, buf, 8);
    return std::bit_cast<double>(to_le(le));
}

struct Header {
    Index m = 0;
    Index n = 0;
    Index p = 0;
    bool complex = false;
};

Header read_header(std::istream& in, const std::string& magic) {
    std::string line;
    if (!std::getline(in, line) || line != magic) {
        throw FormatError("bad magic: expected '" + magic + "'");
    }
    if (!std::getline(in, line)) throw FormatError("missing dimension line");
    Header h;
    long long m = 0, n = 0, p = 0, flag = -1;
    char extra = 0;
    if (std::sscanf(line.c_str(), "%lld %lld %lld %lld %c", &m, &n, &p, &flag, &extra) != 4) {
        throw FormatError("dimension line must be '<m> <n> <p> <0|1>', got '" + line + "'");
    }
    if (m <= 0 || n <= 0 || p <= 0) throw FormatError("dimensions must be positive");
    if (flag != 0 && flag != 1) throw FormatError("complex flag must be 0 or 1");
    if (m > kMaxEntries / n || m * n > kMaxEntries / p) throw FormatError("tensor too large");
    h.m = m;
    h.n = n;
    h.p = p;
    h.complex = flag == 1;
    return h;
}

void read_payload(std::istream& in, std::span<Complex> dst, bool complex) {
    for (auto& z : dst) {
        const double re = get_double(in);
        z = Complex(re, complex ? get_double(in) : 0.0);
    }
    if (in.peek() != std::char_traits<char>::eof()) throw FormatError("trailing bytes after payload");
}

void write_payload(std::ostream& out, std::span<const Complex> src, bool complex) {
    for (const auto& z : src) {
        put_double(out, z.real());
        if (complex) put_double(out, z.imag());
    }
}

bool has_imag(std::span<const Complex> src) {
    return std::any_of(src.begin(), src.end(), [](const Complex& z) { return z.imag() != 0.0; });
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open '" + path.string() + "' for reading");
    return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot open '" + path.string() + "' for writing");
    return out;
}

template <typename F>
auto with_path(const std::filesystem::path& path, F&& f) {
    try {
        return f();
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

// Netpbm header token, skipping whitespace and '#' comments.
long long pnm_int(std::istream& in) {
    int c = in.get();
    while (true) {
        if (c == '#') {
            while (c != '\n' && c != std::char_traits<char>::eof()) c = in.get();
        } else if (std::isspace(c)) {
            c = in.get();
        } else {
            break;
        }
    }
    if (!std::isdigit(c)) throw FormatError("malformed netpbm header");
    long long v = 0;
    while (std::isdigit(c)) {
        v = v * 10 + (c - '0');
        if (v > (1LL << 30)) throw FormatError("netpbm header value too large");
        c = in.get();
    }
    // Exactly one whitespace byte separates the header from the raster.
    if (!std::isspace(c)) throw FormatError("malformed netpbm header");
    return v;
}

Tensor3 read_pnm(std::istream& in, const char* magic, Index channels) {
    char mg[2] = {0, 0};
    if (!in.read(mg, 2) || mg[0] != magic[0] || mg[1] != magic[1]) {
        throw FormatError(std::string("not a binary ") + (channels == 3 ? "PPM" : "PGM") + " file (expected magic " +
                          magic + ")");
    }
    const long long w = pnm_int(in);
    const long long h = pnm_int(in);
    const long long maxval = pnm_int(in);
    if (w <= 0 || h <= 0) throw FormatError("image dimensions must be positive");
    if (maxval <= 0 || maxval > 255) throw FormatError("only maxval 1..255 is supported");
    const std::size_t count = static_cast<std::size_t>(w * h * channels);
    std::vector<unsigned char> raster(count);
    if (!in.read(reinterpret_cast<char*>(raster.data()), static_cast<std::streamsize>(count))) {
        throw FormatError("truncated raster");
    }
    Tensor3 out(h, w, channels);
    std::size_t idx = 0;
    for (Index i = 0; i < h; ++i) {
        for (Index j = 0; j < w; ++j) {
            for (Index k = 0; k < channels; ++k) {
                out(i, j, k) = static_cast<double>(raster[idx++]) / static_cast<double>(maxval);
            }
        }
    }
    return out;
}

unsigned char to_byte(const Complex& z) {
    return static_cast<unsigned char>(std::lround(std::clamp(z.real(), 0.0, 1.0) * 255.0));
}

}  // namespace

Tensor3 read_tensor(std::istream& in) {
    const Header h = read_header(in, "MTEN1");
    Tensor3 t(h.m, h.n, h.p);
    read_payload(in, t.data(), h.complex);
    return t;
}

Tensor3 read_tensor(const std::filesystem::path& path) {
    return with_path(path, [&] {
        auto in = open_in(path);
        return read_tensor(in);
    });
}

void write_tensor(std::ostream& out, const Tensor3& t) {
    const bool complex = has_imag(t.data());
    out << "MTEN1\n" << t.rows() << ' ' << t.cols() << ' ' << t.depth() << ' ' << (complex ? 1 : 0) << '\n';
    write_payload(out, t.data(), complex);
    if (!out) throw FormatError("write failed");
}

void write_tensor(const std::filesystem::path& path, const Tensor3& t) {
    with_path(path, [&] {
        auto out = open_out(path);
        write_tensor(out, t);
    });
}

Matrix read_matrix(std::istream& in) {
    const Header h = read_header(in, "MMAT1");
    if (h.m != h.n || h.p != 1) throw FormatError("transform header must read '<p> <p> 1 <flag>'");
    Tensor3 t(h.m, h.n, 1);
    read_payload(in, t.data(), h.complex);
    return Matrix(t.slice(0));
}

Matrix read_matrix(const std::filesystem::path& path) {
    return with_path(path, [&] {
        auto in = open_in(path);
        return read_matrix(in);
    });
}

void write_matrix(std::ostream& out, const Matrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0) throw InvalidArgument("write_matrix: matrix must be square");
    Tensor3 t(m.rows(), m.cols(), 1);
    t.slice(0) = m;
    const bool complex = has_imag(t.data());
    out << "MMAT1\n" << m.rows() << ' ' << m.cols() << " 1 " << (complex ? 1 : 0) << '\n';
    write_payload(out, t.data(), complex);
    if (!out) throw FormatError("write failed");
}

void write_matrix(const std::filesystem::path& path, const Matrix& m) {
    with_path(path, [&] {
        auto out = open_out(path);
        write_matrix(out, m);
    });
}

Tensor3 read_ppm(std::istream& in) { return read_pnm(in, "P6", 3); }

Tensor3 read_ppm(const std::filesystem::path& path) {
    return with_path(path, [&] {
        auto in = open_in(path);
        return read_ppm(in);
    });
}

void write_ppm(std::ostream& out, const Tensor3& image) {
    if (image.depth() != 3) throw InvalidArgument("write_ppm: image must have 3 channels");
    out << "P6\n" << image.cols() << ' ' << image.rows() << "\n255\n";
    for (Index i = 0; i < image.rows(); ++i) {
        for (Index j = 0; j < image.cols(); ++j) {
            for (Index k = 0; k < 3; ++k) out.put(static_cast<char>(to_byte(image(i, j, k))));
        }
    }
    if (!out) throw FormatError("write failed");
}

void write_ppm(const std::filesystem::path& path, const Tensor3& image) {
    with_path(path, [&] {
        auto out = open_out(path);
        write_ppm(out, image);
    });
}

Tensor3 read_pgm(std::istream& in) { return read_pnm(in, "P5", 1); }

Tensor3 read_pgm(const std::filesystem::path& path) {
    return with_path(path, [&] {
        auto in = open_in(path);
        return read_pgm(in);
    });
}

void write_pgm(std::ostream& out, const Tensor3& image, Index channel) {
    if (channel < 0 || channel >= image.depth()) throw InvalidArgument("write_pgm: channel out of range");
    out << "P5\n" << image.cols() << ' ' << image.rows() << "\n255\n";
    for (Index i = 0; i < image.rows(); ++i) {
        for (Index j = 0; j < image.cols(); ++j) out.put(static_cast<char>(to_byte(image(i, j, channel))));
    }
    if (!out) throw FormatError("write failed");
}

void write_pgm(const std::filesystem::path& path, const Tensor3& image, Index channel) {
    with_path(path, [&] {
        auto out = open_out(path);
        write_pgm(out, image, channel);
    });
}

}  // namespace mtensor::io
