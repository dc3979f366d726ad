// Writes the reference-problem operands and the synthetic test image used by
// the CLI tests into the given directory.

#include <filesystem>
#include <iostream>

#include "mtensor/deblur.hpp"
#include "mtensor/io.hpp"
#include "mtensor/reference_problem.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: " << argv[0] << " <output-dir>\n";
        return 1;
    }
    namespace ref = mtensor::reference;
    const std::filesystem::path dir = argv[1];
    std::filesystem::create_directories(dir);
    mtensor::io::write_tensor(dir / "A.mt3d", ref::a());
    mtensor::io::write_tensor(dir / "B.mt3d", ref::b());
    mtensor::io::write_tensor(dir / "C.mt3d", ref::c());
    mtensor::io::write_tensor(dir / "P.mt3d", ref::p());
    mtensor::io::write_matrix(dir / "M.mmat", ref::transform().matrix());
    mtensor::io::write_ppm(dir / "synthetic64.ppm", mtensor::synthetic_image(64));
    return 0;
}
