#include <fmt/format.h>

#include "config.hpp"
#include "mtensor/deblur.hpp"
#include "mtensor/error.hpp"
#include "mtensor/io.hpp"
#include "mtensor/tensor_ops.hpp"
#include "mtensor_cli/cli.hpp"

namespace mtensor::cli {

namespace {

struct DeblurSpec {
    BlurModel model;
    BlurMode mode = BlurMode::one_sided;
    double noise_var = 1e-3;
    RegularizationParams reg;
};

DeblurSpec parse_deblur_config(const Json& j) {
    ConfigReader r(j);
    DeblurSpec s;
    if (auto v = r.number("sigma")) {
        if (!(*v > 0.0)) field_error("sigma", "must be positive");
        s.model.sigma = *v;
    }
    if (auto v = r.integer("bandwidth")) {
        if (*v < 0) field_error("bandwidth", "must be nonnegative");
        s.model.bandwidth = static_cast<Index>(*v);
    }
    if (auto v = r.numbers("deltas")) {
        if (v->size() != 3) field_error("deltas", "expected three numbers");
        s.model.deltas = {(*v)[0], (*v)[1], (*v)[2]};
    }
    if (auto v = r.number("noise_var")) {
        if (!(*v >= 0.0)) field_error("noise_var", "must be nonnegative");
        s.noise_var = *v;
    }
    if (auto v = r.number("lambda")) {
        if (!(*v > 0.0)) field_error("lambda", "must be positive");
        s.reg.lambda = *v;
    }
    if (auto v = r.number("mu")) {
        if (!(*v > 0.0)) field_error("mu", "must be positive");
        s.reg.mu = *v;
    }
    if (auto v = r.string("mode")) {
        const auto mode = parse_blur_mode(*v);
        if (!mode) field_error("mode", "expected one_sided or two_sided, got '" + *v + "'");
        s.mode = *mode;
    }
    r.finish();
    return s;
}

double relative_error(const Tensor3& x, const Tensor3& ref) { return frobenius_norm(x - ref) / frobenius_norm(ref); }

Json finite_or_inf(double v) {
    if (std::isinf(v)) return "inf";
    return v;
}

}  // namespace

int cmd_deblur(const DeblurOptions& opts, std::ostream& out, std::ostream& err) {
    DeblurSpec spec = opts.config ? parse_deblur_config(read_json(*opts.config)) : DeblurSpec{};
    const Tensor3 x = io::read_ppm(opts.image);
    const Transform t = load_transform(opts.m, 3);
    if (t.order() != 3) throw DimensionMismatch("--m must be a 3 x 3 transform for RGB images");
    spec.model.size = x.rows();
    validate(spec.model);

    Json warnings = Json::array();
    if (auto w = delta_warning(spec.model)) {
        err << "warning: " << *w << '\n';
        warnings.push_back(*w);
    }

    const BlurPair op = build_blur_pair(spec.model, x.cols(), spec.mode, t);
    const Tensor3 observed = synthesize_observation(x, op.a, op.b, t, spec.noise_var, opts.seed);
    const Tensor3 blurred = clamp_unit(observed);
    const Reconstruction rec = reconstruct(observed, op.a, op.b, t, spec.reg);

    const double psnr_blurred = psnr(blurred, x);
    const double psnr_rec = psnr(rec.image, x);
    const Json metrics = {
        {"command", "deblur"},
        {"image", opts.image.string()},
        {"rows", x.rows()},
        {"cols", x.cols()},
        {"mode", std::string(to_string(spec.mode))},
        {"sigma", spec.model.sigma},
        {"bandwidth", spec.model.effective_bandwidth()},
        {"deltas", spec.model.deltas},
        {"noise_var", spec.noise_var},
        {"lambda", spec.reg.lambda},
        {"mu", spec.reg.mu},
        {"seed", opts.seed},
        {"transform", opts.m ? opts.m->string() : std::string("identity")},
        {"psnr_blurred", finite_or_inf(psnr_blurred)},
        {"psnr_reconstructed", finite_or_inf(psnr_rec)},
        {"relative_error_blurred", relative_error(blurred, x)},
        {"relative_error_reconstructed", relative_error(rec.image, x)},
        {"max_imag", rec.max_imag},
        {"warnings", warnings},
    };

    ensure_directory(opts.out);
    io::write_ppm(opts.out / "blurred.ppm", blurred);
    io::write_ppm(opts.out / "reconstructed.ppm", rec.image);
    write_json(opts.out / "metrics.json", metrics);
    if (opts.json) {
        out << metrics.dump(2) << '\n';
    } else {
        out << fmt::format("PSNR blurred {:.2f} dB, reconstructed {:.2f} dB\n", psnr_blurred, psnr_rec);
    }
    return kSuccess;
}

}  // namespace mtensor::cli
