#include <fmt/format.h>

#include "config.hpp"
#include "mtensor/error.hpp"
#include "mtensor/io.hpp"
#include "mtensor/solver.hpp"
#include "mtensor/tensor_ops.hpp"
#include "mtensor_cli/cli.hpp"

namespace mtensor::cli {

namespace {

enum class Method { tspi, aor, ptspi };

struct SolveSpec {
    Method method = Method::tspi;
    std::optional<AorPreset> preset;
    SolverConfig cfg;
    AorParams left;
    AorParams right;
};

std::string_view method_name(Method m) {
    switch (m) {
        case Method::tspi: return "tspi";
        case Method::aor: return "aor";
        case Method::ptspi: return "ptspi";
    }
    return "";
}

AorParams side_params(ConfigReader& r, const char* omega_key, const char* kappa_key) {
    AorParams p;
    if (auto v = r.number(omega_key)) p.omega = *v;
    if (auto v = r.number(kappa_key)) p.kappa = *v;
    if (!(p.omega > 0.0 && p.omega <= 2.0)) field_error(omega_key, "must lie in (0, 2]");
    if (!(p.kappa >= 0.0)) field_error(kappa_key, "must be nonnegative");
    return p;
}

SolveSpec parse_solve_config(const Json& j) {
    ConfigReader r(j);
    SolveSpec s;
    if (auto m = r.string("method")) {
        if (*m == "tspi") {
            s.method = Method::tspi;
        } else if (*m == "aor") {
            s.method = Method::aor;
        } else if (*m == "ptspi") {
            s.method = Method::ptspi;
        } else {
            field_error("method", "expected one of tspi, aor, ptspi, got '" + *m + "'");
        }
    }
    if (auto p = r.string("preset")) {
        s.preset = parse_preset(*p);
        if (!s.preset) field_error("preset", "unknown preset '" + *p + "'");
        if (s.method != Method::aor) field_error("preset", "only valid with method aor");
    }
    if (s.method == Method::aor && !s.preset) field_error("preset", "required when method is aor");

    if (auto v = r.number("alpha")) s.cfg.alpha = *v;
    if (auto v = r.number("beta")) s.cfg.beta = *v;
    if (auto v = r.number("tol")) s.cfg.tol = *v;
    if (auto v = r.integer("max_iter")) {
        if (*v < 1 || *v > std::numeric_limits<int>::max()) field_error("max_iter", "must be a positive integer");
        s.cfg.max_iter = static_cast<int>(*v);
    }
    if (auto v = r.integer("residual_stride")) {
        if (*v < 1 || *v > std::numeric_limits<int>::max()) field_error("residual_stride", "must be a positive integer");
        s.cfg.residual_stride = static_cast<int>(*v);
    }
    if (auto v = r.string("stop_rule")) {
        if (*v == "relative" || *v == "relative_residual") {
            s.cfg.stop_rule = StopRule::relative_residual;
        } else if (*v == "absolute" || *v == "absolute_residual") {
            s.cfg.stop_rule = StopRule::absolute_residual;
        } else {
            field_error("stop_rule", "expected relative or absolute, got '" + *v + "'");
        }
    }
    if (auto v = r.boolean("precheck")) s.cfg.precheck = *v;
    if (!(s.cfg.alpha > 0.0) || !std::isfinite(s.cfg.alpha)) field_error("alpha", "must be positive");
    if (!(s.cfg.beta > 0.0) || !std::isfinite(s.cfg.beta)) field_error("beta", "must be positive");
    if (!(s.cfg.tol > 0.0)) field_error("tol", "must be positive");

    if (s.preset) {
        if (r.has("kappa1")) field_error("kappa1", "fixed by the preset");
        if (r.has("kappa2")) field_error("kappa2", "fixed by the preset");
        if (*s.preset != AorPreset::hosor_tspi) {
            if (r.has("omega1")) field_error("omega1", "fixed by the preset");
            if (r.has("omega2")) field_error("omega2", "fixed by the preset");
        }
        if (preset_fixes_steps(*s.preset)) {
            if (s.cfg.alpha != 1.0) field_error("alpha", "the preset fixes alpha = 1");
            if (s.cfg.beta != 1.0) field_error("beta", "the preset fixes beta = 1");
        }
        const AorParams l = side_params(r, "omega1", "kappa1");
        const AorParams rr = side_params(r, "omega2", "kappa2");
        const AorSetup setup = preset_setup(*s.preset, l.omega, rr.omega);
        s.left = setup.left;
        s.right = setup.right;
    } else {
        s.left = side_params(r, "omega1", "kappa1");
        s.right = side_params(r, "omega2", "kappa2");
    }
    r.finish();
    return s;
}

Json params_json(const SolveSpec& s) {
    Json p = {
        {"alpha", s.cfg.alpha},
        {"beta", s.cfg.beta},
        {"omega1", s.left.omega},
        {"kappa1", s.left.kappa},
        {"omega2", s.right.omega},
        {"kappa2", s.right.kappa},
        {"tol", s.cfg.tol},
        {"max_iter", s.cfg.max_iter},
        {"stop_rule", std::string(to_string(s.cfg.stop_rule))},
        {"precheck", s.cfg.precheck},
        {"residual_stride", s.cfg.residual_stride},
    };
    if (s.preset) p["preset"] = std::string(to_string(*s.preset));
    return p;
}

}  // namespace

int cmd_solve(const SolveOptions& opts, std::ostream& out, std::ostream& /*err*/) {
    const SolveSpec spec = opts.config ? parse_solve_config(read_json(*opts.config)) : SolveSpec{};
    if (spec.method == Method::ptspi && !opts.p1) throw InvalidArgument("--p1 is required when method is ptspi");
    if (spec.method != Method::ptspi && (opts.p1 || opts.p2)) {
        throw InvalidArgument("--p1/--p2 are only used when method is ptspi");
    }

    const Tensor3 a = io::read_tensor(opts.a);
    const Tensor3 b = io::read_tensor(opts.b);
    const Tensor3 c = io::read_tensor(opts.c);
    const Transform t = load_transform(opts.m, a.depth());
    std::optional<Tensor3> p1, p2;
    if (opts.p1) p1 = io::read_tensor(*opts.p1);
    if (opts.p2) p2 = io::read_tensor(*opts.p2);
    if (p1 && !p2) p2 = identity_tensor(b.rows(), t);

    SolveReport report;
    if (spec.method == Method::ptspi) {
        const Tensor3 pa = m_product(*p1, a, t);
        const Tensor3 bp = m_product(b, *p2, t);
        report = ptspi_solve(a, b, c, *p1, *p2, aor_splitting(pa, spec.left, t), aor_splitting(bp, spec.right, t), t,
                             spec.cfg);
    } else {
        report = aor_tspi_solve(a, b, c, t, {spec.left, spec.right}, spec.cfg);
    }

    Json j = {
        {"command", "solve"},
        {"method", std::string(method_name(spec.method))},
        {"params", params_json(spec)},
        {"inputs",
         {{"a", opts.a.string()},
          {"b", opts.b.string()},
          {"c", opts.c.string()},
          {"m", opts.m ? opts.m->string() : std::string("identity")}}},
        {"seed", opts.seed},
        {"iterations", report.iterations},
        {"residuals", report.residual_history},
        {"final_residual", report.final_residual()},
        {"residual", residual(a, report.x, b, c, t)},
        {"converged", report.converged},
        {"stop_reason", std::string(to_string(report.stop_reason))},
        {"elapsed_seconds", report.elapsed_seconds},
    };
    if (opts.p1) j["inputs"]["p1"] = opts.p1->string();
    if (opts.p2) j["inputs"]["p2"] = opts.p2->string();
    if (report.rho_y) j["rho_y"] = *report.rho_y;
    if (report.rho_x) j["rho_x"] = *report.rho_x;

    ensure_directory(opts.out);
    io::write_tensor(opts.out / "X.mt3d", report.x);
    write_json(opts.out / "report.json", j);

    if (opts.json) {
        out << j.dump(2) << '\n';
    } else {
        out << fmt::format("{}: {} after {} iterations, residual {:.4e}\n", method_name(spec.method),
                           to_string(report.stop_reason), report.iterations, report.final_residual());
    }
    switch (report.stop_reason) {
        case StopReason::tolerance_met: return kSuccess;
        case StopReason::precheck_failed: return kPrecheckFailed;
        case StopReason::max_iter: return kMaxIter;
    }
    return kFailure;
}

}  // namespace mtensor::cli
