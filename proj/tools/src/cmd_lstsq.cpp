#include <fmt/format.h>

#include "config.hpp"
#include "mtensor/error.hpp"
#include "mtensor/io.hpp"
#include "mtensor/lstsq.hpp"
#include "mtensor/tensor_ops.hpp"
#include "mtensor_cli/cli.hpp"

namespace mtensor::cli {

int cmd_lstsq(const LstsqOptions& opts, std::ostream& out, std::ostream& /*err*/) {
    std::string method = "min_norm";
    RegularizationParams reg;
    if (opts.config) {
        ConfigReader r(read_json(*opts.config));
        if (auto m = r.string("method")) method = *m;
        if (auto v = r.number("lambda")) reg.lambda = *v;
        if (auto v = r.number("mu")) reg.mu = *v;
        r.finish();
    }
    if (method != "min_norm" && method != "tikhonov" && method != "sylvester") {
        field_error("method", "expected one of min_norm, tikhonov, sylvester, got '" + method + "'");
    }
    if (!(reg.lambda > 0.0)) field_error("lambda", "must be positive");
    if (!(reg.mu > 0.0)) field_error("mu", "must be positive");

    const Tensor3 a = io::read_tensor(opts.a);
    const Tensor3 b = io::read_tensor(opts.b);
    const Tensor3 c = io::read_tensor(opts.c);
    const Transform t = load_transform(opts.m, a.depth());

    Tensor3 x;
    double res = 0.0;
    Json j = {{"command", "lstsq"}, {"method", method}};
    if (method == "sylvester") {
        x = sylvester_solve(a, b, c, t);
        res = frobenius_norm(m_product(a, x, t) + m_product(x, b, t) - c);
    } else {
        j["consistent"] = is_consistent(a, b, c, t);
        if (method == "tikhonov") {
            x = tikhonov_solve(a, b, c, reg, t);
            j["lambda"] = reg.lambda;
            j["mu"] = reg.mu;
        } else {
            x = min_norm_lstsq(a, b, c, t);
        }
        res = frobenius_norm(c - m_product(m_product(a, x, t), b, t));
    }
    j["residual"] = res;
    j["solution_norm"] = frobenius_norm(x);

    ensure_directory(opts.out);
    io::write_tensor(opts.out / "X.mt3d", x);
    write_json(opts.out / "report.json", j);
    if (opts.json) {
        out << j.dump(2) << '\n';
    } else {
        out << fmt::format("{}: residual {:.4e}, ||X|| {:.6g}\n", method, res, frobenius_norm(x));
    }
    return kSuccess;
}

}  // namespace mtensor::cli
