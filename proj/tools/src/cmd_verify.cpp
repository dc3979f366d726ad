#include <fmt/format.h>

#include "config.hpp"
#include "mtensor/reference_problem.hpp"
#include "mtensor/splitting.hpp"
#include "mtensor/tensor_ops.hpp"
#include "mtensor_cli/cli.hpp"

namespace mtensor::cli {

namespace {

struct Check {
    std::string name;
    Json value;
    Json expected;
    double tolerance = 0.0;
    bool pass = false;
};

Check radius_check(std::string name, const Splitting& s, const Transform& t, double expected) {
    const double rho = convergence_radius(s, t);
    return {std::move(name), rho, expected, 5e-4, std::abs(rho - expected) <= 5e-4};
}

Check hat_check(std::string name, const Tensor3& computed_hat, const Tensor3& expected_hat, double tol) {
    double diff = 0.0;
    for (std::size_t i = 0; i < computed_hat.data().size(); ++i) {
        diff = std::max(diff, std::abs(computed_hat.data()[i] - expected_hat.data()[i]));
    }
    return {std::move(name), diff, 0.0, tol, diff <= tol};
}

Check class_check(std::string name, const Splitting& s) {
    return {std::move(name), std::string(to_string(s.kind)), "weak_regular", 0.0,
            satisfies(s.kind, SplittingClass::weak_regular)};
}

std::string show(const Json& v) {
    if (v.is_number()) return fmt::format("{:.6g}", v.get<double>());
    return v.get<std::string>();
}

}  // namespace

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& /*err*/) {
    const Transform t = reference::transform();
    Tensor3 a = reference::a();
    if (opts.perturb != 0.0) {
        for (auto& z : a.data()) z += opts.perturb;
    }
    const Tensor3 b = reference::b();
    const Tensor3 p = reference::p();

    const Splitting s1 = jacobi_splitting(a, t);
    const Splitting s2 = jacobi_splitting(b, t);
    const Splitting sp1 = jacobi_splitting(m_product(p, a, t), t);
    const Splitting sp2 = jacobi_splitting(m_product(b, p, t), t);

    std::vector<Check> checks;
    checks.push_back(radius_check("rho(F1^-1 G1)", s1, t, reference::kRhoF1G1));
    checks.push_back(radius_check("rho(F2^-1 G2)", s2, t, reference::kRhoF2G2));
    checks.push_back(radius_check("rho(Fp1^-1 Gp1)", sp1, t, reference::kRhoFp1Gp1));
    checks.push_back(radius_check("rho(Fp2^-1 Gp2)", sp2, t, reference::kRhoFp2Gp2));
    checks.push_back(hat_check("hat(A^-1) fractions", inverse(to_hat(a, t)).values(), reference::inverse_a_hat(), 1e-12));
    checks.push_back(hat_check("hat(B^-1) fractions", inverse(to_hat(b, t)).values(), reference::inverse_b_hat(), 1e-12));
    checks.push_back(hat_check("F1 diagonal", s1.f, reference::f1(), 1e-12));
    checks.push_back(hat_check("F2 diagonal", s2.f, reference::f2(), 1e-12));
    checks.push_back(class_check("class(F1, G1)", s1));
    checks.push_back(class_check("class(F2, G2)", s2));
    checks.push_back(class_check("class(Fp1, Gp1)", sp1));
    checks.push_back(class_check("class(Fp2, Gp2)", sp2));

    bool all = true;
    for (const auto& c : checks) all = all && c.pass;

    if (opts.json) {
        Json list = Json::array();
        for (const auto& c : checks) {
            list.push_back({{"name", c.name},
                            {"value", c.value},
                            {"expected", c.expected},
                            {"tolerance", c.tolerance},
                            {"pass", c.pass}});
        }
        out << Json{{"command", "verify"}, {"perturb", opts.perturb}, {"checks", list}, {"pass", all}}.dump(2)
            << '\n';
    } else {
        out << fmt::format("{:<22} {:>14} {:>14} {:>9}  {}\n", "check", "value", "expected", "tol", "result");
        for (const auto& c : checks) {
            const std::string tol = c.value.is_number() ? fmt::format("{:.0e}", c.tolerance) : "-";
            out << fmt::format("{:<22} {:>14} {:>14} {:>9}  {}\n", c.name, show(c.value), show(c.expected), tol,
                               c.pass ? "PASS" : "FAIL");
        }
        out << (all ? "all checks passed\n" : "some checks FAILED\n");
    }
    return all ? kSuccess : kFailure;
}

}  // namespace mtensor::cli
