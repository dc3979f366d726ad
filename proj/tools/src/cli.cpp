#include "mtensor_cli/cli.hpp"

#include <exception>

#include "CLI11.hpp"
#include "json.hpp"
#include "mtensor/error.hpp"

namespace mtensor::cli {

namespace {

void add_path(CLI::App* app, const std::string& flag, std::optional<std::filesystem::path>& target,
              const std::string& help) {
    app->add_option_function<std::string>(flag, [&target](const std::string& v) { target = v; }, help)
        ->check(CLI::ExistingFile);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"M-product tensor equation solvers"};
    app.name(args.empty() ? "mtensor" : args.front());
    app.require_subcommand(1);

    SolveOptions solve;
    std::string solve_a, solve_b, solve_c, solve_out = ".";
    auto* solve_cmd = app.add_subcommand("solve", "Two-step iterative solve of A *_M X *_M B = C");
    solve_cmd->add_option("--a", solve_a, "A (MT3D)")->required()->check(CLI::ExistingFile);
    solve_cmd->add_option("--b", solve_b, "B (MT3D)")->required()->check(CLI::ExistingFile);
    solve_cmd->add_option("--c", solve_c, "C (MT3D)")->required()->check(CLI::ExistingFile);
    add_path(solve_cmd, "--m", solve.m, "transform (MMAT1), identity when omitted");
    add_path(solve_cmd, "--p1", solve.p1, "left preconditioner (MT3D), method ptspi");
    add_path(solve_cmd, "--p2", solve.p2, "right preconditioner (MT3D), method ptspi");
    add_path(solve_cmd, "--config", solve.config, "solver config (JSON)");
    solve_cmd->add_option("--out", solve_out, "output directory for X.mt3d and report.json");
    solve_cmd->add_option("--seed", solve.seed, "seed recorded in the report");
    solve_cmd->add_flag("--json", solve.json, "print the report as JSON");

    LstsqOptions lstsq;
    std::string lstsq_a, lstsq_b, lstsq_c, lstsq_out = ".";
    auto* lstsq_cmd = app.add_subcommand("lstsq", "Least-squares, Tikhonov or Sylvester solve");
    lstsq_cmd->add_option("--a", lstsq_a, "A (MT3D)")->required()->check(CLI::ExistingFile);
    lstsq_cmd->add_option("--b", lstsq_b, "B (MT3D)")->required()->check(CLI::ExistingFile);
    lstsq_cmd->add_option("--c", lstsq_c, "C (MT3D)")->required()->check(CLI::ExistingFile);
    add_path(lstsq_cmd, "--m", lstsq.m, "transform (MMAT1), identity when omitted");
    add_path(lstsq_cmd, "--config", lstsq.config, "{method, lambda, mu} (JSON)");
    lstsq_cmd->add_option("--out", lstsq_out, "output directory");
    lstsq_cmd->add_flag("--json", lstsq.json, "print the report as JSON");

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check the built-in reference problem");
    verify_cmd->add_flag("--json", verify.json, "machine-readable output");
    verify_cmd->add_option("--perturb", verify.perturb, "add this value to every entry of A");

    BenchOptions bench;
    std::string bench_config, bench_out = ".";
    auto* bench_cmd = app.add_subcommand("bench", "Sweep AOR presets on random diagonally dominant systems");
    bench_cmd->add_option("--config", bench_config, "sweep spec (JSON)")->required()->check(CLI::ExistingFile);
    bench_cmd->add_option("--out", bench_out, "output directory for bench.csv and bench.json");
    bench_cmd->add_option("--seed", bench.seed, "base seed when 'seeds' is a count");
    bench_cmd->add_flag("--json", bench.json, "print the report as JSON instead of CSV");

    DeblurOptions deblur;
    std::string deblur_image, deblur_out = ".";
    auto* deblur_cmd = app.add_subcommand("deblur", "Blur, add noise and reconstruct an RGB image");
    deblur_cmd->add_option("--image", deblur_image, "input image (binary PPM)")->required()->check(CLI::ExistingFile);
    add_path(deblur_cmd, "--m", deblur.m, "3 x 3 transform (MMAT1), identity when omitted");
    add_path(deblur_cmd, "--config", deblur.config, "model and regularization (JSON)");
    deblur_cmd->add_option("--out", deblur_out, "output directory");
    deblur_cmd->add_option("--seed", deblur.seed, "noise seed");
    deblur_cmd->add_flag("--json", deblur.json, "print the metrics as JSON");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kSuccess : kFailure;
    }

    try {
        if (solve_cmd->parsed()) {
            solve.a = solve_a;
            solve.b = solve_b;
            solve.c = solve_c;
            solve.out = solve_out;
            return cmd_solve(solve, out, err);
        }
        if (lstsq_cmd->parsed()) {
            lstsq.a = lstsq_a;
            lstsq.b = lstsq_b;
            lstsq.c = lstsq_c;
            lstsq.out = lstsq_out;
            return cmd_lstsq(lstsq, out, err);
        }
        if (verify_cmd->parsed()) return cmd_verify(verify, out, err);
        if (bench_cmd->parsed()) {
            bench.config = bench_config;
            bench.out = bench_out;
            return cmd_bench(bench, out, err);
        }
        if (deblur_cmd->parsed()) {
            deblur.image = deblur_image;
            deblur.out = deblur_out;
            return cmd_deblur(deblur, out, err);
        }
    } catch (const mtensor::Error& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kFailure;
}

}  // namespace mtensor::cli
