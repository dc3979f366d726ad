#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace mtensor::cli {

enum ExitCode : int {
    kSuccess = 0,
    kFailure = 1,
    kPrecheckFailed = 2,
    kMaxIter = 3,
};

struct SolveOptions {
    std::filesystem::path a, b, c;
    std::optional<std::filesystem::path> m;
    std::optional<std::filesystem::path> p1, p2;
    std::optional<std::filesystem::path> config;
    std::filesystem::path out = ".";
    std::uint64_t seed = 0;
    bool json = false;
};

struct LstsqOptions {
    std::filesystem::path a, b, c;
    std::optional<std::filesystem::path> m;
    std::optional<std::filesystem::path> config;
    std::filesystem::path out = ".";
    bool json = false;
};

struct VerifyOptions {
    bool json = false;
    /// Added to every entry of the fixture A before checking.
    double perturb = 0.0;
};

struct BenchOptions {
    std::filesystem::path config;
    std::filesystem::path out = ".";
    std::uint64_t seed = 0;
    bool json = false;
};

struct DeblurOptions {
    std::filesystem::path image;
    std::optional<std::filesystem::path> m;
    std::optional<std::filesystem::path> config;
    std::filesystem::path out = ".";
    std::uint64_t seed = 0;
    bool json = false;
};

int cmd_solve(const SolveOptions& opts, std::ostream& out, std::ostream& err);
int cmd_lstsq(const LstsqOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err);
int cmd_deblur(const DeblurOptions& opts, std::ostream& out, std::ostream& err);

/// Parses argv (program name first) and dispatches to a command.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mtensor::cli
