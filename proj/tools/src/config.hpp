#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "mtensor/transform.hpp"

namespace mtensor::cli {

using Json = nlohmann::json;

/// Parses a JSON file; FormatError names the path on failure.
Json read_json(const std::filesystem::path& path);

/// Pretty-printed JSON followed by a newline.
void write_json(const std::filesystem::path& path, const Json& j);

/// Typed access to a JSON object. Errors name the offending field, and
/// finish() rejects fields that were never read.
class ConfigReader {
public:
    explicit ConfigReader(Json j);

    std::optional<double> number(const std::string& key);
    std::optional<std::int64_t> integer(const std::string& key);
    std::optional<bool> boolean(const std::string& key);
    std::optional<std::string> string(const std::string& key);
    std::optional<std::vector<double>> numbers(const std::string& key);
    std::optional<std::vector<std::int64_t>> integers(const std::string& key);
    std::optional<std::vector<std::string>> strings(const std::string& key);
    bool has(const std::string& key) const;

    void finish() const;

private:
    const Json* find(const std::string& key);

    Json j_;
    std::set<std::string> seen_;
};

/// InvalidArgument of the form "config field 'key': what".
[[noreturn]] void field_error(const std::string& key, const std::string& what);

void ensure_directory(const std::filesystem::path& dir);

/// MMAT1 transform from `path`, or the identity of the given order.
Transform load_transform(const std::optional<std::filesystem::path>& path, Index order);

}  // namespace mtensor::cli
