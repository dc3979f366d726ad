#include "config.hpp"

#include <fstream>

#include "mtensor/error.hpp"
#include "mtensor/io.hpp"

namespace mtensor::cli {

Json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError(path.string() + ": cannot open");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

void write_json(const std::filesystem::path& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw FormatError(path.string() + ": cannot open for writing");
    out << j.dump(2) << '\n';
    if (!out) throw FormatError(path.string() + ": write failed");
}

void field_error(const std::string& key, const std::string& what) {
    throw InvalidArgument("config field '" + key + "': " + what);
}

ConfigReader::ConfigReader(Json j) : j_(std::move(j)) {
    if (!j_.is_object()) throw InvalidArgument("config: expected a JSON object");
}

const Json* ConfigReader::find(const std::string& key) {
    seen_.insert(key);
    const auto it = j_.find(key);
    if (it == j_.end() || it->is_null()) return nullptr;
    return &*it;
}

bool ConfigReader::has(const std::string& key) const {
    const auto it = j_.find(key);
    return it != j_.end() && !it->is_null();
}

std::optional<double> ConfigReader::number(const std::string& key) {
    const Json* v = find(key);
    if (!v) return std::nullopt;
    if (!v->is_number()) field_error(key, "expected a number");
    return v->get<double>();
}

std::optional<std::int64_t> ConfigReader::integer(const std::string& key) {
    const Json* v = find(key);
    if (!v) return std::nullopt;
    if (!v->is_number_integer()) field_error(key, "expected an integer");
    return v->get<std::int64_t>();
}

std::optional<bool> ConfigReader::boolean(const std::string& key) {
    const Json* v = find(key);
    if (!v) return std::nullopt;
    if (!v->is_boolean()) field_error(key, "expected true or false");
    return v->get<bool>();
}

std::optional<std::string> ConfigReader::string(const std::string& key) {
    const Json* v = find(key);
    if (!v) return std::nullopt;
    if (!v->is_string()) field_error(key, "expected a string");
    return v->get<std::string>();
}

std::optional<std::vector<double>> ConfigReader::numbers(const std::string& key) {
    const Json* v = find(key);
    if (!v) return std::nullopt;
    if (!v->is_array()) field_error(key, "expected an array of numbers");
    std::vector<double> out;
    for (const auto& e : *v) {
        if (!e.is_number()) field_error(key, "expected an array of numbers");
        out.push_back(e.get<double>());
    }
    return out;
}

std::optional<std::vector<std::int64_t>> ConfigReader::integers(const std::string& key) {
    const Json* v = find(key);
    if (!v) return std::nullopt;
    if (!v->is_array()) field_error(key, "expected an array of integers");
    std::vector<std::int64_t> out;
    for (const auto& e : *v) {
        if (!e.is_number_integer()) field_error(key, "expected an array of integers");
        out.push_back(e.get<std::int64_t>());
    }
    return out;
}

std::optional<std::vector<std::string>> ConfigReader::strings(const std::string& key) {
    const Json* v = find(key);
    if (!v) return std::nullopt;
    if (!v->is_array()) field_error(key, "expected an array of strings");
    std::vector<std::string> out;
    for (const auto& e : *v) {
        if (!e.is_string()) field_error(key, "expected an array of strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

void ConfigReader::finish() const {
    for (const auto& [key, value] : j_.items()) {
        if (!seen_.count(key)) field_error(key, "unknown field");
    }
}

void ensure_directory(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw FormatError(dir.string() + ": cannot create directory: " + ec.message());
}

Transform load_transform(const std::optional<std::filesystem::path>& path, Index order) {
    if (!path) return Transform::identity(order);
    return Transform(io::read_matrix(*path));
}

}  // namespace mtensor::cli
