#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "tprop/errors.hpp"
#include "tprop/vec3.hpp"

namespace tprop::cli {

class ParseError : public Error {
public:
    ParseError(int line, const std::string& msg)
        : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class ValidationError : public Error {
public:
    ValidationError(const std::string& key, const std::string& reason)
        : Error("key '" + key + "': " + reason), key_(key) {}
    const std::string& key() const { return key_; }

private:
    std::string key_;
};

using Value = std::variant<double, std::string, std::vector<double>, bool>;

// Parsed and validated scenario configuration. Keys are flattened to
// "section.key"; defaults for the named scenario are already applied.
struct ScenarioConfig {
    std::string scenario;
    std::map<std::string, Value> entries;

    bool has(const std::string& key) const { return entries.count(key) > 0; }
    double num(const std::string& key) const;
    const std::string& str(const std::string& key) const;
    bool boolean(const std::string& key) const;
    Vec3 vec3(const std::string& key) const;
};

// Parses the documented sectioned key-value format, validates against the
// schema of the named scenario (required keys present, unknown keys rejected),
// and fills defaults. Throws ParseError / ValidationError.
ScenarioConfig parse_config(const std::string& text);

// Deterministic normalized rendering (sorted keys, 17 significant digits).
std::string canonical_dump(const ScenarioConfig& cfg);

// Names of all known scenario types.
std::vector<std::string> scenario_types();

}  // namespace tprop::cli
