#include "tprop/cli/config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>

namespace tprop::cli {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool valid_key(const std::string& k) {
    if (k.empty()) return false;
    for (char c : k)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
    return true;
}

double parse_number(const std::string& tok, int line) {
    size_t pos = 0;
    double v;
    try {
        v = std::stod(tok, &pos);
    } catch (...) {
        throw ParseError(line, "expected a number, got '" + tok + "'");
    }
    if (pos != tok.size()) throw ParseError(line, "trailing characters in number '" + tok + "'");
    return v;
}

Value parse_value(const std::string& raw, int line) {
    std::string tok = trim(raw);
    if (tok.empty()) throw ParseError(line, "missing value");
    if (tok.front() == '"') {
        if (tok.size() < 2 || tok.back() != '"')
            throw ParseError(line, "unterminated string");
        return tok.substr(1, tok.size() - 2);
    }
    if (tok == "true") return true;
    if (tok == "false") return false;
    if (tok.front() == '[') {
        if (tok.back() != ']') throw ParseError(line, "unterminated array");
        std::vector<double> arr;
        std::string inner = tok.substr(1, tok.size() - 2);
        std::stringstream ss(inner);
        std::string item;
        while (std::getline(ss, item, ',')) {
            item = trim(item);
            if (item.empty()) throw ParseError(line, "empty array element");
            arr.push_back(parse_number(item, line));
        }
        return arr;
    }
    return parse_number(tok, line);
}

std::string strip_comment(const std::string& line) {
    bool in_str = false;
    for (size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') in_str = !in_str;
        if (line[i] == '#' && !in_str) return line.substr(0, i);
    }
    return line;
}

// ---------------------------------------------------------------------------
// Scenario schemas
// ---------------------------------------------------------------------------

enum class Kind { Num, Str, Arr3, Bool };

struct Field {
    const char* key;
    Kind kind;
    bool required;
    Value def;  // used when !required
};

struct Schema {
    const char* name;
    std::vector<Field> fields;
};

std::vector<double> v3(double x, double y, double z) { return {x, y, z}; }

const std::vector<Schema>& schemas() {
    static const std::vector<Schema> s = {
        {"lorentz-static",
         {
             {"particle.mass", Kind::Num, true, 0.0},
             {"particle.charge", Kind::Num, true, 0.0},
             {"fields.E", Kind::Arr3, false, v3(0, 0, 0)},
             {"fields.B", Kind::Arr3, true, {}},
             {"initial.r0", Kind::Arr3, false, v3(0, 0, 0)},
             {"initial.v0", Kind::Arr3, true, {}},
             {"numerics.periods", Kind::Num, false, 5.0},
             {"numerics.samples_per_period", Kind::Num, false, 256.0},
             {"numerics.speed_drift_bound", Kind::Num, false, 1e-12},
             {"numerics.pseudo_momentum_bound", Kind::Num, false, 1e-9},
             {"output.file", Kind::Str, false, std::string("trajectory.csv")},
         }},
        {"coriolis-fall",
         {
             {"coriolis.omega_mag", Kind::Num, false, 7.2921159e-5},
             {"coriolis.latitude_deg", Kind::Num, false, 45.0},
             {"coriolis.eta", Kind::Num, false, 0.1},
             {"coriolis.g", Kind::Num, false, 9.80665},
             {"initial.r0", Kind::Arr3, false, v3(0, 0, 0)},
             {"initial.v0", Kind::Arr3, false, v3(0, 0, 0)},
             {"numerics.t_end", Kind::Num, false, 60.0},
             {"numerics.n_samples", Kind::Num, false, 1200.0},
             {"numerics.derivative_check_bound", Kind::Num, false, 1e-6},
             {"output.file", Kind::Str, false, std::string("coriolis.csv")},
         }},
        {"field-map",
         {
             {"particle.mass", Kind::Num, true, 0.0},
             {"particle.charge", Kind::Num, true, 0.0},
             {"fieldmap.kind", Kind::Str, true, {}},  // linear-x | plane-hyperbolic
             {"fieldmap.B0", Kind::Num, true, 0.0},
             {"fieldmap.L", Kind::Num, false, 1.0},
             {"initial.r0", Kind::Arr3, false, v3(0, 0, 0)},
             {"initial.v0", Kind::Arr3, true, {}},
             {"numerics.delta", Kind::Num, true, 0.0},
             {"numerics.n_steps", Kind::Num, true, 0.0},
             {"numerics.midpoint", Kind::Bool, false, false},
             {"numerics.speed_step_bound", Kind::Num, false, 1e-10},
             {"output.file", Kind::Str, false, std::string("fieldmap.csv")},
         }},
        {"relativistic",
         {
             {"particle.mass", Kind::Num, true, 0.0},
             {"particle.charge", Kind::Num, true, 0.0},
             {"fields.E", Kind::Arr3, false, v3(0, 0, 0)},
             {"fields.B", Kind::Arr3, true, {}},
             {"initial.r0", Kind::Arr3, false, v3(0, 0, 0)},
             {"initial.v0", Kind::Arr3, true, {}},
             {"numerics.c", Kind::Num, false, 299792458.0},
             {"numerics.periods", Kind::Num, false, 5.0},
             {"numerics.steps_per_period", Kind::Num, false, 4000.0},
             {"numerics.energy_residual_bound", Kind::Num, false, 1e-6},
             {"output.file", Kind::Str, false, std::string("relativistic.csv")},
         }},
        {"spectrum",
         {
             {"radiation.q", Kind::Arr3, true, {}},
             {"radiation.n", Kind::Arr3, false, v3(0, 0, 1)},
             {"radiation.beta0", Kind::Arr3, true, {}},
             {"radiation.Omega", Kind::Num, true, 0.0},
             {"radiation.T_periods", Kind::Num, false, 50.0},
             {"grid.omega_min_harmonics", Kind::Num, false, 0.2},
             {"grid.omega_max_harmonics", Kind::Num, false, 3.2},
             {"grid.n_points", Kind::Num, false, 600.0},
             {"numerics.r_max", Kind::Num, false, 0.0},  // 0 = automatic
             {"numerics.reality_bound", Kind::Num, false, 1e-12},
             {"output.file", Kind::Str, false, std::string("spectrum.csv")},
         }},
        {"lineshape",
         {
             {"particle.mass", Kind::Num, true, 0.0},
             {"particle.charge", Kind::Num, true, 0.0},
             {"fields.E", Kind::Arr3, false, v3(0, 0, 0)},
             {"radiation.q", Kind::Arr3, true, {}},
             {"radiation.n", Kind::Arr3, false, v3(0, 0, 1)},
             {"radiation.beta0", Kind::Arr3, true, {}},
             {"radiation.Omega", Kind::Num, true, 0.0},
             {"radiation.T_periods", Kind::Num, false, 50.0},
             {"grid.harmonic", Kind::Num, false, 1.0},
             {"grid.rel_width", Kind::Num, false, 0.2},
             {"grid.n_points", Kind::Num, false, 400.0},
             {"numerics.quad_tol", Kind::Num, false, 1e-10},
             {"numerics.sinc_check_bound", Kind::Num, false, 1e-9},
             {"output.file", Kind::Str, false, std::string("lineshape.csv")},
         }},
        {"zassenhaus-order",
         {
             {"pair.omega1", Kind::Arr3, true, {}},
             {"pair.omega2", Kind::Arr3, true, {}},
             {"initial.s0", Kind::Arr3, false, v3(1, 0, 0)},
             {"study.t0", Kind::Num, false, 0.5},
             {"study.n_levels", Kind::Num, false, 7.0},
             {"numerics.slope_bound", Kind::Num, false, 2.9},
             {"output.file", Kind::Str, false, std::string("zassenhaus.csv")},
         }},
        {"magnus-demo",
         {
             {"magnus.Omega0", Kind::Num, false, 1.0},
             {"magnus.omega_rot", Kind::Num, false, 0.3},
             {"study.t_total", Kind::Num, false, 2.0},
             {"study.n_levels", Kind::Num, false, 6.0},
             {"numerics.n_quad", Kind::Num, false, 32.0},
             {"numerics.norm_drift_bound", Kind::Num, false, 1e-12},
             {"output.file", Kind::Str, false, std::string("magnus.csv")},
         }},
        {"llg-demo",
         {
             {"llg.alpha", Kind::Num, false, 1.0},
             {"llg.beta", Kind::Num, false, 0.5},
             {"llg.H", Kind::Arr3, false, v3(0, 0, 1)},
             {"initial.M0", Kind::Arr3, false, v3(1, 0, 0.2)},
             {"numerics.delta", Kind::Num, false, 0.02},
             {"numerics.n_steps", Kind::Num, false, 2000.0},
             {"numerics.norm_step_bound", Kind::Num, false, 1e-13},
             {"output.file", Kind::Str, false, std::string("llg.csv")},
         }},
        {"radiation-reaction",
         {
             {"rr.tau", Kind::Num, false, 1.0},
             {"rr.Omega", Kind::Arr3, false, v3(0, 0, 0.5)},
             {"rr.Q", Kind::Arr3, false, v3(1, 0, 0)},
             {"numerics.t_end_tau", Kind::Num, false, 5.0},
             {"numerics.n_samples", Kind::Num, false, 200.0},
             {"numerics.quad_tol", Kind::Num, false, 1e-10},
             {"numerics.agreement_bound", Kind::Num, false, 1e-8},
             {"output.file", Kind::Str, false, std::string("radiation_reaction.csv")},
         }},
    };
    return s;
}

const Schema& schema_for(const std::string& scenario) {
    for (const auto& s : schemas())
        if (scenario == s.name) return s;
    throw ValidationError("scenario", "unknown scenario '" + scenario + "'");
}

bool kind_matches(const Value& v, Kind k) {
    switch (k) {
        case Kind::Num: return std::holds_alternative<double>(v);
        case Kind::Str: return std::holds_alternative<std::string>(v);
        case Kind::Bool: return std::holds_alternative<bool>(v);
        case Kind::Arr3:
            return std::holds_alternative<std::vector<double>>(v) &&
                   std::get<std::vector<double>>(v).size() == 3;
    }
    return false;
}

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::Num: return "number";
        case Kind::Str: return "string";
        case Kind::Bool: return "boolean";
        case Kind::Arr3: return "array of 3 numbers";
    }
    return "?";
}

}  // namespace

double ScenarioConfig::num(const std::string& key) const {
    auto it = entries.find(key);
    if (it == entries.end() || !std::holds_alternative<double>(it->second))
        throw ValidationError(key, "missing numeric value");
    return std::get<double>(it->second);
}

const std::string& ScenarioConfig::str(const std::string& key) const {
    auto it = entries.find(key);
    if (it == entries.end() || !std::holds_alternative<std::string>(it->second))
        throw ValidationError(key, "missing string value");
    return std::get<std::string>(it->second);
}

bool ScenarioConfig::boolean(const std::string& key) const {
    auto it = entries.find(key);
    if (it == entries.end() || !std::holds_alternative<bool>(it->second))
        throw ValidationError(key, "missing boolean value");
    return std::get<bool>(it->second);
}

Vec3 ScenarioConfig::vec3(const std::string& key) const {
    auto it = entries.find(key);
    if (it == entries.end() || !std::holds_alternative<std::vector<double>>(it->second))
        throw ValidationError(key, "missing vector value");
    const auto& a = std::get<std::vector<double>>(it->second);
    if (a.size() != 3) throw ValidationError(key, "expected 3 components");
    return {a[0], a[1], a[2]};
}

ScenarioConfig parse_config(const std::string& text) {
    ScenarioConfig cfg;
    std::map<std::string, Value> raw;
    std::string section;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = trim(strip_comment(line));
        if (body.empty()) continue;
        if (body.front() == '[') {
            if (body.back() != ']') throw ParseError(lineno, "unterminated section header");
            section = trim(body.substr(1, body.size() - 2));
            if (!valid_key(section)) throw ParseError(lineno, "invalid section name");
            continue;
        }
        size_t eq = body.find('=');
        if (eq == std::string::npos) throw ParseError(lineno, "expected 'key = value'");
        std::string key = trim(body.substr(0, eq));
        if (!valid_key(key)) throw ParseError(lineno, "invalid key '" + key + "'");
        Value val = parse_value(body.substr(eq + 1), lineno);
        std::string full = section.empty() ? key : section + "." + key;
        if (raw.count(full)) throw ParseError(lineno, "duplicate key '" + full + "'");
        raw.emplace(full, std::move(val));
    }

    auto sc = raw.find("scenario");
    if (sc == raw.end() || !std::holds_alternative<std::string>(sc->second))
        throw ValidationError("scenario", "missing (top-level scenario = \"...\")");
    cfg.scenario = std::get<std::string>(sc->second);
    raw.erase(sc);

    const Schema& schema = schema_for(cfg.scenario);
    for (const Field& f : schema.fields) {
        auto it = raw.find(f.key);
        if (it == raw.end()) {
            if (f.required) throw ValidationError(f.key, "required key missing");
            cfg.entries.emplace(f.key, f.def);
        } else {
            if (!kind_matches(it->second, f.kind))
                throw ValidationError(f.key, std::string("expected ") + kind_name(f.kind));
            cfg.entries.emplace(f.key, it->second);
            raw.erase(it);
        }
    }
    if (!raw.empty())
        throw ValidationError(raw.begin()->first, "unknown key for scenario " + cfg.scenario);
    return cfg;
}

std::string canonical_dump(const ScenarioConfig& cfg) {
    std::ostringstream out;
    out << "scenario = \"" << cfg.scenario << "\"\n";
    for (const auto& [key, val] : cfg.entries) {
        out << key << " = ";
        if (std::holds_alternative<double>(val)) {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(val));
            out << buf;
        } else if (std::holds_alternative<std::string>(val)) {
            out << '"' << std::get<std::string>(val) << '"';
        } else if (std::holds_alternative<bool>(val)) {
            out << (std::get<bool>(val) ? "true" : "false");
        } else {
            const auto& a = std::get<std::vector<double>>(val);
            out << '[';
            for (size_t i = 0; i < a.size(); ++i) {
                char buf[40];
                std::snprintf(buf, sizeof buf, "%.17g", a[i]);
                out << (i ? ", " : "") << buf;
            }
            out << ']';
        }
        out << '\n';
    }
    return out.str();
}

std::vector<std::string> scenario_types() {
    std::vector<std::string> names;
    for (const auto& s : schemas()) names.push_back(s.name);
    return names;
}

}  // namespace tprop::cli
