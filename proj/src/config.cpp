#include "numerov/config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace numerov {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
    throw ConfigError(origin + ": " + what);
}

int line_of_byte(const std::string& text, std::size_t byte) {
    int line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') ++line;
    }
    return line;
}

const json& require_block(const json& root, const char* key, const std::string& origin) {
    auto it = root.find(key);
    if (it == root.end()) fail(origin, std::string("missing required block '") + key + "'");
    return *it;
}

template <typename T>
T require_field(const json& obj, const char* key, const std::string& where,
                const std::string& origin) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(origin, "missing field '" + std::string(key) + "' in " + where);
    try {
        return it->get<T>();
    } catch (const json::exception& e) {
        fail(origin, "bad value for '" + std::string(key) + "' in " + where + ": " + e.what());
    }
}

template <typename T>
T optional_field(const json& obj, const char* key, T fallback, const std::string& where,
                 const std::string& origin) {
    auto it = obj.find(key);
    if (it == obj.end()) return fallback;
    try {
        return it->get<T>();
    } catch (const json::exception& e) {
        fail(origin, "bad value for '" + std::string(key) + "' in " + where + ": " + e.what());
    }
}

BasePotentialSpec parse_potential(const json& p, const std::string& origin) {
    const std::string type = require_field<std::string>(p, "type", "potential", origin);
    if (type == "infinite_well") return InfiniteWell{};
    if (type == "finite_well") {
        return FiniteWell{require_field<double>(p, "depth_v0_ev", "potential", origin),
                          require_field<double>(p, "half_width_nm", "potential", origin),
                          optional_field<double>(p, "center_nm", 0.0, "potential", origin)};
    }
    if (type == "harmonic") {
        return Harmonic{require_field<double>(p, "omega_per_s", "potential", origin),
                        optional_field<double>(p, "center_nm", 0.0, "potential", origin)};
    }
    if (type == "flat") {
        return Flat{optional_field<double>(p, "offset_ev", 0.0, "potential", origin)};
    }
    fail(origin, "unknown potential type '" + type + "'");
}

MassProfileSpec parse_mass(const json& m, const std::string& origin) {
    const std::string type = require_field<std::string>(m, "type", "mass", origin);
    if (type == "constant") {
        return ConstantMass{require_field<double>(m, "m_rel", "mass", origin)};
    }
    if (type == "quadratic") {
        return QuadraticMass{require_field<double>(m, "a", "mass", origin),
                             require_field<double>(m, "b_per_nm2", "mass", origin)};
    }
    if (type == "gaussian_bump") {
        return GaussianBumpMass{require_field<double>(m, "base", "mass", origin),
                                require_field<double>(m, "amp", "mass", origin),
                                require_field<double>(m, "width_w_nm", "mass", origin)};
    }
    if (type == "sampled") {
        return SampledMass{require_field<std::vector<double>>(m, "values", "mass", origin)};
    }
    fail(origin, "unknown mass type '" + type + "'");
}

void parse_solve_block(const json& s, ScenarioConfig& cfg, const std::string& origin) {
    cfg.n_modes = optional_field<int>(s, "n_modes", cfg.n_modes, "solve", origin);
    cfg.harmonic_mass_m_rel =
        optional_field<double>(s, "harmonic_mass_m_rel", cfg.harmonic_mass_m_rel, "solve", origin);
    cfg.pdm_r = optional_field<double>(s, "pdm_r", cfg.pdm_r, "solve", origin);
    cfg.pdm_s = optional_field<double>(s, "pdm_s", cfg.pdm_s, "solve", origin);
    if (auto it = s.find("wavefunctions"); it != s.end()) {
        if (it->is_string()) {
            const std::string v = it->get<std::string>();
            if (v == "all") {
                cfg.output.wavefunctions = WavefunctionSelection::all;
            } else if (v == "none") {
                cfg.output.wavefunctions = WavefunctionSelection::none;
            } else {
                fail(origin, "solve.wavefunctions must be \"all\", \"none\" or a mode list");
            }
        } else if (it->is_array()) {
            cfg.output.wavefunctions = WavefunctionSelection::listed;
            cfg.output.wavefunction_modes_1based = it->get<std::vector<int>>();
        } else {
            fail(origin, "solve.wavefunctions must be \"all\", \"none\" or a mode list");
        }
    }
    if (auto it = s.find("variants"); it != s.end()) {
        for (const auto& v : *it) {
            VariantSpec variant;
            variant.label = require_field<std::string>(v, "label", "solve.variants", origin);
            variant.barrier_indices =
                optional_field<std::vector<int>>(v, "barriers", {}, "solve.variants", origin);
            variant.variable_mass =
                optional_field<bool>(v, "variable_mass", true, "solve.variants", origin);
            cfg.variants.push_back(std::move(variant));
        }
    }
}

void parse_validate_block(const json& v, ScenarioConfig& cfg, const std::string& origin) {
    auto& opt = cfg.validation;
    opt.n_check_modes = optional_field<int>(v, "n_check_modes", opt.n_check_modes, "validate", origin);
    opt.spectral_terms =
        optional_field<std::vector<int>>(v, "spectral_terms", opt.spectral_terms, "validate", origin);
    auto& thr = opt.thresholds;
    thr.jump_rel_max = optional_field<double>(v, "jump_rel_max", thr.jump_rel_max, "validate", origin);
    thr.jump_abs_floor =
        optional_field<double>(v, "jump_abs_floor", thr.jump_abs_floor, "validate", origin);
    thr.even_mode_residual_max = optional_field<double>(v, "even_mode_residual_max",
                                                        thr.even_mode_residual_max, "validate", origin);
    thr.spectral_gap_max =
        optional_field<double>(v, "spectral_gap_max", thr.spectral_gap_max, "validate", origin);
    thr.expansion_l2_max =
        optional_field<double>(v, "expansion_l2_max", thr.expansion_l2_max, "validate", origin);
    thr.norm_check_tol =
        optional_field<double>(v, "norm_check_tol", thr.norm_check_tol, "validate", origin);
}

void parse_sweep_block(const json& s, ScenarioConfig& cfg, const std::string& origin) {
    SweepSpec sweep;
    sweep.parameter = require_field<std::string>(s, "parameter", "sweep", origin);
    if (sweep.parameter != "epsilon" && sweep.parameter != "alpha" &&
        sweep.parameter != "n_points") {
        fail(origin, "sweep.parameter must be epsilon, alpha or n_points");
    }
    sweep.values = require_field<std::vector<double>>(s, "values", "sweep", origin);
    sweep.barrier_index = optional_field<int>(s, "barrier_index", 0, "sweep", origin);
    if (auto it = s.find("shape"); it != s.end()) {
        try {
            sweep.shape = shape_from_name(it->get<std::string>());
        } catch (const Error& e) {
            fail(origin, e.what());
        }
    }
    cfg.sweep = std::move(sweep);
}

json dump_potential(const BasePotentialSpec& base) {
    json p;
    std::visit(
        [&](const auto& b) {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, InfiniteWell>) {
                p["type"] = "infinite_well";
            } else if constexpr (std::is_same_v<T, FiniteWell>) {
                p["type"] = "finite_well";
                p["depth_v0_ev"] = b.depth_v0_eV;
                p["half_width_nm"] = b.half_width_nm;
                p["center_nm"] = b.center_nm;
            } else if constexpr (std::is_same_v<T, Harmonic>) {
                p["type"] = "harmonic";
                p["omega_per_s"] = b.omega_per_s;
                p["center_nm"] = b.center_nm;
            } else {
                p["type"] = "flat";
                p["offset_ev"] = b.offset_eV;
            }
        },
        base);
    return p;
}

json dump_mass(const MassProfileSpec& mass) {
    json m;
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, ConstantMass>) {
                m["type"] = "constant";
                m["m_rel"] = p.m_rel;
            } else if constexpr (std::is_same_v<T, QuadraticMass>) {
                m["type"] = "quadratic";
                m["a"] = p.a;
                m["b_per_nm2"] = p.b_per_nm2;
            } else if constexpr (std::is_same_v<T, GaussianBumpMass>) {
                m["type"] = "gaussian_bump";
                m["base"] = p.base;
                m["amp"] = p.amp;
                m["width_w_nm"] = p.width_w_nm;
            } else {
                m["type"] = "sampled";
                m["values"] = p.values;
            }
        },
        mass);
    return m;
}

void put_finite(json& obj, const char* key, double v) {
    if (std::isfinite(v)) obj[key] = v;
}

}  // namespace

ScenarioConfig config_from_json_text(const std::string& text, const std::string& origin) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(origin, "line " + std::to_string(line_of_byte(text, e.byte)) + ": " + e.what());
    }
    if (!root.is_object()) fail(origin, "config root must be a JSON object");

    ScenarioConfig cfg;
    cfg.name = optional_field<std::string>(root, "name", "run", "config", origin);

    const json& grid = require_block(root, "grid", origin);
    cfg.x_min_nm = require_field<double>(grid, "x_min_nm", "grid", origin);
    cfg.x_max_nm = require_field<double>(grid, "x_max_nm", "grid", origin);
    cfg.n_points = require_field<int>(grid, "n_points", "grid", origin);

    cfg.potential.base = parse_potential(require_block(root, "potential", origin), origin);
    if (auto it = root.find("mass"); it != root.end()) cfg.mass = parse_mass(*it, origin);

    if (auto it = root.find("barriers"); it != root.end()) {
        for (const auto& b : *it) {
            PseudoDeltaSpec spec;
            spec.center_nm = require_field<double>(b, "center_nm", "barriers", origin);
            spec.strength_alpha_eV_nm = require_field<double>(b, "alpha_ev_nm", "barriers", origin);
            spec.epsilon = require_field<double>(b, "epsilon", "barriers", origin);
            const std::string shape =
                optional_field<std::string>(b, "shape", "rectangular", "barriers", origin);
            try {
                spec.shape = shape_from_name(shape);
            } catch (const Error& e) {
                fail(origin, e.what());
            }
            cfg.potential.barriers.push_back(spec);
        }
    }

    if (auto it = root.find("solve"); it != root.end()) parse_solve_block(*it, cfg, origin);
    if (auto it = root.find("validate"); it != root.end()) parse_validate_block(*it, cfg, origin);
    if (auto it = root.find("sweep"); it != root.end()) parse_sweep_block(*it, cfg, origin);
    if (auto it = root.find("output"); it != root.end()) {
        cfg.output.dir = optional_field<std::string>(*it, "dir", "", "output", origin);
        cfg.output.write_potential =
            optional_field<bool>(*it, "write_potential", true, "output", origin);
    }
    return cfg;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path + ": cannot open config file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return config_from_json_text(buf.str(), path);
}

std::string config_to_json_text(const ScenarioConfig& cfg) {
    json root;
    root["name"] = cfg.name;
    root["grid"] = {{"x_min_nm", cfg.x_min_nm}, {"x_max_nm", cfg.x_max_nm},
                    {"n_points", cfg.n_points}};
    root["potential"] = dump_potential(cfg.potential.base);
    root["mass"] = dump_mass(cfg.mass);
    json barriers = json::array();
    for (const auto& b : cfg.potential.barriers) {
        barriers.push_back({{"center_nm", b.center_nm},
                            {"alpha_ev_nm", b.strength_alpha_eV_nm},
                            {"epsilon", b.epsilon},
                            {"shape", shape_name(b.shape)}});
    }
    root["barriers"] = barriers;

    json solve;
    solve["n_modes"] = cfg.n_modes;
    if (cfg.harmonic_mass_m_rel > 0.0) solve["harmonic_mass_m_rel"] = cfg.harmonic_mass_m_rel;
    solve["pdm_r"] = cfg.pdm_r;
    solve["pdm_s"] = cfg.pdm_s;
    switch (cfg.output.wavefunctions) {
        case WavefunctionSelection::all: solve["wavefunctions"] = "all"; break;
        case WavefunctionSelection::none: solve["wavefunctions"] = "none"; break;
        case WavefunctionSelection::listed:
            solve["wavefunctions"] = cfg.output.wavefunction_modes_1based;
            break;
    }
    if (!cfg.variants.empty()) {
        json variants = json::array();
        for (const auto& v : cfg.variants) {
            variants.push_back({{"label", v.label},
                                {"barriers", v.barrier_indices},
                                {"variable_mass", v.variable_mass}});
        }
        solve["variants"] = variants;
    }
    root["solve"] = solve;

    json validate;
    validate["n_check_modes"] = cfg.validation.n_check_modes;
    validate["spectral_terms"] = cfg.validation.spectral_terms;
    const auto& thr = cfg.validation.thresholds;
    put_finite(validate, "jump_rel_max", thr.jump_rel_max);
    put_finite(validate, "jump_abs_floor", thr.jump_abs_floor);
    put_finite(validate, "even_mode_residual_max", thr.even_mode_residual_max);
    put_finite(validate, "spectral_gap_max", thr.spectral_gap_max);
    put_finite(validate, "expansion_l2_max", thr.expansion_l2_max);
    put_finite(validate, "norm_check_tol", thr.norm_check_tol);
    root["validate"] = validate;

    if (cfg.sweep) {
        json sweep;
        sweep["parameter"] = cfg.sweep->parameter;
        sweep["values"] = cfg.sweep->values;
        sweep["barrier_index"] = cfg.sweep->barrier_index;
        if (cfg.sweep->shape) sweep["shape"] = shape_name(*cfg.sweep->shape);
        root["sweep"] = sweep;
    }

    json output;
    if (!cfg.output.dir.empty()) output["dir"] = cfg.output.dir;
    output["write_potential"] = cfg.output.write_potential;
    root["output"] = output;

    return root.dump(2) + "\n";
}

void save_config(const ScenarioConfig& cfg, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError(path + ": cannot write config file");
    out << config_to_json_text(cfg);
}

}
