#include "nserlx/io/config_file.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "nserlx/core/numfmt.hpp"

namespace nserlx::io {

namespace {
std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

int edit_distance(const std::string& a, const std::string& b) {
    std::vector<int> prev(b.size() + 1), cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = static_cast<int>(j);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = static_cast<int>(i);
        for (std::size_t j = 1; j <= b.size(); ++j) {
            int sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}
}  // namespace

KeyValueFile KeyValueFile::parse_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str(), path);
}

KeyValueFile KeyValueFile::parse_text(const std::string& text, const std::string& origin) {
    KeyValueFile kv;
    kv.origin_ = origin;
    kv.text_ = text;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty() ||
            key.find_first_not_of(
                "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_") !=
                std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": bad key '" + key + "'");
        if (kv.entries_.count(key))
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": duplicate key '" + key +
                              "'");
        kv.entries_[key] = {value, lineno};
    }
    return kv;
}

bool KeyValueFile::has(const std::string& key) const { return entries_.count(key) > 0; }

std::string KeyValueFile::get_string(const std::string& key, std::optional<std::string> fallback) {
    known_.insert(key);
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        if (fallback) return *fallback;
        throw ConfigError(origin_ + ": missing required key '" + key + "'");
    }
    consumed_.insert(key);
    return it->second.first;
}

double KeyValueFile::get_double(const std::string& key, std::optional<double> fallback) {
    known_.insert(key);
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        if (fallback) return *fallback;
        throw ConfigError(origin_ + ": missing required key '" + key + "'");
    }
    consumed_.insert(key);
    try {
        return parse_double(it->second.first);
    } catch (const ConfigError& e) {
        throw ConfigError(origin_ + ":" + std::to_string(it->second.second) + ": key '" + key +
                          "': " + e.what());
    }
}

long KeyValueFile::get_int(const std::string& key, std::optional<long> fallback) {
    known_.insert(key);
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        if (fallback) return *fallback;
        throw ConfigError(origin_ + ": missing required key '" + key + "'");
    }
    consumed_.insert(key);
    try {
        return parse_int(it->second.first);
    } catch (const ConfigError& e) {
        throw ConfigError(origin_ + ":" + std::to_string(it->second.second) + ": key '" + key +
                          "': " + e.what());
    }
}

void KeyValueFile::finish() const {
    for (const auto& [key, val] : entries_) {
        if (consumed_.count(key)) continue;
        std::string best;
        int best_d = 1 << 30;
        for (const auto& k : known_) {
            int d = edit_distance(key, k);
            if (d < best_d) {
                best_d = d;
                best = k;
            }
        }
        std::string msg = origin_ + ":" + std::to_string(val.second) + ": unknown key '" + key + "'";
        if (!best.empty() && best_d <= static_cast<int>(std::max(key.size(), best.size())))
            msg += " (did you mean '" + best + "'?)";
        throw ConfigError(msg);
    }
}

std::vector<solver::NormRequest> parse_norm_requests(const std::string& text) {
    std::vector<solver::NormRequest> out;
    if (trim(text).empty()) return out;
    for (const std::string& item : split(text, ',')) {
        if (item.empty()) continue;
        auto parts = split(item, ':');
        if (parts.size() != 4)
            throw ConfigError("norm request '" + item + "' must be field:s:r:band");
        solver::NormRequest req;
        req.field = parts[0];
        req.spec.s = parse_double(parts[1]);
        if (parts[2] == "1")
            req.spec.r = lp::SumExp::One;
        else if (parts[2] == "inf")
            req.spec.r = lp::SumExp::Inf;
        else
            throw ConfigError("norm request '" + item + "': r must be 1 or inf");
        if (parts[3] == "low")
            req.spec.band = lp::Band::Low;
        else if (parts[3] == "high")
            req.spec.band = lp::Band::High;
        else if (parts[3] == "all")
            req.spec.band = lp::Band::All;
        else
            throw ConfigError("norm request '" + item + "': band must be low|high|all");
        req.label = item;
        out.push_back(std::move(req));
    }
    return out;
}

namespace {
// either the short or the descriptive key may be used, not both
double get_aliased(KeyValueFile& kv, const std::string& key, const std::string& alias,
                   double fallback) {
    bool has_key = kv.has(key), has_alias = kv.has(alias);
    if (has_key && has_alias)
        throw ConfigError("keys '" + key + "' and '" + alias + "' are aliases; set only one");
    double a = kv.get_double(alias, fallback);
    double v = kv.get_double(key, fallback);
    return has_alias ? a : v;
}

model::ModelParams parse_params(KeyValueFile& kv) {
    model::ModelParams p;
    p.mu = get_aliased(kv, "mu", "viscosity", 1.0);
    p.lambda = get_aliased(kv, "lambda", "second_viscosity", -1.0);
    p.kappa = get_aliased(kv, "kappa", "drag", 1.0);
    std::string law = kv.get_string("pressure", std::string("isothermal"));
    if (law == "isothermal") {
        p.pressure = model::PressureLaw::Isothermal;
    } else if (law == "gamma") {
        p.pressure = model::PressureLaw::Gamma;
        p.gamma = kv.get_double("gamma", 1.4);
    } else {
        throw ConfigError("pressure must be 'isothermal' or 'gamma'");
    }
    p.validate();
    return p;
}

solver::Scheme parse_scheme(const std::string& s) {
    if (s == "ifrk2") return solver::Scheme::IfRk2;
    if (s == "ifrk4") return solver::Scheme::IfRk4;
    throw ConfigError("scheme must be 'ifrk2' or 'ifrk4'");
}
}  // namespace

solver::SimConfig parse_sim_config(KeyValueFile& kv) {
    solver::SimConfig cfg;
    cfg.grid = Grid(static_cast<int>(kv.get_int("d")), static_cast<int>(kv.get_int("N")),
                    kv.get_double("L"));
    cfg.params = parse_params(kv);
    cfg.dt = kv.get_double("dt");
    cfg.T = kv.get_double("T");
    cfg.scheme = parse_scheme(kv.get_string("scheme", std::string("ifrk2")));
    cfg.cadence = static_cast<int>(kv.get_int("cadence", 10));
    cfg.snapshots = static_cast<int>(kv.get_int("snapshots", 0));
    cfg.name = kv.get_string("name", std::string("run"));
    cfg.sigma0 = kv.get_double("sigma0", -0.5 * cfg.grid.d);
    cfg.epsilon = kv.get_double("epsilon", 1e-3);
    cfg.seed = static_cast<uint64_t>(kv.get_int("seed", 1));
    cfg.components = kv.get_string("components", std::string("aubw"));
    cfg.cutoff = kv.get_double("cutoff", 1.0);
    cfg.diagnostics = parse_norm_requests(kv.get_string("diagnostics", std::string("")));
    std::string ej = kv.get_string("energy_j", std::string(""));
    if (!trim(ej).empty())
        for (const auto& tok : split(ej, ','))
            if (!tok.empty()) cfg.energy_j.push_back(static_cast<int>(parse_int(tok)));
    kv.finish();
    cfg.validate();
    return cfg;
}

experiments::DecayExperimentConfig parse_experiment_config(KeyValueFile& kv,
                                                           experiments::DecayKind kind) {
    experiments::DecayExperimentConfig cfg;
    cfg.kind = kind;
    cfg.d = static_cast<int>(kv.get_int("d"));
    cfg.sigma0 = kv.get_double("sigma0");
    long theorem = kv.get_int("theorem", 13);
    if (theorem == 13)
        cfg.theorem = experiments::Theorem::Decay13;
    else if (theorem == 14)
        cfg.theorem = experiments::Theorem::Decay14;
    else
        throw ConfigError("theorem must be 13 or 14");
    cfg.eps = kv.get_double("eps", 0.1);
    cfg.tolerance = kv.get_double("tolerance", kind == experiments::DecayKind::LinearContinuum
                                                   ? 0.05
                                                   : 0.25);
    cfg.window_lo = kv.get_double("window_lo", 10.0);
    cfg.window_hi = kv.get_double("window_hi", 1000.0);

    std::string fits = kv.get_string("fits");
    for (const auto& item : split(fits, ',')) {
        if (item.empty()) continue;
        auto parts = split(item, ':');
        if (parts.size() < 2 || parts.size() > 3)
            throw ConfigError("fit request '" + item + "' must be quantity:sigma[:inf]");
        experiments::FitRequest f;
        f.quantity = linear::parse_quantity(parts[0]);
        f.sigma = parts[1] == "sigma0" ? cfg.sigma0 : parse_double(parts[1]);
        if (parts.size() == 3) {
            if (parts[2] != "inf") throw ConfigError("fit request '" + item + "': expected 'inf'");
            f.r = lp::SumExp::Inf;
        }
        cfg.fits.push_back(f);
    }

    if (kind == experiments::DecayKind::LinearContinuum) {
        cfg.time_samples = static_cast<int>(kv.get_int("time_samples", 33));
        cfg.t_lo = kv.get_double("t_lo", 1.0);
        cfg.t_hi = kv.get_double("t_hi", 2000.0);
        cfg.continuum.params = parse_params(kv);
        cfg.continuum.nodes_per_block = static_cast<int>(kv.get_int("nodes_per_block", 2048));
        cfg.continuum.j_lo = static_cast<int>(kv.get_int("j_lo", -30));
        cfg.continuum.j_hi = static_cast<int>(kv.get_int("j_hi", 3));
        cfg.continuum.cutoff = kv.get_double("cutoff", 1.0);
    } else {
        cfg.sim.grid = Grid(cfg.d, static_cast<int>(kv.get_int("N")), kv.get_double("L"));
        cfg.sim.params = parse_params(kv);
        cfg.sim.dt = kv.get_double("dt");
        cfg.sim.T = kv.get_double("T");
        cfg.sim.scheme = parse_scheme(kv.get_string("scheme", std::string("ifrk2")));
        cfg.sim.cadence = static_cast<int>(kv.get_int("cadence", 10));
        cfg.sim.epsilon = kv.get_double("epsilon", 1e-3);
        cfg.sim.seed = static_cast<uint64_t>(kv.get_int("seed", 1));
        cfg.sim.components = kv.get_string("components", std::string("aubw"));
        cfg.sim.cutoff = kv.get_double("cutoff", 1.0);
        cfg.sim.sigma0 = cfg.sigma0;
        cfg.sim.name = kv.get_string("name", std::string("torus-decay"));
    }
    kv.finish();
    return cfg;
}

AnalysisConfig parse_analysis_config(KeyValueFile& kv) {
    AnalysisConfig cfg;
    cfg.d = static_cast<int>(kv.get_int("d", 3));
    cfg.params = parse_params(kv);
    cfg.xi_lo = kv.get_double("xi_lo", 1e-3);
    cfg.xi_hi = kv.get_double("xi_hi", 1e3);
    cfg.xi_count = static_cast<int>(kv.get_int("xi_count", 512));
    cfg.name = kv.get_string("name", std::string("symbol"));
    kv.finish();
    if (cfg.d != 2 && cfg.d != 3) throw ConfigError("d must be 2 or 3");
    if (!(cfg.xi_lo > 0.0) || !(cfg.xi_hi > cfg.xi_lo) || cfg.xi_count < 2)
        throw ConfigError("bad xi grid");
    return cfg;
}

}  // namespace nserlx::io
