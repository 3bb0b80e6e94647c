#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nserlx/experiments/decay.hpp"
#include "nserlx/solver/config.hpp"

namespace nserlx::io {

/// Plain-text key-value configuration: one `key = value` per line, `#`
/// starts a comment, keys are [A-Za-z0-9_]. Keys are strict: anything
/// the consumer does not recognize is a hard error with a suggestion.
class KeyValueFile {
public:
    static KeyValueFile parse_file(const std::string& path);
    static KeyValueFile parse_text(const std::string& text, const std::string& origin);

    bool has(const std::string& key) const;
    std::string get_string(const std::string& key, std::optional<std::string> fallback = {});
    double get_double(const std::string& key, std::optional<double> fallback = {});
    long get_int(const std::string& key, std::optional<long> fallback = {});

    /// Call after all known keys were consumed; throws ConfigError
    /// naming any unknown key and the closest known one.
    void finish() const;

    const std::string& raw_text() const { return text_; }

private:
    std::string origin_;
    std::string text_;
    std::map<std::string, std::pair<std::string, int>> entries_;  // key -> (value, line)
    std::set<std::string> known_;
    std::set<std::string> consumed_;
};

struct AnalysisConfig {
    int d = 2;
    model::ModelParams params;
    double xi_lo = 1e-3, xi_hi = 1e3;
    int xi_count = 512;
    std::string name = "symbol";
};

solver::SimConfig parse_sim_config(KeyValueFile& kv);
experiments::DecayExperimentConfig parse_experiment_config(KeyValueFile& kv,
                                                           experiments::DecayKind kind);
AnalysisConfig parse_analysis_config(KeyValueFile& kv);

/// "field:s:r:band" diagnostic entries, comma separated.
std::vector<solver::NormRequest> parse_norm_requests(const std::string& text);

}  // namespace nserlx::io
