#include "nserlx/io/ndjson.hpp"

#include <json.hpp>

namespace nserlx::io {

std::string row_to_json(const solver::DiagnosticsRow& row) {
    nlohmann::json j;
    j["t"] = row.t;
    j["norms"] = nlohmann::json::object();
    for (const auto& [k, v] : row.norms) j["norms"][k] = v;
    j["mean_a"] = row.mean_a;
    j["total_n"] = row.total_n;
    j["min_density"] = row.min_density;
    if (!row.energies.empty()) {
        j["energies"] = nlohmann::json::object();
        for (const auto& [k, v] : row.energies) j["energies"][k] = v;
    }
    return j.dump();
}

NdjsonWriter::NdjsonWriter(const std::string& path) : out_(path, std::ios::binary | std::ios::trunc) {
    if (!out_) throw DomainError("cannot open ndjson output '" + path + "'");
}

void NdjsonWriter::write_row(const solver::DiagnosticsRow& row) {
    out_ << row_to_json(row) << "\n";
    out_.flush();
}

}  // namespace nserlx::io
