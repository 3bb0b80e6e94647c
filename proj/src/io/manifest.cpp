#include "nserlx/io/manifest.hpp"

#include <json.hpp>

#include <chrono>
#include <fstream>

#include "nserlx/core/errors.hpp"

namespace nserlx::io {

std::string fnv1a_digest(const std::string& content) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : content) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

std::string now_iso8601() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return std::string(buf);
}

void RunManifest::write(const std::string& path) const {
    nlohmann::json j;
    j["command"] = command;
    j["config_digest"] = config_digest;
    j["version"] = version;
    j["started"] = started;
    j["finished"] = finished;
    j["status"] = status;
    j["outputs"] = outputs;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DomainError("cannot write manifest '" + path + "'");
    out << j.dump(2) << "\n";
}

}  // namespace nserlx::io
