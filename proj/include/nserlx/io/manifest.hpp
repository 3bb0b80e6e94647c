#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nserlx::io {

inline constexpr const char* kVersion = "0.2.0";

/// FNV-1a 64-bit content hash, hex-encoded.
std::string fnv1a_digest(const std::string& content);

/// Provenance record for a run: written with status "running" before any
/// output, finalized with the end time and output list afterwards.
struct RunManifest {
    std::string command;
    std::string config_digest;
    std::string version = kVersion;
    std::string started;
    std::string finished;
    std::string status = "running";
    std::vector<std::string> outputs;

    void write(const std::string& path) const;
};

std::string now_iso8601();

}  // namespace nserlx::io
