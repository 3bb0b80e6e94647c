#pragma once

#include <fstream>
#include <string>

#include "nserlx/solver/run.hpp"

namespace nserlx::io {

/// Streaming NDJSON sink: one diagnostics object per line, flushed per
/// row so long runs can be tailed.
class NdjsonWriter {
public:
    explicit NdjsonWriter(const std::string& path);
    void write_row(const solver::DiagnosticsRow& row);

private:
    std::ofstream out_;
};

std::string row_to_json(const solver::DiagnosticsRow& row);

}  // namespace nserlx::io
