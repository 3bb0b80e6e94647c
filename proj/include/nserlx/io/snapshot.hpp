#pragma once

#include <string>

#include "nserlx/model/state.hpp"

namespace nserlx::io {

/// Raw spectral snapshot, little-endian:
///   bytes 0..7   magic "NSERLX1\0"
///   uint32       d
///   uint32       N
///   float64      L
///   float64      t
/// then for each field in the order a, u_0..u_{d-1}, b, w_0..w_{d-1}:
/// spec_size() coefficients as complex64 (float32 re, float32 im) in
/// row-major k-order of the half-complex layout.
void write_snapshot(const std::string& path, const model::FlowState& state, double t);

struct Snapshot {
    model::FlowState state;
    double t = 0.0;
};
Snapshot read_snapshot(const std::string& path);

}  // namespace nserlx::io
