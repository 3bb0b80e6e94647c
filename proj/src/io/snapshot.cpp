#include "nserlx/io/snapshot.hpp"

#include <cstring>
#include <fstream>

namespace nserlx::io {

namespace {
constexpr char kMagic[8] = {'N', 'S', 'E', 'R', 'L', 'X', '1', '\0'};

void write_field(std::ofstream& out, const SpectralField& f) {
    std::vector<float> buf(f.size() * 2);
    for (std::size_t s = 0; s < f.size(); ++s) {
        buf[2 * s] = static_cast<float>(f.c[s].real());
        buf[2 * s + 1] = static_cast<float>(f.c[s].imag());
    }
    out.write(reinterpret_cast<const char*>(buf.data()),
              static_cast<std::streamsize>(buf.size() * sizeof(float)));
}

void read_field(std::ifstream& in, SpectralField& f) {
    std::vector<float> buf(f.size() * 2);
    in.read(reinterpret_cast<char*>(buf.data()),
            static_cast<std::streamsize>(buf.size() * sizeof(float)));
    for (std::size_t s = 0; s < f.size(); ++s)
        f.c[s] = cplx(buf[2 * s], buf[2 * s + 1]);
}
}  // namespace

void write_snapshot(const std::string& path, const model::FlowState& state, double t) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DomainError("cannot write snapshot '" + path + "'");
    out.write(kMagic, 8);
    uint32_t d = static_cast<uint32_t>(state.grid.d);
    uint32_t n = static_cast<uint32_t>(state.grid.N);
    double L = state.grid.L;
    out.write(reinterpret_cast<const char*>(&d), 4);
    out.write(reinterpret_cast<const char*>(&n), 4);
    out.write(reinterpret_cast<const char*>(&L), 8);
    out.write(reinterpret_cast<const char*>(&t), 8);
    write_field(out, state.a);
    for (const auto& f : state.u) write_field(out, f);
    write_field(out, state.b);
    for (const auto& f : state.w) write_field(out, f);
    if (!out) throw DomainError("short write on snapshot '" + path + "'");
}

Snapshot read_snapshot(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open snapshot '" + path + "'");
    char magic[8];
    in.read(magic, 8);
    if (!in || std::memcmp(magic, kMagic, 8) != 0)
        throw DomainError("'" + path + "' is not a NSERLX1 snapshot");
    uint32_t d = 0, n = 0;
    double L = 0.0, t = 0.0;
    in.read(reinterpret_cast<char*>(&d), 4);
    in.read(reinterpret_cast<char*>(&n), 4);
    in.read(reinterpret_cast<char*>(&L), 8);
    in.read(reinterpret_cast<char*>(&t), 8);
    Snapshot snap;
    snap.t = t;
    snap.state = model::FlowState(Grid(static_cast<int>(d), static_cast<int>(n), L));
    read_field(in, snap.state.a);
    for (auto& f : snap.state.u) read_field(in, f);
    read_field(in, snap.state.b);
    for (auto& f : snap.state.w) read_field(in, f);
    if (!in) throw DomainError("snapshot '" + path + "' is truncated");
    Transformer fft(snap.state.grid);
    snap.state.sync_physical(fft);
    return snap;
}

}  // namespace nserlx::io
