#pragma once

#include <ostream>

#include "abelian.hpp"
#include "verify.hpp"
#include "walk.hpp"

namespace rotorlab {

// Sparse triplet heatmap: one row per entered vertex, coordinates then count.
inline void write_heatmap_csv(std::ostream& os, const LatticeZd& mech,
                              const VMap<LatticeZd, uint64_t>& entries) {
    int d = mech.dim();
    for (int i = 0; i < d; ++i) os << "x" << (i + 1) << ",";
    os << "count\n";
    std::vector<std::pair<Coord, uint64_t>> rows(entries.begin(), entries.end());
    std::sort(rows.begin(), rows.end());
    for (const auto& [x, c] : rows) {
        for (int i = 0; i < d; ++i) os << x[i] << ",";
        os << c << "\n";
    }
}

// Quick-look raster for d=2: entry counts over [-radius, radius]^2, scaled
// to 8-bit grey.
inline void write_heatmap_pgm(std::ostream& os, const VMap<LatticeZd, uint64_t>& entries,
                              int radius) {
    int side = 2 * radius + 1;
    uint64_t peak = 1;
    for (const auto& [x, c] : entries)
        if (linf(x) <= radius) peak = std::max(peak, c);
    os << "P2\n" << side << " " << side << "\n255\n";
    for (int y = radius; y >= -radius; --y) {
        for (int x = -radius; x <= radius; ++x) {
            Coord c{};
            c[0] = x;
            c[1] = y;
            auto it = entries.find(c);
            uint64_t v = it != entries.end() ? it->second : 0;
            os << (x > -radius ? " " : "") << (255 * v) / peak;
        }
        os << "\n";
    }
}

inline void write_escape_csv(std::ostream& os, int r1, const std::vector<EscapeRow>& a, int r2,
                             const std::vector<EscapeRow>& b) {
    os << "n,escapes_r" << r1 << ",escapes_r" << r2 << "\n";
    size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i)
        os << a[i].visits << "," << a[i].escapes << "," << b[i].escapes << "\n";
}

inline void write_epochs_csv(std::ostream& os, const LatticeZd& mech,
                             const std::vector<EpochRecord<LatticeZd>>& trace) {
    int d = mech.dim();
    os << "k,t_k,";
    for (int i = 0; i < d; ++i) os << "x" << (i + 1) << ",";
    os << "entries\n";
    for (const auto& rec : trace) {
        std::vector<std::pair<Coord, uint64_t>> rows(rec.entries.begin(), rec.entries.end());
        std::sort(rows.begin(), rows.end());
        for (const auto& [x, c] : rows) {
            os << rec.k << "," << rec.t << ",";
            for (int i = 0; i < d; ++i) os << x[i] << ",";
            os << c << "\n";
        }
    }
}

inline void write_verdicts_csv(std::ostream& os, const std::vector<Verdict>& verdicts) {
    os << "name,params,pass,witness,note\n";
    for (const auto& v : verdicts)
        os << v.name << "," << v.params << "," << (v.pass ? 1 : 0) << "," << v.witness << ","
           << v.note << "\n";
}

// Mirrors the explicit graph format, plus `sink <id>` and `rotor <id> <idx>`.
inline void save_sink_graph(std::ostream& os, const SinkGraph& g) {
    os << "graph " << g.size() << "\n";
    for (int x = 0; x < g.size(); ++x) {
        os << "v " << x << " :";
        for (int y : g.out[static_cast<size_t>(x)]) os << " " << y;
        os << "\n";
    }
    for (int x = 0; x < g.size(); ++x)
        if (g.sink[static_cast<size_t>(x)]) os << "sink " << x << "\n";
    for (int x = 0; x < g.size(); ++x)
        if (!g.sink[static_cast<size_t>(x)]) os << "rotor " << x << " " << g.rotor[static_cast<size_t>(x)] << "\n";
}

}  // namespace rotorlab
