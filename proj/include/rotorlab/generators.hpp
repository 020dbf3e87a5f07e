#pragma once

#include <cmath>
#include <random>

#include "abelian.hpp"
#include "core.hpp"
#include "explicit_graph.hpp"
#include "rotor_config.hpp"

namespace rotorlab {

inline int rand_below(std::mt19937_64& rng, int n) { return static_cast<int>(rng() % static_cast<uint64_t>(n)); }

// Random spanning tree plus extra edges, neighbour lists shuffled into
// random cyclic orders.
inline ExplicitGraph random_connected_graph(int n, int extra_edges, std::mt19937_64& rng) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    auto connected = [&](int a, int b) {
        for (int w : adj[static_cast<size_t>(a)])
            if (w == b) return true;
        return false;
    };
    auto add_edge = [&](int a, int b) {
        adj[static_cast<size_t>(a)].push_back(b);
        adj[static_cast<size_t>(b)].push_back(a);
    };
    for (int v = 1; v < n; ++v) add_edge(v, rand_below(rng, v));
    for (int i = 0; i < extra_edges; ++i) {
        int a = rand_below(rng, n), b = rand_below(rng, n);
        if (a != b && !connected(a, b)) add_edge(a, b);
    }
    for (auto& nb : adj) std::shuffle(nb.begin(), nb.end(), rng);
    return ExplicitGraph(std::move(adj));
}

template <class M>
RotorConfig<M> random_config_on(const M& mech, const std::vector<VertexOf<M>>& vertices,
                                std::mt19937_64& rng) {
    RotorConfig<M> cfg;
    for (const auto& v : vertices) cfg.set(v, rand_below(rng, mech.degree(v)));
    return cfg;
}

// (n+1) x (n+1) grid with one random diagonal per unit cell; every interior
// face is a triangle. Rotation orders come from the straight-line embedding
// (neighbours sorted by angle). `boundary` is the outer ring, used as the
// infinite-component marker for truncation arguments.
struct TriangulatedGrid {
    PlanarRotation g;
    int n = 0;
    VSet<PlanarRotation> boundary;

    int id(int i, int j) const { return i * (n + 1) + j; }
    std::pair<int, int> coords(int v) const { return {v / (n + 1), v % (n + 1)}; }
};

inline TriangulatedGrid random_triangulated_grid(int n, std::mt19937_64& rng) {
    TriangulatedGrid tg;
    tg.n = n;
    int side = n + 1;
    auto id = [side](int i, int j) { return i * side + j; };
    std::vector<std::vector<std::pair<int, int>>> nbr(static_cast<size_t>(side * side));
    auto add_edge = [&](int i1, int j1, int i2, int j2) {
        nbr[static_cast<size_t>(id(i1, j1))].push_back({i2 - i1, j2 - j1});
        nbr[static_cast<size_t>(id(i2, j2))].push_back({i1 - i2, j1 - j2});
    };
    for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j) {
            if (i + 1 < side) add_edge(i, j, i + 1, j);
            if (j + 1 < side) add_edge(i, j, i, j + 1);
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (rng() & 1)
                add_edge(i, j, i + 1, j + 1);
            else
                add_edge(i + 1, j, i, j + 1);
        }
    std::vector<std::vector<int>> rotation(static_cast<size_t>(side * side));
    for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j) {
            auto& dirs = nbr[static_cast<size_t>(id(i, j))];
            std::sort(dirs.begin(), dirs.end(), [](auto a, auto b) {
                return std::atan2(a.second, a.first) < std::atan2(b.second, b.first);
            });
            for (auto [di, dj] : dirs)
                rotation[static_cast<size_t>(id(i, j))].push_back(id(i + di, j + dj));
        }
    tg.g = PlanarRotation(std::move(rotation), {});
    for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j)
            if (i == 0 || j == 0 || i == n || j == n) tg.boundary.insert(id(i, j));
    return tg;
}

inline void randomize_orientations(PlanarRotation& g, std::mt19937_64& rng) {
    for (int v = 0; v < g.size(); ++v)
        g.set_orientation(v, (rng() & 1) ? PlanarRotation::Orient::CW : PlanarRotation::Orient::CCW);
}

// Small random sink graph for abelian enumeration: a random connected graph
// with both directed edges per undirected edge, some vertices turned into
// sinks, random rotors.
inline SinkGraph random_sink_graph(int n, int n_sinks, std::mt19937_64& rng) {
    ExplicitGraph base = random_connected_graph(n, rand_below(rng, n), rng);
    SinkGraph g;
    g.out.resize(static_cast<size_t>(n));
    g.sink.assign(static_cast<size_t>(n), false);
    g.rotor.assign(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        g.out[static_cast<size_t>(v)] = base.neighbors(v);
        g.rotor[static_cast<size_t>(v)] = rand_below(rng, base.degree(v));
    }
    int placed = 0;
    while (placed < n_sinks) {
        int v = rand_below(rng, n);
        if (!g.sink[static_cast<size_t>(v)]) {
            g.sink[static_cast<size_t>(v)] = true;
            ++placed;
        }
    }
    g.init_state();
    return g;
}

}  // namespace rotorlab
