#pragma once

#include <deque>

#include "builders.hpp"
#include "core.hpp"
#include "graph_ops.hpp"
#include "rotor_config.hpp"

namespace rotorlab {

// True iff every y in ∂S, stepping from its current rotor index, emits to all
// of its S-neighbours before any other neighbour.
template <class M>
bool is_reflecting(const M& mech, const RotorConfig<M>& cfg, const VSet<M>& s) {
    for (const auto& y : outer_boundary(mech, s)) {
        const auto order = mech.neighbors(y);
        int deg = static_cast<int>(order.size());
        int in_s = 0;
        for (const auto& n : order)
            if (s.contains(n)) ++in_s;
        if (in_s == deg) continue;
        int idx = cfg.index(y);
        for (int k = 1; k <= in_s; ++k)
            if (!s.contains(order[static_cast<size_t>((idx + k) % deg)])) return false;
    }
    return true;
}

// True iff the rotors of S form a functional graph inside S with exactly one
// directed cycle, that cycle passes through root, and everything reaches it.
template <class M>
bool is_unicycle(const M& mech, const RotorConfig<M>& cfg, const VSet<M>& s,
                 const VertexOf<M>& root) {
    if (!s.contains(root)) return false;
    auto target = [&](const VertexOf<M>& x) {
        return mech.neighbors(x)[static_cast<size_t>(cfg.index(x))];
    };
    VMap<M, int> state;  // 0 absent: unvisited, 1: on current path, 2: done
    int cycles = 0;
    bool root_on_cycle = false;
    for (const auto& start : s) {
        if (state.contains(start)) continue;
        std::vector<VertexOf<M>> path;
        auto x = start;
        while (true) {
            auto it = state.find(x);
            if (it != state.end()) {
                if (it->second == 1) {
                    // new cycle: the path suffix starting at x
                    ++cycles;
                    if (cycles > 1) return false;
                    bool in_cycle = false;
                    for (const auto& p : path) {
                        if (p == x) in_cycle = true;
                        if (in_cycle && p == root) root_on_cycle = true;
                    }
                }
                break;
            }
            state[x] = 1;
            path.push_back(x);
            auto t = target(x);
            if (!s.contains(t)) return false;
            x = t;
        }
        for (const auto& p : path) state[p] = 2;
    }
    return cycles == 1 && root_on_cycle;
}

// Pincerless: each x in ∂S has all neighbours in S, or its S-neighbours form
// one contiguous arc of its rotation order.
inline bool is_pincerless(const PlanarRotation& mech, const VSet<PlanarRotation>& s) {
    for (int x : outer_boundary(mech, s)) {
        const auto& rot = mech.rotation(x);
        int deg = static_cast<int>(rot.size());
        std::vector<bool> in_s(rot.size());
        int count = 0;
        for (int p = 0; p < deg; ++p)
            if ((in_s[static_cast<size_t>(p)] = s.contains(rot[static_cast<size_t>(p)]))) ++count;
        if (count == deg) continue;
        int starts = 0;
        for (int p = 0; p < deg; ++p)
            if (in_s[static_cast<size_t>(p)] && !in_s[static_cast<size_t>((p - 1 + deg) % deg)])
                ++starts;
        if (starts != 1) return false;
    }
    return true;
}

namespace detail {

// Component of `start` in the graph minus `blocked`.
template <class M>
VSet<M> component_of(const M& mech, const VertexOf<M>& start, const VSet<M>& blocked) {
    VSet<M> comp{start};
    std::deque<VertexOf<M>> queue{start};
    while (!queue.empty()) {
        auto u = queue.front();
        queue.pop_front();
        for (const auto& w : mech.neighbors(u))
            if (!blocked.contains(w) && comp.insert(w).second) queue.push_back(w);
    }
    return comp;
}

// Grow A until it induces a connected subgraph, joining components along
// shortest paths through the ambient graph.
template <class M>
void make_connected(const M& mech, VSet<M>& a) {
    while (true) {
        auto seed = *std::min_element(a.begin(), a.end());
        VSet<M> reached{seed};
        std::deque<VertexOf<M>> queue{seed};
        while (!queue.empty()) {
            auto u = queue.front();
            queue.pop_front();
            for (const auto& w : mech.neighbors(u))
                if (a.contains(w) && reached.insert(w).second) queue.push_back(w);
        }
        if (reached.size() == a.size()) return;
        // BFS from the reached part through the whole graph to the nearest
        // vertex of another component; absorb the connecting path.
        VMap<M, VertexOf<M>> parent;
        VSet<M> seen = reached;
        std::deque<VertexOf<M>> q2(reached.begin(), reached.end());
        bool joined = false;
        while (!q2.empty() && !joined) {
            auto u = q2.front();
            q2.pop_front();
            for (const auto& w : mech.neighbors(u)) {
                if (!seen.insert(w).second) continue;
                parent.emplace(w, u);
                if (a.contains(w) && !reached.contains(w)) {
                    auto v = u;
                    while (!a.contains(v)) {
                        a.insert(v);
                        v = parent.at(v);
                    }
                    joined = true;
                    break;
                }
                q2.push_back(w);
            }
        }
        if (!joined) throw std::runtime_error("ambient graph is disconnected");
    }
}

}  // namespace detail

// Enlarge A to a finite pincerless superset B. Vertices of `infinite_marker`
// stand in for "connected to infinity": a component of the complement is
// treated as infinite iff it touches the marker. For each x in ∂A the minimal
// rotation interval J_x containing all A-neighbours and no I-neighbours is
// located, and the finite components met by F-neighbours inside J_x are
// absorbed.
inline VSet<PlanarRotation> pincerless_hull(const PlanarRotation& mech, VSet<PlanarRotation> a,
                                            const VSet<PlanarRotation>& infinite_marker) {
    if (a.empty()) return a;
    detail::make_connected(mech, a);
    for (int v : a)
        if (infinite_marker.contains(v)) throw TruncationTooSmall("A touches the marker region");

    VSet<PlanarRotation> b = a;
    for (int x : sorted_vertices<PlanarRotation>(outer_boundary(mech, a))) {
        const auto& rot = mech.rotation(x);
        int deg = static_cast<int>(rot.size());

        VSet<PlanarRotation> blocked = a;
        blocked.insert(x);
        enum Kind { A, F, I };
        std::vector<Kind> kind(rot.size());
        std::vector<VSet<PlanarRotation>> comp(rot.size());
        for (int p = 0; p < deg; ++p) {
            int n = rot[static_cast<size_t>(p)];
            if (a.contains(n)) {
                kind[static_cast<size_t>(p)] = A;
                continue;
            }
            comp[static_cast<size_t>(p)] = detail::component_of(mech, n, blocked);
            bool infinite = false;
            for (int v : comp[static_cast<size_t>(p)])
                if (infinite_marker.contains(v)) {
                    infinite = true;
                    break;
                }
            kind[static_cast<size_t>(p)] = infinite ? I : F;
        }

        bool has_i = false;
        for (auto k : kind) has_i |= (k == I);
        int lo = 0, hi = deg - 1;  // J_x as positions lo..hi within one I-free arc
        if (has_i) {
            bool found = false;
            for (int s = 0; s < deg && !found; ++s) {
                // arc starting just after an I at position s-1
                if (kind[static_cast<size_t>((s - 1 + deg) % deg)] != I) continue;
                int len = 0;
                while (len < deg && kind[static_cast<size_t>((s + len) % deg)] != I) ++len;
                int first_a = -1, last_a = -1, a_in = 0, a_total = 0;
                for (auto k : kind) a_total += (k == A);
                for (int t = 0; t < len; ++t)
                    if (kind[static_cast<size_t>((s + t) % deg)] == A) {
                        if (first_a < 0) first_a = t;
                        last_a = t;
                        ++a_in;
                    }
                if (a_in == a_total && a_total > 0) {
                    lo = s + first_a;
                    hi = s + last_a;
                    found = true;
                }
            }
            if (!found)
                throw std::logic_error("A- and I-neighbours alternate; input is not a planar embedding");
        }
        for (int t = lo; t <= hi; ++t) {
            int p = ((t % deg) + deg) % deg;
            if (kind[static_cast<size_t>(p)] == F)
                for (int v : comp[static_cast<size_t>(p)]) b.insert(v);
        }
    }
    for (int v : b)
        if (infinite_marker.contains(v)) throw TruncationTooSmall("hull reaches the marker region");
    return b;
}

// Shell recursion for embedded planar graphs: S_{i+1} is a pincerless
// superset of S_i ∪ ∂S_i.
inline ShellFamily<PlanarRotation> planar_shells(const PlanarRotation& mech,
                                                 VSet<PlanarRotation> s0, int K,
                                                 const VSet<PlanarRotation>& infinite_marker) {
    ShellFamily<PlanarRotation> fam;
    fam.sets.push_back(s0);
    for (int i = 0; i < K; ++i) {
        VSet<PlanarRotation> grown = fam.sets.back();
        for (int v : outer_boundary(mech, fam.sets.back())) grown.insert(v);
        fam.sets.push_back(pincerless_hull(mech, std::move(grown), infinite_marker));
    }
    return fam;
}

}  // namespace rotorlab
