#pragma once

#include <deque>
#include <sstream>

#include "core.hpp"
#include "graph_ops.hpp"
#include "lattice.hpp"
#include "rotor_config.hpp"

namespace rotorlab {

template <class V>
int position_of(const std::vector<V>& order, const V& y) {
    for (size_t i = 0; i < order.size(); ++i)
        if (order[i] == y) return static_cast<int>(i);
    throw UnknownVertex("target not a neighbour");
}

template <class M>
std::vector<VertexOf<M>> sorted_vertices(const VSet<M>& s) {
    std::vector<VertexOf<M>> v(s.begin(), s.end());
    std::sort(v.begin(), v.end());
    return v;
}

// Increasing finite vertex sets S_0 ⊆ S_1 ⊆ ... with S_i ∪ ∂S_i ⊆ S_{i+1}.
template <class M>
struct ShellFamily {
    std::vector<VSet<M>> sets;

    void validate(const M& mech) const {
        for (size_t i = 0; i + 1 < sets.size(); ++i) {
            const VSet<M>& next = sets[i + 1];
            for (const auto& x : sets[i])
                if (!next.contains(x)) throw std::invalid_argument("shell family: S_i not in S_{i+1}");
            for (const auto& x : outer_boundary(mech, sets[i]))
                if (!next.contains(x))
                    throw std::invalid_argument("shell family: boundary of S_i not in S_{i+1}");
        }
    }
};

// S_i = [-i,i]^d, i = 0..K.
inline ShellFamily<LatticeZd> cube_shells(const LatticeZd& mech, int K) {
    ShellFamily<LatticeZd> fam;
    int d = mech.dim();
    for (int i = 0; i <= K; ++i) {
        VSet<LatticeZd> s;
        std::vector<int> idx(static_cast<size_t>(d), -i);
        while (true) {
            Coord c{};
            for (int j = 0; j < d; ++j) c[j] = idx[static_cast<size_t>(j)];
            s.insert(c);
            int j = 0;
            while (j < d && idx[static_cast<size_t>(j)] == i) idx[static_cast<size_t>(j++)] = -i;
            if (j == d) break;
            ++idx[static_cast<size_t>(j)];
        }
        fam.sets.push_back(std::move(s));
    }
    return fam;
}

inline std::string template_id(const LatticeZd& mech) {
    std::ostringstream os;
    for (size_t k = 0; k < mech.order_template().size(); ++k) {
        const Coord& dv = mech.order_template()[k];
        for (int i = 0; i < mech.dim(); ++i)
            if (dv[i] != 0) os << (k ? "," : "") << (dv[i] > 0 ? "+" : "-") << (i + 1);
    }
    return os.str();
}

// The explicit recurrent family on Z^d. Stored as a pure rule, so the config
// covers the whole lattice without materializing anything.
//
// alpha(x)=1: the maximal coordinate is unique, so exactly one neighbour is
// closer to the origin in ℓ∞; the rotor is set to emit to it NEXT.
// alpha(x)=0, x!=0: no neighbour has strictly smaller ℓ∞ norm; the rotor
// points (currently) at the first neighbour in cyclic order that decreases a
// maximal coordinate, which makes each shell's interior layer a forest
// directed towards the inner shell and its boundary.
// x=0: rotor set so the first emission is +e1.
inline RotorConfig<LatticeZd> build_zd_explicit(const LatticeZd& mech) {
    int d = mech.dim();
    auto rule = [mech, d](const Coord& x) -> int {
        auto nb = mech.neighbors(x);
        int deg = static_cast<int>(nb.size());
        if (x == zd_origin()) {
            int p = position_of(nb, unit(0, +1));
            return (p - 1 + deg) % deg;
        }
        if (alpha(x, d) == 1) {
            int j = 0;
            for (int i = 1; i < d; ++i)
                if (std::abs(x[i]) > std::abs(x[j])) j = i;
            Coord y = add(x, unit(j, x[j] > 0 ? -1 : +1));
            int p = position_of(nb, y);
            return (p - 1 + deg) % deg;
        }
        int m = linf(x);
        for (int p = 0; p < deg; ++p) {
            const Coord& y = nb[static_cast<size_t>(p)];
            for (int i = 0; i < d; ++i)
                if (std::abs(x[i]) == m && std::abs(y[i]) < m) return p;
        }
        throw std::logic_error("no inward neighbour");  // unreachable for x != 0
    };
    std::ostringstream id;
    id << "zd_explicit d=" << d << " template=" << template_id(mech);
    return RotorConfig<LatticeZd>(rule, id.str());
}

// All rotors point East; with the E,N,W,S template an increment rotates
// anticlockwise. The transient example of the escape experiment.
inline RotorConfig<LatticeZd> build_east_ccw(const LatticeZd& mech) {
    auto rule = [mech](const Coord& x) { return position_of(mech.neighbors(x), add(x, unit(0, +1))); };
    return RotorConfig<LatticeZd>(rule, "east_ccw");
}

inline RotorConfig<LatticeZd>::Rule lattice_rule_from_id(const LatticeZd& mech,
                                                         const std::string& id) {
    std::istringstream is(id);
    std::string head;
    is >> head;
    if (head == "fixed") {
        int k = 0;
        is >> k;
        return [k](const Coord&) { return k; };
    }
    if (head == "zd_explicit") return build_zd_explicit(mech).rule();
    if (head == "east_ccw") return build_east_ccw(mech).rule();
    throw ParseError("unknown default rule `" + id + "`");
}

template <class M>
typename RotorConfig<M>::Rule explicit_rule_from_id(const M&, const std::string& id) {
    std::istringstream is(id);
    std::string head;
    is >> head;
    if (head == "fixed") {
        int k = 0;
        is >> k;
        return [k](const typename M::vertex_type&) { return k; };
    }
    throw ParseError("unknown default rule `" + id + "`");
}

// For every shell S_i and every y in ∂S_i, aim the rotor so that the next
// emissions sweep all of y's S_i-neighbours before any other neighbour.
// Requires the S_i-neighbour positions to be cyclically contiguous.
template <class M>
RotorConfig<M> build_reflecting_shells(const M& mech, const ShellFamily<M>& family,
                                       RotorConfig<M> cfg = {}) {
    VSet<M> assigned;
    for (const VSet<M>& s : family.sets) {
        for (const auto& y : sorted_vertices<M>(outer_boundary(mech, s))) {
            if (!assigned.insert(y).second)
                throw std::invalid_argument("shell boundaries are not disjoint");
            const auto order = mech.neighbors(y);
            int deg = static_cast<int>(order.size());
            std::vector<bool> in_s(order.size());
            int count = 0;
            for (int p = 0; p < deg; ++p)
                if ((in_s[static_cast<size_t>(p)] = s.contains(order[static_cast<size_t>(p)]))) ++count;
            if (count == deg) continue;  // any rotor reflects trivially
            int run_start = -1, starts = 0;
            for (int p = 0; p < deg; ++p)
                if (in_s[static_cast<size_t>(p)] && !in_s[static_cast<size_t>((p - 1 + deg) % deg)]) {
                    run_start = p;
                    ++starts;
                }
            if (starts != 1)
                throw NonReflectable("S-neighbours not contiguous in cyclic order");
            cfg.set(y, (run_start - 1 + deg) % deg);
        }
    }
    return cfg;
}

// Aim each rotor of S_{i+1} \ (S_i ∪ ∂S_i) at its BFS parent, so the gap
// layer forms a forest directed towards S_i ∪ ∂S_i.
template <class M>
RotorConfig<M> build_forest_fill(const M& mech, const ShellFamily<M>& family, RotorConfig<M> cfg) {
    for (size_t i = 0; i + 1 < family.sets.size(); ++i) {
        VSet<M> target = family.sets[i];
        for (const auto& b : outer_boundary(mech, family.sets[i])) target.insert(b);
        const VSet<M>& next = family.sets[i + 1];
        VSet<M> gap;
        for (const auto& v : next)
            if (!target.contains(v)) gap.insert(v);
        if (gap.empty()) continue;

        std::deque<VertexOf<M>> queue;
        for (const auto& v : sorted_vertices<M>(target)) queue.push_back(v);
        VMap<M, VertexOf<M>> parent;
        while (!queue.empty()) {
            auto u = queue.front();
            queue.pop_front();
            for (const auto& w : mech.neighbors(u))
                if (gap.contains(w) && !parent.contains(w)) {
                    parent.emplace(w, u);
                    queue.push_back(w);
                }
        }
        for (const auto& v : gap) {
            auto it = parent.find(v);
            if (it == parent.end())
                throw std::runtime_error("gap layer vertex cannot reach the inner shell");
            cfg.set(v, position_of(mech.neighbors(v), it->second));
        }
    }
    return cfg;
}

}  // namespace rotorlab
