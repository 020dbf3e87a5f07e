#pragma once

#include <deque>

#include "core.hpp"

namespace rotorlab {

// ∂S: vertices outside S with at least one neighbour in S.
template <class M>
VSet<M> outer_boundary(const M& mech, const VSet<M>& s) {
    VSet<M> out;
    for (const auto& x : s)
        for (const auto& y : mech.neighbors(x))
            if (!s.contains(y)) out.insert(y);
    return out;
}

// Closed ℓ_graph ball; BFS order is fixed by the cyclic neighbour orders.
template <class M>
VSet<M> ball(const M& mech, const VertexOf<M>& center, int radius) {
    VSet<M> seen{center};
    std::deque<std::pair<VertexOf<M>, int>> queue{{center, 0}};
    while (!queue.empty()) {
        auto [x, dist] = queue.front();
        queue.pop_front();
        if (dist == radius) continue;
        for (const auto& y : mech.neighbors(x))
            if (seen.insert(y).second) queue.emplace_back(y, dist + 1);
    }
    return seen;
}

}  // namespace rotorlab
