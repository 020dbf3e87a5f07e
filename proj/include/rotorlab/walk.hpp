#pragma once

#include <cstdlib>
#include <optional>

#include "core.hpp"
#include "lattice.hpp"
#include "rotor_config.hpp"

namespace rotorlab {

constexpr uint64_t kDefaultBudget = 100'000'000;

inline uint64_t default_budget() {
    if (const char* env = std::getenv("ROTORLAB_BUDGET")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end != env && v > 0) return static_cast<uint64_t>(v);
    }
    return kDefaultBudget;
}

// Single-particle rotor walk over a private config overlay. An "entry" is an
// arrival via a step; the initial placement is origin_placed only.
template <class M>
struct WalkState {
    using V = VertexOf<M>;

    const M* mech;
    V particle;
    V origin;
    RotorConfig<M> overlay;
    uint64_t clock = 0;
    VMap<M, uint64_t> entries;
    VMap<M, uint64_t> emissions;
    EMap<M, uint64_t> ledger;

    WalkState(const M& m, V start, RotorConfig<M> cfg)
        : mech(&m), particle(start), origin(start), overlay(std::move(cfg)) {}

    // Where the next step will go (increment-then-move).
    V peek() const {
        const auto order = mech->neighbors(particle);
        int deg = static_cast<int>(order.size());
        return order[static_cast<size_t>((overlay.index(particle) + 1) % deg)];
    }

    EdgeOf<M> step() {
        const auto order = mech->neighbors(particle);
        int deg = static_cast<int>(order.size());
        int idx = (overlay.index(particle) + 1) % deg;
        overlay.set(particle, idx);
        V target = order[static_cast<size_t>(idx)];
        EdgeOf<M> e{particle, target};
        ++ledger[e];
        ++emissions[particle];
        ++entries[target];
        ++clock;
        particle = target;
        return e;
    }

    uint64_t entry_count(const V& x) const {
        auto it = entries.find(x);
        return it != entries.end() ? it->second : 0;
    }
};

enum class RunStatus { Returned, BudgetExceeded, Escaped };

struct RunResult {
    RunStatus status;
    uint64_t steps;
};

// Advance until the particle enters `target`, the budget runs out, or the
// escape predicate fires at the particle's position.
template <class M, class Escape = std::nullptr_t>
RunResult run_until_return(WalkState<M>& state, const VertexOf<M>& target, uint64_t budget,
                           Escape&& escape = nullptr) {
    for (uint64_t n = 0; n < budget; ++n) {
        if constexpr (!std::is_same_v<std::decay_t<Escape>, std::nullptr_t>) {
            if (escape(state.particle)) return {RunStatus::Escaped, n};
        }
        auto e = state.step();
        if (e.head == target) return {RunStatus::Returned, n + 1};
    }
    return {RunStatus::BudgetExceeded, budget};
}

template <class M>
struct EpochRecord {
    int k = 0;
    uint64_t t = 0;  // clock just before the (k+1)st traversal of a -> b
    VMap<M, uint64_t> entries;
    EMap<M, uint64_t> ledger;
    RotorConfig<M> config;
};

// Run from a until K+1 traversals of a -> b occur, where b is the first
// vertex the walk visits; snapshot the state just before each one.
template <class M>
std::optional<std::vector<EpochRecord<M>>> epoch_trace(WalkState<M>& state, int K,
                                                       uint64_t budget = default_budget()) {
    const auto a = state.particle;
    const auto b = state.peek();
    std::vector<EpochRecord<M>> records;
    int traversals = 0;
    while (static_cast<int>(records.size()) <= K) {
        if (state.particle == a && state.peek() == b && traversals == static_cast<int>(records.size()))
            records.push_back({traversals, state.clock, state.entries, state.ledger, state.overlay});
        if (static_cast<int>(records.size()) > K) break;
        if (state.clock >= budget) return std::nullopt;
        auto e = state.step();
        if (e.tail == a && e.head == b) ++traversals;
    }
    return records;
}

struct EscapeRow {
    uint64_t visits;   // n: visits to the origin so far
    uint64_t escapes;  // cumulative escapes declared before the nth visit
};

// Open-question experiment: walk on a lattice, declare an escape when the
// particle reaches ℓ∞ radius R, restart it at the origin with rotors kept.
// Restart placements count as visits; the initial placement does not.
inline std::vector<EscapeRow> escape_experiment(const LatticeZd& mech,
                                                const RotorConfig<LatticeZd>& cfg, int R,
                                                uint64_t N, uint64_t budget = default_budget()) {
    WalkState<LatticeZd> state(mech, zd_origin(), cfg.fork());
    std::vector<EscapeRow> rows{{0, 0}};
    uint64_t visits = 0, escapes = 0;
    while (visits < N && state.clock < budget) {
        if (linf(state.particle) >= R) {
            ++escapes;
            state.particle = zd_origin();
            rows.push_back({++visits, escapes});
            continue;
        }
        state.step();
        if (state.particle == zd_origin()) rows.push_back({++visits, escapes});
    }
    return rows;
}

}  // namespace rotorlab
