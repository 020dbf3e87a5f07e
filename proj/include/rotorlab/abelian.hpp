#pragma once

#include <deque>
#include <map>
#include <random>

#include "builders.hpp"
#include "core.hpp"
#include "rotor_config.hpp"
#include "walk.hpp"

namespace rotorlab {

// Finite rotor aggregation with absorbing sinks. Occupancy is a multiset;
// absorbed particles leave the system immediately.
struct SinkGraph {
    std::vector<std::vector<int>> out;  // cyclic out-edge order; unused for sinks
    std::vector<bool> sink;
    std::vector<int> rotor;
    std::vector<int> occupancy;
    std::vector<int64_t> absorbed;

    int size() const { return static_cast<int>(out.size()); }

    void init_state() {
        occupancy.assign(out.size(), 0);
        absorbed.assign(out.size(), 0);
    }

    int in_flight() const {
        int n = 0;
        for (int v = 0; v < size(); ++v)
            if (!sink[static_cast<size_t>(v)]) n += occupancy[static_cast<size_t>(v)];
        return n;
    }

    // Fire one particle at v: increment rotor, move along it. Returns target.
    int fire(int v) {
        auto i = static_cast<size_t>(v);
        if (sink[i] || occupancy[i] <= 0) throw std::logic_error("fired an unoccupied or sink vertex");
        rotor[i] = (rotor[i] + 1) % static_cast<int>(out[i].size());
        int t = out[i][static_cast<size_t>(rotor[i])];
        --occupancy[i];
        if (sink[static_cast<size_t>(t)])
            ++absorbed[static_cast<size_t>(t)];
        else
            ++occupancy[static_cast<size_t>(t)];
        return t;
    }

    bool all_sinks_reachable() const {
        std::vector<char> seen(out.size(), 0);
        std::deque<int> queue;
        for (int v = 0; v < size(); ++v)
            if (sink[static_cast<size_t>(v)]) {
                seen[static_cast<size_t>(v)] = 1;
                queue.push_back(v);
            }
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int u = 0; u < size(); ++u) {
                if (seen[static_cast<size_t>(u)] || sink[static_cast<size_t>(u)]) continue;
                for (int w : out[static_cast<size_t>(u)])
                    if (w == v) {
                        seen[static_cast<size_t>(u)] = 1;
                        queue.push_back(u);
                        break;
                    }
            }
        }
        for (char c : seen)
            if (!c) return false;
        return true;
    }
};

struct FiringOrder {
    enum class Kind { RoundRobin, Stack, Random, Script };
    Kind kind = Kind::RoundRobin;
    uint64_t seed = 0;
    std::vector<int> script;  // consumed first; round-robin afterwards

    static FiringOrder round_robin() { return {}; }
    static FiringOrder stack() { return {Kind::Stack, 0, {}}; }
    static FiringOrder random(uint64_t seed) { return {Kind::Random, seed, {}}; }
    static FiringOrder scripted(std::vector<int> s) { return {Kind::Script, 0, std::move(s)}; }
};

struct AbsorptionResult {
    std::vector<int> rotors;
    std::vector<int64_t> tally;
    uint64_t fires = 0;
    bool completed = false;
};

// Drive the given state to absorption under the firing order.
inline AbsorptionResult run_to_absorption(SinkGraph& g, const FiringOrder& order,
                                          uint64_t budget = default_budget()) {
    if (!g.all_sinks_reachable()) throw NoSinkReachable("some vertex cannot reach a sink");
    std::mt19937_64 rng(order.seed);
    std::vector<int> stack;
    size_t script_pos = 0;
    uint64_t fires = 0;
    int cursor = 0;
    auto occupied = [&](int v) {
        return !g.sink[static_cast<size_t>(v)] && g.occupancy[static_cast<size_t>(v)] > 0;
    };
    while (g.in_flight() > 0 && fires < budget) {
        int v = -1;
        switch (order.kind) {
            case FiringOrder::Kind::Script:
                if (script_pos < order.script.size()) {
                    v = order.script[script_pos++];
                    if (!occupied(v)) throw std::logic_error("script fires an unoccupied vertex");
                    break;
                }
                [[fallthrough]];
            case FiringOrder::Kind::RoundRobin:
                for (int i = 0; i < g.size(); ++i) {
                    int c = (cursor + i) % g.size();
                    if (occupied(c)) {
                        v = c;
                        break;
                    }
                }
                cursor = (v + 1) % g.size();
                break;
            case FiringOrder::Kind::Stack:
                while (!stack.empty() && !occupied(stack.back())) stack.pop_back();
                if (stack.empty())
                    for (int c = 0; c < g.size(); ++c)
                        if (occupied(c)) {
                            stack.push_back(c);
                            break;
                        }
                v = stack.back();
                break;
            case FiringOrder::Kind::Random: {
                std::vector<int> occ;
                for (int c = 0; c < g.size(); ++c)
                    if (occupied(c)) occ.push_back(c);
                v = occ[rng() % occ.size()];
                break;
            }
        }
        int t = g.fire(v);
        ++fires;
        if (order.kind == FiringOrder::Kind::Stack && occupied(t)) stack.push_back(t);
    }
    return {g.rotor, g.absorbed, fires, g.in_flight() == 0};
}

inline AbsorptionResult run_to_absorption(SinkGraph g, int n_particles, int source,
                                          const FiringOrder& order,
                                          uint64_t budget = default_budget()) {
    g.occupancy[static_cast<size_t>(source)] += n_particles;
    return run_to_absorption(g, order, budget);
}

// All maximal firing sequences from the current state reach the same rotors
// and tally (memoized DFS over reachable states).
inline bool abelian_exhaustive(const SinkGraph& start, uint64_t state_budget = 2'000'000) {
    using Key = std::vector<int>;
    auto key_of = [](const SinkGraph& g) {
        Key k = g.rotor;
        k.insert(k.end(), g.occupancy.begin(), g.occupancy.end());
        for (int64_t a : g.absorbed) k.push_back(static_cast<int>(a));
        return k;
    };
    std::map<Key, Key> terminal;  // state -> terminal key reached from it
    uint64_t visited = 0;
    std::optional<Key> result;

    std::function<Key(const SinkGraph&)> dfs = [&](const SinkGraph& g) -> Key {
        Key k = key_of(g);
        auto it = terminal.find(k);
        if (it != terminal.end()) return it->second;
        if (++visited > state_budget) throw std::runtime_error("abelian enumeration too large");
        if (g.in_flight() == 0) {
            terminal.emplace(k, k);
            return k;
        }
        std::optional<Key> local;
        for (int v = 0; v < g.size(); ++v) {
            if (g.sink[static_cast<size_t>(v)] || g.occupancy[static_cast<size_t>(v)] <= 0) continue;
            SinkGraph next = g;
            next.fire(v);
            Key t = dfs(next);
            if (!local)
                local = t;
            else if (*local != t)
                throw std::runtime_error("diverging terminal states");
        }
        terminal.emplace(std::move(k), *local);
        return terminal.find(key_of(g))->second;
    };
    try {
        Key t = dfs(start);
        (void)t;
        return true;
    } catch (const std::runtime_error& e) {
        if (std::string(e.what()) == "diverging terminal states") return false;
        throw;
    }
}

// Sink-split of the Theorem "T:dichotomy" proof: induced subgraph on S with
// outward edges redirected to a fresh sink z, and x split into emitter x_+
// and absorber x_-.
template <class M>
struct SplitResult {
    SinkGraph g;
    VMap<M, int> id_of;                  // S \ {x} -> vertex id
    std::vector<VertexOf<M>> vertex_of;  // inverse, indexed by id
    int x_plus = -1, x_minus = -1, z = -1;
};

template <class M>
SplitResult<M> sink_split(const M& mech, const RotorConfig<M>& cfg, const VSet<M>& s,
                          const VertexOf<M>& x) {
    if (!s.contains(x)) throw std::invalid_argument("x must lie in S");
    SplitResult<M> r;
    for (const auto& v : sorted_vertices<M>(s)) {
        if (v == x) continue;
        int id = static_cast<int>(r.vertex_of.size());
        r.id_of.emplace(v, id);
        r.vertex_of.push_back(v);
    }
    int m = static_cast<int>(r.vertex_of.size());
    r.x_plus = m;
    r.x_minus = m + 1;
    r.z = m + 2;

    SinkGraph& g = r.g;
    g.out.resize(static_cast<size_t>(m + 3));
    g.sink.assign(static_cast<size_t>(m + 3), false);
    g.sink[static_cast<size_t>(r.x_minus)] = true;
    g.sink[static_cast<size_t>(r.z)] = true;
    g.rotor.assign(static_cast<size_t>(m + 3), 0);

    auto map_target = [&](const VertexOf<M>& w) {
        if (w == x) return r.x_minus;
        auto it = r.id_of.find(w);
        return it != r.id_of.end() ? it->second : r.z;
    };
    for (int id = 0; id < m; ++id) {
        const auto& v = r.vertex_of[static_cast<size_t>(id)];
        for (const auto& w : mech.neighbors(v)) g.out[static_cast<size_t>(id)].push_back(map_target(w));
        g.rotor[static_cast<size_t>(id)] = cfg.index(v);
    }
    for (const auto& w : mech.neighbors(x))
        g.out[static_cast<size_t>(r.x_plus)].push_back(map_target(w));
    g.rotor[static_cast<size_t>(r.x_plus)] = cfg.index(x);
    g.init_state();
    return r;
}

struct DichotomyVerdict {
    bool pass = false;
    int visits = 0;
    std::string detail;
};

// Replay of the dichotomy proof: build S from the walk at x, split, run the
// proof's schedule, and check the y-particle tracks the direct walk from y
// step-for-step until m visits to x.
template <class M>
DichotomyVerdict dichotomy_harness(const M& mech, const RotorConfig<M>& cfg, const VertexOf<M>& x,
                                   const VertexOf<M>& y, int m,
                                   uint64_t budget = default_budget()) {
    DichotomyVerdict verdict;
    int dx = mech.degree(x);

    // S: vertices visited until d_x + m returns to x
    WalkState<M> sweep(mech, x, cfg.fork());
    for (int r = 0; r < dx + m; ++r) {
        if (run_until_return(sweep, x, budget).status != RunStatus::Returned) {
            verdict.detail = "budget exceeded collecting S";
            return verdict;
        }
    }
    VSet<M> s{x};
    for (const auto& [v, c] : sweep.entries)
        if (c > 0) s.insert(v);

    auto split = sink_split(mech, cfg, s, x);
    SinkGraph& g = split.g;
    g.occupancy[static_cast<size_t>(split.x_plus)] = dx + m;

    // d_x single steps: one particle to each neighbour, rotor back where it was
    int rotor_before = g.rotor[static_cast<size_t>(split.x_plus)];
    for (int i = 0; i < dx; ++i) g.fire(split.x_plus);
    if (g.rotor[static_cast<size_t>(split.x_plus)] != rotor_before) {
        verdict.detail = "x_+ rotor moved after a full rotation";
        return verdict;
    }

    if (m > 0) {
        auto yit = split.id_of.find(y);
        if (yit == split.id_of.end()) {
            verdict.detail = "y not in S";
            return verdict;
        }
        int fpos = yit->second;  // the tracked particle; firing fpos moves it

        WalkState<M> direct(mech, y, cfg.fork());
        while (verdict.visits < m) {
            if (direct.clock >= budget) {
                verdict.detail = "budget exceeded during replay";
                return verdict;
            }
            int t = g.fire(fpos);
            auto e = direct.step();
            if (t == split.z) {
                verdict.detail = "y-particle reached z before m visits";
                return verdict;
            }
            auto expected = (t == split.x_minus) ? x : split.vertex_of[static_cast<size_t>(t)];
            if (!(expected == e.head)) {
                verdict.detail = "trajectory mismatch between F and G";
                return verdict;
            }
            if (t == split.x_minus) {
                ++verdict.visits;
                if (verdict.visits >= m) break;
                if (g.occupancy[static_cast<size_t>(split.x_plus)] <= 0) {
                    verdict.detail = "no particle left at x_+ to continue";
                    return verdict;
                }
                fpos = split.x_plus;
            } else {
                fpos = t;
            }
        }
    }

    // flush everything else and check the tallies
    auto res = run_to_absorption(g, FiringOrder::round_robin(), budget);
    if (!res.completed) {
        verdict.detail = "budget exceeded flushing F";
        return verdict;
    }
    if (res.tally[static_cast<size_t>(split.x_minus)] != dx + m ||
        res.tally[static_cast<size_t>(split.z)] != 0) {
        verdict.detail = "absorption tally mismatch";
        return verdict;
    }
    verdict.pass = true;
    return verdict;
}

}  // namespace rotorlab
