#pragma once

#include <algorithm>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

#include "core.hpp"
#include "lattice.hpp"

namespace rotorlab {

// Sparse rotor configuration. Stored indices are the CURRENT pointing of a
// rotor; absent vertices fall back to a deterministic default rule. Reads
// never touch the map, so forks share nothing after copy.
template <class M>
class RotorConfig {
public:
    using V = VertexOf<M>;
    using Rule = std::function<int(const V&)>;

    RotorConfig() : rule_([](const V&) { return 0; }), rule_id_("fixed 0") {}
    RotorConfig(Rule rule, std::string rule_id)
        : rule_(std::move(rule)), rule_id_(std::move(rule_id)) {}

    int index(const V& x) const {
        auto it = map_.find(x);
        return it != map_.end() ? it->second : rule_(x);
    }

    void set(const V& x, int i) { map_[x] = i; }
    bool stored(const V& x) const { return map_.contains(x); }
    const VMap<M, int>& overrides() const { return map_; }
    const std::string& rule_id() const { return rule_id_; }
    const Rule& rule() const { return rule_; }

    RotorConfig fork() const { return *this; }

    friend bool operator==(const RotorConfig& a, const RotorConfig& b) {
        if (a.rule_id_ != b.rule_id_) return false;
        // compare effective indices on the union of stored vertices
        for (const auto& [v, i] : a.map_)
            if (b.index(v) != i) return false;
        for (const auto& [v, i] : b.map_)
            if (a.index(v) != i) return false;
        return true;
    }

private:
    Rule rule_;
    std::string rule_id_;
    VMap<M, int> map_;
};

namespace detail {

inline void print_vertex(std::ostream& os, const Coord& x, int d) {
    for (int i = 0; i < d; ++i) os << (i ? " " : "") << x[i];
}
inline void print_vertex(std::ostream& os, int x, int) { os << x; }

inline bool read_vertex(std::istringstream& ls, Coord& x, int d) {
    for (int i = 0; i < d; ++i)
        if (!(ls >> x[i])) return false;
    return true;
}
inline bool read_vertex(std::istringstream& ls, int& x, int) { return static_cast<bool>(ls >> x); }

template <class M>
int vertex_dim(const M&) {
    return 1;
}
inline int vertex_dim(const LatticeZd& m) { return m.dim(); }

}  // namespace detail

// Text format: header `default <rule id>`, then sorted `r <vertex> <index>`
// lines. Round-trips bit-exactly.
template <class M>
void save_config(std::ostream& os, const M& mech, const RotorConfig<M>& cfg) {
    os << "default " << cfg.rule_id() << "\n";
    std::vector<std::pair<VertexOf<M>, int>> rows(cfg.overrides().begin(), cfg.overrides().end());
    std::sort(rows.begin(), rows.end());
    int d = detail::vertex_dim(mech);
    for (const auto& [v, i] : rows) {
        os << "r ";
        detail::print_vertex(os, v, d);
        os << " " << i << "\n";
    }
}

// `resolve` maps a rule id string to the default rule; pass
// default_rule_from_id (builders.hpp) for the built-in ids.
template <class M>
RotorConfig<M> load_config(
    std::istream& is, const M& mech,
    const std::function<typename RotorConfig<M>::Rule(const std::string&)>& resolve) {
    std::string line;
    int lineno = 0;
    RotorConfig<M> cfg;
    bool have_header = false;
    int d = detail::vertex_dim(mech);
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        auto fail = [&](const std::string& msg) {
            throw ParseError("line " + std::to_string(lineno) + ": " + msg);
        };
        if (tok == "default") {
            std::string id;
            std::getline(ls, id);
            if (!id.empty() && id[0] == ' ') id.erase(0, 1);
            cfg = RotorConfig<M>(resolve(id), id);
            have_header = true;
        } else if (tok == "r") {
            if (!have_header) fail("r line before default header");
            VertexOf<M> v{};
            int idx;
            if (!detail::read_vertex(ls, v, d) || !(ls >> idx)) fail("bad r line");
            if (idx < 0 || idx >= mech.degree(v)) fail("rotor index out of range");
            cfg.set(v, idx);
        } else {
            fail("unknown directive `" + tok + "`");
        }
    }
    if (!have_header) throw ParseError("missing default header");
    return cfg;
}

}  // namespace rotorlab
