#pragma once

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "core.hpp"

namespace rotorlab {

// Finite graph with an explicit cyclic neighbour order per vertex.
class ExplicitGraph {
public:
    using vertex_type = int;
    using vertex_hash = IntHash;

    ExplicitGraph() = default;
    explicit ExplicitGraph(std::vector<std::vector<int>> orders) : orders_(std::move(orders)) {}

    int size() const { return static_cast<int>(orders_.size()); }

    int degree(int x) const {
        check(x);
        return static_cast<int>(orders_[static_cast<size_t>(x)].size());
    }

    const std::vector<int>& neighbors(int x) const {
        check(x);
        return orders_[static_cast<size_t>(x)];
    }

    bool has_edge(int x, int y) const {
        const auto& nb = neighbors(x);
        return std::find(nb.begin(), nb.end(), y) != nb.end();
    }

    std::vector<int> vertices() const {
        std::vector<int> v(static_cast<size_t>(size()));
        for (int i = 0; i < size(); ++i) v[static_cast<size_t>(i)] = i;
        return v;
    }

protected:
    void check(int x) const {
        if (x < 0 || x >= size()) throw UnknownVertex("unknown vertex " + std::to_string(x));
    }

    std::vector<std::vector<int>> orders_;
};

// Finite planar graph given by a rotation system (cyclic edge order around
// each vertex from an embedding). The walk order at a vertex is the embedding
// order for ccw vertices and its reversal for cw vertices.
class PlanarRotation {
public:
    using vertex_type = int;
    using vertex_hash = IntHash;

    enum class Orient : uint8_t { CCW, CW };

    PlanarRotation() = default;
    PlanarRotation(std::vector<std::vector<int>> rotation, std::vector<Orient> orient)
        : rotation_(std::move(rotation)), orient_(std::move(orient)) {
        if (orient_.empty()) orient_.assign(rotation_.size(), Orient::CCW);
        rebuild_orders();
    }

    int size() const { return static_cast<int>(rotation_.size()); }

    int degree(int x) const {
        check(x);
        return static_cast<int>(rotation_[static_cast<size_t>(x)].size());
    }

    // Walk order: embedding rotation, reversed at cw vertices.
    const std::vector<int>& neighbors(int x) const {
        check(x);
        return orders_[static_cast<size_t>(x)];
    }

    // Embedding rotation, orientation-independent.
    const std::vector<int>& rotation(int x) const {
        check(x);
        return rotation_[static_cast<size_t>(x)];
    }

    Orient orientation(int x) const {
        check(x);
        return orient_[static_cast<size_t>(x)];
    }

    void set_orientation(int x, Orient o) {
        check(x);
        orient_[static_cast<size_t>(x)] = o;
        rebuild_order(x);
    }

    bool has_edge(int x, int y) const {
        const auto& nb = rotation(x);
        return std::find(nb.begin(), nb.end(), y) != nb.end();
    }

    std::vector<int> vertices() const {
        std::vector<int> v(static_cast<size_t>(size()));
        for (int i = 0; i < size(); ++i) v[static_cast<size_t>(i)] = i;
        return v;
    }

private:
    void check(int x) const {
        if (x < 0 || x >= size()) throw UnknownVertex("unknown vertex " + std::to_string(x));
    }

    void rebuild_orders() {
        orders_.resize(rotation_.size());
        for (int x = 0; x < size(); ++x) rebuild_order(x);
    }

    void rebuild_order(int x) {
        auto i = static_cast<size_t>(x);
        orders_[i] = rotation_[i];
        if (orient_[i] == Orient::CW) std::reverse(orders_[i].begin(), orders_[i].end());
    }

    std::vector<std::vector<int>> rotation_;
    std::vector<Orient> orient_;
    std::vector<std::vector<int>> orders_;
};

// Line-oriented text format:
//   graph <n>
//   v <id> : <neighbour ids in cyclic order>
//   orient <id> cw|ccw        (planar variant)
inline void save_graph(std::ostream& os, const ExplicitGraph& g) {
    os << "graph " << g.size() << "\n";
    for (int x = 0; x < g.size(); ++x) {
        os << "v " << x << " :";
        for (int y : g.neighbors(x)) os << " " << y;
        os << "\n";
    }
}

inline void save_graph(std::ostream& os, const PlanarRotation& g) {
    os << "graph " << g.size() << "\n";
    for (int x = 0; x < g.size(); ++x) {
        os << "v " << x << " :";
        for (int y : g.rotation(x)) os << " " << y;
        os << "\n";
    }
    for (int x = 0; x < g.size(); ++x)
        os << "orient " << x << " " << (g.orientation(x) == PlanarRotation::Orient::CW ? "cw" : "ccw")
           << "\n";
}

namespace detail {

struct ParsedGraph {
    std::vector<std::vector<int>> orders;
    std::vector<PlanarRotation::Orient> orient;
    bool has_orient = false;
};

inline ParsedGraph parse_graph_lines(std::istream& is) {
    ParsedGraph out;
    std::string line;
    int n = -1, lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        auto fail = [&](const std::string& msg) {
            throw ParseError("line " + std::to_string(lineno) + ": " + msg);
        };
        if (tok == "graph") {
            if (!(ls >> n) || n < 0) fail("bad vertex count");
            out.orders.assign(static_cast<size_t>(n), {});
            out.orient.assign(static_cast<size_t>(n), PlanarRotation::Orient::CCW);
        } else if (tok == "v") {
            int id;
            std::string colon;
            if (n < 0) fail("v before graph header");
            if (!(ls >> id >> colon) || colon != ":") fail("expected `v <id> :`");
            if (id < 0 || id >= n) fail("vertex id out of range");
            int y;
            while (ls >> y) out.orders[static_cast<size_t>(id)].push_back(y);
        } else if (tok == "orient") {
            int id;
            std::string o;
            if (n < 0) fail("orient before graph header");
            if (!(ls >> id >> o)) fail("expected `orient <id> cw|ccw`");
            if (id < 0 || id >= n) fail("vertex id out of range");
            if (o != "cw" && o != "ccw") fail("orientation must be cw or ccw");
            out.orient[static_cast<size_t>(id)] =
                (o == "cw") ? PlanarRotation::Orient::CW : PlanarRotation::Orient::CCW;
            out.has_orient = true;
        } else {
            fail("unknown directive `" + tok + "`");
        }
    }
    if (n < 0) throw ParseError("missing graph header");
    return out;
}

}  // namespace detail

inline ExplicitGraph load_explicit_graph(std::istream& is) {
    return ExplicitGraph(detail::parse_graph_lines(is).orders);
}

inline PlanarRotation load_planar_graph(std::istream& is) {
    auto p = detail::parse_graph_lines(is);
    return PlanarRotation(std::move(p.orders), std::move(p.orient));
}

}  // namespace rotorlab
