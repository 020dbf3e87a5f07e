#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace rotorlab {

// Lattice vertex. Dimensions beyond the mechanism's d stay zero, so
// equality and hashing can run over the whole array.
struct Coord {
    std::array<int32_t, 4> c{};

    int32_t operator[](int i) const { return c[static_cast<size_t>(i)]; }
    int32_t& operator[](int i) { return c[static_cast<size_t>(i)]; }

    friend bool operator==(const Coord&, const Coord&) = default;
    friend bool operator<(const Coord& a, const Coord& b) { return a.c < b.c; }
};

inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct CoordHash {
    size_t operator()(const Coord& x) const {
        uint64_t h = 0x243f6a8885a308d3ULL;
        for (int32_t v : x.c) h = mix64(h ^ static_cast<uint64_t>(static_cast<uint32_t>(v)));
        return static_cast<size_t>(h);
    }
};

struct IntHash {
    size_t operator()(int v) const { return static_cast<size_t>(mix64(static_cast<uint64_t>(v))); }
};

template <class V>
struct DirectedEdge {
    V tail;
    V head;
    friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
};

template <class V, class H>
struct DirectedEdgeHash {
    size_t operator()(const DirectedEdge<V>& e) const {
        H h;
        return static_cast<size_t>(mix64(h(e.tail) * 0x9e3779b97f4a7c15ULL ^ h(e.head)));
    }
};

// Per-mechanism container aliases.
template <class M>
using VertexOf = typename M::vertex_type;
template <class M>
using VSet = std::unordered_set<typename M::vertex_type, typename M::vertex_hash>;
template <class M, class T>
using VMap = std::unordered_map<typename M::vertex_type, T, typename M::vertex_hash>;
template <class M>
using EdgeOf = DirectedEdge<typename M::vertex_type>;
template <class M, class T>
using EMap = std::unordered_map<EdgeOf<M>, T,
                                DirectedEdgeHash<typename M::vertex_type, typename M::vertex_hash>>;

struct NonReflectable : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TruncationTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoSinkReachable : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnknownVertex : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace rotorlab
