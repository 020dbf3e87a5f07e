#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdlib>

#include "core.hpp"

namespace rotorlab {

inline Coord zd_origin() { return Coord{}; }

inline Coord unit(int axis, int sign) {
    Coord c{};
    c[axis] = sign;
    return c;
}

inline Coord add(const Coord& a, const Coord& b) {
    Coord r;
    for (int i = 0; i < 4; ++i) r[i] = a[i] + b[i];
    return r;
}

inline int linf(const Coord& x) {
    int m = 0;
    for (int32_t v : x.c) m = std::max(m, std::abs(v));
    return m;
}

// 1 iff |x_1|,...,|x_d| attain their maximum exactly once.
inline int alpha(const Coord& x, int d) {
    int m = 0, count = 0;
    for (int i = 0; i < d; ++i) {
        int a = std::abs(x[i]);
        if (a > m) {
            m = a;
            count = 1;
        } else if (a == m) {
            ++count;
        }
    }
    return count == 1 ? 1 : 0;
}

// Z^d with one global cyclic order over the 2d signed unit directions,
// applied at every vertex. Per-vertex overrides support adversarial tests.
class LatticeZd {
public:
    using vertex_type = Coord;
    using vertex_hash = CoordHash;

    explicit LatticeZd(int d) : d_(d) {
        assert(d >= 1 && d <= 4);
        for (int i = 0; i < d; ++i) dirs_.push_back(unit(i, +1));
        for (int i = 0; i < d; ++i) dirs_.push_back(unit(i, -1));
    }

    LatticeZd(int d, std::vector<Coord> order_template) : d_(d), dirs_(std::move(order_template)) {
        assert(static_cast<int>(dirs_.size()) == 2 * d);
    }

    int dim() const { return d_; }
    int degree(const Coord&) const { return 2 * d_; }
    const std::vector<Coord>& order_template() const { return dirs_; }

    std::vector<Coord> neighbors(const Coord& x) const {
        auto it = overrides_.find(x);
        const std::vector<Coord>& dirs = (it != overrides_.end()) ? it->second : dirs_;
        std::vector<Coord> out;
        out.reserve(dirs.size());
        for (const Coord& dv : dirs) out.push_back(add(x, dv));
        return out;
    }

    void override_order(const Coord& x, std::vector<Coord> dirs) {
        assert(dirs.size() == dirs_.size());
        overrides_[x] = std::move(dirs);
    }

private:
    int d_;
    std::vector<Coord> dirs_;  // direction vectors, cyclic
    std::unordered_map<Coord, std::vector<Coord>, CoordHash> overrides_;
};

// The E,N,W,S order on Z^2: an increment rotates anticlockwise.
inline LatticeZd z2_anticlockwise() {
    return LatticeZd(2, {unit(0, +1), unit(1, +1), unit(0, -1), unit(1, -1)});
}

}  // namespace rotorlab
