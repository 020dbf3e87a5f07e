#include <catch2/catch_amalgamated.hpp>

#include "rotorlab/rotorlab.hpp"

using namespace rotorlab;

namespace {

Coord cc(int x, int y = 0, int z = 0) {
    Coord c{};
    c[0] = x;
    c[1] = y;
    c[2] = z;
    return c;
}

}  // namespace

TEST_CASE("alpha") {
    REQUIRE(alpha(cc(3, 1, 0), 3) == 1);
    REQUIRE(alpha(cc(2, 2, 1), 3) == 0);
    REQUIRE(alpha(cc(0, 0), 2) == 0);
    REQUIRE(alpha(cc(0), 1) == 1);  // vacuous uniqueness for a single coordinate
}

TEST_CASE("explicit Z^d configuration") {
    SECTION("d=1: rotor at 3 next-points to the inward neighbour 2") {
        LatticeZd mech(1);
        auto cfg = build_zd_explicit(mech);
        auto nb = mech.neighbors(cc(3));
        int next = (cfg.index(cc(3)) + 1) % 2;
        REQUIRE(nb[static_cast<size_t>(next)] == cc(2));
    }
    SECTION("d=2, (2,0): alpha=1, next emission is (1,0)") {
        LatticeZd mech(2);
        auto cfg = build_zd_explicit(mech);
        auto nb = mech.neighbors(cc(2, 0));
        int next = (cfg.index(cc(2, 0)) + 1) % 4;
        REQUIRE(nb[static_cast<size_t>(next)] == cc(1, 0));
    }
    SECTION("d=2, (2,2): alpha=0; no neighbour has smaller ℓ∞ norm, rotor points at a neighbour reducing a maximal coordinate") {
        LatticeZd mech(2);
        auto cfg = build_zd_explicit(mech);
        for (const Coord& y : mech.neighbors(cc(2, 2))) REQUIRE(linf(y) >= linf(cc(2, 2)));
        Coord target = mech.neighbors(cc(2, 2))[static_cast<size_t>(cfg.index(cc(2, 2)))];
        // enumeration: the qualifying neighbours are (1,2) and (2,1)
        bool qualifies = (target == cc(1, 2)) || (target == cc(2, 1));
        REQUIRE(qualifies);
    }
    SECTION("origin emits to (1,0,...,0) first") {
        for (int d = 1; d <= 3; ++d) {
            LatticeZd mech(d);
            auto cfg = build_zd_explicit(mech);
            auto nb = mech.neighbors(zd_origin());
            int next = (cfg.index(zd_origin()) + 1) % (2 * d);
            REQUIRE(nb[static_cast<size_t>(next)] == unit(0, +1));
        }
    }
}

TEST_CASE("reflecting shells on Z^1") {
    LatticeZd mech(1);
    ShellFamily<LatticeZd> fam;
    fam.sets.push_back({cc(0)});
    auto cfg = build_reflecting_shells(mech, fam);
    WalkState<LatticeZd> probe(mech, cc(1), cfg.fork());
    REQUIRE(probe.peek() == cc(0));
    WalkState<LatticeZd> probe2(mech, cc(-1), cfg.fork());
    REQUIRE(probe2.peek() == cc(0));
    REQUIRE(is_reflecting(mech, cfg, fam.sets[0]));

    RotorConfig<LatticeZd> bad = cfg.fork();
    bad.set(cc(1), (position_of(mech.neighbors(cc(1)), cc(2)) - 1 + 2) % 2);
    REQUIRE_FALSE(is_reflecting(mech, bad, fam.sets[0]));
}

TEST_CASE("every cube shell is reflecting under the explicit configuration") {
    for (int d = 1; d <= 3; ++d) {
        LatticeZd mech(d);
        auto cfg = build_zd_explicit(mech);
        auto fam = cube_shells(mech, 3);
        for (const auto& s : fam.sets) REQUIRE(is_reflecting(mech, cfg, s));
    }
}

TEST_CASE("build_reflecting_shells output is reflecting for every shell") {
    LatticeZd mech(2);
    auto fam = cube_shells(mech, 4);
    auto cfg = build_reflecting_shells(mech, fam);
    for (const auto& s : fam.sets) REQUIRE(is_reflecting(mech, cfg, s));
}

TEST_CASE("non-contiguous S-neighbours are rejected") {
    // star centre 0 with order [1,2,3,4]; S = {1,3} is not a cyclic run
    ExplicitGraph g({{1, 2, 3, 4}, {0}, {0}, {0}, {0}});
    ShellFamily<ExplicitGraph> fam;
    fam.sets.push_back({1, 3});
    REQUIRE_THROWS_AS(build_reflecting_shells(g, fam), NonReflectable);
}

TEST_CASE("forest fill") {
    SECTION("Z^1 gap layers are empty") {
        LatticeZd mech(1);
        auto fam = cube_shells(mech, 3);
        RotorConfig<LatticeZd> cfg;
        auto filled = build_forest_fill(mech, fam, cfg.fork());
        REQUIRE(filled.overrides().empty());
    }
    SECTION("Z^2 corners point to smaller ℓ∞ norm, no cycles") {
        LatticeZd mech(2);
        auto fam = cube_shells(mech, 4);
        auto cfg = build_forest_fill(mech, fam, {});
        for (const auto& [v, idx] : cfg.overrides()) {
            Coord target = mech.neighbors(v)[static_cast<size_t>(idx)];
            REQUIRE(alpha(v, 2) == 0);
            // follow the pointers: must reach an alpha=1 or inner vertex, never loop
            Coord cur = v;
            for (int hops = 0; hops < 100; ++hops) {
                if (!cfg.stored(cur)) break;
                cur = mech.neighbors(cur)[static_cast<size_t>(cfg.index(cur))];
            }
            REQUIRE_FALSE(cfg.stored(cur));
            (void)target;
        }
    }
    SECTION("Z^3 shell layer alpha=0 vertices point towards the inner region") {
        LatticeZd mech(3);
        auto fam = cube_shells(mech, 2);
        auto cfg = build_forest_fill(mech, fam, {});
        for (const auto& [v, idx] : cfg.overrides()) {
            Coord target = mech.neighbors(v)[static_cast<size_t>(idx)];
            bool inner = linf(target) < linf(v) ||
                         (linf(target) == linf(v) && alpha(target, 3) >= alpha(v, 3));
            REQUIRE(inner);
        }
    }
}

TEST_CASE("unicycle predicate") {
    SECTION("directed 3-cycle on a triangle") {
        ExplicitGraph g({{1, 2}, {2, 0}, {0, 1}});
        RotorConfig<ExplicitGraph> cfg;
        cfg.set(0, 0);  // 0 -> 1
        cfg.set(1, 0);  // 1 -> 2
        cfg.set(2, 0);  // 2 -> 0
        VSet<ExplicitGraph> s{0, 1, 2};
        REQUIRE(is_unicycle(g, cfg, s, 0));
        REQUIRE(is_unicycle(g, cfg, s, 1));
    }
    SECTION("two disjoint 2-cycles in a 4-cycle graph") {
        ExplicitGraph g({{1, 3}, {0, 2}, {1, 3}, {2, 0}});
        RotorConfig<ExplicitGraph> cfg;
        cfg.set(0, 0);  // 0 -> 1
        cfg.set(1, 0);  // 1 -> 0
        cfg.set(2, 1);  // 2 -> 3
        cfg.set(3, 0);  // 3 -> 2
        REQUIRE_FALSE(is_unicycle(g, cfg, {0, 1, 2, 3}, 0));
    }
    SECTION("Z^1 rotors of S_1 form a unicycle at the first return epoch") {
        LatticeZd mech(1);
        WalkState<LatticeZd> state(mech, zd_origin(), build_zd_explicit(mech));
        auto trace = epoch_trace(state, 1);
        REQUIRE(trace);
        VSet<LatticeZd> s1{cc(-1), cc(0), cc(1)};
        REQUIRE(is_unicycle(mech, (*trace)[1].config, s1, zd_origin()));
    }
}

TEST_CASE("pincerless predicate") {
    SECTION("star witness: opposite rotation positions are not pincerless") {
        PlanarRotation g({{1, 2, 3, 4}, {0}, {0}, {0}, {0}}, {});
        REQUIRE_FALSE(is_pincerless(g, {1, 3}));
        REQUIRE(is_pincerless(g, {1, 2}));
    }
    SECTION("cubes in the plain grid embedding are pincerless") {
        std::mt19937_64 rng(3);
        auto tg = random_triangulated_grid(10, rng);
        // the square [3,7]^2: corners see the set through a contiguous arc
        VSet<PlanarRotation> s;
        for (int i = 3; i <= 7; ++i)
            for (int j = 3; j <= 7; ++j) s.insert(tg.id(i, j));
        REQUIRE(is_pincerless(tg.g, s));
    }
}

TEST_CASE("pincerless hull") {
    SECTION("single vertex with all components infinite stays alone") {
        std::mt19937_64 rng(4);
        auto tg = random_triangulated_grid(10, rng);
        VSet<PlanarRotation> a{tg.id(5, 5)};
        auto b = pincerless_hull(tg.g, a, tg.boundary);
        REQUIRE(b == a);
    }
    SECTION("a ring absorbs its enclosed region") {
        std::mt19937_64 rng(4);
        auto tg = random_triangulated_grid(12, rng);
        VSet<PlanarRotation> a;
        for (int i = 4; i <= 8; ++i)
            for (int j = 4; j <= 8; ++j)
                if (i == 4 || i == 8 || j == 4 || j == 8) a.insert(tg.id(i, j));
        auto b = pincerless_hull(tg.g, a, tg.boundary);
        for (int i = 5; i <= 7; ++i)
            for (int j = 5; j <= 7; ++j) REQUIRE(b.contains(tg.id(i, j)));
        REQUIRE(is_pincerless(tg.g, b));
        REQUIRE(pincerless_hull(tg.g, b, tg.boundary) == b);
    }
    SECTION("randomized property check") {
        auto v = check_pincerless_hull(50, 99);
        INFO(v.line());
        REQUIRE(v.pass);
    }
    SECTION("marker contact fails loudly") {
        std::mt19937_64 rng(4);
        auto tg = random_triangulated_grid(6, rng);
        VSet<PlanarRotation> a{tg.id(0, 0)};
        REQUIRE_THROWS_AS(pincerless_hull(tg.g, a, tg.boundary), TruncationTooSmall);
    }
}

TEST_CASE("shell family validation") {
    LatticeZd mech(2);
    auto fam = cube_shells(mech, 3);
    REQUIRE_NOTHROW(fam.validate(mech));
    ShellFamily<LatticeZd> bad;
    bad.sets.push_back({cc(0)});
    bad.sets.push_back({cc(0), cc(1, 0)});  // boundary of S_0 not contained
    REQUIRE_THROWS_AS(bad.validate(mech), std::invalid_argument);
}
