// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Runtimes are checked where the criterion bounds them.

#include <chrono>
#include <iostream>

#include "rotorlab/rotorlab.hpp"

using namespace rotorlab;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << "  " << name;
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << "\n";
    if (!pass) ++failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void exact_visit_counts() {
    auto t0 = Clock::now();
    auto v2 = check_zd_exact(LatticeZd(2), 10);
    auto v3 = check_zd_exact(LatticeZd(3), 4);
    double elapsed = seconds_since(t0);
    report("exact visit counts d=2 K=10, d=3 K=4",
           v2.pass && v2.note.empty() && v3.pass && v3.note.empty() && elapsed < 60.0,
           "elapsed " + std::to_string(elapsed) + "s");
    auto v1 = check_zd_exact(LatticeZd(1), 20);
    report("exact visit counts d=1 K=20 (origin convention reported)", v1.pass,
           v1.note.empty() ? v1.witness : v1.note);
}

void edge_traversal() {
    auto v = check_edge_traversal(LatticeZd(2), 5);
    report("edge traversal d=2 K=5 with unicycle at every t_k", v.pass, v.witness);
}

void lemma_twice() {
    auto v = check_lemma_twice(1000, 20240601);
    report("lemma twice, 1000 fuzz trials", v.pass, v.witness);
}

void lemma_return() {
    auto v = check_lemma_return(500, 20240602);
    report("lemma return, 500 reflecting-boundary trials", v.pass, v.witness);
}

void abelian_property() {
    auto v = check_abelian(50, 200, 20240603);
    report("abelian property, 50 exhaustive instances + 200 random orders", v.pass, v.witness);
}

void dichotomy() {
    LatticeZd mech(2);
    auto cfg = build_zd_explicit(mech);
    bool all = true;
    std::string detail;
    for (int m : {1, 3, 5}) {
        auto v = dichotomy_harness(mech, cfg, zd_origin(), unit(0, +1), m);
        if (!v.pass || v.visits < m) {
            all = false;
            detail = "m=" + std::to_string(m) + ": " + v.detail;
            break;
        }
    }
    report("dichotomy harness m in {1,3,5}, replay matches and absorbs at x_-", all, detail);
}

void finite_perturbation() {
    LatticeZd mech(2);
    auto cfg = build_zd_explicit(mech);
    auto escape = [](const Coord& x) { return linf(x) >= 128; };
    std::mt19937_64 rng(20240604);
    bool all = true;
    std::string detail;
    for (int t = 0; t < 100 && all; ++t) {
        std::vector<std::pair<Coord, int>> edits;
        int n = 1 + rand_below(rng, 5);
        for (int i = 0; i < n; ++i) {
            Coord x{};
            x[0] = rand_below(rng, 9) - 4;
            x[1] = rand_below(rng, 9) - 4;
            edits.push_back({x, rand_below(rng, 4)});
        }
        auto v = check_finite_perturbation(mech, cfg, edits, zd_origin(), 5, default_budget(), escape);
        if (!v.pass || v.note != "both recurrent") {
            all = false;
            detail = "trial " + std::to_string(t) + ": " + v.witness;
        }
    }
    report("finite perturbation, 100 trials of <=5 edits keep recurrence", all, detail);
}

void pincerless() {
    auto v = check_pincerless_hull(50, 20240605);
    report("pincerless hull, 50 random planar truncations + idempotence", v.pass, v.witness);
}

void planar_construction() {
    auto v = check_planar_construction(20, 5, 20240606);
    report("planar construction, 20 truncations with mixed cw/ccw, >=5 returns", v.pass, v.witness);
}

void escape_experiment_criterion() {
    auto t0 = Clock::now();
    LatticeZd mech = z2_anticlockwise();
    auto cfg = build_east_ccw(mech);
    auto a1 = escape_experiment(mech, cfg, 64, 10'000);
    auto a2 = escape_experiment(mech, cfg, 128, 10'000);
    auto b1 = escape_experiment(mech, cfg, 64, 10'000);
    double elapsed = seconds_since(t0);
    bool monotone = true;
    for (size_t i = 1; i < a1.size(); ++i) monotone &= a1[i].escapes >= a1[i - 1].escapes;
    for (size_t i = 1; i < a2.size(); ++i) monotone &= a2[i].escapes >= a2[i - 1].escapes;
    bool deterministic = a1.size() == b1.size();
    for (size_t i = 0; deterministic && i < a1.size(); ++i)
        deterministic = a1[i].visits == b1[i].visits && a1[i].escapes == b1[i].escapes;
    bool both_columns = !a1.empty() && !a2.empty();
    report("escape experiment R in {64,128}, n=10^4, deterministic + monotone",
           monotone && deterministic && both_columns && elapsed < 300.0,
           "elapsed " + std::to_string(elapsed) + "s, escapes(10^4) R=64: " +
               std::to_string(a1.back().escapes) + ", R=128: " + std::to_string(a2.back().escapes));
}

}  // namespace

int main() {
    exact_visit_counts();
    edge_traversal();
    lemma_twice();
    lemma_return();
    abelian_property();
    dichotomy();
    finite_perturbation();
    pincerless();
    planar_construction();
    escape_experiment_criterion();
    std::cout << (failures == 0 ? "all criteria passed\n"
                                : std::to_string(failures) + " criteria failed\n");
    return failures == 0 ? 0 : 1;
}
