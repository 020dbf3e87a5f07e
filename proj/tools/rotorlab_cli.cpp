// rotorlab command line front end: build instances, run walks, execute the
// verification suite, export CSV/PGM artifacts.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rotorlab/rotorlab.hpp"

namespace rl = rotorlab;
namespace fs = std::filesystem;

namespace {

// Write the full payload to <path>.tmp, then rename over <path>.
void write_atomic(const std::string& path, const std::string& payload) {
    fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary);
        if (!os) throw std::runtime_error("cannot open " + tmp.string());
        os << payload;
    }
    fs::rename(tmp, target);
}

int parse_lattice_dim(const std::string& spec) {
    if (spec.rfind("zd:", 0) != 0) throw rl::ParseError("expected graph spec zd:<d>");
    int d = std::stoi(spec.substr(3));
    if (d < 1 || d > 4) throw rl::ParseError("lattice dimension must be 1..4");
    return d;
}

rl::LatticeZd make_lattice(const std::string& graph_spec, const std::string& config_spec) {
    int d = parse_lattice_dim(graph_spec);
    if (config_spec == "east-ccw") {
        if (d != 2) throw rl::ParseError("east-ccw requires zd:2");
        return rl::z2_anticlockwise();
    }
    return rl::LatticeZd(d);
}

rl::RotorConfig<rl::LatticeZd> make_lattice_config(const rl::LatticeZd& mech,
                                                   const std::string& spec) {
    if (spec == "zd-explicit") return rl::build_zd_explicit(mech);
    if (spec == "east-ccw") return rl::build_east_ccw(mech);
    if (spec.rfind("fixed:", 0) == 0) {
        int k = std::stoi(spec.substr(6));
        return rl::RotorConfig<rl::LatticeZd>([k](const rl::Coord&) { return k; },
                                              "fixed " + std::to_string(k));
    }
    if (spec.rfind("file:", 0) == 0) {
        std::ifstream is(spec.substr(5));
        if (!is) throw rl::ParseError("cannot open config file " + spec.substr(5));
        return rl::load_config<rl::LatticeZd>(
            is, mech, [&mech](const std::string& id) { return rl::lattice_rule_from_id(mech, id); });
    }
    throw rl::ParseError("unknown config spec `" + spec + "`");
}

int run_simulate(const std::string& graph, const std::string& config, uint64_t steps, int radius,
                 int pgm_radius, const std::string& out) {
    rl::LatticeZd mech = make_lattice(graph, config);
    auto cfg = make_lattice_config(mech, config);
    rl::WalkState<rl::LatticeZd> state(mech, rl::zd_origin(), std::move(cfg));
    uint64_t returns = 0, escapes = 0;
    int max_radius = 0;
    for (uint64_t i = 0; i < steps; ++i) {
        if (radius > 0 && rl::linf(state.particle) >= radius) {
            ++escapes;
            state.particle = rl::zd_origin();
            continue;
        }
        auto e = state.step();
        max_radius = std::max(max_radius, rl::linf(state.particle));
        if (e.head == rl::zd_origin()) ++returns;
    }
    std::ostringstream heat;
    rl::write_heatmap_csv(heat, mech, state.entries);
    write_atomic(out + "_heatmap.csv", heat.str());
    if (pgm_radius > 0 && mech.dim() == 2) {
        std::ostringstream pgm;
        rl::write_heatmap_pgm(pgm, state.entries, pgm_radius);
        write_atomic(out + "_heatmap.pgm", pgm.str());
    }
    std::ostringstream sum;
    sum << "steps " << state.clock << "\nreturns " << returns << "\nescapes " << escapes
        << "\nmax_radius " << max_radius << "\n";
    write_atomic(out + "_summary.txt", sum.str());
    std::cout << sum.str();
    return 0;
}

int run_verify(const std::string& suite, int d, int K, int trials, int m, uint64_t seed,
               uint64_t budget, const std::string& out) {
    std::vector<rl::Verdict> verdicts;
    auto want = [&](const std::string& s) { return suite == "all" || suite == s; };

    if (want("zd-exact")) verdicts.push_back(rl::check_zd_exact(rl::LatticeZd(d), K, budget));
    if (want("edge-traversal"))
        verdicts.push_back(rl::check_edge_traversal(rl::LatticeZd(d), std::min(K, 6), budget));
    if (want("twice")) verdicts.push_back(rl::check_lemma_twice(trials, seed));
    if (want("return")) verdicts.push_back(rl::check_lemma_return(trials, seed + 1));
    if (want("abelian")) verdicts.push_back(rl::check_abelian(std::max(50, trials / 4), trials, seed + 2));
    if (want("pincerless")) verdicts.push_back(rl::check_pincerless_hull(trials, seed + 3));
    if (want("planar")) verdicts.push_back(rl::check_planar_construction(std::min(trials, 20), 5, seed + 4, budget));
    if (want("dichotomy")) {
        rl::LatticeZd mech(2);
        auto cfg = rl::build_zd_explicit(mech);
        for (int mm : {1, 3, 5}) {
            auto dv = rl::dichotomy_harness(mech, cfg, rl::zd_origin(), rl::unit(0, +1), mm, budget);
            verdicts.push_back({"dichotomy", "m=" + std::to_string(mm), dv.pass, dv.detail, ""});
        }
    }
    if (want("recurrence")) {
        rl::LatticeZd mech(2);
        auto escape = [](const rl::Coord& x) { return rl::linf(x) >= 64; };
        std::vector<rl::Coord> starts{rl::zd_origin(), rl::unit(0, 1)};
        rl::Coord far{};
        far[0] = 3;
        far[1] = -2;
        starts.push_back(far);
        verdicts.push_back(rl::check_recurrence_invariance(mech, rl::build_zd_explicit(mech), starts,
                                                           m, budget, escape));
        rl::LatticeZd ccw = rl::z2_anticlockwise();
        auto v2 = rl::check_recurrence_invariance(ccw, rl::build_east_ccw(ccw), starts, m,
                                                  std::min<uint64_t>(budget, 2'000'000), escape);
        v2.params += " config=east-ccw";
        verdicts.push_back(v2);
    }
    if (want("perturbation")) {
        rl::LatticeZd mech(2);
        auto cfg = rl::build_zd_explicit(mech);
        auto escape = [](const rl::Coord& x) { return rl::linf(x) >= 256; };
        std::mt19937_64 rng(seed + 5);
        bool all = true;
        std::string witness;
        for (int t = 0; t < trials; ++t) {
            std::vector<std::pair<rl::Coord, int>> edits;
            int n_edits = 1 + rl::rand_below(rng, 5);
            for (int i = 0; i < n_edits; ++i) {
                rl::Coord x{};
                x[0] = rl::rand_below(rng, 7) - 3;
                x[1] = rl::rand_below(rng, 7) - 3;
                edits.push_back({x, rl::rand_below(rng, 4)});
            }
            auto v = rl::check_finite_perturbation(mech, cfg, edits, rl::zd_origin(), m, budget, escape);
            if (!v.pass) {
                all = false;
                witness = "trial " + std::to_string(t) + ": " + v.witness;
                break;
            }
        }
        verdicts.push_back({"finite-perturbation", "trials=" + std::to_string(trials), all, witness, ""});
    }

    if (verdicts.empty()) {
        std::cerr << "unknown suite `" << suite << "`\n";
        return 2;
    }
    bool ok = true;
    for (const auto& v : verdicts) {
        std::cout << v.line() << "\n";
        ok &= v.pass;
    }
    if (!out.empty()) {
        std::ostringstream os;
        rl::write_verdicts_csv(os, verdicts);
        write_atomic(out, os.str());
    }
    return ok ? 0 : 1;
}

int run_epochs(int d, int K, uint64_t budget, const std::string& out) {
    rl::LatticeZd mech(d);
    rl::WalkState<rl::LatticeZd> state(mech, rl::zd_origin(), rl::build_zd_explicit(mech));
    auto trace = rl::epoch_trace(state, K, budget);
    if (!trace) {
        std::cerr << "budget exceeded\n";
        return 1;
    }
    std::ostringstream os;
    rl::write_epochs_csv(os, mech, *trace);
    if (out.empty())
        std::cout << os.str();
    else
        write_atomic(out, os.str());
    return 0;
}

int run_escapes(int radius, uint64_t n, uint64_t budget, const std::string& out) {
    rl::LatticeZd mech = rl::z2_anticlockwise();
    auto cfg = rl::build_east_ccw(mech);
    auto rows1 = rl::escape_experiment(mech, cfg, radius, n, budget);
    auto rows2 = rl::escape_experiment(mech, cfg, 2 * radius, n, budget);
    std::ostringstream os;
    rl::write_escape_csv(os, radius, rows1, 2 * radius, rows2);
    if (out.empty())
        std::cout << os.str();
    else
        write_atomic(out, os.str());
    // escapes(n)/n per doubling of n, for trend inspection
    for (uint64_t k = 1; k <= n; k *= 2)
        if (k < rows1.size())
            std::cerr << "n=" << k << " escapes/n=" << static_cast<double>(rows1[k].escapes) / k
                      << " (R=" << radius << ")\n";
    return 0;
}

int run_abelian(int returns, int orders, uint64_t seed, const std::string& out) {
    rl::LatticeZd mech(2);
    auto cfg = rl::build_zd_explicit(mech);
    rl::WalkState<rl::LatticeZd> sweep(mech, rl::zd_origin(), cfg.fork());
    for (int r = 0; r < returns; ++r) rl::run_until_return(sweep, rl::zd_origin(), rl::default_budget());
    rl::VSet<rl::LatticeZd> s{rl::zd_origin()};
    for (const auto& [x, c] : sweep.entries)
        if (c > 0) s.insert(x);
    auto split = rl::sink_split(mech, cfg, s, rl::zd_origin());
    std::mt19937_64 rng(seed);
    std::optional<rl::AbsorptionResult> ref;
    for (int t = 0; t < orders; ++t) {
        auto res = rl::run_to_absorption(split.g, returns, split.x_plus, rl::FiringOrder::random(rng()));
        if (!ref) ref = res;
        else if (res.rotors != ref->rotors || res.tally != ref->tally) {
            std::cerr << "firing order " << t << " diverged\n";
            return 1;
        }
    }
    std::ostringstream os;
    rl::save_sink_graph(os, split.g);
    os << "absorbed x_minus " << ref->tally[static_cast<size_t>(split.x_minus)] << "\n";
    os << "absorbed z " << ref->tally[static_cast<size_t>(split.z)] << "\n";
    if (out.empty())
        std::cout << os.str();
    else
        write_atomic(out, os.str());
    std::cout << "abelian: " << orders << " firing orders agree\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rotor walk laboratory"};
    app.require_subcommand(1);

    uint64_t budget = rl::default_budget();

    auto* sim = app.add_subcommand("simulate", "run a rotor walk, export heatmap + summary");
    std::string sim_graph = "zd:2", sim_config = "zd-explicit", sim_out = "rotorlab_sim";
    uint64_t sim_steps = 1'000'000;
    int sim_radius = 0, sim_pgm = 0;
    sim->add_option("--graph", sim_graph, "graph spec, zd:<d>");
    sim->add_option("--config", sim_config, "zd-explicit | east-ccw | fixed:<k> | file:<path>");
    sim->add_option("--steps", sim_steps, "step budget");
    sim->add_option("--radius", sim_radius, "restart at 0 on reaching this ℓ∞ radius (0 = never)");
    sim->add_option("--pgm", sim_pgm, "also write a PGM raster of this radius");
    sim->add_option("--out", sim_out, "output path prefix");

    auto* ver = app.add_subcommand("verify", "run theorem checks; exit 1 on any failure");
    std::string ver_suite = "all", ver_out;
    int ver_d = 2, ver_K = 10, ver_trials = 200, ver_m = 5;
    uint64_t ver_seed = 1;
    ver->add_option("--suite", ver_suite,
                    "zd-exact | edge-traversal | twice | return | abelian | pincerless | planar | "
                    "dichotomy | recurrence | perturbation | all");
    ver->add_option("--d", ver_d, "lattice dimension");
    ver->add_option("--K", ver_K, "epochs");
    ver->add_option("--trials", ver_trials, "fuzz trials");
    ver->add_option("--m", ver_m, "required returns");
    ver->add_option("--seed", ver_seed, "rng seed");
    ver->add_option("--budget", budget, "step budget (also ROTORLAB_BUDGET)");
    ver->add_option("--out", ver_out, "verdict CSV path");

    auto* epo = app.add_subcommand("epochs", "epoch trace of the explicit Z^d configuration");
    int epo_d = 2, epo_K = 5;
    std::string epo_out;
    epo->add_option("--d", epo_d, "lattice dimension");
    epo->add_option("--K", epo_K, "epochs");
    epo->add_option("--out", epo_out, "CSV path (stdout if empty)");

    auto* esc = app.add_subcommand("escapes", "all-East anticlockwise escape experiment on Z^2");
    int esc_radius = 64;
    uint64_t esc_n = 10'000;
    std::string esc_out;
    esc->add_option("--radius", esc_radius, "escape radius R (2R run included)");
    esc->add_option("--n", esc_n, "visits to 0");
    esc->add_option("--out", esc_out, "CSV path (stdout if empty)");

    auto* abe = app.add_subcommand("abelian", "sink-split aggregation under many firing orders");
    int abe_returns = 6, abe_orders = 200;
    uint64_t abe_seed = 7;
    std::string abe_out;
    abe->add_option("--returns", abe_returns, "returns defining S (and particle count)");
    abe->add_option("--orders", abe_orders, "random firing orders");
    abe->add_option("--seed", abe_seed, "rng seed");
    abe->add_option("--out", abe_out, "dump path (stdout if empty)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed()) return run_simulate(sim_graph, sim_config, sim_steps, sim_radius, sim_pgm, sim_out);
        if (ver->parsed()) return run_verify(ver_suite, ver_d, ver_K, ver_trials, ver_m, ver_seed, budget, ver_out);
        if (epo->parsed()) return run_epochs(epo_d, epo_K, budget, epo_out);
        if (esc->parsed()) return run_escapes(esc_radius, esc_n, budget, esc_out);
        if (abe->parsed()) return run_abelian(abe_returns, abe_orders, abe_seed, abe_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
