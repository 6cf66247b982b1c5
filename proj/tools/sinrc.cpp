#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "sinrc/io.hpp"
#include "sinrc/rng.hpp"

namespace {

using namespace sinrc;

int thread_budget() {
    const char* env = std::getenv("SINRC_THREADS");
    const int hw = std::max(1u, std::thread::hardware_concurrency());
    if (!env) return hw;
    const int v = std::atoi(env);
    return v >= 1 ? std::min(v, hw) : hw;
}

struct Common {
    double alpha = 3.0;
    double beta = 1.0;
    double noise = 0.0;
    double gamma = 1.0;
    std::string fspec = "tlog";
    std::uint64_t seed = 1;
    std::string out;
    double k_nec = 10.0;
    double c0 = -1.0;

    SinrParams sinr() const { return {alpha, beta, noise}; }
};

void add_common(CLI::App* app, Common& c) {
    app->add_option("--alpha", c.alpha, "path-loss exponent");
    app->add_option("--beta", c.beta, "SINR threshold");
    app->add_option("--noise", c.noise, "noise floor");
    app->add_option("--gamma", c.gamma, "conflict-graph scale");
    app->add_option("--f", c.fspec, "function spec (const:g, tlog:g=..., log, pow:e=...)");
    app->add_option("--seed", c.seed, "RNG seed");
    app->add_option("--out", c.out, "output path");
    app->add_option("--k-nec", c.k_nec, "necessary-condition constant");
    app->add_option("--c0", c.c0, "hard-instance infeasibility constant");
}

std::string canon(const std::string& sub, const Common& c,
                  const std::vector<std::pair<std::string, std::string>>& extra = {}) {
    std::ostringstream os;
    os << sub << " --alpha=" << c.alpha << " --beta=" << c.beta << " --noise=" << c.noise
       << " --gamma=" << c.gamma << " --f=" << c.fspec << " --seed=" << c.seed;
    for (const auto& [k, v] : extra) os << " --" << k << "=" << v;
    return os.str();
}

void emit(const std::string& out, const std::string& content) {
    if (out.empty())
        std::cout << content;
    else
        write_file(out, content);
}

int run_generate(const std::string& kind, const Common& c, int n, double delta, int t,
                 const std::string& mode, double hc, int k_cap) {
    const double m = kind == "random" ? 2.0 : 1.0; // generated metric's doubling dim
    const SublinearFn f = SublinearFn::parse(c.fspec, c.alpha, m);
    GenResult gen = [&] {
        if (kind == "random") return random_planar(n, delta, c.seed, c.sinr());
        if (kind == "chain-clique") return chain_clique(n, f, c.sinr());
        if (kind == "chain-clique-strong") return chain_clique_strong(n, f, 0.0, c.sinr());
        if (kind == "hard")
            return hard_instance(t, f, mode == "faithful" ? HardMode::Faithful : HardMode::Scaled,
                                 hc, k_cap, 1.0, c.c0, c.sinr(), c.seed);
        if (kind == "unit-clique") return unit_metric_clique(n, f, c.sinr());
        throw CLI::ValidationError("unknown generator kind: " + kind);
    }();

    const std::string config =
        canon("generate", c, {{"kind", kind}, {"n", std::to_string(n)}});
    const std::string base = c.out.empty() ? std::string("instance.json") : c.out;
    save_instance(gen.instance, base);
    write_file(base + ".invariants.json", invariants_to_json(gen, config));
    for (const auto& inv : gen.invariants)
        std::cerr << (inv.pass ? "PASS " : "FAIL ") << inv.name
                  << (inv.detail.empty() ? "" : " (" + inv.detail + ")") << "\n";
    return gen.all_pass() ? 0 : 3;
}

int run_bench(const Common& c, int n, int seeds, int dmin, int dmax, int dstep) {
    struct Job {
        std::uint64_t seed;
        int dexp;
    };
    std::vector<Job> jobs;
    for (int e = dmin; e <= dmax; e += dstep)
        for (int s = 0; s < seeds; ++s) jobs.push_back({c.seed + s, e});

    std::vector<std::string> rows(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1)) {
            const Job& job = jobs[i];
            const double delta = std::exp2(job.dexp);
            const GenResult gen = random_planar(n, delta, job.seed, c.sinr());
            const Schedule sch = schedule(gen.instance, c.gamma, true);
            const Schedule base = baseline_lengthclass(gen.instance);
            const MeasureReport rep = measure(gen.instance, c.gamma);
            std::ostringstream os;
            os << job.seed << "," << n << "," << rep.delta << "," << rep.logstar_delta << ","
               << sch.slots.size() << "," << rep.b_gamma << "," << rep.b_tlog << ","
               << base.slots.size();
            rows[i] = os.str();
        }
    };
    std::vector<std::thread> pool;
    const int threads = std::min<int>(thread_budget(), static_cast<int>(jobs.size()));
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    std::ostringstream os;
    os << "seed,n,delta,logstar_delta,slots,b_gamma,b_tlog,baseline_slots\n";
    for (const auto& row : rows) os << row << "\n";
    emit(c.out, os.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"SINR conflict-graph scheduling toolkit"};
    app.require_subcommand(1);

    Common c;
    int n = 100, t = 2, seeds = 5, dmin = 4, dmax = 12, dstep = 4, k_cap = 64;
    double delta = 1024.0, hc = 1.0;
    std::string kind = "random", mode = "scaled", in_path, schedule_path;
    bool verify = true;

    auto* g = app.add_subcommand("generate", "generate an instance plus invariant report");
    add_common(g, c);
    g->add_option("kind", kind, "random|chain-clique|chain-clique-strong|hard|unit-clique")
        ->required();
    g->add_option("-n", n, "link count");
    g->add_option("--delta", delta, "target length ratio (random)");
    g->add_option("-t", t, "recursion depth (hard)");
    g->add_option("--mode", mode, "faithful|scaled (hard)");
    g->add_option("--hc", hc, "copy-count exponent constant (hard)");
    g->add_option("--k-cap", k_cap, "copy cap in scaled mode (hard)");

    auto* s = app.add_subcommand("schedule", "color the tlog conflict graph into feasible slots");
    add_common(s, c);
    s->add_option("--in", in_path, "instance JSON")->required();
    s->add_flag("--verify,!--no-verify", verify, "verify and repair slots");

    auto* w = app.add_subcommand("capacity", "weighted independent set on the tlog graph");
    add_common(w, c);
    w->add_option("--in", in_path, "instance JSON")->required();

    auto* v = app.add_subcommand("verify", "re-check every slot of a schedule");
    add_common(v, c);
    v->add_option("--in", in_path, "instance JSON")->required();
    v->add_option("--schedule", schedule_path, "schedule JSON")->required();

    auto* m = app.add_subcommand("measure", "B measures, colors, influence, delta");
    add_common(m, c);
    m->add_option("--in", in_path, "instance JSON")->required();

    auto* b = app.add_subcommand("bench", "seed x delta sweep, CSV output");
    add_common(b, c);
    b->add_option("-n", n, "links per instance");
    b->add_option("--seeds", seeds, "number of seeds");
    b->add_option("--dmin", dmin, "min log2 delta");
    b->add_option("--dmax", dmax, "max log2 delta");
    b->add_option("--dstep", dstep, "log2 delta step");

    auto* x = app.add_subcommand("graph", "export the conflict graph as an edge list");
    add_common(x, c);
    x->add_option("--in", in_path, "instance JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (g->parsed()) return run_generate(kind, c, n, delta, t, mode, hc, k_cap);

        if (b->parsed()) return run_bench(c, n, seeds, dmin, dmax, dstep);

        const LinkInstance inst = load_instance(in_path);

        if (s->parsed()) {
            const Schedule sch = schedule(inst, c.gamma, verify);
            emit(c.out, schedule_to_json(inst, sch,
                                         canon("schedule", c,
                                               {{"verify", verify ? "1" : "0"}})));
            return 0;
        }
        if (w->parsed()) {
            const WisSolution sol = wcapacity(inst, inst.weights(), c.gamma);
            emit(c.out, wis_to_json(inst, sol, canon("capacity", c)));
            return 0;
        }
        if (v->parsed()) {
            const auto slots = parse_schedule_slots(read_file(schedule_path), inst);
            int bad = 0;
            for (const auto& slot : slots)
                if (!exact_feasible(inst, slot).feasible()) ++bad;
            std::cerr << bad << " of " << slots.size() << " slots infeasible\n";
            return std::min(bad, 255);
        }
        if (m->parsed()) {
            emit(c.out, measure_to_json(measure(inst, c.gamma), canon("measure", c)));
            return 0;
        }
        if (x->parsed()) {
            const SublinearFn f =
                SublinearFn::parse(c.fspec, inst.sinr().alpha, inst.metric().doubling_dim());
            emit(c.out, graph_export(ConflictGraph(inst, f)));
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
