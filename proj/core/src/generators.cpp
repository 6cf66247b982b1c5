#include "sinrc/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "sinrc/conflict.hpp"
#include "sinrc/rng.hpp"
#include "sinrc/sinr.hpp"

namespace sinrc {

namespace {

constexpr double kLengthCap = 1e300;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

/// Minimum x >= lo with f(x) >= target (f non-decreasing). Doubling then
/// bisection; the returned value satisfies the inequality exactly.
/// Infinity signals overflow of the probed range.
double min_arg_at_least(const SublinearFn& f, double target, double lo) {
    lo = std::max(lo, 1.0);
    if (f(lo) >= target) return lo;
    double hi = lo;
    while (f(hi) < target) {
        hi *= 2.0;
        if (hi > kLengthCap) return std::numeric_limits<double>::infinity();
    }
    double a = std::max(lo, hi / 2.0), b = hi;
    for (int it = 0; it < 200 && b - a > 1e-9 * b; ++it) {
        const double mid = a + 0.5 * (b - a);
        (f(mid) >= target ? b : a) = mid;
    }
    return b;
}

LinkInstance chain_instance(const std::vector<double>& lengths, const SinrParams& sinr) {
    Metric metric = Metric::euclidean(1);
    std::vector<int> nodes;
    double x = 0.0;
    nodes.push_back(metric.add_point({x}));
    for (double l : lengths) {
        x += l;
        nodes.push_back(metric.add_point({x}));
    }
    LinkInstance inst(std::move(metric), sinr);
    for (std::size_t i = 0; i < lengths.size(); ++i)
        inst.add_link(static_cast<int>(i + 1), nodes[i], nodes[i + 1]);
    inst.validate();
    return inst;
}

InvariantCheck check_complete(const LinkInstance& inst, const SublinearFn& f) {
    const ConflictGraph g(inst, f);
    const long want = static_cast<long>(inst.size()) * (inst.size() - 1) / 2;
    InvariantCheck c{"complete_conflict_graph", g.edge_count() == want, true,
                     std::to_string(g.edge_count()) + "/" + std::to_string(want) + " edges"};
    return c;
}

InvariantCheck check_star_bound(const LinkInstance& inst, const SublinearFn& f,
                                const std::string& name) {
    InvariantCheck c{name, false, true, ""};
    try {
        const int star = f.star(inst.delta());
        c.pass = inst.size() >= star - 3;
        c.detail = "n=" + std::to_string(inst.size()) + " f*(delta)=" + std::to_string(star);
    } catch (const std::exception& e) {
        c.detail = std::string("f* unavailable: ") + e.what();
    }
    return c;
}

} // namespace

GenResult random_planar(int n, double delta_target, std::uint64_t seed, SinrParams sinr) {
    if (n < 1) throw std::invalid_argument("random_planar requires n >= 1");
    if (delta_target < 1.0) throw std::invalid_argument("delta_target must be >= 1");
    Rng rng(seed);
    const double side = 10.0 * delta_target;
    Metric metric = Metric::euclidean(2);
    struct Row {
        int s, r;
    };
    std::vector<Row> rows;
    rows.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double sx = rng.uniform(0.0, side);
        const double sy = rng.uniform(0.0, side);
        const double len = rng.log_uniform(1.0, delta_target);
        const double ang = rng.uniform(0.0, 2.0 * M_PI);
        const int s = metric.add_point({sx, sy});
        const int r = metric.add_point({sx + len * std::cos(ang), sy + len * std::sin(ang)});
        rows.push_back({s, r});
    }
    LinkInstance out(std::move(metric), sinr);
    for (int i = 0; i < n; ++i) out.add_link(i + 1, rows[i].s, rows[i].r);
    out.validate();

    GenResult res{std::move(out), {}};
    res.invariants.push_back(
        {"delta_measured", true, true, "delta=" + fmt(res.instance.delta())});
    return res;
}

GenResult chain_clique(int n, const SublinearFn& f, SinrParams sinr) {
    if (n < 1) throw std::invalid_argument("chain_clique requires n >= 1");
    if (f.family() == SublinearFn::Family::Constant)
        throw std::invalid_argument("chain_clique requires an unbounded function family");

    std::vector<double> lengths{1.0};
    while (static_cast<int>(lengths.size()) < n) {
        const int i = static_cast<int>(lengths.size());
        double cand = 2.0 * lengths[i - 1];
        double tail = 0.0; // d(i+1, j), accumulated from the right
        for (int j = i - 1; j >= 0; --j) {
            if (tail > 0.0) {
                const double target = 2.0 * tail / lengths[j];
                const double r = min_arg_at_least(f, target, cand / lengths[j]);
                if (!std::isfinite(r) || r * lengths[j] > kLengthCap) throw ChainOverflow(i);
                cand = std::max(cand, r * lengths[j]);
            }
            tail += lengths[j];
        }
        if (cand > kLengthCap) throw ChainOverflow(i);
        lengths.push_back(cand);
    }

    GenResult res{chain_instance(lengths, sinr), {}};
    res.invariants.push_back(check_complete(res.instance, f));

    bool doubling = true;
    for (std::size_t i = 1; i < lengths.size(); ++i)
        if (lengths[i] < 2.0 * lengths[i - 1]) doubling = false;
    res.invariants.push_back({"length_doubling", doubling, true, ""});

    // Odd-index sub-chain prefixes carry bounded influence.
    bool odd_ok = true;
    double worst = 0.0;
    std::vector<int> odd;
    for (int pos = 0; pos < res.instance.size(); pos += 2) {
        odd.push_back(pos);
        const double agg = influence_report(res.instance, odd).aggregate;
        worst = std::max(worst, agg);
        if (agg > 1.0) odd_ok = false;
    }
    res.invariants.push_back({"odd_subchain_influence", odd_ok, true, "max=" + fmt(worst)});
    res.invariants.push_back(check_star_bound(res.instance, f, "n_vs_fstar"));
    return res;
}

GenResult chain_clique_strong(int n, const SublinearFn& g, double c_override, SinrParams sinr) {
    if (n < 1) throw std::invalid_argument("chain_clique_strong requires n >= 1");
    if (g.family() == SublinearFn::Family::Constant)
        throw std::invalid_argument("chain_clique_strong requires an unbounded function family");

    const double floor_val = std::max(c_override, g.fixed_point());
    std::vector<double> lengths{1.0};
    while (static_cast<int>(lengths.size()) < n) {
        const int i = static_cast<int>(lengths.size());
        double lo = std::nextafter(floor_val, std::numeric_limits<double>::infinity());
        lo = std::max(lo, lengths[i - 1]);
        const double cand = min_arg_at_least(g, 2.0 * lengths[i - 1], lo);
        if (!std::isfinite(cand) || cand > kLengthCap) throw ChainOverflow(i);
        lengths.push_back(cand);
    }

    GenResult res{chain_instance(lengths, sinr), {}};
    res.invariants.push_back(check_complete(res.instance, g));

    // Minimality of the length rule, up to the solver's 1e-9 relative
    // tolerance: the constraint holds at l_i but not noticeably below it
    // (unless l_i sits on the floor).
    bool minimal = true;
    for (std::size_t i = 1; i < lengths.size(); ++i) {
        if (g(lengths[i]) < 2.0 * lengths[i - 1]) minimal = false;
        const double below = lengths[i] * (1.0 - 1e-6);
        if (below > floor_val && g(below) >= 2.0 * lengths[i - 1]) minimal = false;
    }
    res.invariants.push_back({"length_rule_minimal", minimal, true, ""});
    res.invariants.push_back(check_star_bound(res.instance, g, "n_vs_gstar"));
    return res;
}

GenResult hard_instance(int t, const SublinearFn& f, HardMode mode, double c, int k_cap,
                        double C, double c0, SinrParams sinr, std::uint64_t seed) {
    if (t < 1) throw std::invalid_argument("hard_instance requires t >= 1");
    if (c <= 0.0 || C <= 0.0) throw std::invalid_argument("constants must be positive");
    if (mode == HardMode::Scaled && k_cap < 1)
        throw std::invalid_argument("k_cap must be >= 1");
    const double alpha = sinr.alpha;
    if (c0 < 0.0) c0 = 1.0 / kesselheim_threshold(alpha, sinr.beta);

    const auto g = [&](double x) { return C * std::pow(std::log2(x), 1.0 / alpha); };

    struct Interval {
        double a, b;
    };
    std::vector<Interval> cur{{0.0, 1.0}};
    double ell = 1.0;
    int long_idx = -1;
    std::vector<int> copy_of(1, 0); // top-level copy index per link; long link = -1

    for (int level = 2; level <= t; ++level) {
        long long k;
        if (c * ell > 60.0) {
            if (mode == HardMode::Faithful)
                throw std::invalid_argument("faithful construction too large at level " +
                                            std::to_string(level) + ": 2^(c*diam) copies with diam " +
                                            fmt(ell));
            k = k_cap;
        } else {
            k = std::max<long long>(1, std::llround(std::exp2(c * ell)));
            if (mode == HardMode::Scaled) k = std::min<long long>(k, k_cap);
        }
        const double n_est = static_cast<double>(k) * cur.size() + 1.0;
        if (n_est > 2e5)
            throw std::invalid_argument("construction size estimate " + fmt(n_est) +
                                        " links exceeds the build limit at level " +
                                        std::to_string(level));

        const double lj = std::pow(8.0, static_cast<double>(k + 1)) * ell;
        const double last_scale = std::pow(8.0, static_cast<double>(k));
        if (!std::isfinite(lj) || lj > kLengthCap || last_scale * ell > kLengthCap)
            throw std::invalid_argument("length overflow at level " + std::to_string(level));

        std::vector<Interval> next;
        next.reserve(static_cast<std::size_t>(n_est));
        std::vector<int> next_copy;
        next_copy.reserve(static_cast<std::size_t>(n_est));

        next.push_back({-lj, 0.0});
        next_copy.push_back(-1);
        double right = 0.0;
        for (long long s = 1; s <= k; ++s) {
            const double scale = std::pow(8.0, static_cast<double>(s));
            const double ells = scale * ell;
            const double ds = 2.0 * ells * g(lj / ells);
            for (const auto& iv : cur) {
                next.push_back({ds + scale * iv.a, ds + scale * iv.b});
                next_copy.push_back(static_cast<int>(s - 1));
            }
            right = ds + ells;
        }
        for (auto& iv : next) {
            iv.a += lj;
            iv.b += lj;
        }
        ell = lj + right;
        cur = std::move(next);
        copy_of = std::move(next_copy);
        long_idx = 0;
    }

    Metric metric = Metric::euclidean(1);
    std::vector<std::pair<int, int>> nodes;
    nodes.reserve(cur.size());
    for (const auto& iv : cur)
        nodes.emplace_back(metric.add_point({iv.a}), metric.add_point({iv.b}));
    LinkInstance inst(std::move(metric), sinr);
    for (std::size_t i = 0; i < cur.size(); ++i)
        inst.add_link(static_cast<int>(i + 1), nodes[i].first, nodes[i].second);
    inst.validate();

    GenResult res{std::move(inst), {}};

    {
        const ConflictGraph cg(res.instance, f);
        res.invariants.push_back({"f_independent", cg.edge_count() == 0, true,
                                  std::to_string(cg.edge_count()) + " edges"});
    }

    {
        bool below = true;
        double worst = 1.0;
        const double delta = res.instance.delta();
        for (int p = 0; p < 64; ++p) {
            const double x = std::exp2(1.0 + (std::log2(std::max(delta, 2.0)) - 1.0) * p / 63.0);
            if (f(x) > g(x) * (1.0 + 1e-12)) {
                below = false;
                worst = x;
            }
        }
        res.invariants.push_back({"f_below_placement_bound", below, true,
                                  below ? "" : "violated near x=" + fmt(worst)});
    }

    if (long_idx >= 0) {
        // Group top-level copies, then sample transversals.
        int k = 0;
        for (int cidx : copy_of) k = std::max(k, cidx + 1);
        std::vector<std::vector<int>> groups(k);
        for (std::size_t i = 0; i < copy_of.size(); ++i)
            if (copy_of[i] >= 0) groups[copy_of[i]].push_back(static_cast<int>(i));

        Rng rng(seed);
        double min_sum = std::numeric_limits<double>::infinity();
        for (int trial = 0; trial < 100; ++trial) {
            double sum = 0.0;
            for (const auto& grp : groups) {
                const int pick = grp[rng.uniform_int(0, static_cast<int>(grp.size()) - 1)];
                sum += influence(res.instance, pick, long_idx);
            }
            min_sum = std::min(min_sum, sum);
        }
        const bool exact = mode == HardMode::Faithful;
        const bool above = min_sum > c0;
        res.invariants.push_back({"transversal_influence", exact ? above : true, exact,
                                  "min=" + fmt(min_sum) + " threshold=" + fmt(c0) +
                                      (exact ? "" : " (weakened by copy cap)") +
                                      (above ? "" : " below threshold")});
    }
    return res;
}

GenResult unit_metric_clique(int n, const SublinearFn& f, SinrParams sinr) {
    if (n < 1) throw std::invalid_argument("unit_metric_clique requires n >= 1");
    const double f1 = f(1.0);
    const int nodes = 2 * n;
    std::vector<std::vector<double>> d(nodes, std::vector<double>(nodes, 0.0));
    for (int i = 0; i < n; ++i) {
        d[2 * i][2 * i + 1] = d[2 * i + 1][2 * i] = 1.0;
        for (int j = i + 1; j < n; ++j) {
            d[2 * i][2 * j] = d[2 * j][2 * i] = 2.0 * f1;
            d[2 * i][2 * j + 1] = d[2 * j + 1][2 * i] = 2.0 * f1 + 1.0;
            d[2 * i + 1][2 * j] = d[2 * j][2 * i + 1] = 2.0 * f1 + 1.0;
            d[2 * i + 1][2 * j + 1] = d[2 * j + 1][2 * i + 1] = 2.0 * f1 + 2.0;
        }
    }

    InvariantCheck metric_ok{"metric_valid", true, true, ""};
    Metric metric = [&]() -> Metric {
        try {
            return Metric::matrix(d, 1.0);
        } catch (const std::exception& e) {
            metric_ok.pass = false;
            metric_ok.detail = e.what();
            return Metric::matrix(d, 1.0, false);
        }
    }();

    LinkInstance inst(std::move(metric), sinr);
    for (int i = 0; i < n; ++i) inst.add_link(i + 1, 2 * i, 2 * i + 1);
    inst.validate();

    GenResult res{std::move(inst), {}};
    res.invariants.push_back(std::move(metric_ok));
    const ConflictGraph cg(res.instance, f);
    res.invariants.push_back({"f_independent", cg.edge_count() == 0, true,
                              std::to_string(cg.edge_count()) + " edges"});
    return res;
}

} // namespace sinrc
