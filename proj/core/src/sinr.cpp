#include "sinrc/sinr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sinrc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<int> sorted_desc_by_length(const LinkInstance& inst, std::span<const int> S) {
    std::vector<int> out(S.begin(), S.end());
    std::sort(out.begin(), out.end(), [&](int a, int b) { return inst.shorter(b, a); });
    return out;
}

} // namespace

double influence(const LinkInstance& inst, int j, int i) {
    if (i == j) return 0.0;
    const double d = inst.link_dist(i, j);
    if (d == 0.0) return kInf;
    return std::pow(inst.link(j).length / d, inst.sinr().alpha);
}

double influence_on(const LinkInstance& inst, std::span<const int> S, int i) {
    double total = 0.0;
    for (int j : S) total += influence(inst, j, i);
    return total;
}

InfluenceReport influence_report(const LinkInstance& inst, std::span<const int> S) {
    InfluenceReport rep;
    rep.links.assign(S.begin(), S.end());
    rep.per_link.reserve(S.size());
    for (int i : S) {
        double sum = 0.0;
        for (int j : S)
            if (j != i && inst.shorter(j, i)) sum += influence(inst, j, i);
        rep.per_link.push_back(sum);
        rep.aggregate = std::max(rep.aggregate, sum);
    }
    return rep;
}

double kesselheim_threshold(double alpha, double beta) {
    return 1.0 / (2.0 * std::pow(3.0, alpha) * (4.0 * beta + 2.0));
}

bool kesselheim_sufficient(const LinkInstance& inst, std::span<const int> S) {
    const InfluenceReport rep = influence_report(inst, S);
    return rep.aggregate < kesselheim_threshold(inst.sinr().alpha, inst.sinr().beta);
}

bool pairwise_feasible(const LinkInstance& inst, int i, int j, double p) {
    if (i == j) throw std::invalid_argument("pairwise_feasible requires i != j");
    const double dij = inst.directed_dist(i, j);
    const double dji = inst.directed_dist(j, i);
    const double li = inst.link(i).length;
    const double lj = inst.link(j).length;
    return dij * dji > std::pow(p, 2.0 / inst.sinr().alpha) * li * lj;
}

MarginReport is_P_feasible(const LinkInstance& inst, std::span<const int> S,
                           std::span<const double> P, double p) {
    if (S.size() != P.size()) throw std::invalid_argument("power vector size mismatch");
    for (double v : P)
        if (!(v > 0.0)) throw std::invalid_argument("power assignment must be positive");
    const double alpha = inst.sinr().alpha;
    MarginReport rep;
    rep.ok = true;
    rep.margins.reserve(S.size());
    for (std::size_t a = 0; a < S.size(); ++a) {
        const int i = S[a];
        const double lhs = P[a] / std::pow(inst.link(i).length, alpha);
        double interference = inst.sinr().noise;
        for (std::size_t b = 0; b < S.size(); ++b) {
            if (b == a) continue;
            const int j = S[b];
            const double dji = inst.directed_dist(j, i);
            if (dji == 0.0) {
                interference = kInf;
                break;
            }
            interference += P[b] / std::pow(dji, alpha);
        }
        const double rhs = p * interference;
        rep.margins.push_back(rhs == 0.0 ? kInf : lhs / rhs);
        if (!(lhs >= rhs)) rep.ok = false;
    }
    return rep;
}

namespace {

/// Solves (I - M) x = 1 by Gaussian elimination with partial pivoting.
std::vector<double> solve_power(const std::vector<std::vector<double>>& M) {
    const int n = static_cast<int>(M.size());
    std::vector<std::vector<double>> a(n, std::vector<double>(n + 1, 0.0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = (i == j ? 1.0 : 0.0) - M[i][j];
        a[i][n] = 1.0;
    }
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
        std::swap(a[c], a[piv]);
        if (a[c][c] == 0.0) return {};
        for (int r = 0; r < n; ++r) {
            if (r == c) continue;
            const double factor = a[r][c] / a[c][c];
            if (factor == 0.0) continue;
            for (int k = c; k <= n; ++k) a[r][k] -= factor * a[c][k];
        }
    }
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
    return x;
}

} // namespace

FeasibilityVerdict exact_feasible(const LinkInstance& inst, std::span<const int> S, double p) {
    FeasibilityVerdict v;
    v.method = "exact_spectral";
    const int k = static_cast<int>(S.size());
    const double alpha = inst.sinr().alpha;

    if (k <= 1) {
        v.kind = FeasibilityVerdict::Kind::Feasible;
        v.spectral_radius = 0.0;
        if (k == 1) {
            const double scale =
                std::max(1.0, p * inst.sinr().noise * std::pow(inst.link(S[0]).length, alpha));
            v.power = {scale * 2.0};
            v.margins = is_P_feasible(inst, S, v.power, p).margins;
        }
        return v;
    }

    std::vector<std::vector<double>> M(k, std::vector<double>(k, 0.0));
    for (int a = 0; a < k; ++a) {
        const double li = std::pow(inst.link(S[a]).length, alpha);
        for (int b = 0; b < k; ++b) {
            if (a == b) continue;
            const double dji = inst.directed_dist(S[b], S[a]);
            if (dji == 0.0) {
                v.kind = FeasibilityVerdict::Kind::Infeasible;
                v.spectral_radius = kInf;
                return v;
            }
            M[a][b] = p * li / std::pow(dji, alpha);
        }
    }

    // Power iteration with Collatz-Wielandt bounds; deterministic all-ones
    // start. The zero diagonal makes the raw matrix periodic (a 2-link set
    // just oscillates), so iterate on M + cI and subtract the shift from
    // the bounds afterwards.
    double shift = 0.0;
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) shift = std::max(shift, M[a][b]);
    if (shift == 0.0) shift = 1.0;
    std::vector<double> vec(k, 1.0), next(k, 0.0);
    double lo = 0.0, hi = kInf;
    for (int it = 0; it < 10000; ++it) {
        double norm = 0.0;
        lo = kInf;
        hi = 0.0;
        for (int a = 0; a < k; ++a) {
            double s = shift * vec[a];
            for (int b = 0; b < k; ++b) s += M[a][b] * vec[b];
            next[a] = s;
            const double ratio = s / vec[a];
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
            norm = std::max(norm, s);
        }
        for (int a = 0; a < k; ++a) vec[a] = next[a] / norm;
        if (hi - lo <= 1e-12 * hi) break;
    }
    lo = std::max(0.0, lo - shift);
    hi -= shift;
    v.spectral_radius = 0.5 * (lo + hi);

    if (hi < 1.0 - 1e-9) {
        std::vector<double> P = solve_power(M);
        if (P.empty()) {
            v.kind = FeasibilityVerdict::Kind::Unknown;
            return v;
        }
        // Headroom for the noise term: the slack of P = MP + 1 is exactly 1
        // per link, so scaling covers p * l^alpha * N.
        double lam = 1.0;
        if (inst.sinr().noise > 0.0)
            for (int a = 0; a < k; ++a)
                lam = std::max(lam, p * inst.sinr().noise * std::pow(inst.link(S[a]).length, alpha));
        for (double& x : P) x *= lam;
        const MarginReport check = is_P_feasible(inst, S, P, p);
        if (!check.ok) {
            v.kind = FeasibilityVerdict::Kind::Unknown;
            return v;
        }
        v.kind = FeasibilityVerdict::Kind::Feasible;
        v.power = std::move(P);
        v.margins = check.margins;
    } else if (lo > 1.0 + 1e-9) {
        v.kind = FeasibilityVerdict::Kind::Infeasible;
    } else {
        v.kind = FeasibilityVerdict::Kind::Unknown;
    }
    return v;
}

FeasibilityVerdict exact_feasible(const LinkInstance& inst, std::span<const int> S) {
    return exact_feasible(inst, S, inst.sinr().beta);
}

StrengthenResult strengthen_partition(const LinkInstance& inst, std::span<const int> S,
                                      std::span<const double> P, double p, double p_prime) {
    if (!is_P_feasible(inst, S, P, p).ok)
        throw std::invalid_argument("strengthen_partition input is not p-P-feasible");

    StrengthenResult out;
    out.bound = static_cast<int>(std::ceil(2.0 * p_prime / p));

    if (p_prime <= p) {
        out.slots.emplace_back(S.begin(), S.end());
        out.within_bound = true;
        return out;
    }

    std::vector<double> power_of(static_cast<std::size_t>(inst.size()), 0.0);
    for (std::size_t a = 0; a < S.size(); ++a) power_of[S[a]] = P[a];

    auto slot_feasible = [&](const std::vector<int>& slot) {
        std::vector<double> pw;
        pw.reserve(slot.size());
        for (int i : slot) pw.push_back(power_of[i]);
        return is_P_feasible(inst, slot, pw, p_prime).ok;
    };

    for (int i : sorted_desc_by_length(inst, S)) {
        bool placed = false;
        for (auto& slot : out.slots) {
            slot.push_back(i);
            if (slot_feasible(slot)) {
                placed = true;
                break;
            }
            slot.pop_back();
        }
        if (!placed) {
            out.slots.push_back({i});
            if (!slot_feasible(out.slots.back()))
                throw std::domain_error("a single link fails the strengthened threshold");
        }
    }

    for (const auto& slot : out.slots)
        if (!slot_feasible(slot)) throw std::logic_error("strengthen_partition postcondition failed");
    out.within_bound = static_cast<int>(out.slots.size()) <= out.bound;
    return out;
}

NecessaryReport necessary_check(const LinkInstance& inst, std::span<const int> S, double k_nec) {
    if (!(inst.metric().doubling_dim() < inst.sinr().alpha))
        throw std::domain_error("necessary_check requires a fading metric (m < alpha)");
    NecessaryReport rep;
    rep.k_nec = k_nec;
    const double p = std::pow(3.0, inst.sinr().alpha);
    rep.feasible_3a = exact_feasible(inst, S, p).feasible();
    if (!rep.feasible_3a) return rep; // excluded by the precondition filter
    rep.influence = influence_report(inst, S).aggregate;
    rep.pass = rep.influence <= k_nec;
    return rep;
}

} // namespace sinrc
