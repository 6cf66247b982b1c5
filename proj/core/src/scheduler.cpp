#include "sinrc/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "sinrc/conflict.hpp"

namespace sinrc {

namespace {

void require_fading(const LinkInstance& inst) {
    if (!(inst.metric().doubling_dim() < inst.sinr().alpha))
        throw std::domain_error("fading metric required: doubling dimension must be below alpha");
}

SublinearFn tlog_for(const LinkInstance& inst, double gamma) {
    return SublinearFn::tlog(gamma, inst.sinr().alpha, inst.metric().doubling_dim());
}

void canonicalize(Schedule& s) {
    std::vector<std::size_t> idx(s.slots.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        idx[i] = i;
        std::sort(s.slots[i].begin(), s.slots[i].end());
    }
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return s.slots[a][0] < s.slots[b][0]; });
    std::vector<std::vector<int>> slots;
    std::vector<FeasibilityVerdict> certs;
    for (std::size_t i : idx) {
        slots.push_back(std::move(s.slots[i]));
        if (!s.certificates.empty()) certs.push_back(std::move(s.certificates[i]));
    }
    s.slots = std::move(slots);
    s.certificates = std::move(certs);
}

/// Splits one slot first-fit in decreasing length order so that every part
/// passes the exact oracle. Singletons always pass.
std::vector<std::vector<int>> split_slot(const LinkInstance& inst, std::vector<int> slot) {
    std::sort(slot.begin(), slot.end(), [&](int a, int b) { return inst.shorter(b, a); });
    std::vector<std::vector<int>> parts;
    std::vector<FeasibilityVerdict> unused;
    for (int v : slot) {
        bool placed = false;
        for (auto& part : parts) {
            part.push_back(v);
            if (exact_feasible(inst, part).feasible()) {
                placed = true;
                break;
            }
            part.pop_back();
        }
        if (!placed) parts.push_back({v});
    }
    return parts;
}

} // namespace

Schedule schedule(const LinkInstance& inst, double gamma, bool verify) {
    require_fading(inst);
    if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");

    const SublinearFn f = tlog_for(inst, gamma);
    Schedule out;
    out.gamma = gamma;
    out.f_spec = f.spec_string();
    out.verified = verify;
    if (inst.empty()) return out;

    const ConflictGraph g(inst, f);
    const Coloring col = greedy_color(g);
    out.slots.assign(col.colors_used, {});
    for (int v = 0; v < inst.size(); ++v) out.slots[col.color[v]].push_back(v);

    if (verify) {
        std::vector<std::vector<int>> verified;
        for (auto& slot : out.slots) {
            if (exact_feasible(inst, slot).feasible()) {
                verified.push_back(std::move(slot));
                continue;
            }
            auto parts = split_slot(inst, std::move(slot));
            out.repaired_slots += static_cast<int>(parts.size()) - 1;
            for (auto& p : parts) verified.push_back(std::move(p));
        }
        out.slots = std::move(verified);
        out.certificates.reserve(out.slots.size());
        for (const auto& slot : out.slots) out.certificates.push_back(exact_feasible(inst, slot));
    }
    canonicalize(out);
    return out;
}

WisSolution wcapacity(const LinkInstance& inst, std::span<const double> weights, double gamma) {
    require_fading(inst);
    const ConflictGraph g(inst, tlog_for(inst, gamma));
    return local_ratio_wis(g, weights);
}

int opts_oracle(const LinkInstance& inst) {
    const int n = inst.size();
    if (n > 12) throw std::invalid_argument("opts_oracle is limited to n <= 12");
    if (n == 0) return 0;

    const int full = (1 << n) - 1;
    std::vector<char> feasible(full + 1, 0);
    std::vector<int> members;
    for (int mask = 1; mask <= full; ++mask) {
        members.clear();
        for (int v = 0; v < n; ++v)
            if (mask & (1 << v)) members.push_back(v);
        feasible[mask] = exact_feasible(inst, members).feasible();
    }

    std::vector<int> dp(full + 1, n + 1);
    dp[0] = 0;
    for (int mask = 1; mask <= full; ++mask) {
        const int low = mask & -mask;
        for (int sub = mask; sub; sub = (sub - 1) & mask) {
            if (!(sub & low) || !feasible[sub]) continue;
            dp[mask] = std::min(dp[mask], dp[mask ^ sub] + 1);
        }
    }
    return dp[full];
}

MeasureReport measure(const LinkInstance& inst, double gamma) {
    require_fading(inst);
    MeasureReport rep;
    if (inst.empty()) return rep;

    const SublinearFn fg = SublinearFn::constant(gamma);
    const SublinearFn ft = tlog_for(inst, gamma);
    rep.b_gamma = b_measure(inst, fg);
    rep.b_tlog = b_measure(inst, ft);
    rep.colors_gamma = greedy_color(ConflictGraph(inst, fg)).colors_used;
    rep.colors_tlog = greedy_color(ConflictGraph(inst, ft)).colors_used;

    std::vector<int> all(inst.size());
    for (int i = 0; i < inst.size(); ++i) all[i] = i;
    rep.influence = influence_report(inst, all).aggregate;
    rep.delta = inst.delta();
    rep.logstar_delta = SublinearFn::log2fn().star(rep.delta);
    return rep;
}

Schedule baseline_lengthclass(const LinkInstance& inst) {
    Schedule out;
    out.f_spec = "lengthclass";
    out.verified = true;
    if (inst.empty()) return out;

    double lmin = inst.link(0).length;
    for (const Link& l : inst.links()) lmin = std::min(lmin, l.length);

    // Doubling length classes [lmin 2^k, lmin 2^{k+1}), first-fit inside each.
    std::map<int, std::vector<int>> classes;
    for (int v = 0; v < inst.size(); ++v) {
        const int cls = static_cast<int>(std::floor(std::log2(inst.link(v).length / lmin)));
        classes[cls].push_back(v);
    }
    for (auto& [cls, members] : classes) {
        std::sort(members.begin(), members.end(),
                  [&](int a, int b) { return inst.shorter(b, a); });
        std::vector<std::vector<int>> slots;
        for (int v : members) {
            bool placed = false;
            for (auto& slot : slots) {
                slot.push_back(v);
                if (exact_feasible(inst, slot).feasible()) {
                    placed = true;
                    break;
                }
                slot.pop_back();
            }
            if (!placed) slots.push_back({v});
        }
        for (auto& slot : slots) out.slots.push_back(std::move(slot));
    }
    out.certificates.reserve(out.slots.size());
    for (const auto& slot : out.slots) out.certificates.push_back(exact_feasible(inst, slot));
    canonicalize(out);
    return out;
}

} // namespace sinrc
