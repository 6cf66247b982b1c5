#pragma once

#include <span>
#include <string>
#include <vector>

#include "sinrc/types.hpp"

namespace sinrc {

/// I(j, i) = l_j^alpha / d(i,j)^alpha; I(i, i) = 0. A zero distance between
/// distinct links yields +infinity.
double influence(const LinkInstance& inst, int j, int i);

/// I(S, i) = sum over j in S of I(j, i).
double influence_on(const LinkInstance& inst, std::span<const int> S, int i);

struct InfluenceReport {
    std::vector<int> links;          // the set, in input order
    std::vector<double> per_link;    // I(S_i^-, i) per member
    double aggregate = 0.0;          // I(S) = max of per_link (0 for singleton)
};

/// Per-link influence of strictly shorter set members (tie-broken order).
InfluenceReport influence_report(const LinkInstance& inst, std::span<const int> S);

/// 1 / (2 * 3^alpha * (4 beta + 2)).
double kesselheim_threshold(double alpha, double beta);

/// Sufficient condition: I(S) below the threshold implies S is feasible.
bool kesselheim_sufficient(const LinkInstance& inst, std::span<const int> S);

/// Exact two-link power-control feasibility at threshold p (noise-free):
/// d_ij * d_ji > p^{2/alpha} * l_i * l_j.
bool pairwise_feasible(const LinkInstance& inst, int i, int j, double p);

struct FeasibilityVerdict {
    enum class Kind { Feasible, Infeasible, Unknown };
    Kind kind = Kind::Unknown;
    std::string method;              // exact_spectral | kesselheim_sufficient | ...
    std::vector<double> power;       // certificate (feasible verdicts)
    std::vector<double> margins;     // per-link SINR margins of the certificate
    double spectral_radius = 0.0;
    bool feasible() const { return kind == Kind::Feasible; }
};

/// Noise-free power-control feasibility at threshold p: the set is feasible
/// iff the spectral radius of the normalized gain matrix is below 1
/// (classical Perron-root criterion). Feasible verdicts carry a power
/// certificate that passes is_P_feasible. A spectral radius within 1e-9 of
/// 1 yields Unknown.
FeasibilityVerdict exact_feasible(const LinkInstance& inst, std::span<const int> S, double p);

/// Convenience overload at the instance's beta.
FeasibilityVerdict exact_feasible(const LinkInstance& inst, std::span<const int> S);

struct MarginReport {
    bool ok = false;
    std::vector<double> margins; // lhs/rhs per link; +inf when rhs is zero
};

/// Checks P(i)/l_i^alpha >= p * (sum_j P(j)/d_ji^alpha + N) for each i in S.
/// Honors the instance's noise term.
MarginReport is_P_feasible(const LinkInstance& inst, std::span<const int> S,
                           std::span<const double> P, double p);

struct StrengthenResult {
    std::vector<std::vector<int>> slots;
    int bound = 0;          // ceil(2 p' / p)
    bool within_bound = false;
};

/// Splits a p-P-feasible set into p'-P-feasible slots by first-fit in
/// decreasing length order. Every output slot is verified p'-P-feasible;
/// exceeding ceil(2p'/p) slots is reported, not fatal.
StrengthenResult strengthen_partition(const LinkInstance& inst, std::span<const int> S,
                                      std::span<const double> P, double p, double p_prime);

struct NecessaryReport {
    bool feasible_3a = false; // passed the 3^alpha-feasibility precondition
    double influence = 0.0;
    double k_nec = 0.0;
    bool pass = true; // vacuously true when the precondition filter excludes S
};

/// For a set verified 3^alpha-feasible, asserts I(S) <= k_nec. Refuses
/// instances whose declared doubling dimension is not below alpha.
NecessaryReport necessary_check(const LinkInstance& inst, std::span<const int> S,
                                double k_nec = 10.0);

} // namespace sinrc
