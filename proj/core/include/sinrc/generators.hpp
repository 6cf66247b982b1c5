#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sinrc/funclib.hpp"
#include "sinrc/types.hpp"

namespace sinrc {

/// One construction invariant, re-verified by the graph/feasibility modules
/// rather than trusted from the generator. `exact` is false when a scaled
/// construction can only approximate the property.
struct InvariantCheck {
    std::string name;
    bool pass = false;
    bool exact = true;
    std::string detail;
};

struct GenResult {
    LinkInstance instance;
    std::vector<InvariantCheck> invariants;

    bool all_pass() const {
        for (const auto& c : invariants)
            if (!c.pass) return false;
        return true;
    }
};

/// Thrown when a chain construction would push lengths past 1e300.
struct ChainOverflow : std::runtime_error {
    explicit ChainOverflow(int max_n_)
        : std::runtime_error("chain length overflow; max achievable n = " +
                             std::to_string(max_n_)),
          max_n(max_n_) {}
    int max_n;
};

/// Random ensemble: senders uniform in a square of side 10 * delta_target,
/// lengths log-uniform in [1, delta_target], receivers at a uniform random
/// angle. Euclidean dim 2. Identical arguments give identical instances.
GenResult random_planar(int n, double delta_target, std::uint64_t seed, SinrParams sinr = {});

/// Collinear chain with shared endpoints (r_i = s_{i+1}), l_1 = 1 and each
/// l_{i+1} the minimum value with l_{i+1} >= 2 l_i and, for every j <= i,
/// 2 d(i+1,j) <= l_j f(l_{i+1}/l_j). The resulting G_f is complete.
/// Rejects the constant family; throws ChainOverflow when lengths pass 1e300.
GenResult chain_clique(int n, const SublinearFn& f, SinrParams sinr = {});

/// Chain variant for strongly sub-linear g: l_{i+1} is the minimum value
/// above max(c_override, x0) with g(l_{i+1}) >= 2 l_i. Reports n against
/// g*(Delta). c_override <= 0 means "just the fixed-point floor".
GenResult chain_clique_strong(int n, const SublinearFn& g, double c_override = 0.0,
                              SinrParams sinr = {});

enum class HardMode { Faithful, Scaled };

/// Recursive collinear construction: level t+1 places one long link and k
/// copies of level t, the s-th copy scaled by 8^s and separated from the
/// long link by 2 l g(l_long / l) with g(x) = C log2^{1/alpha}(x). The copy
/// count is 2^(c * diam) in faithful mode (size-checked before allocation)
/// and capped at k_cap when scaled. Invariants: pairwise f-independence
/// (exact in both modes) and transversal influence on the long link above
/// c0 (weakened under scaling).
GenResult hard_instance(int t, const SublinearFn& f, HardMode mode = HardMode::Scaled,
                        double c = 1.0, int k_cap = 64, double C = 1.0, double c0 = -1.0,
                        SinrParams sinr = {}, std::uint64_t seed = 1);

/// Matrix-metric instance of n unit links with d(s_i,s_j) = 2f(1),
/// d(s_i,r_j) = 2f(1)+1, d(r_i,r_j) = 2f(1)+2 for i != j. The whole set is
/// f-independent, yet only bounded subsets are SINR-feasible.
GenResult unit_metric_clique(int n, const SublinearFn& f, SinrParams sinr = {});

} // namespace sinrc
