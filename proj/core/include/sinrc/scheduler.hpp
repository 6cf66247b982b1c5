#pragma once

#include <span>
#include <string>
#include <vector>

#include "sinrc/graphalg.hpp"
#include "sinrc/sinr.hpp"

namespace sinrc {

/// Partition of the instance's links into slots. Slots hold link positions
/// sorted ascending; slot order is canonical (by smallest member). With
/// verification on, certificates parallel the slots and are all feasible.
struct Schedule {
    std::vector<std::vector<int>> slots;
    std::vector<FeasibilityVerdict> certificates;
    double gamma = 1.0;
    std::string f_spec;
    int repaired_slots = 0; // slots that had to be split after verification
    bool verified = false;
};

/// Colors the conflict graph for gamma-scaled tlog and emits the color
/// classes as slots. With verify on, every slot is checked by the exact
/// oracle at the instance's beta; failing slots are split first-fit in
/// decreasing length order until each part passes. Requires a fading
/// metric (doubling dimension below alpha).
Schedule schedule(const LinkInstance& inst, double gamma = 1.0, bool verify = true);

/// Weighted capacity: local-ratio weighted independent set on the
/// gamma-scaled tlog conflict graph. The output is independent in that
/// graph by construction.
WisSolution wcapacity(const LinkInstance& inst, std::span<const double> weights,
                      double gamma = 1.0);

/// Exact minimum number of feasible slots, by subset dynamic programming
/// over a precomputed feasibility table; n <= 12.
int opts_oracle(const LinkInstance& inst);

struct MeasureReport {
    int b_gamma = 0;       // B for the constant-gamma graph
    int b_tlog = 0;        // B for the gamma-scaled tlog graph
    int colors_gamma = 0;  // greedy colors on the constant-gamma graph
    int colors_tlog = 0;   // greedy colors on the tlog graph
    double influence = 0.0;
    double delta = 1.0;
    int logstar_delta = 1;
};

MeasureReport measure(const LinkInstance& inst, double gamma = 1.0);

/// Baseline: doubling length classes, first-fit under the exact oracle
/// within each class. Always verified.
Schedule baseline_lengthclass(const LinkInstance& inst);

} // namespace sinrc
