#pragma once

#include <string>
#include <vector>

#include "sinrc/conflict.hpp"
#include "sinrc/generators.hpp"
#include "sinrc/graphalg.hpp"
#include "sinrc/scheduler.hpp"
#include "sinrc/types.hpp"

namespace sinrc {

inline constexpr const char* kVersion = "0.1.0";

/// Instance schema:
///   {"alpha":a, "beta":b, "noise":n,
///    "metric": {"type":"euclidean","dim":2} |
///              {"type":"matrix","doubling_dim":m,"d":[[...]]},
///    "links": [{"id":1,"s":[x,y]|node,"r":[x,y]|node,"weight":w?}, ...]}
/// Euclidean metrics accept an optional "doubling_dim". The loader rejects
/// NaN and negative distances and validates the instance.
LinkInstance parse_instance(const std::string& text);
LinkInstance load_instance(const std::string& path);

std::string instance_to_json(const LinkInstance& inst);
void save_instance(const LinkInstance& inst, const std::string& path);

/// Every serializer embeds the tool version and the caller's canonical
/// config string for provenance.
std::string coloring_to_json(const LinkInstance& inst, const Coloring& c,
                             const std::string& config);
std::string wis_to_json(const LinkInstance& inst, const WisSolution& w,
                        const std::string& config);
std::string schedule_to_json(const LinkInstance& inst, const Schedule& s,
                             const std::string& config);
std::string invariants_to_json(const GenResult& gen, const std::string& config);
std::string measure_to_json(const MeasureReport& rep, const std::string& config);

/// Slots of link ids, mapped back to positions of the given instance.
std::vector<std::vector<int>> parse_schedule_slots(const std::string& text,
                                                   const LinkInstance& inst);

/// One JSON header line (f descriptor, vertex order by link id), then one
/// "u v" line per edge in link ids.
std::string graph_export(const ConflictGraph& g);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

} // namespace sinrc
