#include "sinrc/io.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace sinrc {

using nlohmann::json;

namespace {

json meta_block(const std::string& config) {
    return json{{"version", kVersion}, {"config", config}};
}

double require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + " is not finite");
    return v;
}

std::vector<double> parse_point(const json& j, int dim, const char* field) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw std::invalid_argument(std::string("link field '") + field +
                                    "' must be a coordinate array of length " +
                                    std::to_string(dim));
    std::vector<double> p;
    p.reserve(dim);
    for (const auto& c : j) p.push_back(require_finite(c.get<double>(), field));
    return p;
}

} // namespace

LinkInstance parse_instance(const std::string& text) {
    const json j = json::parse(text);

    SinrParams sinr;
    sinr.alpha = j.value("alpha", 3.0);
    sinr.beta = j.value("beta", 1.0);
    sinr.noise = j.value("noise", 0.0);

    if (!j.contains("metric")) throw std::invalid_argument("missing 'metric' block");
    const json& jm = j.at("metric");
    const std::string type = jm.at("type").get<std::string>();

    if (type == "euclidean") {
        const int dim = jm.at("dim").get<int>();
        Metric metric = Metric::euclidean(dim, jm.value("doubling_dim", 0.0));
        struct Row {
            int id, s, r;
            double w;
        };
        std::vector<Row> rows;
        for (const auto& jl : j.at("links")) {
            const int s = metric.add_point(parse_point(jl.at("s"), dim, "s"));
            const int r = metric.add_point(parse_point(jl.at("r"), dim, "r"));
            rows.push_back({jl.at("id").get<int>(), s, r, jl.value("weight", 1.0)});
        }
        LinkInstance inst(std::move(metric), sinr);
        for (const auto& row : rows) inst.add_link(row.id, row.s, row.r, row.w);
        inst.validate();
        return inst;
    }

    if (type == "matrix") {
        const double m = jm.at("doubling_dim").get<double>();
        std::vector<std::vector<double>> d;
        for (const auto& jr : jm.at("d")) {
            std::vector<double> row;
            for (const auto& v : jr) {
                const double x = v.get<double>();
                if (!std::isfinite(x) || x < 0.0)
                    throw std::invalid_argument("distance matrix entries must be finite and nonnegative");
                row.push_back(x);
            }
            d.push_back(std::move(row));
        }
        LinkInstance inst(Metric::matrix(std::move(d), m), sinr);
        for (const auto& jl : j.at("links"))
            inst.add_link(jl.at("id").get<int>(), jl.at("s").get<int>(), jl.at("r").get<int>(),
                          jl.value("weight", 1.0));
        inst.validate();
        return inst;
    }

    throw std::invalid_argument("metric type must be 'euclidean' or 'matrix'");
}

LinkInstance load_instance(const std::string& path) { return parse_instance(read_file(path)); }

std::string instance_to_json(const LinkInstance& inst) {
    json j;
    j["alpha"] = inst.sinr().alpha;
    j["beta"] = inst.sinr().beta;
    j["noise"] = inst.sinr().noise;

    const Metric& m = inst.metric();
    if (m.kind() == Metric::Kind::Euclidean) {
        json jm{{"type", "euclidean"}, {"dim", m.dim()}};
        if (m.doubling_dim() != static_cast<double>(m.dim()))
            jm["doubling_dim"] = m.doubling_dim();
        j["metric"] = jm;
    } else {
        j["metric"] = json{{"type", "matrix"},
                           {"doubling_dim", m.doubling_dim()},
                           {"d", m.matrix_data()}};
    }

    json links = json::array();
    for (int i = 0; i < inst.size(); ++i) {
        const Link& l = inst.link(i);
        json jl;
        jl["id"] = l.id;
        if (m.kind() == Metric::Kind::Euclidean) {
            jl["s"] = m.point(l.sender);
            jl["r"] = m.point(l.receiver);
        } else {
            jl["s"] = l.sender;
            jl["r"] = l.receiver;
        }
        if (inst.weight(i) != 1.0) jl["weight"] = inst.weight(i);
        links.push_back(std::move(jl));
    }
    j["links"] = std::move(links);
    return j.dump(2) + "\n";
}

void save_instance(const LinkInstance& inst, const std::string& path) {
    write_file(path, instance_to_json(inst));
}

std::string coloring_to_json(const LinkInstance& inst, const Coloring& c,
                             const std::string& config) {
    json colors;
    for (int i = 0; i < inst.size(); ++i)
        colors[std::to_string(inst.link(i).id)] = c.color[i];
    json j{{"colors", colors}, {"colors_used", c.colors_used}, {"meta", meta_block(config)}};
    return j.dump(2) + "\n";
}

std::string wis_to_json(const LinkInstance& inst, const WisSolution& w,
                        const std::string& config) {
    json chosen = json::array();
    for (int v : w.chosen) chosen.push_back(inst.link(v).id);
    json j{{"chosen", chosen}, {"weight", w.total_weight}, {"meta", meta_block(config)}};
    return j.dump(2) + "\n";
}

std::string schedule_to_json(const LinkInstance& inst, const Schedule& s,
                             const std::string& config) {
    json slots = json::array();
    for (const auto& slot : s.slots) {
        json ids = json::array();
        for (int v : slot) ids.push_back(inst.link(v).id);
        slots.push_back(std::move(ids));
    }
    json certs = json::array();
    for (const auto& c : s.certificates) {
        json jc;
        jc["feasible"] = c.feasible();
        jc["method"] = c.method;
        jc["spectral_radius"] = c.spectral_radius;
        if (!c.power.empty()) {
            jc["power"] = c.power;
            jc["margins"] = c.margins;
        }
        certs.push_back(std::move(jc));
    }
    json meta = meta_block(config);
    meta["f"] = s.f_spec;
    meta["gamma"] = s.gamma;
    meta["repaired_slots"] = s.repaired_slots;
    meta["verified"] = s.verified;
    json j{{"slots", slots}, {"certificates", certs}, {"meta", meta}};
    return j.dump(2) + "\n";
}

std::string invariants_to_json(const GenResult& gen, const std::string& config) {
    json checks = json::array();
    for (const auto& c : gen.invariants)
        checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"exact", c.exact},
                              {"detail", c.detail}});
    json j{{"invariants", checks}, {"all_pass", gen.all_pass()}, {"meta", meta_block(config)}};
    return j.dump(2) + "\n";
}

std::string measure_to_json(const MeasureReport& rep, const std::string& config) {
    json j{{"b_gamma", rep.b_gamma},
           {"b_tlog", rep.b_tlog},
           {"colors_gamma", rep.colors_gamma},
           {"colors_tlog", rep.colors_tlog},
           {"influence", rep.influence},
           {"delta", rep.delta},
           {"logstar_delta", rep.logstar_delta},
           {"meta", meta_block(config)}};
    return j.dump(2) + "\n";
}

std::vector<std::vector<int>> parse_schedule_slots(const std::string& text,
                                                   const LinkInstance& inst) {
    const json j = json::parse(text);
    std::map<int, int> pos_of_id;
    for (int i = 0; i < inst.size(); ++i) pos_of_id[inst.link(i).id] = i;

    std::vector<std::vector<int>> slots;
    for (const auto& js : j.at("slots")) {
        std::vector<int> slot;
        for (const auto& jid : js) {
            const auto it = pos_of_id.find(jid.get<int>());
            if (it == pos_of_id.end())
                throw std::invalid_argument("schedule references unknown link id " +
                                            jid.dump());
            slot.push_back(it->second);
        }
        slots.push_back(std::move(slot));
    }
    return slots;
}

std::string graph_export(const ConflictGraph& g) {
    const LinkInstance& inst = g.instance();
    json order = json::array();
    for (int v : g.order()) order.push_back(inst.link(v).id);
    json header{{"f", g.fn().spec_string()}, {"order", order}, {"version", kVersion}};

    std::ostringstream os;
    os << header.dump() << "\n";
    for (int i = 0; i < g.size(); ++i)
        for (int j : g.post_neighbors(i))
            os << inst.link(i).id << " " << inst.link(j).id << "\n";
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace sinrc
