#include "mecs_cli/serialize.hpp"

#include "json.hpp"

namespace mecs::cli {

namespace {

using nlohmann::ordered_json;

ordered_json summary(const MecsInstance& inst) {
    return {{"n", inst.graph.vertex_count()}, {"m", inst.graph.edge_count()}, {"l", inst.l}, {"p", inst.p}};
}

ordered_json module_json(const ModuleVertices& mv) {
    return {{"vertices", mv.vertices}, {"ports", mv.port}};
}

ordered_json modules_json(const std::vector<ModuleVertices>& modules) {
    ordered_json out = ordered_json::array();
    for (const auto& mv : modules) out.push_back(module_json(mv));
    return out;
}

}  // namespace

std::string trace_json(const KernelTrace& trace) {
    ordered_json steps = ordered_json::array();
    for (const auto& s : trace.steps) {
        steps.push_back({{"rule", to_string(s.rule)}, {"deleted", s.deleted}, {"l_decrease", s.l_decrease}});
    }
    ordered_json j;
    j["original"] = summary(trace.original);
    j["early_yes"] = trace.early_yes;
    j["early_no"] = trace.early_no;
    j["modulator"] = trace.modulator;
    j["steps"] = steps;
    j["final"] = summary(trace.final_instance);
    j["final_modulator"] = trace.final_modulator;
    j["origin"] = trace.origin;
    return j.dump(2) + "\n";
}

std::string layout_json(const GadgetLayout& layout) {
    ordered_json red = ordered_json::array();
    for (const auto& r : layout.red) {
        red.push_back({{"vertex", r.r},
                       {"r_ports", r.r_ports},
                       {"modules", modules_json(r.gadget.modules)},
                       {"outputs", r.gadget.outputs}});
    }
    ordered_json blue = ordered_json::array();
    for (const auto& b : layout.blue) {
        blue.push_back({{"vertex", b.b},
                        {"cycle", b.gadget.cycle},
                        {"modules", modules_json(b.gadget.modules)},
                        {"inputs", b.gadget.inputs},
                        {"pendants", b.gadget.pendants}});
    }
    ordered_json links = ordered_json::array();
    for (const auto& l : layout.links) {
        links.push_back({{"rbds_edge", l.rbds_edge},
                         {"red", l.red},
                         {"output", l.output},
                         {"blue", l.blue},
                         {"input", l.input},
                         {"edges", l.edges}});
    }
    ordered_json j;
    j["instance"] = summary(layout.mecs);
    j["red"] = red;
    j["blue"] = blue;
    j["links"] = links;
    j["internal"] = layout.internal;
    return j.dump(2) + "\n";
}

}  // namespace mecs::cli
