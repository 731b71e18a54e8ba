#include "girthlab/report.hpp"

#include <cstdio>

namespace girthlab {

using nlohmann::json;

namespace {

json optional_to_json(const std::optional<double>& v) {
    if (v)
        return *v;
    return nullptr;
}

} // namespace

json to_json(const CycleWitness& w) {
    return {{"vertices", w.vertices},
            {"length", w.length()},
            {"provenance", to_string(w.provenance)}};
}

json to_json(const ExpansionTrace& t) {
    json layers = json::array();
    for (const auto& layer : t.layers) {
        layers.push_back({{"pivot", layer.pivot},
                          {"subgraph_size", layer.subgraph_size},
                          {"pivot_outdeg_in_sub", layer.pivot_outdeg_in_sub},
                          {"pivot_outdeg", layer.pivot_outdeg},
                          {"members", layer.members},
                          {"cumulative_lower_bound",
                           layer.cumulative_lower_bound}});
    }
    json j{{"mode", to_string(t.mode)},
           {"anchor_v", t.anchor_v},
           {"layers", std::move(layers)}};
    if (t.anchor_u >= 0)
        j["anchor_u"] = t.anchor_u;
    return j;
}

json to_json(const GlobalStats& g) {
    return {{"transitive_triangles", g.transitive_triangles},
            {"tau", optional_to_json(g.tau)},
            {"outdegree", g.outdegree ? json(*g.outdegree) : json(nullptr)},
            {"sum_f_vertex", g.sum_f_vertex},
            {"sum_indegree_sq", g.sum_indegree_sq},
            {"out2claws", g.out2claws}};
}

json to_json(const AuditReport& r) {
    json items = json::array();
    for (const auto& item : r.items) {
        json entry{{"lhs", item.lhs}, {"rhs", item.rhs}, {"slack", item.slack}};
        if (item.u >= 0)
            entry["u"] = item.u;
        if (item.v >= 0)
            entry["v"] = item.v;
        if (!item.label.empty())
            entry["label"] = item.label;
        if (!item.defined)
            entry["undefined"] = true;
        items.push_back(std::move(entry));
    }
    json j{{"inequality", r.inequality_id},
           {"m", r.m},
           {"alpha", r.alpha},
           {"all_hold", r.all_hold},
           {"violations", r.violations},
           {"items", std::move(items)}};
    if (r.a)
        j["a"] = *r.a;
    if (r.b)
        j["b"] = *r.b;
    if (r.c)
        j["c"] = *r.c;
    return j;
}

json to_json(const FasResult& r) {
    json removed = json::array();
    for (const auto& [u, v] : r.removed)
        removed.push_back({u, v});
    return {{"beta", r.beta},
            {"removed", std::move(removed)},
            {"order", r.order},
            {"exact", r.exact}};
}

json to_json(const Fact1Report& r) {
    return {{"beta", r.beta},         {"beta_exact", r.beta_exact},
            {"gamma", r.gamma},       {"c", r.c},
            {"bound", r.bound},       {"status", to_string(r.status)}};
}

json to_json(const Lemma2Report& r) {
    return {{"min_outdeg", r.min_outdeg},
            {"witness_vertex", r.witness_vertex},
            {"bound", r.bound},
            {"holds", r.holds}};
}

json to_json(const SullivanReport& r) {
    return {{"beta", r.beta},
            {"gamma", r.gamma},
            {"ratio", r.ratio},
            {"conjectured", r.conjectured}};
}

json to_json(const constants::Certificate& c) {
    json j{{"theorem", c.theorem},
           {"m", c.m},
           {"alpha_used", c.alpha_used},
           {"verdict", c.certified ? "certified" : "failed"},
           {"notes", c.notes}};
    if (c.theorem == 1) {
        j["residual_at_alpha"] = c.residual_at_alpha;
        j["residual_below"] = c.residual_below;
    } else {
        j["tau_star"] = c.tau_star;
        j["grid_points"] = c.grid_points;
        j["max_g"] = c.max_g;
        j["max_envelope"] = c.max_envelope;
        j["witness_tau"] = optional_to_json(c.witness_tau);
    }
    return j;
}

json to_json(const constants::BoundSet& b) {
    return {{"m", b.m},
            {"alpha", b.alpha},
            {"alpha_residual", b.alpha_residual},
            {"c", b.c},
            {"beta_paper", optional_to_json(b.beta_paper)},
            {"a", optional_to_json(b.a)},
            {"b", optional_to_json(b.b)},
            {"tau_star", optional_to_json(b.tau_star)},
            {"lambert_bound", b.lambert_bound},
            {"shen_general", optional_to_json(b.shen_general)},
            {"shen_large", optional_to_json(b.shen_large)},
            {"best_known", b.best_known}};
}

json make_report(const std::string& command, json inputs, json payload) {
    return {{"command", command},
            {"version", kReportSchemaVersion},
            {"inputs", std::move(inputs)},
            {"payload", std::move(payload)}};
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t hash = 1469598103934665603ULL;
    for (unsigned char byte : bytes) {
        hash ^= byte;
        hash *= 1099511628211ULL;
    }
    char buffer[17];
    std::snprintf(buffer, sizeof(buffer), "%016llx",
                  static_cast<unsigned long long>(hash));
    return buffer;
}

} // namespace girthlab
