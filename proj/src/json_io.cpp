#include "hz/json_io.hpp"

#include <sstream>

namespace hz {

json coloring_to_json(const PartialColoring& c) {
    if (c.uncolored_count() > 1)
        throw std::invalid_argument("coloring schema supports at most one uncolored edge");
    json j;
    j["k"] = c.k();
    auto uncolored = c.uncolored_edges();
    if (uncolored.empty()) {
        j["uncolored"] = nullptr;
    } else {
        const auto& e = c.graph().edge(uncolored[0]);
        j["uncolored"] = json::array({e.u, e.v});
    }
    json edges = json::array();
    for (int id = 0; id < c.graph().edge_count(); ++id) {
        if (c.color(id) == 0) continue;
        const auto& e = c.graph().edge(id);
        edges.push_back(json::array({e.u, e.v, c.color(id)}));
    }
    j["edges"] = std::move(edges);
    return j;
}

PartialColoring coloring_from_json(const SimpleGraph& g, const json& j) {
    if (!j.contains("k") || !j.contains("edges"))
        throw std::invalid_argument("coloring json: missing fields");
    int k = j.at("k").get<int>();
    PartialColoring c(g, k);
    for (const auto& entry : j.at("edges")) {
        if (!entry.is_array() || entry.size() != 3)
            throw std::invalid_argument("coloring json: bad edge entry");
        int u = entry[0].get<int>(), v = entry[1].get<int>(), col = entry[2].get<int>();
        int id = g.edge_index(u, v);
        if (id < 0) throw std::invalid_argument("coloring json: edge not in graph");
        if (col < 1 || col > k) throw std::invalid_argument("coloring json: color out of range");
        if (c.color(id) != 0) throw std::invalid_argument("coloring json: duplicate edge");
        c.set(id, col);  // throws on properness violation
    }
    if (!j.at("uncolored").is_null()) {
        const auto& un = j.at("uncolored");
        int id = g.edge_index(un[0].get<int>(), un[1].get<int>());
        if (id < 0 || c.color(id) != 0)
            throw std::invalid_argument("coloring json: uncolored edge mismatch");
        if (c.uncolored_count() != 1)
            throw std::invalid_argument("coloring json: uncolored count mismatch");
    } else if (c.uncolored_count() != 0) {
        throw std::invalid_argument("coloring json: edges missing from a complete coloring");
    }
    return c;
}

json degree_class_view_to_json(const DegreeClassView& v) {
    json j;
    j["delta"] = v.delta;
    j["v_delta"] = v.v_delta;
    j["v_delta_minus_1"] = v.v_delta_minus_1;
    j["core_order"] = v.core_subgraph.vertex_count();
    j["core_size"] = v.core_subgraph.edge_count();
    j["core_max_degree"] = v.core_subgraph.max_degree();
    return j;
}

json class_label_to_json(const ClassLabel& label) {
    json j;
    j["class"] = label.value == ClassLabel::Value::Class1 ? 1 : 2;
    j["reason"] = to_string(label.reason);
    return j;
}

json multifan_to_json(const Multifan& f) {
    json j;
    j["center"] = f.center();
    j["spokes"] = f.spokes;
    json missing = json::object();
    const PartialColoring& c = f.triple->coloring;
    missing[std::to_string(f.center())] = c.missing(f.center());
    for (int s : f.spokes) missing[std::to_string(s)] = c.missing(s);
    j["missing"] = std::move(missing);
    return j;
}

json typical_multifan_to_json(const TypicalMultifan& f) {
    json j = multifan_to_json(f.as_multifan());
    j["alpha"] = f.alpha;
    j["beta"] = f.beta;
    return j;
}

json pseudo_multifan_to_json(const TypicalPseudoMultifan& s) {
    json j = typical_multifan_to_json(s.fan);
    j["tail"] = s.tail;
    j["certificate"] = {{"exhaustive", s.certificate.exhaustive},
                        {"colorings_examined", s.certificate.colorings_examined},
                        {"best_size", s.certificate.best_size}};
    return j;
}

json rotation_to_json(const Rotation& r) {
    json j;
    j["vertices"] = r.vertices;
    switch (r.flavor) {
        case Rotation::Flavor::Plain: j["flavor"] = "plain"; break;
        case Rotation::Flavor::Stable: j["flavor"] = "stable"; break;
        case Rotation::Flavor::NearStable: j["flavor"] = "near-stable"; break;
    }
    return j;
}

json lollipop_to_json(const TypicalMultifan& f, const Lollipop& l) {
    json j = typical_multifan_to_json(f);
    j["u"] = l.u;
    j["x"] = l.x;
    j["ru_color_is_alpha_plus_1"] = l.ru_color_is_alpha_plus_1;
    j["x_misses_alpha_plus_1"] = l.x_misses_alpha_plus_1;
    return j;
}

std::string chain_to_dot(const PartialColoring& c, const Chain& chain) {
    std::ostringstream out;
    out << "graph chain {\n";
    for (int v : chain.vertices) out << "  " << v << ";\n";
    for (int id : chain.edge_ids) {
        const auto& e = c.graph().edge(id);
        out << "  " << e.u << " -- " << e.v << " [label=\"" << c.color(id) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string fan_to_dot(const TypicalMultifan& f) {
    std::ostringstream out;
    const PartialColoring& c = f.triple.coloring;
    const SimpleGraph& g = f.triple.graph();
    out << "graph fan {\n";
    out << "  " << f.triple.r << " [label=\"r=" << f.triple.r << "\"];\n";
    for (size_t i = 0; i < f.spokes.size(); ++i) {
        int s = f.spokes[i];
        out << "  " << s << " [label=\"s" << (i + 1) << "=" << s << " miss=";
        auto m = c.missing(s);
        for (size_t t = 0; t < m.size(); ++t) out << (t ? "," : "") << m[t];
        out << "\"];\n";
    }
    for (int s : f.spokes) {
        int col = c.color(g.edge_index(f.triple.r, s));
        out << "  " << f.triple.r << " -- " << s;
        if (col == 0)
            out << " [style=dashed]";
        else
            out << " [label=\"" << col << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string coloring_to_dot(const PartialColoring& c) {
    std::ostringstream out;
    out << "graph g {\n";
    for (int v = 0; v < c.graph().vertex_count(); ++v) out << "  " << v << ";\n";
    for (int id = 0; id < c.graph().edge_count(); ++id) {
        const auto& e = c.graph().edge(id);
        out << "  " << e.u << " -- " << e.v;
        if (c.color(id) != 0)
            out << " [label=\"" << c.color(id) << "\"]";
        else
            out << " [style=dashed]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace hz
