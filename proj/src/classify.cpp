#include "hz/classify.hpp"

#include "hz/iso.hpp"

namespace hz {

bool is_overfull(const SimpleGraph& g) {
    return g.edge_count() > g.max_degree() * (g.vertex_count() / 2);
}

bool is_hz_candidate(const SimpleGraph& g) {
    if (g.vertex_count() < 1 || !g.is_connected()) return false;
    return core(g).core_subgraph.max_degree() <= 2;
}

bool is_odd_cycle(const SimpleGraph& g) {
    if (g.vertex_count() < 3 || g.vertex_count() % 2 == 0) return false;
    if (!g.is_connected()) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

std::string to_string(ClassLabel::Value v) {
    return v == ClassLabel::Value::Class1 ? "Class1" : "Class2";
}

std::string to_string(ClassLabel::Reason r) {
    switch (r) {
        case ClassLabel::Reason::Overfull: return "Overfull";
        case ClassLabel::Reason::OddCycle: return "OddCycle";
        case ClassLabel::Reason::PetersenStar: return "PetersenStar";
        case ClassLabel::Reason::NotOverfull: return "NotOverfull";
    }
    return "?";
}

ClassLabel classify(const SimpleGraph& g) {
    if (!is_hz_candidate(g))
        throw NotACandidateError("classify: graph is not connected with core degree <= 2");
    if (is_overfull(g)) return {ClassLabel::Value::Class2, ClassLabel::Reason::Overfull};
    const int delta = g.max_degree();
    if (delta == 2 && is_odd_cycle(g))
        return {ClassLabel::Value::Class2, ClassLabel::Reason::OddCycle};
    if (delta == 3 && g.vertex_count() == 9 && g.edge_count() == 12 &&
        is_isomorphic(g, petersen_star()))
        return {ClassLabel::Value::Class2, ClassLabel::Reason::PetersenStar};
    return {ClassLabel::Value::Class1, ClassLabel::Reason::NotOverfull};
}

HzStructureReport check_hz_structure(const SimpleGraph& g, bool is_class2,
                                     const std::function<int(const SimpleGraph&)>& chi_prime) {
    HzStructureReport rep;
    if (!is_class2) {
        rep.vacuous = true;
        return rep;
    }
    const int delta = g.max_degree();
    DegreeClassView view = core(g);

    // (a) every edge critical, core 2-regular
    rep.critical_and_core_two_regular.applicable = true;
    for (int v = 0; v < view.core_subgraph.vertex_count(); ++v)
        if (view.core_subgraph.degree(v) != 2) {
            rep.critical_and_core_two_regular.pass = false;
            rep.critical_and_core_two_regular.witness =
                "core vertex " + std::to_string(view.core_to_graph[v]) + " has core degree " +
                std::to_string(view.core_subgraph.degree(v));
        }
    if (rep.critical_and_core_two_regular.pass) {
        for (const auto& e : g.edges()) {
            SimpleGraph h = g.without_edge(e.u, e.v);
            if (chi_prime(h) != delta) {
                rep.critical_and_core_two_regular.pass = false;
                rep.critical_and_core_two_regular.witness =
                    "deleting edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                    "} does not drop the chromatic index to Delta";
                break;
            }
        }
    }

    // (b) minimum degree Delta-1, or Delta=2 with an odd cycle
    rep.min_degree.applicable = true;
    int min_deg = g.vertex_count() ? g.degree(0) : 0;
    for (int v = 0; v < g.vertex_count(); ++v) min_deg = std::min(min_deg, g.degree(v));
    if (!(min_deg == delta - 1 || (delta == 2 && is_odd_cycle(g)))) {
        rep.min_degree.pass = false;
        rep.min_degree.witness = "minimum degree " + std::to_string(min_deg) +
                                 " with Delta " + std::to_string(delta);
    }

    // (c) every vertex has at least two neighbors in the core
    rep.two_core_neighbors.applicable = true;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int in_core = static_cast<int>(g.neighbors_of_degree(v, delta).size());
        if (in_core < 2) {
            rep.two_core_neighbors.pass = false;
            rep.two_core_neighbors.witness = "vertex " + std::to_string(v) + " has " +
                                             std::to_string(in_core) + " core neighbors";
            break;
        }
    }
    return rep;
}

}  // namespace hz
