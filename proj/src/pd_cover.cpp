#include "chorient/pd_cover.hpp"

#include <stdexcept>
#include <utility>

namespace chorient {

PdInstance::PdInstance(ChoreInstance graph, std::vector<std::vector<VertexId>> groups,
                       std::vector<VertexId> forbidden)
    : graph_(std::move(graph)), groups_(std::move(groups)), forbidden_(std::move(forbidden)) {
    const int n = graph_.vertex_count();
    std::vector<char> grouped(n, 0);
    for (const auto& group : groups_)
        for (VertexId v : group) {
            if (v < 0 || v >= n) throw std::invalid_argument("group vertex out of range");
            if (grouped[v]) throw std::invalid_argument("groups must be pairwise disjoint");
            grouped[v] = 1;
        }
    std::vector<char> banned(n, 0);
    for (VertexId v : forbidden_) {
        if (v < 0 || v >= n) throw std::invalid_argument("forbidden vertex out of range");
        if (banned[v]) throw std::invalid_argument("forbidden vertices must be distinct");
        banned[v] = 1;
    }
}

TwoSatFormula build_formula(const PdInstance& instance) {
    TwoSatFormula formula(instance.graph().vertex_count());
    for (const Edge& e : instance.graph().edges())
        formula.add_clause(Literal::pos(e.u), Literal::pos(e.v));
    for (const auto& group : instance.groups())
        for (std::size_t a = 0; a < group.size(); ++a)
            for (std::size_t b = a + 1; b < group.size(); ++b)
                formula.add_clause(Literal::neg(group[a]), Literal::neg(group[b]));
    for (VertexId v : instance.forbidden()) formula.add_unit(Literal::neg(v));
    return formula;
}

std::optional<Cover> find_cover(const PdInstance& instance) {
    const auto assignment = solve(build_formula(instance));
    if (!assignment) return std::nullopt;
    Cover cover;
    for (int v = 0; v < instance.graph().vertex_count(); ++v)
        if (assignment->values[v]) cover.vertices.push_back(v);
    return cover;
}

bool verify_cover(const PdInstance& instance, const Cover& cover) {
    const int n = instance.graph().vertex_count();
    std::vector<char> chosen(n, 0);
    for (VertexId v : cover.vertices) {
        if (v < 0 || v >= n) return false;
        chosen[v] = 1;
    }
    for (const Edge& e : instance.graph().edges())
        if (!chosen[e.u] && !chosen[e.v]) return false;
    for (const auto& group : instance.groups()) {
        int hits = 0;
        for (VertexId v : group)
            if (chosen[v]) ++hits;
        if (hits > 1) return false;
    }
    for (VertexId v : instance.forbidden())
        if (chosen[v]) return false;
    return true;
}

}  // namespace chorient
