#include "chorient/twosat.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace chorient {

TwoSatFormula::TwoSatFormula(int variable_count) : variable_count_(variable_count) {
    if (variable_count < 0) throw std::invalid_argument("variable_count must be non-negative");
}

void TwoSatFormula::add_clause(Literal a, Literal b) {
    for (Literal l : {a, b})
        if (l.variable < 0 || l.variable >= variable_count_)
            throw std::invalid_argument("literal variable " + std::to_string(l.variable) +
                                        " out of range");
    clauses_.emplace_back(a, b);
}

bool satisfies(const TwoSatFormula& formula, const Assignment& assignment) {
    if (static_cast<int>(assignment.values.size()) != formula.variable_count()) return false;
    for (const auto& [a, b] : formula.clauses()) {
        const bool value_a = assignment.values[a.variable] != a.negated;
        const bool value_b = assignment.values[b.variable] != b.negated;
        if (!value_a && !value_b) return false;
    }
    return true;
}

namespace {

// literal node id: 2 * variable, +1 for the negation
int node_of(Literal l) { return 2 * l.variable + (l.negated ? 1 : 0); }

}  // namespace

std::optional<Assignment> solve(const TwoSatFormula& formula) {
    const int n = 2 * formula.variable_count();

    // implication graph in CSR form: clause (a|b) yields !a->b and !b->a
    std::vector<int> head(n + 1, 0);
    for (const auto& [a, b] : formula.clauses()) {
        ++head[node_of(a.negation()) + 1];
        ++head[node_of(b.negation()) + 1];
    }
    for (int v = 0; v < n; ++v) head[v + 1] += head[v];
    std::vector<int> out(formula.clauses().size() * 2);
    {
        std::vector<int> fill(head.begin(), head.end() - 1);
        for (const auto& [a, b] : formula.clauses()) {
            out[fill[node_of(a.negation())]++] = node_of(b);
            out[fill[node_of(b.negation())]++] = node_of(a);
        }
    }

    // iterative Tarjan; components are numbered in reverse topological order
    std::vector<int> component(n, -1), order(n, -1), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<int> stack;
    std::vector<std::pair<int, int>> frames;  // node, next out-edge offset
    int next_order = 0, component_count = 0;
    for (int root = 0; root < n; ++root) {
        if (order[root] != -1) continue;
        frames.emplace_back(root, head[root]);
        order[root] = low[root] = next_order++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            const int v = frames.back().first;
            int& it = frames.back().second;
            if (it < head[v + 1]) {
                const int w = out[it++];
                if (order[w] == -1) {
                    order[w] = low[w] = next_order++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.emplace_back(w, head[w]);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], order[w]);
                }
            } else {
                frames.pop_back();
                if (!frames.empty())
                    low[frames.back().first] = std::min(low[frames.back().first], low[v]);
                if (low[v] == order[v]) {
                    while (true) {
                        const int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        component[w] = component_count;
                        if (w == v) break;
                    }
                    ++component_count;
                }
            }
        }
    }

    // a variable is true when its positive literal sits deeper toward the
    // sinks of the condensation than its negation
    Assignment result;
    result.values.resize(formula.variable_count());
    for (int x = 0; x < formula.variable_count(); ++x) {
        if (component[2 * x] == component[2 * x + 1]) return std::nullopt;
        result.values[x] = component[2 * x] < component[2 * x + 1];
    }
    return result;
}

}  // namespace chorient
