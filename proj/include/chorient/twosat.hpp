#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace chorient {

struct Literal {
    int variable = 0;
    bool negated = false;

    Literal negation() const { return {variable, !negated}; }
    static Literal pos(int variable) { return {variable, false}; }
    static Literal neg(int variable) { return {variable, true}; }

    bool operator==(const Literal&) const = default;
};

/// CNF with one or two literals per clause; a unit clause is stored as a
/// repeated literal.
class TwoSatFormula {
public:
    explicit TwoSatFormula(int variable_count);

    int variable_count() const { return variable_count_; }
    const std::vector<std::pair<Literal, Literal>>& clauses() const { return clauses_; }

    void add_clause(Literal a, Literal b);
    void add_unit(Literal a) { add_clause(a, a); }

private:
    int variable_count_ = 0;
    std::vector<std::pair<Literal, Literal>> clauses_;
};

struct Assignment {
    std::vector<bool> values;
};

/// Implication-graph decision procedure. Runs in time linear in variables
/// plus clauses and returns the same assignment for the same formula.
std::optional<Assignment> solve(const TwoSatFormula& formula);

/// Direct clause scan.
bool satisfies(const TwoSatFormula& formula, const Assignment& assignment);

}  // namespace chorient
