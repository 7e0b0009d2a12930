#pragma once

#include "stacks/bigint.hpp"

#include <compare>
#include <functional>
#include <vector>

namespace stacks {

struct Arc {
    int i = 0;
    int j = 0;
    friend auto operator<=>(const Arc &, const Arc &) = default;
};

struct StackParams {
    int m = 1;  // minimum arc span: every arc needs j - i >= m
    int d = 1;  // maximum vertex degree
};

// Diagram on vertices 1..n drawn on a line with arcs in the upper
// half-plane. Arcs are kept sorted; duplicates and loops are rejected.
class Diagram {
public:
    explicit Diagram(int n) : n_(n) {}
    Diagram(int n, std::vector<Arc> arcs);

    int vertex_count() const { return n_; }
    const std::vector<Arc> &arcs() const { return arcs_; }

    // Arcs arriving at v from the left / leaving v to the right.
    int ldeg(int v) const;
    int rdeg(int v) const;
    int degree(int v) const { return ldeg(v) + rdeg(v); }

    bool operator==(const Diagram &) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<Arc> arcs_;
};

// True iff no two arcs (i,j), (k,l) interleave as i < k < j < l. Shared
// endpoints and nesting are fine.
bool is_noncrossing(const Diagram &diagram);

// Noncrossing, every vertex degree <= d, every arc span j - i >= m.
bool is_valid_stack(const Diagram &diagram, StackParams params);

// Exhaustive backtracking count of valid (m,d)-stacks on [n]. Candidate
// arcs are tried in lexicographic order with a minimum-next-arc cursor, so
// each valid arc set is produced exactly once; all three constraints prune
// as arcs are added. The visitor, when set, sees every valid stack once
// (the empty diagram included).
Int enumerate_stacks(int n, StackParams params,
                     const std::function<void(const Diagram &)> &visitor = {});

}  // namespace stacks
