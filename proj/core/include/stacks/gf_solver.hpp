#pragma once

#include "stacks/series.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <vector>

namespace stacks {

// Height pair (start s, end t) indexing one generating function of the
// system. Stored keys always have t <= s; the mirror symmetry
// g<s,t> = g<t,s> resolves the rest.
struct GfKey {
    int s = 0;
    int t = 0;
    friend auto operator<=>(const GfKey &, const GfKey &) = default;
};

// The keys the system needs for piece length d:
// (s,0) for 0 <= s <= d, plus (s,t) for 1 <= t <= s <= d-1.
std::vector<GfKey> needed_keys(int d);

// Family of path generating functions in y = x^d: coefficient n of G<s,t>
// counts the m-regular Lambda-avoiding paths of n pieces from height s to
// height t.
class GfTable {
public:
    // Starts from the delta guess: G<s,t> = 1 if s == t else 0.
    GfTable(int d, std::size_t order);

    int d() const { return d_; }
    std::size_t order() const { return order_; }

    // Symmetry-normalizing lookup: at(s,t) reads the stored G<max,min>.
    const Series &at(int s, int t) const;
    Series &slot(GfKey key);
    const std::map<GfKey, Series> &entries() const { return table_; }

    bool operator==(const GfTable &) const = default;

private:
    int d_ = 1;
    std::size_t order_ = 0;
    std::map<GfKey, Series> table_;
};

// Generating function of the all-level paths {empty, L^d, ..., L^{(m-2)d}}:
// 1 + y + ... + y^{m-2}; the zero series for m = 1.
Series make_c(int m, std::size_t order);

// Prime-path expansion
//   A<s,t> = delta_{s,t} (-1)^t C + sum_{i=0}^{t-1} (-1)^{t-i+1} G<s-t+i,i>,
// the unrolled form of A<s,t> = G<s-1,t-1> - A<s-1,t-1>. Zero for t = 0,
// s > 0. Requires 0 <= t <= s.
Series a_expand(const GfTable &table, int s, int t, const Series &c);

// One simultaneous re-evaluation of the whole system, all reads from the
// given table:
//   G<0,0> = 1 + y * sum_{i=0}^{d} G<i,0>
//   G<s,t> = A<s,t> + y * sum_{a=1}^{d} A<max(s,a),min(s,a)>
//                                     * sum_{c=0}^{d-a} G<c,t>
// — first-return decomposition at the first piece that comes back to the
// axis, with A covering the prime prefix.
GfTable step_system(const GfTable &table, int m, int d, std::size_t order);

// Fixed point of step_system, iterated until two consecutive tables agree
// through `order`. The linear A-terms advance one diagonal level per sweep
// and the products carry a factor of y, so stabilization takes about
// d sweeps per coefficient order; the cap d*(order+2)+3 leaves margin, and
// exceeding it throws std::runtime_error("system did not stabilize") —
// that would be a bug, not an input condition.
GfTable solve(int m, int d, std::size_t order);

// G<0,0> of the solved system. In y = x^d this is the stack generating
// function itself: coefficient n counts the m-regular d-contact stacks
// on [n].
Series stack_gf(int m, int d, std::size_t order);

}  // namespace stacks
