#include "stacks/bijection.hpp"

#include <algorithm>
#include <set>

namespace stacks {

DluPath eta(const Diagram &diagram, int d) {
    const int n = diagram.vertex_count();
    std::vector<int> ld(n + 1, 0), rd(n + 1, 0);
    for (const Arc &a : diagram.arcs()) {
        ++rd[a.i];
        ++ld[a.j];
    }
    std::vector<Piece> pieces;
    pieces.reserve(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) {
        if (ld[v] + rd[v] > d) throw std::invalid_argument("degree exceeds d");
        pieces.push_back({ld[v], d - ld[v] - rd[v], rd[v]});
    }
    return DluPath(d, std::move(pieces));
}

Diagram eta_inv(const DluPath &path) {
    if (!is_nonnegative(path, 0))
        throw std::invalid_argument("eta_inv: path must be nonnegative from height 0");
    const auto &pieces = path.pieces();
    const int n = static_cast<int>(pieces.size());

    int balance = 0;
    for (const Piece &p : pieces) balance += p.up - p.down;
    if (balance != 0) throw std::invalid_argument("eta_inv: path must be closed");

    // V1 as an ordered multiset of down-step owners; V2 processed from the
    // largest vertex down, copies of the same vertex consecutively.
    std::multiset<int> v1;
    for (int v = 1; v <= n; ++v)
        for (int k = 0; k < pieces[static_cast<std::size_t>(v - 1)].down; ++k) v1.insert(v);

    std::vector<Arc> arcs;
    for (int i = n; i >= 1; --i) {
        for (int k = 0; k < pieces[static_cast<std::size_t>(i - 1)].up; ++k) {
            auto it = v1.upper_bound(i);
            if (it == v1.end()) throw std::runtime_error("non-matchable path");
            arcs.push_back({i, *it});
            v1.erase(it);
        }
    }

    std::sort(arcs.begin(), arcs.end());
    for (std::size_t k = 1; k < arcs.size(); ++k)
        if (arcs[k - 1] == arcs[k]) throw DuplicateArcError("duplicate arc in reconstruction");
    return Diagram(n, std::move(arcs));
}

}  // namespace stacks
