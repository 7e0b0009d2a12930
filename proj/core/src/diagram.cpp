#include "stacks/diagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace stacks {

Diagram::Diagram(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
    if (n_ < 0) throw std::invalid_argument("Diagram: negative vertex count");
    std::sort(arcs_.begin(), arcs_.end());
    for (std::size_t k = 0; k < arcs_.size(); ++k) {
        const Arc &a = arcs_[k];
        if (a.i < 1 || a.j > n_ || a.i >= a.j)
            throw std::invalid_argument("Diagram: arc endpoints must satisfy 1 <= i < j <= n");
        if (k > 0 && arcs_[k - 1] == a)
            throw std::invalid_argument("Diagram: duplicate arc");
    }
}

void Diagram::check_vertex(int v) const {
    if (v < 1 || v > n_) throw std::out_of_range("Diagram: vertex out of range");
}

int Diagram::ldeg(int v) const {
    check_vertex(v);
    int c = 0;
    for (const Arc &a : arcs_) c += (a.j == v);
    return c;
}

int Diagram::rdeg(int v) const {
    check_vertex(v);
    int c = 0;
    for (const Arc &a : arcs_) c += (a.i == v);
    return c;
}

namespace {

bool arcs_cross(const Arc &a, const Arc &b) {
    return (a.i < b.i && b.i < a.j && a.j < b.j) ||
           (b.i < a.i && a.i < b.j && b.j < a.j);
}

}  // namespace

bool is_noncrossing(const Diagram &diagram) {
    const auto &arcs = diagram.arcs();
    for (std::size_t p = 0; p < arcs.size(); ++p)
        for (std::size_t q = p + 1; q < arcs.size(); ++q)
            if (arcs_cross(arcs[p], arcs[q])) return false;
    return true;
}

bool is_valid_stack(const Diagram &diagram, StackParams params) {
    if (!is_noncrossing(diagram)) return false;
    for (const Arc &a : diagram.arcs())
        if (a.j - a.i < params.m) return false;
    for (int v = 1; v <= diagram.vertex_count(); ++v)
        if (diagram.degree(v) > params.d) return false;
    return true;
}

namespace {

struct StackSearch {
    int n;
    StackParams params;
    const std::function<void(const Diagram &)> *visitor;
    std::vector<Arc> candidates;
    std::vector<Arc> current;
    std::vector<int> degree;
    Int count = 0;

    void run() {
        for (int i = 1; i <= n; ++i)
            for (int j = i + params.m; j <= n; ++j)
                candidates.push_back({i, j});
        degree.assign(n + 1, 0);
        descend(0);
    }

    bool compatible(const Arc &a) const {
        if (degree[a.i] >= params.d || degree[a.j] >= params.d) return false;
        for (const Arc &b : current)
            if (arcs_cross(a, b)) return false;
        return true;
    }

    void descend(std::size_t first) {
        ++count;
        if (visitor && *visitor) (*visitor)(Diagram(n, current));
        for (std::size_t k = first; k < candidates.size(); ++k) {
            const Arc &a = candidates[k];
            if (!compatible(a)) continue;
            current.push_back(a);
            ++degree[a.i];
            ++degree[a.j];
            descend(k + 1);
            --degree[a.i];
            --degree[a.j];
            current.pop_back();
        }
    }
};

}  // namespace

Int enumerate_stacks(int n, StackParams params,
                     const std::function<void(const Diagram &)> &visitor) {
    if (n < 0) throw std::invalid_argument("enumerate_stacks: negative n");
    StackSearch search{n, params, &visitor, {}, {}, {}, 0};
    search.run();
    return search.count;
}

}  // namespace stacks
