#include "stacks/gf_solver.hpp"

#include <stdexcept>
#include <utility>

namespace stacks {

std::vector<GfKey> needed_keys(int d) {
    std::vector<GfKey> keys;
    for (int s = 0; s <= d; ++s) keys.push_back({s, 0});
    for (int t = 1; t <= d - 1; ++t)
        for (int s = t; s <= d - 1; ++s) keys.push_back({s, t});
    return keys;
}

GfTable::GfTable(int d, std::size_t order) : d_(d), order_(order) {
    if (d < 1) throw std::invalid_argument("GfTable: d must be >= 1");
    for (const GfKey &key : needed_keys(d)) {
        Series s(order);
        if (key.s == key.t) s[0] = 1;
        table_.emplace(key, std::move(s));
    }
}

const Series &GfTable::at(int s, int t) const {
    const GfKey key = s >= t ? GfKey{s, t} : GfKey{t, s};
    auto it = table_.find(key);
    if (it == table_.end()) throw std::out_of_range("GfTable: key outside the needed set");
    return it->second;
}

Series &GfTable::slot(GfKey key) {
    auto it = table_.find(key);
    if (it == table_.end()) throw std::out_of_range("GfTable: key outside the needed set");
    return it->second;
}

Series make_c(int m, std::size_t order) {
    if (m < 1) throw std::invalid_argument("make_c: m must be >= 1");
    Series c(order);
    for (std::size_t k = 0; k <= order && k + 2 <= static_cast<std::size_t>(m); ++k)
        c[k] = 1;
    return c;
}

Series a_expand(const GfTable &table, int s, int t, const Series &c) {
    if (t < 0 || s < t) throw std::invalid_argument("a_expand: needs 0 <= t <= s");
    Series acc(table.order());
    if (s == t && (t % 2 == 0)) acc = acc + c;
    if (s == t && (t % 2 == 1)) acc = acc - c;
    for (int i = 0; i < t; ++i) {
        const Series &g = table.at(s - t + i, i);
        if ((t - i + 1) % 2 == 0)
            acc = acc + g;
        else
            acc = acc - g;
    }
    return acc;
}

GfTable step_system(const GfTable &table, int m, int d, std::size_t order) {
    const Series c = make_c(m, order);
    GfTable next(d, order);
    for (const GfKey &key : needed_keys(d)) {
        const int s = key.s, t = key.t;
        Series value(order);
        if (s == 0 && t == 0) {
            Series sum(order);
            for (int i = 0; i <= d; ++i) sum = sum + table.at(i, 0);
            value = shift(sum, 1);
            value[0] += 1;
        } else {
            Series products(order);
            for (int a = 1; a <= d; ++a) {
                const Series prime = a_expand(table, std::max(s, a), std::min(s, a), c);
                Series tails(order);
                for (int cc = 0; cc <= d - a; ++cc) tails = tails + table.at(cc, t);
                products = products + prime * tails;
            }
            value = a_expand(table, s, t, c) + shift(products, 1);
        }
        next.slot(key) = std::move(value);
    }
    return next;
}

GfTable solve(int m, int d, std::size_t order) {
    if (m < 1 || d < 1) throw std::invalid_argument("solve: m and d must be >= 1");
    GfTable table(d, order);
    const std::size_t cap = static_cast<std::size_t>(d) * (order + 2) + 3;
    for (std::size_t sweep = 0; sweep < cap; ++sweep) {
        GfTable next = step_system(table, m, d, order);
        if (next == table) return next;
        table = std::move(next);
    }
    throw std::runtime_error("system did not stabilize");
}

Series stack_gf(int m, int d, std::size_t order) {
    return solve(m, d, order).at(0, 0);
}

}  // namespace stacks
