#include "stacks/algebraic.hpp"

#include <sstream>
#include <stdexcept>

namespace stacks {

std::string ParamPoly::str() const {
    std::ostringstream out;
    bool first = true;
    for (const ParamTerm &term : terms_) {
        if (term.coeff == 0) continue;
        if (!first) out << (term.coeff > 0 ? " + " : " - ");
        else if (term.coeff < 0) out << "-";
        const Int mag = abs(term.coeff);
        const bool constant_term = term.m_scale == 0 && term.offset == 0;
        if (mag != 1 || constant_term) out << mag.str();
        if (!constant_term) {
            out << "x";
            if (term.m_scale == 0) {
                if (term.offset != 1) out << "^" << term.offset;
            } else {
                out << "^(";
                if (term.m_scale != 1) out << term.m_scale;
                out << "m";
                if (term.offset > 0) out << "+" << term.offset;
                if (term.offset < 0) out << term.offset;
                out << ")";
            }
        }
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

Series instantiate(const ParamPoly &poly, int m, std::size_t order) {
    if (m < 1) throw std::invalid_argument("instantiate: m must be >= 1");
    Series s(order);
    for (const ParamTerm &term : poly.terms()) {
        const long long e = static_cast<long long>(term.m_scale) * m + term.offset;
        if (e < 0) throw std::domain_error("parameter out of family range");
        if (static_cast<std::size_t>(e) <= order) s[static_cast<std::size_t>(e)] += term.coeff;
    }
    return s;
}

Series residual(const AlgebraicEquation &eq, int m, const Series &s, std::size_t order) {
    if (s.order() < order) throw std::invalid_argument("residual: series order too small");
    if (eq.coeffs.empty()) return Series(order);
    Series acc = instantiate(eq.coeffs.back(), m, order);
    for (std::size_t k = eq.coeffs.size() - 1; k-- > 0;)
        acc = acc * s + instantiate(eq.coeffs[k], m, order);
    return acc;
}

Series motzkin_series(std::size_t order) {
    Series motzkin(order);
    motzkin[0] = 1;
    for (std::size_t n = 0; n < order; ++n) {
        Int next = motzkin[n];
        for (std::size_t k = 0; k + 1 <= n; ++k) next += motzkin[k] * motzkin[n - 1 - k];
        motzkin[n + 1] = next;
    }
    return motzkin;
}

namespace {

ParamPoly pp(std::vector<ParamTerm> terms) { return ParamPoly(std::move(terms)); }

}  // namespace

AlgebraicEquation simple_stack_equation() {
    return AlgebraicEquation{{
        pp({{1, 0, 1}, {-1, 0, 0}}),                              // c0 = x - 1
        pp({{-1, 1, 1}, {2, 0, 2}, {-2, 0, 1}, {1, 0, 0}}),       // c1 = -x^{m+1}+2x^2-2x+1
        pp({{1, 0, 3}, {-1, 0, 2}}),                              // c2 = x^3 - x^2
    }};
}

AlgebraicEquation simple_stack_closed_form_equation(int m) {
    if (m < 1) throw std::invalid_argument("simple_stack_closed_form_equation: m must be >= 1");
    std::vector<ParamTerm> c1{{2, 0, 1}};
    for (int l = 0; l <= m; ++l) c1.push_back({-1, 0, l});
    return AlgebraicEquation{{
        pp({{1, 0, 0}}),   // c0 = 1
        pp(std::move(c1)), // c1 = 2x - sum_{l=0}^{m} x^l
        pp({{1, 0, 2}}),   // c2 = x^2
    }};
}

AlgebraicEquation linear_stack_equation() {
    return AlgebraicEquation{{
        // c0
        pp({{1, 3, 1}, {-1, 3, 0}, {-3, 2, 1}, {3, 2, 0}, {3, 1, 1}, {-3, 1, 0},
            {-1, 0, 1}, {1, 0, 0}}),
        // c1
        pp({{1, 4, 1}, {-2, 3, 2}, {-3, 2, 3}, {-3, 3, 1}, {12, 2, 2}, {1, 3, 0},
            {6, 1, 3}, {-18, 1, 2}, {-3, 2, 0}, {-3, 0, 3}, {5, 1, 1}, {8, 0, 2},
            {3, 1, 0}, {-3, 0, 1}, {-1, 0, 0}}),
        // c2
        pp({{-5, 3, 3}, {6, 2, 4}, {5, 3, 2}, {3, 1, 5}, {8, 2, 3}, {-21, 1, 4},
            {-19, 2, 2}, {-3, 0, 5}, {8, 1, 3}, {5, 2, 1}, {15, 0, 4}, {20, 1, 2},
            {-11, 0, 3}, {-10, 1, 1}, {-6, 0, 2}, {5, 0, 1}}),
        // c3
        pp({{11, 2, 5}, {-8, 1, 6}, {-22, 2, 4}, {-6, 1, 5}, {11, 2, 3}, {8, 0, 6},
            {44, 1, 4}, {-5, 0, 5}, {-38, 1, 3}, {-22, 0, 4}, {8, 1, 2}, {27, 0, 3},
            {-8, 0, 2}}),
        // c4
        pp({{-11, 1, 7}, {4, 0, 8}, {33, 1, 6}, {-1, 0, 7}, {-33, 1, 5}, {-25, 0, 6},
            {11, 1, 4}, {41, 0, 5}, {-23, 0, 4}, {4, 0, 3}}),
        // c5 = 4x^5(x-1)^4, expanded
        pp({{4, 0, 9}, {-16, 0, 8}, {24, 0, 7}, {-16, 0, 6}, {4, 0, 5}}),
    }};
}

AlgebraicEquation contact3_equation_m1() {
    return AlgebraicEquation{{
        pp({{1, 0, 0}}),
        pp({{1, 0, 1}}),
        pp({{52, 0, 2}, {1, 0, 1}, {-1, 0, 0}}),
        pp({{60, 0, 3}, {-5, 0, 2}}),
        pp({{787, 0, 4}, {-115, 0, 3}, {-45, 0, 2}}),
        pp({{871, 0, 5}, {-376, 0, 4}, {-3, 0, 3}}),
        pp({{5731, 0, 6}, {-511, 0, 5}, {-1314, 0, 4}, {162, 0, 3}}),
        pp({{8188, 0, 7}, {-7823, 0, 6}, {315, 0, 5}}),
        pp({{21690, 0, 8}, {-4575, 0, 7}, {-5483, 0, 6}, {-702, 0, 5}, {729, 0, 4}}),
        pp({{35452, 0, 9}, {-37272, 0, 8}, {-10146, 0, 7}, {7938, 0, 6}}),
        pp({{53179, 0, 10}, {-50388, 0, 9}, {11385, 0, 8}, {3888, 0, 7}}),
        pp({{63508, 0, 11}, {-84400, 0, 10}, {11576, 0, 9}, {6912, 0, 8}}),
        pp({{65208, 0, 12}, {-79736, 0, 11}, {39360, 0, 10}}),
        pp({{53304, 0, 13}, {-69312, 0, 12}, {18432, 0, 11}}),
        pp({{34304, 0, 14}, {-38912, 0, 13}, {16384, 0, 12}}),
        pp({{10240, 0, 15}, {-16384, 0, 14}}),
        pp({}),
        pp({}),
    }};
}

}  // namespace stacks
