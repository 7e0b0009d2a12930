#pragma once

#include "stacks/series.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace stacks {

// One monomial coeff * x^(m_scale*m + offset) of a polynomial family
// parameterized by the minimum arc span m.
struct ParamTerm {
    Int coeff;
    int m_scale = 0;
    int offset = 0;
};

// Sparse polynomial with exponents affine in m. Terms keep their
// transcription order; equal exponents merge only at instantiation.
class ParamPoly {
public:
    ParamPoly() = default;
    explicit ParamPoly(std::vector<ParamTerm> terms) : terms_(std::move(terms)) {}

    const std::vector<ParamTerm> &terms() const { return terms_; }

    // Canonical rendering like "-11x^(m+7) + 4x^8", for proofreading the
    // transcribed families against their source.
    std::string str() const;

private:
    std::vector<ParamTerm> terms_;
};

// Substitute a concrete m into every exponent. Throws std::domain_error
// ("parameter out of family range") if an exponent comes out negative.
Series instantiate(const ParamPoly &poly, int m, std::size_t order);

// sum_{k=0}^{K} c_k(x) * S(x)^k = 0, in the stack variable.
struct AlgebraicEquation {
    std::vector<ParamPoly> coeffs;  // index k multiplies S^k
};

// Horner evaluation of the equation's left side at S, truncated at `order`.
// Exactly zero iff S satisfies the equation through x^order.
Series residual(const AlgebraicEquation &eq, int m, const Series &s, std::size_t order);

// Motzkin numbers by the convolution recurrence
// M_0 = 1, M_{n+1} = M_n + sum_{k=0}^{n-1} M_k M_{n-1-k}.
// Independent of the solver; equals the d=1, m=1 stack series.
Series motzkin_series(std::size_t order);

// Quadratic satisfied by the m-regular simple-stack series:
// (x^3-x^2) S^2 + (-x^{m+1}+2x^2-2x+1) S + (x-1) = 0.
AlgebraicEquation simple_stack_equation();

// Equivalent quadratic that pins the same series without radicals:
// x^2 S^2 - (sum_{l=0}^{m} x^l - 2x) S + 1 = 0. Coefficients depend on m
// with a variable number of terms, so the equation is built per m.
AlgebraicEquation simple_stack_closed_form_equation(int m);

// Quintic satisfied by the m-regular linear-stack series.
AlgebraicEquation linear_stack_equation();

// Degree-17 equation satisfied by the 1-regular 3-contact-stack series.
AlgebraicEquation contact3_equation_m1();

}  // namespace stacks
