#pragma once

#include "stacks/bigint.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace stacks {

// Truncated formal power series with exact integer coefficients.
// A series of order N is known exactly through y^N and stores the N+1
// coefficients of y^0..y^N. Binary operations truncate the result to the
// smaller operand order.
class Series {
public:
    explicit Series(std::size_t order) : coeffs_(order + 1) {}

    static Series constant(const Int &value, std::size_t order);
    // Coefficients lowest degree first, zero-padded or truncated to `order`.
    static Series polynomial(const std::vector<Int> &coeffs, std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const Int &operator[](std::size_t k) const { return coeffs_[k]; }
    Int &operator[](std::size_t k) { return coeffs_[k]; }
    const std::vector<Int> &coeffs() const { return coeffs_; }

    bool is_zero() const;

    bool operator==(const Series &) const = default;

    std::string str() const;

private:
    std::vector<Int> coeffs_;
};

Series operator+(const Series &a, const Series &b);
Series operator-(const Series &a, const Series &b);
Series operator-(const Series &a);
// Cauchy product, truncated to the smaller operand order.
Series operator*(const Series &a, const Series &b);

// Multiplication by y^k. Order is preserved; the top k coefficients fall
// off the truncation window.
Series shift(const Series &a, std::size_t k);

// Exact agreement of coefficients 0..k. Throws std::out_of_range when k
// exceeds either operand's order.
bool eq_upto(const Series &a, const Series &b, std::size_t k);

}  // namespace stacks
