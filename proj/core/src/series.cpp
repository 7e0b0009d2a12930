#include "stacks/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace stacks {

Series Series::constant(const Int &value, std::size_t order) {
    Series s(order);
    s[0] = value;
    return s;
}

Series Series::polynomial(const std::vector<Int> &coeffs, std::size_t order) {
    Series s(order);
    const std::size_t n = std::min(coeffs.size(), order + 1);
    for (std::size_t k = 0; k < n; ++k) s[k] = coeffs[k];
    return s;
}

bool Series::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Int &c) { return c == 0; });
}

std::string Series::str() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        if (!first) out << (coeffs_[k] > 0 ? " + " : " - ");
        else if (coeffs_[k] < 0) out << "-";
        Int mag = abs(coeffs_[k]);
        if (mag != 1 || k == 0) out << mag.str();
        if (k > 0) {
            if (mag != 1) out << "*";
            out << "y";
            if (k > 1) out << "^" << k;
        }
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

Series operator+(const Series &a, const Series &b) {
    Series r(std::min(a.order(), b.order()));
    for (std::size_t k = 0; k <= r.order(); ++k) r[k] = a[k] + b[k];
    return r;
}

Series operator-(const Series &a, const Series &b) {
    Series r(std::min(a.order(), b.order()));
    for (std::size_t k = 0; k <= r.order(); ++k) r[k] = a[k] - b[k];
    return r;
}

Series operator-(const Series &a) {
    Series r(a.order());
    for (std::size_t k = 0; k <= r.order(); ++k) r[k] = -a[k];
    return r;
}

Series operator*(const Series &a, const Series &b) {
    Series r(std::min(a.order(), b.order()));
    const std::size_t n = r.order();
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

Series shift(const Series &a, std::size_t k) {
    Series r(a.order());
    for (std::size_t i = k; i <= r.order(); ++i) r[i] = a[i - k];
    return r;
}

bool eq_upto(const Series &a, const Series &b, std::size_t k) {
    if (k > a.order() || k > b.order())
        throw std::out_of_range("eq_upto: k exceeds series order");
    for (std::size_t i = 0; i <= k; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

}  // namespace stacks
