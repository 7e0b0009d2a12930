#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace stacks {

// Exact arbitrary-precision integer; counts outgrow 64 bits quickly
// (s_{1,3}(n) grows by a factor of ~7 per vertex).
using Int = boost::multiprecision::cpp_int;

}  // namespace stacks
