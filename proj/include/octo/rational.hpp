#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace octo {

/// Exact unbounded rational.
using Rational = boost::multiprecision::cpp_rational;

}  // namespace octo
