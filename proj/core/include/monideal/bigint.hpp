#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace monideal {

// All public counts are exact. Values like C(kd+n-1, n-1) outgrow 64 bits
// for modest k, so there is no fixed-width fast path in the public surface.
using BigCount = boost::multiprecision::cpp_int;

// Signed values occur only in inclusion-exclusion partial sums and in the
// as-published formula variants kept around for regression tests.
using SignedBigCount = boost::multiprecision::cpp_int;

}  // namespace monideal
