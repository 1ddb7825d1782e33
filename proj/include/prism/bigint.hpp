#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace prism {

// Arbitrary-precision integers and rationals. All invariant computations in
// this project are exact; there is no floating point anywhere in the math
// modules.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

} // namespace prism
