#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qca {

/// Arbitrary-precision signed integer used for all coefficient arithmetic.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace qca
