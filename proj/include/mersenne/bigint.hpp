#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace mersenne {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace mersenne
