#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace antoine {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace antoine
