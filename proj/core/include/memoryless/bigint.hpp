#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace memoryless {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(std::uint64_t n);

inline std::string to_string(const BigInt& value) { return value.str(); }

}  // namespace memoryless
