#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace roofcalc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const BigInt& v) { return v.str(); }

BigInt binomial(unsigned n, unsigned k);

} // namespace roofcalc
