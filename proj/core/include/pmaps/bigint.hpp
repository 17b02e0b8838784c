#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace pmaps {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt factorial(long long n);
BigInt binomial(long long n, long long k);

}  // namespace pmaps
