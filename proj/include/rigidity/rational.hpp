#ifndef RIGIDITY_RATIONAL_HPP
#define RIGIDITY_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace rigidity {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

} // namespace rigidity

#endif
