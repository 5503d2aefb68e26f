#ifndef TRANSVERSAL_RATIONAL_HPP
#define TRANSVERSAL_RATIONAL_HPP

#include <boost/rational.hpp>
#include <string>

namespace transversal {

// Exact rationals for the combinatorial statistics (averages are never
// floated; thresholds involving d^x or log d live in double).
using Rational = boost::rational<long long>;

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline std::string to_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace transversal

#endif
