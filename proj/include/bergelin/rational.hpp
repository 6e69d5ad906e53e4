#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace bergelin {

using Rat = boost::rational<long long>;

inline double to_double(const Rat& q) {
    return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

inline std::string to_string(const Rat& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

}  // namespace bergelin
