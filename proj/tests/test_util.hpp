#ifndef ADMIS_TEST_UTIL_HPP
#define ADMIS_TEST_UTIL_HPP

#include "admis/poly.hpp"

#include <initializer_list>
#include <vector>

namespace admis::testutil {

/* ascending coefficients: mk({-2, 0, 0, 1}) is x^3 - 2 */
inline IntPoly mk(std::initializer_list<long> coeffs) {
    std::vector<Int> c;
    for (long v : coeffs) c.emplace_back(v);
    return IntPoly(std::move(c));
}

} // namespace admis::testutil

#endif
