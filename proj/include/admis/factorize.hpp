#ifndef ADMIS_FACTORIZE_HPP
#define ADMIS_FACTORIZE_HPP

#include "admis/modpoly.hpp"
#include "admis/poly.hpp"

#include <utility>
#include <vector>

namespace admis {

struct QFactorization {
    Rat unit;
    /* primitive with positive leading coefficient, irreducible over Q,
     * canonical order; monic whenever the input is monic */
    std::vector<std::pair<IntPoly, int>> factors;

    IntPoly product() const;
};

/* Factorization over Q: content extraction, Yun squarefree decomposition,
 * then per squarefree part: factor modulo a good prime, Hensel lift,
 * Zassenhaus subset recombination. */
QFactorization factor_over_Q(const IntPoly& g);

bool is_irreducible_over_Q(const IntPoly& g);

/* lc^(n-1) * f(x/lc): monic integer polynomial whose roots are lc * (roots of f) */
IntPoly monicize(const IntPoly& f);
/* inverse direction on a monic factor G of monicize(f): primitive part of G(lc*x) */
IntPoly demonicize_factor(const IntPoly& G, const Int& lc);

/* extended Euclid over F_p: s*a + t*b = g with g the monic gcd */
ModPoly mod_xgcd(const ModPoly& a, const ModPoly& b, ModPoly& s, ModPoly& t);

} // namespace admis

#endif
