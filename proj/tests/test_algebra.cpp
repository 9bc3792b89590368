#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "admis/factorize.hpp"
#include "admis/modpoly.hpp"
#include "admis/poly.hpp"
#include "test_util.hpp"

#include <random>

using namespace admis;
using admis::testutil::mk;

namespace {

/* Rabin irreducibility test over F_p: independent oracle for factor output */
bool rabin_irreducible(const ModPoly& f) {
    const Int& p = f.modulus();
    int n = f.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    ModPoly x = ModPoly::x_power(1, p);
    ModPoly xq = mod_powmod(x, int_pow(p, static_cast<unsigned long>(n)), f);
    if (xq != x.divmod(f).second) return false;
    for (int q = 2; q <= n; ++q) {
        if (n % q != 0) continue;
        bool q_prime = true;
        for (int d = 2; d * d <= q; ++d)
            if (q % d == 0) q_prime = false;
        if (!q_prime) continue;
        ModPoly xr = mod_powmod(x, int_pow(p, static_cast<unsigned long>(n / q)), f);
        if (mod_gcd(xr - x, f).degree() != 0) return false;
    }
    return true;
}

/* exhaustive root search oracle */
std::vector<long> roots_mod_p(const IntPoly& f, long p) {
    std::vector<long> roots;
    ModPoly fp(f, Int(p));
    for (long a = 0; a < p; ++a)
        if (fp.eval(Int(a)) == 0) roots.push_back(a);
    return roots;
}

} // namespace

TEST_CASE("polynomial ring basics over Q") {
    IntPoly a = mk({-1, 0, 1}); // x^2 - 1
    IntPoly b = mk({-1, 1});    // x - 1
    CHECK(int_gcd_poly(a, b) == b);

    // long division by hand: x^3 - 2 = (x - 1)(x^2 + x + 1) - 1
    auto [q, r] = mk({-2, 0, 0, 1}).divmod(b);
    CHECK(q == mk({1, 1, 1}));
    CHECK(r == mk({-1}));

    CHECK(mk({5}).degree() == 0);
    CHECK(IntPoly().degree() == -1);
    CHECK_THROWS_AS(a.divmod(IntPoly()), Error);

    IntPoly f = mk({3, 0, -4, 1});
    CHECK(f.derivative() == mk({0, -8, 3}));
    CHECK(f.eval(Int(2)) == 3 - 16 + 8);
    CHECK(shift_poly(b, Int(1)) == mk({0, 1}));
}

TEST_CASE("mod-p arithmetic") {
    // char-2 collapse: d/dx (x^2 + 1) = 0 mod 2
    ModPoly f(mk({1, 0, 1}), Int(2));
    CHECK(f.derivative().is_zero());

    ModPoly g(mk({1, 2, 1}), Int(3)); // (x+1)^2 mod 3
    auto [q, r] = g.divmod(ModPoly(mk({1, 1}), Int(3)));
    CHECK(r.is_zero());
    CHECK(q == ModPoly(mk({1, 1}), Int(3)));

    CHECK(mod_gcd(g, g.derivative()) == ModPoly(mk({1, 1}), Int(3)));

    ModPoly s, t;
    ModPoly one = mod_xgcd(ModPoly(mk({2, 1}), Int(5)), ModPoly(mk({3, 1}), Int(5)), s, t);
    CHECK(one.is_one());
    CHECK((s * ModPoly(mk({2, 1}), Int(5)) + t * ModPoly(mk({3, 1}), Int(5))).is_one());
}

TEST_CASE("factor_mod_p on the worked examples") {
    // x^2 + 1 mod 5: exhaustive root search finds 2 and 3
    CHECK(roots_mod_p(mk({1, 0, 1}), 5) == std::vector<long>{2, 3});
    ModFactorization f5 = factor_mod_p(ModPoly(mk({1, 0, 1}), Int(5)));
    REQUIRE(f5.factors.size() == 2);
    CHECK(f5.factors[0].first == ModPoly(mk({2, 1}), Int(5)));
    CHECK(f5.factors[1].first == ModPoly(mk({3, 1}), Int(5)));
    CHECK(f5.factors[0].second == 1);

    // x^2 + 1 mod 3: no roots, degree 2, hence irreducible
    CHECK(roots_mod_p(mk({1, 0, 1}), 3).empty());
    ModFactorization f3 = factor_mod_p(ModPoly(mk({1, 0, 1}), Int(3)));
    REQUIRE(f3.factors.size() == 1);
    CHECK(f3.factors[0].first.degree() == 2);
    CHECK(f3.factors[0].second == 1);

    // x^2 + 1 = (x+1)^2 mod 2
    ModFactorization f2 = factor_mod_p(ModPoly(mk({1, 0, 1}), Int(2)));
    REQUIRE(f2.factors.size() == 1);
    CHECK(f2.factors[0].first == ModPoly(mk({1, 1}), Int(2)));
    CHECK(f2.factors[0].second == 2);

    CHECK_THROWS_AS(factor_mod_p(ModPoly(mk({1, 0, 1}), Int(6))), Error);
}

TEST_CASE("factor_mod_p randomized recombination and irreducibility") {
    std::mt19937 gen(12345);
    const long primes[] = {2, 3, 5, 7, 11, 13, 97};
    for (long p : primes) {
        for (int iter = 0; iter < 40; ++iter) {
            int deg = 1 + static_cast<int>(gen() % 8);
            std::vector<Int> c(static_cast<size_t>(deg) + 1);
            for (auto& a : c) a = static_cast<long>(gen() % static_cast<unsigned long>(p));
            ModPoly g(std::move(c), Int(p));
            if (g.degree() < 1) continue;

            ModFactorization fac = factor_mod_p(g);
            ModPoly prod = ModPoly::constant(fac.unit, Int(p));
            for (const auto& [f, m] : fac.factors) {
                CHECK(f.is_monic());
                CHECK(rabin_irreducible(f));
                for (int i = 0; i < m; ++i) prod = prod * f;
            }
            CHECK(prod == g);
        }
    }
}

TEST_CASE("deterministic factor ordering") {
    IntPoly big = mk({1, 0, 0, 0, 0, 0, -1}); // x^6 - 1, splits a lot mod 7
    ModFactorization a = factor_mod_p(ModPoly(big, Int(7)));
    ModFactorization b = factor_mod_p(ModPoly(big, Int(7)));
    REQUIRE(a.factors.size() == b.factors.size());
    for (size_t i = 0; i < a.factors.size(); ++i) CHECK(a.factors[i] == b.factors[i]);
}

TEST_CASE("cyclotomic polynomials") {
    // oracle for n = 9: divide x^9 - 1 by x^3 - 1
    IntPoly x9m1 = IntPoly::x_power(9) - IntPoly::constant(Int(1));
    IntPoly x3m1 = IntPoly::x_power(3) - IntPoly::constant(Int(1));
    auto [q9, r9] = x9m1.divmod(x3m1);
    CHECK(r9.is_zero());
    CHECK(cyclotomic_poly(9) == q9);
    CHECK(cyclotomic_poly(9) == mk({1, 0, 0, 1, 0, 0, 1}));

    CHECK(cyclotomic_poly(1) == mk({-1, 1}));

    // n = 8: divide x^8 - 1 by x^4 - 1
    IntPoly x8m1 = IntPoly::x_power(8) - IntPoly::constant(Int(1));
    IntPoly x4m1 = IntPoly::x_power(4) - IntPoly::constant(Int(1));
    CHECK(cyclotomic_poly(8) == x8m1.divmod(x4m1).first);
    CHECK(cyclotomic_poly(8) == mk({1, 0, 0, 0, 1}));

    for (long n : {1L, 2L, 6L, 12L, 15L, 16L, 27L, 30L}) {
        // Phi_n divides x^n - 1 exactly and degrees of Phi_d sum to n
        IntPoly xn = IntPoly::x_power(static_cast<int>(n)) - IntPoly::constant(Int(1));
        auto [q, r] = xn.divmod(cyclotomic_poly(n));
        CHECK(r.is_zero());
        long degsum = 0;
        for (long d : divisors_of(n)) degsum += cyclotomic_poly(d).degree();
        CHECK(degsum == n);
        CHECK(cyclotomic_poly(n).degree() == euler_phi(n));
    }
}

TEST_CASE("resultant and discriminant") {
    CHECK(discriminant(mk({1, 0, 1})) == -4);
    CHECK(discriminant(mk({1, -3, 0, 1})) == 81);     // cyclic cubic field
    CHECK(discriminant(mk({-2, 0, 0, 1})) == -108);   // x^3 - 2
    CHECK(discriminant(cyclotomic_poly(5)) == 125);
    CHECK(discriminant(cyclotomic_poly(9)) == -19683); // -3^9
}

TEST_CASE("factor_over_Q on the worked examples") {
    // x^4 - 1 = (x-1)(x+1)(x^2+1)
    QFactorization f = factor_over_Q(mk({-1, 0, 0, 0, 1}));
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0].first == mk({-1, 1}));
    CHECK(f.factors[1].first == mk({1, 1}));
    CHECK(f.factors[2].first == mk({1, 0, 1}));
    CHECK(f.unit == Rat(1));

    // x^3 - 3x + 1: no rational root (candidates +-1), degree 3
    IntPoly cubic = mk({1, -3, 0, 1});
    CHECK(cubic.eval(Int(1)) != 0);
    CHECK(cubic.eval(Int(-1)) != 0);
    CHECK(is_irreducible_over_Q(cubic));

    // x^6 + x^3 + 1 equals Phi_9, hence irreducible
    CHECK(mk({1, 0, 0, 1, 0, 0, 1}) == cyclotomic_poly(9));
    CHECK(is_irreducible_over_Q(mk({1, 0, 0, 1, 0, 0, 1})));
}

TEST_CASE("factor_over_Q recombination on structured products") {
    // known irreducibles multiplied together must come back exactly
    IntPoly f = cyclotomic_poly(5) * cyclotomic_poly(8) * mk({1, -3, 0, 1});
    QFactorization fac = factor_over_Q(f);
    REQUIRE(fac.factors.size() == 3);
    CHECK(fac.factors[0].first == mk({1, -3, 0, 1}));
    CHECK(fac.factors[1].first == cyclotomic_poly(8));
    CHECK(fac.factors[2].first == cyclotomic_poly(5));

    // multiplicities and content
    IntPoly g = mk({1, 1}) * mk({1, 1}) * mk({1, 0, 1}).scaled(Int(6));
    QFactorization gfac = factor_over_Q(g);
    CHECK(gfac.unit == Rat(6));
    REQUIRE(gfac.factors.size() == 2);
    CHECK(gfac.factors[0].first == mk({1, 1}));
    CHECK(gfac.factors[0].second == 2);
    CHECK(gfac.factors[1].first == mk({1, 0, 1}));

    // x factors and negative leading coefficient
    QFactorization h = factor_over_Q(mk({0, 0, -2, -2}));
    CHECK(h.unit == Rat(-2));
    REQUIRE(h.factors.size() == 2);
    CHECK(h.factors[0].first == mk({0, 1}));
    CHECK(h.factors[0].second == 2);
    CHECK(h.factors[1].first == mk({1, 1}));
}

TEST_CASE("factor_over_Q randomized recombination") {
    std::mt19937 gen(777);
    for (int iter = 0; iter < 25; ++iter) {
        int deg = 2 + static_cast<int>(gen() % 7);
        std::vector<Int> c(static_cast<size_t>(deg) + 1);
        for (auto& a : c) a = static_cast<long>(gen() % 21) - 10;
        IntPoly g(std::move(c));
        if (g.degree() < 1) continue;
        QFactorization fac = factor_over_Q(g);
        CHECK(fac.product() == g);
        for (const auto& [p, m] : fac.factors) {
            CHECK(p.lc() > 0);
            CHECK(m >= 1);
        }
    }
}

TEST_CASE("non-monic factorization") {
    IntPoly f = mk({-3, 2}) * mk({1, 5}); // (2x - 3)(5x + 1)
    QFactorization fac = factor_over_Q(f);
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.product() == f);
    CHECK(!is_irreducible_over_Q(f));
    CHECK(is_irreducible_over_Q(mk({-3, 2})));

    // degree-2 non-monic irreducibles exercise the monicization path
    IntPoly g = mk({3, 0, 2}) * mk({2, 0, 3}); // (2x^2 + 3)(3x^2 + 2)
    QFactorization gfac = factor_over_Q(g);
    REQUIRE(gfac.factors.size() == 2);
    CHECK(gfac.factors[0].first == mk({3, 0, 2}));
    CHECK(gfac.factors[1].first == mk({2, 0, 3}));
    CHECK(gfac.unit == Rat(1));

    CHECK(monicize(mk({3, 0, 2})) == mk({6, 0, 1}));
    CHECK(demonicize_factor(mk({6, 0, 1}), Int(2)) == mk({3, 0, 2}));
}
