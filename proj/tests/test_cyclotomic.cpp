#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "admis/cyclotomic.hpp"

#include <numeric>
#include "test_util.hpp"

using namespace admis;
using admis::testutil::mk;

namespace {
NumberField QQ() { return NumberField::make(mk({-1, 1})); }
} // namespace

TEST_CASE("unit group and subgroups") {
    CHECK(unit_group(9) == std::vector<long>{1, 2, 4, 5, 7, 8});
    CHECK(subgroup_generated(9, {8}) == std::vector<long>{1, 8});
    CHECK(subgroup_generated(9, {4}) == std::vector<long>{1, 4, 7});
    CHECK(subgroup_generated(8, {7}) == std::vector<long>{1, 7});
    // (Z/9)^* is cyclic of order 6: four subgroups
    CHECK(all_subgroups(9).size() == 4);
    // (Z/8)^* is the Klein four group: five subgroups
    CHECK(all_subgroups(8).size() == 5);
    CHECK(is_prime_power(27));
    CHECK(!is_prime_power(12));
    long p = 0;
    CHECK(is_prime_power(16, &p));
    CHECK(p == 2);
}

TEST_CASE("gaussian periods: worked examples") {
    // e=9, H={1,8}: zeta_9 + zeta_9^-1 has x^3 - 3x + 1, the unique cubic
    // subfield of Q(zeta_9)
    CHECK(gaussian_period_min_poly(9, {1, 8}) == mk({1, -3, 0, 1}));

    // e=8, H={1,7}: zeta_8 + zeta_8^-1 = sqrt 2
    CHECK(gaussian_period_min_poly(8, {1, 7}) == mk({-2, 0, 1}));

    // e=4, H={1}: zeta_4 = i
    CHECK(gaussian_period_min_poly(4, {1}) == mk({1, 0, 1}));

    // remaining quadratic subfields of Q(zeta_8)
    CHECK(gaussian_period_min_poly(8, {1, 3}).degree() == 2); // Q(sqrt -2)
    NumberField Km2 = NumberField::make(mk({2, 0, 1}));
    CHECK(Km2.has_root(gaussian_period_min_poly(8, {1, 3})));
    // {1,5} is the degenerate period that needs the perturbation fallback
    NumberField Ki = NumberField::make(mk({1, 0, 1}));
    CHECK(Ki.has_root(gaussian_period_min_poly(8, {1, 5})));

    CHECK_THROWS_AS(gaussian_period_min_poly(12, {1}), Error);
    CHECK_THROWS_AS(gaussian_period_min_poly(9, {1, 2}), Error); // not a subgroup
}

TEST_CASE("gaussian period invariants") {
    struct Case { long e; std::vector<long> H; long p; };
    std::vector<Case> cases = {
        {9, {1, 8}, 3},   {9, {1, 4, 7}, 3}, {9, {1}, 3},      {8, {1, 7}, 2},
        {8, {1, 5}, 2},   {8, {1, 3}, 2},    {16, {1, 15}, 2}, {25, {1, 7, 18, 24}, 5},
        {27, {1, 26}, 3}, {7, {1, 2, 4}, 7}, {49, {1, 18, 19, 30, 31, 48}, 7},
    };
    for (auto& c : cases) {
        IntPoly f = gaussian_period_min_poly(c.e, c.H);
        CHECK(f.is_monic());
        CHECK(f.degree() == static_cast<int>(unit_group(c.e).size() / c.H.size()));
        CHECK(is_irreducible_over_Q(f));
        // the subfield ramifies only at p, so the field discriminant is a
        // power of p; the polynomial discriminant may carry the squared
        // index on top (it does for e = 25 and e = 49)
        Int d = discriminant(f);
        if (d < 0) d = -d;
        while (d % c.p == 0) d /= c.p;
        CHECK(mpz_perfect_square_p(d.get_mpz_t()) != 0);
    }
}

TEST_CASE("fixed_field_subgroup") {
    SubfieldDescriptor s = fixed_field_subgroup({8, 7});
    CHECK(s.subgroup == std::vector<long>{1, 7});
    CHECK(s.min_poly == mk({-2, 0, 1})); // Q(sqrt 2)

    SubfieldDescriptor id4 = fixed_field_subgroup({4, 1});
    CHECK(id4.subgroup == std::vector<long>{1});
    CHECK(id4.min_poly == mk({1, 0, 1})); // fixed field is all of Q(i)

    SubfieldDescriptor s9 = fixed_field_subgroup({9, 8});
    CHECK(s9.subgroup == std::vector<long>{1, 8});
    CHECK(s9.min_poly.degree() == 3);

    // whole unit group fixed: the field collapses to Q
    SubfieldDescriptor whole = fixed_field_subgroup({9, 2});
    CHECK(whole.min_poly == mk({-1, 1}));
}

TEST_CASE("liedahl_condition: worked examples") {
    // K = Q satisfies every Liedahl condition
    for (long e : {4L, 8L, 9L, 27L})
        for (long q : {1L, 3L, 5L, 7L})
            if (std::gcd(q, e) == 1) CHECK(liedahl_condition(QQ(), e, q));

    // Q(i) is not inside Q(sqrt 2) = Fix(sigma_{8,7})
    NumberField Ki = NumberField::make(mk({1, 0, 1}));
    CHECK(!liedahl_condition(Ki, 8, 7));

    // sqrt 5 avoids Q(zeta_8) entirely
    NumberField K5 = NumberField::make(mk({-5, 0, 1}));
    for (long q : {1L, 3L, 5L, 7L}) CHECK(liedahl_condition(K5, 8, q));

    // q = 1 is always true
    CHECK(liedahl_condition(Ki, 8, 1));
    CHECK(liedahl_condition(Ki, 4, 1));
    // e = 1, 2 are trivially true
    CHECK(liedahl_condition(Ki, 1, 0));
    CHECK(liedahl_condition(Ki, 2, 1));
    CHECK_THROWS_AS(liedahl_condition(Ki, 12, 5), Error);
}

TEST_CASE("liedahl monotonicity under field extension") {
    // false for K forces false for any field containing K
    NumberField Ki = NumberField::make(mk({1, 0, 1}));
    NumberField L = Ki.adjoin_root(mk({-3, 0, 1})); // Q(i, sqrt 3), degree 4
    CHECK(!liedahl_condition(Ki, 8, 7));
    CHECK(!liedahl_condition(L, 8, 7));

    NumberField C9 = NumberField::make(cyclotomic_poly(9));
    CHECK(!liedahl_condition(C9, 9, 4));
    // the cubic subfield already violates
    NumberField cubic = NumberField::make(mk({1, -3, 0, 1}));
    CHECK(!liedahl_condition(cubic, 9, 4));
}

TEST_CASE("alpha_p") {
    CHECK(alpha_p_min_poly(3) == mk({1, -3, 0, 1}));
    for (long p : {3L, 5L, 7L}) {
        IntPoly a = alpha_p_min_poly(p);
        CHECK(a.degree() == p);
        CHECK(is_irreducible_over_Q(a));
        // totally ramified at p
        NumberField F = NumberField::make(a);
        auto pairs = F.decompose_prime(Int(p)).pairs;
        REQUIRE(pairs.size() == 1);
        CHECK(pairs[0] == std::pair<long, long>{p, 1});
    }
}

TEST_CASE("max_root_of_unity_power") {
    CHECK(max_root_of_unity_power(QQ(), 3) == 0);
    CHECK(max_root_of_unity_power(QQ(), 2) == 1); // -1 is rational
    NumberField Ki = NumberField::make(mk({1, 0, 1}));
    CHECK(max_root_of_unity_power(Ki, 2) == 2);
    NumberField C9 = NumberField::make(cyclotomic_poly(9));
    CHECK(max_root_of_unity_power(C9, 3) == 2);
    NumberField C3 = NumberField::make(cyclotomic_poly(3));
    CHECK(max_root_of_unity_power(C3, 3) == 1);
}

TEST_CASE("liedahl condition with coprime degrees") {
    // [K:Q] coprime to phi(e): no proper subfield of Q(zeta_e) can embed
    NumberField cubic = NumberField::make(mk({1, -3, 0, 1}));
    for (long q : {1L, 3L, 5L, 7L}) CHECK(liedahl_condition(cubic, 8, q));
    for (long q : {1L, 2L, 3L, 4L}) {
        if (std::gcd(q, 5L) != 1) continue;
        CHECK(liedahl_condition(cubic, 5, q));
    }
}
