#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "admis/local.hpp"
#include "test_util.hpp"

using namespace admis;
using admis::testutil::mk;

namespace {
NumberField QQ() { return NumberField::make(mk({-1, 1})); }
} // namespace

TEST_CASE("local_degree_profile") {
    NumberField Ki = NumberField::make(mk({1, 0, 1}));
    auto p5 = local_degree_profile(Ki, Int(5));
    REQUIRE(p5.size() == 2);
    CHECK(p5[0].e == 1);
    CHECK(p5[0].f == 1);
    CHECK(p5[0].local_degree == 1);

    auto p3 = local_degree_profile(NumberField::make(cyclotomic_poly(9)), Int(3));
    REQUIRE(p3.size() == 1);
    CHECK(p3[0].e == 6);
    CHECK(p3[0].f == 1);
    CHECK(p3[0].local_degree == 6);

    auto pq = local_degree_profile(QQ(), Int(11));
    REQUIRE(pq.size() == 1);
    CHECK(pq[0].local_degree == 1);
}

TEST_CASE("zeta_in_completion: worked examples") {
    // zeta_3 in Q(zeta_3) globally
    NumberField C3 = NumberField::make(mk({1, 1, 1}));
    CHECK(zeta_in_completion(C3, Int(3), 1));

    // 3 is inert in Q(i); Q_3(zeta_3) is ramified, so no zeta_3 locally
    NumberField Ki = NumberField::make(mk({1, 0, 1}));
    CHECK(!zeta_in_completion(Ki, Int(3), 1));
    // the compositum Q(i, zeta_3) has local degree 4 != 2 at 3
    CHECK(!zeta_in_completion_compositum(Ki, Int(3), 1));

    // zeta_9 sits globally in Q(zeta_9)
    NumberField C9 = NumberField::make(cyclotomic_poly(9));
    CHECK(zeta_in_completion(C9, Int(3), 2));

    CHECK_THROWS_AS(zeta_in_completion(NumberField::make(mk({-2, 0, 0, 1})), Int(5), 1), Error);
    CHECK_THROWS_AS(zeta_in_completion(Ki, Int(2), 1), Error);
}

TEST_CASE("zeta_in_completion: ramified without global root") {
    // K = Q(sqrt6, sqrt7): 3 splits into two ramified places and
    // K_p = Q_3(sqrt 6) = Q_3(zeta_3), but zeta_3 is not in K (real field).
    // The compositum K(zeta_3) has four degree-1 primes above 3, more than
    // F_3 has monic linear polynomials, so 3 divides every generator index
    // and the engine must report the obstruction rather than guess.
    NumberField B = NumberField::make(mk({1, 0, -26, 0, 1}));
    CHECK(B.is_galois());
    CHECK(!B.has_root(cyclotomic_poly(3)));
    auto profile = local_degree_profile(B, Int(3));
    REQUIRE(profile.size() == 2);
    CHECK(profile[0].e == 2);
    CHECK(profile[0].f == 1);

    try {
        zeta_in_completion(B, Int(3), 1);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::IndexObstruction);
    }

    // Q(sqrt -3) at 3: global root at s = 1, compositum refutation at s = 2
    NumberField Km3 = NumberField::make(mk({3, 0, 1}));
    CHECK(zeta_in_completion(Km3, Int(3), 1));
    CHECK(!zeta_in_completion(Km3, Int(3), 2));
    LocalUnityReport rep = local_unity_report(Km3, Int(3));
    CHECK(rep.s_max == 1);
    CHECK(rep.method == UnityMethod::GlobalRoot);

    // monotone in s on a field with global roots of unity
    NumberField C9 = NumberField::make(cyclotomic_poly(9));
    CHECK(zeta_in_completion(C9, Int(3), 2));
    CHECK(zeta_in_completion(C9, Int(3), 1));
    CHECK(local_unity_report(C9, Int(3)).s_max == 2);
}

TEST_CASE("fast paths agree with the compositum criterion") {
    std::vector<NumberField> corpus = {
        NumberField::make(mk({1, 0, 1})),          // Q(i)
        NumberField::make(mk({-2, 0, 1})),         // Q(sqrt 2)
        NumberField::make(mk({3, 0, 1})),          // Q(sqrt -3)
        NumberField::make(mk({-7, 0, 1})),         // Q(sqrt 7)
        NumberField::make(mk({1, -3, 0, 1})),      // cyclic cubic
        NumberField::make(cyclotomic_poly(5)),     // degree 4
        NumberField::make(mk({1, 0, -26, 0, 1})),  // Q(sqrt6, sqrt7)
        NumberField::make(cyclotomic_poly(9)),     // degree 6
    };
    int completed = 0;
    for (const auto& K : corpus) {
        for (long p : {3L, 5L, 7L}) {
            try {
                bool direct = zeta_in_completion_compositum(K, Int(p), 1);
                CHECK(zeta_in_completion(K, Int(p), 1) == direct);
                ++completed;
            } catch (const Error& e) {
                // composita with a common index divisor stay out of scope
                CHECK(e.code() == ErrorCode::IndexObstruction);
            }
        }
    }
    CHECK(completed >= 15);
}

TEST_CASE("zeta_p locally forces (p-1) | e") {
    std::vector<NumberField> corpus = {
        NumberField::make(mk({3, 0, 1})),
        NumberField::make(cyclotomic_poly(9)),
        NumberField::make(cyclotomic_poly(5)),
    };
    for (const auto& K : corpus)
        for (long p : {3L, 5L}) {
            if (!zeta_in_completion(K, Int(p), 1)) continue;
            auto prof = local_degree_profile(K, Int(p));
            CHECK(prof[0].e % (p - 1) == 0);
        }
}

TEST_CASE("wild_hypotheses") {
    // K = Q(sqrt 7), p = 3: decomposes, clause (i), second local degree 1
    NumberField K7 = NumberField::make(mk({-7, 0, 1}));
    WildHypotheses w = wild_hypotheses(K7, Int(3));
    CHECK(w.decomposes);
    CHECK(w.all_completions_zeta_free == TriState::True);
    CHECK(w.zeta_free_clause.substr(0, 3) == "(i)");
    CHECK(w.second_local_degree == 1);

    // K = Q(i), p = 5: split, clause (i)
    WildHypotheses wi = wild_hypotheses(NumberField::make(mk({1, 0, 1})), Int(5));
    CHECK(wi.decomposes);
    CHECK(wi.all_completions_zeta_free == TriState::True);
    CHECK(wi.second_local_degree == 1);

    // cyclic cubic, p = 5: clause (iii), inert so no decomposition
    WildHypotheses wc = wild_hypotheses(NumberField::make(mk({1, -3, 0, 1})), Int(5));
    CHECK(wc.all_completions_zeta_free == TriState::True);
    // clause (i) also holds here and is checked first
    CHECK(!wc.zeta_free_clause.empty());
    CHECK(!wc.decomposes);
    CHECK(!wc.second_local_degree.has_value());

    // biquadratic field: the completion test hits the common index divisor
    NumberField B = NumberField::make(mk({1, 0, -26, 0, 1}));
    try {
        wild_hypotheses(B, Int(3));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::IndexObstruction);
    }

    // non-Galois quartic with ramified p and (p-1) | local degree: unknown
    // x^4 - 3: at p = 3, e = 4, local degree 4, (3-1) | 4, not Galois
    NumberField Knx = NumberField::make(mk({-3, 0, 0, 0, 1}));
    CHECK(!Knx.is_galois());
    WildHypotheses wn = wild_hypotheses(Knx, Int(3));
    CHECK(wn.all_completions_zeta_free == TriState::Unknown);
}

TEST_CASE("unity report methods") {
    NumberField Km3 = NumberField::make(mk({3, 0, 1}));
    LocalUnityReport rep = local_unity_report(Km3, Int(3));
    CHECK(std::string(unity_method_name(rep.method)) == "GlobalRoot");
    NumberField Ki = NumberField::make(mk({1, 0, 1}));
    LocalUnityReport rep2 = local_unity_report(Ki, Int(3));
    CHECK(rep2.s_max == 0);
    CHECK(std::string(unity_method_name(rep2.method)) == "Unramified");
    NumberField K5 = NumberField::make(mk({-5, 0, 1}));
    LocalUnityReport rep3 = local_unity_report(K5, Int(5));
    CHECK(rep3.s_max == 0);
    // 5 ramifies in Q(sqrt 5); s = 1 needs degree 4 which cannot divide 2
    CHECK(std::string(unity_method_name(rep3.method)) == "DegreeObstruction");
}
