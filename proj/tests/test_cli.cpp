#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "admis/corpus.hpp"
#include "admis/query.hpp"
#include "test_util.hpp"

using namespace admis;
using admis::testutil::mk;

TEST_CASE("polynomial parsing uses descending coefficients") {
    CHECK(parse_poly_desc("1,0,1") == mk({1, 0, 1}));
    CHECK(parse_poly_desc("1,-1") == mk({-1, 1}));        // x - 1
    CHECK(parse_poly_desc("1,0,0,-2") == mk({-2, 0, 0, 1})); // x^3 - 2
    CHECK(parse_poly_desc(" 1 , 0 , -5 ") == mk({-5, 0, 1}));
    CHECK_THROWS_AS(parse_poly_desc(""), Error);
    CHECK_THROWS_AS(parse_poly_desc("1,x"), Error);
}

TEST_CASE("cycle parsing") {
    auto cycles = parse_cycles("(1 2 3)(4 5)");
    REQUIRE(cycles.size() == 2);
    CHECK(cycles[0] == std::vector<int>{1, 2, 3});
    CHECK(cycles[1] == std::vector<int>{4, 5});

    auto img = cycles_to_images(cycles, 5);
    CHECK(img == std::vector<int>{1, 2, 0, 4, 3});

    CHECK(parse_cycles("(1,2,3)").size() == 1);
    CHECK_THROWS_AS(parse_cycles("1 2 3"), Error);
    CHECK_THROWS_AS(parse_cycles("(1 2"), Error);
    CHECK_THROWS_AS(parse_cycles("(0 1)"), Error);
}

TEST_CASE("group specs") {
    FiniteGroup D8 = group_from_json(metacyclic_spec("4,2,0,3"));
    CHECK(D8.order() == 8);

    FiniteGroup C3 = group_from_json(permutation_spec({"(1 2 3)"}));
    CHECK(C3.order() == 3);

    FiniteGroup E27 = group_from_json(product_spec("perm:(1 2 3);perm:(1 2 3);perm:(1 2 3)"));
    CHECK(E27.order() == 27);
    CHECK(E27.is_abelian());

    FiniteGroup S3 = group_from_json(permutation_spec({"(1 2 3)", "(1 2)"}));
    CHECK(S3.order() == 6);

    // generators separated by | within a product component
    FiniteGroup S3b = group_from_json(product_spec("perm:(1 2 3)|(1 2)"));
    CHECK(S3b.order() == 6);

    CHECK_THROWS_AS(group_from_json(metacyclic_spec("4,2,0")), Error);
    CHECK_THROWS_AS(group_from_json(product_spec("nope:(1 2)")), Error);
}

TEST_CASE("query round trip") {
    QuerySpec q;
    q.field_coeffs_desc = {Int(1), Int(0), Int(1)};
    q.group = product_spec("perm:(1 2 3);metacyclic:9,3,0,4");
    q.mode = DecisionMode::Tame;
    Json j = q.to_json();
    QuerySpec back = QuerySpec::from_json(j);
    CHECK(back.to_json() == j);
    CHECK(back.build_field().degree() == 2);
    CHECK(back.build_group().order() == 81);
}

TEST_CASE("corpus runs clean and deterministically") {
    Engine engine;
    CorpusOutcome a = run_corpus(engine, "");
    CHECK(a.all_pass);
    CHECK(a.report["total"].get<long>() >= 40);

    CorpusOutcome b = run_corpus(engine, "");
    CHECK(a.report.dump() == b.report.dump());

    CorpusOutcome filtered = run_corpus(engine, "q16");
    CHECK(filtered.all_pass);
    CHECK(filtered.report["total"].get<long>() >= 3);

    for (const Json& row : a.report["results"]) CHECK(row["pass"].get<bool>());
}
