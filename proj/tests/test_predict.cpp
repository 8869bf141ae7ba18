#include <catch2/catch_amalgamated.hpp>

#include "ovoid/predict.hpp"

using namespace ovoid;

namespace {
using Rows = std::vector<std::pair<i64, i64>>;
}

TEST_CASE("ovoid code enumerator") {
    CHECK(predict_ovoid_code(4).rows == Rows{{0, 1}, {12, 204}, {16, 51}});
    CHECK(predict_ovoid_code(8).rows == Rows{{0, 1}, {56, 3640}, {64, 455}});
    for (i64 q : {3, 4, 5, 8, 9, 16}) {
        auto pd = predict_ovoid_code(q);
        CHECK(pd.expected_total() == q * q * q * q);
        CHECK(pd.min_nonzero_weight() == q * q - q);
    }
    CHECK_THROWS_AS(predict_ovoid_code(2), std::invalid_argument);
}

TEST_CASE("binary elliptic subfield table") {
    CHECK(predict_binary_elliptic_subfield(2).rows ==
          Rows{{0, 1}, {6, 16}, {7, 32}, {8, 30}, {10, 16}, {11, 32}, {16, 1}});
    CHECK(predict_binary_elliptic_subfield(3).min_nonzero_weight() == 28);
    for (i64 m = 2; m <= 5; ++m) {
        auto pd = predict_binary_elliptic_subfield(m);
        CHECK(pd.expected_total() == detail::ipow(2, 3 * m + 1));
    }
    CHECK_THROWS_AS(predict_binary_elliptic_subfield(1), std::invalid_argument);
}

TEST_CASE("odd elliptic subfield tables") {
    CHECK(predict_odd_elliptic_subfield_irreducible(3, 2).rows ==
          Rows{{0, 1}, {51, 324}, {52, 972}, {54, 240}, {60, 162}, {61, 486}, {81, 2}});
    CHECK(predict_odd_elliptic_subfield_reducible(3, 2).rows ==
          Rows{{0, 1}, {48, 162}, {49, 486}, {54, 240}, {57, 324}, {58, 972}, {81, 2}});

    for (auto [p, m] : std::vector<std::pair<i64, i64>>{{3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
        auto t2 = predict_odd_elliptic_subfield_irreducible(p, m);
        auto t3 = predict_odd_elliptic_subfield_reducible(p, m);
        CHECK(t2.expected_total() == t3.expected_total());
        // same multiplicity multiset under the sign swap
        std::multiset<i64> m2, m3;
        for (auto& [w, c] : t2.rows) m2.insert(c);
        for (auto& [w, c] : t3.rows) m3.insert(c);
        CHECK(m2 == m3);
        CHECK(t2.min_nonzero_weight() == predict_concluding_min_distance(p, m, AClass::irreducible));
        CHECK(t3.min_nonzero_weight() == predict_concluding_min_distance(p, m, AClass::reducible));
    }

    CHECK_THROWS_AS(predict_odd_elliptic_subfield_irreducible(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(predict_odd_elliptic_subfield_reducible(3, 1), std::invalid_argument);
}

TEST_CASE("quarter-parameter tables") {
    auto t4 = predict_quarter_subfield_even(3, 2);
    CHECK(t4.rows == Rows{{0, 1}, {36, 18}, {37, 18}, {46, 72}, {54, 672}, {55, 1296},
                          {63, 36}, {64, 36}, {73, 36}, {81, 2}});
    CHECK(t4.expected_total() == 2187);

    auto t5 = predict_quarter_subfield_odd(3, 3);
    CHECK(t5.rows == Rows{{0, 1}, {405, 216}, {406, 486}, {486, 19248}, {487, 38394},
                          {567, 216}, {568, 486}, {729, 2}});
    CHECK(t5.expected_total() == 59049);

    for (auto [p, m] : std::vector<std::pair<i64, i64>>{{3, 2}, {5, 2}, {7, 2}, {3, 4}}) {
        auto pd = predict_quarter_subfield_even(p, m);
        CHECK(pd.min_nonzero_weight() == predict_concluding_min_distance(p, m, AClass::quarter_even));
    }
    for (auto [p, m] : std::vector<std::pair<i64, i64>>{{3, 3}, {5, 3}, {7, 3}, {3, 5}}) {
        auto pd = predict_quarter_subfield_odd(p, m);
        CHECK(pd.min_nonzero_weight() == predict_concluding_min_distance(p, m, AClass::quarter_odd));
    }

    CHECK_THROWS_AS(predict_quarter_subfield_even(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(predict_quarter_subfield_odd(3, 2), std::invalid_argument);
}

TEST_CASE("Tits subfield table") {
    CHECK(predict_tits_subfield(1).rows ==
          Rows{{0, 1}, {28, 192}, {29, 256}, {32, 126}, {36, 192}, {37, 256}, {64, 1}});
    CHECK(predict_tits_subfield(2).expected_total() == i64(1) << 16);
    CHECK_THROWS_AS(predict_tits_subfield(0), std::invalid_argument);

    // over the same field, the elliptic and Tits subfield codes share a
    // weight distribution (m = 2e+1)
    for (i64 e : {1, 2}) CHECK(predict_tits_subfield(e).rows == predict_binary_elliptic_subfield(2 * e + 1).rows);
}

TEST_CASE("table dispatch") {
    CHECK(predict_table("T1", 2, 2).rows == predict_binary_elliptic_subfield(2).rows);
    CHECK(predict_table("T4", 5, 2).source == "T4");
    CHECK(predict_table("T6", 2, 1).rows == predict_tits_subfield(1).rows);
    CHECK_THROWS_AS(predict_table("T9", 3, 2), std::invalid_argument);
}

TEST_CASE("concluding minimum distances") {
    CHECK(predict_concluding_min_distance(3, 2, AClass::irreducible) == 51);
    CHECK(predict_concluding_min_distance(3, 2, AClass::reducible) == 48);
    CHECK(predict_concluding_min_distance(3, 2, AClass::quarter_even) == 36);
    CHECK(predict_concluding_min_distance(3, 3, AClass::quarter_odd) == 405);
    CHECK_THROWS_AS(predict_concluding_min_distance(3, 3, AClass::quarter_even), std::invalid_argument);
    CHECK_THROWS_AS(predict_concluding_min_distance(3, 2, AClass::quarter_odd), std::invalid_argument);
    CHECK_THROWS_AS(predict_concluding_min_distance(2, 2, AClass::irreducible), std::invalid_argument);
}

TEST_CASE("Griesmer bound") {
    CHECK(griesmer_length(4, 4, 12) == 17);
    CHECK(griesmer_length(8, 4, 56) == 65);
    CHECK(griesmer_length(9, 4, 72) == 82);
    CHECK(griesmer_length(16, 4, 240) == 257);
    CHECK(griesmer_length(7, 1, 13) == 13); // single row: length d
    CHECK(meets_griesmer(17, 4, 12, 4));
    CHECK_FALSE(meets_griesmer(18, 4, 12, 4));
    CHECK_THROWS_AS(griesmer_length(4, 0, 3), std::invalid_argument);
}

TEST_CASE("sphere-packing distance cap") {
    CHECK(sphere_packing_max_d(2, 17, 10) == 4);
    CHECK(sphere_packing_max_d(3, 82, 75) == 4);
    CHECK(sphere_packing_max_d(2, 65, 55) == 4);
    CHECK(sphere_packing_max_d(2, 1025, 1025 - 16) == 4);
    CHECK(sphere_packing_max_d(5, 626, 626 - 7) == 4);
    CHECK(sphere_packing_max_d(2, 10, 10) == 1); // full space
    CHECK(sphere_packing_max_d(2, 7, 1) == 7);   // repetition-code corner, Singleton-capped
    CHECK_THROWS_AS(sphere_packing_max_d(2, 5, 6), std::invalid_argument);
}
