#include <catch2/catch_amalgamated.hpp>

#include "ovoid/geometry.hpp"

using namespace ovoid;

TEST_CASE("point normalization") {
    auto f3 = Field::make(3, 1);
    ProjPoint a(*f3, {0, 0, 2, 0});
    CHECK(a.x == std::array<u32, 4>{0, 0, 1, 0});
    ProjPoint b(*f3, {2, 1, 0, 2});
    CHECK(b.x == std::array<u32, 4>{1, 2, 0, 1});
    CHECK_THROWS_AS(ProjPoint(*f3, {0, 0, 0, 0}), std::invalid_argument);

    std::vector<ProjPoint> dup{a, ProjPoint(*f3, {0, 0, 1, 0})};
    CHECK_THROWS_AS(PointSet(f3, dup), std::invalid_argument);
}

TEST_CASE("elliptic quadric construction") {
    auto f4 = Field::make(2, 2);
    Elem a = f4->elem(2); // Tr(w) = 1, so x^2+x+w is irreducible
    PointSet s = elliptic_quadric(f4, a);
    CHECK(s.size() == 17);
    CHECK(s[0].x == std::array<u32, 4>{0, 0, 0, 0 + 1}); // (0,0,f(0,0),1)
    CHECK(s[16].x == std::array<u32, 4>{0, 0, 1, 0});    // special point last

    // q^2+1 distinct points for every a, including degenerate ones
    for (auto [p, n] : std::vector<std::pair<int, int>>{{3, 1}, {2, 2}, {5, 1}}) {
        auto f = Field::make(p, n);
        for (u64 av = 0; av < f->size(); ++av)
            CHECK(elliptic_quadric(f, f->elem(static_cast<u32>(av))).size() == f->size() * f->size() + 1);
    }

    auto f2 = Field::make(2, 1);
    CHECK_THROWS_AS(elliptic_quadric(f2, f2->zero()), std::invalid_argument);
    CHECK_THROWS_AS(elliptic_quadric(f4, f2->zero()), std::invalid_argument);
}

TEST_CASE("cap checks") {
    auto f3 = Field::make(3, 1);

    PointSet two(f3, {ProjPoint(*f3, {1, 0, 0, 0}), ProjPoint(*f3, {0, 1, 0, 0})});
    CHECK(is_cap(two).is_cap);

    PointSet line(f3, {ProjPoint(*f3, {0, 0, 0, 1}), ProjPoint(*f3, {0, 0, 1, 0}), ProjPoint(*f3, {0, 0, 1, 1})});
    auto r = is_cap(line);
    CHECK_FALSE(r.is_cap);
    CHECK(r.witness == std::array<size_t, 3>{0, 1, 2});

    // irreducible a gives a cap
    auto f4 = Field::make(2, 2);
    CHECK(is_cap(elliptic_quadric(f4, f4->elem(2))).is_cap);

    auto f9 = Field::make(3, 2);
    u32 irred = 0;
    for (u64 a = 0; a < 9; ++a)
        if (quadratic_root_test(f9->elem(static_cast<u32>(a))) == QuadraticRootKind::irreducible) {
            irred = static_cast<u32>(a);
            break;
        }
    CHECK(is_cap(elliptic_quadric(f9, f9->elem(irred))).is_cap);

    // the double-root coefficient destroys the cap property for odd q
    u32 quarter = f3->inv(f3->from_int(4).v);
    auto bad = is_cap(elliptic_quadric(f3, f3->elem(quarter)));
    CHECK_FALSE(bad.is_cap);

    // worker partitioning does not change the answer or the witness
    auto seq = is_cap(elliptic_quadric(f3, f3->elem(quarter)), 1);
    auto par = is_cap(elliptic_quadric(f3, f3->elem(quarter)), 3);
    CHECK(seq.is_cap == par.is_cap);
    CHECK(seq.witness == par.witness);
    CHECK(is_cap(elliptic_quadric(f9, f9->elem(irred)), 2).is_cap);
}

TEST_CASE("tits ovoid") {
    auto f8 = Field::make(2, 3);
    PointSet t = tits_ovoid(f8);
    CHECK(t.size() == 65);
    CHECK(is_cap(t).is_cap);
    CHECK(t[64].x == std::array<u32, 4>{0, 0, 1, 0});

    auto f4 = Field::make(2, 2);
    CHECK_THROWS_AS(tits_ovoid(f4), std::invalid_argument);
    auto f9 = Field::make(3, 2);
    CHECK_THROWS_AS(tits_ovoid(f9), std::invalid_argument);
    auto f2 = Field::make(2, 1);
    CHECK_THROWS_AS(tits_ovoid(f2), std::invalid_argument);

    auto f32 = Field::make(2, 5);
    CHECK(tits_ovoid(f32).size() == 1025);
}

TEST_CASE("generator from points") {
    auto f3 = Field::make(3, 1);
    PointSet single(f3, {ProjPoint(*f3, {1, 2, 0, 1})});
    Mat g1 = generator_from_points(single);
    CHECK(g1.rows() == 4);
    CHECK(g1.cols() == 1);
    CHECK(g1.at(1, 0) == 2);

    auto f4 = Field::make(2, 2);
    Mat g = generator_from_points(elliptic_quadric(f4, f4->elem(2)));
    CHECK(g.cols() == 17);
    CHECK(rank(g) == 4);

    auto f8 = Field::make(2, 3);
    CHECK(rank(generator_from_points(tits_ovoid(f8))) == 4);
}
