#include <catch2/catch_amalgamated.hpp>

#include "ovoid/field.hpp"

#include <set>
#include <vector>

using namespace ovoid;

namespace {

// Oracle: roots of x^2 + x + a found by scanning the whole field.
std::vector<u32> quadratic_roots_scan(const Field& f, u32 a) {
    std::vector<u32> roots;
    for (u64 x = 0; x < f.size(); ++x) {
        u32 xx = static_cast<u32>(x);
        if (f.add(f.add(f.mul(xx, xx), xx), a) == 0) roots.push_back(xx);
    }
    return roots;
}

// Oracle: trace by the defining power sum, using pow only.
u32 trace_power_sum(const Field& f, u32 x) {
    u32 acc = 0;
    i64 pe = 1;
    for (int i = 0; i < f.degree(); ++i) {
        acc = f.add(acc, f.pow(x, pe));
        pe *= f.characteristic();
    }
    return acc;
}

} // namespace

TEST_CASE("deterministic modulus selection") {
    auto f4 = Field::make(2, 2);
    CHECK(f4->modulus() == std::vector<int>{1, 1, 1});

    // oracle: x^2+x+1 is the only monic quadratic over GF(2) without a root
    auto f2 = Field::make(2, 1);
    int irreducible_count = 0;
    for (int c1 = 0; c1 < 2; ++c1)
        for (int c0 = 0; c0 < 2; ++c0) {
            bool has_root = false;
            for (u32 x = 0; x < 2; ++x)
                if ((x * x + static_cast<u32>(c1) * x + static_cast<u32>(c0)) % 2 == 0) has_root = true;
            if (!has_root) {
                ++irreducible_count;
                CHECK(c0 == 1);
                CHECK(c1 == 1);
            }
        }
    CHECK(irreducible_count == 1);

    auto f3 = Field::make(3, 1);
    CHECK(f3->modulus() == std::vector<int>{0, 1});

    // oracle: the irreducible monic cubics over GF(2) are exactly the two
    // without roots; the scan must return the smaller packed tail
    auto f8 = Field::make(2, 3);
    CHECK(f8->modulus() == std::vector<int>{1, 1, 0, 1});
    std::vector<std::vector<int>> cubics_without_roots;
    for (u32 t = 0; t < 8; ++t) {
        std::vector<int> f{static_cast<int>(t & 1), static_cast<int>((t >> 1) & 1),
                           static_cast<int>((t >> 2) & 1), 1};
        bool has_root = false;
        for (u32 x = 0; x < 2; ++x) {
            u32 val = (f[0] + f[1] * x + f[2] * x * x + f[3] * x * x * x) % 2;
            if (val == 0) has_root = true;
        }
        if (!has_root) cubics_without_roots.push_back(f);
    }
    REQUIRE(cubics_without_roots.size() == 2);
    CHECK(f8->modulus() == cubics_without_roots.front());
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(Field::make(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(2, 21), std::invalid_argument); // default ceiling 2^20
    CHECK_NOTHROW(Field::make(2, 21, u64(1) << 21));            // explicit override
}

TEST_CASE("basic arithmetic") {
    auto f4 = Field::make(2, 2);
    Elem w = f4->elem(2); // the class of x
    CHECK(w * w == f4->elem(3)); // x^2 = x + 1 under x^2+x+1

    auto f9 = Field::make(3, 2);
    for (u64 a = 0; a < 9; ++a) CHECK(f9->elem(static_cast<u32>(a)) * f9->one() == f9->elem(static_cast<u32>(a)));

    auto f3 = Field::make(3, 1);
    CHECK(inverse(f3->elem(2)) == f3->elem(2));
    CHECK_THROWS_AS(inverse(f3->zero()), std::domain_error);
    CHECK_THROWS_AS(f3->elem(1) / f3->zero(), std::domain_error);

    // exhaustive field axioms on GF(8)
    auto f8 = Field::make(2, 3);
    for (u32 a = 0; a < 8; ++a)
        for (u32 b = 0; b < 8; ++b) {
            CHECK(f8->add(a, b) == f8->add(b, a));
            CHECK(f8->mul(a, b) == f8->mul(b, a));
            for (u32 c = 0; c < 8; ++c) {
                CHECK(f8->mul(a, f8->add(b, c)) == f8->add(f8->mul(a, b), f8->mul(a, c)));
                CHECK(f8->add(a, f8->add(b, c)) == f8->add(f8->add(a, b), c));
            }
        }
    for (u32 a = 1; a < 8; ++a) CHECK(f8->mul(a, f8->inv(a)) == 1);
}

TEST_CASE("cross-field arithmetic is rejected, equal fields interoperate") {
    auto f4 = Field::make(2, 2);
    auto f8 = Field::make(2, 3);
    CHECK_THROWS_AS(f4->elem(1) + f8->elem(1), std::invalid_argument);

    auto f4b = Field::make(2, 2); // structurally identical
    CHECK(f4->elem(2) + f4b->elem(2) == f4->zero());
}

TEST_CASE("pow semantics") {
    auto f9 = Field::make(3, 2);
    u32 g = f9->generator_value();
    // against repeated multiplication
    u32 acc = 1;
    for (i64 e = 0; e < 20; ++e) {
        CHECK(f9->pow(g, e) == acc);
        acc = f9->mul(acc, g);
    }
    CHECK(f9->pow(g, 8) == 1);     // order q-1
    CHECK(f9->pow(g, -1) == f9->inv(g));
    CHECK(f9->pow(0, 0) == 1);
    CHECK(f9->pow(0, 5) == 0);
    CHECK_THROWS_AS(f9->pow(0, -2), std::domain_error);
}

TEST_CASE("absolute trace") {
    auto f4 = Field::make(2, 2);
    CHECK(f4->trace_int(0) == 0);
    CHECK(f4->trace_int(2) == 1); // Tr(w) = w + w^2 = 1
    auto f9 = Field::make(3, 2);
    CHECK(f9->trace_int(1) == 2);

    auto f16 = Field::make(2, 4);
    for (u32 x = 0; x < 16; ++x) CHECK(static_cast<u32>(f16->trace_int(x)) == trace_power_sum(*f16, x));
    for (u32 x = 0; x < 16; ++x)
        for (u32 y = 0; y < 16; ++y)
            CHECK(f16->trace_int(f16->add(x, y)) == (f16->trace_int(x) + f16->trace_int(y)) % 2);
}

TEST_CASE("relative trace") {
    auto f16 = Field::make(2, 4);
    for (u32 x = 0; x < 16; ++x) {
        CHECK(f16->relative_trace_value(x, 4) == x); // s = n is the identity
        CHECK(f16->relative_trace_value(x, 1) == static_cast<u32>(f16->trace_int(x)));
        // GF(16) -> GF(4): x + x^4
        u32 expect = f16->add(x, f16->pow(x, 4));
        CHECK(f16->relative_trace_value(x, 2) == expect);
        CHECK(f16->in_subfield(expect, 2));
    }
    CHECK_THROWS_AS(f16->relative_trace_value(1, 3), std::invalid_argument);

    // tower transitivity on GF(64): absolute = subfield trace of the relative trace
    auto f64 = Field::make(2, 6);
    for (int s : {2, 3}) {
        SubfieldEmbedding emb(f64, s);
        for (u32 x = 0; x < 64; ++x) {
            Elem mid = emb.drop(f64->elem(f64->relative_trace_value(x, s)));
            CHECK(emb.sub()->trace_int(mid.v) == f64->trace_int(x));
        }
    }
}

TEST_CASE("quadratic character") {
    auto f9 = Field::make(3, 2);
    CHECK(quadratic_character(f9->one()) == 1);
    CHECK(quadratic_character(-f9->one()) == 1); // q = 9 is 1 mod 4
    auto f3 = Field::make(3, 1);
    CHECK(quadratic_character(-f3->one()) == -1); // q = 3 is 3 mod 4
    CHECK(quadratic_character(f3->zero()) == 0);

    auto f2 = Field::make(2, 2);
    CHECK_THROWS_AS(quadratic_character(f2->one()), std::domain_error);

    auto f25 = Field::make(5, 2);
    // oracle: the set of nonzero squares
    std::set<u32> squares;
    for (u32 x = 1; x < 25; ++x) squares.insert(f25->mul(x, x));
    CHECK(squares.size() == 12);
    int plus = 0;
    for (u32 x = 1; x < 25; ++x) {
        CHECK(f25->quadratic_character_value(x) == (squares.count(x) ? 1 : -1));
        if (f25->quadratic_character_value(x) == 1) ++plus;
        for (u32 y = 1; y < 25; ++y)
            CHECK(f25->quadratic_character_value(f25->mul(x, y)) ==
                  f25->quadratic_character_value(x) * f25->quadratic_character_value(y));
    }
    CHECK(plus == 12);
}

TEST_CASE("frobenius orbit closes on small fields") {
    for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 1}, {2, 5}, {2, 10}, {3, 4}, {5, 3}, {7, 2}, {31, 2}}) {
        auto f = Field::make(p, n);
        for (u64 x = 0; x < f->size(); ++x)
            CHECK(f->pow(static_cast<u32>(x), static_cast<i64>(f->size())) == static_cast<u32>(x));
    }
}

TEST_CASE("quadratic_root_test matches exhaustive root search") {
    auto f4 = Field::make(2, 2);
    CHECK(quadratic_root_test(f4->elem(2)) == QuadraticRootKind::irreducible); // Tr(w) = 1

    for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 8}, {2, 10},
                                                        {3, 2}, {3, 5}, {5, 3}, {7, 2}, {11, 2}, {31, 1}}) {
        auto f = Field::make(p, n);
        for (u64 a = 0; a < f->size(); ++a) {
            auto roots = quadratic_roots_scan(*f, static_cast<u32>(a));
            auto kind = quadratic_root_test(f->elem(static_cast<u32>(a)));
            switch (kind) {
            case QuadraticRootKind::irreducible: CHECK(roots.size() == 0); break;
            case QuadraticRootKind::reducible_distinct: CHECK(roots.size() == 2); break;
            case QuadraticRootKind::reducible_double: CHECK(roots.size() == 1); break;
            }
        }
        if (p > 2) {
            u32 quarter = f->inv(f->from_int(4).v);
            CHECK(quadratic_root_test(f->elem(quarter)) == QuadraticRootKind::reducible_double);
        }
        CHECK(quadratic_root_test(f->zero()) == QuadraticRootKind::reducible_distinct);
    }
}

TEST_CASE("dual basis") {
    auto f4 = Field::make(2, 2);
    Basis b(f4, 1, {f4->one(), f4->elem(2)});
    Basis d = dual_basis(b);
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j)
            CHECK(f4->trace_int((b.elems[i] * d.elems[j]).v) == (i == j ? 1 : 0));

    // involution on polynomial bases over several fields
    for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {2, 4}, {5, 2}}) {
        auto f = Field::make(p, n);
        Basis pb = Basis::polynomial(f);
        Basis dd = dual_basis(dual_basis(pb));
        for (size_t i = 0; i < pb.elems.size(); ++i) CHECK(dd.elems[i] == pb.elems[i]);
    }

    // full delta matrix for the polynomial basis of GF(8)
    auto f8 = Field::make(2, 3);
    Basis pb8 = Basis::polynomial(f8);
    Basis d8 = dual_basis(pb8);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j)
            CHECK(f8->trace_int((pb8.elems[i] * d8.elems[j]).v) == (i == j ? 1 : 0));

    // a dual basis over an intermediate subfield: GF(16) over GF(4)
    auto f16 = Field::make(2, 4);
    Basis pb16 = Basis::polynomial(f16, 2);
    Basis d16 = dual_basis(pb16);
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j)
            CHECK(f16->relative_trace_value((pb16.elems[i] * d16.elems[j]).v, 2) == (i == j ? 1u : 0u));

    // dependent sets are rejected
    CHECK_THROWS_AS(Basis(f8, 1, {f8->one(), f8->elem(2), f8->elem(3)}), std::invalid_argument);
}

TEST_CASE("element order is lexicographic on coefficient vectors") {
    auto f4 = Field::make(2, 2);
    CHECK(f4->elements_lex() == std::vector<u32>{0, 2, 1, 3});
    auto f9 = Field::make(3, 2);
    CHECK(f9->elements_lex() == std::vector<u32>{0, 3, 6, 1, 4, 7, 2, 5, 8});
}

TEST_CASE("subfield embedding is a ring isomorphism onto the fixed field") {
    auto f16 = Field::make(2, 4);
    SubfieldEmbedding emb(f16, 2);
    CHECK(emb.sub()->size() == 4);
    for (u32 y = 0; y < 4; ++y) {
        Elem lifted = emb.lift(emb.sub()->elem(y));
        CHECK(f16->in_subfield(lifted.v, 2));
        CHECK(emb.drop(lifted).v == y);
    }
    for (u32 a = 0; a < 4; ++a)
        for (u32 b = 0; b < 4; ++b) {
            Elem la = emb.lift(emb.sub()->elem(a)), lb = emb.lift(emb.sub()->elem(b));
            CHECK(emb.lift(emb.sub()->elem(emb.sub()->add(a, b))) == la + lb);
            CHECK(emb.lift(emb.sub()->elem(emb.sub()->mul(a, b))) == la * lb);
        }
    // elements outside the subfield cannot be dropped
    bool found_outside = false;
    for (u32 z = 0; z < 16 && !found_outside; ++z)
        if (!f16->in_subfield(z, 2)) {
            CHECK_THROWS_AS(emb.drop(f16->elem(z)), std::invalid_argument);
            found_outside = true;
        }
    CHECK(found_outside);

    auto f64 = Field::make(2, 6);
    SubfieldEmbedding emb3(f64, 3);
    for (u32 y = 0; y < 8; ++y) CHECK(emb3.drop(emb3.lift(emb3.sub()->elem(y))).v == y);
    // degenerate s = n embedding is the identity on values
    SubfieldEmbedding embn(f16, 4);
    for (u32 y = 0; y < 16; ++y) CHECK(embn.lift(embn.sub()->elem(y)).v == y);
}

TEST_CASE("construction is deterministic") {
    auto a = Field::make(5, 2);
    auto b = Field::make(5, 2);
    CHECK(a->modulus() == b->modulus());
    CHECK(a->generator_value() == b->generator_value());
}

TEST_CASE("digit packing") {
    auto f27 = Field::make(3, 3);
    for (u32 v = 0; v < 27; ++v) CHECK(f27->from_digits(f27->digits(v)) == v);
    CHECK_THROWS_AS(f27->from_digits({0, 0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(f27->from_digits({3}), std::invalid_argument);
    CHECK_THROWS_AS(f27->elem(27), std::invalid_argument);
}
