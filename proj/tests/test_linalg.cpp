#include <catch2/catch_amalgamated.hpp>

#include "dgkit/rowspace.hpp"

#include <random>

using namespace dgkit;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);

Mat<Rational> qmat(std::vector<std::vector<long long>> rows) {
    Mat<Rational> m(Q, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.at(i, j) = Rational(rows[i][j]);
    return m;
}

}  // namespace

TEST_CASE("rational arithmetic stays exact across the 64-bit boundary") {
    Rational a(1, 3), b(1, 6);
    CHECK((a + b).str() == "1/2");
    CHECK((a - b).str() == "1/6");
    CHECK((a * b).str() == "1/18");
    CHECK((a / b).str() == "2");
    CHECK((-a).str() == "-1/3");

    // force promotion: (2^40)^2 overflows int64 as a product of numerators
    Rational big(1LL << 40);
    Rational sq = big * big * big;  // 2^120
    CHECK(!sq.is_small());
    CHECK(sq.str() == "1329227995784915872903807060280344576");
    // and demotion back
    Rational back = sq / (big * big);
    CHECK(back.is_small());
    CHECK(back == big);

    CHECK(Rational::parse("-7/21").str() == "-1/3");
    CHECK(Rational::parse("5") == Rational(5));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);

    // randomized consistency against the pure bignum path
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long long> d(-40, 40);
    Rational acc(0);
    BigRat ref(0);
    for (int i = 0; i < 400; ++i) {
        long long n = d(rng), den = d(rng);
        if (den == 0)
            den = 1;
        Rational r(n, den);
        switch (i % 3) {
            case 0: acc += r; ref += BigRat(BigInt(n)) / BigInt(den); break;
            case 1: acc -= r; ref -= BigRat(BigInt(n)) / BigInt(den); break;
            default: acc *= r; ref *= BigRat(BigInt(n)) / BigInt(den); break;
        }
        REQUIRE(acc.to_big() == ref);
    }
}

TEST_CASE("prime field arithmetic") {
    Fp a(3, 5), b(4, 5);
    CHECK((a + b).value() == 2);
    CHECK((a * b).value() == 2);
    CHECK((a - b).value() == 4);
    CHECK(a.inverse().value() == 2);
    CHECK(Fp(-1, 5).value() == 4);
    // generic integers adopt the modulus on contact
    CHECK((Fp(7) + Fp(0, 5)).value() == 2);
    CHECK(Fp(8) == Fp(3, 5));
    CHECK_THROWS_AS(Fp(1, 5) + Fp(1, 7), std::domain_error);
    CHECK_THROWS_AS(Fp(0, 5).inverse(), std::domain_error);
}

TEST_CASE("rank and left kernel") {
    SECTION("proportional rows over Q") {
        auto m = qmat({{1, 2}, {2, 4}});
        auto [r, ker] = rank_kernel(m);
        CHECK(r == 1);
        REQUIRE(ker.rows() == 1);
        // kernel vector kills m and spans the same line as (-2, 1)
        CHECK(all_zero(mul(ker.row(0), m)));
        RowBasis<Rational> span(Q, 2);
        span.insert(ker.row(0));
        CHECK(span.contains({Rational(-2), Rational(1)}));
    }
    SECTION("zero matrix") {
        auto [r, ker] = rank_kernel(Mat<Rational>::zero(Q, 3, 2));
        CHECK(r == 0);
        CHECK(ker.rows() == 3);
    }
    SECTION("over F2") {
        Mat<Fp> m(F2, 2, 2);
        m.at(0, 0) = Fp(1, 2);
        m.at(0, 1) = Fp(1, 2);
        m.at(1, 0) = Fp(1, 2);
        m.at(1, 1) = Fp(1, 2);
        auto [r, ker] = rank_kernel(m);
        CHECK(r == 1);
        REQUIRE(ker.rows() == 1);
        CHECK(ker.at(0, 0) == Fp(1, 2));
        CHECK(ker.at(0, 1) == Fp(1, 2));
    }
    SECTION("rank equals rank of transpose, rank + kernel = rows") {
        std::mt19937_64 rng(777);
        std::uniform_int_distribution<long long> d(-3, 3);
        for (int t = 0; t < 25; ++t) {
            std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
            Mat<Rational> m(Q, r, c);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j)
                    m.at(i, j) = Rational(d(rng));
            auto [rk, ker] = rank_kernel(m);
            CHECK(rk == rank(m.transpose()));
            CHECK(rk + ker.rows() == r);
            for (std::size_t i = 0; i < ker.rows(); ++i)
                CHECK(all_zero(mul(ker.row(i), m)));
        }
    }
}

TEST_CASE("solve_linear") {
    SECTION("no constraints: full matrix space") {
        auto basis = solve_linear<Rational>({}, Q, 2, 2);
        CHECK(basis.size() == 4);
    }
    SECTION("X*I = I*X is vacuous") {
        auto I = Mat<Rational>::identity(Q, 3);
        auto basis = solve_linear<Rational>({{I, I}}, Q, 3, 3);
        CHECK(basis.size() == 9);
    }
    SECTION("commutant of a 2x2 Jordan block has dimension 2") {
        auto J = qmat({{0, 1}, {0, 0}});
        auto basis = solve_linear<Rational>({{J, J}}, Q, 2, 2);
        REQUIRE(basis.size() == 2);
        for (const auto& X : basis)
            CHECK(X * J == J * X);
    }
}

TEST_CASE("quotient_basis") {
    SECTION("line inside the plane") {
        auto space = qmat({{1, 0}, {0, 1}});
        auto sub = qmat({{1, 0}});
        auto q = quotient_basis(space, sub);
        CHECK(q.complement.rows() == 1);
        // projection kills the subspace direction and keeps the complement
        CHECK(q.projection.at(0, 0).is_zero());
        CHECK(q.projection.at(1, 0) == Rational(1));
    }
    SECTION("subspace equal to space gives zero quotient") {
        auto space = qmat({{1, 2}, {3, 4}});
        auto q = quotient_basis(space, space);
        CHECK(q.complement.rows() == 0);
        CHECK(q.projection.cols() == 0);
    }
    SECTION("rank-one quotient from the spec") {
        auto space = qmat({{1, 0, 1}, {0, 1, 1}});
        auto sub = qmat({{1, 1, 2}});
        auto q = quotient_basis(space, sub);
        CHECK(q.complement.rows() == 1);
    }
    SECTION("subspace not contained in the space is rejected") {
        auto space = qmat({{1, 0, 0}});
        auto sub = qmat({{0, 1, 0}});
        CHECK_THROWS_AS(quotient_basis(space, sub), std::domain_error);
    }
    SECTION("dim complement = dim space - dim subspace on random data") {
        std::mt19937_64 rng(4242);
        std::uniform_int_distribution<long long> d(-2, 2);
        for (int t = 0; t < 20; ++t) {
            std::size_t n = 2 + rng() % 5;
            Mat<Rational> space(Q, 1 + rng() % 5, n);
            for (std::size_t i = 0; i < space.rows(); ++i)
                for (std::size_t j = 0; j < n; ++j)
                    space.at(i, j) = Rational(d(rng));
            // random combinations of space rows form the subspace
            std::size_t s = rng() % (space.rows() + 1);
            Mat<Rational> sub(Q, s, n);
            for (std::size_t i = 0; i < s; ++i) {
                std::vector<Rational> v(n, Rational(0));
                for (std::size_t r = 0; r < space.rows(); ++r) {
                    Rational c(d(rng));
                    for (std::size_t j = 0; j < n; ++j)
                        v[j] += c * space.at(r, j);
                }
                sub.set_row(i, v);
            }
            auto q = quotient_basis(space, sub);
            CHECK(q.complement.rows() == rank(space) - rank(sub));
            // projection vanishes exactly on the subspace
            RowBasis<Rational> span(Q, n, true);
            for (std::size_t i = 0; i < space.rows(); ++i)
                span.insert(space.row(i));
            for (std::size_t i = 0; i < sub.rows(); ++i) {
                auto coords = span.coords_in_inserted(sub.row(i));
                REQUIRE(coords);
                CHECK(all_zero(mul(*coords, q.projection)));
            }
        }
    }
}

TEST_CASE("row basis coordinates") {
    RowBasis<Rational> rb(Q, 3, true);
    rb.insert({Rational(1), Rational(1), Rational(0)});
    rb.insert({Rational(0), Rational(1), Rational(1)});
    rb.insert({Rational(1), Rational(2), Rational(1)});  // dependent
    CHECK(rb.rank() == 2);
    CHECK(rb.inserted() == 3);
    auto c = rb.coords_in_inserted({Rational(2), Rational(3), Rational(1)});
    REQUIRE(c);
    // reconstruct: coords * inserted rows
    std::vector<std::vector<Rational>> ins = {{Rational(1), Rational(1), Rational(0)},
                                              {Rational(0), Rational(1), Rational(1)},
                                              {Rational(1), Rational(2), Rational(1)}};
    std::vector<Rational> rec(3, Rational(0));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            rec[j] += (*c)[i] * ins[i][j];
    CHECK(rec == std::vector<Rational>{Rational(2), Rational(3), Rational(1)});
    CHECK(!rb.coords_in_inserted({Rational(1), Rational(0), Rational(0)}));
}
