#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "wha/config.hpp"
#include "wha/linalg.hpp"
#include "wha/perron.hpp"
#include "wha/rational.hpp"
#include "wha/spectral.hpp"

using namespace wha;

namespace {

QMatrix mat2(long long a, long long b, long long c, long long d) {
    QMatrix m(2, 2);
    m(0, 0) = a; m(0, 1) = b; m(1, 0) = c; m(1, 1) = d;
    return m;
}

}  // namespace

TEST_CASE("rational arithmetic and serialization") {
    Rational a(3, 6);
    CHECK(a.numerator() == 1);
    CHECK(a.denominator() == 2);
    CHECK(a.str() == "1/2");
    CHECK(Rational(-4, -8).str() == "1/2");
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(7).str() == "7");
    CHECK(Rational::parse("-3/9") == Rational(-1, 3));
    CHECK(Rational::parse(" 12 ") == Rational(12));
    CHECK(Rational::parse("4/2") == Rational(2));
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
    CHECK_THROWS_AS(Rational::parse("x"), Error);
    CHECK_THROWS_AS(Rational::parse("1.5"), Error);

    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 3) / Rational(2, 3) == Rational(1, 2));
    CHECK(Rational(1, 2) < Rational(2, 3));

    // big values stay exact
    Rational big = Rational(1);
    for (int i = 0; i < 40; ++i) big *= Rational(1000000007);
    Rational inv = Rational(1) / big;
    CHECK(big * inv == Rational(1));
}

TEST_CASE("q_solve examples") {
    auto id2 = QMatrix::identity(2);
    auto sol = solve(id2, QVec{Rational(3), Rational(4)});
    REQUIRE(sol.has_value());
    CHECK(*sol == QVec{Rational(3), Rational(4)});

    CHECK_FALSE(solve(mat2(1, 1, 1, 1), QVec{Rational(1), Rational(0)}).has_value());

    auto sol2 = solve(mat2(2, 1, 1, 1), QVec{Rational(3), Rational(2)});
    REQUIRE(sol2.has_value());
    CHECK(*sol2 == QVec{Rational(1), Rational(1)});

    CHECK_THROWS_AS(solve(mat2(1, 0, 0, 1), QVec{Rational(1)}), Error);
}

TEST_CASE("q_nullspace examples") {
    CHECK(nullspace(QMatrix::identity(3)).empty());

    auto z = nullspace(QMatrix(2, 2));
    REQUIRE(z.size() == 2);
    CHECK(make_span(z).dim() == 2);

    QMatrix row(1, 2);
    row(0, 0) = 1; row(0, 1) = 1;
    auto k = nullspace(row);
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] + k[0][1] == Rational(0));
    CHECK_FALSE(is_zero_vec(k[0]));
}

TEST_CASE("solve and nullspace satisfy their defining equations exactly") {
    Rng rng(kDefaultSeed);
    for (int trial = 0; trial < 25; ++trial) {
        size_t rows = 2 + rng.next_u64() % 4, cols = 2 + rng.next_u64() % 4;
        QMatrix a(rows, cols);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j)
                a(i, j) = Rational(rng.next_int(-4, 4), 1 + rng.next_u64() % 3);
        for (const auto& v : nullspace(a)) CHECK(is_zero_vec(a.apply(v)));

        QVec x(cols);
        for (auto& e : x) e = Rational(rng.next_int(-5, 5));
        QVec b = a.apply(x);
        auto s = solve(a, b);
        REQUIRE(s.has_value());
        CHECK(a.apply(*s) == b);

        CHECK(rank(a) + nullspace(a).size() == cols);
    }
}

TEST_CASE("matrix inverse") {
    auto inv = inverse(mat2(2, 1, 1, 1));
    REQUIRE(inv.has_value());
    CHECK((*inv) * mat2(2, 1, 1, 1) == QMatrix::identity(2));
    CHECK_FALSE(inverse(mat2(1, 1, 1, 1)).has_value());
}

TEST_CASE("perron examples") {
    Tolerances tol;
    auto swap2 = perron(mat2(0, 1, 1, 0), tol);
    CHECK(std::abs(swap2.value - 1.0) < 1e-9);
    CHECK(std::abs(swap2.vector[0] - swap2.vector[1]) < 1e-8);

    CHECK(std::abs(perron(QMatrix::identity(3), tol).value - 1.0) < 1e-9);

    auto fib = perron(mat2(1, 1, 1, 0), tol);
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;  // root of x^2 - x - 1
    CHECK(std::abs(fib.value - golden) < 1e-9);

    CHECK_THROWS_AS(perron(mat2(0, 1, 0, 0), tol), Error);
    try {
        perron(mat2(0, 1, 0, 0), tol);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NilpotentInput);
    }
}

TEST_CASE("eig_decompose examples") {
    Tolerances tol;
    CMat d = CMat::Zero(3, 3);
    d(0, 0) = 1; d(1, 1) = 1; d(2, 2) = 2;
    auto cl = eig_decompose(d, tol);
    REQUIRE(cl.size() == 2);
    CHECK(cl[0].multiplicity == 2);
    CHECK(std::abs(cl[0].value - Cplx(1, 0)) < 1e-9);
    CHECK(cl[1].multiplicity == 1);
    CHECK(std::abs(cl[1].value - Cplx(2, 0)) < 1e-9);

    CHECK(eig_decompose(CMat::Identity(4, 4), tol).size() == 1);

    CMat swp(2, 2);
    swp << 0, 1, 1, 0;
    auto cs = eig_decompose(swp, tol);
    REQUIRE(cs.size() == 2);
    // analytic spectral projections (I -+ M)/2
    CMat pminus = (CMat::Identity(2, 2) - swp) / 2.0;
    CMat pplus = (CMat::Identity(2, 2) + swp) / 2.0;
    CHECK((cs[0].projection - pminus).cwiseAbs().maxCoeff() < 1e-9);
    CHECK((cs[1].projection - pplus).cwiseAbs().maxCoeff() < 1e-9);

    // ambiguous separation
    CMat close = CMat::Zero(2, 2);
    close(0, 0) = 0.0;
    close(1, 1) = 1.5 * tol.eig_cluster;
    CHECK_THROWS_AS(eig_decompose(close, tol), Error);
}

TEST_CASE("spectral projections resolve the identity and are orthogonal") {
    Tolerances tol;
    Rng rng(kDefaultSeed ^ 0x5eed);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 4;
        // diagonalizable by construction: V D V^{-1} with integer V
        CMat v = CMat::Zero(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) v(i, j) = static_cast<double>(rng.next_int(-3, 3));
        if (std::abs(v.determinant()) < 0.5) continue;
        CMat d = CMat::Zero(n, n);
        for (int i = 0; i < n; ++i) d(i, i) = static_cast<double>(rng.next_int(-4, 4));
        CMat m = v * d * v.inverse();
        auto cl = eig_decompose(m, tol);
        CMat sum = CMat::Zero(n, n);
        for (const auto& c : cl) sum += c.projection;
        CHECK((sum - CMat::Identity(n, n)).cwiseAbs().maxCoeff() < tol.loose() * 100);
        for (size_t a = 0; a < cl.size(); ++a)
            for (size_t b = 0; b < cl.size(); ++b) {
                CMat prod = cl[a].projection * cl[b].projection;
                CMat expect = (a == b) ? cl[a].projection : CMat::Zero(n, n);
                CHECK((prod - expect).cwiseAbs().maxCoeff() < 1e-6);
            }

        // perron value dominates the spectrum of a nonnegative matrix
        QMatrix nn(n, n);
        bool nonzero = false;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                long long e = std::max<long long>(0, rng.next_int(-2, 3));
                nn(i, j) = Rational(e);
                nonzero |= e != 0;
            }
        if (!nonzero) continue;
        try {
            auto pr = perron(nn, tol);
            for (Cplx mu : eigenvalues(to_cmat(nn)))
                CHECK(pr.value + tol.loose() >= std::abs(mu) - 1e-7);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NilpotentInput);
        }
    }
}

TEST_CASE("round_int") {
    Tolerances tol;
    CHECK(round_int(2.0000000001, tol) == 2);
    CHECK_FALSE(round_int(1.5, tol).has_value());
    CHECK(round_int(Rational(6, 3).to_double(), tol) == 2);
    CHECK(round_int(Cplx(3.0, 1e-9), tol) == 3);
    CHECK_FALSE(round_int(Cplx(3.0, 1e-3), tol).has_value());
    CHECK(round_int(-0.9999999, tol) == -1);
}

TEST_CASE("rationalize recovers small fractions") {
    CHECK(rationalize(0.5) == Rational(1, 2));
    CHECK(rationalize(1.0 / 3.0) == Rational(1, 3));
    CHECK(rationalize(-7.0 / 12.0) == Rational(-7, 12));
    CHECK_FALSE(rationalize(std::sqrt(2.0)).has_value());
}

TEST_CASE("span utilities") {
    QVec a{Rational(1), Rational(0), Rational(1)};
    QVec b{Rational(0), Rational(1), Rational(1)};
    QVec c{Rational(1), Rational(1), Rational(2)};
    RowSpan s;
    CHECK(s.try_add(a));
    CHECK(s.try_add(b));
    CHECK_FALSE(s.try_add(c));  // dependent
    CHECK(s.contains(c));
    CHECK(s.dim() == 2);

    auto inter = intersect_spans({a, b}, {c});
    REQUIRE(inter.size() == 1);
    CHECK(make_span({c}).contains(inter[0]));
}
