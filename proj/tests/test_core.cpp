#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <string>

#include "wha/groupoid.hpp"
#include "wha/io.hpp"
#include "wha/weak_hopf.hpp"

using namespace wha;

namespace {

WeakHopfAlgebra grp_z2() { return groupoid_algebra(cyclic_group(2)); }
WeakHopfAlgebra grp_z3() { return groupoid_algebra(cyclic_group(3)); }
WeakHopfAlgebra grp_s3() { return groupoid_algebra(symmetric_group(3)); }
WeakHopfAlgebra pair2() { return groupoid_algebra(pair_groupoid(2)); }
WeakHopfAlgebra pair3() { return groupoid_algebra(pair_groupoid(3)); }
WeakHopfAlgebra gpd2z2() { return groupoid_algebra(connected_groupoid(2, cyclic_group(2))); }

std::filesystem::path temp_file(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "wha-test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("groupoid constructors") {
    CHECK(pair_groupoid(3).size() == 9);
    CHECK(connected_groupoid(2, cyclic_group(2)).size() == 8);
    CHECK(disjoint_union(pair_groupoid(2), cyclic_group(3)).size() == 7);
    CHECK(symmetric_group(4).size() == 24);
    CHECK(cyclic_group(1).size() == 1);
    CHECK_THROWS_AS(symmetric_group(5), Error);
    CHECK_THROWS_AS(groupoid_algebra(pair_groupoid(17), 256), Error);  // 289 > 256
}

TEST_CASE("builder outputs satisfy all axioms") {
    for (const auto& A : {grp_z2(), grp_z3(), grp_s3(), pair2(), pair3(), gpd2z2()}) {
        AxiomReport rep = verify_axioms(A);
        INFO(A.label << " first failure: " << rep.first_failure());
        CHECK(rep.all_pass);
    }
}

TEST_CASE("pair(2) is weak but not a Hopf algebra") {
    auto A = pair2();
    CHECK(verify_axioms(A).all_pass);
    CHECK_FALSE(A.is_hopf());
    CHECK(grp_z2().is_hopf());
}

TEST_CASE("broken antipode is reported") {
    auto A = grp_z2();
    A.antipode = QMatrix(2, 2);  // zero map
    auto rep = verify_axioms(A);
    CHECK_FALSE(rep.all_pass);
    CHECK_FALSE(rep.find("antipode-left")->pass);
    CHECK(rep.find("associativity")->pass);
}

TEST_CASE("dual weak Hopf algebra") {
    auto d = dual(grp_z2());
    CHECK(verify_axioms(d).all_pass);
    // function algebra on Z2 is commutative and pointwise
    CHECK(d.mult(0, 1, 0).is_zero());
    CHECK(d.mult(0, 0, 0) == Rational(1));

    auto p2 = pair2();
    auto dd = dual(dual(p2));
    CHECK(dd.mult == p2.mult);
    CHECK(dd.comult == p2.comult);
    CHECK(dd.unit == p2.unit);
    CHECK(dd.counit == p2.counit);
    CHECK(dd.antipode == p2.antipode);

    auto d3 = dual(pair3());
    CHECK(d3.n == 9);
    bool commutative = true;
    for (size_t i = 0; i < 9; ++i)
        for (size_t j = 0; j < 9; ++j)
            for (size_t k = 0; k < 9; ++k)
                if (d3.mult(i, j, k) != d3.mult(j, i, k)) commutative = false;
    CHECK(commutative);
    CHECK(verify_axioms(d3).all_pass);
}

TEST_CASE("counital maps") {
    auto A = pair2();
    // basis order: o1>o1, o1>o2, o2>o1, o2>o2
    CHECK(counital_target(A, A.unit) == A.unit);
    CHECK(counital_source(A, A.unit) == A.unit);
    // target of the morphism o1>o2 is o2, whose unit is index 3
    CHECK(counital_target(A, A.basis_vec(1)) == A.basis_vec(3));
    CHECK(counital_source(A, A.basis_vec(1)) == A.basis_vec(0));

    auto H = grp_z2();
    for (size_t i = 0; i < H.n; ++i) {
        QVec expect = scaled(H.unit, H.counit[i]);
        CHECK(counital_target(H, H.basis_vec(i)) == expect);
    }

    // idempotency of the counital maps
    for (const auto& B : {A, gpd2z2()}) {
        QMatrix et = B.eps_t_matrix(), es = B.eps_s_matrix();
        CHECK(et * et == et);
        CHECK(es * es == es);
    }
}

TEST_CASE("bases and minimal subalgebra") {
    auto bz = bases(grp_s3());
    CHECK(bz.target.size() == 1);
    CHECK(bz.source.size() == 1);

    auto bp = bases(pair3());
    CHECK(bp.target.size() == 3);
    CHECK(bp.source.size() == 3);

    auto bg = bases(gpd2z2());
    CHECK(bg.target.size() == 2);
    CHECK(bg.source.size() == 2);

    // A_t and A_s commute elementwise
    auto A = gpd2z2();
    for (const auto& z : bg.target)
        for (const auto& y : bg.source) CHECK(A.mul(z, y) == A.mul(y, z));

    CHECK(minimal_subalgebra(grp_s3()).size() == 1);
    CHECK(minimal_subalgebra(pair2()).size() == 2);
    CHECK(minimal_subalgebra(direct_sum(grp_z2(), pair2())).size() == 3);
}

TEST_CASE("regularity") {
    for (const auto& A : {grp_z2(), grp_s3(), pair3(), gpd2z2()}) {
        CHECK(is_regular(A));
        CHECK(is_regular(dual(A)));
    }
}

TEST_CASE("center dimensions") {
    CHECK(center(pair3()).size() == 1);
    CHECK(center(grp_s3()).size() == 3);  // one per conjugacy class
    auto ds = direct_sum(grp_z2(), grp_z3());
    CHECK(center(ds).size() == center(grp_z2()).size() + center(grp_z3()).size());
}

TEST_CASE("connectivity") {
    auto c = connectivity(pair2());
    CHECK(c.connected);       // Z(M_2) meets A_t in scalars
    CHECK_FALSE(c.coconnected);  // A_s = A_t = diagonal has dimension 2

    CHECK(connectivity(grp_s3()).biconnected);
    CHECK(connectivity(grp_z3()).biconnected);
    CHECK_FALSE(connectivity(direct_sum(grp_z2(), grp_z2())).connected);

    auto cg = connectivity(gpd2z2());
    CHECK(cg.connected);
    CHECK_FALSE(cg.coconnected);
}

TEST_CASE("groupoid algebra invariants") {
    for (auto g : {pair_groupoid(2), cyclic_group(3), connected_groupoid(2, cyclic_group(2)),
                   disjoint_union(pair_groupoid(2), cyclic_group(3))}) {
        auto A = groupoid_algebra(g);
        CHECK(bases(A).target.size() == g.objects.size());
        CHECK(connectivity(A).connected == g.is_connected());
        CHECK(s_squared(A) == QMatrix::identity(A.n));
        CHECK(verify_axioms(dual(A)).all_pass);
    }
    // disjoint union of groupoids gives the direct sum of algebras
    auto du = groupoid_algebra(disjoint_union(pair_groupoid(2), cyclic_group(3)));
    auto ds = direct_sum(pair2(), grp_z3());
    CHECK(du.mult == ds.mult);
    CHECK(du.comult == ds.comult);
    CHECK(du.unit == ds.unit);
    CHECK(du.counit == ds.counit);
    CHECK(du.antipode == ds.antipode);
}

TEST_CASE("antipode recovery") {
    auto A = grp_z2();
    QMatrix expected = A.antipode;
    A.antipode = QMatrix();
    QMatrix s = solve_antipode(A);
    CHECK(s == expected);

    auto P = pair2();
    QMatrix sp = solve_antipode(P);
    CHECK(sp == P.antipode);

    // corrupt the comultiplication: Delta(g) := 1 (x) g makes the
    // antipode equations inconsistent
    auto Bad = grp_z2();
    Bad.comult = Tensor3(2, 2, 2);
    Bad.comult(0, 0, 0) = Rational(1);
    Bad.comult(1, 0, 1) = Rational(1);
    CHECK_THROWS_AS(solve_antipode(Bad), Error);
    try {
        solve_antipode(Bad);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NoAntipode);
    }
}

TEST_CASE("antipode is an algebra and coalgebra antihomomorphism") {
    for (const auto& A : {grp_s3(), pair2(), gpd2z2()}) {
        for (size_t i = 0; i < A.n; ++i)
            for (size_t j = 0; j < A.n; ++j) {
                QVec lhs = A.apply_antipode(A.mul(A.basis_vec(i), A.basis_vec(j)));
                QVec rhs = A.mul(A.apply_antipode(A.basis_vec(j)), A.apply_antipode(A.basis_vec(i)));
                CHECK(lhs == rhs);
            }
        for (size_t i = 0; i < A.n; ++i) {
            QMatrix lhs = A.coprod(A.apply_antipode(A.basis_vec(i)));
            // (S (x) S) applied to the flipped coproduct of e_i
            QMatrix d = A.coprod(A.basis_vec(i));
            QMatrix rhs = A.antipode * d.transpose() * A.antipode.transpose();
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("Hopf iff the target base is trivial") {
    for (const auto& A : {grp_z2(), grp_z3(), grp_s3(), pair2(), pair3(), gpd2z2()})
        CHECK(A.is_hopf() == (bases(A).target.size() == 1));
}

TEST_CASE("group-like elements") {
    auto A = grp_z2();
    CHECK(is_grouplike(A, A.unit));
    QVec g = A.basis_vec(1);
    CHECK(is_grouplike(A, g));
    CHECK(is_trivial(A, A.unit).has_value());
    CHECK_FALSE(is_trivial(A, g).has_value());  // nontrivial in a Hopf algebra

    QVec notg(2, Rational(0));
    notg[0] = Rational(1);
    notg[1] = Rational(1);
    CHECK_FALSE(is_grouplike(A, notg));  // 1+g is not invertible... it is! but not group-like
}

TEST_CASE("trivial group-like construction round trip") {
    auto A = pair2();
    QVec y(4, Rational(0));
    y[0] = Rational(2);  // 2*id_{o1} + 3*id_{o2} in A_s
    y[3] = Rational(3);
    GroupLike gl = trivial_grouplike(A, y);
    CHECK(is_grouplike(A, gl.element));
    CHECK(A.mul(gl.element, gl.inverse) == A.unit);
    auto wit = is_trivial(A, gl.element);
    REQUIRE(wit.has_value());
    QVec rebuilt = A.mul(*wit, *invert_element(A, A.apply_antipode(*wit)));
    CHECK(rebuilt == gl.element);

    // non-invertible witness rejected
    QVec bad(4, Rational(0));
    bad[0] = Rational(1);
    CHECK_THROWS_AS(trivial_grouplike(A, bad), Error);
}

TEST_CASE("square of the antipode") {
    CHECK(s_squared(grp_s3()) == QMatrix::identity(6));
    CHECK(s_squared(pair2()) == QMatrix::identity(4));
    for (const auto& A : {grp_s3(), pair2(), gpd2z2()})
        for (Cplx ev : s2_eigenvalues(A)) {
            CHECK(ev.real() > 0);
            CHECK(std::abs(ev.imag()) < 1e-12);
        }
}

TEST_CASE("direct sums") {
    auto ds = direct_sum(grp_z2(), grp_z2());
    CHECK(ds.n == 4);
    CHECK(verify_axioms(ds).all_pass);
    CHECK_FALSE(connectivity(ds).connected);

    auto ds2 = direct_sum(pair2(), grp_z3());
    CHECK(ds2.n == 7);
    CHECK(verify_axioms(ds2).all_pass);
}

TEST_CASE("algebra JSON round trip") {
    auto A = grp_z2();
    auto path = temp_file("z2.json");
    save_algebra(A, path.string());
    auto B = load_algebra(path.string());
    CHECK(B.n == A.n);
    CHECK(B.mult == A.mult);
    CHECK(B.comult == A.comult);
    CHECK(B.unit == A.unit);
    CHECK(B.counit == A.counit);
    CHECK(B.antipode == A.antipode);

    // null antipode is recovered on load
    Json j = algebra_to_json(A);
    j["antipode"] = nullptr;
    auto path2 = temp_file("z2-noS.json");
    {
        std::ofstream out(path2);
        out << j.dump();
    }
    auto C = load_algebra(path2.string());
    CHECK(C.antipode == A.antipode);

    // a non-associative table is rejected with the axiom named
    Json bad = algebra_to_json(pair2());
    bad["mult"][1][1][0] = "1";
    auto path3 = temp_file("bad.json");
    {
        std::ofstream out(path3);
        out << bad.dump();
    }
    try {
        load_algebra(path3.string());
        FAIL("expected AxiomViolation");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::AxiomViolation);
        CHECK(std::string(e.what()).find("associativity") != std::string::npos);
    }
}

TEST_CASE("groupoid JSON round trip") {
    auto g = connected_groupoid(2, cyclic_group(2));
    auto path = temp_file("gpd.json");
    save_groupoid(g, path.string());
    auto h = load_groupoid(path.string());
    CHECK(h.size() == g.size());
    auto A = groupoid_algebra(g), B = groupoid_algebra(h);
    CHECK(A.mult == B.mult);
    CHECK(A.antipode == B.antipode);
}
