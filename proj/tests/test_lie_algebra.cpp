#include <doctest.h>

#include "lieham/lie_algebra.hpp"

using namespace lieham;

TEST_CASE("validate: sl2 constants are a Lie algebra, symmetric c is not") {
    CatalogEntry sl2 = catalog("sl2");
    CHECK(validate(sl2.sc).ok);

    StructureConstants abelian(2);
    CHECK(validate(abelian).ok);

    StructureConstants bad(2);
    bad.at(0, 1, 0) = Rational(1);
    bad.at(1, 0, 0) = Rational(1);  // symmetric: antisymmetry violation at (1,2,1)
    ValidationReport rep = validate(bad);
    CHECK_FALSE(rep.ok);
    REQUIRE_FALSE(rep.violations.empty());
    CHECK(rep.violations.front().kind == Violation::Kind::Antisymmetry);
    CHECK(rep.violations.front().a == 0);
    CHECK(rep.violations.front().b == 1);
    CHECK(rep.violations.front().g == 0);
}

TEST_CASE("adjoint matrices") {
    CatalogEntry so3 = catalog("so3");
    RatMatrix ad1 = adjoint_matrix(so3.sc, 0);
    // e2 -> e3, e3 -> -e2
    CHECK(ad1[2][1] == Rational(1));
    CHECK(ad1[1][2] == Rational(-1));
    CHECK(ad1[0][0] == Rational(0));

    StructureConstants abelian(3);
    RatMatrix z = adjoint_matrix(abelian, 1);
    for (const auto& row : z)
        for (const auto& v : row) CHECK(v == Rational(0));

    // ad is a representation: ad_[e1,e2] = ad_e1 ad_e2 - ad_e2 ad_e1 on sl2
    CatalogEntry sl2 = catalog("sl2");
    auto mul = [&](const RatMatrix& A, const RatMatrix& B) {
        RatMatrix C(3, std::vector<Rational>(3, Rational(0)));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) C[i][j] += A[i][k] * B[k][j];
        return C;
    };
    RatMatrix a1 = adjoint_matrix(sl2.sc, 0), a2 = adjoint_matrix(sl2.sc, 1);
    RatMatrix comm = mul(a1, a2);
    RatMatrix ba = mul(a2, a1);
    // [e1,e2] = e1
    RatMatrix expect = adjoint_matrix(sl2.sc, 0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(comm[i][j] - ba[i][j] == expect[i][j]);

    CHECK_THROWS_AS(adjoint_matrix(sl2.sc, 5), std::out_of_range);
}

TEST_CASE("catalog entries match the stated relations") {
    CatalogEntry iso2 = catalog("iso2");
    CHECK(iso2.sc.at(0, 1, 0) == Rational(0));
    CHECK(iso2.sc.at(0, 2, 1) == Rational(-1));  // [e1,e3] = -e2
    CHECK(iso2.sc.at(1, 2, 0) == Rational(1));   // [e2,e3] = e1
    REQUIRE(iso2.casimirs.size() == 1);
    CHECK(iso2.casimirs[0] == iso2.dual_space.parse("e1^2 + e2^2"));

    CatalogEntry iso11 = catalog("iso11");
    CHECK(iso11.casimirs[0] == iso11.dual_space.parse("e1*e2"));

    CatalogEntry i16 = catalog("h2_semi_Rr(1)");
    CHECK(i16.casimirs.empty());
    CHECK(i16.sc.dim == 4);

    CHECK(catalog("i16").sc == i16.sc);
    CHECK(catalog("i14a").sc == catalog("R_semi_Rr(2,1,2)").sc);
    CHECK_THROWS_AS(catalog("bogus"), std::invalid_argument);
    CHECK_THROWS_AS(catalog("h2_semi_Rr(0)"), std::invalid_argument);
}

TEST_CASE("catalog: every entry validates exactly") {
    for (const auto& name : catalog_names()) CHECK(validate(catalog(name).sc).ok);
}

TEST_CASE("derived constants: P5 closure table") {
    CatalogEntry p5 = catalog("sl2_semi_R2");
    REQUIRE(p5.sc.dim == 5);
    const auto& c = p5.sc;
    // [e1,e3] = e1, [e1,e5] = e2, [e2,e3] = -e2, [e2,e4] = e1,
    // [e3,e4] = -2e4, [e3,e5] = 2e5, [e4,e5] = -e3
    CHECK(c.at(0, 2, 0) == Rational(1));
    CHECK(c.at(0, 4, 1) == Rational(1));
    CHECK(c.at(1, 2, 1) == Rational(-1));
    CHECK(c.at(1, 3, 0) == Rational(1));
    CHECK(c.at(2, 3, 3) == Rational(-2));
    CHECK(c.at(2, 4, 4) == Rational(2));
    CHECK(c.at(3, 4, 2) == Rational(-1));
    CHECK(c.at(0, 1, 0) == Rational(0));
    CHECK(c.at(0, 3, 0) == Rational(0));
}

TEST_CASE("derived constants: I16 r=1 matches the printed table") {
    StructureConstants c = catalog("h2_semi_Rr(1)").sc;
    // [e1,e3] = e1, [e1,e4] = e2, [e2,e3] = -e2, [e3,e4] = 2e4
    CHECK(c.at(0, 2, 0) == Rational(1));
    CHECK(c.at(0, 3, 1) == Rational(1));
    CHECK(c.at(1, 2, 1) == Rational(-1));
    CHECK(c.at(2, 3, 3) == Rational(2));
    CHECK(c.at(1, 3, 0) == Rational(0));
}

TEST_CASE("derived constants: I16 r=2 ladder relations") {
    StructureConstants c = catalog("h2_semi_Rr(2)").sc;
    // [e1,e5] = 2 e4 and [e3,e4] = 2e4, [e3,e5] = 3e5 (the (1+i) ladder)
    CHECK(c.at(0, 4, 3) == Rational(2));
    CHECK(c.at(2, 3, 3) == Rational(2));
    CHECK(c.at(2, 4, 4) == Rational(3));
}

TEST_CASE("derived constants: I14 exponent ladders") {
    StructureConstants a = catalog("R_semi_Rr(2,1,2)").sc;
    CHECK(a.at(0, 1, 1) == Rational(1));  // [e1,e2] = e2
    CHECK(a.at(0, 2, 2) == Rational(2));  // [e1,e3] = 2e3
    CHECK(a.at(1, 2, 0) == Rational(0));

    StructureConstants b = catalog("R_semi_Rr(2,0,1)").sc;
    CHECK(b.at(0, 1, 1) == Rational(0));  // eta_1 = 1 is central against e1
    CHECK(b.at(0, 2, 2) == Rational(1));
}

TEST_CASE("planar-class closure: I5 and P3 rescaled tables (derived)") {
    ClosureReport i5 = vg_closure_report(planar_class_row(make_label(ClassKind::I5)).basis);
    REQUIRE(i5.closed);
    CHECK(i5.table.at(0, 1, 0) == Rational(2));  // [e1,e2] = 2e1
    CHECK(i5.table.at(0, 2, 1) == Rational(1));  // [e1,e3] = e2
    CHECK(i5.table.at(1, 2, 2) == Rational(2));  // [e2,e3] = 2e3

    ClosureReport p3 = vg_closure_report(planar_class_row(make_label(ClassKind::P3)).basis);
    REQUIRE(p3.closed);
    CHECK(p3.table.at(0, 1, 2) == Rational(1));   // [e1,e2] = e3
    CHECK(p3.table.at(0, 2, 1) == Rational(-1));  // [e1,e3] = -e2
    CHECK(p3.table.at(1, 2, 0) == Rational(4));   // [e2,e3] = 4e1
}

TEST_CASE("vg_closure_report failure certificate") {
    Space sp = Space::coords({"x"});
    VecField dx(sp), x2dx(sp);
    dx.comp[0] = sp.one();
    x2dx.comp[0] = sp.sym(0, 2);
    ClosureReport rep = vg_closure_report({dx, x2dx});
    CHECK_FALSE(rep.closed);
    CHECK(rep.fail_a == 0);
    CHECK(rep.fail_b == 1);

    ClosureReport solo = vg_closure_report({dx});
    CHECK(solo.closed);
    CHECK(solo.table.dim == 1);
}
