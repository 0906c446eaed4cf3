#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "langfib/basechange.hpp"

using namespace langfib;

namespace {
ComponentModel torus_model(const std::string& map) {
    return {ComponentModel::Shape::torus_coordinate, parse_laurent(map)};
}
ComponentModel quot_model(const std::string& map) {
    return {ComponentModel::Shape::quotient_coordinate, parse_laurent(map)};
}
}  // namespace

TEST_CASE("laurent parsing and evaluation") {
    auto f = parse_laurent("z+1/z");
    CHECK(f.terms.size() == 2);
    CHECK(f.eval(CycNumber(Rational(2))) == CycNumber(Rational(5, 2)));
    CHECK_FALSE(f.is_constant());

    auto g = parse_laurent("3*z^3 - 1/2 z^-1");
    CHECK(g.terms.at(3) == Rational(3));
    CHECK(g.terms.at(-1) == Rational(-1, 2));

    CHECK(parse_laurent("w^2-2").eval(CycNumber(Rational(3))) == CycNumber(Rational(7)));
    CHECK(parse_laurent("7").is_constant());
    CHECK(parse_laurent("z^2 - z^2").is_constant());

    CHECK_THROWS_AS(parse_laurent(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_laurent("z + y"), std::invalid_argument);  // two variables
    CHECK_THROWS_AS(parse_laurent("z^"), std::invalid_argument);
}

TEST_CASE("point parsing") {
    CHECK(parse_point("1") == CycNumber(Rational(1)));
    CHECK(parse_point("-2/3") == CycNumber(Rational(-2, 3)));
    CHECK(parse_point("i") == CycNumber::root_of_unity(4, 1));
    CHECK(parse_point("-i") == -CycNumber::root_of_unity(4, 1));
    CHECK(parse_point("zeta8^3") == CycNumber::root_of_unity(8, 3));
    CHECK(parse_point("2*zeta3") == CycNumber(Rational(2)) * CycNumber::root_of_unity(3, 1));

    // zeta8^2 = i, exactly
    auto z = parse_point("zeta8");
    CHECK(z * z == parse_point("i"));
    CHECK_THROWS_AS(parse_point("zeta0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_point("banana"), std::invalid_argument);
}

TEST_CASE("local degrees of parameter maps") {
    // z + 1/z ramifies exactly at z = +-1
    CHECK(local_degree(torus_model("z+1/z"), parse_point("-1")) == 2);
    CHECK(local_degree(torus_model("z+1/z"), parse_point("1")) == 2);
    CHECK(local_degree(torus_model("z+1/z"), parse_point("i")) == 1);
    CHECK(local_degree(torus_model("z+1/z"), parse_point("zeta8")) == 1);

    // z^2 is everywhere unramified away from 0
    CHECK(local_degree(torus_model("z^2"), parse_point("1")) == 1);
    CHECK(local_degree(torus_model("z^2"), parse_point("-1")) == 1);
    CHECK(local_degree(torus_model("z^2"), parse_point("zeta3")) == 1);

    // quotient-coordinate model: w^2 - 2 away from the branch point
    CHECK(local_degree(quot_model("w^2-2"), parse_point("2")) == 1);
    CHECK(local_degree(quot_model("w^2 - 2*w"), parse_point("1")) == 2);

    // higher ramification
    CHECK(local_degree(torus_model("z^3 - 3*z"), parse_point("1")) == 2);
    CHECK(local_degree(torus_model("z^3"), parse_point("1")) == 1);

    CHECK_THROWS_AS(local_degree(torus_model("5"), parse_point("1")), std::invalid_argument);
    CHECK_THROWS_AS(local_degree(torus_model("z"), parse_point("0")), std::domain_error);
}

TEST_CASE("unramified base change degrees") {
    // quasi-split forms of the flipped simply connected and adjoint types
    auto a2sc = standard_semisimple('A', 2, false);
    auto a2ad = standard_semisimple('A', 2, true);
    CHECK(unramified_bc_degree({a2sc, simple_perm_action(a2sc, {1, 0}), "3A2sc"}) == 1);
    CHECK(unramified_bc_degree({a2ad, simple_perm_action(a2ad, {1, 0}), "3A2ad"}) == 1);

    auto d4sc = standard_semisimple('D', 4, false);
    auto d4ad = standard_semisimple('D', 4, true);
    CHECK(unramified_bc_degree({d4sc, simple_perm_action(d4sc, {0, 1, 3, 2}), "2D4sc"}) == 1);
    CHECK(unramified_bc_degree({d4ad, simple_perm_action(d4ad, {0, 1, 3, 2}), "2D4ad"}) == 1);

    // rank-2 special orthogonal type with coordinate-sign galois: degree 2
    BasedRootDatum so4like;
    so4like.rank = 2;
    so4like.roots = {{1, 1}, {1, -1}, {-1, -1}, {-1, 1}};
    so4like.coroots = {{1, 1}, {1, -1}, {-1, -1}, {-1, 1}};
    so4like.simple = {0, 1};
    validate(so4like);
    OuterAction sign{IntMat::diag({1, -1}), 2};
    validate_action(so4like, sign);
    CHECK(unramified_bc_degree({so4like, sign, "so4"}) == 2);

    // odd unitary keeps a central order-2 direction; even unitary does not
    CHECK(unramified_bc_degree(build_standard("U_2")) == 1);
    CHECK(unramified_bc_degree(build_standard("U_3")) == 2);
    CHECK(unramified_bc_degree(build_standard("U_4")) == 1);
    CHECK(unramified_bc_degree(build_standard("U_5")) == 2);

    // split forms are rejected unless forced
    CHECK_THROWS_AS(unramified_bc_degree(build_standard("GL_2")), std::invalid_argument);
    CHECK(unramified_bc_degree(build_standard("GL_2"), true) == 1);

    // cubic actions are out of scope for the quadratic formula
    auto d4t = standard_semisimple('D', 4, false);
    auto triality = simple_perm_action(d4t, {2, 1, 3, 0});
    CHECK(triality.order == 3);
    CHECK_THROWS_AS(unramified_bc_degree({d4t, triality, "triality"}), std::invalid_argument);
}
