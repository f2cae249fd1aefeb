#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "refsev/errors.hpp"
#include "refsev/polygon.hpp"

using namespace refsev;

TEST_CASE("preset row data") {
    const auto p3 = presets::p2(3);
    CHECK(p3.d_top() == 0);
    CHECK(p3.d_bottom() == 3);
    CHECK(p3.height() == 3);
    CHECK(p3.row_widths() == std::vector<long>{0, 1, 2, 3});
    CHECK(p3.lattice_point_count() == 10);
    CHECK(p3.dim_linear_system() == 9);
    CHECK(p3.interior_point_count() == 1);

    const auto s = presets::sigma(2, 2, 2);
    CHECK(s.d_top() == 2);
    CHECK(s.d_bottom() == 6);
    CHECK(s.row_widths() == std::vector<long>{2, 4, 6});
    CHECK(s.lattice_point_count() == 15);

    const auto w = presets::wps1mm(3, 1);
    CHECK(w.d_top() == 0);
    CHECK(w.d_bottom() == 0);
    CHECK(w.row_widths() == std::vector<long>{0, 2, 1, 0});
    CHECK(w.lattice_point_count() == 7);

    // wps11m(m, d) is sigma(m, 0, d)
    CHECK(presets::wps11m(2, 3).row_widths() ==
          presets::sigma(2, 0, 3).row_widths());

    CHECK(presets::p2(4).interior_point_count() == 3);
    CHECK(presets::p2(1).interior_point_count() == 0);
}

TEST_CASE("preset parameter validation") {
    CHECK_THROWS_AS(presets::p2(-1), DomainError);
    CHECK_THROWS_AS(presets::sigma(0, 1, 1), DomainError);
    CHECK_THROWS_AS(presets::wps1mm(1, 2), DomainError);
    CHECK_THROWS_AS(presets::sigma(1, -1, 1), DomainError);
}

TEST_CASE("construction validation") {
    CHECK_THROWS_WITH_AS(
        HTransversePolygon(-1, 0, IntMultiset(), IntMultiset()),
        doctest::Contains("negative horizontal edge length"), DomainError);
    CHECK_THROWS_WITH_AS(HTransversePolygon(0, 1, IntMultiset::parse("1"),
                                            IntMultiset::parse("0^2")),
                         doctest::Contains("height mismatch"), DomainError);
    CHECK_THROWS_WITH_AS(HTransversePolygon(0, 2, IntMultiset::parse("1"),
                                            IntMultiset::parse("0")),
                         doctest::Contains("balance violated"), DomainError);
}

TEST_CASE("right slopes sort descending, left ascending") {
    const HTransversePolygon p(1, 0, IntMultiset::parse("-1,2"),
                               IntMultiset::parse("0,2"));
    // right sorted 2,-1; left sorted 0,2; widths 1, 1+2-0=3, 3-1-2=0
    CHECK(p.row_widths() == std::vector<long>{1, 3, 0});
    CHECK(p.lattice_point_count() == 7);

    // the sorted (convex) arrangement makes the width sequence concave, so
    // balanced data with nonnegative ends always yields nonnegative widths
    const HTransversePolygon q(0, 0, IntMultiset::parse("-2^2,1,3"),
                               IntMultiset::parse("-1,0^2,1"));
    for (long w : q.row_widths()) CHECK(w >= 0);
}

TEST_CASE("polygon grammar") {
    const auto raw = parse_polygon("dt=0;db=3;r=1^3;l=0^3");
    CHECK(raw.row_widths() == presets::p2(3).row_widths());
    CHECK(raw.str() == "dt=0;db=3;r=1^3;l=0^3");

    CHECK(parse_polygon("p2:d=2").lattice_point_count() == 6);
    CHECK(parse_polygon("sigma:m=2,c=1,d=2").d_bottom() == 5);
    CHECK(parse_polygon("wps11m:m=2,d=2").row_widths() ==
          std::vector<long>{0, 2, 4});
    // widths 0,1,2,1,0 top to bottom
    CHECK(parse_polygon("wps1mm:m=2,d=2").lattice_point_count() == 9);

    // round trip through str()
    for (const auto& text :
         {"p2:d=3", "sigma:m=2,c=1,d=2", "wps1mm:m=3,d=2"}) {
        const auto p = parse_polygon(text);
        const auto q = parse_polygon(p.str());
        CHECK(q.row_widths() == p.row_widths());
        CHECK(q.d_top() == p.d_top());
        CHECK(q.d_bottom() == p.d_bottom());
    }

    CHECK_THROWS_AS(parse_polygon("p2:k=3"), DomainError);
    CHECK_THROWS_AS(parse_polygon("hexagon:d=1"), DomainError);
    CHECK_THROWS_AS(parse_polygon("p2"), DomainError);
    CHECK_THROWS_AS(parse_polygon("dt=0;db=0"), DomainError);
}

TEST_CASE("family specs") {
    const auto fam = parse_family("sigma:m=2");
    CHECK(fam.two_parameter());
    CHECK(fam.str() == "sigma:m=2");
    CHECK(fam.polygon(1, 2).d_bottom() == 5);

    const auto p2fam = parse_family("p2");
    CHECK_FALSE(p2fam.two_parameter());
    CHECK(p2fam.polygon(0, 3).row_widths() == presets::p2(3).row_widths());

    CHECK_FALSE(parse_family("wps1mm:m=2").two_parameter());
    CHECK_THROWS_AS(parse_family("p2:m=2"), DomainError);
    CHECK_THROWS_AS(parse_family("nope"), DomainError);
}
