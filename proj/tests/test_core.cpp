#include <doctest.h>

#include "surfdraw/geom.hpp"
#include "surfdraw/rational.hpp"
#include "surfdraw/surface.hpp"

#include "helpers.hpp"

using namespace surfdraw;

TEST_CASE("rational parsing and lowest-terms formatting") {
    CHECK(rat_to_string(*parse_rat("2/4")) == "1/2");
    CHECK(rat_to_string(*parse_rat("100")) == "100");
    CHECK(rat_to_string(*parse_rat("100/1")) == "100");
    CHECK(!parse_rat("1/0").has_value());
    CHECK(!parse_rat("a").has_value());
    CHECK(!parse_rat("1.5").has_value());
    CHECK(*parse_rat("-3/6") == make_rat(-1, 2));
}

TEST_CASE("orient sign convention") {
    Pt o{Rat(0), Rat(0)}, e1{Rat(1), Rat(0)}, e2{Rat(0), Rat(1)};
    CHECK(orient(o, e1, e2) == 1);
    CHECK(orient(o, e1, Pt{Rat(2), Rat(0)}) == 0);
    CHECK(orient(o, e2, e1) == -1);
}

TEST_CASE("orient antisymmetry under swapping the last two arguments") {
    testutil::Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        Pt p = rng.point(8, 8, 5), q = rng.point(8, 8, 5), r = rng.point(8, 8, 5);
        CHECK(orient(p, q, r) == -orient(p, r, q));
    }
}

TEST_CASE("segment intersection cases") {
    Segment s1{{Rat(0), Rat(0)}, {Rat(2), Rat(2)}};
    Segment s2{{Rat(0), Rat(2)}, {Rat(2), Rat(0)}};
    SegHit h = seg_intersect(s1, s2);
    REQUIRE(h.kind == SegHit::Kind::point);
    CHECK(h.point == (Pt{Rat(1), Rat(1)}));

    Segment s3{{Rat(0), Rat(0)}, {Rat(1), Rat(0)}};
    Segment s4{{Rat(0), Rat(1)}, {Rat(1), Rat(1)}};
    CHECK(seg_intersect(s3, s4).kind == SegHit::Kind::none);

    Segment s5{{Rat(0), Rat(0)}, {Rat(2), Rat(0)}};
    Segment s6{{Rat(1), Rat(0)}, {Rat(3), Rat(0)}};
    CHECK(seg_intersect(s5, s6).kind == SegHit::Kind::degenerate);

    // collinear, touching in exactly one point
    Segment s7{{Rat(2), Rat(0)}, {Rat(3), Rat(0)}};
    SegHit h2 = seg_intersect(s5, s7);
    REQUIRE(h2.kind == SegHit::Kind::point);
    CHECK(h2.point == (Pt{Rat(2), Rat(0)}));
}

TEST_CASE("segment intersection symmetry and similarity invariance") {
    testutil::Rng rng(12);
    for (int i = 0; i < 120; ++i) {
        Pt a = rng.point(6, 6, 3), b = rng.point(6, 6, 3);
        Pt c = rng.point(6, 6, 3), d = rng.point(6, 6, 3);
        if (a == b || c == d) continue;
        Segment s1{a, b}, s2{c, d};
        SegHit h12 = seg_intersect(s1, s2), h21 = seg_intersect(s2, s1);
        CHECK(h12.kind == h21.kind);
        if (h12.kind == SegHit::Kind::point) CHECK(h12.point == h21.point);
        // translate + scale
        Vec t{rng.rat(-3, 3, 2), rng.rat(-3, 3, 2)};
        Rat k = rng.rat(1, 3, 2);
        if (k == 0) k = 1;
        auto tr = [&](const Pt& p) { return Pt{(p.x + t.x) * k, (p.y + t.y) * k}; };
        SegHit h3 = seg_intersect(Segment{tr(a), tr(b)}, Segment{tr(c), tr(d)});
        CHECK(h3.kind == h12.kind);
        if (h12.kind == SegHit::Kind::point) {
            CHECK(h3.point == tr(h12.point));
            CHECK(point_on_segment(h12.point, s1) != OnSegment::off);
            CHECK(point_on_segment(h12.point, s2) != OnSegment::off);
        }
    }
}

TEST_CASE("point on segment classification") {
    Segment s{{Rat(0), Rat(0)}, {Rat(2), Rat(2)}};
    CHECK(point_on_segment(Pt{Rat(1), Rat(1)}, s) == OnSegment::interior);
    CHECK(point_on_segment(Pt{Rat(0), Rat(0)}, s) == OnSegment::endpoint);
    CHECK(point_on_segment(Pt{Rat(2), Rat(1)}, s) == OnSegment::off);
}

static SurfaceSpec torus42() { return SurfaceSpec{SurfaceKind::torus, Rat(4), Rat(2)}; }
static SurfaceSpec klein42() { return SurfaceSpec{SurfaceKind::klein, Rat(4), Rat(2)}; }

TEST_CASE("identify canonicalizes boundary points") {
    CHECK(identify(Pt{Rat(4), make_rat(3, 2)}, torus42()) == (Pt{Rat(0), make_rat(3, 2)}));
    CHECK(identify(Pt{Rat(4), make_rat(3, 2)}, klein42()) == (Pt{Rat(0), make_rat(1, 2)}));
    CHECK(identify(Pt{Rat(1), Rat(1)}, klein42()) == (Pt{Rat(1), Rat(1)}));
    for (auto s : {torus42(), klein42()}) {
        for (auto corner : {Pt{Rat(0), Rat(0)}, Pt{Rat(4), Rat(0)}, Pt{Rat(0), Rat(2)},
                            Pt{Rat(4), Rat(2)}})
            CHECK(identify(corner, s) == (Pt{Rat(0), Rat(0)}));
    }
    CHECK_THROWS(identify(Pt{Rat(5), Rat(0)}, torus42()));
}

TEST_CASE("identify is idempotent") {
    testutil::Rng rng(13);
    for (auto s : {torus42(), klein42()}) {
        for (int i = 0; i < 100; ++i) {
            Pt p{rng.rat(0, 4, 4), rng.rat(0, 2, 4)};
            Pt q = identify(p, s);
            CHECK(identify(q, s) == q);
        }
    }
}

TEST_CASE("transit examples and involution") {
    CHECK(transit(Pt{Rat(4), Rat(1)}, Side::right, torus42()) == (Pt{Rat(0), Rat(1)}));
    CHECK(transit(Pt{Rat(4), make_rat(1, 2)}, Side::right, klein42()) ==
          (Pt{Rat(0), make_rat(3, 2)}));
    CHECK(transit(Pt{Rat(1), Rat(0)}, Side::bottom, klein42()) == (Pt{Rat(1), Rat(2)}));
    CHECK_THROWS(transit(Pt{Rat(1), Rat(1)}, Side::left, torus42()));

    testutil::Rng rng(14);
    for (auto s : {torus42(), klein42()}) {
        for (int i = 0; i < 50; ++i) {
            Rat y = rng.rat(0, 2, 4);
            Pt p{Rat(0), y};
            Pt q = transit(p, Side::left, s);
            CHECK(identify(transit(q, Side::right, s), s) == identify(p, s));
        }
    }
}

TEST_CASE("transport_direction and gluing determinants") {
    Vec d{Rat(1), Rat(1)};
    Vec r = transport_direction(d, Side::left, klein42());
    CHECK(r.x == 1);
    CHECK(r.y == -1);
    Vec rt = transport_direction(d, Side::left, torus42());
    CHECK((rt.x == 1 && rt.y == 1));
    Vec rh = transport_direction(Vec{Rat(-2), Rat(3)}, Side::top, klein42());
    CHECK((rh.x == -2 && rh.y == 3));
    CHECK_THROWS(transport_direction(Vec{Rat(0), Rat(0)}, Side::left, torus42()));

    // double transport across the same gluing is the identity
    for (auto s : {torus42(), klein42()}) {
        for (auto side : {Side::left, Side::right, Side::top, Side::bottom}) {
            Vec v{Rat(2), Rat(-3)};
            Vec w = transport_direction(transport_direction(v, side, s), side, s);
            CHECK((w.x == v.x && w.y == v.y));
        }
    }
    // determinant of the gluing derivative on basis vectors matches the
    // stored per-side constant
    for (auto s : {torus42(), klein42()}) {
        Vec e1{Rat(1), Rat(0)}, e2{Rat(0), Rat(1)};
        Vec f1 = transport_direction(e1, Side::left, s);
        Vec f2 = transport_direction(e2, Side::left, s);
        CHECK(cross(f1, f2) == s.vertical_gluing_det());
        Vec g1 = transport_direction(e1, Side::top, s);
        Vec g2 = transport_direction(e2, Side::top, s);
        CHECK(cross(g1, g2) == s.horizontal_gluing_det());
    }
}

TEST_CASE("deck transforms compose and invert") {
    testutil::Rng rng(15);
    for (auto s : {torus42(), klein42()}) {
        for (int i = 0; i < 60; ++i) {
            DeckStep a{rng.uniform(-2, 2), rng.uniform(-2, 2)};
            DeckStep b{rng.uniform(-2, 2), rng.uniform(-2, 2)};
            Pt p{rng.rat(0, 4, 3), rng.rat(0, 2, 3)};
            Pt lhs = deck_apply(deck_compose(a, b, s), p, s);
            Pt rhs = deck_apply(a, deck_apply(b, p, s), s);
            CHECK(lhs == rhs);
            DeckStep inv = deck_inverse(a, s);
            CHECK(deck_apply(inv, deck_apply(a, p, s), s) == p);
        }
    }
}
