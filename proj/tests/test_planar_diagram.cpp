#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cuknot/goeritz.hpp"
#include "cuknot/planar_diagram.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "tangle.hpp"

using namespace cuknot;
namespace ts = cuknot::testsupport;

namespace {
const char* kTrefoil = "X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)";
const char* kFig8 = "PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]";
}  // namespace

TEST_CASE("parse_pd accepts both syntaxes and round-trips") {
    PlanarDiagram trefoil = parse_pd(kTrefoil);
    CHECK(trefoil.crossing_count() == 3);
    CHECK(trefoil.edge_count() == 6);
    CHECK(serialize_pd(trefoil) == kTrefoil);

    PlanarDiagram fig8 = parse_pd(kFig8);
    CHECK(fig8.crossing_count() == 4);
    CHECK(parse_pd(serialize_pd(fig8)) == fig8);

    // whitespace-separated terms are fine too
    CHECK(parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)") == trefoil);

    for (const auto& rec : ts::bundled_knots())
        CHECK(parse_pd(serialize_pd(rec.parsed)) == rec.parsed);
}

TEST_CASE("parse_pd rejects malformed text") {
    CHECK_THROWS_AS(parse_pd(""), parse_error);
    CHECK_THROWS_AS(parse_pd("X(1,4,2"), parse_error);
    CHECK_THROWS_AS(parse_pd("Y(1,2,3,4)"), parse_error);
    CHECK_THROWS_AS(parse_pd("X(1,2,3,4,5)"), parse_error);
    CHECK_THROWS_AS(parse_pd("PD[X[1,4,2,5]"), parse_error);
    CHECK_THROWS_AS(parse_pd("X(1,4,2,5) trailing"), parse_error);
}

TEST_CASE("parse_pd rejects structurally invalid diagrams") {
    // single crossing of the trefoil: edges 3,6 missing
    CHECK_THROWS_AS(parse_pd("X(1,4,2,5)"), validation_error);
    // edge id out of range
    CHECK_THROWS_AS(parse_pd("X(1,2,3,9)"), validation_error);
    // two disjoint trefoils: every edge twice, but never one strand
    CHECK_THROWS_AS(
        parse_pd("X(1,4,2,5),X(3,6,4,1),X(5,2,6,3),X(7,10,8,11),X(9,12,10,7),X(11,8,12,9)"),
        validation_error);
    // a quadruple rotated out of convention: strand enters at slot 2
    CHECK_THROWS_AS(parse_pd("X(2,5,1,4),X(3,6,4,1),X(5,2,6,3)"), validation_error);
}

TEST_CASE("face extraction satisfies the Euler formula") {
    CHECK(parse_pd(kTrefoil).faces().size() == 5);
    CHECK(parse_pd(kFig8).faces().size() == 6);
    CHECK(torus_knot(7, Handedness::Left).faces().size() == 9);

    for (const auto& rec : ts::bundled_knots()) {
        const auto& d = rec.parsed;
        CHECK(d.crossing_count() - d.edge_count() + static_cast<int>(d.faces().size()) == 2);
        // every (edge, side) pair lies on exactly one face: the 4n darts
        // partition into the face boundaries
        std::size_t total = 0;
        for (const auto& f : d.faces()) total += f.corners.size();
        CHECK(total == 4u * d.crossing_count());
    }
}

TEST_CASE("over-arcs partition the edges, one per crossing") {
    PlanarDiagram trefoil = parse_pd(kTrefoil);
    CHECK(trefoil.over_arcs().size() == 3);
    for (const auto& a : trefoil.over_arcs()) CHECK(a.edges.size() == 2);

    CHECK(parse_pd(kFig8).over_arcs().size() == 4);

    PlanarDiagram kink = parse_pd("X(1,2,2,1)");
    CHECK(kink.over_arcs().size() == 1);
    CHECK(kink.over_arcs()[0].edges == std::vector<int>{1, 2});

    for (const auto& rec : ts::bundled_knots()) {
        const auto& d = rec.parsed;
        CHECK(d.over_arcs().size() == static_cast<std::size_t>(d.crossing_count()));
        std::vector<int> seen(d.edge_count() + 1, 0);
        for (const auto& a : d.over_arcs())
            for (int e : a.edges) ++seen[e];
        for (int e = 1; e <= d.edge_count(); ++e) CHECK(seen[e] == 1);
        // both over edges of each crossing share an arc
        for (const auto& c : d.crossings())
            CHECK(d.arc_of_edge(c.quad[1]) == d.arc_of_edge(c.quad[3]));
    }
}

TEST_CASE("mirror is an involution preserving faces and determinant") {
    for (const auto& rec : ts::bundled_knots()) {
        const PlanarDiagram& d = rec.parsed;
        PlanarDiagram m = mirror(d);
        CHECK(mirror(m) == d);
        CHECK(m.faces().size() == d.faces().size());
        CHECK(m.writhe() == -d.writhe());
    }
    CHECK(knot_determinant(mirror(ts::bundled("5_2"))) == 7);
}

TEST_CASE("connected sum bookkeeping") {
    PlanarDiagram trefoil = parse_pd(kTrefoil);
    PlanarDiagram fig8 = parse_pd(kFig8);

    PlanarDiagram tt = connected_sum(trefoil, 0, trefoil, 0);
    CHECK(tt.crossing_count() == 6);

    PlanarDiagram tf = connected_sum(trefoil, 1, fig8, 2);
    CHECK(knot_determinant(tf) == 15);
    CHECK(tf.faces().size() == trefoil.faces().size() + fig8.faces().size() - 2);

    // count arithmetic for every ordered bundled pair, random splice arcs
    const auto& knots = ts::bundled_knots();
    for (const auto& ra : knots)
        for (const auto& rb : knots) {
            const auto& a = ra.parsed;
            const auto& b = rb.parsed;
            std::size_t arc_a = ts::rand_int(0, static_cast<int>(a.over_arcs().size()) - 1);
            std::size_t arc_b = ts::rand_int(0, static_cast<int>(b.over_arcs().size()) - 1);
            PlanarDiagram sum = connected_sum(a, arc_a, b, arc_b);
            CHECK(sum.crossing_count() == a.crossing_count() + b.crossing_count());
            CHECK(sum.faces().size() == a.faces().size() + b.faces().size() - 2);
            CHECK(knot_determinant(sum) == knot_determinant(a) * knot_determinant(b));
        }
    CHECK_THROWS_AS(connected_sum(trefoil, 5, fig8, 0), std::invalid_argument);
}

TEST_CASE("torus knot generator") {
    CHECK_THROWS_AS(torus_knot(4, Handedness::Left), std::invalid_argument);
    CHECK_THROWS_AS(torus_knot(1, Handedness::Left), std::invalid_argument);

    PlanarDiagram t3 = torus_knot(3, Handedness::Left);
    CHECK(t3.crossing_count() == 3);
    CHECK(knot_determinant(t3) == 3);
    CHECK(t3.writhe() == -3);

    CHECK(knot_determinant(torus_knot(5, Handedness::Left)) == 5);
    CHECK(torus_knot(5, Handedness::Right).writhe() == 5);
    CHECK(torus_knot(7, Handedness::Right) == mirror(torus_knot(7, Handedness::Left)));

    // same knot as the table trefoil: equal determinant and face count
    CHECK(knot_determinant(t3) == knot_determinant(parse_pd(kTrefoil)));
}

TEST_CASE("r1 twist adds one kink of the requested sign") {
    PlanarDiagram trefoil = parse_pd(kTrefoil);
    for (int sign : {1, -1}) {
        for (int edge = 1; edge <= trefoil.edge_count(); ++edge) {
            PlanarDiagram k = r1_twist(trefoil, edge, sign);
            CHECK(k.crossing_count() == 4);
            CHECK(k.faces().size() == 6);
            CHECK(k.crossings().back().sign == sign);
            CHECK(knot_determinant(k) == 3);
        }
    }
    CHECK_THROWS_AS(r1_twist(trefoil, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(r1_twist(trefoil, 7, 1), std::invalid_argument);
    CHECK_THROWS_AS(r1_twist(trefoil, 1, 2), std::invalid_argument);
}

TEST_CASE("bundled diagrams match their generator derivations") {
    CHECK(ts::bundled("3_1") == parse_pd(kTrefoil));
    CHECK(ts::bundled("4_1") == parse_pd(kFig8));
    CHECK(ts::bundled("5_2") == parse_pd(ts::twist_knot_pd(3)));
    CHECK(ts::bundled("7_1") == torus_knot(7, Handedness::Left));
    CHECK(ts::bundled("7_4") == mirror(parse_pd(ts::pretzel_pd(3, 1, 3))));
    CHECK(ts::bundled("11n141") == parse_pd(ts::pretzel_pd(-3, -3, 5)));
    CHECK(ts::bundled("12a0803") == parse_pd(ts::twist_knot_pd(10)));

    // generator sanity: one-crossing twist closure is a trefoil, the
    // two-crossing one is a figure-eight
    CHECK(knot_determinant(parse_pd(ts::twist_knot_pd(1))) == 3);
    CHECK(knot_determinant(parse_pd(ts::twist_knot_pd(2))) == 5);
    CHECK(knot_determinant(parse_pd(ts::pretzel_pd(3, 3, -5))) == 21);
}

TEST_CASE("bundled diagrams have the expected shapes") {
    CHECK(ts::bundled("3_1").crossing_count() == 3);
    CHECK(ts::bundled("4_1").crossing_count() == 4);
    CHECK(ts::bundled("5_2").crossing_count() == 5);
    CHECK(ts::bundled("7_1").crossing_count() == 7);
    CHECK(ts::bundled("7_4").crossing_count() == 7);
    CHECK(ts::bundled("11n141").crossing_count() == 11);
    CHECK(ts::bundled("12a0803").crossing_count() == 12);

    // the alternating ones really are alternating and reduced
    for (const char* name : {"3_1", "4_1", "5_2", "7_1", "7_4", "12a0803"}) {
        CHECK(ts::is_alternating(ts::bundled(name)));
        CHECK(ts::is_reduced(ts::bundled(name)));
    }
    CHECK(!ts::is_alternating(ts::bundled("11n141")));
    CHECK(ts::is_reduced(ts::bundled("11n141")));
}
