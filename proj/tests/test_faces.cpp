#include <doctest.h>

#include "surfdraw/arrangement.hpp"

#include "helpers.hpp"

using namespace surfdraw;
using testutil::load_fixture;
using testutil::load_testdata;

namespace {

void check_walk_lengths(const Drawing& d) {
    ValidationReport rep = validate(d);
    REQUIRE(rep.ok());
    Arrangement arr = planarize(d, rep);
    FaceSet fs = face_set(d, arr);
    CHECK(fs.total_walk_length == 2 * static_cast<int>(arr.segments.size()));
}

}  // namespace

TEST_CASE("essential K_{2,2} cycle on the torus bounds a single annulus") {
    Drawing d = load_fixture("k22_torus_annulus.tgd");
    EulerReport er = euler_report(d);
    CHECK(er.V == 4);
    CHECK(er.E == 4);
    CHECK(er.F == 1);
    CHECK(er.chi == 1);
    CHECK(!er.cellular);

    FaceSet fs = face_set(d);
    REQUIRE(fs.faces.size() == 1);
    CHECK(!fs.faces[0].disk);
    CHECK(fs.faces[0].walks.size() == 2);  // the annulus's two boundary circles
    CHECK(fs.total_walk_length == 8);
}

TEST_CASE("cellular K_{2,4} fixture has two disk faces") {
    Drawing d = load_fixture("figure2/fig2_i_i.tgd");
    EulerReport er = euler_report(d);
    CHECK(er.V == 6);
    CHECK(er.E == 8);
    CHECK(er.F == 2);
    CHECK(er.chi == 0);
    CHECK(er.cellular);
    check_walk_lengths(d);
}

TEST_CASE("counterexample arrangement: nodes, segments, faces") {
    Drawing d = load_fixture("fig1_k45_klein.tgd");
    ValidationReport rep = validate(d);
    REQUIRE(rep.ok());
    Arrangement arr = planarize(d, rep);
    CHECK(arr.nodes.size() == 12);     // 9 vertices + 3 crossings
    CHECK(arr.segments.size() == 26);  // 20 edges, 3 crossings split 2 each
    for (auto& n : arr.nodes)
        if (n.is_crossing) {
            int deg = 0;
            for (auto& rot : arr.rotations) (void)rot;
            deg = static_cast<int>(
                arr.rotations[static_cast<std::size_t>(&n - arr.nodes.data())].size());
            CHECK(deg == 4);
        }
    FaceSet fs = face_set(d, arr);
    CHECK(fs.faces.size() == 14);  // V - E + F = 0 on the Klein bottle
    CHECK(fs.all_disks());
    EulerReport er = euler_report(d);
    CHECK(er.chi == 0);
    CHECK(er.cellular);
    check_walk_lengths(d);
}

TEST_CASE("all-b faces across the corpus") {
    CHECK(all_b_faces(load_fixture("figure2/fig2_i_i.tgd")).size() > 0);
    CHECK(all_b_faces(load_fixture("figure2/fig2_iv_iv.tgd")).empty());
    CHECK(all_b_faces(load_testdata("k24_disk_planar.tgd")).empty());
}

TEST_CASE("planar-patch K_{2,4} on the torus: the iff-counterexample facts") {
    // Its rotation system is planar (4 combinatorial faces) and the geometric
    // face count is also 4, although the drawing is non-cellular: the
    // only-when direction of the cellularity/face-count equivalence fails on
    // drawings contained in a disk, which is why this one lives in test data
    // rather than in the acceptance fixture corpus.
    Drawing d = load_testdata("k24_disk_planar.tgd");
    EulerReport er = euler_report(d);
    CHECK(er.V == 6);
    CHECK(er.E == 8);
    CHECK(er.F == 4);
    CHECK(er.chi == 2);
    CHECK(!er.cellular);
    FaceSet fs = face_set(d);
    int disks = 0;
    for (auto& f : fs.faces) disks += f.disk ? 1 : 0;
    CHECK(disks == 3);  // the big face is a torus with one hole
    check_walk_lengths(d);
}

TEST_CASE("single vertex, no edges") {
    Drawing d = parse_drawing("surface torus\nrect 4 2\nvertex a1 A 1 1\n");
    ValidationReport rep = validate(d);
    REQUIRE(rep.ok());
    Arrangement arr = planarize(d, rep);
    CHECK(arr.nodes.size() == 1);
    CHECK(arr.segments.empty());
    FaceSet fs = face_set(d, arr);
    REQUIRE(fs.faces.size() == 1);
    CHECK(!fs.faces[0].disk);  // torus minus a point
    CHECK(fs.faces[0].vertices.count(0) == 1);
}

TEST_CASE("empty drawing face is the whole torus") {
    Drawing d = parse_drawing("surface torus\nrect 4 2\n");
    FaceSet fs = face_set(d);
    REQUIRE(fs.faces.size() == 1);
    CHECK(!fs.faces[0].disk);
    CHECK(fs.faces[0].chi == 0);
}

TEST_CASE("walk length sum is twice the segment count on mixed fixtures") {
    for (const char* name :
         {"fig1_k45_klein.tgd", "fig1_rerouted.tgd", "k22_disk_cross.tgd",
          "k14_klein_star.tgd", "figure2/fig2_iv_v.tgd", "figure2/fig2_vii_vii.tgd"})
        check_walk_lengths(load_fixture(name));
}

TEST_CASE("face report is stable text") {
    Drawing d = load_fixture("k22_torus_annulus.tgd");
    FaceSet fs = face_set(d);
    std::string t1 = face_report_text(d, fs);
    std::string t2 = face_report_text(d, face_set(d));
    CHECK(t1 == t2);
    CHECK(t1.find("faces: 1") != std::string::npos);
    CHECK(t1.find("disk=no") != std::string::npos);
}
