#include <doctest.h>

#include "surfdraw/cover.hpp"
#include "surfdraw/crossing.hpp"

#include "helpers.hpp"

#include <functional>

using namespace surfdraw;
using testutil::load_fixture;

namespace {

// Independent oracle: all ordered injections of {1..5} into the index set,
// checked entrywise against the forbidden pattern.
std::vector<PatternMatch> brute_force_pattern(const CrossingMatrix& m) {
    int n = m.size();
    std::set<PatternMatch> found;
    std::vector<int> pick;
    std::vector<char> used(n, 0);
    std::function<void()> rec = [&]() {
        if (pick.size() == 5) {
            static const int target[5][5] = {{0, 0, 0, 0, 0},
                                             {0, 0, 0, 0, 0},
                                             {0, 0, 0, 1, 1},
                                             {0, 0, 1, 0, 1},
                                             {0, 0, 1, 1, 0}};
            for (int i = 0; i < 5; ++i)
                for (int j = 0; j < 5; ++j)
                    if (m.a[pick[i]][pick[j]] != target[i][j]) return;
            PatternMatch pm;
            pm.pair = {pick[0], pick[1]};
            pm.triple = {pick[2], pick[3], pick[4]};
            std::sort(pm.pair.begin(), pm.pair.end());
            std::sort(pm.triple.begin(), pm.triple.end());
            found.insert(pm);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            used[v] = 1;
            pick.push_back(v);
            rec();
            pick.pop_back();
            used[v] = 0;
        }
    };
    if (n >= 5) rec();
    return std::vector<PatternMatch>(found.begin(), found.end());
}

CrossingMatrix random_matrix(testutil::Rng& rng, int n, bool plant) {
    CrossingMatrix m;
    for (int i = 0; i < n; ++i) m.labels.push_back(VertexId{Part::A, i + 1});
    m.a.assign(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m.a[i][j] = m.a[j][i] = rng.uniform(0, 2);
    if (plant && n >= 5) {
        std::vector<int> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        for (int i = n - 1; i > 0; --i) std::swap(idx[i], idx[rng.uniform(0, i)]);
        std::vector<int> s(idx.begin(), idx.begin() + 5);
        for (int p = 0; p < 2; ++p)
            for (int q = 0; q < n; ++q) m.a[s[p]][q] = m.a[q][s[p]] = 0;
        for (int p = 2; p < 5; ++p)
            for (int q = 2; q < 5; ++q) m.a[s[p]][s[q]] = p == q ? 0 : 1;
        for (int p = 0; p < 5; ++p) m.a[s[p]][s[p]] = 0;
    }
    return m;
}

CrossingMatrix eq1_matrix() {
    CrossingMatrix m;
    for (int i = 0; i < 5; ++i) m.labels.push_back(VertexId{Part::A, i + 1});
    m.a = {{0, 0, 0, 0, 0},
           {0, 0, 0, 0, 0},
           {0, 0, 0, 1, 1},
           {0, 0, 1, 0, 1},
           {0, 0, 1, 1, 0}};
    return m;
}

}  // namespace

TEST_CASE("edge crossing counts and points") {
    Drawing d = load_fixture("k22_disk_cross.tgd");
    ValidationReport rep = validate(d);
    REQUIRE(rep.ok());
    // edges in file order: a1b1, a1b2, a2b1, a2b2
    auto pts = edge_crossings(rep, 1, 2);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0] == (Pt{Rat(20), Rat(15)}));
    CHECK(edge_crossings(rep, 0, 3).empty());
    CHECK(edge_crossings(rep, 2, 1) == pts);  // symmetric in (e, f)
}

TEST_CASE("a wrapped edge crossing matches the unrolled-cover count") {
    // vertical interior edge, plus an edge wrapping the right side once
    Drawing d = parse_drawing(
        "surface torus\nrect 4 2\n"
        "vertex a1 A 3 1\nvertex b1 B 2 1\n"
        "vertex a2 A 7/2 1/2\nvertex b2 B 7/2 3/2\n"
        "edge a1 b1 : 3,1 4,1 | 0,1 2,1\n"
        "edge a2 b2 : 7/2,1/2 7/2,3/2\n"
        "edge a2 b1 : 7/2,1/2 2,1\n"
        "edge a1 b2 : 3,1 7/2,3/2\n");
    ValidationReport rep = validate(d);
    REQUIRE(rep.ok());
    auto pts = edge_crossings(rep, 0, 1);
    CHECK(pts.size() == 1);
    // oracle: full preimage of both lifts over the window, clipped to the
    // half-open fundamental domain
    auto lifted = unroll_to_cover(d, 2);
    int count = 0;
    for (auto& ls1 : lifted) {
        if (ls1.edge != 0) continue;
        for (auto& ls2 : lifted) {
            if (ls2.edge != 1) continue;
            for (int i = -2; i <= 2; ++i)
                for (int j = -2; j <= 2; ++j) {
                    DeckStep g1{i, j};
                    for (int i2 = -2; i2 <= 2; ++i2)
                        for (int j2 = -2; j2 <= 2; ++j2) {
                            DeckStep g2{i2, j2};
                            Segment s1{deck_apply(g1, ls1.seg.p, d.surface),
                                       deck_apply(g1, ls1.seg.q, d.surface)};
                            Segment s2{deck_apply(g2, ls2.seg.p, d.surface),
                                       deck_apply(g2, ls2.seg.q, d.surface)};
                            SegHit h = seg_intersect(s1, s2);
                            if (h.kind != SegHit::Kind::point) continue;
                            if (h.point.x >= 0 && h.point.x < d.surface.W &&
                                h.point.y >= 0 && h.point.y < d.surface.H)
                                ++count;
                        }
                }
        }
    }
    CHECK(count == 1);
}

TEST_CASE("star matrix of the counterexample equals the forbidden pattern") {
    Drawing d = load_fixture("fig1_k45_klein.tgd");
    ValidationReport rep = validate(d);
    REQUIRE(rep.ok());
    CrossingMatrix m = star_crossing_matrix(d, rep);
    REQUIRE(m.size() == 5);
    CrossingMatrix want = eq1_matrix();
    CHECK(m.a == want.a);

    // off-diagonal sum is twice the between-star crossing count
    long long sum = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            if (i != j) sum += m.a[i][j];
    CHECK(sum == 2 * rep.crossing_total());
}

TEST_CASE("star matrix small cases") {
    Drawing k22x = load_fixture("k22_disk_cross.tgd");
    ValidationReport rep = validate(k22x);
    CrossingMatrix m = star_crossing_matrix(k22x, rep);
    REQUIRE(m.size() == 2);
    CHECK(m.a == std::vector<std::vector<long long>>{{0, 1}, {1, 0}});

    Drawing free = load_fixture("figure2/fig2_i_i.tgd");
    ValidationReport rep2 = validate(free);
    CrossingMatrix m2 = star_crossing_matrix(free, rep2);
    REQUIRE(m2.size() == 2);
    CHECK(m2.a == std::vector<std::vector<long long>>{{0, 0}, {0, 0}});
}

TEST_CASE("pattern matcher on the forbidden matrix and variants") {
    PatternResult r = find_forbidden_pattern(eq1_matrix());
    REQUIRE(r.matches.size() == 1);
    CHECK(r.matches[0].pair == std::vector<int>{0, 1});
    CHECK(r.matches[0].triple == std::vector<int>{2, 3, 4});

    CrossingMatrix zero = eq1_matrix();
    for (auto& row : zero.a) std::fill(row.begin(), row.end(), 0);
    CHECK(find_forbidden_pattern(zero).matches.empty());

    // rows/columns simultaneously reversed
    CrossingMatrix rev = eq1_matrix();
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) rev.a[i][j] = eq1_matrix().a[4 - i][4 - j];
    PatternResult rr = find_forbidden_pattern(rev);
    auto brute = brute_force_pattern(rev);
    CHECK(rr.matches == brute);
    REQUIRE(rr.matches.size() == 1);
    CHECK(rr.matches[0].pair == std::vector<int>{3, 4});
    CHECK(rr.matches[0].triple == std::vector<int>{0, 1, 2});

    CrossingMatrix small;
    small.labels = {VertexId{Part::A, 1}};
    small.a = {{0}};
    PatternResult rs = find_forbidden_pattern(small);
    CHECK(rs.too_small);
    CHECK(rs.matches.empty());
}

TEST_CASE("pattern matcher agrees with the ordered-injection oracle") {
    testutil::Rng rng(21);
    for (int t = 0; t < 80; ++t) {
        int n = rng.uniform(3, 8);
        CrossingMatrix m = random_matrix(rng, n, t % 2 == 0);
        auto fast = find_forbidden_pattern(m).matches;
        auto slow = brute_force_pattern(m);
        CHECK(fast == slow);
    }
}

TEST_CASE("pattern matcher commutes with relabeling") {
    testutil::Rng rng(22);
    for (int t = 0; t < 40; ++t) {
        int n = rng.uniform(5, 7);
        CrossingMatrix m = random_matrix(rng, n, true);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.uniform(0, i)]);
        CrossingMatrix pm_in = m;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) pm_in.a[perm[i]][perm[j]] = m.a[i][j];
        auto base = find_forbidden_pattern(m).matches;
        auto permuted = find_forbidden_pattern(pm_in).matches;
        std::set<PatternMatch> expect;
        for (auto pmatch : base) {
            for (auto& v : pmatch.pair) v = perm[v];
            for (auto& v : pmatch.triple) v = perm[v];
            std::sort(pmatch.pair.begin(), pmatch.pair.end());
            std::sort(pmatch.triple.begin(), pmatch.triple.end());
            expect.insert(pmatch);
        }
        CHECK(std::set<PatternMatch>(permuted.begin(), permuted.end()) == expect);
    }
}

TEST_CASE("certificates") {
    CertificateReport good = certify_counterexample(load_fixture("fig1_k45_klein.tgd"));
    CHECK(good.verdict);
    REQUIRE(good.matches.size() == 1);
    CHECK(good.matrix.labels[good.matches[0].pair[0]].name() == "a1");
    CHECK(good.matrix.labels[good.matches[0].pair[1]].name() == "a2");
    CHECK(good.matrix.labels[good.matches[0].triple[0]].name() == "a3");

    CertificateReport rerouted = certify_counterexample(load_fixture("fig1_rerouted.tgd"));
    CHECK(!rerouted.verdict);
    CHECK(std::count(rerouted.reasons.begin(), rerouted.reasons.end(), "pattern-absent") == 1);
    // the reroute trades the a4b4 crossing for a4b2, a5b1, a5b2 crossings
    REQUIRE(rerouted.have_matrix);
    CHECK(rerouted.matrix.a[2][3] == 1);
    CHECK(rerouted.matrix.a[2][4] == 3);
    CHECK(rerouted.matrix.a[3][4] == 1);

    CertificateReport torus = certify_counterexample(load_fixture("k22_disk_cross.tgd"));
    CHECK(!torus.verdict);
    CHECK(std::count(torus.reasons.begin(), torus.reasons.end(), "wrong-surface") == 1);

    CertificateReport star = certify_counterexample(load_fixture("k14_klein_star.tgd"));
    CHECK(!star.verdict);
    CHECK(std::count(star.reasons.begin(), star.reasons.end(), "pattern-absent") == 1);

    Drawing incomplete = load_fixture("fig1_k45_klein.tgd");
    incomplete.edges.pop_back();
    CertificateReport inc = certify_counterexample(incomplete);
    CHECK(!inc.verdict);
    CHECK(std::count(inc.reasons.begin(), inc.reasons.end(), "not-complete-bipartite") == 1);
}
