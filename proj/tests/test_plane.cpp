#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "lrc/plane.hpp"
#include "support.hpp"

using namespace lrc;

namespace {

AffinePoint ap(const FieldPtr& f, uint32_t x, uint32_t y) {
    return {f->element(x), f->element(y)};
}

ProjPoint pp(const FieldPtr& f, uint32_t a, uint32_t b, uint32_t c) {
    return ProjPoint(f->element(a), f->element(b), f->element(c));
}

}  // namespace

TEST_CASE("line point sets") {
    const auto f7 = Field::make(7, 1);
    const auto vertical = line_points(*f7, {kSlopeInf, f7->element(1)});
    REQUIRE(vertical.size() == 7);
    for (const auto& p : vertical) CHECK(p.x.idx == 1);

    const auto diag = line_points(*f7, {1, f7->element(0)});  // i + j = 0
    for (const auto& p : diag) CHECK(f7->add_idx(p.x.idx, p.y.idx) == 0);

    const auto f4 = Field::make(2, 2);
    const auto horiz = line_points(*f4, {0, f4->element(2)});
    REQUIRE(horiz.size() == 4);
    for (const auto& p : horiz) CHECK(p.y.idx == 2);

    CHECK_THROWS_AS(line_points(*f7, {9, f7->element(0)}), std::invalid_argument);
}

TEST_CASE("two distinct points determine exactly one line (q = 7, 8, 9)") {
    for (const auto& f : {Field::make(7, 1), Field::make(2, 3), Field::make(3, 2)}) {
        const uint32_t q = f->q();
        std::vector<AffinePoint> pts;
        for (uint32_t x = 0; x < q; ++x)
            for (uint32_t y = 0; y < q; ++y) pts.push_back(ap(f, x, y));

        // collect every label's point set once
        std::vector<std::pair<AffLine, std::set<std::pair<uint32_t, uint32_t>>>> lines;
        for (int slope = -1; slope < static_cast<int>(q); ++slope)
            for (uint32_t l = 0; l < q; ++l) {
                const AffLine line{slope == -1 ? kSlopeInf : slope, f->element(l)};
                std::set<std::pair<uint32_t, uint32_t>> set;
                for (const auto& p : line_points(*f, line)) set.insert({p.x.idx, p.y.idx});
                CHECK(set.size() == q);
                lines.push_back({line, std::move(set)});
            }

        for (size_t a = 0; a < pts.size(); ++a)
            for (size_t b = a + 1; b < pts.size(); ++b) {
                int containing = 0;
                for (const auto& [line, set] : lines)
                    if (set.count({pts[a].x.idx, pts[a].y.idx}) &&
                        set.count({pts[b].x.idx, pts[b].y.idx}))
                        ++containing;
                CHECK(containing == 1);
                const auto through = line_through(pts[a], pts[b]);
                bool has_a = false, has_b = false;
                for (const auto& p : line_points(*f, through)) {
                    has_a = has_a || p == pts[a];
                    has_b = has_b || p == pts[b];
                }
                CHECK(has_a);
                CHECK(has_b);
            }
    }
}

TEST_CASE("line_through case analysis") {
    const auto f7 = Field::make(7, 1);
    CHECK(line_through(ap(f7, 1, 1), ap(f7, 1, 6)) == AffLine{kSlopeInf, f7->element(1)});
    CHECK(line_through(ap(f7, 3, 2), ap(f7, 4, 2)) == AffLine{0, f7->element(2)});
    // slope (6-1)/(1-6) = -1 = 6 = w^3, so label m = 4 and intercept 6*1+1 = 0
    CHECK(line_through(ap(f7, 1, 1), ap(f7, 6, 6)) == AffLine{4, f7->element(0)});
    CHECK_THROWS_AS(line_through(ap(f7, 1, 1), ap(f7, 1, 1)), std::invalid_argument);
}

TEST_CASE("embedding into the projective plane") {
    const auto f7 = Field::make(7, 1);
    CHECK(embed(ap(f7, 1, 1)) == pp(f7, 1, 1, 1));
    CHECK(embed(ap(f7, 0, 0)) == pp(f7, 1, 0, 0));

    const auto f8 = Field::make(2, 3, {1, 1, 0, 1});
    CHECK(embed(ap(f8, 4, 4)) == pp(f8, 1, 4, 4));

    // injectivity over the whole affine plane
    std::set<std::array<uint32_t, 3>> images;
    for (uint32_t x = 0; x < 7; ++x)
        for (uint32_t y = 0; y < 7; ++y) {
            const auto p = embed(ap(f7, x, y));
            images.insert({p[0].idx, p[1].idx, p[2].idx});
        }
    CHECK(images.size() == 49);
}

TEST_CASE("projective canonical form") {
    const auto f7 = Field::make(7, 1);
    CHECK(pp(f7, 2, 4, 6) == pp(f7, 1, 2, 3));  // scaled by inv(2) = 4
    CHECK(pp(f7, 0, 3, 5) == pp(f7, 0, 1, 4));
    CHECK_THROWS_AS(pp(f7, 0, 0, 0), std::invalid_argument);
    CHECK(pp(f7, 0, 0, 5) == pp(f7, 0, 0, 1));
}

TEST_CASE("collinearity") {
    const auto f7 = Field::make(7, 1);
    CHECK_FALSE(collinear(pp(f7, 1, 0, 0), pp(f7, 0, 1, 0), pp(f7, 0, 0, 1)));
    CHECK(collinear(pp(f7, 1, 0, 0), pp(f7, 0, 1, 0), pp(f7, 1, 1, 0)));
    CHECK_FALSE(collinear(pp(f7, 1, 1, 1), pp(f7, 1, 1, 6), pp(f7, 1, 6, 1)));
    CHECK_THROWS_AS(collinear(pp(f7, 1, 0, 0), pp(f7, 1, 0, 0), pp(f7, 0, 0, 1)),
                    std::invalid_argument);

    // agreement with the oracle determinant over all affine triples of GF(5)
    const auto f5 = Field::make(5, 1);
    const auto o = testsupport::oracle_for(*f5);
    std::vector<ProjPoint> pts;
    for (uint32_t x = 0; x < 5; ++x)
        for (uint32_t y = 0; y < 5; ++y) pts.push_back(embed(ap(f5, x, y)));
    for (size_t a = 0; a < pts.size(); ++a)
        for (size_t b = a + 1; b < pts.size(); ++b)
            for (size_t c = b + 1; c < pts.size(); ++c) {
                const bool mine = collinear(pts[a], pts[b], pts[c]);
                const bool ref = testsupport::oracle_collinear(
                    o, {pts[a][0].idx, pts[a][1].idx, pts[a][2].idx},
                    {pts[b][0].idx, pts[b][1].idx, pts[b][2].idx},
                    {pts[c][0].idx, pts[c][1].idx, pts[c][2].idx});
                CHECK(mine == ref);
            }
}

TEST_CASE("collinearity stays total on the line at infinity") {
    const auto f7 = Field::make(7, 1);
    // all of these lie on x0 = 0
    CHECK(collinear(pp(f7, 0, 0, 1), pp(f7, 0, 1, 0), pp(f7, 0, 1, 3)));
    CHECK_FALSE(collinear(pp(f7, 0, 0, 1), pp(f7, 0, 1, 0), pp(f7, 1, 0, 0)));
}

TEST_CASE("arc recognition") {
    const auto f7 = Field::make(7, 1);
    const std::vector<ProjPoint> s1 = {pp(f7, 1, 1, 1), pp(f7, 1, 1, 6), pp(f7, 1, 6, 1),
                                       pp(f7, 1, 6, 6)};
    CHECK(is_arc(s1));

    const std::vector<ProjPoint> two = {pp(f7, 1, 0, 0), pp(f7, 1, 2, 3)};
    CHECK(is_arc(two));

    // three points of the horizontal line y = 0, embedded
    const std::vector<ProjPoint> flat = {embed(ap(f7, 0, 0)), embed(ap(f7, 1, 0)),
                                         embed(ap(f7, 2, 0))};
    CHECK_FALSE(is_arc(flat));

    const std::vector<ProjPoint> dup = {pp(f7, 1, 0, 0), pp(f7, 1, 0, 0)};
    CHECK_THROWS_AS(is_arc(dup), std::invalid_argument);
}

TEST_CASE("slope matrix of GF(7)") {
    const auto f7 = Field::make(7, 1);
    const auto m = slope_matrix(*f7);
    CHECK(m.half == 3);
    CHECK(m.at(0, 0) == 1);  // the point (1,1)
    for (int a = 0; a < 6; ++a) CHECK(m.at(a, a) == 1);
    CHECK(testsupport::slope_matrix_block_identity(m));

    // the congruence m = b - a + 1 (mod half) reproduces the membership scan
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            const int residue = ((b - a + 1) % 3 + 3) % 3;
            CHECK(m.at(a, b) == (residue == 0 ? 3 : residue));
        }
}

TEST_CASE("slope matrix block identity for odd q up to 27") {
    for (uint32_t q : {5u, 7u, 9u, 11u, 13u, 17u, 19u, 23u, 25u, 27u}) {
        uint32_t p = 0, r = 0;
        REQUIRE(prime_power(q, p, r));
        const auto f = Field::make(p, r);
        const auto m = slope_matrix(*f);
        CHECK(testsupport::slope_matrix_block_identity(m));
        CHECK(is_latin(cyclic_square(m.half)));
    }
    CHECK_THROWS_AS(slope_matrix(*Field::make(2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(slope_matrix(*Field::make(3, 1)), std::invalid_argument);
}
