#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "pgeom/projective.hpp"
#include "pgeom/rng.hpp"

using namespace pgeom;

static PPoint random_point(Rng& rng, size_t dim) { return PPoint(rng.rat_vector(dim + 1, 9)); }

TEST_CASE("canonical representatives") {
    PPoint p({rat(2, 3), rat(-4, 3), Rat(2)});
    CHECK(p.coords() == std::vector<Rat>{Rat(1), Rat(-2), Rat(3)});

    // idempotence
    CHECK(PPoint(p.coords()) == p);

    PPoint neg({Rat(0), Rat(-2), Rat(4)});
    CHECK(neg.coords() == std::vector<Rat>{Rat(0), Rat(1), Rat(-2)});

    CHECK_THROWS_AS(PPoint({Rat(0), Rat(0)}), bad_input);
}

TEST_CASE("general position") {
    std::vector<PPoint> frame;
    for (size_t i = 0; i < 4; ++i) frame.push_back(PPoint::coordinate_point(3, i));
    frame.push_back(PPoint::ones(3));
    CHECK(general_position(frame));

    std::vector<PPoint> collinear = {PPoint({Rat(1), Rat(0), Rat(0)}),
                                     PPoint({Rat(0), Rat(1), Rat(0)}),
                                     PPoint({Rat(1), Rat(1), Rat(0)})};
    CHECK_FALSE(general_position(collinear));

    // seven points on a twisted cubic are in general position
    std::vector<PPoint> tc;
    for (long t : {-3, -1, 0, 1, 2, 3, 5}) {
        tc.push_back(PPoint({Rat(1), Rat(t), Rat(t * t), Rat(t * t * t)}));
    }
    CHECK(general_position(tc));
    // oracle: every 4x4 Vandermonde-style minor nonzero
    for (size_t a = 0; a < 7; ++a)
        for (size_t b = a + 1; b < 7; ++b)
            for (size_t c = b + 1; c < 7; ++c)
                for (size_t d = c + 1; d < 7; ++d) {
                    Mat m = coordinate_matrix({tc[a], tc[b], tc[c], tc[d]});
                    CHECK(!is_zero(oracles::det_cofactor(m)));
                }
}

TEST_CASE("projection from coordinate centers drops coordinates") {
    PPoint p({Rat(1), Rat(2), Rat(3), Rat(4)});
    PPoint img = project_from_span({PPoint::coordinate_point(3, 0)}, p);
    CHECK(img == PPoint({Rat(2), Rat(3), Rat(4)}));

    PPoint q({Rat(5), Rat(7), Rat(1), Rat(2), Rat(3)});
    PPoint img2 = project_from_span(
        {PPoint::coordinate_point(4, 0), PPoint::coordinate_point(4, 1)}, q);
    CHECK(img2 == PPoint({Rat(1), Rat(2), Rat(3)}));

    CHECK_THROWS_AS(project_from_span({PPoint::coordinate_point(3, 0)},
                                      PPoint::coordinate_point(3, 0)),
                    degeneracy_error);
}

TEST_CASE("projection with a general center matches the change-of-basis oracle") {
    // center {[1:1:0:0], e2} in P^3 applied to [1:0:1:1]. Basis completion
    // appends e0, skips e1 (dependent: c1 = e0 + e1), appends e3; solve for
    // the coefficients with the cofactor-based Cramer rule and drop the
    // first two.
    PPoint c1({Rat(1), Rat(1), Rat(0), Rat(0)});
    PPoint c2 = PPoint::coordinate_point(3, 2);
    PPoint p({Rat(1), Rat(0), Rat(1), Rat(1)});

    Mat basis(4, 4);
    std::vector<std::vector<Rat>> cols = {c1.coords(), c2.coords(),
                                          {Rat(1), Rat(0), Rat(0), Rat(0)},
                                          {Rat(0), Rat(0), Rat(0), Rat(1)}};
    for (size_t j = 0; j < 4; ++j)
        for (size_t i = 0; i < 4; ++i) basis(i, j) = cols[j][i];
    Rat d = oracles::det_cofactor(basis);
    std::vector<Rat> coeff(4);
    for (size_t j = 0; j < 4; ++j) {
        Mat replaced = basis;
        for (size_t i = 0; i < 4; ++i) replaced(i, j) = p[i];
        coeff[j] = oracles::det_cofactor(replaced) / d;
    }
    PPoint expect({coeff[2], coeff[3]});
    CHECK(project_from_span({c1, c2}, p) == expect);
}

TEST_CASE("veronese2 order") {
    CHECK(veronese2(PPoint::ones(2)) == std::vector<Rat>(6, Rat(1)));
    CHECK(veronese2(PPoint::coordinate_point(2, 1)) ==
          std::vector<Rat>{Rat(0), Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)});
    CHECK(veronese2(PPoint({Rat(1), Rat(2), Rat(3)})) ==
          std::vector<Rat>{Rat(1), Rat(4), Rat(9), Rat(2), Rat(3), Rat(6)});
}

TEST_CASE("quadric monomial order") {
    CHECK(quadric_monomials(PPoint::coordinate_point(3, 0)) ==
          std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0),
                           Rat(0)});
    CHECK(quadric_monomials(PPoint::ones(3)) == std::vector<Rat>(10, Rat(1)));
    CHECK(quadric_monomials(PPoint({Rat(1), Rat(2), Rat(0), Rat(1)})) ==
          std::vector<Rat>{Rat(1), Rat(4), Rat(0), Rat(1), Rat(2), Rat(0), Rat(1), Rat(0), Rat(2),
                           Rat(0)});
}

TEST_CASE("span hyperplane") {
    Hyperplane h = span_hyperplane({PPoint::coordinate_point(3, 1), PPoint::coordinate_point(3, 2),
                                    PPoint::coordinate_point(3, 3)});
    CHECK(h.coeffs == std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(0)});

    Hyperplane h2 = span_hyperplane({PPoint::coordinate_point(4, 0), PPoint::coordinate_point(4, 1),
                                     PPoint::coordinate_point(4, 2), PPoint::coordinate_point(4, 3)});
    CHECK(h2.coeffs == std::vector<Rat>{Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)});

    Rng rng(21);
    for (int t = 0; t < 20; ++t) {
        std::vector<PPoint> pts = {random_point(rng, 4), random_point(rng, 4),
                                   random_point(rng, 4), random_point(rng, 4)};
        if (rank(coordinate_matrix(pts)) < 4) continue;
        Hyperplane h3 = span_hyperplane(pts);
        for (const PPoint& p : pts) CHECK(h3.contains(p));
    }

    CHECK_THROWS_AS(span_hyperplane({PPoint::coordinate_point(3, 0), PPoint::coordinate_point(3, 0),
                                     PPoint::coordinate_point(3, 1)}),
                    degeneracy_error);
}

TEST_CASE("line-hyperplane intersection") {
    PLine l{PPoint::coordinate_point(3, 0), PPoint::coordinate_point(3, 1)};
    Hyperplane h({Rat(1), Rat(0), Rat(0), Rat(0)});
    CHECK(line_hyperplane_meet(l, h) == PPoint::coordinate_point(3, 1));

    PLine l2{PPoint({Rat(1), Rat(1), Rat(0), Rat(0), Rat(0)}),
             PPoint({Rat(0), Rat(0), Rat(1), Rat(1), Rat(1)})};
    Hyperplane h2({Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)});
    CHECK(line_hyperplane_meet(l2, h2) == PPoint({Rat(0), Rat(0), Rat(1), Rat(1), Rat(1)}));

    PLine inside{PPoint::coordinate_point(3, 1), PPoint::coordinate_point(3, 2)};
    CHECK_THROWS_AS(line_hyperplane_meet(inside, h), degeneracy_error);
}

TEST_CASE("frame map") {
    std::vector<PPoint> std_frame = {PPoint::coordinate_point(2, 0), PPoint::coordinate_point(2, 1),
                                     PPoint::coordinate_point(2, 2), PPoint::ones(2)};
    CHECK(frame_map(std_frame) == Mat::identity(3));

    // permuted coordinate points give the corresponding permutation matrix
    std::vector<PPoint> permuted = {PPoint::coordinate_point(2, 1), PPoint::coordinate_point(2, 2),
                                    PPoint::coordinate_point(2, 0), PPoint::ones(2)};
    Mat m = frame_map(permuted);
    for (size_t k = 0; k < 3; ++k)
        CHECK(apply_map(m, permuted[k]) == PPoint::coordinate_point(2, k));

    Rng rng(22);
    for (int t = 0; t < 10; ++t) {
        std::vector<PPoint> pts;
        for (int i = 0; i < 6; ++i) pts.push_back(random_point(rng, 4));
        if (!general_position(pts)) continue;
        Mat g = frame_map(pts);
        for (size_t k = 0; k < 5; ++k)
            CHECK(apply_map(g, pts[k]) == PPoint::coordinate_point(4, k));
        CHECK(apply_map(g, pts[5]) == PPoint::ones(4));
    }
}

TEST_CASE("transversal through a point to two skew lines") {
    PLine l1{PPoint::coordinate_point(3, 0), PPoint::coordinate_point(3, 1)};
    PLine l2{PPoint::coordinate_point(3, 2), PPoint::coordinate_point(3, 3)};

    PLine t = transversal_through_point(PPoint::ones(3), l1, l2);
    // the symmetric configuration meets the axes at [1:1:0:0] and [0:0:1:1]
    CHECK(point_on_line(PPoint({Rat(1), Rat(1), Rat(0), Rat(0)}), t));
    CHECK(point_on_line(PPoint({Rat(0), Rat(0), Rat(1), Rat(1)}), t));

    PPoint p({Rat(1), Rat(0), Rat(1), Rat(0)});
    PLine t2 = transversal_through_point(p, l1, l2);
    CHECK(point_on_line(p, t2));
    CHECK(lines_meet(t2, l1));
    CHECK(lines_meet(t2, l2));

    PLine coplanar{PPoint::coordinate_point(3, 0), PPoint::coordinate_point(3, 2)};
    CHECK_THROWS_AS(transversal_through_point(PPoint::ones(3), l1, coplanar), degeneracy_error);

    Rng rng(23);
    int done = 0;
    while (done < 20) {
        PPoint p3 = random_point(rng, 3);
        try {
            PLine r1{random_point(rng, 3), random_point(rng, 3)};
            PLine r2{random_point(rng, 3), random_point(rng, 3)};
            PLine tr = transversal_through_point(p3, r1, r2);
            CHECK(point_on_line(p3, tr));
            CHECK(lines_meet(tr, r1));
            CHECK(lines_meet(tr, r2));
            ++done;
        } catch (const hypothesis_error&) {
            // degenerate draw, try again
        }
    }
}
