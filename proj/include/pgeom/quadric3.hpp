#ifndef PGEOM_QUADRIC3_HPP
#define PGEOM_QUADRIC3_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "pgeom/identity.hpp"
#include "pgeom/matrix.hpp"
#include "pgeom/mpoly.hpp"
#include "pgeom/projective.hpp"
#include "pgeom/rational.hpp"

namespace pgeom {

// Linear constraint on a quadric of P^3, expanded into point conditions:
// a line contributes the 3 sample points a, b, a+b; curve constraints
// carry explicitly sampled points (5 on a conic, 7 on a twisted cubic).
struct QuadricConstraint {
    enum class Kind { PointOn, LineOn, CurvePointsOn };

    Kind kind;
    std::vector<PPoint> points;  // expanded samples
    std::optional<PLine> line;

    static QuadricConstraint point_on(PPoint p) {
        QuadricConstraint c{Kind::PointOn, {std::move(p)}, std::nullopt};
        return c;
    }

    static QuadricConstraint line_on(PLine l) {
        std::vector<Rat> mid(l.a.coords());
        for (size_t i = 0; i < mid.size(); ++i) mid[i] += l.b[i];
        QuadricConstraint c{Kind::LineOn, {l.a, l.b, PPoint(mid)}, l};
        return c;
    }

    static QuadricConstraint curve_points_on(std::vector<PPoint> pts) {
        if (pts.empty()) throw bad_input("curve constraint without sample points");
        QuadricConstraint c{Kind::CurvePointsOn, std::move(pts), std::nullopt};
        return c;
    }
};

// Coefficient vector of a quadric of P^3, ordered as quadric_monomials.
struct QuadricForm {
    std::vector<Rat> coeffs;  // length 10

    Rat eval(const PPoint& p) const { return dot(coeffs, quadric_monomials(p)); }
};

inline Mat quadric_system(const std::vector<QuadricConstraint>& constraints) {
    std::vector<std::vector<Rat>> rows;
    for (const QuadricConstraint& c : constraints)
        for (const PPoint& p : c.points) {
            if (p.dim() != 3) throw dimension_error("quadric constraints live in P^3");
            rows.push_back(quadric_monomials(p));
        }
    if (rows.empty()) return Mat(0, 10);
    return Mat::from_rows(rows);
}

// True iff some quadric satisfies all constraints; returns the form when
// it is unique up to scale.
inline std::pair<bool, std::optional<QuadricForm>> exists_quadric(
    const std::vector<QuadricConstraint>& constraints) {
    Mat sys = quadric_system(constraints);
    if (sys.rows() == 0) return {true, std::nullopt};
    std::vector<std::vector<Rat>> ker = nullspace(sys);
    if (ker.empty()) return {false, std::nullopt};
    if (ker.size() == 1) return {true, QuadricForm{ker[0]}};
    return {true, std::nullopt};
}

// Determinant of the 10x10 matrix of degree-2 monomial rows; zero iff a
// quadric passes through all ten points.
inline Rat ten_points_det(const std::vector<PPoint>& points) {
    if (points.size() != 10) throw dimension_error("ten_points_det needs 10 points");
    Mat m(10, 10);
    for (size_t i = 0; i < 10; ++i) {
        if (points[i].dim() != 3) throw dimension_error("points must live in P^3");
        std::vector<Rat> row = quadric_monomials(points[i]);
        for (size_t j = 0; j < 10; ++j) m(i, j) = row[j];
    }
    return det(m);
}

namespace detail {

// The one-point-three-lines 6x6 matrix in the frame P = [1:0:0:0],
// L_i = span(e_i, R_i). Columns are the six mixed monomials
// z0z1, z0z2, z0z3, z1z2, z1z3, z2z3; rows 1-3 put R_i on the quadric,
// rows 4-6 put R_i on the tangent plane at e_i.
template <typename T>
std::array<std::array<T, 6>, 6> p3l_matrix(const std::array<std::array<T, 4>, 3>& a, const T& zero) {
    std::array<std::array<T, 6>, 6> m;
    for (size_t i = 0; i < 3; ++i) {
        m[i] = {a[i][0] * a[i][1], a[i][0] * a[i][2], a[i][0] * a[i][3],
                a[i][1] * a[i][2], a[i][1] * a[i][3], a[i][2] * a[i][3]};
    }
    m[3] = {a[0][0], zero, zero, a[0][2], a[0][3], zero};
    m[4] = {zero, a[1][0], zero, a[1][1], zero, a[1][3]};
    m[5] = {zero, zero, a[2][0], zero, a[2][1], a[2][2]};
    return m;
}

}  // namespace detail

// Degree-9 determinant vanishing iff P = [1:0:0:0] and the three lines
// span(e_i, R_i) lie on a common quadric.
inline Rat p3l_det(const PPoint& r1, const PPoint& r2, const PPoint& r3) {
    std::array<std::array<Rat, 4>, 3> a;
    const std::array<const PPoint*, 3> rs = {&r1, &r2, &r3};
    for (size_t i = 0; i < 3; ++i) {
        if (rs[i]->dim() != 3) throw dimension_error("p3l_det lives in P^3");
        for (size_t j = 0; j < 4; ++j) a[i][j] = (*rs[i])[j];
    }
    auto rows = detail::p3l_matrix<Rat>(a, Rat(0));
    Mat m(6, 6);
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = 0; j < 6; ++j) m(i, j) = rows[i][j];
    return det(m);
}

// The factored form: three coplanarity factors times the concurrency
// factor a12 a23 a31 - a13 a21 a32.
inline Rat p3l_factored(const PPoint& r1, const PPoint& r2, const PPoint& r3) {
    auto a = [&](size_t i, size_t j) -> const Rat& {
        const std::array<const PPoint*, 3> rs = {&r1, &r2, &r3};
        return (*rs[i - 1])[j];
    };
    return (a(2, 1) * a(3, 0) - a(2, 0) * a(3, 1)) * (a(1, 2) * a(3, 0) - a(1, 0) * a(3, 2)) *
           (-a(1, 3) * a(2, 0) + a(1, 0) * a(2, 3)) *
           (a(1, 2) * a(2, 3) * a(3, 1) - a(1, 3) * a(2, 1) * a(3, 2));
}

// Symbolic proof that the 6x6 determinant equals the printed 4-factor
// product in the 12 coordinates of R_1, R_2, R_3.
inline IdentityProof p3l_factorization_identity(size_t term_ceiling = kDefaultTermCeiling) {
    constexpr size_t nv = 12;
    std::array<std::array<MPoly, 4>, 3> a;
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 4; ++j) a[i][j] = MPoly::variable(nv, 4 * i + j);
    auto rows = detail::p3l_matrix<MPoly>(a, MPoly(nv));
    PolyMat pm(6, 6, nv);
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = 0; j < 6; ++j) pm(i, j) = rows[i][j];

    IdentityProof proof;
    proof.mode = "symbolic";
    proof.lhs = poly_det(pm, term_ceiling);
    proof.rhs = (a[1][1] * a[2][0] - a[1][0] * a[2][1]) * (a[0][2] * a[2][0] - a[0][0] * a[2][2]) *
                (a[0][0] * a[1][3] - a[0][3] * a[1][0]) *
                (a[0][2] * a[1][3] * a[2][1] - a[0][3] * a[1][1] * a[2][2]);
    proof.difference = proof.lhs - proof.rhs;
    proof.proved = proof.difference.is_zero_poly();
    proof.lhs_degree = proof.lhs.total_degree();
    proof.rhs_degree = proof.rhs.total_degree();
    proof.lhs_terms = proof.lhs.term_count();
    proof.rhs_terms = proof.rhs.term_count();
    return proof;
}

// Projection criterion: project each line from P to a plane; true iff the
// three image lines are concurrent, i.e. iff there is a line through P
// meeting all three.
inline bool p3l_concurrent(const PPoint& p, const std::array<PLine, 3>& lines) {
    Mat m(3, 3);
    for (size_t i = 0; i < 3; ++i) {
        if (point_on_line(p, lines[i])) throw hypothesis_error("point lies on one of the lines");
        PPoint ia = project_from_span({p}, lines[i].a);
        PPoint ib = project_from_span({p}, lines[i].b);
        std::array<Rat, 3> ca = {ia[0], ia[1], ia[2]};
        std::array<Rat, 3> cb = {ib[0], ib[1], ib[2]};
        std::array<Rat, 3> coeff = cross3(ca, cb);
        for (size_t j = 0; j < 3; ++j) m(i, j) = coeff[j];
    }
    return is_zero(det(m));
}

// Frame normalization for a general point P and three lines: P goes to
// [1:0:0:0] and the first defining point of L_i to e_i, the residual
// scaling fixed by sending the sum of the four to [1:1:1:1]. Returns the
// images of the second defining points, ready for p3l_det.
inline std::array<PPoint, 3> p3l_normalize(const PPoint& p, const std::array<PLine, 3>& lines) {
    std::vector<Rat> sum = p.coords();
    std::vector<PPoint> frame = {p};
    for (const PLine& l : lines) {
        if (l.dim() != 3) throw dimension_error("p3l lives in P^3");
        frame.push_back(l.a);
        for (size_t i = 0; i < 4; ++i) sum[i] += l.a[i];
    }
    frame.push_back(PPoint(sum));
    Mat m = frame_map(frame);
    return {apply_map(m, lines[0].b), apply_map(m, lines[1].b), apply_map(m, lines[2].b)};
}

// Four points and two skew lines reduce to one point and the three
// transversals through the other points: a quadric contains the first
// collection iff one contains the second. The equivalence needs the three
// transversals pairwise skew (intersecting transversals share a point of
// l1 or l2 and collapse the reduced system), so that case is rejected.
inline std::pair<PPoint, std::array<PLine, 3>> reduce_4p2l(const std::array<PPoint, 4>& points,
                                                           const PLine& l1, const PLine& l2) {
    std::array<PLine, 3> ts = {transversal_through_point(points[1], l1, l2),
                               transversal_through_point(points[2], l1, l2),
                               transversal_through_point(points[3], l1, l2)};
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = i + 1; j < 3; ++j)
            if (lines_meet(ts[i], ts[j]))
                throw degeneracy_error("two of the reduction transversals meet");
    return {points[0], ts};
}

}  // namespace pgeom

#endif  // PGEOM_QUADRIC3_HPP
