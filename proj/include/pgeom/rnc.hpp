#ifndef PGEOM_RNC_HPP
#define PGEOM_RNC_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "pgeom/matrix.hpp"
#include "pgeom/mpoly.hpp"
#include "pgeom/pascal.hpp"
#include "pgeom/projective.hpp"
#include "pgeom/rational.hpp"
#include "pgeom/rng.hpp"

namespace pgeom {

// d+4 points of P^d, candidates for a rational normal curve of degree d.
struct RncInstance {
    size_t d;
    std::vector<PPoint> points;

    RncInstance(size_t d_, std::vector<PPoint> pts) : d(d_), points(std::move(pts)) {
        if (d < 2) throw bad_input("rational normal curves need d >= 2");
        if (points.size() != d + 4) throw dimension_error("instance needs d+4 points");
        for (const PPoint& p : points)
            if (p.dim() != d) throw dimension_error("instance points must live in P^d");
    }
};

// Normal form after fixing the first d+2 points to the coordinate points
// and [1:...:1]; a and b are the images of the two remaining points.
struct RncNormalForm {
    size_t d;
    std::vector<Rat> a, b;
};

inline RncNormalForm rnc_normalize(const RncInstance& inst) {
    std::vector<PPoint> frame(inst.points.begin(), inst.points.begin() + inst.d + 2);
    Mat m = frame_map(frame);
    RncNormalForm nf;
    nf.d = inst.d;
    nf.a = m.apply(inst.points[inst.d + 2].coords());
    nf.b = m.apply(inst.points[inst.d + 3].coords());
    return nf;
}

// The quartic equation indexed by i (0 <= i <= d-2):
//   a_i a_d b_{d-1} b_d - a_{d-1} a_d b_i b_d - a_i a_{d-1} b_{d-1} b_d
//   + a_{d-1} a_d b_i b_{d-1} + a_i a_{d-1} b_i b_d - a_i a_d b_i b_{d-1}
inline Rat rnc_equation(const RncNormalForm& nf, size_t i) {
    const size_t d = nf.d;
    if (i > d - 2) throw dimension_error("equation index out of range");
    const Rat &ai = nf.a[i], &a1 = nf.a[d - 1], &a2 = nf.a[d];
    const Rat &bi = nf.b[i], &b1 = nf.b[d - 1], &b2 = nf.b[d];
    return ai * a2 * b1 * b2 - a1 * a2 * bi * b2 - ai * a1 * b1 * b2 + a1 * a2 * bi * b1 +
           ai * a1 * bi * b2 - ai * a2 * bi * b1;
}

// All d-1 equations; the points lie on a rational normal curve iff every
// value is zero (general-position inputs).
inline std::vector<Rat> rnc_equations(const RncNormalForm& nf) {
    if (nf.d < 3) throw dimension_error("rnc_equations needs d >= 3; use the Pascal predicate for d = 2");
    std::vector<Rat> out;
    for (size_t i = 0; i + 2 <= nf.d; ++i) out.push_back(rnc_equation(nf, i));
    return out;
}

// Same condition as a 3x3 affine collinearity determinant on the rows
// (a_i a_{d-1}, b_i b_{d-1}, 1), (a_i a_d, b_i b_d, 1),
// (a_{d-1} a_d, b_{d-1} b_d, 1); agrees with rnc_equation up to sign.
inline Rat rnc_affine_collinearity(const RncNormalForm& nf, size_t i) {
    const size_t d = nf.d;
    if (i > d - 2) throw dimension_error("equation index out of range");
    Mat m(3, 3);
    m(0, 0) = nf.a[i] * nf.a[d - 1];
    m(0, 1) = nf.b[i] * nf.b[d - 1];
    m(0, 2) = 1;
    m(1, 0) = nf.a[i] * nf.a[d];
    m(1, 1) = nf.b[i] * nf.b[d];
    m(1, 2) = 1;
    m(2, 0) = nf.a[d - 1] * nf.a[d];
    m(2, 1) = nf.b[d - 1] * nf.b[d];
    m(2, 2) = 1;
    return det(m);
}

struct RncVerdict {
    bool member = false;
    std::vector<Rat> equation_values;   // frame-normalized witness
    std::vector<Rat> projection_values; // Pascal determinants of the d-1 projections
};

// Projection witness: U = first d-1 points; for each p in U project the
// five non-U points and p itself from the span of U minus p, and evaluate
// the conic determinant on the resulting six points of P^2.
inline std::vector<Rat> rnc_projection_values(const RncInstance& inst) {
    const size_t d = inst.d;
    std::vector<Rat> values;
    for (size_t drop = 0; drop + 1 <= d - 1; ++drop) {
        std::vector<PPoint> center;
        for (size_t i = 0; i + 1 <= d - 1; ++i)
            if (i != drop) center.push_back(inst.points[i]);
        std::vector<PPoint> six;
        six.push_back(project_from_span(center, inst.points[drop]));
        for (size_t i = d - 1; i < d + 4; ++i)
            six.push_back(project_from_span(center, inst.points[i]));
        PascalInstance hex({six[0], six[1], six[2], six[3], six[4], six[5]});
        values.push_back(pascal_F(hex));
    }
    return values;
}

inline RncVerdict rnc_check(const RncInstance& inst) {
    if (!general_position(inst.points))
        throw hypothesis_error("points are not in general position");
    RncVerdict v;
    if (inst.d == 2) {
        PascalInstance hex({inst.points[0], inst.points[1], inst.points[2], inst.points[3],
                            inst.points[4], inst.points[5]});
        Rat f = pascal_F(hex);
        v.projection_values.push_back(f);
        v.member = is_zero(f);
        return v;
    }
    v.equation_values = rnc_equations(rnc_normalize(inst));
    v.projection_values = rnc_projection_values(inst);
    bool eq_zero = true, proj_zero = true;
    for (const Rat& x : v.equation_values) eq_zero = eq_zero && is_zero(x);
    for (const Rat& x : v.projection_values) proj_zero = proj_zero && is_zero(x);
    if (eq_zero != proj_zero)
        throw hypothesis_error("independent membership witnesses disagree");
    v.member = eq_zero;
    return v;
}

// Deterministic sample of d+4 points on a rational normal curve: distinct
// parameters through t -> [1:t:...:t^d], then a seeded invertible integer
// change of coordinates. Resamples (bounded) until general position holds.
inline RncInstance rnc_sample(size_t d, uint64_t seed) {
    if (d < 2) throw bad_input("rational normal curves need d >= 2");
    Rng rng(seed);
    for (int attempt = 0; attempt < 32; ++attempt) {
        std::vector<long> params;
        while (params.size() < d + 4) {
            long t = rng.int_in(-50, 50);
            bool fresh = true;
            for (long u : params) fresh = fresh && (u != t);
            if (fresh) params.push_back(t);
        }
        Mat g = rng.invertible_matrix(d + 1, 5);
        std::vector<PPoint> pts;
        for (long t : params) {
            std::vector<Rat> c(d + 1);
            Rat pw(1);
            for (size_t k = 0; k <= d; ++k) {
                c[k] = pw;
                pw *= Rat(t);
            }
            pts.push_back(PPoint(g.apply(c)));
        }
        if (general_position(pts)) return RncInstance(d, std::move(pts));
    }
    throw resource_error("rnc_sample exhausted retries");
}

// The d-1 equations as polynomials in (a_0..a_d, b_0..b_d).
inline std::vector<MPoly> rnc_equation_polys(size_t d) {
    const size_t nv = 2 * (d + 1);
    auto A = [&](size_t i) { return MPoly::variable(nv, i); };
    auto B = [&](size_t i) { return MPoly::variable(nv, d + 1 + i); };
    std::vector<MPoly> eqs;
    for (size_t i = 0; i + 2 <= d; ++i) {
        MPoly e = A(i) * A(d) * B(d - 1) * B(d) - A(d - 1) * A(d) * B(i) * B(d) -
                  A(i) * A(d - 1) * B(d - 1) * B(d) + A(d - 1) * A(d) * B(i) * B(d - 1) +
                  A(i) * A(d - 1) * B(i) * B(d) - A(i) * A(d) * B(i) * B(d - 1);
        eqs.push_back(std::move(e));
    }
    return eqs;
}

// Rank of the (d-1) x (2d+2) Jacobian of the equations at (a, b); callers
// must sit on the solution set.
inline size_t rnc_jacobian_rank(const RncNormalForm& nf) {
    for (const Rat& e : rnc_equations(nf))
        if (!is_zero(e)) throw hypothesis_error("Jacobian requested off the solution set");
    std::vector<MPoly> eqs = rnc_equation_polys(nf.d);
    std::vector<Rat> at = nf.a;
    at.insert(at.end(), nf.b.begin(), nf.b.end());
    Mat jac(eqs.size(), 2 * (nf.d + 1));
    for (size_t r = 0; r < eqs.size(); ++r)
        for (size_t c = 0; c < 2 * (nf.d + 1); ++c)
            jac(r, c) = eqs[r].derivative(c).eval(at);
    return rank(jac);
}

}  // namespace pgeom

#endif  // PGEOM_RNC_HPP
