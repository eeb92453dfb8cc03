#ifndef PGEOM_PASCAL_HPP
#define PGEOM_PASCAL_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "pgeom/identity.hpp"
#include "pgeom/matrix.hpp"
#include "pgeom/mpoly.hpp"
#include "pgeom/projective.hpp"
#include "pgeom/rational.hpp"

namespace pgeom {

// Hexagon of six points in P^2. Side L_i joins p_i and p_{i+1} (mod 6);
// the derived points are q_j = L_j ^ L_{j+3}, j = 1..3.
struct PascalInstance {
    std::array<PPoint, 6> points;

    explicit PascalInstance(std::array<PPoint, 6> pts) : points(std::move(pts)) {
        for (const PPoint& p : points)
            if (p.dim() != 2) throw dimension_error("Pascal instance lives in P^2");
    }

    bool no_three_collinear() const {
        for (size_t i = 0; i < 6; ++i)
            for (size_t j = i + 1; j < 6; ++j)
                for (size_t k = j + 1; k < 6; ++k) {
                    std::vector<PPoint> tri = {points[i], points[j], points[k]};
                    if (rank(coordinate_matrix(tri)) <= 2) return false;
                }
        return true;
    }
};

// Conic condition: determinant of the 6x6 matrix of Veronese rows. Zero
// iff the six points lie on a conic.
inline Rat pascal_F(const PascalInstance& inst) {
    Mat m(6, 6);
    for (size_t i = 0; i < 6; ++i) {
        std::vector<Rat> row = veronese2(inst.points[i]);
        for (size_t j = 0; j < 6; ++j) m(i, j) = row[j];
    }
    return det(m);
}

// Raw minor-based coordinates of the derived points, degree 4 in the input
// coordinates. Canonicalizing would break the F = G identity, so callers
// that need PPoints wrap these themselves.
inline std::array<std::array<Rat, 3>, 3> pascal_derived_raw(const PascalInstance& inst) {
    std::array<std::array<Rat, 3>, 6> p;
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = 0; j < 3; ++j) p[i][j] = inst.points[i][j];
    std::array<std::array<Rat, 3>, 3> q;
    for (size_t j = 0; j < 3; ++j) {
        std::array<Rat, 3> lj = cross3(p[j], p[(j + 1) % 6]);
        std::array<Rat, 3> lj3 = cross3(p[j + 3], p[(j + 4) % 6]);
        q[j] = cross3(lj, lj3);
        if (is_zero(q[j][0]) && is_zero(q[j][1]) && is_zero(q[j][2]))
            throw degeneracy_error("opposite hexagon sides coincide");
    }
    return q;
}

inline std::array<PPoint, 3> pascal_derived(const PascalInstance& inst) {
    auto raw = pascal_derived_raw(inst);
    std::array<PPoint, 3> out = {
        PPoint({raw[0][0], raw[0][1], raw[0][2]}),
        PPoint({raw[1][0], raw[1][1], raw[1][2]}),
        PPoint({raw[2][0], raw[2][1], raw[2][2]})};
    return out;
}

// Collinearity condition on the derived points, computed from the raw
// degree-4 representatives. Equals pascal_F identically.
inline Rat pascal_G(const PascalInstance& inst) {
    auto q = pascal_derived_raw(inst);
    Mat m(3, 3);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) m(i, j) = q[i][j];
    return det(m);
}

// Symbolic F and G in the 18 coordinates (x1,y1,z1,...,x6,y6,z6) and the
// proof that F - G vanishes identically.
inline IdentityProof pascal_identity(size_t term_ceiling = kDefaultTermCeiling) {
    constexpr size_t nv = 18;
    std::array<std::array<MPoly, 3>, 6> p;
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = 0; j < 3; ++j) p[i][j] = MPoly::variable(nv, 3 * i + j);

    PolyMat fm(6, 6, nv);
    for (size_t i = 0; i < 6; ++i) {
        const auto& [x, y, z] = p[i];
        std::array<MPoly, 6> row = {x * x, y * y, z * z, x * y, x * z, y * z};
        for (size_t j = 0; j < 6; ++j) fm(i, j) = row[j];
    }
    IdentityProof proof;
    proof.mode = "symbolic";
    proof.lhs = poly_det(fm, term_ceiling);

    PolyMat gm(3, 3, nv);
    for (size_t j = 0; j < 3; ++j) {
        std::array<MPoly, 3> lj = cross3(p[j], p[(j + 1) % 6]);
        std::array<MPoly, 3> lj3 = cross3(p[j + 3], p[(j + 4) % 6]);
        std::array<MPoly, 3> q = cross3(lj, lj3);
        for (size_t c = 0; c < 3; ++c) gm(j, c) = q[c];
    }
    proof.rhs = poly_det(gm, term_ceiling);

    proof.difference = proof.lhs - proof.rhs;
    proof.proved = proof.difference.is_zero_poly();
    proof.lhs_degree = proof.lhs.total_degree();
    proof.rhs_degree = proof.rhs.total_degree();
    proof.lhs_terms = proof.lhs.term_count();
    proof.rhs_terms = proof.rhs.term_count();
    return proof;
}

}  // namespace pgeom

#endif  // PGEOM_PASCAL_HPP
