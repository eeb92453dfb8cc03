#ifndef PGEOM_PROJECTIVE_HPP
#define PGEOM_PROJECTIVE_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "pgeom/matrix.hpp"
#include "pgeom/rational.hpp"

namespace pgeom {

// Point of P^n, dim() = n. Canonical representative: coprime integer
// coordinates, first nonzero entry positive.
class PPoint {
public:
    PPoint() = default;
    explicit PPoint(std::vector<Rat> coords) : coords_(primitive_vector(coords)) {}

    static PPoint coordinate_point(size_t dim, size_t idx) {
        std::vector<Rat> c(dim + 1);
        c.at(idx) = 1;
        return PPoint(c);
    }

    static PPoint ones(size_t dim) {
        return PPoint(std::vector<Rat>(dim + 1, Rat(1)));
    }

    size_t dim() const { return coords_.size() - 1; }
    const std::vector<Rat>& coords() const { return coords_; }
    const Rat& operator[](size_t i) const { return coords_[i]; }

    bool operator==(const PPoint& o) const { return coords_ == o.coords_; }
    bool operator!=(const PPoint& o) const { return !(*this == o); }

private:
    std::vector<Rat> coords_;
};

struct PLine {
    PPoint a, b;

    PLine(PPoint a_, PPoint b_) : a(std::move(a_)), b(std::move(b_)) {
        if (a.dim() != b.dim()) throw dimension_error("line endpoints in different spaces");
        if (a == b) throw degeneracy_error("line requires two distinct points");
    }

    size_t dim() const { return a.dim(); }
};

struct Hyperplane {
    explicit Hyperplane(std::vector<Rat> c) : coeffs(primitive_vector(c)) {}

    std::vector<Rat> coeffs;  // canonical, as a point of the dual space

    size_t dim() const { return coeffs.size() - 1; }

    bool contains(const PPoint& p) const {
        if (p.dim() != dim()) throw dimension_error("incidence in mismatched spaces");
        Rat s(0);
        for (size_t i = 0; i < coeffs.size(); ++i) s += coeffs[i] * p[i];
        return is_zero(s);
    }
};

template <typename T>
std::array<T, 3> cross3(const std::array<T, 3>& a, const std::array<T, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline Mat coordinate_matrix(const std::vector<PPoint>& points) {
    if (points.empty()) return Mat();
    Mat m(points.size(), points[0].dim() + 1);
    for (size_t i = 0; i < points.size(); ++i) {
        if (points[i].dim() != points[0].dim())
            throw dimension_error("points in mixed ambient spaces");
        for (size_t j = 0; j < m.cols(); ++j) m(i, j) = points[i][j];
    }
    return m;
}

// True iff every subset of <= n+1 of the points is linearly independent.
// With at least n+1 points it suffices to check the (n+1)-subsets: any
// dependent small subset forces a dependent (n+1)-subset.
inline bool general_position(const std::vector<PPoint>& points) {
    if (points.empty()) return true;
    const size_t n = points[0].dim();
    for (const PPoint& p : points)
        if (p.dim() != n) throw dimension_error("points in mixed ambient spaces");
    const size_t k = std::min(points.size(), n + 1);
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::vector<PPoint> sub;
        for (size_t i : idx) sub.push_back(points[i]);
        if (rank(coordinate_matrix(sub)) != k) return false;
        // next k-combination
        size_t i = k;
        while (i > 0 && idx[i - 1] == points.size() - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return true;
}

// Projection away from the span of `center` (k independent points) to
// P^(n-k). Basis completion convention: append coordinate vectors of
// smallest index that keep full rank, change basis so the center becomes
// the first k coordinate points, then drop the first k coordinates.
inline PPoint project_from_span(const std::vector<PPoint>& center, const PPoint& p) {
    if (center.empty()) throw bad_input("projection needs a nonempty center");
    const size_t n = p.dim();
    const size_t k = center.size();
    if (k > n) throw dimension_error("projection center too large");
    Mat basis(n + 1, n + 1);
    for (size_t j = 0; j < k; ++j) {
        if (center[j].dim() != n) throw dimension_error("center point in wrong space");
        for (size_t i = 0; i <= n; ++i) basis(i, j) = center[j][i];
    }
    size_t filled = k;
    for (size_t e = 0; e <= n && filled <= n; ++e) {
        for (size_t i = 0; i <= n; ++i) basis(i, filled) = (i == e) ? 1 : 0;
        Mat head(n + 1, filled + 1);
        for (size_t i = 0; i <= n; ++i)
            for (size_t j = 0; j <= filled; ++j) head(i, j) = basis(i, j);
        if (rank(head) == filled + 1) ++filled;
    }
    if (filled != n + 1) throw degeneracy_error("projection center is degenerate");
    std::vector<Rat> in_basis = inverse(basis).apply(p.coords());
    std::vector<Rat> image(in_basis.begin() + k, in_basis.end());
    bool all_zero = true;
    for (const Rat& x : image) all_zero = all_zero && is_zero(x);
    if (all_zero) throw degeneracy_error("point lies in the projection center");
    return PPoint(image);
}

// Degree-2 monomials of a point of P^2, in the order x^2, y^2, z^2, xy, xz, yz.
inline std::vector<Rat> veronese2(const std::vector<Rat>& c) {
    if (c.size() != 3) throw dimension_error("veronese2 expects a point of P^2");
    return {c[0] * c[0], c[1] * c[1], c[2] * c[2], c[0] * c[1], c[0] * c[2], c[1] * c[2]};
}

inline std::vector<Rat> veronese2(const PPoint& p) { return veronese2(p.coords()); }

// All degree-2 monomials of a point of P^n: squares first ascending, then
// products z_i z_j, i < j, lexicographic.
inline std::vector<Rat> quadric_monomials(const std::vector<Rat>& c) {
    std::vector<Rat> out;
    out.reserve(c.size() * (c.size() + 1) / 2);
    for (const Rat& x : c) out.push_back(x * x);
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = i + 1; j < c.size(); ++j) out.push_back(c[i] * c[j]);
    return out;
}

inline std::vector<Rat> quadric_monomials(const PPoint& p) { return quadric_monomials(p.coords()); }

// Hyperplane through n independent points of P^n. Coefficients are the
// signed maximal minors of the n x (n+1) coordinate matrix (Laplace
// cofactors), returned raw; all inputs are incident.
inline std::vector<Rat> span_hyperplane_raw(const std::vector<std::vector<Rat>>& rows) {
    if (rows.empty()) throw bad_input("empty span");
    const size_t n = rows.size();
    if (rows[0].size() != n + 1) throw dimension_error("span_hyperplane needs n points in P^n");
    std::vector<Rat> coeffs(n + 1);
    for (size_t drop = 0; drop <= n; ++drop) {
        Mat minor(n, n);
        for (size_t i = 0; i < n; ++i) {
            size_t cj = 0;
            for (size_t j = 0; j <= n; ++j) {
                if (j == drop) continue;
                minor(i, cj++) = rows[i][j];
            }
        }
        Rat d = det(minor);
        coeffs[drop] = (drop % 2 == 0) ? d : -d;
    }
    bool all_zero = true;
    for (const Rat& x : coeffs) all_zero = all_zero && is_zero(x);
    if (all_zero) throw degeneracy_error("span points are dependent");
    return coeffs;
}

inline Hyperplane span_hyperplane(const std::vector<PPoint>& points) {
    std::vector<std::vector<Rat>> rows;
    for (const PPoint& p : points) rows.push_back(p.coords());
    return Hyperplane(span_hyperplane_raw(rows));
}

inline Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.size() != b.size()) throw dimension_error("dot product length mismatch");
    Rat s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Unique intersection point (h.b) a - (h.a) b of a line with a hyperplane
// not containing it, raw coordinates.
inline std::vector<Rat> line_hyperplane_meet_raw(const std::vector<Rat>& a,
                                                const std::vector<Rat>& b,
                                                const std::vector<Rat>& h) {
    Rat ha = dot(h, a), hb = dot(h, b);
    if (is_zero(ha) && is_zero(hb))
        throw degeneracy_error("line is contained in the hyperplane");
    std::vector<Rat> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = hb * a[i] - ha * b[i];
    return out;
}

inline PPoint line_hyperplane_meet(const PLine& l, const Hyperplane& h) {
    return PPoint(line_hyperplane_meet_raw(l.a.coords(), l.b.coords(), h.coeffs));
}

// Projective transformation sending the first n+1 points to the coordinate
// points and the last one to [1:...:1]. Canonical scale: first nonzero
// entry of the matrix is 1.
inline Mat frame_map(const std::vector<PPoint>& points) {
    if (points.empty()) throw bad_input("frame_map needs points");
    const size_t n = points[0].dim();
    if (points.size() != n + 2) throw dimension_error("frame_map needs n+2 points in P^n");
    Mat a(n + 1, n + 1);
    for (size_t j = 0; j <= n; ++j)
        for (size_t i = 0; i <= n; ++i) a(i, j) = points[j][i];
    if (rank(a) != n + 1) throw degeneracy_error("frame points are dependent");
    std::vector<Rat> lambda = inverse(a).apply(points[n + 1].coords());
    for (const Rat& l : lambda)
        if (is_zero(l)) throw degeneracy_error("frame points are not in general position");
    for (size_t j = 0; j <= n; ++j)
        for (size_t i = 0; i <= n; ++i) a(i, j) *= lambda[j];
    Mat m = inverse(a);
    for (size_t i = 0; i <= n; ++i)
        for (size_t j = 0; j <= n; ++j)
            if (!is_zero(m(i, j))) {
                Rat inv = Rat(1) / m(i, j);
                Mat out(n + 1, n + 1);
                for (size_t r = 0; r <= n; ++r)
                    for (size_t c = 0; c <= n; ++c) out(r, c) = m(r, c) * inv;
                return out;
            }
    throw degeneracy_error("frame map is zero");  // unreachable
}

inline PPoint apply_map(const Mat& m, const PPoint& p) {
    return PPoint(m.apply(p.coords()));
}

inline PLine apply_map(const Mat& m, const PLine& l) {
    return PLine(apply_map(m, l.a), apply_map(m, l.b));
}

inline bool point_on_line(const PPoint& p, const PLine& l) {
    std::vector<PPoint> tri = {p, l.a, l.b};
    return rank(coordinate_matrix(tri)) <= 2;
}

inline bool lines_meet(const PLine& l1, const PLine& l2) {
    std::vector<PPoint> four = {l1.a, l1.b, l2.a, l2.b};
    return rank(coordinate_matrix(four)) <= 3;
}

// The unique line through p meeting two skew lines of P^3: the
// intersection of the planes spanned by (p, l1) and (p, l2).
inline PLine transversal_through_point(const PPoint& p, const PLine& l1, const PLine& l2) {
    if (p.dim() != 3 || l1.dim() != 3 || l2.dim() != 3)
        throw dimension_error("transversal construction lives in P^3");
    if (lines_meet(l1, l2)) throw degeneracy_error("the two lines are coplanar");
    if (point_on_line(p, l1) || point_on_line(p, l2))
        throw degeneracy_error("point lies on one of the lines");
    Hyperplane h1 = span_hyperplane({p, l1.a, l1.b});
    Hyperplane h2 = span_hyperplane({p, l2.a, l2.b});
    Mat sys(2, 4);
    for (size_t j = 0; j < 4; ++j) {
        sys(0, j) = h1.coeffs[j];
        sys(1, j) = h2.coeffs[j];
    }
    std::vector<std::vector<Rat>> ker = nullspace(sys);
    if (ker.size() != 2) throw degeneracy_error("planes through the point coincide");
    PLine t{PPoint(ker[0]), PPoint(ker[1])};
    if (!lines_meet(t, l1) || !lines_meet(t, l2) || !point_on_line(p, t))
        throw degeneracy_error("transversal construction degenerated");
    return t;
}

}  // namespace pgeom

#endif  // PGEOM_PROJECTIVE_HPP
