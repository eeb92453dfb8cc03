#ifndef PGEOM_RSB_HPP
#define PGEOM_RSB_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pgeom/identity.hpp"
#include "pgeom/matrix.hpp"
#include "pgeom/mpoly.hpp"
#include "pgeom/projective.hpp"
#include "pgeom/rational.hpp"
#include "pgeom/rng.hpp"

namespace pgeom {

// Five lines L_i = span(P_i, Q_i) of P^4 in the normalized frame where
// P_i is the i-th coordinate point. Indices are cyclic mod 5.
struct RsbInstance {
    std::array<PPoint, 5> q;

    explicit RsbInstance(std::array<PPoint, 5> q_) : q(std::move(q_)) {
        for (size_t i = 0; i < 5; ++i) {
            if (q[i].dim() != 4) throw dimension_error("RSB instance lives in P^4");
            if (q[i] == PPoint::coordinate_point(4, i))
                throw degeneracy_error("Q_i coincides with its base point P_i");
        }
    }

    PLine line(size_t i) const {  // i in 0..4
        return PLine(PPoint::coordinate_point(4, i), q[i]);
    }

    bool pairwise_disjoint() const {
        for (size_t i = 0; i < 5; ++i)
            for (size_t j = i + 1; j < 5; ++j)
                if (lines_meet(line(i), line(j))) return false;
        return true;
    }
};

// The 10x10 quadric-existence matrix over the mixed monomials z_a z_b
// (a < b, lexicographic): rows 0-4 put Q_i on the quadric (entries
// q_ia q_ib), rows 5-9 put Q_i on the tangent hyperplane at P_i (entry
// q_ib in column (i,b)). Square terms are absent because the quadric
// passes through the coordinate points.
template <typename T>
std::array<std::array<T, 10>, 10> rsb_matrix(const std::array<std::array<T, 5>, 5>& q,
                                             const T& zero) {
    // column index of the monomial z_a z_b, a < b
    auto col = [](size_t a, size_t b) {
        size_t c = 0;
        for (size_t i = 0; i < 5; ++i)
            for (size_t j = i + 1; j < 5; ++j) {
                if (i == a && j == b) return c;
                ++c;
            }
        return c;
    };
    std::array<std::array<T, 10>, 10> m;
    for (auto& row : m) row.fill(zero);
    for (size_t i = 0; i < 5; ++i) {
        for (size_t a = 0; a < 5; ++a)
            for (size_t b = a + 1; b < 5; ++b) m[i][col(a, b)] = q[i][a] * q[i][b];
        for (size_t b = 0; b < 5; ++b) {
            if (b == i) continue;
            m[5 + i][col(std::min(i, b), std::max(i, b))] = q[i][b];
        }
    }
    return m;
}

inline Mat rsb_F_matrix(const RsbInstance& inst) {
    std::array<std::array<Rat, 5>, 5> q;
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = 0; j < 5; ++j) q[i][j] = inst.q[i][j];
    auto rows = rsb_matrix<Rat>(q, Rat(0));
    Mat m(10, 10);
    for (size_t i = 0; i < 10; ++i)
        for (size_t j = 0; j < 10; ++j) m(i, j) = rows[i][j];
    return m;
}

// Zero iff some quadric contains all five lines.
inline Rat rsb_F(const RsbInstance& inst) { return det(rsb_F_matrix(inst)); }

// Raw coordinates of R_i = L_i ^ span(L_{i-1}, L_{i+1}), cubic in the Q
// coordinates. The span hyperplane comes from the 4x4 minors of the rows
// (P_{i-1}, Q_{i-1}, P_{i+1}, Q_{i+1}).
inline std::array<std::vector<Rat>, 5> rsb_points_raw(const RsbInstance& inst) {
    std::array<std::vector<Rat>, 5> r;
    for (size_t i = 0; i < 5; ++i) {
        size_t prev = (i + 4) % 5, next = (i + 1) % 5;
        std::vector<std::vector<Rat>> rows = {
            PPoint::coordinate_point(4, prev).coords(), inst.q[prev].coords(),
            PPoint::coordinate_point(4, next).coords(), inst.q[next].coords()};
        std::vector<Rat> h = span_hyperplane_raw(rows);
        r[i] = line_hyperplane_meet_raw(PPoint::coordinate_point(4, i).coords(),
                                        inst.q[i].coords(), h);
        bool all_zero = true;
        for (const Rat& x : r[i]) all_zero = all_zero && is_zero(x);
        if (all_zero)
            throw degeneracy_error("L_i lies inside the span of its neighbors");
    }
    return r;
}

inline std::array<PPoint, 5> rsb_points(const RsbInstance& inst) {
    auto raw = rsb_points_raw(inst);
    return {PPoint(raw[0]), PPoint(raw[1]), PPoint(raw[2]), PPoint(raw[3]), PPoint(raw[4])};
}

// Dependency determinant of the raw R_i coordinate rows; zero iff the
// five lines are of RSB type. Equals rsb_F identically.
inline Rat rsb_G(const RsbInstance& inst) {
    auto raw = rsb_points_raw(inst);
    Mat m(5, 5);
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = 0; j < 5; ++j) m(i, j) = raw[i][j];
    return det(m);
}

struct RsbVerdict {
    bool quadric_exists = false;
    bool rsb_type = false;
    Rat F, G;
};

// Frame normalization for five general lines: P_i = first defining point
// of L_i is sent to the i-th coordinate point. The residual diagonal
// freedom is fixed deterministically by completing the frame with
// P_1+...+P_5 (always independent) sent to [1:...:1]; vanishing of F and
// G does not depend on this completion.
inline RsbInstance rsb_normalize(const std::array<PLine, 5>& lines) {
    std::vector<PPoint> frame;
    std::vector<Rat> sum(5, Rat(0));
    for (const PLine& l : lines) {
        if (l.dim() != 4) throw dimension_error("RSB lines live in P^4");
        frame.push_back(l.a);
        for (size_t i = 0; i < 5; ++i) sum[i] += l.a[i];
    }
    frame.push_back(PPoint(sum));
    Mat m = frame_map(frame);
    std::array<PPoint, 5> q = {apply_map(m, lines[0].b), apply_map(m, lines[1].b),
                               apply_map(m, lines[2].b), apply_map(m, lines[3].b),
                               apply_map(m, lines[4].b)};
    return RsbInstance(q);
}

inline RsbVerdict rsb_check(const std::array<PLine, 5>& lines) {
    RsbInstance inst = rsb_normalize(lines);
    if (!inst.pairwise_disjoint()) throw hypothesis_error("the five lines are not pairwise disjoint");
    RsbVerdict v;
    v.F = rsb_F(inst);
    v.G = rsb_G(inst);
    v.quadric_exists = is_zero(v.F);
    v.rsb_type = is_zero(v.G);
    if (v.quadric_exists != v.rsb_type)
        throw hypothesis_error("quadric-existence and RSB-type witnesses disagree");
    return v;
}

// F and G as polynomials in the 25 coordinates of Q_1..Q_5 (point-major),
// with the symbolic proof F - G = 0.
inline IdentityProof rsb_identity_symbolic(size_t term_ceiling = kDefaultTermCeiling) {
    constexpr size_t nv = 25;
    std::array<std::array<MPoly, 5>, 5> q;
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = 0; j < 5; ++j) q[i][j] = MPoly::variable(nv, 5 * i + j);

    IdentityProof proof;
    proof.mode = "symbolic";

    auto frows = rsb_matrix<MPoly>(q, MPoly(nv));
    PolyMat fm(10, 10, nv);
    for (size_t i = 0; i < 10; ++i)
        for (size_t j = 0; j < 10; ++j) fm(i, j) = frows[i][j];
    proof.lhs = poly_det(fm, term_ceiling);

    auto unit = [&](size_t k) {
        std::array<MPoly, 5> e;
        e.fill(MPoly(nv));
        e[k] = MPoly::constant(nv, Rat(1));
        return e;
    };
    PolyMat gm(5, 5, nv);
    for (size_t i = 0; i < 5; ++i) {
        size_t prev = (i + 4) % 5, next = (i + 1) % 5;
        // hyperplane coefficients: signed 4x4 minors of (P_prev, Q_prev, P_next, Q_next)
        std::array<std::array<MPoly, 5>, 4> rows = {unit(prev), q[prev], unit(next), q[next]};
        std::array<MPoly, 5> h;
        for (size_t drop = 0; drop < 5; ++drop) {
            PolyMat minor(4, 4, nv);
            for (size_t r = 0; r < 4; ++r) {
                size_t cj = 0;
                for (size_t c = 0; c < 5; ++c) {
                    if (c == drop) continue;
                    minor(r, cj++) = rows[r][c];
                }
            }
            MPoly d = poly_det(minor, term_ceiling);
            h[drop] = (drop % 2 == 0) ? d : -d;
        }
        // R_i = (h . Q_i) P_i - (h . P_i) Q_i
        MPoly hq(nv), hp(nv);
        for (size_t k = 0; k < 5; ++k) hq += h[k] * q[i][k];
        hp = h[i];
        for (size_t k = 0; k < 5; ++k) {
            MPoly entry = -(hp * q[i][k]);
            if (k == i) entry += hq;
            gm(i, k) = entry;
        }
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

// Randomized check of F = G: evaluate both at `trials` seeded points with
// integer coordinates drawn from [1, 2^20]. A nonzero difference of degree
// 15 survives one trial with probability at most 15/2^20 (Schwartz-Zippel),
// so the reported failure bound is (15/2^20)^trials.
inline IdentityProof rsb_identity_pit(uint64_t trials, uint64_t seed) {
    if (trials == 0) throw bad_input("pit mode needs at least one trial");
    constexpr long kRange = 1L << 20;
    Rng rng(seed);
    IdentityProof proof;
    proof.mode = "pit";
    proof.trials = trials;
    proof.proved = true;
    for (uint64_t t = 0; t < trials; ++t) {
        std::array<PPoint, 5> q;
        for (size_t i = 0; i < 5; ++i) q[i] = PPoint(rng.int_vector(5, 1, kRange));
        RsbInstance inst(q);
        if (rsb_F(inst) != rsb_G(inst)) {
            proof.proved = false;
            break;
        }
    }
    proof.lhs_degree = 15;
    proof.rhs_degree = 15;
    proof.failure_bound = "(15/2^20)^" + std::to_string(trials);
    return proof;
}

// Reflections of the quadratic form x0 x1 + x2 x3 + x4^2 preserve it
// exactly; applying seeded products of reflections to rational isotropic
// planes yields genuine five-line configurations on the quadric.
namespace rsb_quadric {

inline Rat form(const std::vector<Rat>& x) {
    return x[0] * x[1] + x[2] * x[3] + x[4] * x[4];
}

// Polar form doubled: B2(x, y) = Q(x + y) - Q(x) - Q(y).
inline Rat polar2(const std::vector<Rat>& x, const std::vector<Rat>& y) {
    return x[0] * y[1] + x[1] * y[0] + x[2] * y[3] + x[3] * y[2] + Rat(2) * x[4] * y[4];
}

// sigma_w(x) = x - (B2(x, w) / Q(w)) w, defined for anisotropic w.
inline std::vector<Rat> reflect(const std::vector<Rat>& x, const std::vector<Rat>& w) {
    Rat qw = form(w);
    if (is_zero(qw)) throw degeneracy_error("reflection vector is isotropic");
    Rat f = polar2(x, w) / qw;
    std::vector<Rat> out(x.size());
    for (size_t i = 0; i < x.size(); ++i) out[i] = x[i] - f * w[i];
    return out;
}

}  // namespace rsb_quadric

// Five pairwise-disjoint lines on x0 x1 + x2 x3 + x4^2 = 0, generated by
// seeded rational isometries applied to the base isotropic planes
// span(e0,e2), span(e0,e3), span(e1,e2), span(e1,e3) (and repeats).
inline std::array<PLine, 5> rsb_sample_on_quadric(uint64_t seed) {
    Rng rng(seed);
    const std::array<std::pair<size_t, size_t>, 4> base = {
        std::pair<size_t, size_t>{0, 2}, {0, 3}, {1, 2}, {1, 3}};
    std::vector<PLine> lines;
    for (int attempt = 0; attempt < 256 && lines.size() < 5; ++attempt) {
        auto [ia, ib] = base[attempt % base.size()];
        std::vector<Rat> a(5), b(5);
        a[ia] = 1;
        b[ib] = 1;
        int nrefl = 2 + static_cast<int>(rng.below(2));
        for (int r = 0; r < nrefl; ++r) {
            std::vector<Rat> w = rng.int_vector(5, -9, 9);
            if (is_zero(rsb_quadric::form(w))) { --r; continue; }
            a = rsb_quadric::reflect(a, w);
            b = rsb_quadric::reflect(b, w);
        }
        PLine cand{PPoint(a), PPoint(b)};
        bool ok = true;
        for (const PLine& l : lines) ok = ok && !lines_meet(l, cand);
        if (!ok) continue;
        lines.push_back(cand);
        // keep only prefixes that still admit a frame normalization
        if (lines.size() == 5) {
            std::vector<PPoint> ps;
            for (const PLine& l : lines) ps.push_back(l.a);
            if (rank(coordinate_matrix(ps)) != 5) lines.pop_back();
        }
    }
    if (lines.size() < 5) throw resource_error("rsb_sample_on_quadric exhausted retries");
    return {lines[0], lines[1], lines[2], lines[3], lines[4]};
}

}  // namespace pgeom

#endif  // PGEOM_RSB_HPP
