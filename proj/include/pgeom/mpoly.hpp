#ifndef PGEOM_MPOLY_HPP
#define PGEOM_MPOLY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pgeom/matrix.hpp"
#include "pgeom/rational.hpp"

namespace pgeom {

using Expo = std::vector<uint16_t>;

inline unsigned expo_degree(const Expo& e) {
    return std::accumulate(e.begin(), e.end(), 0u);
}

// Graded reverse lexicographic order, largest term first when iterating the
// term map. a < b in grevlex iff deg a < deg b, or degrees equal and the
// last nonzero entry of a - b is positive.
struct GrevlexGreater {
    bool operator()(const Expo& a, const Expo& b) const {
        unsigned da = expo_degree(a), db = expo_degree(b);
        if (da != db) return da > db;
        for (size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    }
};

// Sparse multivariate polynomial over Rat. Zero coefficients are never
// stored; the zero polynomial has an empty term map, so equality is map
// equality.
class MPoly {
public:
    using TermMap = std::map<Expo, Rat, GrevlexGreater>;

    explicit MPoly(size_t nvars = 0) : nvars_(nvars) {}

    static MPoly constant(size_t nvars, const Rat& c) {
        MPoly p(nvars);
        if (!is_zero(c)) p.terms_[Expo(nvars, 0)] = c;
        return p;
    }

    static MPoly variable(size_t nvars, size_t idx, const Rat& coeff = Rat(1)) {
        MPoly p(nvars);
        if (idx >= nvars) throw dimension_error("variable index out of range");
        if (!is_zero(coeff)) {
            Expo e(nvars, 0);
            e[idx] = 1;
            p.terms_[e] = coeff;
        }
        return p;
    }

    static MPoly monomial(size_t nvars, const Expo& e, const Rat& coeff) {
        MPoly p(nvars);
        if (e.size() != nvars) throw dimension_error("exponent vector length mismatch");
        if (!is_zero(coeff)) p.terms_[e] = coeff;
        return p;
    }

    size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    bool is_zero_poly() const { return terms_.empty(); }

    bool operator==(const MPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    int total_degree() const {
        // -1 for the zero polynomial.
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(expo_degree(e)));
        return d;
    }

    // Degree in the variable block [lo, hi).
    int degree_in_block(size_t lo, size_t hi) const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int bd = 0;
            for (size_t i = lo; i < hi && i < e.size(); ++i) bd += e[i];
            d = std::max(d, bd);
        }
        return d;
    }

    void add_term(const Expo& e, const Rat& c) {
        if (is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    MPoly& operator+=(const MPoly& o) {
        check_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    MPoly& operator-=(const MPoly& o) {
        check_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    MPoly operator+(const MPoly& o) const { MPoly r = *this; r += o; return r; }
    MPoly operator-(const MPoly& o) const { MPoly r = *this; r -= o; return r; }

    MPoly operator-() const {
        MPoly r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    MPoly operator*(const MPoly& o) const {
        check_vars(o);
        MPoly r(nvars_);
        for (const auto& [ea, ca] : terms_) {
            for (const auto& [eb, cb] : o.terms_) {
                Expo e(nvars_);
                for (size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }

    MPoly operator*(const Rat& c) const {
        MPoly r(nvars_);
        if (!is_zero(c))
            for (const auto& [e, co] : terms_) r.terms_[e] = co * c;
        return r;
    }

    Rat eval(const std::vector<Rat>& point) const {
        if (point.size() != nvars_) throw dimension_error("evaluation point length mismatch");
        Rat acc(0);
        for (const auto& [e, c] : terms_) {
            Rat t = c;
            for (size_t i = 0; i < nvars_; ++i)
                for (uint16_t k = 0; k < e[i]; ++k) t *= point[i];
            acc += t;
        }
        return acc;
    }

    MPoly derivative(size_t var) const {
        if (var >= nvars_) throw dimension_error("derivative variable index out of range");
        MPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Expo d = e;
            d[var] -= 1;
            r.terms_[d] = c * Rat(static_cast<long>(e[var]));
        }
        return r;
    }

    // Archival dump: one term per line, `coeff e1 e2 ... en`, canonical order.
    void dump(std::ostream& os) const {
        for (const auto& [e, c] : terms_) {
            os << rat_str(c);
            for (uint16_t x : e) os << ' ' << x;
            os << '\n';
        }
    }

    std::string dump_str() const {
        std::ostringstream os;
        dump(os);
        return os.str();
    }

private:
    void check_vars(const MPoly& o) const {
        if (nvars_ != o.nvars_) throw dimension_error("variable count mismatch");
    }

    size_t nvars_;
    TermMap terms_;
};

// Matrix with polynomial entries; all entries share nvars.
class PolyMat {
public:
    PolyMat(size_t rows, size_t cols, size_t nvars)
        : rows_(rows), cols_(cols), nvars_(nvars), entries_(rows * cols, MPoly(nvars)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    size_t nvars() const { return nvars_; }

    MPoly& operator()(size_t i, size_t j) { return entries_[i * cols_ + j]; }
    const MPoly& operator()(size_t i, size_t j) const { return entries_[i * cols_ + j]; }

    Mat eval(const std::vector<Rat>& point) const {
        Mat m(rows_, cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).eval(point);
        return m;
    }

private:
    size_t rows_, cols_, nvars_;
    std::vector<MPoly> entries_;
};

constexpr size_t kDefaultTermCeiling = 50'000'000;

// Symbolic determinant by Laplace expansion with dynamic programming over
// column subsets: after processing the first k rows, one minor per k-subset
// of columns. No polynomial division. Aborts with resource_error when the
// total number of live terms passes the ceiling.
inline MPoly poly_det(const PolyMat& m, size_t term_ceiling = kDefaultTermCeiling) {
    if (m.rows() != m.cols()) throw dimension_error("determinant of non-square matrix");
    const size_t n = m.rows();
    if (n == 0) return MPoly::constant(m.nvars(), Rat(1));
    if (n > 20) throw resource_error("poly_det limited to 20x20");

    std::map<uint32_t, MPoly> layer;
    layer[0] = MPoly::constant(m.nvars(), Rat(1));
    for (size_t row = 0; row < n; ++row) {
        std::map<uint32_t, MPoly> next;
        size_t live_terms = 0;
        for (const auto& [mask, minor] : layer) {
            if (minor.is_zero_poly()) continue;
            // cofactor sign for expanding along the last row of the minor:
            // (-1)^(row + position of `col` among the used columns)
            int sign = (row % 2 == 0) ? 1 : -1;
            for (size_t col = 0; col < n; ++col) {
                const uint32_t bit = 1u << col;
                if (mask & bit) {
                    sign = -sign;
                    continue;
                }
                const MPoly& entry = m(row, col);
                if (entry.is_zero_poly()) continue;
                MPoly contrib = minor * entry;
                if (sign < 0) contrib = -contrib;
                auto it = next.find(mask | bit);
                if (it == next.end()) {
                    live_terms += contrib.term_count();
                    next.emplace(mask | bit, std::move(contrib));
                } else {
                    live_terms -= it->second.term_count();
                    it->second += contrib;
                    live_terms += it->second.term_count();
                }
                if (live_terms > term_ceiling)
                    throw resource_error("poly_det term ceiling exceeded");
            }
        }
        layer = std::move(next);
    }
    auto it = layer.find(n == 32 ? ~0u : ((1u << n) - 1));
    return it == layer.end() ? MPoly(m.nvars()) : it->second;
}

}  // namespace pgeom

#endif  // PGEOM_MPOLY_HPP
