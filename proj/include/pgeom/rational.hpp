#ifndef PGEOM_RATIONAL_HPP
#define PGEOM_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace pgeom {

// Exact rational scalar. GMP keeps the canonical form (reduced fraction,
// positive denominator, 0 = 0/1), so equality is plain comparison.
using Rat = mpq_class;
using Int = mpz_class;

struct bad_input : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct dimension_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct hypothesis_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct degeneracy_error : hypothesis_error {
    using hypothesis_error::hypothesis_error;
};

struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw bad_input("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "n" or "n/d" with arbitrary-precision integers.
inline Rat rat_parse(const std::string& s) {
    if (s.empty()) throw bad_input("empty rational literal");
    try {
        Rat r(s);
        r.canonicalize();
        if (r.get_den() == 0) throw bad_input("zero denominator: " + s);
        return r;
    } catch (const std::invalid_argument&) {
        throw bad_input("malformed rational literal: " + s);
    }
}

inline std::string rat_str(const Rat& r) {
    return r.get_str();
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

// Scales a rational vector to coprime integers with positive leading sign.
// Throws on the zero vector.
inline std::vector<Rat> primitive_vector(const std::vector<Rat>& v) {
    Int den_lcm = 1;
    for (const Rat& x : v) den_lcm = lcm(den_lcm, x.get_den());
    Int g = 0;
    std::vector<Int> scaled(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        scaled[i] = v[i].get_num() * (den_lcm / v[i].get_den());
        g = gcd(g, scaled[i]);
    }
    if (g == 0) throw bad_input("zero vector has no primitive representative");
    int lead = 0;
    for (const Int& x : scaled) {
        if (x != 0) { lead = sgn(x); break; }
    }
    if (lead < 0) g = -g;
    std::vector<Rat> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(scaled[i] / g);
    return out;
}

}  // namespace pgeom

#endif  // PGEOM_RATIONAL_HPP
