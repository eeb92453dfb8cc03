#ifndef PGEOM_IDENTITY_HPP
#define PGEOM_IDENTITY_HPP

#include <cstdint>
#include <string>

#include "pgeom/mpoly.hpp"

namespace pgeom {

// Result of a polynomial identity verification, either by full symbolic
// expansion or by randomized evaluation (Schwartz-Zippel).
struct IdentityProof {
    MPoly lhs, rhs, difference;
    bool proved = false;
    std::string mode;  // "symbolic" or "pit"
    int lhs_degree = -1;
    int rhs_degree = -1;
    size_t lhs_terms = 0;
    size_t rhs_terms = 0;
    uint64_t trials = 0;
    std::string failure_bound;  // pit only: upper bound on the miss probability
};

}  // namespace pgeom

#endif  // PGEOM_IDENTITY_HPP
