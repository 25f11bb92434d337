#ifndef RECIP_STURM_HPP
#define RECIP_STURM_HPP

#include <utility>
#include <vector>

#include "recip/poly.hpp"

namespace recip {

// Number of distinct real roots of p in (a, b], by Sturm's theorem.
int sturm_count(const Poly& p, const Rat& a, const Rat& b);

// Isolating intervals (lo, hi] for the distinct real roots of p, each
// refined by exact bisection until hi - lo < width.  Works on the
// squarefree part, so multiplicities are collapsed.
std::vector<std::pair<Rat, Rat>> isolate_real_roots(const Poly& p, const Rat& width);

// Distinct real roots as doubles, refined to about 1e-12.
std::vector<double> real_roots(const Poly& p);

// Rational roots of p with multiplicity, found by numeric isolation plus an
// exact small-denominator snap (denominators up to max_den are tried).
// Returns {roots, fully_split}: fully_split is true iff deg p equals the
// number of rational roots found, i.e. p splits into rational linear factors.
std::pair<std::vector<Rat>, bool> rational_roots(const Poly& p, int max_den = 64);

}  // namespace recip

#endif
