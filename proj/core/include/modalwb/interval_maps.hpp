#ifndef MODALWB_INTERVAL_MAPS_HPP_
#define MODALWB_INTERVAL_MAPS_HPP_

#include <map>
#include <mutex>

#include "modalwb/algebra.hpp"
#include "modalwb/rational.hpp"

namespace modalwb {

// An order isomorphism from (0,1) onto (p,1) over the rationals, for an
// irrational p in (0,1). Built along the Stern-Brocot tree: with h(0) = p and
// h(1) = 1, the mediant of a node's bounds L, R is sent to the simplest
// rational strictly between h(L) and h(R). Every rational of (p,1) is reached
// because the chosen values have strictly increasing tree depth along any
// branch. Values are memoized; the memo is the only mutable state and is
// guarded by a mutex. h(1) = 1 extends the map to the right end.
class SternBrocotIsomorphism {
 public:
  explicit SternBrocotIsomorphism(QuadraticNumber p);

  const QuadraticNumber& lower() const { return p_; }
  // Requires 0 < q <= 1.
  Rational operator()(const Rational& q) const;
  std::size_t memo_size() const;

 private:
  QuadraticNumber p_;
  mutable std::mutex mu_;
  mutable std::map<Rational, Rational> memo_;
};

// The Boolean isomorphism from down(domain) onto down(codomain) that is affine
// in the cumulative-length coordinate: the point at fraction u of the domain's
// total length goes to the point at fraction u of the codomain's.
class PiecewiseAffineMap {
 public:
  PiecewiseAffineMap(IntervalSet domain, IntervalSet codomain);

  const IntervalSet& domain() const { return domain_; }
  const IntervalSet& codomain() const { return codomain_; }

  // Requires x <= domain; throws ContractViolation otherwise.
  IntervalSet operator()(const IntervalSet& x) const;
  PiecewiseAffineMap inverse() const { return {codomain_, domain_}; }

 private:
  // Fraction of the domain's length lying below q, for q in the closure of a piece.
  Rational fraction(const Rational& q) const;
  IntervalSet image_of_range(const Rational& u0, const Rational& u1) const;

  IntervalSet domain_;
  IntervalSet codomain_;
  Rational domain_length_;
  Rational codomain_length_;
};

}  // namespace modalwb

#endif  // MODALWB_INTERVAL_MAPS_HPP_
