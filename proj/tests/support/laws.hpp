#ifndef MODALWB_TESTS_LAWS_HPP_
#define MODALWB_TESTS_LAWS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "modalwb/algebra.hpp"

namespace modalwb::laws {

struct LawReport {
  std::string suite;
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::string first_violation;

  bool ok() const { return violations == 0; }
};

// Boolean laws over every triple of elements of the n-atom powerset.
LawReport boolean_exhaustive(int n);
// Boolean laws over `count` seeded random triples.
LawReport boolean_random(const Carrier& c, std::size_t count, std::uint64_t seed);

// Join-semilattice and semiring laws of M(B) over every triple of operators
// on the n-atom powerset (n <= 2), or `count` random triples when count > 0.
LawReport operator_laws_powerset(int n, std::size_t count = 0, std::uint64_t seed = 0);
// The same laws for a pool of symbolic operators, each instance a random
// operator triple evaluated at a random element.
LawReport operator_laws_random(const Carrier& c, std::size_t count, std::uint64_t seed);

// Exhaustive at n = 2 plus 10^4 random instances per symbolic carrier.
std::vector<LawReport> standard_suites(std::uint64_t seed = 0);

}  // namespace modalwb::laws

#endif  // MODALWB_TESTS_LAWS_HPP_
