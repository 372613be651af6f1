#ifndef MODALWB_FINITE_HPP_
#define MODALWB_FINITE_HPP_

#include <bit>
#include <cstdint>
#include <vector>

#include "modalwb/algebra.hpp"

namespace modalwb {

// Atom tables: table[i] is the image of atom i. The image of x is the join of
// the images of the atoms below x.
using AtomTable = std::vector<Mask>;

inline Mask eval_table(const AtomTable& table, Mask x) {
  Mask out = 0;
  while (x != 0) {
    out |= table[static_cast<std::size_t>(std::countr_zero(x))];
    x &= x - 1;
  }
  return out;
}

// Images of all 2^n elements, indexed by mask.
inline std::vector<Mask> full_image(const AtomTable& table) {
  std::vector<Mask> out(std::size_t{1} << table.size(), 0);
  for (Mask x = 1; x < out.size(); ++x) {
    Mask low = x & (~x + 1);
    out[x] = out[x & (x - 1)] | table[static_cast<std::size_t>(std::countr_zero(low))];
  }
  return out;
}

// Calls fn(y) for every nonzero y below x.
template <class Fn>
void for_each_nonzero_submask(Mask x, Fn&& fn) {
  for (Mask y = x; y != 0; y = (y - 1) & x) fn(y);
}

inline int popcount(Mask x) { return std::popcount(x); }

// Number of operators on 2^n, i.e. (2^n)^n.
inline std::uint64_t operator_count(int n) { return std::uint64_t{1} << (n * n); }

// The operator with the given index in lexicographic order of atom tables,
// atom 0 being the most significant digit.
inline AtomTable table_from_index(int n, std::uint64_t index) {
  AtomTable table(static_cast<std::size_t>(n));
  Mask digit_mask = (Mask{1} << n) - 1;
  for (int i = n - 1; i >= 0; --i) {
    table[static_cast<std::size_t>(i)] = static_cast<Mask>(index) & digit_mask;
    index >>= n;
  }
  return table;
}

inline std::uint64_t index_from_table(const AtomTable& table) {
  std::uint64_t index = 0;
  int n = static_cast<int>(table.size());
  for (Mask v : table) index = (index << n) | v;
  return index;
}

}  // namespace modalwb

#endif  // MODALWB_FINITE_HPP_
