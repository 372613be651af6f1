#ifndef MODALWB_SEMILATTICE_HPP_
#define MODALWB_SEMILATTICE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "modalwb/operator.hpp"

namespace modalwb {

inline constexpr int kPseudocomplementMaxAtoms = 8;
inline constexpr int kOpenElementsMaxAtoms = 4;

// f(x) + g(x) = 1 for every x != 0, i.e. f v g = f^1. Exhaustive on powerset
// carriers, sampled otherwise.
Comparison annihilates(const ModalOperator& f, const ModalOperator& g, const SampleOptions& opts = {});

// The least g with f v g = f^1, computed on powerset carriers as
// x -> sum{-f(y) : 0 < y <= x}. Throws Unsupported on symbolic carriers and
// CapExceeded above kPseudocomplementMaxAtoms.
ModalOperator dual_pseudocomplement(const ModalOperator& f);

// The only annihilator of f is f^1.
bool is_dually_dense(const ModalOperator& f);

// {f^perp : f in M(B)} in table order; on a finite carrier this is all of M(B).
std::vector<ModalOperator> open_elements(const Carrier& c);

// (f^perp v g^perp)^perp
ModalOperator mc_meet(const ModalOperator& f, const ModalOperator& g);

struct AnnihilatorSearch {
  std::optional<ModalOperator> found;
  std::size_t candidates_tried = 0;
  Comparison check;
  // Always true: the search does not establish minimality.
  bool minimality_disclaimed = true;
};

// Tries f^0, then the caller's templates, then relativizations f_x over a grid
// of carrier elements (coarse to fine, at most `budget` levels), then f^1. The
// first candidate that annihilates f on the certificate sample wins.
AnnihilatorSearch budgeted_annihilator_search(const ModalOperator& f, std::size_t budget,
                                              const std::vector<ModalOperator>& templates = {},
                                              const SampleOptions& opts = {});

// Evaluates (sup of f_x over x in M) at an atom and checks it equals the sum
// of M. Powerset carriers; throws DegenerateParameter on empty M.
Element semilattice_sup_via_relativizations(const Carrier& c, const std::vector<Element>& m);

}  // namespace modalwb

#endif  // MODALWB_SEMILATTICE_HPP_
