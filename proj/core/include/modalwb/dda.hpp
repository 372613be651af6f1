#ifndef MODALWB_DDA_HPP_
#define MODALWB_DDA_HPP_

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modalwb/operator.hpp"

namespace modalwb {

inline constexpr int kClosedIdealMaxAtoms = 6;
inline constexpr int kMinimalPairsMaxAtoms = 3;

// f(x) + g(x) = 1 for all x != 0.
Comparison is_decomposing(const ModalOperator& f, const ModalOperator& g, const SampleOptions& opts = {});

enum class CompanionDecision { ProperExists, NoneExists, Unknown };

const char* to_string(CompanionDecision d);

struct CompanionReport {
  CompanionDecision decision = CompanionDecision::Unknown;
  std::optional<Element> x;
  std::optional<Element> z;
  std::optional<ModalOperator> companion;
  std::vector<std::string> certificates;
  std::size_t budget_used = 0;
};

// Powerset carriers: exact, atoms first, then x by increasing cardinality with
// z the meet of f(y) over 0 < y <= x. FC: atom witnesses {0..budget-1}.
// Intervals: dyadic pieces up to depth `budget`, z estimated from structured
// and sampled y; the result is then sample-certified. Unknown when the grid is
// exhausted.
CompanionReport proper_companion_decide(const ModalOperator& f, std::size_t budget = 12,
                                        const SampleOptions& opts = {});

// z = 1: g(y) = x on 0 != y <= x, 1 off x. Otherwise g(y) = -z on 0 < y <= x,
// 1 off x. Throws PreconditionFailed when z <= f(y) fails for a checked y.
ModalOperator construct_companion(const ModalOperator& f, const Element& x, const Element& z,
                                  const SampleOptions& opts = {});

struct MinimalPairsReport {
  std::vector<std::pair<ModalOperator, ModalOperator>> pairs;
  // Each listed pair is (f, g) with g = f^perp and f = g^perp, and conversely.
  bool matches_pseudocomplement_pairs = false;
  std::size_t decomposing_pairs = 0;
};

// Minimal elements of the decomposing pairs under the componentwise order.
// Decomposition is upward closed in each coordinate, so a decomposing pair is
// minimal iff no single bit can be removed from either table.
MinimalPairsReport minimal_pairs(const Carrier& c);

struct WmiaPair {
  ModalOperator f;
  OperatorView g_suff;
};

// g_suff(x) = -g(x). Throws PreconditionFailed unless (f, g) is decomposing.
WmiaPair to_wmia(const ModalOperator& f, const ModalOperator& g, const SampleOptions& opts = {});
// Inverse of to_wmia. Throws PreconditionFailed unless g_suff is a sufficiency
// operator below f off 0.
std::pair<ModalOperator, ModalOperator> from_wmia(const ModalOperator& f, const OperatorView& g_suff,
                                                  const SampleOptions& opts = {});

struct KmpaLine {
  std::string axiom;
  bool holds = true;
  std::optional<Element> witness;
};

struct KmpaReport {
  std::vector<KmpaLine> lines;  // u1, u2, u3
  Element u_at_zero;
  bool exhaustive = true;
};

// u(x) = dual f(x) * dual g(x); checks x <= u(x), u(u(x)) <= u(x), u(dual u(x)) <= x.
KmpaReport kmpa_check(const ModalOperator& f, const ModalOperator& g, const SampleOptions& opts = {});

struct CoverReport {
  bool covered = true;
  bool decomposing = true;
  bool agree = true;
  // The complex algebra of the two canonical relations is again decomposing.
  bool complex_algebra_decomposing = true;
  std::optional<std::pair<std::size_t, std::size_t>> missing;
};

CoverReport covering_check(const ModalOperator& f, const ModalOperator& g);

// For atoms a, b: a not <= f(b) implies a <= g(b); and <-R_f> h(b) <= <R_g> h(b).
// Throws PreconditionFailed unless (f, g) is decomposing.
bool ultrafilter_dichotomy_check(const ModalOperator& f, const ModalOperator& g);

enum class SiForm { General, K4, S4 };

const char* to_string(SiForm form);

struct SiReport {
  bool si = false;
  std::optional<Element> witness;  // a != 1 bounding every product
  SiForm form = SiForm::General;
};

SiReport rautenberg_si(const ModalOperator& f);

struct CongruenceReport {
  bool si = false;
  // Generators c of the closed ideals down(c), ascending and unique.
  std::vector<Mask> closed_ideals;
};

// Closed ideals generated by each element; SI iff a least nonzero one exists.
CongruenceReport congruence_ideal_oracle(const ModalOperator& f);

// Finite carriers. pc: exists x, z != 0 with z <= f(y) for all 0 < y <= x.
bool pc_holds(const ModalOperator& f);
// exists u, v != 1 with dual f(t) <= v for all u <= t < 1.
bool pc_prime_holds(const ModalOperator& f);
// For all x != 0 the meet of f(y), 0 < y <= x, is 0.
bool prodprop_holds(const ModalOperator& f);
// For all u != 1 the join of dual f(y), u <= y < 1, is 1.
bool prodprop_prime_holds(const ModalOperator& f);

enum class DensityVerdict { CriterionApplies, Inapplicable };

struct DensityOptions {
  std::size_t budget = 12;
  std::size_t samples = 200;
  std::uint64_t seed = 0;
  // Optional candidates t for a given x, tried before generic search.
  std::function<std::vector<Element>(const Element&)> preimage_hint;
};

struct DensityReport {
  DensityVerdict verdict = DensityVerdict::Inapplicable;
  int n = 1;
  bool transitive = false;
  bool dense = false;
  std::optional<Element> witness;
  std::string reason;
};

// Atomless carriers only: checks n-transitivity and density of f^n[B] on
// samples. CriterionApplies means no proper companion, modulo the sampling.
DensityReport no_companion_via_density(const ModalOperator& f, int n, const DensityOptions& opts = {});

const char* to_string(DensityVerdict v);

}  // namespace modalwb

#endif  // MODALWB_DDA_HPP_
