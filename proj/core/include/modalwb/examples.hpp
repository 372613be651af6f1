#ifndef MODALWB_EXAMPLES_HPP_
#define MODALWB_EXAMPLES_HPP_

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "modalwb/interval_maps.hpp"
#include "modalwb/operator.hpp"

namespace modalwb {

struct RunOptions {
  std::uint64_t seed = 0;
  std::size_t budget = 12;
};

struct CheckOutcome {
  bool passed = false;
  std::string detail;
};

struct ExampleAssertion {
  std::string label;
  // "exact", "sampled", "bounded search", ...
  std::string mode;
  std::function<CheckOutcome(const RunOptions&)> check;
};

struct AssertionResult {
  std::string label;
  std::string mode;
  bool passed = false;
  std::string detail;
};

// A worked construction: carrier, the main operator f, named auxiliary
// operators and a list of machine-checked assertions.
struct ExampleBundle {
  std::string name;
  std::string summary;
  Carrier carrier;
  ModalOperator f;
  std::vector<std::pair<std::string, ModalOperator>> auxiliaries;
  std::vector<ExampleAssertion> assertions;

  const ModalOperator& aux(const std::string& key) const;
  // Assertions that throw are reported as failures with the error text.
  std::vector<AssertionResult> run(const RunOptions& opts) const;
};

// FC(omega): the successor shift and its dual pseudocomplement.
ExampleBundle example_jon2();
// FC(omega): an operator without dual pseudocomplement, with companions g_i for
// i = 1..family_size and the companion p.
ExampleBundle example_exfc(std::size_t family_size = 12);
// Interval algebra: f(x) = [0, h(last endpoint of x)) for h onto (p,1), p = sqrt(2)/2.
ExampleBundle example_exfree();

enum class UfIdeal {
  // {x : x <= [0,t) for some rational t < 1}
  AwayFromOne,
  // {x : x <= [t,1) for some rational t > 0}
  AwayFromZero,
};

// Interval algebra: identity on a dense ideal, 1 elsewhere.
ExampleBundle example_exuf(UfIdeal ideal = UfIdeal::AwayFromOne);
// Interval algebra: f(x) = x + pi(x*a), pi an isomorphism down(a) -> down(-a).
ExampleBundle example_exnotdense(const IntervalSet& a = IntervalSet::single(0, Rational(1, 2)));
// Interval algebra: f(x) = 1 if x*a != 0, else pi(x*b) + psi(x*c).
ExampleBundle example_exdensepc(const IntervalSet& a = IntervalSet::single(0, Rational(1, 3)),
                                const IntervalSet& b = IntervalSet::single(Rational(1, 3), Rational(2, 3)),
                                const IntervalSet& c = IntervalSet::single(Rational(2, 3), 1));

std::vector<std::string> example_names();
// Default parameters. Throws Name for unknown names.
ExampleBundle example_by_name(const std::string& name);

// The FC example's operators, also used by the DSL builtins.
ModalOperator exfc_f();
ModalOperator exfc_g(std::size_t i);
ModalOperator exfc_p();
ModalOperator jon2_f();
ModalOperator jon2_g();

}  // namespace modalwb

#endif  // MODALWB_EXAMPLES_HPP_
