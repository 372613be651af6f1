#ifndef MODALWB_OPERATOR_HPP_
#define MODALWB_OPERATOR_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "modalwb/algebra.hpp"
#include "modalwb/finite.hpp"

namespace modalwb {

struct SampleOptions {
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
};

enum class VerificationMode { Exhaustive, Randomized };

const char* to_string(VerificationMode mode);

// Outcome of checking normality and additivity.
struct Certificate {
  VerificationMode mode = VerificationMode::Exhaustive;
  std::size_t checked = 0;
  bool normal = false;
  bool additive = false;
  // A pair (x, y) with f(x + y) != f(x) + f(y), when one was found.
  std::optional<std::pair<Element, Element>> counterexample;

  bool ok() const { return normal && additive; }
};

using Rule = std::function<Element(const Element&)>;

// A normal additive self-map of a carrier. On powerset carriers the operator is
// stored by its atom table; on FC and interval carriers it is a rule. Copies
// share the same immutable body.
class ModalOperator {
 public:
  static ModalOperator tabulated(Carrier c, AtomTable table, std::string provenance = "table");
  static ModalOperator symbolic(Carrier c, Rule rule, std::string provenance);
  // Tabulates on powerset carriers after checking that the rule agrees with its
  // additive extension on every element; symbolic otherwise.
  static ModalOperator from_rule(Carrier c, const Rule& rule, std::string provenance);

  const Carrier& carrier() const;
  const std::string& provenance() const;
  bool is_tabulated() const;
  // Powerset carriers only.
  const AtomTable& table() const;
  Mask eval(Mask x) const;

  Element operator()(const Element& x) const;

  // Computed once on first use with default SampleOptions.
  const Certificate& certificate() const;
  Certificate certify(const SampleOptions& opts) const;

 private:
  struct Impl;
  explicit ModalOperator(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

inline Element apply(const ModalOperator& f, const Element& x) { return f(x); }

ModalOperator discriminator(const Carrier& c);
ModalOperator zero_op(const Carrier& c);
ModalOperator identity_op(const Carrier& c);
// f_x: 0 -> 0, y != 0 -> x. Throws DegenerateParameter for x = 0.
ModalOperator relativized(const Carrier& c, const Element& x);

ModalOperator op_join(const ModalOperator& f, const ModalOperator& g);
// (f o g)(x) = f(g(x)).
ModalOperator op_compose(const ModalOperator& f, const ModalOperator& g);
// n-fold composition; n = 0 throws DegenerateParameter.
ModalOperator iterate(const ModalOperator& f, int n);

// An evaluation wrapper that is not in general a modal operator.
struct OperatorView {
  Carrier carrier;
  std::string name;
  Rule rule;

  Element operator()(const Element& x) const { return rule(x); }
};

OperatorView view(const ModalOperator& f);
// -f(-x)
OperatorView dual(const ModalOperator& f);
OperatorView dual(const OperatorView& f);
// -f(x)
OperatorView star(const ModalOperator& f);
// f(-x)
OperatorView lowered_star(const ModalOperator& f);

// Pointwise comparison, exhaustive on powerset carriers and sampled otherwise.
struct Comparison {
  bool holds = true;
  bool exhaustive = true;
  std::size_t checked = 0;
  std::optional<Element> witness;
};

Comparison pointwise_leq(const ModalOperator& f, const ModalOperator& g, const SampleOptions& opts = {});
Comparison pointwise_equal(const ModalOperator& f, const ModalOperator& g,
                           const SampleOptions& opts = {});
Comparison pointwise_leq(const OperatorView& f, const OperatorView& g, const SampleOptions& opts = {});

// Extensional on powerset carriers; "not distinguished within k samples" otherwise.
bool same_operator(const ModalOperator& f, const ModalOperator& g, const SampleOptions& opts = {});

struct Axiom {
  enum class Kind { K, T, Four, B, NTransitive } kind = Kind::K;
  int n = 1;

  static Axiom k() { return {Kind::K, 1}; }
  static Axiom t() { return {Kind::T, 1}; }
  static Axiom four() { return {Kind::Four, 1}; }
  static Axiom b() { return {Kind::B, 1}; }
  static Axiom transitive(int n) { return {Kind::NTransitive, n}; }

  std::string name() const;
};

struct AxiomResult {
  bool holds = true;
  bool exhaustive = true;
  std::size_t checked = 0;
  std::optional<Element> witness;
};

// K is the modal certificate itself. T: x <= f(x). Four: f(f(x)) <= f(x).
// B: f(dual f(x)) <= x. NTransitive(n): f^{n+1}(x) <= f^n(x).
AxiomResult check_axiom(const ModalOperator& f, Axiom axiom, const SampleOptions& opts = {});
// T together with f(f(x)) = f(x).
AxiomResult check_closure(const ModalOperator& f, const SampleOptions& opts = {});

// Elements on which checks run: all of 2^n, or probes plus seeded samples.
std::vector<Element> test_surface(const Carrier& c, const SampleOptions& opts);

// "a -> a+b, b -> 0" for tabulated operators, the provenance otherwise.
std::string format_table(const ModalOperator& f);

// All operators on 2^n in lexicographic table order.
std::vector<ModalOperator> all_operators(const Carrier& c);

}  // namespace modalwb

#endif  // MODALWB_OPERATOR_HPP_
