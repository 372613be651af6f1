#include "modalwb/operator.hpp"

#include <mutex>

#include "modalwb/sampling.hpp"

namespace modalwb {

const char* to_string(VerificationMode mode) {
  return mode == VerificationMode::Exhaustive ? "exhaustive" : "randomized";
}

struct ModalOperator::Impl {
  explicit Impl(Carrier c) : carrier(std::move(c)) {}

  Carrier carrier;
  std::string provenance;
  AtomTable table;
  Rule rule;

  mutable std::once_flag once;
  mutable Certificate cached;
};

namespace {

constexpr int kExhaustivePairAtoms = 8;

void check_same_carrier(const Carrier& x, const Carrier& y, const char* what) {
  if (!(x == y)) {
    throw Error(ErrorKind::CarrierMismatch,
                std::string(what) + ": carriers " + x.name() + " and " + y.name() + " differ");
  }
}

}  // namespace

ModalOperator ModalOperator::tabulated(Carrier c, AtomTable table, std::string provenance) {
  if (!c.is_finite()) throw Error(ErrorKind::Unsupported, "atom tables need a powerset carrier");
  if (table.size() != static_cast<std::size_t>(c.atom_count())) {
    throw Error(ErrorKind::CarrierMismatch, "atom table has " + std::to_string(table.size()) +
                                                " entries for " + c.name());
  }
  for (Mask v : table) {
    if ((v & ~c.top_mask()) != 0) throw Error(ErrorKind::CarrierMismatch, "table image outside carrier");
  }
  auto impl = std::make_shared<Impl>(std::move(c));
  impl->provenance = std::move(provenance);
  impl->table = std::move(table);
  return ModalOperator(std::move(impl));
}

ModalOperator ModalOperator::symbolic(Carrier c, Rule rule, std::string provenance) {
  auto impl = std::make_shared<Impl>(std::move(c));
  impl->provenance = std::move(provenance);
  impl->rule = std::move(rule);
  return ModalOperator(std::move(impl));
}

ModalOperator ModalOperator::from_rule(Carrier c, const Rule& rule, std::string provenance) {
  if (!c.is_finite()) return symbolic(std::move(c), rule, std::move(provenance));
  AtomTable table(static_cast<std::size_t>(c.atom_count()));
  for (std::size_t i = 0; i < table.size(); ++i) {
    table[i] = mask_of(rule(mask_element(c, Mask{1} << i)));
  }
  auto images = full_image(table);
  for (Mask x = 0; x < images.size(); ++x) {
    Mask direct = mask_of(rule(mask_element(c, x)));
    if (direct != images[x]) {
      throw Error(ErrorKind::ContractViolation,
                  provenance + " is not additive at " + format(c, mask_element(c, x)));
    }
  }
  return tabulated(std::move(c), std::move(table), std::move(provenance));
}

const Carrier& ModalOperator::carrier() const { return impl_->carrier; }
const std::string& ModalOperator::provenance() const { return impl_->provenance; }
bool ModalOperator::is_tabulated() const { return !impl_->rule; }

const AtomTable& ModalOperator::table() const {
  if (!is_tabulated()) throw Error(ErrorKind::Unsupported, "symbolic operator has no atom table");
  return impl_->table;
}

Mask ModalOperator::eval(Mask x) const { return eval_table(table(), x); }

Element ModalOperator::operator()(const Element& x) const {
  require_member(impl_->carrier, x);
  if (is_tabulated()) return mask_element(impl_->carrier, eval_table(impl_->table, mask_of(x)));
  Element y = impl_->rule(x);
  require_member(impl_->carrier, y);
  return y;
}

const Certificate& ModalOperator::certificate() const {
  std::call_once(impl_->once, [this] { impl_->cached = certify(SampleOptions{}); });
  return impl_->cached;
}

Certificate ModalOperator::certify(const SampleOptions& opts) const {
  Certificate cert;
  const Carrier& c = carrier();
  cert.normal = is_zero((*this)(bot(c)));
  cert.additive = true;
  if (c.is_finite() && c.atom_count() <= kExhaustivePairAtoms) {
    cert.mode = VerificationMode::Exhaustive;
    auto n = c.element_count();
    std::vector<Mask> images(n);
    for (Mask x = 0; x < n; ++x) images[x] = mask_of((*this)(mask_element(c, x)));
    for (Mask x = 0; x < n && cert.additive; ++x) {
      for (Mask y = x; y < n; ++y) {
        ++cert.checked;
        if (images[x | y] != (images[x] | images[y])) {
          cert.additive = false;
          cert.counterexample = {mask_element(c, x), mask_element(c, y)};
          break;
        }
      }
    }
    return cert;
  }
  cert.mode = VerificationMode::Randomized;
  ElementSampler sampler(c, opts.seed);
  auto probes = probe_elements(c);
  for (std::size_t i = 0; i < opts.samples + probes.size(); ++i) {
    Element x = i < probes.size() ? probes[i] : sampler.any();
    Element y = sampler.any();
    ++cert.checked;
    if (!((*this)(join(x, y)) == join((*this)(x), (*this)(y)))) {
      cert.additive = false;
      cert.counterexample = {x, y};
      break;
    }
  }
  return cert;
}

ModalOperator discriminator(const Carrier& c) {
  if (c.is_finite()) {
    return ModalOperator::tabulated(c, AtomTable(static_cast<std::size_t>(c.atom_count()), c.top_mask()),
                                    "discriminator");
  }
  Element one = top(c);
  Element zero = bot(c);
  return ModalOperator::symbolic(
      c, [one, zero](const Element& x) { return is_zero(x) ? zero : one; }, "discriminator");
}

ModalOperator zero_op(const Carrier& c) {
  if (c.is_finite()) {
    return ModalOperator::tabulated(c, AtomTable(static_cast<std::size_t>(c.atom_count()), 0), "zero");
  }
  Element zero = bot(c);
  return ModalOperator::symbolic(c, [zero](const Element&) { return zero; }, "zero");
}

ModalOperator identity_op(const Carrier& c) {
  if (c.is_finite()) {
    AtomTable table(static_cast<std::size_t>(c.atom_count()));
    for (std::size_t i = 0; i < table.size(); ++i) table[i] = Mask{1} << i;
    return ModalOperator::tabulated(c, std::move(table), "identity");
  }
  return ModalOperator::symbolic(c, [](const Element& x) { return x; }, "identity");
}

ModalOperator relativized(const Carrier& c, const Element& x) {
  require_member(c, x);
  if (is_zero(x)) throw Error(ErrorKind::DegenerateParameter, "relativization to 0");
  std::string name = "relativized(" + format(c, x) + ")";
  if (c.is_finite()) {
    return ModalOperator::tabulated(c, AtomTable(static_cast<std::size_t>(c.atom_count()), mask_of(x)),
                                    std::move(name));
  }
  Element zero = bot(c);
  return ModalOperator::symbolic(
      c, [x, zero](const Element& y) { return is_zero(y) ? zero : x; }, std::move(name));
}

ModalOperator op_join(const ModalOperator& f, const ModalOperator& g) {
  check_same_carrier(f.carrier(), g.carrier(), "op_join");
  std::string name = "(" + f.provenance() + " v " + g.provenance() + ")";
  if (f.is_tabulated() && g.is_tabulated()) {
    AtomTable table(f.table().size());
    for (std::size_t i = 0; i < table.size(); ++i) table[i] = f.table()[i] | g.table()[i];
    return ModalOperator::tabulated(f.carrier(), std::move(table), std::move(name));
  }
  return ModalOperator::symbolic(
      f.carrier(), [f, g](const Element& x) { return join(f(x), g(x)); }, std::move(name));
}

ModalOperator op_compose(const ModalOperator& f, const ModalOperator& g) {
  check_same_carrier(f.carrier(), g.carrier(), "op_compose");
  std::string name = "(" + f.provenance() + " o " + g.provenance() + ")";
  if (f.is_tabulated() && g.is_tabulated()) {
    AtomTable table(f.table().size());
    for (std::size_t i = 0; i < table.size(); ++i) table[i] = f.eval(g.table()[i]);
    return ModalOperator::tabulated(f.carrier(), std::move(table), std::move(name));
  }
  return ModalOperator::symbolic(
      f.carrier(), [f, g](const Element& x) { return f(g(x)); }, std::move(name));
}

ModalOperator iterate(const ModalOperator& f, int n) {
  if (n < 1) throw Error(ErrorKind::DegenerateParameter, "iteration count must be positive");
  if (f.is_tabulated()) {
    ModalOperator out = f;
    for (int i = 1; i < n; ++i) out = op_compose(f, out);
    return ModalOperator::tabulated(f.carrier(), out.table(), f.provenance() + "^" + std::to_string(n));
  }
  return ModalOperator::symbolic(
      f.carrier(),
      [f, n](const Element& x) {
        Element y = x;
        for (int i = 0; i < n; ++i) y = f(y);
        return y;
      },
      f.provenance() + "^" + std::to_string(n));
}

OperatorView view(const ModalOperator& f) {
  return {f.carrier(), f.provenance(), [f](const Element& x) { return f(x); }};
}

OperatorView dual(const ModalOperator& f) { return dual(view(f)); }

OperatorView dual(const OperatorView& f) {
  return {f.carrier, "dual(" + f.name + ")",
          [rule = f.rule](const Element& x) { return complement(rule(complement(x))); }};
}

OperatorView star(const ModalOperator& f) {
  return {f.carrier(), "star(" + f.provenance() + ")",
          [f](const Element& x) { return complement(f(x)); }};
}

OperatorView lowered_star(const ModalOperator& f) {
  return {f.carrier(), "lowered_star(" + f.provenance() + ")",
          [f](const Element& x) { return f(complement(x)); }};
}

std::vector<Element> test_surface(const Carrier& c, const SampleOptions& opts) {
  std::vector<Element> out;
  if (c.is_finite()) {
    out.reserve(c.element_count());
    for (Mask x = 0; x < c.element_count(); ++x) out.push_back(mask_element(c, x));
    return out;
  }
  out = probe_elements(c);
  out.push_back(bot(c));
  ElementSampler sampler(c, opts.seed);
  for (std::size_t i = 0; i < opts.samples; ++i) out.push_back(sampler.any());
  return out;
}

namespace {

template <class Pred>
Comparison compare_on_surface(const Carrier& c, const SampleOptions& opts, Pred pred) {
  Comparison out;
  out.exhaustive = c.is_finite();
  for (const auto& x : test_surface(c, opts)) {
    ++out.checked;
    if (!pred(x)) {
      out.holds = false;
      out.witness = x;
      break;
    }
  }
  return out;
}

}  // namespace

Comparison pointwise_leq(const ModalOperator& f, const ModalOperator& g, const SampleOptions& opts) {
  check_same_carrier(f.carrier(), g.carrier(), "pointwise_leq");
  if (f.is_tabulated() && g.is_tabulated()) {
    Comparison out;
    for (std::size_t i = 0; i < f.table().size(); ++i) {
      ++out.checked;
      if ((f.table()[i] & ~g.table()[i]) != 0) {
        out.holds = false;
        out.witness = mask_element(f.carrier(), Mask{1} << i);
        break;
      }
    }
    return out;
  }
  return compare_on_surface(f.carrier(), opts, [&](const Element& x) { return leq(f(x), g(x)); });
}

Comparison pointwise_leq(const OperatorView& f, const OperatorView& g, const SampleOptions& opts) {
  check_same_carrier(f.carrier, g.carrier, "pointwise_leq");
  return compare_on_surface(f.carrier, opts, [&](const Element& x) { return leq(f(x), g(x)); });
}

Comparison pointwise_equal(const ModalOperator& f, const ModalOperator& g, const SampleOptions& opts) {
  check_same_carrier(f.carrier(), g.carrier(), "pointwise_equal");
  if (f.is_tabulated() && g.is_tabulated()) {
    Comparison out;
    for (std::size_t i = 0; i < f.table().size(); ++i) {
      ++out.checked;
      if (f.table()[i] != g.table()[i]) {
        out.holds = false;
        out.witness = mask_element(f.carrier(), Mask{1} << i);
        break;
      }
    }
    return out;
  }
  return compare_on_surface(f.carrier(), opts, [&](const Element& x) { return f(x) == g(x); });
}

bool same_operator(const ModalOperator& f, const ModalOperator& g, const SampleOptions& opts) {
  return pointwise_equal(f, g, opts).holds;
}

std::string Axiom::name() const {
  switch (kind) {
    case Kind::K: return "K";
    case Kind::T: return "T";
    case Kind::Four: return "4";
    case Kind::B: return "B";
    case Kind::NTransitive: return "4^" + std::to_string(n);
  }
  return "?";
}

AxiomResult check_axiom(const ModalOperator& f, Axiom axiom, const SampleOptions& opts) {
  const Carrier& c = f.carrier();
  if (axiom.kind == Axiom::Kind::K) {
    Certificate cert = f.certify(opts);
    AxiomResult out;
    out.holds = cert.ok();
    out.exhaustive = cert.mode == VerificationMode::Exhaustive;
    out.checked = cert.checked;
    if (cert.counterexample) out.witness = cert.counterexample->first;
    return out;
  }
  if (axiom.kind == Axiom::Kind::NTransitive && axiom.n < 1) {
    throw Error(ErrorKind::DegenerateParameter, "n-transitivity needs n >= 1");
  }
  OperatorView d = dual(f);
  auto pred = [&](const Element& x) {
    switch (axiom.kind) {
      case Axiom::Kind::T: return leq(x, f(x));
      case Axiom::Kind::Four: {
        Element fx = f(x);
        return leq(f(fx), fx);
      }
      case Axiom::Kind::B: return leq(f(d(x)), x);
      case Axiom::Kind::NTransitive: {
        Element y = x;
        for (int i = 0; i < axiom.n; ++i) y = f(y);
        return leq(f(y), y);
      }
      case Axiom::Kind::K: break;
    }
    return true;
  };
  Comparison cmp = compare_on_surface(c, opts, pred);
  return {cmp.holds, cmp.exhaustive, cmp.checked, cmp.witness};
}

AxiomResult check_closure(const ModalOperator& f, const SampleOptions& opts) {
  Comparison cmp = compare_on_surface(f.carrier(), opts, [&](const Element& x) {
    Element fx = f(x);
    return leq(x, fx) && f(fx) == fx;
  });
  return {cmp.holds, cmp.exhaustive, cmp.checked, cmp.witness};
}

std::string format_table(const ModalOperator& f) {
  if (!f.is_tabulated()) return f.provenance();
  const Carrier& c = f.carrier();
  std::string s;
  for (std::size_t i = 0; i < f.table().size(); ++i) {
    if (i > 0) s += ", ";
    s += c.labels()[i] + " -> " + format(c, mask_element(c, f.table()[i]));
  }
  return s;
}

std::vector<ModalOperator> all_operators(const Carrier& c) {
  if (!c.is_finite()) throw Error(ErrorKind::Unsupported, "operator enumeration needs a powerset carrier");
  if (c.atom_count() > 4) throw Error(ErrorKind::CapExceeded, "operator enumeration is capped at 4 atoms");
  std::vector<ModalOperator> out;
  auto count = operator_count(c.atom_count());
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    out.push_back(ModalOperator::tabulated(c, table_from_index(c.atom_count(), i), "op#" + std::to_string(i)));
  }
  return out;
}

}  // namespace modalwb
