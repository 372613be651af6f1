#include "modalwb/semilattice.hpp"

#include <set>

#include "modalwb/sampling.hpp"

namespace modalwb {

Comparison annihilates(const ModalOperator& f, const ModalOperator& g, const SampleOptions& opts) {
  if (!(f.carrier() == g.carrier())) {
    throw Error(ErrorKind::CarrierMismatch, "operators live on different carriers");
  }
  const Carrier& c = f.carrier();
  Comparison out;
  if (f.is_tabulated() && g.is_tabulated()) {
    // Additivity reduces the check to atoms.
    for (std::size_t i = 0; i < f.table().size(); ++i) {
      ++out.checked;
      if ((f.table()[i] | g.table()[i]) != c.top_mask()) {
        out.holds = false;
        out.witness = mask_element(c, Mask{1} << i);
        break;
      }
    }
    return out;
  }
  out.exhaustive = false;
  for (const auto& x : test_surface(c, opts)) {
    if (is_zero(x)) continue;
    ++out.checked;
    if (!is_top(join(f(x), g(x)))) {
      out.holds = false;
      out.witness = x;
      break;
    }
  }
  return out;
}

ModalOperator dual_pseudocomplement(const ModalOperator& f) {
  const Carrier& c = f.carrier();
  if (!c.is_finite()) {
    throw Error(ErrorKind::Unsupported, "completeness not guaranteed; use budgeted search");
  }
  if (c.atom_count() > kPseudocomplementMaxAtoms) {
    throw Error(ErrorKind::CapExceeded, "pseudocomplement formula is capped at " +
                                            std::to_string(kPseudocomplementMaxAtoms) + " atoms");
  }
  auto images = full_image(f.table());
  Mask top_mask = c.top_mask();
  std::vector<Mask> formula(images.size(), 0);
  for (Mask x = 1; x < images.size(); ++x) {
    Mask sum = 0;
    for_each_nonzero_submask(x, [&](Mask y) { sum |= ~images[y] & top_mask; });
    formula[x] = sum;
  }
  Rule rule = [formula](const Element& x) {
    const auto& p = std::get<PowersetElement>(x);
    return Element(PowersetElement(formula[p.bits()], p.atom_count()));
  };
  // from_rule rejects the sums if they are not the additive extension of the
  // atom values, so the result is certified modal.
  return ModalOperator::from_rule(c, rule, "pc(" + f.provenance() + ")");
}

bool is_dually_dense(const ModalOperator& f) {
  return same_operator(dual_pseudocomplement(f), discriminator(f.carrier()));
}

std::vector<ModalOperator> open_elements(const Carrier& c) {
  if (!c.is_finite()) throw Error(ErrorKind::Unsupported, "open elements need a powerset carrier");
  if (c.atom_count() > kOpenElementsMaxAtoms) {
    throw Error(ErrorKind::CapExceeded,
                "open elements are capped at " + std::to_string(kOpenElementsMaxAtoms) + " atoms");
  }
  std::set<std::uint64_t> seen;
  for (const auto& f : all_operators(c)) seen.insert(index_from_table(dual_pseudocomplement(f).table()));
  std::vector<ModalOperator> out;
  out.reserve(seen.size());
  for (auto index : seen) {
    out.push_back(ModalOperator::tabulated(c, table_from_index(c.atom_count(), index),
                                           "op#" + std::to_string(index)));
  }
  return out;
}

ModalOperator mc_meet(const ModalOperator& f, const ModalOperator& g) {
  return dual_pseudocomplement(op_join(dual_pseudocomplement(f), dual_pseudocomplement(g)));
}

namespace {

std::vector<Element> relativization_grid(const Carrier& c, std::size_t budget) {
  std::vector<Element> out;
  switch (c.kind()) {
    case CarrierKind::FinitePowerset:
      for (Mask x = 1; x < c.element_count() && out.size() < (std::size_t{1} << 12); ++x) {
        out.push_back(mask_element(c, x));
      }
      break;
    case CarrierKind::FiniteCofinite: {
      std::vector<std::uint64_t> prefix;
      for (std::uint64_t k = 0; k < budget; ++k) {
        out.emplace_back(FcSet::singleton(k));
        prefix.push_back(k);
        out.emplace_back(FcSet::cofinite(prefix));
      }
      break;
    }
    case CarrierKind::RationalInterval: {
      // Tails [k/2^j, 1), smaller tails first within each level.
      std::set<Rational> seen;
      std::size_t levels = std::min<std::size_t>(budget, 6);
      for (std::size_t j = 1; j <= levels; ++j) {
        long long den = 1LL << j;
        for (long long k = den - 1; k >= 1; --k) {
          Rational s(k, den);
          if (!seen.insert(s).second) continue;
          out.emplace_back(IntervalSet::single(s, Rational(1)));
        }
      }
      break;
    }
  }
  return out;
}

}  // namespace

AnnihilatorSearch budgeted_annihilator_search(const ModalOperator& f, std::size_t budget,
                                              const std::vector<ModalOperator>& templates,
                                              const SampleOptions& opts) {
  const Carrier& c = f.carrier();
  std::vector<ModalOperator> candidates{zero_op(c)};
  candidates.insert(candidates.end(), templates.begin(), templates.end());
  for (const auto& x : relativization_grid(c, budget)) candidates.push_back(relativized(c, x));
  candidates.push_back(discriminator(c));

  // Probes first: most candidates fail on a small structured element.
  SampleOptions quick{std::min<std::size_t>(opts.samples, 32), opts.seed};
  AnnihilatorSearch out;
  for (const auto& g : candidates) {
    ++out.candidates_tried;
    if (!(g.carrier() == c)) throw Error(ErrorKind::CarrierMismatch, "template on another carrier");
    if (!annihilates(f, g, quick).holds) continue;
    Comparison full = annihilates(f, g, opts);
    if (!full.holds) continue;
    if (!g.certify(opts).ok()) continue;
    out.found = g;
    out.check = full;
    return out;
  }
  return out;
}

Element semilattice_sup_via_relativizations(const Carrier& c, const std::vector<Element>& m) {
  if (!c.is_finite()) throw Error(ErrorKind::Unsupported, "needs a powerset carrier");
  if (m.empty()) throw Error(ErrorKind::DegenerateParameter, "empty family");
  ModalOperator sup = relativized(c, m.front());
  Element sum = m.front();
  for (std::size_t i = 1; i < m.size(); ++i) {
    sup = op_join(sup, relativized(c, m[i]));
    sum = join(sum, m[i]);
  }
  Element value = sup(mask_element(c, 1));
  if (!(value == sum)) throw Error(ErrorKind::Internal, "sup of relativizations differs from the sum");
  return value;
}

}  // namespace modalwb
