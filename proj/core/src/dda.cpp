#include "modalwb/dda.hpp"

#include <algorithm>
#include <set>

#include "modalwb/duality.hpp"
#include "modalwb/sampling.hpp"
#include "modalwb/semilattice.hpp"

namespace modalwb {

const char* to_string(CompanionDecision d) {
  switch (d) {
    case CompanionDecision::ProperExists: return "ProperExists";
    case CompanionDecision::NoneExists: return "NoneExists";
    case CompanionDecision::Unknown: return "Unknown";
  }
  return "?";
}

const char* to_string(SiForm form) {
  switch (form) {
    case SiForm::General: return "general";
    case SiForm::K4: return "K4";
    case SiForm::S4: return "S4";
  }
  return "?";
}

const char* to_string(DensityVerdict v) {
  return v == DensityVerdict::CriterionApplies ? "CriterionApplies" : "Inapplicable";
}

Comparison is_decomposing(const ModalOperator& f, const ModalOperator& g, const SampleOptions& opts) {
  return annihilates(f, g, opts);
}

namespace {

void require_finite(const Carrier& c, const char* what) {
  if (!c.is_finite()) throw Error(ErrorKind::Unsupported, std::string(what) + " needs a powerset carrier");
}

constexpr int kCompanionCheckDepth = 5;

// Elements y with 0 < y <= x on which witness conditions are checked.
std::vector<Element> witness_surface(const Carrier& c, const Element& x, const SampleOptions& opts) {
  std::vector<Element> out = structured_below(x, kCompanionCheckDepth);
  if (c.is_finite()) return out;
  ElementSampler sampler(c, opts.seed);
  for (std::size_t i = 0; i < opts.samples; ++i) out.push_back(sampler.below(x));
  return out;
}

std::vector<Mask> masks_by_cardinality(const Carrier& c) {
  std::vector<Mask> out;
  for (Mask x = 1; x < c.element_count(); ++x) out.push_back(x);
  std::stable_sort(out.begin(), out.end(), [](Mask a, Mask b) { return popcount(a) < popcount(b); });
  return out;
}

}  // namespace

ModalOperator construct_companion(const ModalOperator& f, const Element& x, const Element& z,
                                  const SampleOptions& opts) {
  const Carrier& c = f.carrier();
  require_member(c, x);
  require_member(c, z);
  if (is_zero(x) || is_zero(z)) throw Error(ErrorKind::PreconditionFailed, "witnesses x and z must be nonzero");
  for (const auto& y : witness_surface(c, x, opts)) {
    if (!leq(z, f(y))) {
      throw Error(ErrorKind::PreconditionFailed,
                  "z is not below f(y) at y = " + format(c, y) + " (f(y) = " + format(c, f(y)) + ")");
    }
  }
  Element one = top(c);
  Element zero = bot(c);
  bool z_is_one = is_top(z);
  // With z = 1 and x = 1, (gc1) would be f^1 itself; f = f^1 there, so f^0 is a proper companion.
  Element inside = z_is_one ? (is_top(x) ? zero : x) : complement(z);
  Rule rule = [x, inside, one, zero](const Element& y) {
    if (is_zero(y)) return zero;
    return leq(y, x) ? inside : one;
  };
  std::string name = std::string(z_is_one ? "gc1" : "gc2") + "(" + format(c, x) + ";" + format(c, z) + ")";
  ModalOperator g = ModalOperator::from_rule(c, rule, name);
  if (!g.certify(opts).ok()) throw Error(ErrorKind::ContractViolation, name + " failed the modal certificate");
  if (auto check = is_decomposing(f, g, opts); !check.holds) {
    throw Error(ErrorKind::ContractViolation, name + " is not a companion at " + format(c, *check.witness));
  }
  return g;
}

CompanionReport proper_companion_decide(const ModalOperator& f, std::size_t budget, const SampleOptions& opts) {
  const Carrier& c = f.carrier();
  CompanionReport out;
  auto found = [&](const Element& x, const Element& z, const std::string& how) {
    out.x = x;
    out.z = z;
    out.companion = construct_companion(f, x, z, opts);
    out.decision = CompanionDecision::ProperExists;
    out.certificates.push_back(how);
  };
  switch (c.kind()) {
    case CarrierKind::FinitePowerset: {
      out.certificates.emplace_back("exhaustive");
      for (std::size_t i = 0; i < f.table().size(); ++i) {
        ++out.budget_used;
        if (f.table()[i] != 0) {
          Element a = mask_element(c, Mask{1} << i);
          found(a, f(a), "atom witness");
          return out;
        }
      }
      for (Mask x : masks_by_cardinality(c)) {
        ++out.budget_used;
        Mask z = c.top_mask();
        for_each_nonzero_submask(x, [&](Mask y) { z &= f.eval(y); });
        if (z != 0) {
          found(mask_element(c, x), mask_element(c, z), "meet witness");
          return out;
        }
      }
      out.decision = CompanionDecision::NoneExists;
      return out;
    }
    case CarrierKind::FiniteCofinite: {
      for (std::uint64_t k = 0; k < budget; ++k) {
        ++out.budget_used;
        Element a = FcSet::singleton(k);
        Element fa = f(a);
        if (!is_zero(fa)) {
          found(a, fa, "atom witness");
          return out;
        }
      }
      return out;
    }
    case CarrierKind::RationalInterval: {
      ElementSampler sampler(c, opts.seed);
      for (std::size_t depth = 1; depth <= budget; ++depth) {
        long long den = 1LL << depth;
        for (long long k = 0; k < den; ++k) {
          ++out.budget_used;
          Rational lo(k, den);
          Element x = IntervalSet::single(lo, Rational(k + 1, den));
          // Same family construct_companion checks, coarse splits first so
          // that z usually collapses to 0 after a few evaluations.
          Element z = top(c);
          for (int split = 0; split <= kCompanionCheckDepth && !is_zero(z); ++split) {
            long long parts = 1LL << split;
            Rational width = Rational(1, den * parts);
            for (long long j = 0; j < parts && !is_zero(z); ++j) {
              z = meet(z, f(IntervalSet::single(lo + width * j, lo + width * (j + 1))));
            }
          }
          for (int i = 0; i < 8 && !is_zero(z); ++i) z = meet(z, f(sampler.below(x)));
          if (is_zero(z)) continue;
          try {
            found(x, z, "sampled witness (" + std::to_string(opts.samples) + " samples)");
            return out;
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::PreconditionFailed) throw;
          }
        }
      }
      return out;
    }
  }
  return out;
}

MinimalPairsReport minimal_pairs(const Carrier& c) {
  require_finite(c, "minimal_pairs");
  if (c.atom_count() > kMinimalPairsMaxAtoms) {
    throw Error(ErrorKind::CapExceeded, "minimal pairs are capped at 3 atoms");
  }
  auto ops = all_operators(c);
  Mask full = c.top_mask();
  auto decomposing = [&](const AtomTable& f, const AtomTable& g) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if ((f[i] | g[i]) != full) return false;
    }
    return true;
  };
  auto single_step_below = [&](const AtomTable& f, const AtomTable& g) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (Mask bit = 1; bit <= full; bit <<= 1) {
        if (f[i] & bit) {
          AtomTable f2 = f;
          f2[i] &= ~bit;
          if (decomposing(f2, g)) return true;
        }
        if (g[i] & bit) {
          AtomTable g2 = g;
          g2[i] &= ~bit;
          if (decomposing(f, g2)) return true;
        }
      }
    }
    return false;
  };
  MinimalPairsReport out;
  std::set<std::pair<std::uint64_t, std::uint64_t>> minimal;
  for (const auto& f : ops) {
    for (const auto& g : ops) {
      if (!decomposing(f.table(), g.table())) continue;
      ++out.decomposing_pairs;
      if (single_step_below(f.table(), g.table())) continue;
      minimal.insert({index_from_table(f.table()), index_from_table(g.table())});
      out.pairs.emplace_back(f, g);
    }
  }
  std::set<std::pair<std::uint64_t, std::uint64_t>> characterized;
  for (const auto& f : ops) {
    auto g = dual_pseudocomplement(f);
    if (dual_pseudocomplement(g).table() == f.table()) {
      characterized.insert({index_from_table(f.table()), index_from_table(g.table())});
    }
  }
  out.matches_pseudocomplement_pairs = minimal == characterized;
  return out;
}

WmiaPair to_wmia(const ModalOperator& f, const ModalOperator& g, const SampleOptions& opts) {
  if (auto check = is_decomposing(f, g, opts); !check.holds) {
    throw Error(ErrorKind::PreconditionFailed,
                "pair is not decomposing at " + format(f.carrier(), *check.witness));
  }
  OperatorView s = star(g);
  s.name = "suff(" + g.provenance() + ")";
  return {f, s};
}

std::pair<ModalOperator, ModalOperator> from_wmia(const ModalOperator& f, const OperatorView& g_suff,
                                                  const SampleOptions& opts) {
  const Carrier& c = f.carrier();
  if (!(g_suff.carrier == c)) throw Error(ErrorKind::CarrierMismatch, "wMIA operators on different carriers");
  if (!is_top(g_suff(bot(c)))) throw Error(ErrorKind::PreconditionFailed, "sufficiency operator needs g(0) = 1");
  auto surface = test_surface(c, opts);
  ElementSampler sampler(c, opts.seed + 1);
  for (std::size_t i = 0; i < surface.size(); ++i) {
    const Element& x = surface[i];
    Element y = c.is_finite() ? surface[(i * 7 + 3) % surface.size()] : sampler.any();
    if (!(g_suff(join(x, y)) == meet(g_suff(x), g_suff(y)))) {
      throw Error(ErrorKind::PreconditionFailed, "g(x+y) != g(x)*g(y) at x = " + format(c, x));
    }
    if (!is_zero(x) && !leq(g_suff(x), f(x))) {
      throw Error(ErrorKind::PreconditionFailed, "g(x) is not below f(x) at x = " + format(c, x));
    }
  }
  Rule back = [g_suff](const Element& x) { return complement(g_suff(x)); };
  ModalOperator g = c.is_finite() ? ModalOperator::from_rule(c, back, "star(" + g_suff.name + ")")
                                  : ModalOperator::symbolic(c, back, "star(" + g_suff.name + ")");
  return {f, g};
}

KmpaReport kmpa_check(const ModalOperator& f, const ModalOperator& g, const SampleOptions& opts) {
  const Carrier& c = f.carrier();
  if (!(g.carrier() == c)) throw Error(ErrorKind::CarrierMismatch, "operators on different carriers");
  OperatorView fd = dual(f);
  OperatorView gd = dual(g);
  auto u = [&](const Element& x) { return meet(fd(x), gd(x)); };
  auto ud = [&](const Element& x) { return complement(u(complement(x))); };
  KmpaReport out{{{"u1", true, {}}, {"u2", true, {}}, {"u3", true, {}}}, u(bot(c)), c.is_finite()};
  for (const auto& x : test_surface(c, opts)) {
    Element ux = u(x);
    bool ok[3] = {leq(x, ux), leq(u(ux), ux), leq(u(ud(x)), x)};
    for (int i = 0; i < 3; ++i) {
      if (!ok[i] && out.lines[static_cast<std::size_t>(i)].holds) {
        out.lines[static_cast<std::size_t>(i)].holds = false;
        out.lines[static_cast<std::size_t>(i)].witness = x;
      }
    }
  }
  return out;
}

CoverReport covering_check(const ModalOperator& f, const ModalOperator& g) {
  require_finite(f.carrier(), "covering_check");
  if (!(g.carrier() == f.carrier())) throw Error(ErrorKind::CarrierMismatch, "operators on different carriers");
  Frame rf = canonical_frame(f);
  Frame rg = canonical_frame(g);
  CoverReport out;
  for (std::size_t a = 0; a < rf.size() && out.covered; ++a) {
    for (std::size_t b = 0; b < rf.size(); ++b) {
      if (!rf.related(a, b) && !rg.related(a, b)) {
        out.covered = false;
        out.missing = {a, b};
        break;
      }
    }
  }
  out.decomposing = is_decomposing(f, g).holds;
  out.agree = out.covered == out.decomposing;
  auto cf = complex_algebra(rf);
  auto cg = complex_algebra(rg);
  out.complex_algebra_decomposing = is_decomposing(cf.op, cg.op).holds;
  return out;
}

bool ultrafilter_dichotomy_check(const ModalOperator& f, const ModalOperator& g) {
  require_finite(f.carrier(), "ultrafilter_dichotomy_check");
  if (!is_decomposing(f, g).holds) throw Error(ErrorKind::PreconditionFailed, "pair is not decomposing");
  auto n = f.table().size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      bool in_f = (f.table()[b] >> a) & 1U;
      bool in_g = (g.table()[b] >> a) & 1U;
      if (!in_f && !in_g) return false;
    }
  }
  Frame rf = canonical_frame(f);
  Frame neg = rf.complement();
  Frame rg = canonical_frame(g);
  for (Mask y = 0; y < f.carrier().element_count(); ++y) {
    if ((poss(neg, y) & ~poss(rg, y)) != 0) return false;
  }
  return true;
}

SiReport rautenberg_si(const ModalOperator& f) {
  const Carrier& c = f.carrier();
  require_finite(c, "rautenberg_si");
  auto images = full_image(f.table());
  Mask full = c.top_mask();
  auto fd = [&](Mask b) { return ~images[~b & full] & full; };
  SiReport out;
  bool four = check_axiom(f, Axiom::four()).holds;
  bool t = four && check_axiom(f, Axiom::t()).holds;
  out.form = t ? SiForm::S4 : (four ? SiForm::K4 : SiForm::General);
  Mask j = 0;
  for (Mask b = 0; b < full; ++b) {
    Mask product = 0;
    switch (out.form) {
      case SiForm::S4: product = fd(b); break;
      case SiForm::K4: product = b & fd(b); break;
      case SiForm::General: {
        // The orbit b, fd(b), fd(fd(b)), ... is eventually periodic; the
        // product over the whole orbit is the stable value of the sequence.
        std::set<Mask> seen;
        product = full;
        for (Mask v = b; seen.insert(v).second; v = fd(v)) product &= v;
        break;
      }
    }
    j |= product;
  }
  out.si = j != full;
  if (out.si) out.witness = mask_element(c, j);
  return out;
}

CongruenceReport congruence_ideal_oracle(const ModalOperator& f) {
  const Carrier& c = f.carrier();
  require_finite(c, "congruence_ideal_oracle");
  if (c.atom_count() > kClosedIdealMaxAtoms) {
    throw Error(ErrorKind::CapExceeded, "closed-ideal enumeration is capped at 6 atoms");
  }
  std::set<Mask> ideals;
  for (Mask e = 0; e < c.element_count(); ++e) {
    Mask closure = e;
    for (;;) {
      Mask next = closure | f.eval(closure);
      if (next == closure) break;
      closure = next;
    }
    ideals.insert(closure);
  }
  CongruenceReport out;
  out.closed_ideals.assign(ideals.begin(), ideals.end());
  Mask least = c.top_mask();
  for (Mask i : ideals) {
    if (i != 0) least &= i;
  }
  // Closed ideals are closed under intersection, so a least nonzero one exists
  // iff the meet of all nonzero generators is itself nonzero.
  out.si = least != 0 && c.atom_count() > 0;
  return out;
}

bool pc_holds(const ModalOperator& f) {
  const Carrier& c = f.carrier();
  require_finite(c, "pc");
  auto images = full_image(f.table());
  for (Mask x = 1; x < images.size(); ++x) {
    for (Mask z = 1; z < images.size(); ++z) {
      bool all = true;
      for_each_nonzero_submask(x, [&](Mask y) { all = all && (z & ~images[y]) == 0; });
      if (all) return true;
    }
  }
  return false;
}

bool pc_prime_holds(const ModalOperator& f) {
  const Carrier& c = f.carrier();
  require_finite(c, "pc'");
  auto images = full_image(f.table());
  Mask full = c.top_mask();
  auto fd = [&](Mask t) { return ~images[~t & full] & full; };
  for (Mask u = 0; u < full; ++u) {
    for (Mask v = 0; v < full; ++v) {
      bool all = true;
      for (Mask t = 0; t < full && all; ++t) {
        if ((u & ~t) == 0) all = (fd(t) & ~v) == 0;
      }
      if (all) return true;
    }
  }
  return false;
}

bool prodprop_holds(const ModalOperator& f) {
  const Carrier& c = f.carrier();
  require_finite(c, "prodprop");
  auto images = full_image(f.table());
  for (Mask x = 1; x < images.size(); ++x) {
    Mask z = c.top_mask();
    for_each_nonzero_submask(x, [&](Mask y) { z &= images[y]; });
    if (z != 0) return false;
  }
  return true;
}

bool prodprop_prime_holds(const ModalOperator& f) {
  const Carrier& c = f.carrier();
  require_finite(c, "prodprop'");
  auto images = full_image(f.table());
  Mask full = c.top_mask();
  for (Mask u = 0; u < full; ++u) {
    Mask sum = 0;
    for (Mask y = 0; y < full; ++y) {
      if ((u & ~y) == 0) sum |= ~images[~y & full] & full;
    }
    if (sum != full) return false;
  }
  return true;
}

DensityReport no_companion_via_density(const ModalOperator& f, int n, const DensityOptions& opts) {
  const Carrier& c = f.carrier();
  DensityReport out;
  out.n = n;
  if (n < 1) throw Error(ErrorKind::DegenerateParameter, "n must be positive");
  if (!c.is_atomless()) {
    out.reason = "carrier has atoms";
    return out;
  }
  SampleOptions sample{opts.samples, opts.seed};
  AxiomResult trans = check_axiom(f, Axiom::transitive(n), sample);
  out.transitive = trans.holds;
  if (!trans.holds) {
    out.witness = trans.witness;
    out.reason = "not " + std::to_string(n) + "-transitive";
    return out;
  }
  ModalOperator fn = iterate(f, n);
  ElementSampler sampler(c, opts.seed);
  auto targets = probe_elements(c);
  for (std::size_t i = 0; i < opts.samples; ++i) targets.push_back(sampler.nonzero());
  for (const auto& x : targets) {
    if (is_zero(x)) continue;
    std::vector<Element> candidates;
    if (opts.preimage_hint) candidates = opts.preimage_hint(x);
    for (const auto& t : structured_below(x, 2)) candidates.push_back(t);
    for (std::size_t k = 0; k < opts.budget; ++k) candidates.push_back(sampler.below(x));
    bool hit = std::any_of(candidates.begin(), candidates.end(), [&](const Element& t) {
      Element v = fn(t);
      return !is_zero(v) && leq(v, x);
    });
    if (!hit) {
      out.witness = x;
      out.reason = "no t with 0 < f^" + std::to_string(n) + "(t) <= x found";
      return out;
    }
  }
  out.dense = true;
  out.verdict = DensityVerdict::CriterionApplies;
  out.reason = std::to_string(n) + "-transitive and f^" + std::to_string(n) + "[B] dense on samples";
  return out;
}

}  // namespace modalwb
