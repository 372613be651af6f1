#include "modalwb/examples.hpp"

#include <algorithm>
#include <random>

#include "modalwb/completion.hpp"
#include "modalwb/dda.hpp"
#include "modalwb/duality.hpp"
#include "modalwb/sampling.hpp"
#include "modalwb/semilattice.hpp"

namespace modalwb {

const ModalOperator& ExampleBundle::aux(const std::string& key) const {
  for (const auto& [name, op] : auxiliaries) {
    if (name == key) return op;
  }
  throw Error(ErrorKind::Name, "example " + name + " has no operator '" + key + "'");
}

std::vector<AssertionResult> ExampleBundle::run(const RunOptions& opts) const {
  std::vector<AssertionResult> out;
  for (const auto& a : assertions) {
    AssertionResult r{a.label, a.mode, false, ""};
    try {
      CheckOutcome o = a.check(opts);
      r.passed = o.passed;
      r.detail = std::move(o.detail);
    } catch (const std::exception& e) {
      r.detail = std::string("error: ") + e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

SampleOptions samples_for(const RunOptions& opts, std::size_t n = 1000) { return {n, opts.seed}; }

CheckOutcome outcome(bool passed, std::string detail = {}) { return {passed, std::move(detail)}; }

CheckOutcome from_comparison(const Carrier& c, const Comparison& cmp) {
  std::string detail = std::to_string(cmp.checked) + (cmp.exhaustive ? " elements" : " samples");
  if (!cmp.holds && cmp.witness) detail += "; fails at " + format(c, *cmp.witness);
  return {cmp.holds, detail};
}

CheckOutcome from_axiom(const Carrier& c, const AxiomResult& r) {
  std::string detail = std::to_string(r.checked) + (r.exhaustive ? " elements" : " samples");
  if (!r.holds && r.witness) detail += "; fails at " + format(c, *r.witness);
  return {r.holds, detail};
}

CheckOutcome certificate_outcome(const std::vector<ModalOperator>& ops, const RunOptions& opts) {
  std::size_t checked = 0;
  for (const auto& op : ops) {
    Certificate cert = op.certify(samples_for(opts));
    checked += cert.checked;
    if (!cert.ok()) {
      std::string detail = op.provenance() + " fails";
      if (cert.counterexample) {
        detail += " at (" + format(op.carrier(), cert.counterexample->first) + ", " +
                  format(op.carrier(), cert.counterexample->second) + ")";
      }
      return outcome(false, detail);
    }
  }
  return outcome(true, std::to_string(checked) + " pairs, " + std::to_string(ops.size()) + " operators");
}

template <class Fn>
CheckOutcome for_all_samples(const Carrier& c, const RunOptions& opts, Fn pred, bool skip_zero = true) {
  std::size_t checked = 0;
  for (const auto& x : test_surface(c, samples_for(opts))) {
    if (skip_zero && is_zero(x)) continue;
    ++checked;
    if (!pred(x)) return outcome(false, "fails at " + format(c, x));
  }
  return outcome(true, std::to_string(checked) + " samples");
}

Element fc(std::initializer_list<std::uint64_t> pts) { return FcSet::finite(pts); }
Element co(std::initializer_list<std::uint64_t> pts) { return FcSet::cofinite(pts); }

// Additive extension over finite sets of a map on points; cofinite arguments
// handled by the caller.
FcSet join_over_points(const FcSet& m, const std::function<FcSet(std::uint64_t)>& on_point) {
  FcSet out = FcSet::empty();
  for (auto n : m.points()) out = out.join(on_point(n));
  return out;
}

Rational dyadic_below(const QuadraticNumber& p, int bits) {
  // floor(p * 2^bits) / 2^bits, with p = (a + b sqrt d) / c
  Integer scale = Integer(1) << bits;
  QuadraticNumber scaled(p.a() * scale, p.b() * scale, p.c(), p.d());
  return Rational(scaled.floor(), scale);
}

}  // namespace

// --- FC(omega) operators ------------------------------------------------------

ModalOperator jon2_f() {
  return ModalOperator::symbolic(
      Carrier::finite_cofinite(),
      [](const Element& x) -> Element {
        const auto& m = std::get<FcSet>(x);
        std::vector<std::uint64_t> shifted;
        for (auto n : m.points()) shifted.push_back(n + 1);
        if (m.is_finite()) return FcSet::finite(std::move(shifted));
        shifted.push_back(0);
        return FcSet::cofinite(std::move(shifted));
      },
      "jon2");
}

ModalOperator jon2_g() {
  return ModalOperator::symbolic(
      Carrier::finite_cofinite(),
      [](const Element& x) -> Element {
        const auto& m = std::get<FcSet>(x);
        if (m.is_empty()) return FcSet::empty();
        if (auto n = m.as_singleton()) return FcSet::cofinite({*n + 1});
        return FcSet::omega();
      },
      "jon2.g");
}

ModalOperator exfc_f() {
  return ModalOperator::symbolic(
      Carrier::finite_cofinite(),
      [](const Element& x) -> Element {
        const auto& m = std::get<FcSet>(x);
        if (m.is_cofinite()) return FcSet::omega();
        return join_over_points(m, [](std::uint64_t n) {
          if (n == 0) return FcSet::singleton(0);
          if (n % 2 == 0) return FcSet::cofinite({0});
          return FcSet::cofinite({n});
        });
      },
      "exfc");
}

ModalOperator exfc_g(std::size_t i) {
  if (i == 0) throw Error(ErrorKind::DegenerateParameter, "g_i is indexed from 1");
  std::uint64_t n_i = 2 * static_cast<std::uint64_t>(i);
  return ModalOperator::symbolic(
      Carrier::finite_cofinite(),
      [n_i](const Element& x) -> Element {
        const auto& m = std::get<FcSet>(x);
        if (m.is_empty()) return FcSet::empty();
        if (m.contains(0)) return FcSet::omega();
        if (m.is_cofinite()) return FcSet::cofinite({n_i});
        return join_over_points(m, [](std::uint64_t n) {
          return n % 2 == 0 ? FcSet::singleton(0) : FcSet::singleton(n);
        });
      },
      "exfc.g" + std::to_string(i));
}

ModalOperator exfc_p() {
  return ModalOperator::symbolic(
      Carrier::finite_cofinite(),
      [](const Element& x) -> Element {
        const auto& m = std::get<FcSet>(x);
        // Left open by the construction; omega keeps p additive.
        if (m.is_cofinite()) return FcSet::omega();
        return join_over_points(m, [](std::uint64_t n) {
          return n % 2 == 0 ? FcSet::singleton(0) : FcSet::singleton(n);
        });
      },
      "exfc.p");
}

// --- jon2 -------------------------------------------------------------------

ExampleBundle example_jon2() {
  Carrier c = Carrier::finite_cofinite();
  ModalOperator f = jon2_f();
  ModalOperator g = jon2_g();
  ExampleBundle b{"jon2", "FC(omega): successor shift f with dual pseudocomplement g", c, f, {{"g", g}}, {}};
  auto& as = b.assertions;
  as.push_back({"f({1,3}) = {2,4}", "exact",
                [f](const RunOptions&) { return outcome(f(fc({1, 3})) == fc({2, 4})); }});
  as.push_back({"g({5}) = omega minus {6}", "exact",
                [g](const RunOptions&) { return outcome(g(fc({5})) == co({6})); }});
  as.push_back({"g({1,2}) = omega", "exact",
                [g](const RunOptions&) { return outcome(g(fc({1, 2})) == Element(FcSet::omega())); }});
  as.push_back({"f and g pass the modal certificate", "sampled",
                [f, g](const RunOptions& o) { return certificate_outcome({f, g}, o); }});
  as.push_back({"f v g = f^1", "sampled",
                [c, f, g](const RunOptions& o) { return from_comparison(c, annihilates(f, g, samples_for(o))); }});
  as.push_back({"g is below 1000 random annihilators of f from a template family", "sampled",
                [c, f, g](const RunOptions& o) {
                  std::mt19937_64 rng(o.seed);
                  for (int r = 0; r < 1000; ++r) {
                    std::uint64_t key = rng();
                    bool widen = (rng() & 3U) == 0;
                    // Per point n: h({n}) is either omega minus {n+1} or omega.
                    ModalOperator h = ModalOperator::symbolic(
                        c,
                        [key](const Element& x) -> Element {
                          const auto& m = std::get<FcSet>(x);
                          if (m.is_empty()) return FcSet::empty();
                          if (auto n = m.as_singleton()) {
                            std::uint64_t bit = std::mt19937_64(key ^ (*n * 0x9E3779B97F4A7C15ULL))() & 1U;
                            return bit ? FcSet::omega() : FcSet::cofinite({*n + 1});
                          }
                          return FcSet::omega();
                        },
                        "template");
                    if (widen) {
                      ElementSampler s(c, key);
                      h = op_join(h, relativized(c, s.nonzero()));
                    }
                    SampleOptions small{48, key};
                    if (!annihilates(f, h, small).holds) return outcome(false, "template " + std::to_string(r) + " is not an annihilator");
                    auto cmp = pointwise_leq(g, h, small);
                    if (!cmp.holds) return outcome(false, "g not below template " + std::to_string(r) + " at " + format(c, *cmp.witness));
                  }
                  return outcome(true, "1000 templates");
                }});
  as.push_back({"f^n(omega) = omega minus {0..n-1} for n = 1..64", "exact", [c, f](const RunOptions&) {
                  Element x = FcSet::omega();
                  std::vector<std::uint64_t> removed;
                  for (std::uint64_t n = 1; n <= 64; ++n) {
                    x = f(x);
                    removed.push_back(n - 1);
                    if (!(x == Element(FcSet::cofinite(removed)))) return outcome(false, "n = " + std::to_string(n));
                  }
                  return outcome(true, "64 iterates");
                }});
  as.push_back({"budgeted annihilator search returns g", "bounded search", [f, g](const RunOptions& o) {
                  auto r = budgeted_annihilator_search(f, o.budget, {g}, samples_for(o));
                  bool ok = r.found && r.found->provenance() == g.provenance();
                  return outcome(ok, r.found ? "found " + r.found->provenance() : "none within budget");
                }});
  as.push_back({"the iterates f^n(omega) have empty meet in the completion, not attained", "exact",
                [f](const RunOptions& o) {
                  FcRemovalChain chain{FcSet::omega(), PeriodicSubset::residues(1, {0})};
                  auto r = product_in_completion(chain, std::max<std::size_t>(o.budget, 64));
                  const auto* v = r.value ? std::get_if<PeriodicSubset>(&*r.value) : nullptr;
                  bool ok = r.verdict == CompletionVerdict::Value && v && v->is_empty() && !r.attained;
                  // The chain members are exactly the iterates.
                  Element x = FcSet::omega();
                  std::vector<std::uint64_t> removed;
                  for (std::uint64_t k = 1; k <= 16 && ok; ++k) {
                    x = f(x);
                    removed.push_back(k - 1);
                    ok = x == Element(FcSet::cofinite(removed));
                  }
                  return outcome(ok, r.description);
                }});
  return b;
}

// --- exfc -------------------------------------------------------------------

ExampleBundle example_exfc(std::size_t family_size) {
  if (family_size == 0) throw Error(ErrorKind::DegenerateParameter, "family size must be positive");
  Carrier c = Carrier::finite_cofinite();
  ModalOperator f = exfc_f();
  ModalOperator p = exfc_p();
  std::vector<ModalOperator> gs;
  for (std::size_t i = 1; i <= family_size; ++i) gs.push_back(exfc_g(i));
  ExampleBundle b{"exfc", "FC(omega): operator without dual pseudocomplement", c, f, {{"p", p}}, {}};
  for (std::size_t i = 0; i < gs.size(); ++i) b.auxiliaries.emplace_back("g" + std::to_string(i + 1), gs[i]);
  constexpr std::uint64_t kBound = 40;
  auto& as = b.assertions;
  as.push_back({"f({0}) = {0}, f({2}) = omega minus {0}, f({3}) = omega minus {3}", "exact",
                [f](const RunOptions&) {
                  return outcome(f(fc({0})) == fc({0}) && f(fc({2})) == co({0}) && f(fc({3})) == co({3}));
                }});
  as.push_back({"f, p and every g_i pass the modal certificate", "sampled", [f, p, gs](const RunOptions& o) {
                  std::vector<ModalOperator> ops{f, p};
                  ops.insert(ops.end(), gs.begin(), gs.end());
                  return certificate_outcome(ops, o);
                }});
  as.push_back({"g_i additive on each finite/cofinite and 0-membership case", "case split",
                [c, gs](const RunOptions& o) {
                  ElementSampler s(c, o.seed);
                  // Draw L and M from the four cases, 0 in or out, finite or cofinite.
                  auto draw = [&](int kind) {
                    FcSet x = std::get<FcSet>(s.nonzero());
                    bool want_cofinite = kind & 1;
                    bool want_zero = kind & 2;
                    if (x.is_cofinite() != want_cofinite) x = want_cofinite ? x.join(FcSet::cofinite({0, 1, 2, 3})) : x.meet(FcSet::finite({1, 2, 3, 4, 5, 6}));
                    if (x.is_empty()) x = FcSet::singleton(3);
                    if (want_zero) return x.join(FcSet::singleton(0));
                    return x.meet(FcSet::cofinite({0}));
                  };
                  std::size_t checked = 0;
                  for (const auto& g : gs) {
                    for (int kl = 0; kl < 4; ++kl) {
                      for (int km = 0; km < 4; ++km) {
                        for (int r = 0; r < 8; ++r) {
                          Element l = draw(kl);
                          Element m = draw(km);
                          ++checked;
                          if (!(g(join(l, m)) == join(g(l), g(m)))) {
                            return outcome(false, g.provenance() + " at " + format(c, l) + ", " + format(c, m));
                          }
                        }
                      }
                    }
                  }
                  return outcome(true, std::to_string(checked) + " pairs");
                }});
  as.push_back({"f v g_i = f^1 for every i", "sampled", [c, f, gs](const RunOptions& o) {
                  for (const auto& g : gs) {
                    auto cmp = annihilates(f, g, samples_for(o, 300));
                    if (!cmp.holds) return from_comparison(c, cmp);
                  }
                  return outcome(true, std::to_string(gs.size()) + " companions");
                }});
  as.push_back({"f v p = f^1", "sampled",
                [c, f, p](const RunOptions& o) { return from_comparison(c, annihilates(f, p, samples_for(o))); }});
  as.push_back({"p is not below g_i at omega minus {0}", "exact", [p, gs](const RunOptions&) {
                  Element m = co({0});
                  for (const auto& g : gs) {
                    if (leq(p(m), g(m))) return outcome(false, g.provenance());
                  }
                  return outcome(true, std::to_string(gs.size()) + " companions");
                }});
  as.push_back({"<-R>({F_m}) on principal ultrafilters: {F_n : n even, n > 0} for m = 0, empty for even m > 0, {F_m} for odd m",
                "exact (m, n < 40)", [f](const RunOptions&) {
                  auto frame = canonical_frame_fc(f, FcRelationSource::Printed);
                  for (std::uint64_t m = 0; m < kBound; ++m) {
                    std::vector<std::uint64_t> expect;
                    if (m == 0) {
                      for (std::uint64_t n = 2; n < kBound; n += 2) expect.push_back(n);
                    } else if (m % 2 == 1) {
                      expect.push_back(m);
                    }
                    if (frame.neg_poss_of_principal(m, kBound).first != expect) {
                      return outcome(false, "m = " + std::to_string(m));
                    }
                  }
                  return outcome(true, "U lies in <-R>({F_0}) under the same relation");
                }});
  as.push_back({"<-R>({F_2}) = empty", "exact", [f](const RunOptions&) {
                  auto frame = canonical_frame_fc(f, FcRelationSource::Printed);
                  auto [principal, has_u] = frame.neg_poss_of_principal(2, kBound);
                  return outcome(principal.empty() && !has_u);
                }});
  as.push_back({"U R F_n iff n != 0; F_n R U; U R U", "exact (n < 40)", [f](const RunOptions&) {
                  for (auto source : {FcRelationSource::Printed, FcRelationSource::Derived}) {
                    auto frame = canonical_frame_fc(f, source);
                    auto u = FcUltrafilter::u();
                    if (!frame.related(u, u)) return outcome(false, "U R U");
                    for (std::uint64_t n = 0; n < kBound; ++n) {
                      auto fn = FcUltrafilter::principal(n);
                      if (frame.related(u, fn) != (n != 0) || !frame.related(fn, u)) {
                        return outcome(false, "n = " + std::to_string(n));
                      }
                    }
                  }
                  return outcome(true);
                }});
  as.push_back({"the case table differs from a <= f(b) exactly at (F_0, F_m) for even m > 0 and (F_n, F_0) for odd n",
                "exact (n, m < 40)", [f](const RunOptions&) {
                  auto printed = canonical_frame_fc(f, FcRelationSource::Printed);
                  auto derived = canonical_frame_fc(f, FcRelationSource::Derived);
                  std::size_t diffs = 0;
                  for (std::uint64_t n = 0; n < kBound; ++n) {
                    for (std::uint64_t m = 0; m < kBound; ++m) {
                      auto x = FcUltrafilter::principal(n);
                      auto y = FcUltrafilter::principal(m);
                      bool expect_diff = (n == 0 && m != 0 && m % 2 == 0) || (m == 0 && n % 2 == 1);
                      bool diff = printed.related(x, y) != derived.related(x, y);
                      if (diff != expect_diff) {
                        return outcome(false, "(F" + std::to_string(n) + ", F" + std::to_string(m) + ")");
                      }
                      diffs += diff;
                    }
                  }
                  return outcome(true, std::to_string(diffs) + " differing pairs");
                }});
  as.push_back({"<-R_f>({F_m}) lies below h(g_i({m})) under a R_f b <=> a <= f(b)", "exact (m < 40)",
                [f, gs](const RunOptions&) {
                  auto frame = canonical_frame_fc(f, FcRelationSource::Derived);
                  for (const auto& g : gs) {
                    for (std::uint64_t m = 0; m < kBound; ++m) {
                      const FcSet gm = std::get<FcSet>(g(fc({m})));
                      auto [principal, has_u] = frame.neg_poss_of_principal(m, kBound);
                      for (auto n : principal) {
                        if (!gm.contains(n)) return outcome(false, g.provenance() + " at m = " + std::to_string(m));
                      }
                      if (has_u && !gm.is_cofinite()) return outcome(false, g.provenance() + " misses U at m = " + std::to_string(m));
                    }
                  }
                  return outcome(true);
                }});
  as.push_back({"f has a proper companion with an atom witness", "exact", [f](const RunOptions& o) {
                  auto r = proper_companion_decide(f, o.budget, samples_for(o));
                  bool ok = r.decision == CompanionDecision::ProperExists;
                  return outcome(ok, to_string(r.decision) + std::string(r.x ? " x = " + format(f.carrier(), *r.x) : ""));
                }});
  as.push_back({"budgeted annihilator search returns g_1", "bounded search", [f, gs](const RunOptions& o) {
                  auto r = budgeted_annihilator_search(f, o.budget, gs, samples_for(o, 300));
                  bool ok = r.found && r.found->provenance() == gs.front().provenance();
                  return outcome(ok, r.found ? "found " + r.found->provenance() : "none within budget");
                }});
  return b;
}

// --- exfree -----------------------------------------------------------------

ExampleBundle example_exfree() {
  Carrier c = Carrier::rational_interval();
  QuadraticNumber p(0, 1, 2, 2);  // sqrt(2)/2
  auto h = std::make_shared<SternBrocotIsomorphism>(p);
  ModalOperator f = ModalOperator::symbolic(
      c,
      [h](const Element& x) -> Element {
        const auto& set = std::get<IntervalSet>(x);
        if (set.is_empty()) return IntervalSet::empty();
        return IntervalSet::single(Rational(0), (*h)(set.last_endpoint()));
      },
      "exfree");
  ExampleBundle b{"exfree", "interval algebra: operator without dual pseudocomplement, p = sqrt(2)/2", c, f, {}, {}};
  auto companions = [p](const RunOptions& o) {
    std::vector<Rational> out;
    for (int bits = 1; bits <= static_cast<int>(o.budget); ++bits) {
      Rational s = dyadic_below(p, bits);
      if (s > 0 && (out.empty() || out.back() != s)) out.push_back(s);
    }
    return out;
  };
  auto& as = b.assertions;
  as.push_back({"f(0) = 0", "exact", [f, c](const RunOptions&) { return outcome(is_zero(f(bot(c)))); }});
  as.push_back({"h is strictly increasing on 1000 sampled pairs", "sampled", [h](const RunOptions& o) {
                  std::mt19937_64 rng(o.seed);
                  std::uniform_int_distribution<long long> den(2, 64);
                  auto draw = [&] {
                    long long d = den(rng);
                    long long n = std::uniform_int_distribution<long long>(1, d - 1)(rng);
                    return Rational(n, d);
                  };
                  for (int i = 0; i < 1000; ++i) {
                    Rational a = draw();
                    Rational b2 = draw();
                    if (a == b2) continue;
                    if ((a < b2) != ((*h)(a) < (*h)(b2))) return outcome(false, to_string(a) + ", " + to_string(b2));
                  }
                  return outcome(true, std::to_string(h->memo_size()) + " memoized values");
                }});
  as.push_back({"h(q) > p for sampled q", "sampled", [h, p](const RunOptions& o) {
                  std::mt19937_64 rng(o.seed + 1);
                  for (int i = 0; i < 1000; ++i) {
                    long long d = std::uniform_int_distribution<long long>(2, 64)(rng);
                    long long n = std::uniform_int_distribution<long long>(1, d - 1)(rng);
                    Rational q(n, d);
                    if (!(QuadraticNumber((*h)(q)) > p)) return outcome(false, to_string(q));
                  }
                  return outcome(true);
                }});
  as.push_back({"f passes the modal certificate (max law on last endpoints)", "sampled",
                [f](const RunOptions& o) { return certificate_outcome({f}, o); }});
  as.push_back({"f(x) + f_s(x) = [0,1) for x != 0 and dyadic s < p", "sampled",
                [c, f, companions](const RunOptions& o) {
                  auto ss = companions(o);
                  for (const auto& s : ss) {
                    Element tail = IntervalSet::single(s, Rational(1));
                    auto r = for_all_samples(c, RunOptions{o.seed, o.budget},
                                             [&](const Element& x) { return is_top(join(f(x), tail)); });
                    if (!r.passed) return outcome(false, "s = " + to_string(s) + ": " + r.detail);
                  }
                  return outcome(true, std::to_string(ss.size()) + " values of s");
                }});
  as.push_back({"each f_s is a companion of f", "sampled", [c, f, companions](const RunOptions& o) {
                  for (const auto& s : companions(o)) {
                    auto fs = relativized(c, IntervalSet::single(s, Rational(1)));
                    auto cmp = annihilates(f, fs, samples_for(o, 200));
                    if (!cmp.holds) return from_comparison(c, cmp);
                  }
                  return outcome(true);
                }});
  as.push_back({"the budget-found companion g satisfies -f(y) <= g(x) for 0 < y <= x", "sampled",
                [c, f](const RunOptions& o) {
                  auto r = budgeted_annihilator_search(f, o.budget, {}, samples_for(o, 300));
                  if (!r.found) return outcome(false, "no companion within budget");
                  const ModalOperator& g = *r.found;
                  ElementSampler s(c, o.seed);
                  for (int i = 0; i < 300; ++i) {
                    Element x = s.nonzero();
                    Element y = s.below(x);
                    if (!leq(complement(f(y)), g(x))) return outcome(false, "x = " + format(c, x) + ", y = " + format(c, y));
                  }
                  return outcome(true, "g = " + g.provenance());
                }});
  as.push_back({"the meet of [s,1) as s increases to p is [p,1) in the completion, not in the carrier", "exact",
                [p](const RunOptions& o) {
                  IntervalLimitChain chain{{{[p](std::size_t k) { return dyadic_below(p, static_cast<int>(k) + 1); }, p,
                                             [](std::size_t) { return Rational(1); }, QuadraticNumber(Rational(1))}}};
                  auto r = product_in_completion(chain, std::max<std::size_t>(o.budget, 24));
                  const auto* v = r.value ? std::get_if<std::vector<QuadraticInterval>>(&*r.value) : nullptr;
                  bool ok = r.verdict == CompletionVerdict::Value && !r.in_carrier && v && v->size() == 1 &&
                            v->front().lo == p && v->front().hi == QuadraticNumber(Rational(1));
                  return outcome(ok, r.description);
                }});
  as.push_back({"f has a proper companion (sampled witness search)", "sampled", [f](const RunOptions& o) {
                  auto r = proper_companion_decide(f, o.budget, samples_for(o, 200));
                  return outcome(r.decision == CompanionDecision::ProperExists, to_string(r.decision));
                }});
  return b;
}

// --- exuf -------------------------------------------------------------------

ExampleBundle example_exuf(UfIdeal ideal) {
  Carrier c = Carrier::rational_interval();
  bool away_from_one = ideal == UfIdeal::AwayFromOne;
  auto in_ideal = [away_from_one](const IntervalSet& x) {
    if (x.is_empty()) return true;
    return away_from_one ? x.last_endpoint() < 1 : x.parts().front().lo > 0;
  };
  ModalOperator f = ModalOperator::symbolic(
      c,
      [in_ideal](const Element& x) -> Element {
        const auto& set = std::get<IntervalSet>(x);
        return in_ideal(set) ? set : IntervalSet::unit();
      },
      "exuf");
  ExampleBundle b{"exuf",
                  std::string("interval algebra: identity on the dense ideal ") +
                      (away_from_one ? "{x : x <= [0,t), t < 1}" : "{x : x <= [t,1), t > 0}") + ", 1 elsewhere",
                  c, f, {}, {}};
  Element probe = away_from_one ? IntervalSet::single(0, Rational(1, 2)) : IntervalSet::single(Rational(1, 4), Rational(1, 2));
  auto& as = b.assertions;
  as.push_back({"f(" + format(c, probe) + ") = " + format(c, probe), "exact",
                [f, probe](const RunOptions&) { return outcome(f(probe) == probe); }});
  as.push_back({"f passes the modal certificate", "sampled", [f](const RunOptions& o) { return certificate_outcome({f}, o); }});
  as.push_back({"f is a closure operator", "sampled",
                [c, f](const RunOptions& o) { return from_axiom(c, check_closure(f, samples_for(o))); }});
  as.push_back({"T and 4 hold", "sampled", [c, f](const RunOptions& o) {
                  auto t = check_axiom(f, Axiom::t(), samples_for(o));
                  if (!t.holds) return from_axiom(c, t);
                  return from_axiom(c, check_axiom(f, Axiom::four(), samples_for(o)));
                }});
  as.push_back({"density criterion applies with n = 1", "sampled", [f](const RunOptions& o) {
                  auto r = no_companion_via_density(f, 1, DensityOptions{o.budget, 200, o.seed, {}});
                  return outcome(r.verdict == DensityVerdict::CriterionApplies, r.reason);
                }});
  as.push_back({"witness search finds no proper companion", "bounded search", [f](const RunOptions& o) {
                  auto r = proper_companion_decide(f, o.budget, samples_for(o, 200));
                  return outcome(r.decision != CompanionDecision::ProperExists,
                                 std::string(to_string(r.decision)) + " after " + std::to_string(r.budget_used) + " candidates");
                }});
  as.push_back({"the budget-found companion is f^1 on samples", "sampled", [c, f](const RunOptions& o) {
                  auto r = budgeted_annihilator_search(f, o.budget, {}, samples_for(o, 300));
                  if (!r.found) return outcome(false, "no companion within budget");
                  auto cmp = pointwise_equal(*r.found, discriminator(c), samples_for(o));
                  return outcome(cmp.holds, "g = " + r.found->provenance());
                }});
  return b;
}

// --- exnotdense -------------------------------------------------------------

ExampleBundle example_exnotdense(const IntervalSet& a) {
  Carrier c = Carrier::rational_interval();
  if (a.is_empty() || a == IntervalSet::unit()) {
    throw Error(ErrorKind::DegenerateParameter, "exnotdense needs 0 < a < 1");
  }
  PiecewiseAffineMap pi(a, a.complement());
  Element ea = a;
  ModalOperator f = ModalOperator::symbolic(
      c,
      [pi, a](const Element& x) -> Element {
        const auto& set = std::get<IntervalSet>(x);
        return set.join(pi(set.meet(a)));
      },
      "exnotdense");
  ExampleBundle b{"exnotdense", "interval algebra: f(x) = x + pi(x*a) with a = " + format(c, ea), c, f, {}, {}};
  auto& as = b.assertions;
  as.push_back({"f passes the modal certificate", "sampled", [f](const RunOptions& o) { return certificate_outcome({f}, o); }});
  as.push_back({"f is a closure operator", "sampled",
                [c, f](const RunOptions& o) { return from_axiom(c, check_closure(f, samples_for(o))); }});
  as.push_back({"no nonzero f(x) lies below a", "sampled", [c, f, ea](const RunOptions& o) {
                  return for_all_samples(c, o, [&](const Element& x) { return !leq(f(x), ea); });
                }});
  as.push_back({"f(x)*a = x*a", "sampled", [c, f, ea](const RunOptions& o) {
                  return for_all_samples(c, o, [&](const Element& x) { return meet(f(x), ea) == meet(x, ea); }, false);
                }});
  as.push_back({"pi(f(x)*a) = pi(x*a)", "sampled", [c, f, pi, a](const RunOptions& o) {
                  return for_all_samples(
                      c, o,
                      [&](const Element& x) {
                        const IntervalSet fx = std::get<IntervalSet>(f(x));
                        return pi(fx.meet(a)) == pi(std::get<IntervalSet>(x).meet(a));
                      },
                      false);
                }});
  as.push_back({"density criterion inapplicable: f[B] not dense", "sampled", [f](const RunOptions& o) {
                  auto r = no_companion_via_density(f, 1, DensityOptions{o.budget, 200, o.seed, {}});
                  bool ok = r.verdict == DensityVerdict::Inapplicable && r.transitive && !r.dense;
                  return outcome(ok, r.reason + (r.witness ? " at " + format(f.carrier(), *r.witness) : ""));
                }});
  as.push_back({"witness search finds no proper companion", "bounded search", [f](const RunOptions& o) {
                  auto r = proper_companion_decide(f, o.budget, samples_for(o, 200));
                  return outcome(r.decision != CompanionDecision::ProperExists,
                                 std::string(to_string(r.decision)) + " after " + std::to_string(r.budget_used) + " candidates");
                }});
  as.push_back({"meet of f(y) for y shrinking to the left end of a is 0 in the completion", "exact",
                [f, a](const RunOptions& o) {
                  const Interval& first = a.parts().front();
                  Rational width = first.hi - first.lo;
                  auto y = [first, width](std::size_t k) {
                    return IntervalSet::single(first.lo, first.lo + width / Rational(Integer(1) << (k + 1)));
                  };
                  auto image = [f, y](std::size_t k) { return std::get<IntervalSet>(f(y(k))); };
                  auto base = image(0).parts();
                  IntervalLimitChain chain;
                  for (std::size_t j = 0; j < base.size(); ++j) {
                    Rational lo = base[j].lo;
                    chain.pieces.push_back({[image, j](std::size_t k) { return image(k).parts().at(j).lo; }, lo,
                                            [image, j](std::size_t k) { return image(k).parts().at(j).hi; }, lo});
                  }
                  auto r = product_in_completion(chain, o.budget);
                  return outcome(r.verdict == CompletionVerdict::ZeroCertified, r.description);
                }});
  return b;
}

// --- exdensepc --------------------------------------------------------------

ExampleBundle example_exdensepc(const IntervalSet& a, const IntervalSet& b, const IntervalSet& c) {
  Carrier carrier = Carrier::rational_interval();
  if (a.is_empty() || b.is_empty() || c.is_empty()) throw Error(ErrorKind::DegenerateParameter, "a, b, c must be nonzero");
  if (!a.meet(b).is_empty() || !a.meet(c).is_empty() || !b.meet(c).is_empty()) {
    throw Error(ErrorKind::DegenerateParameter, "a, b, c must be pairwise disjoint");
  }
  if (!(a.join(b).join(c) == IntervalSet::unit())) throw Error(ErrorKind::DegenerateParameter, "a + b + c must be 1");
  PiecewiseAffineMap pi(b, a);
  PiecewiseAffineMap psi(c, a.complement());
  ModalOperator f = ModalOperator::symbolic(
      carrier,
      [a, b, c, pi, psi](const Element& x) -> Element {
        const auto& set = std::get<IntervalSet>(x);
        if (!set.meet(a).is_empty()) return IntervalSet::unit();
        return pi(set.meet(b)).join(psi(set.meet(c)));
      },
      "exdensepc");
  Element ea = a;
  ModalOperator g = ModalOperator::symbolic(
      carrier,
      [ea](const Element& x) -> Element {
        if (is_zero(x)) return IntervalSet::empty();
        return leq(x, ea) ? ea : Element(IntervalSet::unit());
      },
      "exdensepc.g");
  ExampleBundle bundle{"exdensepc",
                       "interval algebra: dense f[B] with a proper companion, a = " + format(carrier, ea) +
                           ", b = " + format(carrier, b) + ", c = " + format(carrier, c),
                       carrier, f, {{"g", g}}, {}};
  auto preimages = [a, pi, psi](const Element& x) {
    const auto& set = std::get<IntervalSet>(x);
    std::vector<Element> out;
    if (auto xa = set.meet(a); !xa.is_empty()) out.emplace_back(pi.inverse()(xa));
    if (auto xr = set.meet(a.complement()); !xr.is_empty()) out.emplace_back(psi.inverse()(xr));
    return out;
  };
  auto& as = bundle.assertions;
  as.push_back({"g([0,1)) = 1", "exact", [g](const RunOptions&) { return outcome(is_top(g(IntervalSet::unit()))); }});
  as.push_back({"f and g pass the modal certificate", "sampled",
                [f, g](const RunOptions& o) { return certificate_outcome({f, g}, o); }});
  as.push_back({"f(x) = pi(x) for x <= b and f(x) = psi(x) for x <= c", "sampled",
                [carrier, f, b, c, pi, psi](const RunOptions& o) {
                  return for_all_samples(
                      carrier, o,
                      [&](const Element& x) {
                        const auto& set = std::get<IntervalSet>(x);
                        auto xb = set.meet(b);
                        auto xc = set.meet(c);
                        return f(xb) == Element(pi(xb)) && f(xc) == Element(psi(xc));
                      },
                      false);
                }});
  as.push_back({"f[B] is dense", "sampled", [carrier, f, preimages](const RunOptions& o) {
                  return for_all_samples(carrier, o, [&](const Element& x) {
                    for (const auto& t : preimages(x)) {
                      Element v = f(t);
                      if (!is_zero(v) && leq(v, x)) return true;
                    }
                    return false;
                  });
                }});
  as.push_back({"g is a proper companion of f", "sampled", [carrier, f, g, ea](const RunOptions& o) {
                  auto cmp = annihilates(f, g, samples_for(o));
                  if (!cmp.holds) return from_comparison(carrier, cmp);
                  return outcome(!is_top(g(ea)), "g(a) = " + format(carrier, g(ea)));
                }});
  as.push_back({"density criterion inapplicable: f is not 1-transitive", "sampled",
                [f, preimages](const RunOptions& o) {
                  auto r = no_companion_via_density(f, 1, DensityOptions{o.budget, 200, o.seed, preimages});
                  bool ok = r.verdict == DensityVerdict::Inapplicable && !r.transitive;
                  return outcome(ok, r.reason + (r.witness ? " at " + format(f.carrier(), *r.witness) : ""));
                }});
  as.push_back({"witness search finds a proper companion below a", "sampled", [f, ea](const RunOptions& o) {
                  auto r = proper_companion_decide(f, o.budget, samples_for(o, 200));
                  bool ok = r.decision == CompanionDecision::ProperExists && r.x && leq(*r.x, ea);
                  return outcome(ok, std::string(to_string(r.decision)) +
                                         (r.x ? " x = " + format(f.carrier(), *r.x) + ", z = " + format(f.carrier(), *r.z) : ""));
                }});
  return bundle;
}

std::vector<std::string> example_names() { return {"jon2", "exfc", "exfree", "exuf", "exnotdense", "exdensepc"}; }

ExampleBundle example_by_name(const std::string& name) {
  if (name == "jon2") return example_jon2();
  if (name == "exfc") return example_exfc();
  if (name == "exfree") return example_exfree();
  if (name == "exuf") return example_exuf();
  if (name == "exnotdense") return example_exnotdense();
  if (name == "exdensepc") return example_exdensepc();
  throw Error(ErrorKind::Name, "unknown example '" + name + "'");
}

}  // namespace modalwb
