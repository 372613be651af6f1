#include <doctest.h>

#include "modalwb/dda.hpp"
#include "modalwb/error.hpp"
#include "modalwb/examples.hpp"
#include "modalwb/finite.hpp"
#include "modalwb/oracles.hpp"
#include "modalwb/semilattice.hpp"

using namespace modalwb;

namespace {

bool below(const AtomTable& f, const AtomTable& g) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if ((f[i] & ~g[i]) != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("decomposing pairs") {
  Carrier c = Carrier::powerset(2);
  for (const auto& f : all_operators(c)) {
    CHECK(is_decomposing(f, discriminator(c)).holds);
    CHECK(is_decomposing(zero_op(c), f).holds == (f.table() == discriminator(c).table()));
    for (const auto& g : all_operators(c)) CHECK(is_decomposing(f, g).holds == is_decomposing(g, f).holds);
  }
  auto r = is_decomposing(exfc_f(), exfc_g(1));
  CHECK(r.holds);
  CHECK_FALSE(r.exhaustive);
}

TEST_CASE("companions are closed upwards") {
  Carrier c = Carrier::powerset(2);
  auto ops = all_operators(c);
  for (const auto& f : ops) {
    for (const auto& g : ops) {
      if (!is_decomposing(f, g).holds) continue;
      for (const auto& h : ops) {
        if (below(g.table(), h.table())) CHECK(is_decomposing(f, h).holds);
      }
    }
  }
}

TEST_CASE("proper companion decision on finite carriers") {
  Carrier c = Carrier::powerset(3);
  CHECK(proper_companion_decide(zero_op(c)).decision == CompanionDecision::NoneExists);
  for (const auto& f : all_operators(c)) {
    auto r = proper_companion_decide(f);
    bool expected = oracle::has_proper_companion(f.table(), 3);
    CHECK((r.decision == CompanionDecision::ProperExists) == expected);
    if (r.decision != CompanionDecision::ProperExists) continue;
    // atom witness first: x is an atom with f(x) = z
    REQUIRE(r.x);
    CHECK(std::popcount(mask_of(*r.x)) == 1);
    CHECK(f(*r.x) == *r.z);
    REQUIRE(r.companion);
    CHECK(r.companion->table() != discriminator(c).table());
    CHECK(oracle::annihilates(f.table(), r.companion->table(), 3));
  }
}

TEST_CASE("proper companion of the FC example") {
  auto r = proper_companion_decide(exfc_f());
  CHECK(r.decision == CompanionDecision::ProperExists);
  REQUIRE(r.companion);
  CHECK(is_decomposing(exfc_f(), *r.companion).holds);
}

TEST_CASE("companion construction") {
  Carrier c = Carrier::powerset(2);
  const Element a = mask_element(c, 0b01);
  // z = 1: f the relativized discriminator on down(a), i.e. f(y) = 1 for y != 0 below a
  ModalOperator f = ModalOperator::tabulated(c, {0b11, 0b00});
  ModalOperator g1 = construct_companion(f, a, top(c));
  CHECK(g1.table() == AtomTable{0b01, 0b11});
  CHECK(is_decomposing(f, g1).holds);
  CHECK(g1.table() != discriminator(c).table());

  ModalOperator g2 = construct_companion(identity_op(c), a, a);
  CHECK(g2.table() == AtomTable{0b10, 0b11});
  CHECK(is_decomposing(identity_op(c), g2).holds);

  try {
    construct_companion(zero_op(c), a, a);
    FAIL("expected PreconditionFailed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PreconditionFailed);
  }
  CHECK_THROWS_AS(construct_companion(identity_op(c), bot(c), a), Error);
}

TEST_CASE("minimal pairs") {
  Carrier c = Carrier::powerset(2);
  auto r = minimal_pairs(c);
  CHECK(r.matches_pseudocomplement_pairs);
  auto has = [&](const AtomTable& f, const AtomTable& g) {
    for (const auto& [x, y] : r.pairs) {
      if (x.table() == f && y.table() == g) return true;
    }
    return false;
  };
  CHECK(has(zero_op(c).table(), discriminator(c).table()));
  CHECK(has(discriminator(c).table(), zero_op(c).table()));
  ModalOperator pc = dual_pseudocomplement(identity_op(c));
  CHECK(has(dual_pseudocomplement(pc).table(), pc.table()));
  // against the oracle's Pareto minima
  auto brute = oracle::minimal_decomposing_pairs(2);
  CHECK(brute.size() == r.pairs.size());
  for (const auto& [f, g] : brute) CHECK(has(f, g));
}

TEST_CASE("DDA to wMIA and back") {
  Carrier c = Carrier::powerset(2);
  auto w = to_wmia(discriminator(c), discriminator(c));
  CHECK(w.g_suff(bot(c)) == top(c));
  for (Mask x = 1; x < 4; ++x) CHECK(is_zero(w.g_suff(mask_element(c, x))));
  for (const auto& f : all_operators(c)) {
    for (const auto& g : all_operators(c)) {
      bool decomposing = is_decomposing(f, g).holds;
      // g* <= f on nonzero x iff (f, g) decomposing
      bool below_f = true;
      for (Mask x = 1; x < 4; ++x) {
        Element e = mask_element(c, x);
        below_f = below_f && leq(complement(g(e)), f(e));
      }
      CHECK(below_f == decomposing);
      if (!decomposing) {
        CHECK_THROWS_AS(to_wmia(f, g), Error);
        continue;
      }
      auto pair = to_wmia(f, g);
      auto back = from_wmia(pair.f, pair.g_suff);
      CHECK(back.first.table() == f.table());
      CHECK(back.second.table() == g.table());
    }
  }
}

TEST_CASE("kmpa check evaluates u literally") {
  Carrier c = Carrier::powerset(2);
  auto d = kmpa_check(discriminator(c), discriminator(c));
  REQUIRE(d.lines.size() == 3);
  CHECK(d.lines[0].axiom == "u1");
  CHECK_FALSE(d.lines[0].holds);
  CHECK(d.lines[0].witness == mask_element(c, 0b01));
  auto id = kmpa_check(identity_op(c), identity_op(c));
  for (const auto& line : id.lines) CHECK(line.holds);
  for (const auto& f : all_operators(c)) {
    auto k = kmpa_check(f, f);
    // u(0) = -f(1) * -f(1)
    CHECK(k.u_at_zero == complement(f(top(c))));
  }
}

TEST_CASE("covering relation") {
  Carrier c = Carrier::powerset(2);
  CHECK(covering_check(discriminator(c), zero_op(c)).covered);
  auto zz = covering_check(zero_op(c), zero_op(c));
  CHECK_FALSE(zz.covered);
  CHECK_FALSE(zz.decomposing);
  CHECK(zz.missing);
  for (const auto& f : all_operators(c)) {
    for (const auto& g : all_operators(c)) {
      auto r = covering_check(f, g);
      CHECK(r.agree);
      CHECK(r.covered == is_decomposing(f, g).holds);
      if (r.decomposing) CHECK(r.complex_algebra_decomposing);
    }
  }
}

TEST_CASE("ultrafilter dichotomy") {
  Carrier c = Carrier::powerset(2);
  CHECK(ultrafilter_dichotomy_check(discriminator(c), zero_op(c)));
  CHECK(ultrafilter_dichotomy_check(identity_op(c), dual_pseudocomplement(identity_op(c))));
  for (const auto& f : all_operators(c)) {
    for (const auto& g : all_operators(c)) {
      if (is_decomposing(f, g).holds) {
        CHECK(ultrafilter_dichotomy_check(f, g));
      } else {
        CHECK_THROWS_AS(ultrafilter_dichotomy_check(f, g), Error);
      }
    }
  }
}

TEST_CASE("Rautenberg criterion") {
  Carrier c = Carrier::powerset(2);
  auto d = rautenberg_si(discriminator(c));
  CHECK(d.si);
  REQUIRE(d.witness);
  CHECK_FALSE(is_top(*d.witness));
  CHECK_FALSE(rautenberg_si(identity_op(c)).si);
  auto cong = congruence_ideal_oracle(identity_op(c));
  CHECK_FALSE(cong.si);
  CHECK(cong.closed_ideals.size() == 4);
  for (int n = 1; n <= 3; ++n) {
    for (const auto& f : all_operators(Carrier::powerset(n))) {
      bool si = rautenberg_si(f).si;
      CHECK(si == congruence_ideal_oracle(f).si);
      CHECK(si == oracle::subdirectly_irreducible(f.table(), n));
      if (si && check_closure(f).holds) {
        CHECK(proper_companion_decide(f).decision == CompanionDecision::ProperExists);
      }
    }
  }
  CHECK(rautenberg_si(discriminator(c)).form == SiForm::S4);
}

TEST_CASE("(pc) and (pc') agree, as do (prodprop) and (prodprop')") {
  for (int n = 1; n <= 2; ++n) {
    for (const auto& f : all_operators(Carrier::powerset(n))) {
      CHECK(pc_holds(f) == pc_prime_holds(f));
      CHECK(prodprop_holds(f) == prodprop_prime_holds(f));
      CHECK(pc_holds(f) == (proper_companion_decide(f).decision == CompanionDecision::ProperExists));
    }
  }
}

TEST_CASE("density criterion") {
  auto uf = example_exuf();
  auto r = no_companion_via_density(uf.f, 1);
  CHECK(r.verdict == DensityVerdict::CriterionApplies);
  CHECK(r.transitive);
  CHECK(r.dense);
  CHECK(no_companion_via_density(discriminator(Carrier::powerset(2)), 1).verdict == DensityVerdict::Inapplicable);
}
