#include <doctest.h>

#include <random>

#include "modalwb/error.hpp"
#include "modalwb/examples.hpp"
#include "modalwb/finite.hpp"
#include "modalwb/oracles.hpp"
#include "modalwb/semilattice.hpp"

using namespace modalwb;

namespace {

bool below(const ModalOperator& f, const ModalOperator& g) {
  for (std::size_t i = 0; i < f.table().size(); ++i) {
    if ((f.table()[i] & ~g.table()[i]) != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("pseudocomplements of f1, f0 and the identity") {
  Carrier c = Carrier::powerset(2);
  CHECK(dual_pseudocomplement(discriminator(c)).table() == zero_op(c).table());
  CHECK(dual_pseudocomplement(zero_op(c)).table() == discriminator(c).table());
  ModalOperator pc = dual_pseudocomplement(identity_op(c));
  CHECK(pc.table() == AtomTable{0b10, 0b01});
  CHECK(pc.eval(0b11) == 0b11);
  auto brute = oracle::least_annihilator(identity_op(c).table(), 2);
  REQUIRE(brute);
  CHECK(*brute == pc.table());
}

TEST_CASE("f v f^pc = f1 and f^pc is below every annihilator") {
  for (int n = 1; n <= 3; ++n) {
    Carrier c = Carrier::powerset(n);
    auto ops = all_operators(c);
    std::mt19937_64 rng(n);
    std::uniform_int_distribution<std::size_t> pick(0, ops.size() - 1);
    for (const auto& f : ops) {
      ModalOperator pc = dual_pseudocomplement(f);
      CHECK(pc.certificate().ok());
      CHECK(op_join(f, pc).table() == discriminator(c).table());
      if (n <= 2) {
        for (const auto& g : ops) {
          if (annihilates(f, g).holds) CHECK(below(pc, g));
        }
      }
    }
    if (n == 3) {
      for (int i = 0; i < 1000; ++i) {
        const auto& f = ops[pick(rng)];
        const auto& g = ops[pick(rng)];
        if (annihilates(f, g).holds) CHECK(below(dual_pseudocomplement(f), g));
      }
    }
  }
}

TEST_CASE("pseudocomplement is antitone and f^pc pc pc = f^pc") {
  Carrier c = Carrier::powerset(2);
  auto ops = all_operators(c);
  for (const auto& f : ops) {
    ModalOperator p1 = dual_pseudocomplement(f);
    ModalOperator p2 = dual_pseudocomplement(p1);
    CHECK(below(p2, f));
    CHECK(dual_pseudocomplement(p2).table() == p1.table());
    for (const auto& g : ops) {
      if (below(f, g)) CHECK(below(dual_pseudocomplement(g), p1));
    }
  }
}

TEST_CASE("pseudocomplement refuses symbolic carriers and large powersets") {
  CHECK_THROWS_AS(dual_pseudocomplement(jon2_f()), Error);
  try {
    dual_pseudocomplement(identity_op(Carrier::powerset(9)));
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
}

TEST_CASE("dual density") {
  Carrier c = Carrier::powerset(2);
  CHECK(is_dually_dense(zero_op(c)));
  CHECK_FALSE(is_dually_dense(discriminator(c)));
  CHECK_FALSE(is_dually_dense(identity_op(c)));
  for (const auto& f : all_operators(c)) {
    CHECK(is_dually_dense(f) == (dual_pseudocomplement(f).table() == discriminator(c).table()));
  }
}

TEST_CASE("open elements and the meet of M_c(B)") {
  Carrier c = Carrier::powerset(2);
  auto open = open_elements(c);
  CHECK(open.size() == 16);
  for (const auto& f : open) CHECK(dual_pseudocomplement(dual_pseudocomplement(f)).table() == f.table());
  CHECK(mc_meet(discriminator(c), discriminator(c)).table() == discriminator(c).table());
  for (const auto& f : open) {
    for (const auto& g : open) {
      ModalOperator m = mc_meet(f, g);
      CHECK(below(m, f));
      CHECK(below(m, g));
    }
  }
}

TEST_CASE("budgeted annihilator search") {
  auto jon2 = example_jon2();
  auto r = budgeted_annihilator_search(jon2.f, 12, {jon2.aux("g")});
  REQUIRE(r.found);
  CHECK(r.found->provenance() == jon2.aux("g").provenance());
  CHECK(r.minimality_disclaimed);

  auto exfc = example_exfc();
  auto s = budgeted_annihilator_search(exfc.f, 12, {exfc.aux("g1"), exfc.aux("g2")});
  REQUIRE(s.found);
  CHECK(s.found->provenance() == exfc.aux("g1").provenance());

  Carrier fc = Carrier::finite_cofinite();
  auto t = budgeted_annihilator_search(discriminator(fc), 12);
  REQUIRE(t.found);
  CHECK(t.found->provenance() == zero_op(fc).provenance());
  CHECK(t.candidates_tried == 1);
}

TEST_CASE("sup of relativizations is the sum") {
  Carrier c = Carrier::powerset(3);
  CHECK(semilattice_sup_via_relativizations(c, {mask_element(c, 0b001)}) == mask_element(c, 0b001));
  CHECK(semilattice_sup_via_relativizations(c, {mask_element(c, 1), mask_element(c, 2), mask_element(c, 4)}) == top(c));
  CHECK(semilattice_sup_via_relativizations(c, {mask_element(c, 0b001), mask_element(c, 0b011)}) == mask_element(c, 0b011));
  CHECK_THROWS_AS(semilattice_sup_via_relativizations(c, {}), Error);
}
