#include <doctest.h>

#include "modalwb/error.hpp"
#include "modalwb/examples.hpp"
#include "modalwb/finite.hpp"
#include "modalwb/operator.hpp"
#include "modalwb/sampling.hpp"

using namespace modalwb;

namespace {

bool same_table(const ModalOperator& f, const ModalOperator& g) { return f.table() == g.table(); }

ErrorKind kind_of_throw(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

}  // namespace

TEST_CASE("f0 sends everything to 0, f1 sends nonzero elements to 1") {
  for (Carrier c : {Carrier::powerset(3), Carrier::finite_cofinite(), Carrier::rational_interval()}) {
    ElementSampler s(c, 1);
    for (int i = 0; i < 100; ++i) {
      Element x = s.nonzero();
      CHECK(is_zero(zero_op(c)(x)));
      CHECK(is_top(discriminator(c)(x)));
    }
    CHECK(is_zero(discriminator(c)(bot(c))));
  }
}

TEST_CASE("shift operator of the FC example: {1,3} -> {2,4}") {
  CHECK(jon2_f()(FcSet::finite({1, 3})) == Element(FcSet::finite({2, 4})));
}

TEST_CASE("relativizations") {
  Carrier c = Carrier::powerset(3);
  CHECK(same_table(relativized(c, top(c)), discriminator(c)));
  for (Mask x = 1; x <= c.top_mask(); ++x) {
    ModalOperator fx = relativized(c, mask_element(c, x));
    CHECK(fx.certificate().ok());
    for (Mask y = 1; y <= c.top_mask(); ++y) CHECK(fx.eval(y) == x);
    for (Mask z = 1; z <= c.top_mask(); ++z) {
      CHECK(same_table(op_join(fx, relativized(c, mask_element(c, z))), relativized(c, mask_element(c, x | z))));
    }
  }
  CHECK(kind_of_throw([&] { relativized(c, bot(c)); }) == ErrorKind::DegenerateParameter);
  CHECK(kind_of_throw([] { relativized(Carrier::finite_cofinite(), FcSet::empty()); }) ==
        ErrorKind::DegenerateParameter);
}

TEST_CASE("join and compose units on powerset(2)") {
  Carrier c = Carrier::powerset(2);
  for (const auto& f : all_operators(c)) {
    CHECK(same_table(op_join(zero_op(c), f), f));
    CHECK(same_table(op_join(f, discriminator(c)), discriminator(c)));
    CHECK(same_table(op_compose(identity_op(c), f), f));
    CHECK(same_table(op_compose(f, identity_op(c)), f));
  }
}

TEST_CASE("operators refuse mixed carriers") {
  CHECK(kind_of_throw([] { op_join(zero_op(Carrier::powerset(2)), zero_op(Carrier::powerset(3))); }) ==
        ErrorKind::CarrierMismatch);
  CHECK(kind_of_throw([] { identity_op(Carrier::powerset(2))(FcSet::empty()); }) == ErrorKind::CarrierMismatch);
}

TEST_CASE("dual, star and lowered star") {
  Carrier c = Carrier::powerset(3);
  OperatorView d1 = dual(discriminator(c));
  for (Mask x = 0; x <= c.top_mask(); ++x) {
    Element e = mask_element(c, x);
    CHECK(d1(e) == (x == c.top_mask() ? top(c) : bot(c)));
  }
  for (const auto& f : all_operators(c)) {
    OperatorView dd = dual(dual(f));
    OperatorView s = star(f);
    OperatorView ls = lowered_star(f);
    for (Mask x = 0; x <= c.top_mask(); ++x) {
      Element e = mask_element(c, x);
      CHECK(dd(e) == f(e));
      CHECK(s(e) == complement(f(e)));
      CHECK(ls(e) == f(complement(e)));
    }
  }
}

TEST_CASE("iterate") {
  Carrier c = Carrier::powerset(3);
  CHECK(same_table(iterate(identity_op(c), 5), identity_op(c)));
  CHECK(same_table(iterate(discriminator(c), 2), discriminator(c)));
  CHECK(kind_of_throw([&] { iterate(identity_op(c), 0); }) == ErrorKind::DegenerateParameter);
  ModalOperator f = jon2_f();
  for (int n = 1; n <= 64; ++n) {
    std::vector<std::uint64_t> removed;
    for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(n); ++i) removed.push_back(i);
    CHECK(iterate(f, n)(FcSet::omega()) == Element(FcSet::cofinite(removed)));
  }
}

TEST_CASE("axioms of the discriminator, identity and zero") {
  Carrier c = Carrier::powerset(3);
  for (Axiom a : {Axiom::t(), Axiom::four(), Axiom::b()}) {
    auto r = check_axiom(discriminator(c), a);
    CHECK(r.holds);
    CHECK(r.exhaustive);
    CHECK(check_axiom(identity_op(c), a).holds);
  }
  CHECK(check_closure(discriminator(c)).holds);
  auto z = check_closure(zero_op(c));
  CHECK_FALSE(z.holds);
  REQUIRE(z.witness);
  CHECK_FALSE(is_zero(*z.witness));
  CHECK_FALSE(check_axiom(zero_op(c), Axiom::t()).holds);
}

TEST_CASE("n-transitivity: f^(n+1) <= f^n") {
  Carrier c = Carrier::powerset(3);
  // a -> b -> c -> 0: f^3 = f0 <= f^2, but f^2(a) = c is not below f(a) = b
  ModalOperator chain = ModalOperator::tabulated(c, {0b010, 0b100, 0b000});
  CHECK_FALSE(check_axiom(chain, Axiom::transitive(1)).holds);
  CHECK(check_axiom(chain, Axiom::transitive(2)).holds);
  CHECK(check_axiom(chain, Axiom::transitive(3)).holds);
  CHECK(check_axiom(chain, Axiom::transitive(1)).holds == check_axiom(chain, Axiom::four()).holds);
}

TEST_CASE("axioms on symbolic carriers are sampled") {
  auto uf = example_exuf();
  auto t = check_axiom(uf.f, Axiom::t());
  CHECK(t.holds);
  CHECK_FALSE(t.exhaustive);
  CHECK(check_axiom(uf.f, Axiom::four()).holds);
  CHECK(check_closure(example_exnotdense().f).holds);
  CHECK_FALSE(check_axiom(jon2_f(), Axiom::t()).holds);
}

TEST_CASE("constructors produce certified operators") {
  Carrier c = Carrier::powerset(3);
  std::vector<ModalOperator> ops = {zero_op(c), discriminator(c), identity_op(c),
                                    relativized(c, mask_element(c, 0b101))};
  ops.push_back(op_join(ops[2], ops[3]));
  ops.push_back(op_compose(ops[3], ops[2]));
  for (const auto& f : ops) {
    CHECK(f.certificate().ok());
    CHECK(f.certificate().mode == VerificationMode::Exhaustive);
  }
  for (Carrier s : {Carrier::finite_cofinite(), Carrier::rational_interval()}) {
    for (const auto& f : {zero_op(s), discriminator(s), identity_op(s)}) {
      Certificate cert = f.certify({1000, 0});
      CHECK(cert.ok());
      CHECK(cert.mode == VerificationMode::Randomized);
      CHECK(cert.checked >= 1000);
    }
  }
}

TEST_CASE("a non-additive rule is refused as a table and fails the certificate") {
  Carrier c = Carrier::powerset(2);
  // x -> x for atoms, but 1 -> 0
  Rule bad = [c](const Element& x) { return is_top(x) ? bot(c) : x; };
  CHECK_THROWS_AS(ModalOperator::from_rule(c, bad, "bad"), Error);
  ModalOperator sym = ModalOperator::symbolic(Carrier::finite_cofinite(),
                                              [](const Element& x) { return complement(x); }, "complement");
  Certificate cert = sym.certify({200, 0});
  CHECK_FALSE(cert.ok());
  CHECK_FALSE(cert.normal);
}

TEST_CASE("table evaluation agrees with the rule on finite truncations") {
  // jon2 f restricted to subsets of {0..3} is the shift; tabulate a 5-atom truncation and compare.
  Carrier c = Carrier::powerset(5);
  ModalOperator shift = ModalOperator::tabulated(c, {0b00010, 0b00100, 0b01000, 0b10000, 0b00000});
  ModalOperator f = jon2_f();
  for (Mask x = 0; x < 16; ++x) {
    std::vector<std::uint64_t> pts;
    for (std::uint64_t i = 0; i < 4; ++i) {
      if ((x >> i) & 1U) pts.push_back(i);
    }
    Mask image = mask_of(shift(mask_element(c, x)));
    std::vector<std::uint64_t> expected;
    for (std::uint64_t i = 0; i < 5; ++i) {
      if ((image >> i) & 1U) expected.push_back(i);
    }
    CHECK(f(FcSet::finite(pts)) == Element(FcSet::finite(expected)));
  }
}

TEST_CASE("operator enumeration order is lexicographic in the atom table") {
  Carrier c = Carrier::powerset(2);
  auto ops = all_operators(c);
  REQUIRE(ops.size() == 16);
  for (std::size_t i = 0; i < ops.size(); ++i) CHECK(index_from_table(ops[i].table()) == i);
  CHECK(format_table(ops[0b0110]) == "a -> a, b -> b");
}
