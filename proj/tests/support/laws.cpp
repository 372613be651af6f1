#include "laws.hpp"

#include <functional>
#include <random>

#include "modalwb/examples.hpp"
#include "modalwb/finite.hpp"
#include "modalwb/operator.hpp"
#include "modalwb/sampling.hpp"

namespace modalwb::laws {

namespace {

void record(LawReport& r, bool holds, const std::string& law, const std::string& where) {
  ++r.checked;
  if (holds) return;
  if (r.violations++ == 0) r.first_violation = law + " at " + where;
}

void boolean_triple(LawReport& r, const Carrier& c, const Element& a, const Element& b, const Element& d) {
  const std::string at = format(c, a) + ", " + format(c, b) + ", " + format(c, d);
  const Element zero = bot(c);
  const Element one = top(c);
  record(r, join(join(a, b), d) == join(a, join(b, d)), "join associative", at);
  record(r, meet(meet(a, b), d) == meet(a, meet(b, d)), "meet associative", at);
  record(r, join(a, b) == join(b, a), "join commutative", at);
  record(r, meet(a, b) == meet(b, a), "meet commutative", at);
  record(r, join(a, meet(a, b)) == a, "absorption a+(a*b)", at);
  record(r, meet(a, join(a, b)) == a, "absorption a*(a+b)", at);
  record(r, meet(a, join(b, d)) == join(meet(a, b), meet(a, d)), "meet distributes over join", at);
  record(r, join(a, meet(b, d)) == meet(join(a, b), join(a, d)), "join distributes over meet", at);
  record(r, join(a, complement(a)) == one, "a + -a = 1", at);
  record(r, meet(a, complement(a)) == zero, "a * -a = 0", at);
  record(r, complement(join(a, b)) == meet(complement(a), complement(b)), "de Morgan", at);
  record(r, complement(complement(a)) == a, "--a = a", at);
  record(r, join(a, zero) == a && meet(a, one) == a, "bounds", at);
  record(r, leq(a, b) == (join(a, b) == b), "a <= b iff a + b = b", at);
  record(r, !(leq(a, b) && leq(b, a)) || a == b, "<= antisymmetric", at);
  record(r, !(leq(a, b) && leq(b, d)) || leq(a, d), "<= transitive", at);
  record(r, is_zero(symdiff(a, a)), "a xor a = 0", at);
  record(r, symdiff(a, b) == join(meet(a, complement(b)), meet(b, complement(a))), "xor by definition", at);
}

using Eval = std::function<bool(const ModalOperator&, const ModalOperator&)>;

// Each law compares two operators; `same` decides equality (by table or at a point).
void operator_triple(LawReport& r, const ModalOperator& f, const ModalOperator& g, const ModalOperator& h,
                     const Eval& same, const std::string& at) {
  const Carrier& c = f.carrier();
  const ModalOperator zero = zero_op(c);
  const ModalOperator one = discriminator(c);
  const ModalOperator id = identity_op(c);
  record(r, same(op_join(f, f), f), "f v f = f", at);
  record(r, same(op_join(f, g), op_join(g, f)), "f v g = g v f", at);
  record(r, same(op_join(op_join(f, g), h), op_join(f, op_join(g, h))), "(f v g) v h = f v (g v h)", at);
  record(r, same(op_join(zero, f), f), "f0 v f = f", at);
  record(r, same(op_join(f, one), one), "f v f1 = f1", at);
  record(r, same(op_compose(op_compose(f, g), h), op_compose(f, op_compose(g, h))), "(f o g) o h = f o (g o h)", at);
  record(r, same(op_compose(id, f), f) && same(op_compose(f, id), f), "1' o f = f = f o 1'", at);
  record(r, same(op_compose(f, op_join(g, h)), op_join(op_compose(f, g), op_compose(f, h))),
         "f o (g v h) = f o g v f o h", at);
  record(r, same(op_compose(op_join(g, h), f), op_join(op_compose(g, f), op_compose(h, f))),
         "(g v h) o f = g o f v h o f", at);
  record(r, same(op_compose(zero, f), zero), "f0 o f = f0", at);
  record(r, same(op_compose(f, zero), zero), "f o f0 = f0", at);
}

std::vector<ModalOperator> symbolic_pool(const Carrier& c) {
  std::vector<ModalOperator> pool = {zero_op(c), discriminator(c), identity_op(c)};
  if (c.kind() == CarrierKind::FiniteCofinite) {
    pool.push_back(relativized(c, FcSet::finite({0, 2})));
    pool.push_back(relativized(c, FcSet::cofinite({1})));
    pool.push_back(jon2_f());
    pool.push_back(jon2_g());
    pool.push_back(exfc_f());
    pool.push_back(exfc_g(1));
    pool.push_back(exfc_g(3));
    pool.push_back(exfc_p());
  } else {
    pool.push_back(relativized(c, IntervalSet::single(0, Rational(1, 2))));
    pool.push_back(relativized(c, IntervalSet::single(Rational(1, 3), 1)));
    pool.push_back(example_exuf().f);
    pool.push_back(example_exnotdense().f);
    auto densepc = example_exdensepc();
    pool.push_back(densepc.f);
    for (const auto& [key, op] : densepc.auxiliaries) pool.push_back(op);
  }
  return pool;
}

}  // namespace

LawReport boolean_exhaustive(int n) {
  LawReport r{"Boolean laws, powerset(" + std::to_string(n) + "), all triples"};
  Carrier c = Carrier::powerset(n);
  const Mask top_bits = c.top_mask();
  for (Mask a = 0; a <= top_bits; ++a) {
    for (Mask b = 0; b <= top_bits; ++b) {
      for (Mask d = 0; d <= top_bits; ++d) {
        boolean_triple(r, c, mask_element(c, a), mask_element(c, b), mask_element(c, d));
      }
    }
  }
  return r;
}

LawReport boolean_random(const Carrier& c, std::size_t count, std::uint64_t seed) {
  LawReport r{"Boolean laws, " + c.name() + ", " + std::to_string(count) + " random triples"};
  ElementSampler sampler(c, seed);
  for (std::size_t i = 0; i < count; ++i) {
    Element a = sampler.any();
    Element b = sampler.any();
    Element d = sampler.any();
    boolean_triple(r, c, a, b, d);
  }
  return r;
}

LawReport operator_laws_powerset(int n, std::size_t count, std::uint64_t seed) {
  Carrier c = Carrier::powerset(n);
  Eval same = [](const ModalOperator& x, const ModalOperator& y) { return x.table() == y.table(); };
  if (count == 0) {
    LawReport r{"semilattice and semiring laws, M(powerset(" + std::to_string(n) + ")), all triples"};
    auto ops = all_operators(c);
    for (const auto& f : ops) {
      for (const auto& g : ops) {
        for (const auto& h : ops) operator_triple(r, f, g, h, same, format_table(f) + "; " + format_table(g) + "; " + format_table(h));
      }
    }
    return r;
  }
  LawReport r{"semilattice and semiring laws, M(powerset(" + std::to_string(n) + ")), " + std::to_string(count) +
              " random triples"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, operator_count(n) - 1);
  for (std::size_t i = 0; i < count; ++i) {
    auto f = ModalOperator::tabulated(c, table_from_index(n, pick(rng)));
    auto g = ModalOperator::tabulated(c, table_from_index(n, pick(rng)));
    auto h = ModalOperator::tabulated(c, table_from_index(n, pick(rng)));
    operator_triple(r, f, g, h, same, format_table(f) + "; " + format_table(g) + "; " + format_table(h));
  }
  return r;
}

LawReport operator_laws_random(const Carrier& c, std::size_t count, std::uint64_t seed) {
  LawReport r{"semilattice and semiring laws, M(" + c.name() + "), " + std::to_string(count) + " random instances"};
  auto pool = symbolic_pool(c);
  ElementSampler sampler(c, seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (std::size_t i = 0; i < count; ++i) {
    const auto& f = pool[pick(sampler.rng())];
    const auto& g = pool[pick(sampler.rng())];
    const auto& h = pool[pick(sampler.rng())];
    Element x = sampler.any();
    Eval same = [&x](const ModalOperator& p, const ModalOperator& q) { return p(x) == q(x); };
    operator_triple(r, f, g, h, same,
                    f.provenance() + ", " + g.provenance() + ", " + h.provenance() + " at " + format(c, x));
  }
  return r;
}

std::vector<LawReport> standard_suites(std::uint64_t seed) {
  constexpr std::size_t kRandom = 10000;
  return {
      boolean_exhaustive(2),
      boolean_exhaustive(3),
      boolean_random(Carrier::finite_cofinite(), kRandom, seed),
      boolean_random(Carrier::rational_interval(), kRandom, seed),
      operator_laws_powerset(2),
      operator_laws_powerset(3, kRandom, seed),
      operator_laws_random(Carrier::finite_cofinite(), kRandom, seed),
      operator_laws_random(Carrier::rational_interval(), kRandom, seed),
  };
}

}  // namespace modalwb::laws
