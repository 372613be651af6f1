#include <doctest.h>

#include "modalwb/algebra.hpp"
#include "modalwb/completion.hpp"
#include "modalwb/error.hpp"
#include "modalwb/rational.hpp"
#include "modalwb/sampling.hpp"
#include "modalwb/serialize.hpp"

using namespace modalwb;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

IntervalSet iv(std::vector<std::pair<Rational, Rational>> parts) {
  std::vector<Interval> raw;
  for (auto& [lo, hi] : parts) raw.push_back({lo, hi});
  return IntervalSet::normalize(raw);
}

ErrorKind kind_of_throw(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

// Membership oracle: sample points k/den for a set given as raw pairs.
bool raw_contains(const std::vector<std::pair<Rational, Rational>>& raw, const Rational& x) {
  for (const auto& [lo, hi] : raw) {
    if (lo <= x && x < hi) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("powerset join of the two atoms is top") {
  Carrier c = Carrier::powerset(2);
  CHECK(join(mask_element(c, 0b01), mask_element(c, 0b10)) == top(c));
  CHECK(c.element_count() == 4);
  CHECK(c.labels() == std::vector<std::string>{"a", "b"});
}

TEST_CASE("fc complement of a finite set is cofinite with the same points") {
  Element x = FcSet::finite({0, 2});
  Element y = complement(x);
  CHECK(std::get<FcSet>(y).is_cofinite());
  CHECK(std::get<FcSet>(y).points() == std::vector<std::uint64_t>{0, 2});
  CHECK(complement(y) == x);
  // an element and its complement differ in mode
  CHECK(std::get<FcSet>(x).is_cofinite() != std::get<FcSet>(y).is_cofinite());
}

TEST_CASE("adjacent intervals fuse") {
  Element x = IntervalSet::single(0, q(1, 2));
  Element y = IntervalSet::single(q(1, 2), 1);
  CHECK(join(x, y) == Element(IntervalSet::unit()));
}

TEST_CASE("operations refuse mixed carriers") {
  Carrier c = Carrier::powerset(2);
  CHECK(kind_of_throw([&] { join(mask_element(c, 1), FcSet::empty()); }) == ErrorKind::CarrierMismatch);
  CHECK(kind_of_throw([&] { leq(IntervalSet::unit(), FcSet::omega()); }) == ErrorKind::CarrierMismatch);
}

TEST_CASE("atoms") {
  Carrier p3 = Carrier::powerset(3);
  std::size_t count = 0;
  for (Element a : atoms(p3)) {
    CHECK(std::popcount(mask_of(a)) == 1);
    ++count;
  }
  CHECK(count == 3);

  auto fc = atoms(Carrier::finite_cofinite());
  CHECK_FALSE(fc.size().has_value());
  auto it = fc.begin();
  for (std::uint64_t n = 0; n < 4; ++n, ++it) CHECK(*it == Element(FcSet::singleton(n)));

  CHECK(kind_of_throw([] { atoms(Carrier::rational_interval()); }) == ErrorKind::AtomlessCarrier);
}

TEST_CASE("normalize_intervals") {
  CHECK(iv({{0, q(1, 2)}, {q(1, 2), 1}}).parts() == std::vector<Interval>{{0, 1}});
  CHECK(iv({{q(1, 3), q(2, 3)}, {0, q(1, 4)}}).parts() == std::vector<Interval>{{0, q(1, 4)}, {q(1, 3), q(2, 3)}});
  CHECK(iv({{0, q(1, 2)}, {q(1, 4), q(3, 4)}}).parts() == std::vector<Interval>{{0, q(3, 4)}});
  CHECK(kind_of_throw([] { iv({{q(1, 2), q(1, 2)}}); }) == ErrorKind::MalformedInterval);
  CHECK(kind_of_throw([] { iv({{q(3, 4), q(1, 4)}}); }) == ErrorKind::MalformedInterval);
  CHECK(kind_of_throw([] { iv({{q(-1, 4), q(1, 4)}}); }) == ErrorKind::MalformedInterval);
}

TEST_CASE("normalize_intervals preserves membership and is idempotent") {
  ElementSampler sampler(Carrier::rational_interval(), 7);
  std::uniform_int_distribution<int> count(1, 5);
  std::uniform_int_distribution<int> num(0, 24);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::pair<Rational, Rational>> raw;
    int k = count(sampler.rng());
    for (int i = 0; i < k; ++i) {
      int a = num(sampler.rng());
      int b = num(sampler.rng());
      if (a == b) continue;
      raw.emplace_back(q(std::min(a, b), 24), q(std::max(a, b), 24));
    }
    IntervalSet s = iv(raw);
    for (int m = 0; m < 48; ++m) CHECK(s.contains(q(m, 48)) == raw_contains(raw, q(m, 48)));
    CHECK(IntervalSet::normalize(s.parts()) == s);
    const auto& parts = s.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      CHECK(parts[i].lo < parts[i].hi);
      if (i > 0) CHECK(parts[i - 1].hi < parts[i].lo);
    }
  }
}

TEST_CASE("relevant points and intervals") {
  Element half = IntervalSet::single(0, q(1, 2));
  CHECK(relevant_points(half) == std::vector<Rational>{0, q(1, 2)});
  Element two = iv({{0, q(1, 4)}, {q(1, 2), 1}});
  CHECK(relevant_points(two) == std::vector<Rational>{0, q(1, 4), q(1, 2), 1});
  CHECK(relevant_intervals(two).size() == 2);
  CHECK(relevant_points(Element(IntervalSet::normalize(std::get<IntervalSet>(two).parts()))) == relevant_points(two));
  CHECK(kind_of_throw([] { relevant_points(IntervalSet::empty()); }) == ErrorKind::EmptyElement);
}

TEST_CASE("leq is a partial order and xor is nilpotent on sampled fc elements") {
  ElementSampler sampler(Carrier::finite_cofinite(), 3);
  for (int i = 0; i < 300; ++i) {
    Element a = sampler.nonzero();
    Element b = sampler.below(a);
    CHECK(leq(a, a));
    CHECK(leq(b, a));
    CHECK(is_zero(symdiff(a, a)));
  }
}

TEST_CASE("sampler below stays below and is deterministic") {
  for (Carrier c : {Carrier::powerset(4), Carrier::finite_cofinite(), Carrier::rational_interval()}) {
    ElementSampler s1(c, 11);
    ElementSampler s2(c, 11);
    for (int i = 0; i < 200; ++i) {
      Element x = s1.nonzero();
      CHECK(x == s2.nonzero());
      CHECK_FALSE(is_zero(x));
      Element y = s1.below(x);
      CHECK(y == s2.below(x));
      CHECK(leq(y, x));
    }
  }
}

TEST_CASE("element serialization") {
  Carrier p = Carrier::powerset(3);
  CHECK(element_to_json(mask_element(p, 5)) == "0x5");
  nlohmann::json fc = element_to_json(FcSet::cofinite({1, 4}));
  CHECK(fc["mode"] == "cofinite");
  CHECK(fc["set"] == nlohmann::json::array({1, 4}));
  nlohmann::json in = element_to_json(iv({{0, q(1, 2)}, {q(2, 3), 1}}));
  CHECK(in == nlohmann::json::array({{"0", "1/2"}, {"2/3", "1"}}));

  ElementSampler s(Carrier::rational_interval(), 5);
  for (int i = 0; i < 100; ++i) {
    Element x = s.any();
    CHECK(element_from_json(Carrier::rational_interval(), element_to_json(x)) == x);
  }
  CHECK(element_from_json(p, "0x5") == mask_element(p, 5));
  CHECK(element_from_json(Carrier::finite_cofinite(), fc) == Element(FcSet::cofinite({1, 4})));
}

TEST_CASE("rationals and quadratic numbers") {
  CHECK(parse_rational("6/8") == q(3, 4));
  CHECK(to_string(q(3, 4)) == "3/4");
  QuadraticNumber p(0, 1, 2, 2);  // sqrt(2)/2
  CHECK(p > QuadraticNumber(q(7, 10)));
  CHECK(p < QuadraticNumber(q(71, 100)));
  CHECK(p.floor() == 0);
  QuadraticNumber r = simplest_between(p, QuadraticNumber(q(3, 4)));
  CHECK(r == QuadraticNumber(q(5, 7)));
}

TEST_CASE("product_in_completion on a finite powerset stabilizes") {
  Carrier c = Carrier::powerset(3);
  const Mask members[] = {0b111, 0b011, 0b010, 0b010};
  GeneratedChain chain{c, [c, &members](std::size_t k) { return mask_element(c, members[std::min<std::size_t>(k, 3)]); }};
  auto r = product_in_completion(chain, 12);
  REQUIRE(r.verdict == CompletionVerdict::Value);
  CHECK(std::get<Element>(*r.value) == mask_element(c, 0b010));
  CHECK(r.in_carrier);
  CHECK(r.steps == std::max<std::size_t>(12, c.element_count()));
}

TEST_CASE("product_in_completion: omega minus {0..k} has empty meet, not attained") {
  FcRemovalChain chain{FcSet::omega(), PeriodicSubset::residues(1, {0})};
  auto r = product_in_completion(chain, 12);
  REQUIRE(r.verdict == CompletionVerdict::Value);
  CHECK_FALSE(r.attained);
}

TEST_CASE("product_in_completion: [s,1) for s below sqrt(2)/2 has meet [p,1)") {
  const QuadraticNumber p(0, 1, 2, 2);
  IntervalLimitChain chain;
  chain.pieces.push_back({[](std::size_t k) {
                            Integer scale = Integer(1) << k;
                            // largest dyadic k/2^k at or below p
                            Integer fl = QuadraticNumber(0, scale, 2, 2).floor();
                            return Rational(fl, scale);
                          },
                          p, [](std::size_t) { return Rational(1); }, QuadraticNumber(Rational(1))});
  auto r = product_in_completion(chain, 12);
  REQUIRE(r.verdict == CompletionVerdict::Value);
  const auto& pieces = std::get<std::vector<QuadraticInterval>>(*r.value);
  REQUIRE(pieces.size() == 1);
  CHECK(pieces[0].lo == p);
  CHECK(pieces[0].hi == QuadraticNumber(Rational(1)));
  CHECK_FALSE(r.in_carrier);
}

TEST_CASE("product_in_completion rejects ascending chains") {
  Carrier c = Carrier::powerset(2);
  GeneratedChain up{c, [c](std::size_t k) { return mask_element(c, k == 0 ? 0b01 : 0b11); }};
  CHECK(kind_of_throw([&] { product_in_completion(up, 12); }) == ErrorKind::ContractViolation);
}
