#include "modalwb/sampling.hpp"

#include <algorithm>
#include <array>

namespace modalwb {

namespace {

constexpr std::array<int, 8> kDenominators = {2, 3, 4, 5, 6, 8, 12, 16};
constexpr std::uint64_t kFcRange = 32;

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

}  // namespace

ElementSampler::ElementSampler(Carrier c, std::uint64_t seed) : carrier_(std::move(c)), rng_(seed) {}

Rational ElementSampler::random_rational(const Rational& lo, const Rational& hi) {
  auto parts = static_cast<long long>(uniform(rng_, 1, 4));
  auto k = static_cast<long long>(uniform(rng_, 0, static_cast<std::uint64_t>(parts)));
  return lo + (hi - lo) * Rational(k, parts);
}

IntervalSet ElementSampler::random_intervals() {
  int den = kDenominators[uniform(rng_, 0, kDenominators.size() - 1)];
  auto pieces = uniform(rng_, 1, 3);
  std::vector<Interval> raw;
  for (std::uint64_t i = 0; i < pieces; ++i) {
    auto a = static_cast<long long>(uniform(rng_, 0, static_cast<std::uint64_t>(den)));
    auto b = static_cast<long long>(uniform(rng_, 0, static_cast<std::uint64_t>(den)));
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    raw.push_back({Rational(a, den), Rational(b, den)});
  }
  return IntervalSet::normalize(std::move(raw));
}

FcSet ElementSampler::random_fc() {
  bool cofinite = uniform(rng_, 0, 9) < 3;
  auto count = uniform(rng_, cofinite ? 0 : 1, 4);
  std::vector<std::uint64_t> pts;
  for (std::uint64_t i = 0; i < count; ++i) pts.push_back(uniform(rng_, 0, kFcRange - 1));
  return cofinite ? FcSet::cofinite(std::move(pts)) : FcSet::finite(std::move(pts));
}

Element ElementSampler::any() {
  switch (carrier_.kind()) {
    case CarrierKind::FinitePowerset:
      return mask_element(carrier_, static_cast<Mask>(uniform(rng_, 0, carrier_.top_mask())));
    case CarrierKind::FiniteCofinite:
      if (uniform(rng_, 0, 15) == 0) return FcSet::empty();
      return random_fc();
    case CarrierKind::RationalInterval:
      if (uniform(rng_, 0, 15) == 0) return IntervalSet::empty();
      return random_intervals();
  }
  return bot(carrier_);
}

Element ElementSampler::nonzero() {
  for (;;) {
    Element x = any();
    if (!is_zero(x)) return x;
  }
}

Element ElementSampler::below(const Element& x) {
  require_member(carrier_, x);
  if (is_zero(x)) throw Error(ErrorKind::EmptyElement, "no nonzero element below 0");
  switch (carrier_.kind()) {
    case CarrierKind::FinitePowerset: {
      Mask bits = mask_of(x);
      for (;;) {
        Mask sub = static_cast<Mask>(uniform(rng_, 1, bits)) & bits;
        if (sub != 0) return mask_element(carrier_, sub);
      }
    }
    case CarrierKind::FiniteCofinite: {
      const auto& f = std::get<FcSet>(x);
      if (f.is_finite()) {
        std::vector<std::uint64_t> pick;
        for (auto p : f.points()) {
          if (uniform(rng_, 0, 1) == 1) pick.push_back(p);
        }
        if (pick.empty()) pick.push_back(f.points()[uniform(rng_, 0, f.points().size() - 1)]);
        return FcSet::finite(std::move(pick));
      }
      if (uniform(rng_, 0, 4) < 3) {
        std::vector<std::uint64_t> pick;
        auto count = uniform(rng_, 1, 3);
        std::uint64_t range = (f.points().empty() ? 0 : f.points().back() + 1) + kFcRange;
        while (pick.size() < count) {
          auto p = uniform(rng_, 0, range - 1);
          if (f.contains(p)) pick.push_back(p);
        }
        return FcSet::finite(std::move(pick));
      }
      std::vector<std::uint64_t> removed = f.points();
      auto extra = uniform(rng_, 0, 3);
      for (std::uint64_t i = 0; i < extra; ++i) removed.push_back(uniform(rng_, 0, kFcRange - 1));
      return FcSet::cofinite(std::move(removed));
    }
    case CarrierKind::RationalInterval: {
      const auto& parts = std::get<IntervalSet>(x).parts();
      auto pick_sub = [&](const Interval& piece) {
        auto m = static_cast<long long>(uniform(rng_, 1, 4));
        auto i = static_cast<long long>(uniform(rng_, 0, static_cast<std::uint64_t>(m - 1)));
        auto j = static_cast<long long>(uniform(rng_, static_cast<std::uint64_t>(i + 1),
                                                static_cast<std::uint64_t>(m)));
        Rational width = piece.hi - piece.lo;
        return Interval{piece.lo + width * Rational(i, m), piece.lo + width * Rational(j, m)};
      };
      std::vector<Interval> raw{pick_sub(parts[uniform(rng_, 0, parts.size() - 1)])};
      if (parts.size() > 1 && uniform(rng_, 0, 3) == 0) {
        raw.push_back(pick_sub(parts[uniform(rng_, 0, parts.size() - 1)]));
      }
      return IntervalSet::normalize(std::move(raw));
    }
  }
  return x;
}

std::vector<Element> structured_below(const Element& x, int depth) {
  if (is_zero(x)) throw Error(ErrorKind::EmptyElement, "no nonzero element below 0");
  std::vector<Element> out{x};
  if (const auto* p = std::get_if<PowersetElement>(&x)) {
    for (Mask y = (p->bits() - 1) & p->bits(); y != 0; y = (y - 1) & p->bits()) {
      out.emplace_back(PowersetElement(y, p->atom_count()));
    }
    return out;
  }
  if (const auto* f = std::get_if<FcSet>(&x)) {
    std::vector<std::uint64_t> members;
    for (std::uint64_t n = 0; members.size() < 8 && (f->is_cofinite() || n <= f->points().back()); ++n) {
      if (f->contains(n)) members.push_back(n);
    }
    for (auto n : members) out.emplace_back(FcSet::singleton(n));
    for (std::size_t k = 1; k < members.size(); ++k) {
      auto rest = f->meet(FcSet::finite({members.begin(), members.begin() + static_cast<long>(k)}).complement());
      if (!rest.is_empty()) out.emplace_back(rest);
    }
    return out;
  }
  for (const auto& piece : std::get<IntervalSet>(x).parts()) {
    Rational width = piece.hi - piece.lo;
    for (int i = 1; i <= depth; ++i) {
      long long parts = 1LL << i;
      for (long long k = 0; k < parts; ++k) {
        out.emplace_back(IntervalSet::single(piece.lo + width * Rational(k, parts),
                                             piece.lo + width * Rational(k + 1, parts)));
      }
    }
  }
  return out;
}

std::vector<Element> probe_elements(const Carrier& c) {
  std::vector<Element> out;
  switch (c.kind()) {
    case CarrierKind::FinitePowerset:
      break;
    case CarrierKind::FiniteCofinite: {
      std::vector<std::uint64_t> prefix;
      for (std::uint64_t n = 0; n < 8; ++n) {
        out.emplace_back(FcSet::singleton(n));
        out.emplace_back(FcSet::cofinite(prefix));
        prefix.push_back(n);
      }
      out.emplace_back(FcSet::finite({1, 2}));
      out.emplace_back(FcSet::cofinite({0}));
      break;
    }
    case CarrierKind::RationalInterval:
      for (long long den : {2LL, 4LL, 8LL}) {
        for (long long k = 0; k < den; ++k) {
          auto piece = IntervalSet::single(Rational(k, den), Rational(k + 1, den));
          out.emplace_back(piece);
          if (den == 2) continue;
          out.emplace_back(piece.complement());
        }
      }
      out.emplace_back(IntervalSet::unit());
      break;
  }
  return out;
}

}  // namespace modalwb
