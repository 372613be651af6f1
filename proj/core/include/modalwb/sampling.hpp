#ifndef MODALWB_SAMPLING_HPP_
#define MODALWB_SAMPLING_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "modalwb/algebra.hpp"

namespace modalwb {

using Rng = std::mt19937_64;

// Deterministic random elements of a carrier. FC samples live on small points
// (below 32); interval samples use small denominators so that downstream
// symbolic operators stay cheap to evaluate.
class ElementSampler {
 public:
  ElementSampler(Carrier c, std::uint64_t seed);

  const Carrier& carrier() const { return carrier_; }
  Rng& rng() { return rng_; }

  Element any();
  Element nonzero();
  // Some y with 0 < y <= x. Requires x != 0.
  Element below(const Element& x);

  Rational random_rational(const Rational& lo, const Rational& hi);

 private:
  IntervalSet random_intervals();
  FcSet random_fc();

  Carrier carrier_;
  Rng rng_;
};

// Small structured elements that random sampling tends to miss: for FC the
// singletons and co-initial segments on points below 8, for intervals the
// dyadic pieces of depth up to 3 and their complements. Empty for powersets.
std::vector<Element> probe_elements(const Carrier& c);

// Nonzero elements below a nonzero x chosen by structure rather than chance:
// powersets give every nonzero submask; FC gives x, its first few points as
// singletons and x minus those points; intervals split every piece of x into
// 2^i equal parts for i <= depth.
std::vector<Element> structured_below(const Element& x, int depth = 4);

// A subset of a carrier given by a membership predicate plus a sampler that finds
// members below a given nonzero element.
struct DenseSet {
  std::string name;
  std::function<bool(const Element&)> contains;
  // Some member y with 0 < y <= x, or nullopt if none was found.
  std::function<std::optional<Element>(const Element& x, ElementSampler& sampler)> sample_below;
};

}  // namespace modalwb

#endif  // MODALWB_SAMPLING_HPP_
