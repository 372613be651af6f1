#include "modalwb/completion.hpp"

#include <algorithm>
#include <numeric>

namespace modalwb {

// --- PeriodicSubset --------------------------------------------------------

PeriodicSubset::PeriodicSubset(std::vector<bool> prefix, std::vector<bool> cycle)
    : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
  if (cycle_.empty()) cycle_.push_back(false);
  canonicalize();
}

void PeriodicSubset::canonicalize() {
  // Shortest period.
  std::size_t n = cycle_.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = cycle_[i] == cycle_[i - p];
    if (periodic) {
      cycle_.resize(p);
      break;
    }
  }
  // Shortest prefix: fold trailing prefix entries into a rotated cycle.
  while (!prefix_.empty() && prefix_.back() == cycle_.back()) {
    prefix_.pop_back();
    std::rotate(cycle_.rbegin(), cycle_.rbegin() + 1, cycle_.rend());
  }
}

PeriodicSubset PeriodicSubset::from_fc(const FcSet& x) {
  std::uint64_t len = x.points().empty() ? 0 : x.points().back() + 1;
  std::vector<bool> prefix(len, x.is_cofinite());
  for (auto p : x.points()) prefix[p] = !x.is_cofinite();
  return PeriodicSubset(std::move(prefix), {x.is_cofinite()});
}

PeriodicSubset PeriodicSubset::residues(std::uint64_t modulus, const std::vector<std::uint64_t>& residues,
                                        std::uint64_t start) {
  if (modulus == 0) throw Error(ErrorKind::DegenerateParameter, "zero modulus");
  std::vector<bool> cycle(modulus, false);
  for (auto r : residues) cycle[r % modulus] = true;
  // Rotate so that cycle index 0 corresponds to i = start.
  std::vector<bool> rotated(modulus);
  for (std::uint64_t j = 0; j < modulus; ++j) rotated[j] = cycle[(start + j) % modulus];
  return PeriodicSubset(std::vector<bool>(start, false), std::move(rotated));
}

bool PeriodicSubset::contains(std::uint64_t i) const {
  if (i < prefix_.size()) return prefix_[i];
  return cycle_[(i - prefix_.size()) % cycle_.size()];
}

bool PeriodicSubset::is_empty() const {
  return std::none_of(prefix_.begin(), prefix_.end(), [](bool b) { return b; }) &&
         std::none_of(cycle_.begin(), cycle_.end(), [](bool b) { return b; });
}

std::optional<FcSet> PeriodicSubset::as_fc() const {
  if (cycle_.size() != 1) return std::nullopt;
  bool tail = cycle_.front();
  std::vector<std::uint64_t> listed;
  for (std::uint64_t i = 0; i < prefix_.size(); ++i) {
    if (prefix_[i] != tail) listed.push_back(i);
  }
  return tail ? FcSet::cofinite(std::move(listed)) : FcSet::finite(std::move(listed));
}

std::optional<std::uint64_t> PeriodicSubset::nth(std::uint64_t i) const {
  std::uint64_t seen = 0;
  for (std::uint64_t k = 0; k < prefix_.size(); ++k) {
    if (prefix_[k] && seen++ == i) return k;
  }
  auto per_cycle = static_cast<std::uint64_t>(std::count(cycle_.begin(), cycle_.end(), true));
  if (per_cycle == 0) return std::nullopt;
  std::uint64_t remaining = i - seen;
  std::uint64_t base = prefix_.size() + (remaining / per_cycle) * cycle_.size();
  remaining %= per_cycle;
  for (std::uint64_t k = 0;; ++k) {
    if (cycle_[k] && remaining-- == 0) return base + k;
  }
}

namespace {

template <class Op>
PeriodicSubset combine(const PeriodicSubset& x, const PeriodicSubset& y, std::size_t x_prefix,
                       std::size_t x_cycle, std::size_t y_prefix, std::size_t y_cycle, Op op,
                       PeriodicSubset (*build)(std::vector<bool>, std::vector<bool>)) {
  std::size_t n = std::max(x_prefix, y_prefix);
  std::size_t period = std::lcm(x_cycle, y_cycle);
  std::vector<bool> prefix(n);
  std::vector<bool> cycle(period);
  for (std::size_t i = 0; i < n; ++i) prefix[i] = op(x.contains(i), y.contains(i));
  for (std::size_t j = 0; j < period; ++j) cycle[j] = op(x.contains(n + j), y.contains(n + j));
  return build(std::move(prefix), std::move(cycle));
}

}  // namespace

PeriodicSubset PeriodicSubset::join(const PeriodicSubset& other) const {
  return combine(*this, other, prefix_.size(), cycle_.size(), other.prefix_.size(),
                 other.cycle_.size(), [](bool a, bool b) { return a || b; },
                 [](std::vector<bool> p, std::vector<bool> c) { return PeriodicSubset(std::move(p), std::move(c)); });
}

PeriodicSubset PeriodicSubset::meet(const PeriodicSubset& other) const {
  return combine(*this, other, prefix_.size(), cycle_.size(), other.prefix_.size(),
                 other.cycle_.size(), [](bool a, bool b) { return a && b; },
                 [](std::vector<bool> p, std::vector<bool> c) { return PeriodicSubset(std::move(p), std::move(c)); });
}

PeriodicSubset PeriodicSubset::complement() const {
  std::vector<bool> prefix(prefix_.size());
  std::vector<bool> cycle(cycle_.size());
  for (std::size_t i = 0; i < prefix.size(); ++i) prefix[i] = !prefix_[i];
  for (std::size_t i = 0; i < cycle.size(); ++i) cycle[i] = !cycle_[i];
  return PeriodicSubset(std::move(prefix), std::move(cycle));
}

bool operator==(const PeriodicSubset& x, const PeriodicSubset& y) {
  return x.prefix_ == y.prefix_ && x.cycle_ == y.cycle_;
}

std::string PeriodicSubset::describe() const {
  if (auto fc = as_fc()) {
    if (fc->is_empty()) return "{}";
    std::string s = fc->is_cofinite() ? "omega minus {" : "{";
    for (std::size_t i = 0; i < fc->points().size(); ++i) {
      s += (i ? "," : "") + std::to_string(fc->points()[i]);
    }
    return s + "}";
  }
  std::string s;
  std::vector<std::string> listed;
  for (std::size_t i = 0; i < prefix_.size(); ++i) {
    if (prefix_[i]) listed.push_back(std::to_string(i));
  }
  if (!listed.empty()) {
    s = "{";
    for (std::size_t i = 0; i < listed.size(); ++i) s += (i ? "," : "") + listed[i];
    s += "} + ";
  }
  std::size_t start = prefix_.size();
  std::size_t period = cycle_.size();
  std::vector<std::size_t> res;
  for (std::size_t j = 0; j < period; ++j) {
    if (cycle_[j]) res.push_back((start + j) % period);
  }
  std::sort(res.begin(), res.end());
  s += "{i >= " + std::to_string(start) + " : i mod " + std::to_string(period) + " in {";
  for (std::size_t i = 0; i < res.size(); ++i) s += (i ? "," : "") + std::to_string(res[i]);
  return s + "}}";
}

// --- chains ------------------------------------------------------------------

IntervalSet IntervalLimitChain::member(std::size_t k) const {
  std::vector<Interval> raw;
  for (const auto& piece : pieces) {
    Rational lo = piece.lower(k);
    Rational hi = piece.upper(k);
    if (lo < hi) raw.push_back({lo, hi});
  }
  return IntervalSet::normalize(std::move(raw));
}

std::string describe(const std::vector<QuadraticInterval>& pieces) {
  if (pieces.empty()) return "0";
  std::string s;
  for (const auto& piece : pieces) {
    if (!s.empty()) s += "+";
    s += "[" + piece.lo.to_string() + "," + piece.hi.to_string() + ")";
  }
  return s;
}

namespace {

[[noreturn]] void not_descending(std::size_t k) {
  throw Error(ErrorKind::ContractViolation,
              "family member " + std::to_string(k) + " is not below its predecessor");
}

CompletionResult product_generated(const GeneratedChain& chain, std::size_t budget) {
  CompletionResult out;
  std::size_t steps = budget;
  if (chain.carrier.is_finite()) steps = std::max(budget, chain.carrier.element_count());
  Element current = chain.member(0);
  require_member(chain.carrier, current);
  out.steps = 1;
  for (std::size_t k = 1; k < steps && !is_zero(current); ++k) {
    Element next = chain.member(k);
    require_member(chain.carrier, next);
    if (!leq(next, current)) not_descending(k);
    current = std::move(next);
    out.steps = k + 1;
  }
  if (is_zero(current)) {
    out.verdict = CompletionVerdict::ZeroCertified;
    out.value = current;
    out.in_carrier = out.attained = true;
    out.description = "0 (reached by member " + std::to_string(out.steps - 1) + ")";
  } else if (chain.carrier.is_finite()) {
    out.verdict = CompletionVerdict::Value;
    out.value = current;
    out.in_carrier = out.attained = true;
    out.description = format(chain.carrier, current);
  } else {
    out.verdict = CompletionVerdict::Unknown;
    out.description = "no structural description; budget exhausted";
  }
  return out;
}

CompletionResult product_fc(const FcRemovalChain& chain, std::size_t budget) {
  CompletionResult out;
  PeriodicSubset first = PeriodicSubset::from_fc(chain.first);
  PeriodicSubset limit = first.meet(chain.removed.complement());
  PeriodicSubset hit = first.meet(chain.removed);
  // The chain changes only when a removed point lies in `first`; it stabilizes
  // iff finitely many such points exist.
  auto hit_fc = hit.as_fc();
  out.attained = hit_fc && hit_fc->is_finite();
  out.steps = budget;
  out.value = limit;
  if (auto fc = limit.as_fc()) out.in_carrier = true;
  if (limit.is_empty() && out.attained) {
    out.verdict = CompletionVerdict::ZeroCertified;
    out.description = "0 (reached after removing " + std::to_string(hit_fc->points().size()) + " points)";
    return out;
  }
  out.verdict = CompletionVerdict::Value;
  out.description = limit.describe();
  if (!out.attained) out.description += " (not attained by any member)";
  if (!out.in_carrier) out.description += " (not an element of FC(omega))";
  return out;
}

CompletionResult product_intervals(const IntervalLimitChain& chain, std::size_t budget) {
  CompletionResult out;
  std::vector<QuadraticInterval> limit;
  for (const auto& piece : chain.pieces) {
    for (std::size_t k = 0; k < budget; ++k) {
      Rational lo = piece.lower(k);
      Rational hi = piece.upper(k);
      if (QuadraticNumber(lo) > piece.lower_limit || QuadraticNumber(hi) < piece.upper_limit) {
        throw Error(ErrorKind::ContractViolation, "endpoint sequence overshoots its limit");
      }
      if (k > 0 && (lo < piece.lower(k - 1) || hi > piece.upper(k - 1))) not_descending(k);
    }
    if (piece.lower_limit < piece.upper_limit) limit.push_back({piece.lower_limit, piece.upper_limit});
  }
  IntervalSet previous = chain.member(0);
  for (std::size_t k = 1; k < budget; ++k) {
    IntervalSet next = chain.member(k);
    if (!(next.join(previous) == previous)) not_descending(k);
    previous = std::move(next);
  }
  out.steps = budget;
  std::sort(limit.begin(), limit.end(),
            [](const QuadraticInterval& x, const QuadraticInterval& y) { return x.lo < y.lo; });
  std::vector<QuadraticInterval> merged;
  for (auto& piece : limit) {
    if (!merged.empty() && piece.lo <= merged.back().hi) {
      if (piece.hi > merged.back().hi) merged.back().hi = piece.hi;
    } else {
      merged.push_back(piece);
    }
  }
  if (merged.empty()) {
    out.verdict = CompletionVerdict::ZeroCertified;
    out.value = Element(IntervalSet::empty());
    out.in_carrier = true;
    out.description = "0 (endpoint limits cross)";
    return out;
  }
  out.verdict = CompletionVerdict::Value;
  bool rational = std::all_of(merged.begin(), merged.end(), [](const QuadraticInterval& p) {
    return p.lo.is_rational() && p.hi.is_rational();
  });
  if (rational) {
    std::vector<Interval> raw;
    for (const auto& piece : merged) raw.push_back({*piece.lo.as_rational(), *piece.hi.as_rational()});
    IntervalSet value = IntervalSet::normalize(std::move(raw));
    out.in_carrier = true;
    for (std::size_t k = 0; k < budget && !out.attained; ++k) out.attained = chain.member(k) == value;
    out.value = Element(std::move(value));
  } else {
    out.value = merged;
  }
  out.description = describe(merged);
  if (!out.in_carrier) out.description += " (irrational endpoint; not an element of the carrier)";
  return out;
}

}  // namespace

CompletionResult product_in_completion(const ChainFamily& family, std::size_t budget) {
  if (budget == 0) throw Error(ErrorKind::DegenerateParameter, "zero budget");
  return std::visit(
      [&](const auto& chain) -> CompletionResult {
        using T = std::decay_t<decltype(chain)>;
        if constexpr (std::is_same_v<T, GeneratedChain>) {
          return product_generated(chain, budget);
        } else if constexpr (std::is_same_v<T, FcRemovalChain>) {
          return product_fc(chain, budget);
        } else {
          return product_intervals(chain, budget);
        }
      },
      family);
}

}  // namespace modalwb
