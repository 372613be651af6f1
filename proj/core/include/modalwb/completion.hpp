#ifndef MODALWB_COMPLETION_HPP_
#define MODALWB_COMPLETION_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "modalwb/algebra.hpp"
#include "modalwb/rational.hpp"

namespace modalwb {

// An eventually periodic subset of omega. Membership of i is prefix[i] for
// i < prefix.size(), otherwise cycle[(i - prefix.size()) % cycle.size()].
// Contains FC(omega) and the infinite meets that the FC constructions need
// (e.g. the odd numbers).
class PeriodicSubset {
 public:
  static PeriodicSubset from_fc(const FcSet& x);
  // {i : i >= start and i mod modulus in residues}
  static PeriodicSubset residues(std::uint64_t modulus, const std::vector<std::uint64_t>& residues,
                                 std::uint64_t start = 0);

  bool contains(std::uint64_t i) const;
  bool is_empty() const;
  // The same set as an FC element, when it is finite or cofinite.
  std::optional<FcSet> as_fc() const;
  // The i-th member in ascending order, if the set has more than i members.
  std::optional<std::uint64_t> nth(std::uint64_t i) const;

  PeriodicSubset join(const PeriodicSubset& other) const;
  PeriodicSubset meet(const PeriodicSubset& other) const;
  PeriodicSubset complement() const;

  std::string describe() const;

  friend bool operator==(const PeriodicSubset& x, const PeriodicSubset& y);

 private:
  PeriodicSubset(std::vector<bool> prefix, std::vector<bool> cycle);
  void canonicalize();

  std::vector<bool> prefix_;
  std::vector<bool> cycle_;
};

struct QuadraticInterval {
  QuadraticNumber lo;
  QuadraticNumber hi;
};

// Descending families whose meet is taken in a completion of the carrier.
// Member k is produced on demand; families are never materialized.

// Any carrier; member(k) must be below member(k - 1).
struct GeneratedChain {
  Carrier carrier;
  std::function<Element(std::size_t)> member;
};

// FC(omega): member k is `first` minus the k smallest points of `removed`.
struct FcRemovalChain {
  FcSet first;
  PeriodicSubset removed;
};

// Interval algebra: member k is the union over pieces j of
// [lower_j(k), upper_j(k)), where lower_j increases towards lower_limit_j and
// upper_j decreases towards upper_limit_j.
struct IntervalLimitChain {
  struct Piece {
    std::function<Rational(std::size_t)> lower;
    QuadraticNumber lower_limit;
    std::function<Rational(std::size_t)> upper;
    QuadraticNumber upper_limit;
  };
  std::vector<Piece> pieces;

  IntervalSet member(std::size_t k) const;
};

using ChainFamily = std::variant<GeneratedChain, FcRemovalChain, IntervalLimitChain>;

using CompletionValue = std::variant<Element, PeriodicSubset, std::vector<QuadraticInterval>>;

enum class CompletionVerdict { Value, ZeroCertified, Unknown };

struct CompletionResult {
  CompletionVerdict verdict = CompletionVerdict::Unknown;
  std::optional<CompletionValue> value;
  // The meet is itself an element of the carrier.
  bool in_carrier = false;
  // Some member of the family equals the meet.
  bool attained = false;
  std::size_t steps = 0;
  std::string description;
};

// The meet of a descending family in the completion of its carrier. Finite
// carriers are exact after |B| members; FC and interval families use their
// structural description; generated families over infinite carriers only ever
// certify zero, otherwise report Unknown. Throws ContractViolation when a
// checked member is not below its predecessor.
CompletionResult product_in_completion(const ChainFamily& family, std::size_t budget);

std::string describe(const std::vector<QuadraticInterval>& pieces);

}  // namespace modalwb

#endif  // MODALWB_COMPLETION_HPP_
