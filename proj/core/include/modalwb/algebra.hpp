#ifndef MODALWB_ALGEBRA_HPP_
#define MODALWB_ALGEBRA_HPP_

#include <cstdint>
#include <iterator>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "modalwb/error.hpp"
#include "modalwb/rational.hpp"

namespace modalwb {

// Bit i set <=> atom i is below the element.
using Mask = std::uint32_t;

inline constexpr int kMaxPowersetAtoms = 16;

enum class CarrierKind { FinitePowerset, FiniteCofinite, RationalInterval };

// One of the three concrete Boolean algebras: 2^n, FC(omega) and the interval
// algebra of [0,1) over the rationals. Cheap to copy.
class Carrier {
 public:
  static Carrier powerset(std::vector<std::string> atom_labels);
  // Labels a, b, c, ...
  static Carrier powerset(int atom_count);
  static Carrier finite_cofinite();
  static Carrier rational_interval();

  CarrierKind kind() const { return kind_; }
  bool is_finite() const { return kind_ == CarrierKind::FinitePowerset; }
  bool is_atomless() const { return kind_ == CarrierKind::RationalInterval; }

  // FinitePowerset only.
  int atom_count() const;
  Mask top_mask() const;
  std::size_t element_count() const { return std::size_t{1} << atom_count(); }
  const std::vector<std::string>& labels() const;

  std::string name() const;

  // Labels are cosmetic: two powerset carriers with the same atom count are equal.
  friend bool operator==(const Carrier& x, const Carrier& y);

 private:
  Carrier(CarrierKind kind, std::shared_ptr<const std::vector<std::string>> labels)
      : kind_(kind), labels_(std::move(labels)) {}

  CarrierKind kind_;
  std::shared_ptr<const std::vector<std::string>> labels_;
};

class PowersetElement {
 public:
  PowersetElement(Mask bits, int atom_count);

  Mask bits() const { return bits_; }
  int atom_count() const { return atom_count_; }
  Mask top() const { return atom_count_ == 32 ? ~Mask{0} : ((Mask{1} << atom_count_) - 1); }

  friend bool operator==(const PowersetElement&, const PowersetElement&) = default;

 private:
  Mask bits_;
  int atom_count_;
};

// A finite subset of omega, or a cofinite one stored by its (finite) complement.
class FcSet {
 public:
  static FcSet finite(std::vector<std::uint64_t> members);
  static FcSet cofinite(std::vector<std::uint64_t> complement);
  static FcSet empty() { return finite({}); }
  static FcSet omega() { return cofinite({}); }
  static FcSet singleton(std::uint64_t n) { return finite({n}); }

  bool is_cofinite() const { return cofinite_; }
  bool is_finite() const { return !cofinite_; }
  // The members when finite, the complement when cofinite. Sorted, unique.
  const std::vector<std::uint64_t>& points() const { return points_; }

  bool contains(std::uint64_t n) const;
  bool is_empty() const { return !cofinite_ && points_.empty(); }
  bool is_omega() const { return cofinite_ && points_.empty(); }
  std::optional<std::uint64_t> as_singleton() const;

  FcSet join(const FcSet& other) const;
  FcSet meet(const FcSet& other) const;
  FcSet complement() const { return FcSet(!cofinite_, points_); }

  friend bool operator==(const FcSet&, const FcSet&) = default;

 private:
  FcSet(bool cofinite, std::vector<std::uint64_t> points)
      : cofinite_(cofinite), points_(std::move(points)) {}

  bool cofinite_ = false;
  std::vector<std::uint64_t> points_;
};

// Half-open [lo, hi) with 0 <= lo < hi <= 1; hi = 1 is the right end of the carrier.
struct Interval {
  Rational lo;
  Rational hi;

  friend bool operator==(const Interval&, const Interval&) = default;
};

// A finite union of half-open rational intervals, always held in standard
// representation: 0 <= s0 < t0 < s1 < t1 < ... <= 1.
class IntervalSet {
 public:
  IntervalSet() = default;

  // Sorts, fuses overlapping or touching pieces. Throws MalformedInterval when a
  // pair has lo >= hi or leaves [0,1].
  static IntervalSet normalize(std::vector<Interval> raw);
  static IntervalSet empty() { return {}; }
  static IntervalSet unit() { return normalize({{Rational(0), Rational(1)}}); }
  static IntervalSet single(const Rational& lo, const Rational& hi) { return normalize({{lo, hi}}); }

  const std::vector<Interval>& parts() const { return parts_; }
  bool is_empty() const { return parts_.empty(); }
  bool contains(const Rational& q) const;

  // Right endpoint of the last relevant interval; requires a nonzero element.
  const Rational& last_endpoint() const;

  IntervalSet join(const IntervalSet& other) const;
  IntervalSet meet(const IntervalSet& other) const;
  IntervalSet complement() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> parts_;
};

using Element = std::variant<PowersetElement, FcSet, IntervalSet>;

CarrierKind kind_of(const Element& x);
bool belongs_to(const Element& x, const Carrier& c);
// Throws CarrierMismatch unless x is an element of c.
void require_member(const Carrier& c, const Element& x);

Element join(const Element& x, const Element& y);
Element meet(const Element& x, const Element& y);
Element complement(const Element& x);
Element symdiff(const Element& x, const Element& y);
bool leq(const Element& x, const Element& y);
bool is_zero(const Element& x);
bool is_top(const Element& x);

Element bot(const Carrier& c);
Element top(const Carrier& c);

// Powerset element from its atom mask.
Element mask_element(const Carrier& c, Mask bits);
// Atom mask of a powerset element; throws CarrierMismatch for other kinds.
Mask mask_of(const Element& x);

// Boolean notation: + join, * meet, unary - complement.
inline Element operator+(const Element& x, const Element& y) { return join(x, y); }
inline Element operator*(const Element& x, const Element& y) { return meet(x, y); }
inline Element operator-(const Element& x) { return complement(x); }

// The atoms of a carrier in index order; unbounded for FC(omega).
class AtomSequence {
 public:
  class iterator {
   public:
    using value_type = Element;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const AtomSequence* seq, std::size_t index) : seq_(seq), index_(index) {}

    Element operator*() const { return (*seq_)[index_]; }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++index_;
      return old;
    }
    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      auto bound = it.seq_->size();
      return bound && it.index_ >= *bound;
    }

   private:
    const AtomSequence* seq_ = nullptr;
    std::size_t index_ = 0;
  };

  explicit AtomSequence(Carrier c);

  iterator begin() const { return {this, 0}; }
  std::default_sentinel_t end() const { return {}; }
  std::optional<std::size_t> size() const { return bound_; }
  Element operator[](std::size_t i) const;

 private:
  Carrier carrier_;
  std::optional<std::size_t> bound_;
};

// Throws AtomlessCarrier for the interval algebra.
AtomSequence atoms(const Carrier& c);

IntervalSet normalize_intervals(std::vector<Interval> raw);
// rel(x): endpoints of the standard representation, ascending. Throws EmptyElement for 0.
std::vector<Rational> relevant_points(const Element& x);
std::vector<Interval> relevant_intervals(const Element& x);

std::string format(const Carrier& c, const Element& x);

}  // namespace modalwb

#endif  // MODALWB_ALGEBRA_HPP_
