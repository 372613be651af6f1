#include "modalwb/algebra.hpp"

#include <algorithm>

namespace modalwb {

namespace {

using Points = std::vector<std::uint64_t>;

Points sorted_unique(Points v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

Points set_union(const Points& x, const Points& y) {
  Points out;
  std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

Points set_intersection(const Points& x, const Points& y) {
  Points out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

Points set_difference(const Points& x, const Points& y) {
  Points out;
  std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

[[noreturn]] void mismatch(const char* what) {
  throw Error(ErrorKind::CarrierMismatch, std::string("carrier mismatch in ") + what);
}

std::string default_label(int i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "a" + std::to_string(i);
}

}  // namespace

// --- Carrier ---------------------------------------------------------------

Carrier Carrier::powerset(std::vector<std::string> atom_labels) {
  if (atom_labels.empty()) {
    throw Error(ErrorKind::DegenerateParameter, "a powerset carrier needs at least one atom");
  }
  if (atom_labels.size() > static_cast<std::size_t>(kMaxPowersetAtoms)) {
    throw Error(ErrorKind::CapExceeded, "powerset carriers are capped at " +
                                            std::to_string(kMaxPowersetAtoms) + " atoms");
  }
  auto sorted = atom_labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::DegenerateParameter, "duplicate atom label");
  }
  return Carrier(CarrierKind::FinitePowerset,
                 std::make_shared<const std::vector<std::string>>(std::move(atom_labels)));
}

Carrier Carrier::powerset(int atom_count) {
  std::vector<std::string> labels;
  for (int i = 0; i < atom_count; ++i) labels.push_back(default_label(i));
  return powerset(std::move(labels));
}

Carrier Carrier::finite_cofinite() { return Carrier(CarrierKind::FiniteCofinite, nullptr); }

Carrier Carrier::rational_interval() { return Carrier(CarrierKind::RationalInterval, nullptr); }

int Carrier::atom_count() const {
  if (kind_ != CarrierKind::FinitePowerset) {
    throw Error(ErrorKind::Unsupported, "atom count requested of an infinite carrier");
  }
  return static_cast<int>(labels_->size());
}

Mask Carrier::top_mask() const { return (Mask{1} << atom_count()) - 1; }

const std::vector<std::string>& Carrier::labels() const {
  static const std::vector<std::string> kNone;
  return labels_ ? *labels_ : kNone;
}

std::string Carrier::name() const {
  switch (kind_) {
    case CarrierKind::FinitePowerset: return "powerset(" + std::to_string(atom_count()) + ")";
    case CarrierKind::FiniteCofinite: return "fc";
    case CarrierKind::RationalInterval: return "intervals";
  }
  return "?";
}

bool operator==(const Carrier& x, const Carrier& y) {
  if (x.kind_ != y.kind_) return false;
  if (x.kind_ != CarrierKind::FinitePowerset) return true;
  return x.labels_->size() == y.labels_->size();
}

// --- PowersetElement -------------------------------------------------------

PowersetElement::PowersetElement(Mask bits, int atom_count) : bits_(bits), atom_count_(atom_count) {
  if (atom_count < 1 || atom_count > kMaxPowersetAtoms) {
    throw Error(ErrorKind::CapExceeded, "powerset element width out of range");
  }
  if ((bits & ~top()) != 0) {
    throw Error(ErrorKind::CarrierMismatch, "mask has bits beyond the atom count");
  }
}

// --- FcSet -----------------------------------------------------------------

FcSet FcSet::finite(std::vector<std::uint64_t> members) {
  return FcSet(false, sorted_unique(std::move(members)));
}

FcSet FcSet::cofinite(std::vector<std::uint64_t> complement) {
  return FcSet(true, sorted_unique(std::move(complement)));
}

bool FcSet::contains(std::uint64_t n) const {
  bool listed = std::binary_search(points_.begin(), points_.end(), n);
  return cofinite_ ? !listed : listed;
}

std::optional<std::uint64_t> FcSet::as_singleton() const {
  if (!cofinite_ && points_.size() == 1) return points_.front();
  return std::nullopt;
}

FcSet FcSet::join(const FcSet& other) const {
  if (!cofinite_ && !other.cofinite_) return FcSet(false, set_union(points_, other.points_));
  if (cofinite_ && other.cofinite_) return FcSet(true, set_intersection(points_, other.points_));
  const FcSet& fin = cofinite_ ? other : *this;
  const FcSet& cof = cofinite_ ? *this : other;
  return FcSet(true, set_difference(cof.points_, fin.points_));
}

FcSet FcSet::meet(const FcSet& other) const {
  if (!cofinite_ && !other.cofinite_) return FcSet(false, set_intersection(points_, other.points_));
  if (cofinite_ && other.cofinite_) return FcSet(true, set_union(points_, other.points_));
  const FcSet& fin = cofinite_ ? other : *this;
  const FcSet& cof = cofinite_ ? *this : other;
  return FcSet(false, set_difference(fin.points_, cof.points_));
}

// --- IntervalSet -----------------------------------------------------------

IntervalSet IntervalSet::normalize(std::vector<Interval> raw) {
  for (const auto& piece : raw) {
    if (!(piece.lo < piece.hi) || piece.lo < 0 || piece.hi > 1) {
      throw Error(ErrorKind::MalformedInterval,
                  "malformed interval [" + to_string(piece.lo) + "," + to_string(piece.hi) + ")");
    }
  }
  std::sort(raw.begin(), raw.end(), [](const Interval& x, const Interval& y) {
    return x.lo < y.lo || (x.lo == y.lo && x.hi < y.hi);
  });
  IntervalSet out;
  for (auto& piece : raw) {
    if (!out.parts_.empty() && piece.lo <= out.parts_.back().hi) {
      if (piece.hi > out.parts_.back().hi) out.parts_.back().hi = piece.hi;
    } else {
      out.parts_.push_back(std::move(piece));
    }
  }
  return out;
}

bool IntervalSet::contains(const Rational& q) const {
  auto it = std::upper_bound(parts_.begin(), parts_.end(), q,
                             [](const Rational& v, const Interval& piece) { return v < piece.lo; });
  if (it == parts_.begin()) return false;
  --it;
  return q < it->hi;
}

const Rational& IntervalSet::last_endpoint() const {
  if (parts_.empty()) throw Error(ErrorKind::EmptyElement, "zero element has no endpoints");
  return parts_.back().hi;
}

IntervalSet IntervalSet::join(const IntervalSet& other) const {
  std::vector<Interval> raw = parts_;
  raw.insert(raw.end(), other.parts_.begin(), other.parts_.end());
  return normalize(std::move(raw));
}

IntervalSet IntervalSet::meet(const IntervalSet& other) const {
  IntervalSet out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < parts_.size() && j < other.parts_.size()) {
    const Interval& x = parts_[i];
    const Interval& y = other.parts_[j];
    const Rational& lo = x.lo < y.lo ? y.lo : x.lo;
    const Rational& hi = x.hi < y.hi ? x.hi : y.hi;
    if (lo < hi) out.parts_.push_back({lo, hi});
    if (x.hi < y.hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return out;
}

IntervalSet IntervalSet::complement() const {
  IntervalSet out;
  Rational cursor(0);
  for (const auto& piece : parts_) {
    if (cursor < piece.lo) out.parts_.push_back({cursor, piece.lo});
    cursor = piece.hi;
  }
  if (cursor < 1) out.parts_.push_back({cursor, Rational(1)});
  return out;
}

// --- Element ---------------------------------------------------------------

CarrierKind kind_of(const Element& x) {
  switch (x.index()) {
    case 0: return CarrierKind::FinitePowerset;
    case 1: return CarrierKind::FiniteCofinite;
    default: return CarrierKind::RationalInterval;
  }
}

bool belongs_to(const Element& x, const Carrier& c) {
  if (kind_of(x) != c.kind()) return false;
  if (c.is_finite()) return std::get<PowersetElement>(x).atom_count() == c.atom_count();
  return true;
}

void require_member(const Carrier& c, const Element& x) {
  if (!belongs_to(x, c)) {
    throw Error(ErrorKind::CarrierMismatch, "element does not belong to carrier " + c.name());
  }
}

namespace {

template <class Op>
Element binary(const Element& x, const Element& y, const char* what, Op op) {
  if (x.index() != y.index()) mismatch(what);
  return std::visit(
      [&](const auto& lhs) -> Element {
        using T = std::decay_t<decltype(lhs)>;
        const T& rhs = std::get<T>(y);
        if constexpr (std::is_same_v<T, PowersetElement>) {
          if (lhs.atom_count() != rhs.atom_count()) mismatch(what);
        }
        return op(lhs, rhs);
      },
      x);
}

struct JoinOp {
  Element operator()(const PowersetElement& x, const PowersetElement& y) const {
    return PowersetElement(x.bits() | y.bits(), x.atom_count());
  }
  Element operator()(const FcSet& x, const FcSet& y) const { return x.join(y); }
  Element operator()(const IntervalSet& x, const IntervalSet& y) const { return x.join(y); }
};

struct MeetOp {
  Element operator()(const PowersetElement& x, const PowersetElement& y) const {
    return PowersetElement(x.bits() & y.bits(), x.atom_count());
  }
  Element operator()(const FcSet& x, const FcSet& y) const { return x.meet(y); }
  Element operator()(const IntervalSet& x, const IntervalSet& y) const { return x.meet(y); }
};

}  // namespace

Element join(const Element& x, const Element& y) { return binary(x, y, "join", JoinOp{}); }

Element meet(const Element& x, const Element& y) { return binary(x, y, "meet", MeetOp{}); }

Element complement(const Element& x) {
  return std::visit(
      [](const auto& v) -> Element {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PowersetElement>) {
          return PowersetElement(~v.bits() & v.top(), v.atom_count());
        } else {
          return v.complement();
        }
      },
      x);
}

Element symdiff(const Element& x, const Element& y) {
  return join(meet(x, complement(y)), meet(complement(x), y));
}

bool leq(const Element& x, const Element& y) { return join(x, y) == y; }

bool is_zero(const Element& x) {
  return std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PowersetElement>) {
          return v.bits() == 0;
        } else {
          return v.is_empty();
        }
      },
      x);
}

bool is_top(const Element& x) { return is_zero(complement(x)); }

Element bot(const Carrier& c) {
  switch (c.kind()) {
    case CarrierKind::FinitePowerset: return PowersetElement(0, c.atom_count());
    case CarrierKind::FiniteCofinite: return FcSet::empty();
    case CarrierKind::RationalInterval: return IntervalSet::empty();
  }
  return FcSet::empty();
}

Element top(const Carrier& c) { return complement(bot(c)); }

Element mask_element(const Carrier& c, Mask bits) {
  if (!c.is_finite()) mismatch("mask_element");
  return PowersetElement(bits, c.atom_count());
}

Mask mask_of(const Element& x) {
  if (const auto* p = std::get_if<PowersetElement>(&x)) return p->bits();
  mismatch("mask_of");
}

// --- atoms -----------------------------------------------------------------

AtomSequence::AtomSequence(Carrier c) : carrier_(std::move(c)) {
  if (carrier_.is_atomless()) {
    throw Error(ErrorKind::AtomlessCarrier, "the interval algebra is atomless");
  }
  if (carrier_.is_finite()) bound_ = static_cast<std::size_t>(carrier_.atom_count());
}

Element AtomSequence::operator[](std::size_t i) const {
  if (carrier_.is_finite()) return mask_element(carrier_, Mask{1} << i);
  return FcSet::singleton(i);
}

AtomSequence atoms(const Carrier& c) { return AtomSequence(c); }

// --- intervals -------------------------------------------------------------

IntervalSet normalize_intervals(std::vector<Interval> raw) {
  return IntervalSet::normalize(std::move(raw));
}

std::vector<Interval> relevant_intervals(const Element& x) {
  const auto* set = std::get_if<IntervalSet>(&x);
  if (set == nullptr) mismatch("relevant_intervals");
  if (set->is_empty()) throw Error(ErrorKind::EmptyElement, "0 has no relevant intervals");
  return set->parts();
}

std::vector<Rational> relevant_points(const Element& x) {
  std::vector<Rational> out;
  for (const auto& piece : relevant_intervals(x)) {
    out.push_back(piece.lo);
    out.push_back(piece.hi);
  }
  return out;
}

// --- formatting ------------------------------------------------------------

namespace {

std::string format_points(const std::vector<std::uint64_t>& pts) {
  std::string s = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(pts[i]);
  }
  return s + "}";
}

}  // namespace

std::string format(const Carrier& c, const Element& x) {
  require_member(c, x);
  if (is_zero(x)) return "0";
  if (const auto* p = std::get_if<PowersetElement>(&x)) {
    std::string s;
    for (int i = 0; i < p->atom_count(); ++i) {
      if ((p->bits() >> i) & 1U) {
        if (!s.empty()) s += "+";
        s += c.labels()[static_cast<std::size_t>(i)];
      }
    }
    return s;
  }
  if (const auto* f = std::get_if<FcSet>(&x)) {
    return (f->is_cofinite() ? "co" : "") + format_points(f->points());
  }
  const auto& set = std::get<IntervalSet>(x);
  std::string s;
  for (const auto& piece : set.parts()) {
    if (!s.empty()) s += "+";
    s += "[" + to_string(piece.lo) + "," + to_string(piece.hi) + ")";
  }
  return s;
}

}  // namespace modalwb
