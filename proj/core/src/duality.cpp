#include "modalwb/duality.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "modalwb/semilattice.hpp"

namespace modalwb {

namespace {

std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

std::string dot_id(const std::string& label) {
  std::string out = "\"";
  for (char ch : label) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

Frame::Frame(std::vector<std::string> points, std::vector<Mask> successors)
    : points_(std::move(points)), successors_(std::move(successors)) {
  if (points_.size() > static_cast<std::size_t>(kMaxFramePoints)) {
    throw Error(ErrorKind::CapExceeded, "frames are capped at 16 points");
  }
  if (successors_.size() != points_.size()) {
    throw Error(ErrorKind::ContractViolation, "one successor set per point required");
  }
  std::set<std::string> unique(points_.begin(), points_.end());
  if (unique.size() != points_.size()) throw Error(ErrorKind::Name, "duplicate point label");
  for (Mask s : successors_) {
    if ((s & ~all_points()) != 0) throw Error(ErrorKind::ContractViolation, "edge to unknown point");
  }
}

Frame Frame::from_edges(std::vector<std::string> points,
                        const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<Mask> succ(points.size(), 0);
  for (auto [x, y] : edges) {
    if (x >= points.size() || y >= points.size()) {
      throw Error(ErrorKind::ContractViolation, "edge references an unknown point");
    }
    succ[x] |= Mask{1} << y;
  }
  return Frame(std::move(points), std::move(succ));
}

Frame Frame::from_successors(std::vector<std::string> points, std::vector<Mask> successors) {
  return Frame(std::move(points), std::move(successors));
}

Frame Frame::from_successors(std::vector<Mask> successors) {
  auto labels = numbered(successors.size());
  return Frame(std::move(labels), std::move(successors));
}

Frame Frame::identity(std::size_t n) {
  std::vector<Mask> succ(n);
  for (std::size_t i = 0; i < n; ++i) succ[i] = Mask{1} << i;
  return from_successors(std::move(succ));
}

Frame Frame::universal(std::size_t n) {
  Mask all = (Mask{1} << n) - 1;
  return from_successors(std::vector<Mask>(n, all));
}

Frame Frame::empty(std::size_t n) { return from_successors(std::vector<Mask>(n, 0)); }

std::optional<std::size_t> Frame::index_of(const std::string& label) const {
  auto it = std::find(points_.begin(), points_.end(), label);
  if (it == points_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

Frame Frame::complement() const {
  std::vector<Mask> succ(size());
  for (std::size_t i = 0; i < size(); ++i) succ[i] = ~successors_[i] & all_points();
  return Frame(points_, std::move(succ));
}

Frame Frame::converse() const {
  std::vector<Mask> succ(size(), 0);
  for (std::size_t x = 0; x < size(); ++x) {
    for (std::size_t y = 0; y < size(); ++y) {
      if (related(x, y)) succ[y] |= Mask{1} << x;
    }
  }
  return Frame(points_, std::move(succ));
}

bool Frame::reflexive() const {
  for (std::size_t x = 0; x < size(); ++x) {
    if (!related(x, x)) return false;
  }
  return true;
}

bool Frame::transitive() const {
  for (std::size_t x = 0; x < size(); ++x) {
    Mask two_steps = 0;
    for (std::size_t y = 0; y < size(); ++y) {
      if (related(x, y)) two_steps |= successors_[y];
    }
    if ((two_steps & ~successors_[x]) != 0) return false;
  }
  return true;
}

bool Frame::symmetric() const { return *this == converse(); }

std::string Frame::to_dot(const std::string& name) const {
  std::ostringstream out;
  out << "digraph " << dot_id(name) << " {\n";
  for (const auto& p : points_) out << "  " << dot_id(p) << ";\n";
  for (std::size_t x = 0; x < size(); ++x) {
    for (std::size_t y = 0; y < size(); ++y) {
      if (related(x, y)) out << "  " << dot_id(points_[x]) << " -> " << dot_id(points_[y]) << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

Mask poss(const Frame& frame, Mask y) {
  if ((y & ~frame.all_points()) != 0) throw Error(ErrorKind::ContractViolation, "unknown points in set");
  Mask out = 0;
  for (std::size_t x = 0; x < frame.size(); ++x) {
    if ((frame.successors()[x] & y) != 0) out |= Mask{1} << x;
  }
  return out;
}

ComplexAlgebra complex_algebra(const Frame& frame) {
  if (frame.size() == 0) throw Error(ErrorKind::DegenerateParameter, "empty frame");
  Carrier c = Carrier::powerset(frame.points());
  AtomTable table(frame.size());
  for (std::size_t i = 0; i < frame.size(); ++i) table[i] = poss(frame, Mask{1} << i);
  return {c, ModalOperator::tabulated(c, std::move(table), "poss")};
}

Frame canonical_frame(const ModalOperator& f) {
  const Carrier& c = f.carrier();
  if (!c.is_finite()) throw Error(ErrorKind::Unsupported, "canonical frames of symbolic carriers: use canonical_frame_fc");
  auto n = static_cast<std::size_t>(c.atom_count());
  std::vector<Mask> succ(n, 0);
  // a R b iff a <= f(b)
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t a = 0; a < n; ++a) {
      if ((f.table()[b] >> a) & 1U) succ[a] |= Mask{1} << b;
    }
  }
  return Frame::from_successors(c.labels(), std::move(succ));
}

StoneReport stone_check(const ModalOperator& f) {
  const Carrier& c = f.carrier();
  Frame frame = canonical_frame(f);
  StoneReport out;
  for (Mask a = 0; a < c.element_count(); ++a) {
    ++out.checked;
    // h is the identity on masks: bit i of a is atom i, which is point i.
    if (f.eval(a) != poss(frame, a)) {
      out.holds = false;
      out.witness = mask_element(c, a);
      break;
    }
  }
  out.round_trip = complex_algebra(frame).op.table() == f.table();
  return out;
}

PossComplementReport poss_complement_theorem_check(const Frame& frame) {
  auto cm = complex_algebra(frame);
  auto neg = complex_algebra(frame.complement());
  ModalOperator pc = dual_pseudocomplement(cm.op);
  ModalOperator complement_poss = ModalOperator::tabulated(cm.carrier, neg.op.table(), "poss(-R)");
  PossComplementReport out{true, std::nullopt, pc, complement_poss};
  for (Mask y = 0; y < cm.carrier.element_count(); ++y) {
    if (pc.eval(y) != complement_poss.eval(y)) {
      out.holds = false;
      out.witness = y;
      break;
    }
  }
  return out;
}

// --- FC(omega) ---------------------------------------------------------------

FcCanonicalFrame::FcCanonicalFrame(ModalOperator f, FcRelationSource source)
    : f_(std::move(f)), source_(source) {}

bool FcCanonicalFrame::related(const FcUltrafilter& x, const FcUltrafilter& y) const {
  if (y.cofinite) return true;  // F_n R U for every n, and U R U
  std::uint64_t m = y.n;
  if (x.cofinite) return m != 0;
  std::uint64_t n = x.n;
  if (source_ == FcRelationSource::Printed) {
    bool m_odd = m % 2 == 1;
    return (n == 0 && (m == 0 || m_odd)) || (n % 2 == 0 && m != 0) || (n % 2 == 1 && n != m);
  }
  // F_n R F_m iff f({m}) is in F_n iff n is in f({m}).
  const FcSet image = std::get<FcSet>(f_(FcSet::singleton(m)));
  return image.contains(n);
}

std::pair<std::vector<std::uint64_t>, bool> FcCanonicalFrame::neg_poss_of_principal(std::uint64_t m,
                                                                                    std::uint64_t bound) const {
  std::vector<std::uint64_t> principal;
  auto y = FcUltrafilter::principal(m);
  for (std::uint64_t n = 0; n < bound; ++n) {
    if (in_neg_poss_of(FcUltrafilter::principal(n), y)) principal.push_back(n);
  }
  return {principal, in_neg_poss_of(FcUltrafilter::u(), y)};
}

std::string FcCanonicalFrame::to_dot(std::uint64_t k) const {
  std::vector<FcUltrafilter> pts;
  for (std::uint64_t n = 0; n < k; ++n) pts.push_back(FcUltrafilter::principal(n));
  pts.push_back(FcUltrafilter::u());
  std::ostringstream out;
  out << "digraph \"fc\" {\n";
  for (const auto& p : pts) out << "  " << dot_id(p.label()) << ";\n";
  for (const auto& x : pts) {
    for (const auto& y : pts) {
      if (related(x, y)) out << "  " << dot_id(x.label()) << " -> " << dot_id(y.label()) << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

FcCanonicalFrame canonical_frame_fc(const ModalOperator& f, FcRelationSource source) {
  if (f.carrier().kind() != CarrierKind::FiniteCofinite || f.provenance() != "exfc") {
    throw Error(ErrorKind::Unsupported, "symbolic canonical frame is only available for the exfc operator");
  }
  return FcCanonicalFrame(f, source);
}

bool is_unary_discriminator(const ModalOperator& f, const SampleOptions& opts) {
  return pointwise_equal(f, discriminator(f.carrier()), opts).holds;
}

TernaryOp ternary_from_unary(const ModalOperator& d) {
  if (!is_unary_discriminator(d)) {
    throw Error(ErrorKind::PreconditionFailed, "operator is not the unary discriminator");
  }
  return [d](const Element& a, const Element& b, const Element& c) {
    Element s = d(symdiff(a, b));
    return join(meet(s, a), meet(complement(s), c));
  };
}

bool is_ternary_discriminator(const Carrier& c, const TernaryOp& t) {
  if (!c.is_finite()) throw Error(ErrorKind::Unsupported, "exhaustive check needs a powerset carrier");
  auto n = static_cast<Mask>(c.element_count());
  for (Mask a = 0; a < n; ++a) {
    for (Mask b = 0; b < n; ++b) {
      for (Mask x = 0; x < n; ++x) {
        Mask expect = a == b ? x : a;
        if (mask_of(t(mask_element(c, a), mask_element(c, b), mask_element(c, x))) != expect) return false;
      }
    }
  }
  return true;
}

}  // namespace modalwb
