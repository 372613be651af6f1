#ifndef MODALWB_DUALITY_HPP_
#define MODALWB_DUALITY_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modalwb/operator.hpp"

namespace modalwb {

inline constexpr int kMaxFramePoints = 16;

// A finite frame on at most 16 points. successors()[x] is the bitmask R(x).
class Frame {
 public:
  static Frame from_edges(std::vector<std::string> points,
                          const std::vector<std::pair<std::size_t, std::size_t>>& edges);
  static Frame from_successors(std::vector<std::string> points, std::vector<Mask> successors);
  // Points 0, 1, ... labelled "0", "1", ...
  static Frame from_successors(std::vector<Mask> successors);
  static Frame identity(std::size_t n);
  static Frame universal(std::size_t n);
  static Frame empty(std::size_t n);

  std::size_t size() const { return points_.size(); }
  const std::vector<std::string>& points() const { return points_; }
  const std::vector<Mask>& successors() const { return successors_; }
  Mask all_points() const { return size() == 32 ? ~Mask{0} : ((Mask{1} << size()) - 1); }
  bool related(std::size_t x, std::size_t y) const { return ((successors_[x] >> y) & 1U) != 0; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  Frame complement() const;
  Frame converse() const;

  bool reflexive() const;
  bool transitive() const;
  bool symmetric() const;

  std::string to_dot(const std::string& name = "frame") const;

  friend bool operator==(const Frame& x, const Frame& y) { return x.successors_ == y.successors_; }

 private:
  Frame(std::vector<std::string> points, std::vector<Mask> successors);

  std::vector<std::string> points_;
  std::vector<Mask> successors_;
};

// <R>(Y) = {x : R(x) meets Y}
Mask poss(const Frame& frame, Mask y);

struct ComplexAlgebra {
  Carrier carrier;
  ModalOperator op;
};

ComplexAlgebra complex_algebra(const Frame& frame);

// Points are the atoms (principal ultrafilters), with a R b iff a <= f(b).
Frame canonical_frame(const ModalOperator& f);

struct StoneReport {
  bool holds = true;
  std::size_t checked = 0;
  std::optional<Element> witness;
  // Cm(Cf(B, f)) has the same table as f under atom i <-> point i.
  bool round_trip = true;
};

// h(f(a)) = <R_f>(h(a)) for every a, with h(a) the atoms below a.
StoneReport stone_check(const ModalOperator& f);

struct PossComplementReport {
  bool holds = true;
  std::optional<Mask> witness;
  ModalOperator pseudocomplement;
  ModalOperator complement_poss;
};

// Compares the dual pseudocomplement of <R> in Cm(frame) with <-R>.
PossComplementReport poss_complement_theorem_check(const Frame& frame);

// Ultrafilters of FC(omega): principal F_n or the cofinite ultrafilter U.
struct FcUltrafilter {
  bool cofinite = false;
  std::uint64_t n = 0;

  static FcUltrafilter principal(std::uint64_t n) { return {false, n}; }
  static FcUltrafilter u() { return {true, 0}; }
  std::string label() const { return cofinite ? "U" : "F" + std::to_string(n); }

  friend bool operator==(const FcUltrafilter&, const FcUltrafilter&) = default;
};

// The case table printed with the FC example, or the relation recomputed from
// a R_f b <=> f[b] is contained in a. See README for how the two differ.
enum class FcRelationSource { Printed, Derived };

class FcCanonicalFrame {
 public:
  FcCanonicalFrame(ModalOperator f, FcRelationSource source);

  FcRelationSource source() const { return source_; }
  bool related(const FcUltrafilter& x, const FcUltrafilter& y) const;

  // <R>({y}) is the converse image R^{-1}(y); membership of x in it.
  bool in_poss_of(const FcUltrafilter& x, const FcUltrafilter& y) const { return related(x, y); }
  bool in_neg_poss_of(const FcUltrafilter& x, const FcUltrafilter& y) const { return !related(x, y); }

  // The principal part of <-R>({F_m}) below `bound` and whether U belongs to it.
  std::pair<std::vector<std::uint64_t>, bool> neg_poss_of_principal(std::uint64_t m,
                                                                    std::uint64_t bound) const;

  // The first k principal points plus U.
  std::string to_dot(std::uint64_t k = 8) const;

 private:
  ModalOperator f_;
  FcRelationSource source_;
};

// Rejects operators other than the FC example's f.
FcCanonicalFrame canonical_frame_fc(const ModalOperator& f, FcRelationSource source = FcRelationSource::Printed);

bool is_unary_discriminator(const ModalOperator& f, const SampleOptions& opts = {});

using TernaryOp = std::function<Element(const Element&, const Element&, const Element&)>;

// t(a,b,c) = d(a^b)*a + -d(a^b)*c. Throws PreconditionFailed unless d is the
// unary discriminator.
TernaryOp ternary_from_unary(const ModalOperator& d);

// t(a,a,c) = c and t(a,b,c) = a for a != b, on every triple of a powerset carrier.
bool is_ternary_discriminator(const Carrier& c, const TernaryOp& t);

}  // namespace modalwb

#endif  // MODALWB_DUALITY_HPP_
