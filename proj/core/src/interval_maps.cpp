#include "modalwb/interval_maps.hpp"

namespace modalwb {

SternBrocotIsomorphism::SternBrocotIsomorphism(QuadraticNumber p) : p_(std::move(p)) {
  if (p_.is_rational() || p_ <= QuadraticNumber(Rational(0)) || p_ >= QuadraticNumber(Rational(1))) {
    throw Error(ErrorKind::DegenerateParameter, "lower bound must be an irrational in (0,1)");
  }
}

Rational SternBrocotIsomorphism::operator()(const Rational& q) const {
  if (q <= 0 || q > 1) throw Error(ErrorKind::ContractViolation, "h is defined on (0,1]");
  if (q == 1) return Rational(1);
  std::lock_guard<std::mutex> lock(mu_);
  if (auto it = memo_.find(q); it != memo_.end()) return it->second;
  Integer ln = 0, ld = 1, rn = 1, rd = 1;
  QuadraticNumber h_left = p_;
  Rational h_right(1);
  for (;;) {
    Integer mn = ln + rn;
    Integer md = ld + rd;
    Rational m(mn, md);
    Rational hm;
    if (auto it = memo_.find(m); it != memo_.end()) {
      hm = it->second;
    } else {
      hm = simplest_between(h_left, QuadraticNumber(h_right));
      if (!(h_left < QuadraticNumber(hm)) || !(hm < h_right)) {
        throw Error(ErrorKind::Internal, "order isomorphism lost monotonicity");
      }
      memo_.emplace(m, hm);
    }
    if (m == q) return hm;
    if (q < m) {
      rn = mn;
      rd = md;
      h_right = hm;
    } else {
      ln = mn;
      ld = md;
      h_left = QuadraticNumber(hm);
    }
  }
}

std::size_t SternBrocotIsomorphism::memo_size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return memo_.size();
}

namespace {

Rational total_length(const IntervalSet& x) {
  Rational sum = 0;
  for (const auto& piece : x.parts()) sum += piece.hi - piece.lo;
  return sum;
}

}  // namespace

PiecewiseAffineMap::PiecewiseAffineMap(IntervalSet domain, IntervalSet codomain)
    : domain_(std::move(domain)), codomain_(std::move(codomain)) {
  if (domain_.is_empty() || codomain_.is_empty()) {
    throw Error(ErrorKind::DegenerateParameter, "isomorphism between relativizations needs nonzero elements");
  }
  domain_length_ = total_length(domain_);
  codomain_length_ = total_length(codomain_);
}

Rational PiecewiseAffineMap::fraction(const Rational& q) const {
  Rational below = 0;
  for (const auto& piece : domain_.parts()) {
    if (q <= piece.lo) break;
    below += (q < piece.hi ? q : piece.hi) - piece.lo;
  }
  return below / domain_length_;
}

IntervalSet PiecewiseAffineMap::image_of_range(const Rational& u0, const Rational& u1) const {
  Rational lo_len = u0 * codomain_length_;
  Rational hi_len = u1 * codomain_length_;
  std::vector<Interval> raw;
  Rational before = 0;
  for (const auto& piece : codomain_.parts()) {
    Rational width = piece.hi - piece.lo;
    Rational a = lo_len > before ? lo_len : before;
    Rational b = hi_len < before + width ? hi_len : before + width;
    if (a < b) raw.push_back({piece.lo + (a - before), piece.lo + (b - before)});
    before += width;
  }
  return IntervalSet::normalize(std::move(raw));
}

IntervalSet PiecewiseAffineMap::operator()(const IntervalSet& x) const {
  if (!(x.join(domain_) == domain_)) {
    throw Error(ErrorKind::ContractViolation, "argument is not below the domain");
  }
  IntervalSet out;
  for (const auto& piece : x.parts()) out = out.join(image_of_range(fraction(piece.lo), fraction(piece.hi)));
  return out;
}

}  // namespace modalwb
