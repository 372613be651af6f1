#include "modalwb/oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace modalwb::oracle {

namespace {

void require_small(int n, int cap) {
  if (n < 1 || n > cap) throw std::out_of_range("oracle size out of range");
}

bool contains(const std::vector<Bits>& set, Bits x) { return std::find(set.begin(), set.end(), x) != set.end(); }

}  // namespace

Bits full(int n) { return (Bits{1} << n) - 1; }

Bits eval(const Table& f, Bits x) {
  Bits out = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if ((x >> i) & 1U) out |= f[i];
  }
  return out;
}

std::vector<Table> all_tables(int n) {
  require_small(n, 4);
  std::vector<Table> out;
  std::uint64_t count = std::uint64_t{1} << (n * n);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Table t(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      int shift = (n - 1 - i) * n;
      t[static_cast<std::size_t>(i)] = static_cast<Bits>((idx >> shift) & full(n));
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<Relation> all_relations(int n) { return all_tables(n); }

bool leq(const Table& f, const Table& g) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if ((f[i] & ~g[i]) != 0) return false;
  }
  return true;
}

bool annihilates(const Table& f, const Table& g, int n) {
  for (Bits x = 1; x <= full(n); ++x) {
    if ((eval(f, x) | eval(g, x)) != full(n)) return false;
  }
  return true;
}

std::optional<Table> least_annihilator(const Table& f, int n) {
  require_small(n, kMaxAtoms);
  std::vector<Table> ann;
  for (auto& g : all_tables(n)) {
    if (annihilates(f, g, n)) ann.push_back(std::move(g));
  }
  for (const auto& g : ann) {
    if (std::all_of(ann.begin(), ann.end(), [&](const Table& h) { return leq(g, h); })) return g;
  }
  return std::nullopt;
}

bool has_proper_companion(const Table& f, int n) {
  require_small(n, kMaxAtoms);
  Table one(static_cast<std::size_t>(n), full(n));
  for (const auto& g : all_tables(n)) {
    if (g != one && annihilates(f, g, n)) return true;
  }
  return false;
}

std::vector<std::vector<Bits>> closed_ideals(const Table& f, int n) {
  require_small(n, kMaxAtoms);
  std::size_t elements = std::size_t{1} << n;
  std::vector<std::vector<Bits>> out;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << elements); ++subset) {
    std::vector<Bits> ideal;
    for (Bits x = 0; x < elements; ++x) {
      if ((subset >> x) & 1U) ideal.push_back(x);
    }
    if (!contains(ideal, 0)) continue;
    bool ok = true;
    for (Bits a : ideal) {
      for (Bits b = 0; b < elements && ok; ++b) {
        if ((b & ~a) == 0 && !contains(ideal, b)) ok = false;   // downward closed
      }
      for (Bits b : ideal) {
        if (!contains(ideal, a | b)) ok = false;                // closed under joins
      }
      if (!contains(ideal, eval(f, a))) ok = false;            // closed under f
      if (!ok) break;
    }
    if (ok) out.push_back(std::move(ideal));
  }
  return out;
}

bool subdirectly_irreducible(const Table& f, int n) {
  // Congruences correspond to closed ideals; SI iff there is a least closed
  // ideal other than {0}.
  auto ideals = closed_ideals(f, n);
  std::vector<const std::vector<Bits>*> nontrivial;
  for (const auto& i : ideals) {
    if (i.size() > 1) nontrivial.push_back(&i);
  }
  for (const auto* cand : nontrivial) {
    bool least = std::all_of(nontrivial.begin(), nontrivial.end(), [&](const std::vector<Bits>* other) {
      return std::all_of(cand->begin(), cand->end(), [&](Bits x) { return contains(*other, x); });
    });
    if (least) return true;
  }
  return false;
}

std::vector<std::pair<Table, Table>> minimal_decomposing_pairs(int n) {
  require_small(n, 2);
  auto tables = all_tables(n);
  std::vector<std::pair<Table, Table>> pairs;
  for (const auto& f : tables) {
    for (const auto& g : tables) {
      if (annihilates(f, g, n)) pairs.emplace_back(f, g);
    }
  }
  std::vector<std::pair<Table, Table>> out;
  for (const auto& p : pairs) {
    bool minimal = true;
    for (const auto& q : pairs) {
      if (q != p && leq(q.first, p.first) && leq(q.second, p.second)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(p);
  }
  return out;
}

Table diamond(const Relation& r, int n) {
  Table out(static_cast<std::size_t>(n), 0);
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      if ((r[static_cast<std::size_t>(x)] >> y) & 1U) out[static_cast<std::size_t>(y)] |= Bits{1} << x;
    }
  }
  return out;
}

Relation complement(const Relation& r, int n) {
  Relation out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) out[i] = ~r[i] & full(n);
  return out;
}

bool reflexive(const Relation& r, int n) {
  for (int x = 0; x < n; ++x) {
    if (!((r[static_cast<std::size_t>(x)] >> x) & 1U)) return false;
  }
  return true;
}

bool transitive(const Relation& r, int n) {
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!((r[static_cast<std::size_t>(x)] >> y) & 1U)) continue;
      if ((r[static_cast<std::size_t>(y)] & ~r[static_cast<std::size_t>(x)]) != 0) return false;
    }
  }
  return true;
}

bool symmetric(const Relation& r, int n) {
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      bool xy = (r[static_cast<std::size_t>(x)] >> y) & 1U;
      bool yx = (r[static_cast<std::size_t>(y)] >> x) & 1U;
      if (xy != yx) return false;
    }
  }
  return true;
}

bool axiom_t(const Table& f, int n) {
  for (Bits x = 0; x <= full(n); ++x) {
    if ((x & ~eval(f, x)) != 0) return false;
  }
  return true;
}

bool axiom_4(const Table& f, int n) {
  for (Bits x = 0; x <= full(n); ++x) {
    if ((eval(f, eval(f, x)) & ~eval(f, x)) != 0) return false;
  }
  return true;
}

bool axiom_b(const Table& f, int n) {
  // x <= -f(-f(x))
  for (Bits x = 0; x <= full(n); ++x) {
    Bits box_dia = ~eval(f, ~eval(f, x) & full(n)) & full(n);
    if ((x & ~box_dia) != 0) return false;
  }
  return true;
}

bool normal_and_additive(const Table& f, int n) {
  if (eval(f, 0) != 0) return false;
  for (Bits x = 0; x <= full(n); ++x) {
    for (Bits y = 0; y <= full(n); ++y) {
      if (eval(f, x | y) != (eval(f, x) | eval(f, y))) return false;
    }
  }
  return true;
}

}  // namespace modalwb::oracle
