#ifndef MODALWB_ORACLES_HPP_
#define MODALWB_ORACLES_HPP_

// Brute-force reference answers on small powerset algebras. Everything here
// works on raw atom tables and enumerates; none of it calls into the
// algorithms it is used to check.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace modalwb::oracle {

using Bits = std::uint32_t;
// table[i] = image of atom i; an operator on the powerset of n atoms.
using Table = std::vector<Bits>;
// succ[x] = points y with x R y.
using Relation = std::vector<Bits>;

inline constexpr int kMaxAtoms = 3;

Bits full(int n);
Bits eval(const Table& f, Bits x);
// All n^2-bit tables in lexicographic order, atom 0 most significant.
std::vector<Table> all_tables(int n);
std::vector<Relation> all_relations(int n);

bool leq(const Table& f, const Table& g);
bool annihilates(const Table& f, const Table& g, int n);
std::optional<Table> least_annihilator(const Table& f, int n);
bool has_proper_companion(const Table& f, int n);

// Boolean ideals enumerated as subsets of the 2^n elements; n <= 3.
std::vector<std::vector<Bits>> closed_ideals(const Table& f, int n);
bool subdirectly_irreducible(const Table& f, int n);

// Pareto-minimal decomposing pairs under the product order; n <= 2.
std::vector<std::pair<Table, Table>> minimal_decomposing_pairs(int n);

// <R>(Y) = {x : R(x) meets Y}, as the atom table of the complex algebra.
Table diamond(const Relation& r, int n);
Relation complement(const Relation& r, int n);

bool reflexive(const Relation& r, int n);
bool transitive(const Relation& r, int n);
bool symmetric(const Relation& r, int n);

// Modal axioms by evaluation over all elements.
bool axiom_t(const Table& f, int n);
bool axiom_4(const Table& f, int n);
bool axiom_b(const Table& f, int n);
bool normal_and_additive(const Table& f, int n);

}  // namespace modalwb::oracle

#endif  // MODALWB_ORACLES_HPP_
