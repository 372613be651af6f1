#ifndef MODALWB_DSL_AST_HPP_
#define MODALWB_DSL_AST_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "modalwb/rational.hpp"

namespace modalwb::dsl {

// Source position, 1-based. Positions never take part in AST equality, so a
// pretty-printed and re-parsed script compares equal to the original.
struct Pos {
  int line = 1;
  int column = 1;
  friend bool operator==(const Pos&, const Pos&) { return true; }
};

std::string to_string(const Pos& p);

struct ElemExpr {
  enum class Kind { Zero, One, Atom, FcFinite, FcCofinite, Interval, Join, Meet, Complement };
  Kind kind = Kind::Zero;
  std::string atom;
  std::vector<std::uint64_t> points;
  Rational lo;
  Rational hi;
  std::vector<ElemExpr> children;
  Pos pos;

  friend bool operator==(const ElemExpr&, const ElemExpr&) = default;
};

struct AlgebraDecl {
  enum class Kind { Powerset, Fc, Intervals };
  std::string name;
  Kind kind = Kind::Powerset;
  std::vector<std::string> atoms;
  Pos pos;
  friend bool operator==(const AlgebraDecl&, const AlgebraDecl&) = default;
};

struct TableEntry {
  std::string atom;
  ElemExpr value;
  Pos pos;
  friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

// builtin(...). Which of the argument slots are used depends on kind:
//   discriminator | zero | identity
//   relativized(ELEM)
//   join, OP, OP | compose, OP, OP
//   iterate, OP, N
//   pc, OP
//   poss, FRAME
//   NAME[(key=ELEM, ...)] [, AUX]   kind "example", names = {NAME[, AUX]}
struct Builtin {
  std::string kind;
  std::vector<std::string> names;
  std::optional<std::int64_t> number;
  std::optional<ElemExpr> element;
  std::vector<std::pair<std::string, ElemExpr>> params;
  friend bool operator==(const Builtin&, const Builtin&) = default;
};

struct OperatorDecl {
  std::string name;
  std::string algebra;
  std::variant<std::vector<TableEntry>, Builtin> body;
  Pos pos;
  friend bool operator==(const OperatorDecl&, const OperatorDecl&) = default;
};

struct FrameDecl {
  std::string name;
  std::vector<std::string> points;
  std::vector<std::pair<std::string, std::string>> edges;
  Pos pos;
  friend bool operator==(const FrameDecl&, const FrameDecl&) = default;
};

// A query line. `verb` is one of check, pc, proper, companion, minpairs, si,
// kmpa, cover, wmia, cf, cm, stone, dot, examples, annihilators, dense?,
// openset.
struct Query {
  std::string verb;
  std::vector<std::string> names;
  std::vector<ElemExpr> elements;
  // check: axiom word; dot: output path; examples: example name.
  std::optional<std::string> word;
  std::optional<std::int64_t> number;  // check trans N
  std::optional<std::int64_t> budget;  // proper --budget N
  bool all = false;                    // examples run --all
  Pos pos;
  friend bool operator==(const Query&, const Query&) = default;
};

using Statement = std::variant<AlgebraDecl, OperatorDecl, FrameDecl, Query>;

struct Script {
  std::vector<Statement> statements;
  friend bool operator==(const Script&, const Script&) = default;
};

}  // namespace modalwb::dsl

#endif  // MODALWB_DSL_AST_HPP_
