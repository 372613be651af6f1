#include "modalwb/dsl/parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "modalwb/algebra.hpp"
#include "modalwb/error.hpp"
#include "modalwb/examples.hpp"

namespace modalwb::dsl {

std::string to_string(const Pos& p) { return std::to_string(p.line) + ":" + std::to_string(p.column); }

namespace {

enum class Tok { Ident, Int, String, Flag, Punct, Newline, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  Pos pos;
};

[[noreturn]] void fail(const Pos& p, const std::string& msg) { throw Error(ErrorKind::Parse, to_string(p) + ": " + msg); }

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::Newline: return "end of line";
    case Tok::End: return "end of input";
    case Tok::String: return "string";
    case Tok::Flag: return "'--" + t.text + "'";
    default: return "'" + t.text + "'";
  }
}

// Newlines inside (), [] and {} are dropped so tables and frames may span lines.
std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  int depth = 0;
  std::size_t i = 0;
  auto advance = [&](std::size_t n = 1) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char ch = src[i];
    Pos pos{line, col};
    if (ch == '#') {
      while (i < src.size() && src[i] != '\n') advance();
      continue;
    }
    if (ch == '\n') {
      if (depth == 0 && (out.empty() || out.back().kind != Tok::Newline)) out.push_back({Tok::Newline, "\n", pos});
      advance();
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance();
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = i;
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) advance();
      if (i < src.size() && src[i] == '?') advance();  // dense?
      out.push_back({Tok::Ident, std::string(src.substr(start, i - start)), pos});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = i;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) advance();
      out.push_back({Tok::Int, std::string(src.substr(start, i - start)), pos});
      continue;
    }
    if (ch == '"') {
      advance();
      std::string text;
      for (;;) {
        if (i >= src.size() || src[i] == '\n') fail(pos, "unterminated string");
        if (src[i] == '"') break;
        if (src[i] == '\\' && i + 1 < src.size()) advance();
        text.push_back(src[i]);
        advance();
      }
      advance();
      out.push_back({Tok::String, text, pos});
      continue;
    }
    if (src.substr(i, 2) == "--" && i + 2 < src.size() && std::isalpha(static_cast<unsigned char>(src[i + 2]))) {
      advance(2);
      std::size_t start = i;
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '-')) advance();
      out.push_back({Tok::Flag, std::string(src.substr(start, i - start)), pos});
      continue;
    }
    if (src.substr(i, 2) == "->") {
      out.push_back({Tok::Punct, "->", pos});
      advance(2);
      continue;
    }
    static const std::string kPunct = "=()[]{},:+*->/";
    if (kPunct.find(ch) != std::string::npos) {
      if (ch == '(' || ch == '[' || ch == '{') ++depth;
      if ((ch == ')' || ch == ']' || ch == '}') && depth > 0) --depth;
      out.push_back({Tok::Punct, std::string(1, ch), pos});
      advance();
      continue;
    }
    fail(pos, std::string("unexpected character '") + ch + "'");
  }
  out.push_back({Tok::End, "", Pos{line, col}});
  return out;
}

bool is_example(const std::string& name) {
  const auto names = example_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

const std::set<std::string> kVerbs = {"check", "pc",   "proper", "companion", "minpairs", "si",  "kmpa",
                                      "cover", "wmia", "cf",     "cm",        "stone",    "dot", "examples",
                                      "annihilators", "dense?", "openset"};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Script script() {
    Script s;
    skip_newlines();
    while (peek().kind != Tok::End) {
      s.statements.push_back(statement());
      if (peek().kind != Tok::End) expect_kind(Tok::Newline, "end of line");
      skip_newlines();
    }
    return s;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  Token next() {
    Token t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool at_punct(const char* p) const { return peek().kind == Tok::Punct && peek().text == p; }
  bool at_ident(const char* w) const { return peek().kind == Tok::Ident && peek().text == w; }
  void skip_newlines() {
    while (peek().kind == Tok::Newline) next();
  }
  Token expect_kind(Tok kind, const std::string& what) {
    if (peek().kind != kind) fail(peek().pos, "expected " + what + ", found " + describe(peek()));
    return next();
  }
  void expect_punct(const char* p) {
    if (!at_punct(p)) fail(peek().pos, std::string("expected '") + p + "', found " + describe(peek()));
    next();
  }
  void expect_word(const char* w) {
    if (!at_ident(w)) fail(peek().pos, std::string("expected '") + w + "', found " + describe(peek()));
    next();
  }
  std::string name(const std::string& what = "name") { return expect_kind(Tok::Ident, what).text; }
  std::int64_t integer() {
    Token t = expect_kind(Tok::Int, "integer");
    try {
      return std::stoll(t.text);
    } catch (const std::exception&) {
      fail(t.pos, "integer out of range");
    }
  }
  Rational rational() {
    Token t = expect_kind(Tok::Int, "rational");
    std::string text = t.text;
    if (at_punct("/")) {
      next();
      text += "/" + expect_kind(Tok::Int, "denominator").text;
    }
    try {
      return parse_rational(text);
    } catch (const Error& e) {
      fail(t.pos, e.what());
    }
  }
  std::string label() {
    if (peek().kind == Tok::Ident || peek().kind == Tok::Int) return next().text;
    fail(peek().pos, "expected point label, found " + describe(peek()));
  }

  Statement statement() {
    const Token& t = peek();
    if (t.kind != Tok::Ident) fail(t.pos, "expected declaration or query, found " + describe(t));
    if (t.text == "algebra") return algebra();
    if (t.text == "operator") return op();
    if (t.text == "frame") return frame();
    if (kVerbs.count(t.text)) return query();
    fail(t.pos, "unknown statement '" + t.text + "'");
  }

  AlgebraDecl algebra() {
    AlgebraDecl d;
    d.pos = next().pos;
    d.name = name("algebra name");
    expect_punct("=");
    Token kind = expect_kind(Tok::Ident, "powerset, fc or intervals");
    if (kind.text == "fc") {
      d.kind = AlgebraDecl::Kind::Fc;
    } else if (kind.text == "intervals") {
      d.kind = AlgebraDecl::Kind::Intervals;
    } else if (kind.text == "powerset") {
      d.kind = AlgebraDecl::Kind::Powerset;
      expect_punct("(");
      if (peek().kind == Tok::Int) {
        Token n = peek();
        std::int64_t count = integer();
        if (count < 1) fail(n.pos, "atom count must be positive");
        if (count > kMaxPowersetAtoms) {
          throw Error(ErrorKind::CapExceeded,
                      to_string(n.pos) + ": at most " + std::to_string(kMaxPowersetAtoms) + " atoms");
        }
        d.atoms = Carrier::powerset(static_cast<int>(count)).labels();
      } else {
        expect_word("atoms");
        expect_punct(":");
        expect_punct("[");
        if (!at_punct("]")) {
          d.atoms.push_back(name("atom"));
          while (at_punct(",")) {
            next();
            d.atoms.push_back(name("atom"));
          }
        }
        expect_punct("]");
      }
      expect_punct(")");
    } else {
      fail(kind.pos, "unknown algebra kind '" + kind.text + "'");
    }
    return d;
  }

  OperatorDecl op() {
    OperatorDecl d;
    d.pos = next().pos;
    d.name = name("operator name");
    expect_word("on");
    d.algebra = name("algebra name");
    expect_punct("=");
    if (at_ident("table")) {
      next();
      expect_punct("{");
      std::vector<TableEntry> entries;
      if (!at_punct("}")) {
        entries.push_back(entry());
        while (at_punct(",")) {
          next();
          entries.push_back(entry());
        }
      }
      expect_punct("}");
      d.body = std::move(entries);
    } else if (at_ident("builtin")) {
      next();
      d.body = builtin();
    } else {
      fail(peek().pos, "expected 'table' or 'builtin', found " + describe(peek()));
    }
    return d;
  }

  TableEntry entry() {
    TableEntry e;
    e.pos = peek().pos;
    e.atom = name("atom");
    expect_punct("->");
    e.value = element();
    return e;
  }

  Builtin builtin() {
    Builtin b;
    expect_punct("(");
    Token kind = expect_kind(Tok::Ident, "builtin kind");
    b.kind = kind.text;
    auto comma = [&] { expect_punct(","); };
    if (b.kind == "discriminator" || b.kind == "zero" || b.kind == "identity") {
    } else if (b.kind == "relativized") {
      expect_punct("(");
      b.element = element();
      expect_punct(")");
    } else if (b.kind == "join" || b.kind == "compose") {
      comma();
      b.names.push_back(name("operator name"));
      comma();
      b.names.push_back(name("operator name"));
    } else if (b.kind == "iterate") {
      comma();
      b.names.push_back(name("operator name"));
      comma();
      b.number = integer();
    } else if (b.kind == "pc") {
      comma();
      b.names.push_back(name("operator name"));
    } else if (b.kind == "poss") {
      comma();
      b.names.push_back(name("frame name"));
    } else if (is_example(b.kind)) {
      b.names.push_back(b.kind);
      b.kind = "example";
      if (at_punct("(")) {
        next();
        do {
          if (!b.params.empty()) next();
          std::string key = name("parameter name");
          expect_punct("=");
          b.params.emplace_back(key, element());
        } while (at_punct(","));
        expect_punct(")");
      }
      if (at_punct(",")) {
        next();
        b.names.push_back(name("auxiliary operator"));
      }
    } else {
      fail(kind.pos, "unknown builtin '" + b.kind + "'");
    }
    expect_punct(")");
    return b;
  }

  FrameDecl frame() {
    FrameDecl d;
    d.pos = next().pos;
    d.name = name("frame name");
    expect_punct("=");
    expect_punct("{");
    expect_word("points");
    expect_punct(":");
    expect_punct("[");
    if (!at_punct("]")) {
      d.points.push_back(label());
      while (at_punct(",")) {
        next();
        d.points.push_back(label());
      }
    }
    expect_punct("]");
    expect_punct(",");
    expect_word("edges");
    expect_punct(":");
    expect_punct("[");
    auto edge = [&] {
      expect_punct("(");
      std::string a = label();
      expect_punct(",");
      std::string b = label();
      expect_punct(")");
      d.edges.emplace_back(a, b);
    };
    if (!at_punct("]")) {
      edge();
      while (at_punct(",")) {
        next();
        edge();
      }
    }
    expect_punct("]");
    expect_punct("}");
    return d;
  }

  Query query() {
    Query q;
    Token verb = next();
    q.verb = verb.text;
    q.pos = verb.pos;
    const std::string& v = q.verb;
    if (v == "check") {
      q.names.push_back(name("operator name"));
      if (peek().kind == Tok::Ident && peek().text == "trans") {
        next();
        q.word = "trans";
        q.number = integer();
      } else if (peek().kind == Tok::Ident) {
        Token w = next();
        if (w.text != "K" && w.text != "T" && w.text != "B" && w.text != "closure") {
          fail(w.pos, "unknown axiom '" + w.text + "'");
        }
        q.word = w.text;
      } else if (peek().kind == Tok::Int) {
        Token w = next();
        if (w.text != "4") fail(w.pos, "unknown axiom '" + w.text + "'");
        q.word = "4";
      }
    } else if (v == "pc" || v == "si" || v == "cf" || v == "stone" || v == "annihilators" || v == "dense?") {
      q.names.push_back(name("operator name"));
    } else if (v == "proper") {
      q.names.push_back(name("operator name"));
      if (peek().kind == Tok::Flag) {
        Token f = next();
        if (f.text != "budget") fail(f.pos, "unknown flag '--" + f.text + "'");
        q.budget = integer();
      }
    } else if (v == "companion") {
      q.names.push_back(name("operator name"));
      q.elements.push_back(element());
      q.elements.push_back(element());
    } else if (v == "minpairs" || v == "openset") {
      q.names.push_back(name("algebra name"));
    } else if (v == "kmpa" || v == "cover" || v == "wmia") {
      q.names.push_back(name("operator name"));
      q.names.push_back(name("operator name"));
    } else if (v == "cm") {
      q.names.push_back(name("frame name"));
    } else if (v == "dot") {
      q.names.push_back(name("frame or operator name"));
      expect_punct(">");
      q.word = expect_kind(Tok::String, "quoted output path").text;
    } else if (v == "examples") {
      expect_word("run");
      if (peek().kind == Tok::Flag) {
        Token f = next();
        if (f.text != "all") fail(f.pos, "unknown flag '--" + f.text + "'");
        q.all = true;
      } else {
        q.word = name("example name");
      }
    }
    return q;
  }

  // expr := term {'+' term}; term := unary {'*' unary}; unary := '-' unary | primary
  ElemExpr element() {
    ElemExpr lhs = term();
    while (at_punct("+")) {
      Pos p = next().pos;
      ElemExpr rhs = term();
      lhs = binary(ElemExpr::Kind::Join, std::move(lhs), std::move(rhs), p);
    }
    return lhs;
  }
  ElemExpr term() {
    ElemExpr lhs = unary();
    while (at_punct("*")) {
      Pos p = next().pos;
      ElemExpr rhs = unary();
      lhs = binary(ElemExpr::Kind::Meet, std::move(lhs), std::move(rhs), p);
    }
    return lhs;
  }
  static ElemExpr binary(ElemExpr::Kind kind, ElemExpr a, ElemExpr b, Pos p) {
    ElemExpr e;
    e.kind = kind;
    e.pos = p;
    e.children.push_back(std::move(a));
    e.children.push_back(std::move(b));
    return e;
  }
  ElemExpr unary() {
    if (at_punct("-")) {
      ElemExpr e;
      e.kind = ElemExpr::Kind::Complement;
      e.pos = next().pos;
      e.children.push_back(unary());
      return e;
    }
    return primary();
  }
  std::vector<std::uint64_t> point_list() {
    expect_punct("{");
    std::vector<std::uint64_t> pts;
    auto one = [&] {
      Token t = expect_kind(Tok::Int, "natural number");
      try {
        pts.push_back(std::stoull(t.text));
      } catch (const std::exception&) {
        fail(t.pos, "natural number out of range");
      }
    };
    if (!at_punct("}")) {
      one();
      while (at_punct(",")) {
        next();
        one();
      }
    }
    expect_punct("}");
    return pts;
  }
  ElemExpr primary() {
    ElemExpr e;
    e.pos = peek().pos;
    const Token& t = peek();
    if (t.kind == Tok::Int) {
      if (t.text != "0" && t.text != "1") fail(t.pos, "only 0 and 1 are element constants");
      e.kind = t.text == "0" ? ElemExpr::Kind::Zero : ElemExpr::Kind::One;
      next();
      return e;
    }
    if (t.kind == Tok::Ident) {
      if (t.text == "co" && peek(1).kind == Tok::Punct && peek(1).text == "{") {
        next();
        e.kind = ElemExpr::Kind::FcCofinite;
        e.points = point_list();
        return e;
      }
      e.kind = ElemExpr::Kind::Atom;
      e.atom = next().text;
      return e;
    }
    if (at_punct("{")) {
      e.kind = ElemExpr::Kind::FcFinite;
      e.points = point_list();
      return e;
    }
    if (at_punct("[")) {
      next();
      e.kind = ElemExpr::Kind::Interval;
      e.lo = rational();
      expect_punct(",");
      e.hi = rational();
      expect_punct(")");
      return e;
    }
    if (at_punct("(")) {
      next();
      e = element();
      expect_punct(")");
      return e;
    }
    fail(t.pos, "expected element, found " + describe(t));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::string join_list(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i];
  return out;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  return out + "\"";
}

int precedence(ElemExpr::Kind k) {
  switch (k) {
    case ElemExpr::Kind::Join: return 1;
    case ElemExpr::Kind::Meet: return 2;
    case ElemExpr::Kind::Complement: return 3;
    default: return 4;
  }
}

std::string print_elem(const ElemExpr& e) {
  auto wrap = [](const ElemExpr& child, int min_prec) {
    std::string s = print_elem(child);
    return precedence(child.kind) < min_prec ? "(" + s + ")" : s;
  };
  auto points = [](const std::vector<std::uint64_t>& pts) {
    std::string out = "{";
    for (std::size_t i = 0; i < pts.size(); ++i) out += (i ? ", " : "") + std::to_string(pts[i]);
    return out + "}";
  };
  switch (e.kind) {
    case ElemExpr::Kind::Zero: return "0";
    case ElemExpr::Kind::One: return "1";
    case ElemExpr::Kind::Atom: return e.atom;
    case ElemExpr::Kind::FcFinite: return points(e.points);
    case ElemExpr::Kind::FcCofinite: return "co" + points(e.points);
    case ElemExpr::Kind::Interval: return "[" + modalwb::to_string(e.lo) + ", " + modalwb::to_string(e.hi) + ")";
    case ElemExpr::Kind::Join: return wrap(e.children[0], 1) + " + " + wrap(e.children[1], 2);
    case ElemExpr::Kind::Meet: return wrap(e.children[0], 2) + " * " + wrap(e.children[1], 3);
    case ElemExpr::Kind::Complement: return "-" + wrap(e.children[0], 4);  // "--" would lex as a flag
  }
  return "?";
}

}  // namespace

Script parse(std::string_view source) { return Parser(lex(source)).script(); }

std::string pretty_print(const ElemExpr& e) { return print_elem(e); }

std::string pretty_print(const Statement& s) {
  std::ostringstream out;
  if (const auto* a = std::get_if<AlgebraDecl>(&s)) {
    out << "algebra " << a->name << " = ";
    switch (a->kind) {
      case AlgebraDecl::Kind::Powerset: out << "powerset(atoms:[" << join_list(a->atoms) << "])"; break;
      case AlgebraDecl::Kind::Fc: out << "fc"; break;
      case AlgebraDecl::Kind::Intervals: out << "intervals"; break;
    }
  } else if (const auto* o = std::get_if<OperatorDecl>(&s)) {
    out << "operator " << o->name << " on " << o->algebra << " = ";
    if (const auto* entries = std::get_if<std::vector<TableEntry>>(&o->body)) {
      out << "table{";
      for (std::size_t i = 0; i < entries->size(); ++i) {
        out << (i ? ", " : "") << (*entries)[i].atom << " -> " << print_elem((*entries)[i].value);
      }
      out << "}";
    } else {
      const auto& b = std::get<Builtin>(o->body);
      out << "builtin(";
      if (b.kind == "relativized") {
        out << "relativized(" << print_elem(*b.element) << ")";
      } else if (b.kind == "example") {
        out << b.names[0];
        if (!b.params.empty()) {
          out << "(";
          for (std::size_t i = 0; i < b.params.size(); ++i) {
            out << (i ? ", " : "") << b.params[i].first << "=" << print_elem(b.params[i].second);
          }
          out << ")";
        }
        if (b.names.size() > 1) out << ", " << b.names[1];
      } else {
        out << b.kind;
        for (const auto& n : b.names) out << ", " << n;
        if (b.number) out << ", " << *b.number;
      }
      out << ")";
    }
  } else if (const auto* f = std::get_if<FrameDecl>(&s)) {
    out << "frame " << f->name << " = {points:[" << join_list(f->points) << "], edges:[";
    for (std::size_t i = 0; i < f->edges.size(); ++i) {
      out << (i ? ", " : "") << "(" << f->edges[i].first << ", " << f->edges[i].second << ")";
    }
    out << "]}";
  } else {
    const auto& q = std::get<Query>(s);
    out << q.verb;
    if (q.verb == "examples") {
      out << " run " << (q.all ? "--all" : *q.word);
    } else {
      for (const auto& n : q.names) out << " " << n;
      for (const auto& e : q.elements) out << " " << print_elem(e);
      if (q.verb == "dot") {
        out << " > " << quote(*q.word);
      } else if (q.word) {
        out << " " << *q.word;
      }
      if (q.number) out << " " << *q.number;
      if (q.budget) out << " --budget " << *q.budget;
    }
  }
  return out.str();
}

std::string pretty_print(const Script& script) {
  std::string out;
  for (const auto& s : script.statements) out += pretty_print(s) + "\n";
  return out;
}

}  // namespace modalwb::dsl
