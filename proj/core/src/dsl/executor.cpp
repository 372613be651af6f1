#include "modalwb/dsl/executor.hpp"

#include <bit>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "modalwb/dda.hpp"
#include "modalwb/dsl/parser.hpp"
#include "modalwb/duality.hpp"
#include "modalwb/examples.hpp"
#include "modalwb/operator.hpp"
#include "modalwb/semilattice.hpp"

namespace modalwb::dsl {

namespace {

[[noreturn]] void fail_at(const Pos& p, ErrorKind kind, const std::string& msg) {
  throw Error(kind, to_string(p) + ": " + msg);
}

bool is_implicit_builtin(const std::string& name) {
  return name == "identity" || name == "discriminator" || name == "zero";
}

Carrier carrier_of(const AlgebraDecl& d) {
  switch (d.kind) {
    case AlgebraDecl::Kind::Powerset: return Carrier::powerset(d.atoms);
    case AlgebraDecl::Kind::Fc: return Carrier::finite_cofinite();
    case AlgebraDecl::Kind::Intervals: return Carrier::rational_interval();
  }
  return Carrier::finite_cofinite();
}

CarrierKind example_carrier_kind(const std::string& name) {
  return (name == "jon2" || name == "exfc") ? CarrierKind::FiniteCofinite : CarrierKind::RationalInterval;
}

bool allowed_param(const std::string& example, const std::string& key) {
  if (example == "exnotdense") return key == "a";
  if (example == "exdensepc") return key == "a" || key == "b" || key == "c";
  return false;
}

ExampleBundle build_example(const Builtin& b) {
  const Carrier c = Carrier::rational_interval();
  auto param = [&](const std::string& key, IntervalSet fallback) {
    for (const auto& [k, v] : b.params) {
      if (k == key) return std::get<IntervalSet>(evaluate(v, c));
    }
    return fallback;
  };
  const std::string& name = b.names[0];
  if (name == "exnotdense") return example_exnotdense(param("a", IntervalSet::single(0, Rational(1, 2))));
  if (name == "exdensepc") {
    return example_exdensepc(param("a", IntervalSet::single(0, Rational(1, 3))),
                             param("b", IntervalSet::single(Rational(1, 3), Rational(2, 3))),
                             param("c", IntervalSet::single(Rational(2, 3), 1)));
  }
  return example_by_name(name);
}

// Names visible at a point of the script, per kind.
struct Scope {
  std::map<std::string, Carrier> algebras;
  std::map<std::string, std::string> operator_algebra;
  std::map<std::string, Carrier> operators;
  std::map<std::string, const FrameDecl*> frames;
  std::optional<Carrier> last_algebra;

  const Carrier& algebra(const std::string& name, const Pos& p) const {
    auto it = algebras.find(name);
    if (it == algebras.end()) fail_at(p, ErrorKind::Name, "unknown algebra '" + name + "'");
    return it->second;
  }
  const Carrier& op(const std::string& name, const Pos& p) const {
    auto it = operators.find(name);
    if (it != operators.end()) return it->second;
    if (is_implicit_builtin(name) && last_algebra) return *last_algebra;
    fail_at(p, ErrorKind::Name, "unknown operator '" + name + "'");
  }
  const FrameDecl& frame(const std::string& name, const Pos& p) const {
    auto it = frames.find(name);
    if (it == frames.end()) fail_at(p, ErrorKind::Name, "unknown frame '" + name + "'");
    return *it->second;
  }
};

void require_same(const Carrier& a, const Carrier& b, const Pos& p) {
  if (!(a == b)) fail_at(p, ErrorKind::CarrierMismatch, "operators live on different algebras");
}

void validate_statement(const Statement& s, Scope& scope, const ExecOptions& opts) {
  if (const auto* a = std::get_if<AlgebraDecl>(&s)) {
    if (scope.algebras.count(a->name)) fail_at(a->pos, ErrorKind::Name, "algebra '" + a->name + "' declared twice");
    if (a->kind == AlgebraDecl::Kind::Powerset) {
      if (a->atoms.empty()) fail_at(a->pos, ErrorKind::Parse, "powerset needs at least one atom");
      if (static_cast<int>(a->atoms.size()) > opts.max_atoms) {
        fail_at(a->pos, ErrorKind::CapExceeded,
                std::to_string(a->atoms.size()) + " atoms exceed --max-atoms " + std::to_string(opts.max_atoms));
      }
      std::set<std::string> seen;
      for (const auto& atom : a->atoms) {
        if (!seen.insert(atom).second) fail_at(a->pos, ErrorKind::Name, "atom '" + atom + "' listed twice");
      }
    }
    Carrier c = carrier_of(*a);
    scope.algebras.emplace(a->name, c);
    scope.last_algebra = c;
    return;
  }
  if (const auto* o = std::get_if<OperatorDecl>(&s)) {
    if (scope.operators.count(o->name)) fail_at(o->pos, ErrorKind::Name, "operator '" + o->name + "' declared twice");
    const Carrier& c = scope.algebra(o->algebra, o->pos);
    if (const auto* entries = std::get_if<std::vector<TableEntry>>(&o->body)) {
      if (!c.is_finite()) fail_at(o->pos, ErrorKind::CarrierMismatch, "table operators need a powerset algebra");
      std::set<std::string> seen;
      for (const auto& e : *entries) {
        const auto& labels = c.labels();
        if (std::find(labels.begin(), labels.end(), e.atom) == labels.end()) {
          fail_at(e.pos, ErrorKind::Name, "'" + e.atom + "' is not an atom of " + o->algebra);
        }
        if (!seen.insert(e.atom).second) fail_at(e.pos, ErrorKind::Name, "atom '" + e.atom + "' has two entries");
        evaluate(e.value, c);
      }
    } else {
      const auto& b = std::get<Builtin>(o->body);
      if (b.element) evaluate(*b.element, c);
      if (b.kind == "join" || b.kind == "compose" || b.kind == "iterate" || b.kind == "pc") {
        for (const auto& n : b.names) require_same(scope.op(n, o->pos), c, o->pos);
      } else if (b.kind == "poss") {
        const FrameDecl& f = scope.frame(b.names[0], o->pos);
        if (!c.is_finite() || static_cast<std::size_t>(c.atom_count()) != f.points.size()) {
          fail_at(o->pos, ErrorKind::CarrierMismatch, "poss needs a powerset with one atom per frame point");
        }
      } else if (b.kind == "example") {
        const auto names = example_names();
        if (std::find(names.begin(), names.end(), b.names[0]) == names.end()) {
          fail_at(o->pos, ErrorKind::Name, "unknown example '" + b.names[0] + "'");
        }
        if (c.kind() != example_carrier_kind(b.names[0])) {
          fail_at(o->pos, ErrorKind::CarrierMismatch, "example '" + b.names[0] + "' lives on another algebra");
        }
        std::set<std::string> keys;
        for (const auto& [key, value] : b.params) {
          if (!allowed_param(b.names[0], key)) {
            fail_at(o->pos, ErrorKind::Name, "example '" + b.names[0] + "' has no parameter '" + key + "'");
          }
          if (!keys.insert(key).second) fail_at(o->pos, ErrorKind::Name, "parameter '" + key + "' given twice");
          if (is_zero(evaluate(value, c))) {
            fail_at(value.pos, ErrorKind::DegenerateParameter, "parameter '" + key + "' must be nonzero");
          }
        }
        if (b.names.size() > 1) {
          auto bundle = example_by_name(b.names[0]);
          bool found = false;
          for (const auto& [key, op] : bundle.auxiliaries) found = found || key == b.names[1];
          if (!found) fail_at(o->pos, ErrorKind::Name, "example '" + b.names[0] + "' has no operator '" + b.names[1] + "'");
        }
      }
    }
    scope.operators.emplace(o->name, c);
    scope.operator_algebra.emplace(o->name, o->algebra);
    return;
  }
  if (const auto* f = std::get_if<FrameDecl>(&s)) {
    if (scope.frames.count(f->name)) fail_at(f->pos, ErrorKind::Name, "frame '" + f->name + "' declared twice");
    if (f->points.empty() || f->points.size() > static_cast<std::size_t>(kMaxFramePoints)) {
      fail_at(f->pos, ErrorKind::CapExceeded, "frames need 1 to " + std::to_string(kMaxFramePoints) + " points");
    }
    std::set<std::string> seen(f->points.begin(), f->points.end());
    if (seen.size() != f->points.size()) fail_at(f->pos, ErrorKind::Name, "frame points must be distinct");
    for (const auto& [a, b] : f->edges) {
      if (!seen.count(a) || !seen.count(b)) fail_at(f->pos, ErrorKind::Name, "edge (" + a + ", " + b + ") uses an unknown point");
    }
    scope.frames.emplace(f->name, f);
    return;
  }
  const auto& q = std::get<Query>(s);
  const std::string& v = q.verb;
  if (v == "minpairs" || v == "openset") {
    const Carrier& c = scope.algebra(q.names[0], q.pos);
    if (!c.is_finite()) fail_at(q.pos, ErrorKind::CarrierMismatch, v + " needs a powerset algebra");
  } else if (v == "cm") {
    scope.frame(q.names[0], q.pos);
  } else if (v == "dot") {
    if (!scope.frames.count(q.names[0])) scope.op(q.names[0], q.pos);
  } else if (v == "examples") {
    if (!q.all) {
      const auto names = example_names();
      if (std::find(names.begin(), names.end(), *q.word) == names.end()) {
        fail_at(q.pos, ErrorKind::Name, "unknown example '" + *q.word + "'");
      }
    }
  } else {
    const Carrier& c = scope.op(q.names[0], q.pos);
    static const std::set<std::string> powerset_only = {"pc", "dense?", "si", "cover", "stone"};
    if (powerset_only.count(v) && !c.is_finite()) {
      fail_at(q.pos, ErrorKind::CarrierMismatch, v + " needs an operator on a powerset algebra");
    }
    if (v == "cf" && c.kind() == CarrierKind::RationalInterval) {
      fail_at(q.pos, ErrorKind::CarrierMismatch, "cf needs a powerset or fc algebra");
    }
    for (std::size_t i = 1; i < q.names.size(); ++i) require_same(scope.op(q.names[i], q.pos), c, q.pos);
    for (const auto& e : q.elements) evaluate(e, c);
    if (q.budget && *q.budget < 1) fail_at(q.pos, ErrorKind::Parse, "budget must be positive");
    if (q.number && *q.number < 1) fail_at(q.pos, ErrorKind::Parse, "trans needs n >= 1");
  }
}

std::string op_text(const ModalOperator& f) { return f.is_tabulated() ? format_table(f) : f.provenance(); }

class Executor {
 public:
  Executor(const ExecOptions& opts) : opts_(opts), samples_{1000, opts.seed} {}

  Report run(const Script& script) {
    for (const auto& s : script.statements) {
      if (const auto* a = std::get_if<AlgebraDecl>(&s)) {
        last_algebra_ = carrier_of(*a);
        algebras_.emplace(a->name, *last_algebra_);
      } else if (const auto* o = std::get_if<OperatorDecl>(&s)) {
        declare(*o);
      } else if (const auto* f = std::get_if<FrameDecl>(&s)) {
        frames_.emplace(f->name, build_frame(*f));
      } else {
        query(std::get<Query>(s));
      }
    }
    return std::move(report_);
  }

 private:
  static Frame build_frame(const FrameDecl& d) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    auto index = [&](const std::string& p) {
      return static_cast<std::size_t>(std::find(d.points.begin(), d.points.end(), p) - d.points.begin());
    };
    for (const auto& [a, b] : d.edges) edges.emplace_back(index(a), index(b));
    return Frame::from_edges(d.points, edges);
  }

  void declare(const OperatorDecl& d) {
    const Carrier& c = algebras_.at(d.algebra);
    try {
      operators_.insert_or_assign(d.name, build_operator(d, c));
    } catch (const std::exception& e) {
      operators_.erase(d.name);
      failed_.insert(d.name);
      QueryResult r;
      r.query = pretty_print(Statement{d});
      r.carrier = c.name();
      r.decision = "error";
      r.passed = false;
      r.error = e.what();
      report_.results.push_back(std::move(r));
    }
  }

  ModalOperator build_operator(const OperatorDecl& d, const Carrier& c) {
    if (const auto* entries = std::get_if<std::vector<TableEntry>>(&d.body)) {
      AtomTable table(static_cast<std::size_t>(c.atom_count()), 0);
      for (const auto& e : *entries) {
        const auto& labels = c.labels();
        auto i = static_cast<std::size_t>(std::find(labels.begin(), labels.end(), e.atom) - labels.begin());
        table[i] = mask_of(evaluate(e.value, c));
      }
      return ModalOperator::tabulated(c, std::move(table), d.name);
    }
    const auto& b = std::get<Builtin>(d.body);
    if (b.kind == "discriminator") return discriminator(c);
    if (b.kind == "zero") return zero_op(c);
    if (b.kind == "identity") return identity_op(c);
    if (b.kind == "relativized") return relativized(c, evaluate(*b.element, c));
    if (b.kind == "join") return op_join(lookup(b.names[0]), lookup(b.names[1]));
    if (b.kind == "compose") return op_compose(lookup(b.names[0]), lookup(b.names[1]));
    if (b.kind == "iterate") return iterate(lookup(b.names[0]), static_cast<int>(*b.number));
    if (b.kind == "pc") return dual_pseudocomplement(lookup(b.names[0]));
    if (b.kind == "poss") {
      auto ca = complex_algebra(frames_.at(b.names[0]));
      return ModalOperator::tabulated(c, ca.op.table(), "poss(" + b.names[0] + ")");
    }
    auto bundle = build_example(b);
    return b.names.size() > 1 ? bundle.aux(b.names[1]) : bundle.f;
  }

  ModalOperator lookup(const std::string& name) const {
    if (auto it = operators_.find(name); it != operators_.end()) return it->second;
    if (failed_.count(name)) throw Error(ErrorKind::PreconditionFailed, "operator '" + name + "' failed to build");
    const Carrier& c = *last_algebra_;
    if (name == "identity") return identity_op(c);
    if (name == "discriminator") return discriminator(c);
    return zero_op(c);
  }

  void query(const Query& q) {
    QueryResult r;
    r.query = pretty_print(Statement{q});
    try {
      dispatch(q, r);
    } catch (const std::exception& e) {
      r.passed = false;
      r.decision = "error";
      r.error = e.what();
    }
    report_.results.push_back(std::move(r));
  }

  void dispatch(const Query& q, QueryResult& r) {
    const std::string& v = q.verb;
    if (v == "examples") return examples(q, r);
    if (v == "minpairs") return minpairs(q, r);
    if (v == "openset") return openset(q, r);
    if (v == "cm") return cm(q, r);
    if (v == "dot") return dot(q, r);
    ModalOperator f = lookup(q.names[0]);
    const Carrier& c = f.carrier();
    r.carrier = c.name();
    if (v == "check") return check(q, f, r);
    if (v == "pc") {
      ModalOperator g = dual_pseudocomplement(f);
      r.decision = "exists";
      r.companion = op_text(g);
      r.certificates.emplace_back("formula over all 0 < y <= x; certificate " +
                                  std::string(to_string(g.certificate().mode)));
      r.passed = g.certificate().ok() && annihilates(f, g).holds;
      return;
    }
    if (v == "annihilators") return annihilators(q, f, r);
    if (v == "dense?") {
      bool dense = is_dually_dense(f);
      r.decision = dense ? "dually dense" : "not dually dense";
      ModalOperator pc = dual_pseudocomplement(f);
      r.companion = op_text(pc);
      r.passed = dense == (pc.table() == discriminator(c).table());
      r.certificates.emplace_back(std::string("f^pc = f^1 ") + (r.passed ? "agrees" : "disagrees"));
      return;
    }
    if (v == "proper") {
      std::size_t budget = q.budget ? static_cast<std::size_t>(*q.budget) : opts_.budget;
      auto rep = proper_companion_decide(f, budget, samples_);
      r.decision = to_string(rep.decision);
      if (rep.x) r.witnesses["x"] = format(c, *rep.x);
      if (rep.z) r.witnesses["z"] = format(c, *rep.z);
      if (rep.companion) r.companion = op_text(*rep.companion);
      r.certificates = rep.certificates;
      r.budget_used = rep.budget_used;
      return;
    }
    if (v == "companion") {
      Element x = evaluate(q.elements[0], c);
      Element z = evaluate(q.elements[1], c);
      ModalOperator g = construct_companion(f, x, z, samples_);
      r.decision = "constructed";
      r.witnesses["x"] = format(c, x);
      r.witnesses["z"] = format(c, z);
      r.companion = op_text(g);
      r.certificates.emplace_back(std::string(to_string(g.certify(samples_).mode)) + " modal certificate");
      r.certificates.emplace_back("decomposing");
      return;
    }
    if (v == "si") {
      auto s = rautenberg_si(f);
      r.decision = s.si ? "subdirectly irreducible" : "not subdirectly irreducible";
      if (s.witness) r.witnesses["a"] = format(c, *s.witness);
      r.details["form"] = to_string(s.form);
      r.certificates.emplace_back(std::string("Rautenberg criterion, ") + to_string(s.form) + " form");
      if (c.atom_count() <= kClosedIdealMaxAtoms) {
        auto cong = congruence_ideal_oracle(f);
        r.details["closed_ideals"] = cong.closed_ideals.size();
        r.passed = cong.si == s.si;
        r.certificates.emplace_back(std::string("closed-ideal check ") + (r.passed ? "agrees" : "disagrees"));
      }
      return;
    }
    ModalOperator g = q.names.size() > 1 ? lookup(q.names[1]) : f;
    if (v == "kmpa") {
      auto k = kmpa_check(f, g, samples_);
      r.passed = true;
      for (const auto& line : k.lines) {
        nlohmann::json j = {{"holds", line.holds}};
        if (line.witness) j["witness"] = format(c, *line.witness);
        r.details[line.axiom] = j;
        r.passed = r.passed && line.holds;
        if (!line.holds && !r.witnesses.contains("x")) r.witnesses["x"] = format(c, *line.witness);
      }
      r.details["u(0)"] = format(c, k.u_at_zero);
      r.decision = r.passed ? "u1-u3 hold" : "fails";
      r.certificates.emplace_back(k.exhaustive ? "exhaustive" : "sampled");
      return;
    }
    if (v == "cover") {
      auto cr = covering_check(f, g);
      r.decision = cr.decomposing ? "decomposing" : "not decomposing";
      r.details["covered"] = cr.covered;
      r.details["complex_algebra_decomposing"] = cr.complex_algebra_decomposing;
      if (cr.missing) {
        r.witnesses["missing_edge"] = c.labels()[cr.missing->first] + " -> " + c.labels()[cr.missing->second];
      }
      r.passed = cr.agree;
      r.certificates.emplace_back("R_f + R_g = Ult(B)^2 checked on atoms");
      return;
    }
    if (v == "wmia") {
      auto w = to_wmia(f, g, samples_);
      auto back = from_wmia(w.f, w.g_suff, samples_);
      r.decision = "wMIA";
      if (c.is_finite()) {
        nlohmann::json values = nlohmann::json::object();
        for (Mask x = 0; x <= c.top_mask(); ++x) {
          Element e = mask_element(c, x);
          values[format(c, e)] = format(c, w.g_suff(e));
        }
        r.details["sufficiency"] = values;
      }
      r.passed = pointwise_equal(back.second, g, samples_).holds;
      r.certificates.emplace_back(std::string("round trip ") + (r.passed ? "recovers g" : "differs from g"));
      return;
    }
    if (v == "cf") {
      if (c.is_finite()) {
        Frame fr = canonical_frame(f);
        r.decision = "frame";
        r.details["points"] = fr.points();
        nlohmann::json edges = nlohmann::json::array();
        for (std::size_t a = 0; a < fr.size(); ++a) {
          for (std::size_t b = 0; b < fr.size(); ++b) {
            if (fr.related(a, b)) edges.push_back({fr.points()[a], fr.points()[b]});
          }
        }
        r.details["edges"] = edges;
        report_.dot_graphs.push_back(fr.to_dot(q.names[0]));
        return;
      }
      auto fc = canonical_frame_fc(f);
      r.decision = "symbolic frame";
      std::vector<FcUltrafilter> pts;
      for (std::uint64_t n = 0; n < 8; ++n) pts.push_back(FcUltrafilter::principal(n));
      pts.push_back(FcUltrafilter::u());
      nlohmann::json edges = nlohmann::json::array();
      for (const auto& a : pts) {
        for (const auto& b : pts) {
          if (fc.related(a, b)) edges.push_back({a.label(), b.label()});
        }
      }
      r.details["edges_first_8"] = edges;
      report_.dot_graphs.push_back(fc.to_dot());
      return;
    }
    if (v == "stone") {
      auto st = stone_check(f);
      r.decision = st.holds ? "embedding" : "fails";
      r.details["checked"] = st.checked;
      r.details["round_trip"] = st.round_trip;
      if (st.witness) r.witnesses["x"] = format(c, *st.witness);
      r.passed = st.holds && st.round_trip;
      r.certificates.emplace_back("h(f(a)) = <R_f>h(a) for every a");
      return;
    }
    throw Error(ErrorKind::Internal, "unhandled query '" + v + "'");
  }

  void check(const Query& q, const ModalOperator& f, QueryResult& r) {
    const Carrier& c = f.carrier();
    if (!q.word) {
      Certificate cert = f.is_tabulated() ? f.certificate() : f.certify(samples_);
      r.decision = cert.ok() ? "modal" : "not modal";
      r.passed = cert.ok();
      if (cert.counterexample) {
        r.witnesses["x"] = format(c, cert.counterexample->first);
        r.witnesses["y"] = format(c, cert.counterexample->second);
      }
      r.certificates.emplace_back(std::string(to_string(cert.mode)) + ", " + std::to_string(cert.checked) + " pairs");
      return;
    }
    AxiomResult a;
    const std::string& w = *q.word;
    if (w == "closure") {
      a = check_closure(f, samples_);
    } else {
      Axiom ax = w == "K" ? Axiom::k() : w == "T" ? Axiom::t() : w == "4" ? Axiom::four() : w == "B" ? Axiom::b()
                                                                                             : Axiom::transitive(static_cast<int>(*q.number));
      a = check_axiom(f, ax, samples_);
    }
    r.decision = a.holds ? "holds" : "fails";
    r.passed = a.holds;
    if (a.witness) r.witnesses["x"] = format(c, *a.witness);
    r.certificates.emplace_back(std::string(a.exhaustive ? "exhaustive" : "sampled") + ", " +
                                std::to_string(a.checked) + " elements");
  }

  void minpairs(const Query& q, QueryResult& r) {
    const Carrier& c = algebras_.at(q.names[0]);
    r.carrier = c.name();
    auto mp = minimal_pairs(c);
    r.decision = std::to_string(mp.pairs.size()) + " minimal pairs";
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [f, g] : mp.pairs) pairs.push_back({format_table(f), format_table(g)});
    r.details["pairs"] = pairs;
    r.details["decomposing_pairs"] = mp.decomposing_pairs;
    r.passed = mp.matches_pseudocomplement_pairs;
    r.certificates.emplace_back(std::string("pairs (f, g) with f = f^pc pc ") + (r.passed ? "match" : "differ"));
  }

  // On a powerset the annihilators of f are exactly the operators above f^pc.
  void annihilators(const Query& q, const ModalOperator& f, QueryResult& r) {
    const Carrier& c = f.carrier();
    if (!c.is_finite()) {
      std::size_t budget = q.budget ? static_cast<std::size_t>(*q.budget) : opts_.budget;
      // Operators declared earlier on the same algebra are tried before relativizations.
      std::vector<ModalOperator> templates;
      for (const auto& [name, g] : operators_) {
        if (name != q.names[0] && g.carrier().name() == c.name()) templates.push_back(g);
      }
      auto s = budgeted_annihilator_search(f, budget, templates, samples_);
      r.decision = s.found ? "found" : "none within budget";
      if (s.found) r.companion = op_text(*s.found);
      r.budget_used = s.candidates_tried;
      r.details["minimality"] = "not established";
      r.certificates.emplace_back(std::string(s.check.exhaustive ? "exhaustive" : "sampled") + " f v g = f^1, " +
                                  std::to_string(s.check.checked) + " elements");
      r.passed = s.found.has_value() && s.check.holds;
      return;
    }
    ModalOperator pc = dual_pseudocomplement(f);
    const int n = c.atom_count();
    // Each atom value of g ranges over the supersets of f^pc(atom).
    boost::multiprecision::cpp_int count = 1;
    for (Mask v : pc.table()) count <<= (n - std::popcount(v));
    r.decision = "annihilators are the g >= f^pc";
    r.companion = op_text(pc);
    r.details["count"] = count.str();
    r.passed = annihilates(f, pc).holds;
    if (n <= kOpenElementsMaxAtoms) {
      std::size_t found = 0;
      bool above = true;
      for (const auto& g : all_operators(c)) {
        if (!annihilates(f, g).holds) continue;
        ++found;
        for (std::size_t i = 0; i < g.table().size(); ++i) above = above && (pc.table()[i] & ~g.table()[i]) == 0;
      }
      r.passed = r.passed && above && count == found;
      r.certificates.emplace_back("enumerated " + std::to_string(found) + " annihilators, all above f^pc");
    }
  }

  void openset(const Query& q, QueryResult& r) {
    const Carrier& c = algebras_.at(q.names[0]);
    r.carrier = c.name();
    auto open = open_elements(c);
    r.decision = std::to_string(open.size()) + " open elements";
    bool fixed = true;
    for (const auto& f : open) fixed = fixed && dual_pseudocomplement(dual_pseudocomplement(f)).table() == f.table();
    const std::size_t all = std::size_t{1} << (c.atom_count() * c.atom_count());
    r.details["all_operators"] = all;
    r.passed = fixed && open.size() == all;
    r.certificates.emplace_back(std::string("f^pc pc = f ") + (fixed ? "for every open f" : "fails"));
  }

  void cm(const Query& q, QueryResult& r) {
    const Frame& fr = frames_.at(q.names[0]);
    auto ca = complex_algebra(fr);
    r.carrier = ca.carrier.name();
    r.decision = "complex algebra";
    r.companion = format_table(ca.op);
    r.passed = ca.op.certificate().ok();
    r.certificates.emplace_back(std::string(to_string(ca.op.certificate().mode)) + " modal certificate");
    report_.dot_graphs.push_back(fr.to_dot(q.names[0]));
  }

  void dot(const Query& q, QueryResult& r) {
    std::string text;
    if (auto it = frames_.find(q.names[0]); it != frames_.end()) {
      text = it->second.to_dot(q.names[0]);
    } else {
      ModalOperator f = lookup(q.names[0]);
      r.carrier = f.carrier().name();
      text = f.carrier().is_finite() ? canonical_frame(f).to_dot(q.names[0]) : canonical_frame_fc(f).to_dot();
    }
    std::ofstream out(*q.word);
    if (!out) throw Error(ErrorKind::PreconditionFailed, "cannot write '" + *q.word + "'");
    out << text;
    r.decision = "written";
    r.details["path"] = *q.word;
    report_.dot_graphs.push_back(text);
  }

  void examples(const Query& q, QueryResult& r) {
    RunOptions ro{opts_.seed, opts_.budget};
    std::vector<std::string> names = q.all ? example_names() : std::vector<std::string>{*q.word};
    std::size_t passed = 0;
    std::size_t total = 0;
    for (const auto& name : names) {
      auto bundle = example_by_name(name);
      if (!q.all) r.carrier = bundle.carrier.name();
      nlohmann::json list = nlohmann::json::array();
      for (const auto& a : bundle.run(ro)) {
        ++total;
        passed += a.passed;
        list.push_back({{"label", a.label}, {"mode", a.mode}, {"passed", a.passed}, {"detail", a.detail}});
      }
      r.details[name] = list;
    }
    r.passed = passed == total;
    r.decision = std::to_string(passed) + "/" + std::to_string(total) + " assertions passed";
  }

  ExecOptions opts_;
  SampleOptions samples_;
  Report report_;
  std::optional<Carrier> last_algebra_;
  std::map<std::string, Carrier> algebras_;
  std::map<std::string, ModalOperator> operators_;
  std::set<std::string> failed_;
  std::map<std::string, Frame> frames_;
};

}  // namespace

Element evaluate(const ElemExpr& e, const Carrier& c) {
  auto bad = [&](const std::string& msg) { fail_at(e.pos, ErrorKind::CarrierMismatch, msg + " in " + c.name()); };
  switch (e.kind) {
    case ElemExpr::Kind::Zero: return bot(c);
    case ElemExpr::Kind::One: return top(c);
    case ElemExpr::Kind::Atom: {
      if (!c.is_finite()) bad("atom '" + e.atom + "' used");
      const auto& labels = c.labels();
      auto it = std::find(labels.begin(), labels.end(), e.atom);
      if (it == labels.end()) fail_at(e.pos, ErrorKind::Name, "'" + e.atom + "' is not an atom of " + c.name());
      return mask_element(c, Mask{1} << (it - labels.begin()));
    }
    case ElemExpr::Kind::FcFinite:
    case ElemExpr::Kind::FcCofinite:
      if (c.kind() != CarrierKind::FiniteCofinite) bad("finite/cofinite set used");
      return e.kind == ElemExpr::Kind::FcFinite ? FcSet::finite(e.points) : FcSet::cofinite(e.points);
    case ElemExpr::Kind::Interval:
      if (c.kind() != CarrierKind::RationalInterval) bad("interval used");
      if (!(0 <= e.lo && e.lo < e.hi && e.hi <= 1)) {
        fail_at(e.pos, ErrorKind::MalformedInterval, "interval needs 0 <= lo < hi <= 1");
      }
      return IntervalSet::single(e.lo, e.hi);
    case ElemExpr::Kind::Join: return join(evaluate(e.children[0], c), evaluate(e.children[1], c));
    case ElemExpr::Kind::Meet: return meet(evaluate(e.children[0], c), evaluate(e.children[1], c));
    case ElemExpr::Kind::Complement: return complement(evaluate(e.children[0], c));
  }
  return bot(c);
}

void validate(const Script& script, const ExecOptions& opts) {
  Scope scope;
  for (const auto& s : script.statements) validate_statement(s, scope, opts);
}

Report execute(const Script& script, const ExecOptions& opts) {
  validate(script, opts);
  return Executor(opts).run(script);
}

int Report::exit_code() const {
  for (const auto& r : results) {
    if (!r.passed) return 1;
  }
  return 0;
}

nlohmann::json Report::to_json(const ExecOptions& opts) const {
  nlohmann::json results_json = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json j;
    j["query"] = r.query;
    j["carrier"] = r.carrier;
    j["decision"] = r.decision;
    j["passed"] = r.passed;
    j["witnesses"] = r.witnesses;
    j["companion"] = r.companion ? nlohmann::json(*r.companion) : nlohmann::json(nullptr);
    j["certificates"] = r.certificates;
    j["budget_used"] = r.budget_used ? nlohmann::json(*r.budget_used) : nlohmann::json(nullptr);
    if (!r.details.empty()) j["details"] = r.details;
    if (!r.error.empty()) j["error"] = r.error;
    results_json.push_back(std::move(j));
  }
  return {{"schema", kReportSchema},
          {"seed", opts.seed},
          {"budget", opts.budget},
          {"exit_code", exit_code()},
          {"results", results_json}};
}

std::string Report::to_text() const {
  std::ostringstream out;
  for (const auto& r : results) {
    out << (r.passed ? "PASS  " : "FAIL  ") << r.query << ": " << r.decision;
    if (!r.witnesses.empty()) {
      out << " (";
      bool first = true;
      for (const auto& [k, v] : r.witnesses.items()) {
        out << (first ? "" : ", ") << k << " = " << v.get<std::string>();
        first = false;
      }
      out << ")";
    }
    out << "\n";
    if (r.companion) out << "      companion: " << *r.companion << "\n";
    for (const auto& c : r.certificates) out << "      certificate: " << c << "\n";
    if (r.budget_used) out << "      budget used: " << *r.budget_used << "\n";
    if (!r.error.empty()) out << "      error: " << r.error << "\n";
    for (const auto& [name, list] : r.details.items()) {
      if (!list.is_array() || list.empty() || !list.front().is_object() || !list.front().contains("label")) continue;
      out << "      " << name << "\n";
      for (const auto& a : list) {
        out << "        " << (a["passed"].get<bool>() ? "PASS " : "FAIL ") << a["label"].get<std::string>() << " ["
            << a["mode"].get<std::string>() << "]";
        if (!a["detail"].get<std::string>().empty()) out << " " << a["detail"].get<std::string>();
        out << "\n";
      }
    }
  }
  return out.str();
}

}  // namespace modalwb::dsl
