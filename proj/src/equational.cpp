#include "hoops/equational.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace hoops {

namespace {

struct RulePattern {
  AlgTerm lhs, rhs;
};

const std::map<std::string, RulePattern>& rule_table() {
  static const std::map<std::string, RulePattern> t = [] {
    std::map<std::string, RulePattern> m;
    auto add = [&](const char* name, const char* l, const char* r) {
      m.emplace(name, RulePattern{parse_term(l), parse_term(r)});
    };
    add("assoc", "(x + y) + z", "x + (y + z)");
    add("comm", "x + y", "y + x");
    add("unit", "x + 0", "x");
    add("eq1", "x -> x", "0");
    add("eq2", "x -> 0", "0");
    add("eq3", "x + y -> z", "x -> y -> z");
    add("eq4", "x + (x -> y)", "y + (y -> x)");
    m.emplace("eq5", RulePattern{AlgTerm::imp(AlgTerm::one(), AlgTerm::var("x")), AlgTerm::zero()});
    return m;
  }();
  return t;
}

bool match(const AlgTerm& pat, const AlgTerm& t, std::map<std::string, AlgTerm>& sigma) {
  if (pat.kind() == AlgTerm::Kind::Var) {
    auto it = sigma.find(pat.name());
    if (it != sigma.end()) return it->second == t;
    sigma.emplace(pat.name(), t);
    return true;
  }
  if (pat.kind() != t.kind()) return false;
  if (pat.kind() == AlgTerm::Kind::Zero || pat.kind() == AlgTerm::Kind::One) return true;
  return match(pat.lhs(), t.lhs(), sigma) && match(pat.rhs(), t.rhs(), sigma);
}

std::optional<AlgTerm> instantiate_pattern(const AlgTerm& pat, const std::map<std::string, AlgTerm>& sigma) {
  switch (pat.kind()) {
    case AlgTerm::Kind::Var: {
      auto it = sigma.find(pat.name());
      if (it == sigma.end()) return std::nullopt;
      return it->second;
    }
    case AlgTerm::Kind::Zero:
    case AlgTerm::Kind::One: return pat;
    case AlgTerm::Kind::Plus:
    case AlgTerm::Kind::Imp: {
      auto a = instantiate_pattern(pat.lhs(), sigma);
      auto b = instantiate_pattern(pat.rhs(), sigma);
      if (!a || !b) return std::nullopt;
      return pat.kind() == AlgTerm::Kind::Plus ? AlgTerm::plus(*a, *b) : AlgTerm::imp(*a, *b);
    }
  }
  return std::nullopt;
}

bool compound(const AlgTerm& t) { return t.kind() == AlgTerm::Kind::Plus || t.kind() == AlgTerm::Kind::Imp; }

AlgTerm rebuild(const AlgTerm& t, AlgTerm a, AlgTerm b) {
  return t.kind() == AlgTerm::Kind::Plus ? AlgTerm::plus(std::move(a), std::move(b))
                                         : AlgTerm::imp(std::move(a), std::move(b));
}

std::optional<AlgTerm> subterm(const AlgTerm& t, const std::vector<int>& path) {
  const AlgTerm* cur = &t;
  for (int k : path) {
    if (!compound(*cur) || (k != 0 && k != 1)) return std::nullopt;
    cur = k == 0 ? &cur->lhs() : &cur->rhs();
  }
  return *cur;
}

std::optional<AlgTerm> replace_at(const AlgTerm& t, const std::vector<int>& path, std::size_t k, const AlgTerm& r) {
  if (k == path.size()) return r;
  if (!compound(t) || (path[k] != 0 && path[k] != 1)) return std::nullopt;
  if (path[k] == 0) {
    auto a = replace_at(t.lhs(), path, k + 1, r);
    if (!a) return std::nullopt;
    return rebuild(t, *a, t.rhs());
  }
  auto b = replace_at(t.rhs(), path, k + 1, r);
  if (!b) return std::nullopt;
  return rebuild(t, t.lhs(), *b);
}

std::string path_str(const std::vector<int>& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

std::vector<Equation> all_hypotheses(const EquationalProof& e, std::size_t upto) {
  std::vector<Equation> h = e.hypotheses;
  for (std::size_t j = 0; j < upto && j < e.chains.size(); ++j)
    if (!e.chains[j].terms.empty()) h.push_back({e.chains[j].terms.front(), e.chains[j].terms.back()});
  return h;
}

}  // namespace

std::optional<AlgTerm> apply_eq_rule(const AlgTerm& t, const std::string& rule, const std::vector<int>& path,
                                     bool forward, const std::map<std::string, AlgTerm>& extra) {
  auto it = rule_table().find(rule);
  if (it == rule_table().end()) return std::nullopt;
  auto sub = subterm(t, path);
  if (!sub) return std::nullopt;
  const AlgTerm& from = forward ? it->second.lhs : it->second.rhs;
  const AlgTerm& to = forward ? it->second.rhs : it->second.lhs;
  std::map<std::string, AlgTerm> sigma;
  if (!match(from, *sub, sigma)) return std::nullopt;
  for (const auto& [k, v] : extra) sigma.emplace(k, v);
  auto r = instantiate_pattern(to, sigma);
  if (!r) return std::nullopt;
  return replace_at(t, path, 0, *r);
}

// ---------------------------------------------------------------- checking

EqCheck check_equational(const EquationalProof& e) {
  auto fail = [](int c, int s, std::string m) { return EqCheck{false, c, s, std::move(m)}; };
  if (e.chains.empty()) return fail(-1, -1, "no chains");
  for (const auto& h : e.hypotheses)
    if (!e.bounded && (h.lhs.has_one() || h.rhs.has_one())) return fail(-1, -1, "hypothesis uses 1 without bounded signature");
  for (int ci = 0; ci < static_cast<int>(e.chains.size()); ++ci) {
    const auto& c = e.chains[static_cast<std::size_t>(ci)];
    if (c.terms.size() != c.steps.size() + 1) return fail(ci, -1, "chain needs one more term than steps");
    auto hyps = all_hypotheses(e, static_cast<std::size_t>(ci));
    for (std::size_t k = 0; k < c.terms.size(); ++k)
      if (!e.bounded && c.terms[k].has_one())
        return fail(ci, static_cast<int>(k ? k - 1 : 0), "constant 1 needs the bounded signature");
    for (int si = 0; si < static_cast<int>(c.steps.size()); ++si) {
      const auto& s = c.steps[static_cast<std::size_t>(si)];
      const AlgTerm& a = c.terms[static_cast<std::size_t>(si)];
      const AlgTerm& b = c.terms[static_cast<std::size_t>(si) + 1];
      // the terms agree off the path
      const AlgTerm *pa = &a, *pb = &b;
      bool bad_path = false;
      for (int k : s.path) {
        if (!compound(*pa) || pa->kind() != pb->kind() || (k != 0 && k != 1)) {
          bad_path = true;
          break;
        }
        if (!(k == 0 ? pa->rhs() == pb->rhs() : pa->lhs() == pb->lhs()))
          return fail(ci, si, "terms differ outside position " + path_str(s.path));
        pa = k == 0 ? &pa->lhs() : &pa->rhs();
        pb = k == 0 ? &pb->lhs() : &pb->rhs();
      }
      if (bad_path) return fail(ci, si, "invalid position " + path_str(s.path));
      if (s.rule == "hyp") {
        if (s.hyp < 0 || s.hyp >= static_cast<int>(hyps.size()))
          return fail(ci, si, "hypothesis " + std::to_string(s.hyp) + " not available");
        const auto& h = hyps[static_cast<std::size_t>(s.hyp)];
        const AlgTerm& from = s.forward ? h.lhs : h.rhs;
        const AlgTerm& to = s.forward ? h.rhs : h.lhs;
        if (!(*pa == from && *pb == to)) return fail(ci, si, "hypothesis " + std::to_string(s.hyp) + " misapplied");
        continue;
      }
      auto it = rule_table().find(s.rule);
      if (it == rule_table().end()) return fail(ci, si, "unknown rule " + s.rule);
      if (s.rule == "eq5" && !e.bounded) return fail(ci, si, "eq5 needs the bounded signature");
      const AlgTerm& from = s.forward ? it->second.lhs : it->second.rhs;
      const AlgTerm& to = s.forward ? it->second.rhs : it->second.lhs;
      std::map<std::string, AlgTerm> sigma;
      if (!match(from, *pa, sigma) || !match(to, *pb, sigma))
        return fail(ci, si, "rule " + s.rule + " misapplied at " + path_str(s.path));
    }
  }
  const auto& last = e.chains.back();
  if (e.goal) {
    if (!(last.terms.front() == e.goal->lhs)) return fail(static_cast<int>(e.chains.size()) - 1, -1, "chain does not start at the goal");
    if (!(last.terms.back() == e.goal->rhs)) return fail(static_cast<int>(e.chains.size()) - 1, -1, "goal not reached");
  } else if (last.terms.back().kind() != AlgTerm::Kind::Zero) {
    return fail(static_cast<int>(e.chains.size()) - 1, -1, "goal not reached");
  }
  return {};
}

std::size_t equational_size(const EquationalProof& e) {
  std::size_t n = 0;
  for (const auto& c : e.chains) n += c.steps.size();
  return n;
}

// ---------------------------------------------------------------- chain building

namespace {

EqChain reversed(const EqChain& c) {
  EqChain r;
  r.terms.assign(c.terms.rbegin(), c.terms.rend());
  for (auto it = c.steps.rbegin(); it != c.steps.rend(); ++it) {
    EqStep s = *it;
    s.forward = !s.forward;
    r.steps.push_back(std::move(s));
  }
  return r;
}

class Builder {
 public:
  explicit Builder(AlgTerm start) { c_.terms.push_back(std::move(start)); }

  Builder& step(const std::string& rule, std::vector<int> path, bool fwd = true,
                const std::map<std::string, AlgTerm>& extra = {}) {
    auto r = apply_eq_rule(c_.terms.back(), rule, path, fwd, extra);
    if (!r) throw std::logic_error("rule " + rule + " does not apply at " + path_str(path) + " to " + print_term(c_.terms.back()));
    c_.steps.push_back({rule, -1, std::move(path), fwd});
    c_.terms.push_back(*r);
    return *this;
  }

  // Replays a recorded rule step whose result is next.
  Builder& replay(const EqStep& st, const AlgTerm& next) {
    const auto& pat = rule_table().at(st.rule);
    std::map<std::string, AlgTerm> extra;
    auto sub = subterm(next, st.path);
    if (!sub || !match(st.forward ? pat.rhs : pat.lhs, *sub, extra)) throw std::logic_error("step does not replay");
    step(st.rule, st.path, st.forward, extra);
    if (!(current() == next)) throw std::logic_error("step does not replay");
    return *this;
  }

  Builder& hyp(int k, const Equation& h, std::vector<int> path, bool fwd) {
    auto sub = subterm(c_.terms.back(), path);
    if (!sub || !(*sub == (fwd ? h.lhs : h.rhs))) throw std::logic_error("hypothesis does not apply");
    c_.terms.push_back(*replace_at(c_.terms.back(), path, 0, fwd ? h.rhs : h.lhs));
    c_.steps.push_back({"hyp", k, std::move(path), fwd});
    return *this;
  }

  // Splices a chain whose first term is the current subterm at path.
  Builder& embed(const EqChain& sub, const std::vector<int>& path) {
    auto cur = subterm(c_.terms.back(), path);
    if (!cur || !(*cur == sub.terms.front())) throw std::logic_error("embedded chain does not start at the subterm");
    for (std::size_t i = 0; i < sub.steps.size(); ++i) {
      EqStep s = sub.steps[i];
      std::vector<int> p = path;
      p.insert(p.end(), s.path.begin(), s.path.end());
      s.path = std::move(p);
      c_.terms.push_back(*replace_at(c_.terms.back(), path, 0, sub.terms[i + 1]));
      c_.steps.push_back(std::move(s));
    }
    return *this;
  }

  const AlgTerm& current() const { return c_.terms.back(); }
  EqChain done() { return std::move(c_); }

 private:
  EqChain c_;
};

EqChain axiom_chain(Schema s, const AlgTerm& inst) {
  Builder b(inst);
  switch (s) {
    case Schema::Comp:
      b.step("eq3", {1}, false).step("eq3", {}, false);
      b.step("comm", {0, 1}).step("assoc", {0}, false).step("comm", {0, 0});
      b.step("eq4", {0, 0}).step("comm", {0, 0}).step("assoc", {0});
      b.step("eq4", {0, 1}).step("comm", {0, 1}).step("assoc", {0}, false);
      b.step("eq3", {}).step("eq1", {1}).step("eq2", {});
      break;
    case Schema::Comm: b.step("comm", {1}).step("eq1", {}); break;
    case Schema::Curry: b.step("eq3", {0}).step("eq1", {}); break;
    case Schema::Uncurry: b.step("eq3", {1}).step("eq1", {}); break;
    case Schema::Wk: b.step("comm", {0}).step("eq3", {}).step("eq1", {1}).step("eq2", {}); break;
    case Schema::CWC: b.step("eq4", {1}).step("eq1", {}); break;
    case Schema::EFQ: b.step("eq5", {}); break;
    default: throw std::invalid_argument(std::string("schema ") + schema_name(s) + " has no equational translation");
  }
  return b.done();
}

// b = 0 from a = 0 (hypothesis ha) and a -> b = 0 (hypothesis hab).
EqChain mp_chain(const AlgTerm& b, int ha, const Equation& a0, int hab, const Equation& ab0) {
  Builder c(b);
  c.step("unit", {}, false);
  c.step("eq2", {1}, false, {{"x", b}});
  c.step("eq4", {});
  c.step("comm", {});
  c.step("unit", {});
  c.hyp(ha, a0, {0}, false);
  c.hyp(hab, ab0, {}, true);
  return c.done();
}

}  // namespace

namespace {

AlgTerm substitute_one(const AlgTerm& t) {
  switch (t.kind()) {
    case AlgTerm::Kind::One: return AlgTerm::var("_1");
    case AlgTerm::Kind::Plus: return AlgTerm::plus(substitute_one(t.lhs()), substitute_one(t.rhs()));
    case AlgTerm::Kind::Imp: return AlgTerm::imp(substitute_one(t.lhs()), substitute_one(t.rhs()));
    default: return t;
  }
}

Equation proved(const EqChain& c) { return {c.terms.front(), c.terms.back()}; }

}  // namespace

AlgTerm translation_term(const Formula& a, bool bounded) {
  AlgTerm t = formula_to_term(a);
  return bounded ? t : substitute_one(t);
}

EquationalProof translate_to_equational(const HilbertProof& p, LogicId logic) {
  for (Schema s : logic_schemas(logic))
    if (s == Schema::DNE || s == Schema::Con)
      throw std::invalid_argument(std::string("logic ") + logic_name(logic) + " is not translated");
  auto formulas = hilbert_formulas(p, logic);
  const bool bounded = logic_bounded(logic);
  EquationalProof e;
  e.bounded = bounded;
  std::vector<int> chain_of(p.steps.size(), -1);
  auto hyp_index = [&](int chain) { return static_cast<int>(e.hypotheses.size()) + chain; };
  auto add_mp = [&](const AlgTerm& b, int minor_chain, int major_chain) {
    e.chains.push_back(mp_chain(b, hyp_index(minor_chain), proved(e.chains[static_cast<std::size_t>(minor_chain)]),
                                hyp_index(major_chain), proved(e.chains[static_cast<std::size_t>(major_chain)])));
    return static_cast<int>(e.chains.size()) - 1;
  };
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    const auto& st = p.steps[i];
    AlgTerm t = translation_term(formulas[i], bounded);
    switch (st.kind) {
      case HilbertStep::Kind::Axiom:
        e.chains.push_back(axiom_chain(st.schema, t));
        chain_of[i] = static_cast<int>(e.chains.size()) - 1;
        break;
      case HilbertStep::Kind::MP:
        chain_of[i] = add_mp(t, chain_of[static_cast<std::size_t>(st.minor)], chain_of[static_cast<std::size_t>(st.major)]);
        break;
      case HilbertStep::Kind::MPAx: {
        AlgTerm ax = translation_term(instantiate(st.schema, st.sigma), bounded);
        e.chains.push_back(axiom_chain(st.schema, ax));
        int axc = static_cast<int>(e.chains.size()) - 1;
        chain_of[i] = add_mp(t, chain_of[static_cast<std::size_t>(st.minor)], axc);
        break;
      }
    }
  }
  e.goal = Equation{translation_term(formulas.back(), bounded), AlgTerm::zero()};
  return e;
}

EquationalProof inline_hypotheses(const EquationalProof& e) {
  const int ext = static_cast<int>(e.hypotheses.size());
  std::vector<std::optional<EqChain>> memo(e.chains.size());
  std::function<const EqChain&(std::size_t)> expand = [&](std::size_t j) -> const EqChain& {
    if (memo[j]) return *memo[j];
    const EqChain& c = e.chains[j];
    Builder b(c.terms.front());
    for (const auto& s : c.steps) {
      if (s.rule == "hyp" && s.hyp >= ext) {
        const EqChain& sub = expand(static_cast<std::size_t>(s.hyp - ext));
        b.embed(s.forward ? sub : reversed(sub), s.path);
      } else if (s.rule == "hyp") {
        b.hyp(s.hyp, e.hypotheses[static_cast<std::size_t>(s.hyp)], s.path, s.forward);
      } else {
        b.replay(s, c.terms[&s - c.steps.data() + 1]);
      }
    }
    memo[j] = b.done();
    return *memo[j];
  };
  EquationalProof out;
  out.bounded = e.bounded;
  out.hypotheses = e.hypotheses;
  out.goal = e.goal;
  if (!e.chains.empty()) out.chains.push_back(expand(e.chains.size() - 1));
  return out;
}

namespace {

// y + (y -> 0) = y for y = p -> q.
EqChain f4_chain(const AlgTerm& y) {
  Builder b(AlgTerm::plus(y, AlgTerm::imp(y, AlgTerm::zero())));
  b.step("eq4", {}).step("comm", {}).step("unit", {}).step("eq3", {}, false).step("comm", {0}).step("unit", {0});
  return b.done();
}

// (w -> 0) = 0 for w an implication, without eq2.
EqChain m_chain(const AlgTerm& w) {
  Builder b(AlgTerm::imp(w, AlgTerm::zero()));
  b.embed(reversed(f4_chain(w)), {0});
  b.step("comm", {0}).step("eq3", {}).step("eq1", {});
  return b.done();
}

// t -> 0 = 0.
EqChain eq2_chain(const AlgTerm& t) {
  AlgTerm w = AlgTerm::imp(t, AlgTerm::zero());
  Builder b(w);
  b.embed(reversed(m_chain(w)), {1});
  b.step("eq3", {}, false).step("comm", {0}).step("eq3", {}).step("eq1", {});
  return b.done();
}

}  // namespace

EquationalProof expand_eq2(const EquationalProof& e) {
  EquationalProof out = e;
  for (std::size_t j = 0; j < e.chains.size(); ++j) {
    const EqChain& c = e.chains[j];
    Builder b(c.terms.front());
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
      const auto& s = c.steps[i];
      if (s.rule == "eq2") {
        const AlgTerm& big = s.forward ? c.terms[i] : c.terms[i + 1];
        AlgTerm sub = *subterm(big, s.path);
        EqChain d = eq2_chain(sub.lhs());
        b.embed(s.forward ? d : reversed(d), s.path);
      } else if (s.rule == "hyp") {
        auto h = all_hypotheses(e, j)[static_cast<std::size_t>(s.hyp)];
        b.hyp(s.hyp, h, s.path, s.forward);
      } else {
        b.replay(s, c.terms[i + 1]);
      }
    }
    out.chains[j] = b.done();
  }
  return out;
}

// ---------------------------------------------------------------- text

namespace {

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

Equation parse_equation(const std::string& s, std::size_t line) {
  auto eq = s.find('=');
  if (eq == std::string::npos) throw ParseError("expected '=' on line " + std::to_string(line), 0);
  return {parse_term(s.substr(0, eq)), parse_term(s.substr(eq + 1))};
}

}  // namespace

std::string print_equational(const EquationalProof& e) {
  std::ostringstream o;
  o << "equational " << (e.bounded ? "bounded" : "unbounded") << "\n";
  for (const auto& h : e.hypotheses) o << "hyp " << print_term(h.lhs) << " = " << print_term(h.rhs) << "\n";
  if (e.goal) o << "goal " << print_term(e.goal->lhs) << " = " << print_term(e.goal->rhs) << "\n";
  for (const auto& c : e.chains) {
    o << "chain\n";
    for (std::size_t i = 0; i < c.terms.size(); ++i) {
      o << "  " << print_term(c.terms[i]) << "\n";
      if (i < c.steps.size()) {
        const auto& s = c.steps[i];
        o << "  " << (s.rule == "hyp" ? "hyp" + std::to_string(s.hyp) : s.rule) << " at " << path_str(s.path) << " "
          << (s.forward ? "fwd" : "bwd") << "\n";
      }
    }
    o << "end\n";
  }
  return o.str();
}

EquationalProof parse_equational(const std::string& text) {
  EquationalProof e;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  bool header = false, in_chain = false, expect_term = true;
  auto err = [&](const std::string& m) { return ParseError(m + " on line " + std::to_string(line), 0); };
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (s.empty()) continue;
    if (!header) {
      if (s == "equational bounded") e.bounded = true;
      else if (s == "equational unbounded") e.bounded = false;
      else throw err("expected 'equational bounded|unbounded'");
      header = true;
      continue;
    }
    if (!in_chain) {
      if (s.rfind("hyp ", 0) == 0) e.hypotheses.push_back(parse_equation(s.substr(4), line));
      else if (s.rfind("goal ", 0) == 0) e.goal = parse_equation(s.substr(5), line);
      else if (s == "chain") {
        in_chain = true;
        expect_term = true;
        e.chains.emplace_back();
      } else throw err("unexpected '" + s + "'");
      continue;
    }
    if (s == "end") {
      if (expect_term) throw err("chain ends after a step");
      in_chain = false;
      continue;
    }
    EqChain& c = e.chains.back();
    if (expect_term) {
      c.terms.push_back(parse_term(s));
      expect_term = false;
      continue;
    }
    // <rule> at [path] fwd|bwd
    std::istringstream ls(s);
    std::string rule, at, path, dir;
    ls >> rule >> at >> path >> dir;
    if (at != "at" || path.size() < 2 || path.front() != '[' || path.back() != ']' || (dir != "fwd" && dir != "bwd"))
      throw err("malformed step");
    EqStep st;
    st.forward = dir == "fwd";
    if (rule.rfind("hyp", 0) == 0 && rule.size() > 3) {
      st.rule = "hyp";
      try {
        st.hyp = std::stoi(rule.substr(3));
      } catch (const std::exception&) {
        throw err("bad hypothesis index");
      }
    } else {
      st.rule = rule;
    }
    std::string inner = path.substr(1, path.size() - 2);
    std::istringstream ps(inner);
    std::string tok;
    while (std::getline(ps, tok, ',')) {
      tok = trim(tok);
      if (tok != "0" && tok != "1") throw err("bad path");
      st.path.push_back(tok == "1");
    }
    c.steps.push_back(std::move(st));
    expect_term = true;
  }
  if (!header) throw ParseError("empty equational proof", 0);
  if (in_chain) throw ParseError("unterminated chain", 0);
  return e;
}

}  // namespace hoops
