// hoops: command-line front end.
// Exit codes: 0 holds/valid/checked, 1 refuted/invalid, 2 unknown,
// 64 usage, 65 malformed input, 66 unreadable file.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hoops/algebra.hpp"
#include "hoops/equational.hpp"
#include "hoops/hilbert.hpp"
#include "hoops/lra.hpp"
#include "hoops/prover.hpp"
#include "hoops/semantics.hpp"
#include "hoops/syntax.hpp"

namespace fs = std::filesystem;
using namespace hoops;

namespace {

constexpr int kOk = 0, kRefuted = 1, kUnknown = 2, kUsage = 64, kData = 65, kNoInput = 66;

struct CliError {
  int code;
  std::string message;
};

struct Globals {
  std::uint64_t seed = 0;
  bool porcelain = false;
  int jobs = 1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{kNoInput, "cannot read " + path};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// A path, or catalog:NAME.
FiniteAlgebra load_algebra(const std::string& spec, const fs::path& base = {}) {
  if (spec.rfind("catalog:", 0) == 0) {
    try {
      return catalog(spec.substr(8));
    } catch (const AlgebraError& e) {
      throw CliError{kUsage, e.what()};
    }
  }
  fs::path p(spec);
  if (p.is_relative() && !base.empty()) p = base / p;
  std::string text = read_file(p.string());
  try {
    return read_algebra(text);
  } catch (const AlgebraError& e) {
    throw CliError{kData, p.string() + ": " + e.what()};
  }
}

std::vector<NamedAlgebra> load_class(const std::string& path) {
  std::istringstream in(read_file(path));
  fs::path base = fs::path(path).parent_path();
  std::vector<NamedAlgebra> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream w(line);
    std::string item, extra;
    if (!(w >> item)) continue;
    if (w >> extra) throw CliError{kData, path + ": line " + std::to_string(lineno) + ": one algebra per line"};
    std::string name = item.rfind("catalog:", 0) == 0 ? item.substr(8) : fs::path(item).stem().string();
    out.push_back({name, load_algebra(item, base)});
  }
  if (out.empty()) throw CliError{kData, path + ": empty class file"};
  return out;
}

Formula parse_formula_arg(const std::string& s) {
  try {
    return parse_formula(s);
  } catch (const ParseError& e) {
    throw CliError{kUsage, std::string("formula: ") + e.what()};
  }
}

Identity parse_identity_arg(const std::string& s, bool bounded) {
  try {
    return parse_identity(s, bounded);
  } catch (const ParseError& e) {
    throw CliError{kUsage, std::string("identity: ") + e.what()};
  } catch (const SignatureError& e) {
    throw CliError{kUsage, std::string("identity: ") + e.what() + " (use --bounded)"};
  }
}

bool mentions_one(const std::string& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '1') continue;
    bool l = i > 0 && (std::isalnum(static_cast<unsigned char>(s[i - 1])) || s[i - 1] == '_');
    bool r = i + 1 < s.size() && (std::isalnum(static_cast<unsigned char>(s[i + 1])) || s[i + 1] == '_');
    if (!l && !r) return true;
  }
  return false;
}

LogicId parse_logic_arg(const std::string& s) {
  auto l = logic_from_name(s);
  if (!l) throw CliError{kUsage, "unknown logic " + s};
  return *l;
}

EnumFilter parse_filters(const std::vector<std::string>& fs) {
  EnumFilter f;
  for (const auto& x : fs) {
    if (x == "pocrim") continue;
    if (x == "hoop") f.hoop = true;
    else if (x == "involutive") f.involutive = true;
    else if (x == "wajsberg") f.wajsberg = true;
    else if (x == "idempotent") f.idempotent = true;
    else throw CliError{kUsage, "unknown filter " + x};
  }
  return f;
}

std::string table_row(const FiniteAlgebra& a, bool add) {
  std::string s;
  for (int x = 0; x < a.size(); ++x) {
    if (x) s += ';';
    for (int y = 0; y < a.size(); ++y) s += (y ? "," : "") + std::to_string(add ? a.add(x, y) : a.imp(x, y));
  }
  return s;
}

std::string assignment_names(const FiniteAlgebra& a, const std::map<std::string, int>& alpha) {
  return assignment_text(a, alpha);
}

// ---------------------------------------------------------------- commands

int cmd_enumerate(const Globals& g, int n, const std::vector<std::string>& filters, bool count, std::uint64_t budget) {
  EnumOptions opts;
  opts.jobs = g.jobs;
  opts.node_budget = budget;
  auto r = enumerate_pocrims(n, parse_filters(filters), opts);
  if (count) {
    std::cout << (g.porcelain ? "count " : "") << r.algebras.size() << "\n";
  } else {
    for (std::size_t i = 0; i < r.algebras.size(); ++i) {
      const auto& a = r.algebras[i];
      if (g.porcelain) {
        std::cout << "algebra " << i << " order=" << a.size() << " add=" << table_row(a, true)
                  << " imp=" << table_row(a, false) << "\n";
      } else {
        std::cout << (i ? "\n" : "") << "# " << i + 1 << "\n" << write_algebra(a);
      }
    }
  }
  if (!r.complete) {
    std::cerr << "node budget exhausted after " << r.nodes << " nodes; list is incomplete\n";
    return kUnknown;
  }
  return kOk;
}

std::string witness_str(const FiniteAlgebra& a, const std::vector<int>& w) {
  std::string s;
  for (int x : w) s += (s.empty() ? "" : ",") + a.name(x);
  return "(" + s + ")";
}

int cmd_check_algebra(const Globals& g, const std::string& file) {
  auto a = load_algebra(file);
  auto rep = check_pocrim(a);
  for (const auto& l : rep.laws) {
    if (g.porcelain) {
      std::cout << "law " << l.law << " " << (l.holds ? "pass" : "fail");
      if (!l.holds) std::cout << " " << witness_str(a, l.witness);
      std::cout << "\n";
    } else {
      std::cout << l.law << ": " << (l.holds ? "ok" : "fails at " + witness_str(a, l.witness)) << "\n";
    }
  }
  std::cout << (g.porcelain ? "pocrim " : "pocrim: ") << (rep.ok() ? "yes" : "no") << "\n";
  return rep.ok() ? kOk : kRefuted;
}

int cmd_classify(const Globals& g, const std::string& file) {
  auto a = load_algebra(file);
  if (!is_pocrim(a)) {
    std::cerr << "not a pocrim\n";
    return kRefuted;
  }
  auto c = classify(a);
  std::pair<const char*, const Flag*> flags[] = {
      {"bounded", &c.bounded}, {"involutive", &c.involutive}, {"hoop", &c.hoop}, {"wajsberg", &c.wajsberg},
      {"idempotent", &c.idempotent}, {"naturally_ordered", &c.naturally_ordered}, {"simple", &c.simple},
      {"subdirectly_irreducible", &c.subdirectly_irreducible}};
  for (auto [name, f] : flags) {
    std::cout << name << (g.porcelain ? " " : ": ") << (f->value ? "yes" : "no");
    if (!f->value && !f->witness.empty()) std::cout << " " << witness_str(a, f->witness);
    std::cout << "\n";
  }
  if (a.one()) {
    auto dn = double_negation(a);
    std::cout << "delta" << (g.porcelain ? " " : ": ");
    for (int x = 0; x < a.size(); ++x) std::cout << (x ? " " : "") << a.name(dn.delta[static_cast<std::size_t>(x)]);
    std::cout << "\n";
    std::cout << "delta_image_closed_under_add" << (g.porcelain ? " " : ": ")
              << (dn.image_closed_under_add ? "yes" : "no") << "\n";
  }
  return kOk;
}

void print_verdict(const Globals& g, const Verdict& v) {
  if (v.valid) {
    std::cout << (g.porcelain ? "verdict valid\n" : "Valid\n");
    return;
  }
  std::cout << (g.porcelain ? "verdict invalid domain=" : "Invalid in ") << domain_name(v.domain);
  std::cout << (g.porcelain ? " witness=" : " at ");
  bool first = true;
  for (const auto& [k, q] : v.witness) {
    std::cout << (first ? "" : ",") << k << "=" << rational_str(q);
    first = false;
  }
  std::cout << "\n";
}

int cmd_decide(const Globals& g, const std::string& domain, bool bounded, const std::string& text) {
  Verdict v;
  try {
    if (domain == "unit") {
      v = decide(parse_identity_arg(text, true), Domain::UnitInterval);
    } else if (domain == "nonneg") {
      v = decide(parse_identity_arg(text, false), Domain::NonNegReals);
    } else if (domain == "involutive" || (domain == "auto" && (bounded || mentions_one(text)))) {
      v = decide_involutive(parse_identity_arg(text, true));
    } else if (domain == "wajsberg" || domain == "auto") {
      v = decide_wajsberg(parse_identity_arg(text, false));
    } else {
      throw CliError{kUsage, "unknown domain " + domain};
    }
  } catch (const SignatureError& e) {
    throw CliError{kUsage, e.what()};
  }
  print_verdict(g, v);
  return v.valid ? kOk : kRefuted;
}

void print_counterexample(const Globals& g, const Counterexample& c) {
  if (g.porcelain) {
    std::cout << "counterexample order=" << c.algebra.size() << " add=" << table_row(c.algebra, true)
              << " imp=" << table_row(c.algebra, false) << " at=" << assignment_names(c.algebra, c.assignment) << "\n";
    return;
  }
  std::cout << "counterexample at " << assignment_names(c.algebra, c.assignment) << " in\n" << write_algebra(c.algebra);
}

int cmd_prove(const Globals& g, const std::string& text, bool bounded, int depth, int cex_order,
              const std::string& target, const std::string& cert_out) {
  Identity id = parse_identity_arg(text, bounded || mentions_one(text));
  ProverOptions opts;
  opts.depth = depth;
  opts.cex_order = cex_order;
  if (target == "pocrims") opts.target = TargetClass::Pocrims;
  else if (target != "hoops") throw CliError{kUsage, "unknown target " + target};
  auto r = prove(id, opts);
  switch (r.status) {
    case ProofStatus::Proved: {
      std::string txt = certificate_text(*r.certificate);
      std::cout << (g.porcelain ? "status proved\n" : "Proved\n");
      if (!cert_out.empty()) {
        std::ofstream o(cert_out);
        if (!o) throw CliError{kNoInput, "cannot write " + cert_out};
        o << txt;
      } else if (!g.porcelain) {
        std::cout << txt;
      }
      return kOk;
    }
    case ProofStatus::Refuted:
      std::cout << (g.porcelain ? "status refuted\n" : "Refuted\n");
      print_counterexample(g, *r.counterexample);
      return kRefuted;
    case ProofStatus::Unknown:
      std::cout << (g.porcelain ? "status unknown reason=" : "Unknown: ") << r.reason << "\n";
      return kUnknown;
  }
  return kUnknown;
}

int cmd_search_cex(const Globals& g, const std::string& text, bool bounded, int max_order, int min_order,
                   const std::vector<std::string>& filters) {
  Identity id = parse_identity_arg(text, bounded || mentions_one(text));
  auto c = search_counterexample(id, max_order, parse_filters(filters), min_order);
  if (!c) {
    std::cout << (g.porcelain ? "none max_order=" : "no counterexample up to order ") << max_order << "\n";
    return kOk;
  }
  print_counterexample(g, *c);
  return kRefuted;
}

HilbertProof load_hilbert(const std::string& file) {
  std::string text = read_file(file);
  try {
    return parse_hilbert(text);
  } catch (const std::exception& e) {
    throw CliError{kData, file + ": " + e.what()};
  }
}

int cmd_check_proof(const Globals& g, const std::string& file, const std::string& logic) {
  LogicId l = parse_logic_arg(logic);
  auto p = load_hilbert(file);
  try {
    Formula th = check_hilbert(p, l);
    std::cout << (g.porcelain ? "theorem " : "checked under ") << (g.porcelain ? "" : logic_name(l))
              << (g.porcelain ? "" : ": ") << print_formula(th) << "\n";
    return kOk;
  } catch (const ProofError& e) {
    std::cout << (g.porcelain ? "error step=" : "rejected at step ") << e.step() + 1 << (g.porcelain ? " " : ": ")
              << e.what() << "\n";
    return kRefuted;
  }
}

int cmd_translate(const Globals& g, const std::string& file, const std::string& logic, bool inl, bool eq2,
                  const std::string& out) {
  LogicId l = parse_logic_arg(logic);
  auto p = load_hilbert(file);
  EquationalProof e;
  try {
    e = translate_to_equational(p, l);
  } catch (const ProofError& ex) {
    std::cout << "rejected at step " << ex.step() + 1 << ": " << ex.what() << "\n";
    return kRefuted;
  } catch (const std::invalid_argument& ex) {
    throw CliError{kUsage, ex.what()};
  }
  if (eq2) e = expand_eq2(e);
  if (inl) e = inline_hypotheses(e);
  std::string txt = print_equational(e);
  if (out.empty()) {
    std::cout << txt;
  } else {
    std::ofstream o(out);
    if (!o) throw CliError{kNoInput, "cannot write " + out};
    o << txt;
    std::cout << (g.porcelain ? "steps " : "equational steps: ") << equational_size(e) << "\n";
  }
  return kOk;
}

int cmd_check_eq(const Globals& g, const std::string& file) {
  std::string text = read_file(file);
  EquationalProof e;
  try {
    e = parse_equational(text);
  } catch (const std::exception& ex) {
    throw CliError{kData, file + ": " + ex.what()};
  }
  auto c = check_equational(e);
  if (c.ok) {
    std::cout << (g.porcelain ? "ok steps=" : "accepted, steps: ") << equational_size(e) << "\n";
    return kOk;
  }
  std::cout << (g.porcelain ? "error" : "rejected");
  if (c.chain >= 0) std::cout << (g.porcelain ? " chain=" : " in chain ") << c.chain + 1;
  if (c.step >= 0) std::cout << (g.porcelain ? " step=" : " step ") << c.step + 1;
  std::cout << ": " << c.message << "\n";
  return kRefuted;
}

Assignment parse_assign(const FiniteAlgebra& a, const std::string& s) {
  Assignment out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw CliError{kUsage, "assignment item without '=': " + item};
    std::string v = item.substr(0, eq), e = item.substr(eq + 1);
    auto idx = a.index_of(e);
    if (!idx) throw CliError{kUsage, "no element named " + e};
    out[v] = *idx;
  }
  return out;
}

int cmd_eval(const Globals& g, const std::string& alg, const std::string& kind, const std::string& assign,
             const std::string& one, const std::string& text) {
  auto a = load_algebra(alg);
  auto k = semantics_from_name(kind);
  if (!k) throw CliError{kUsage, "unknown semantics " + kind};
  Formula f = parse_formula_arg(text);
  Assignment alpha = parse_assign(a, assign);
  int v;
  try {
    if (!one.empty()) {
      if (*k != SemanticsKind::Standard) throw CliError{kUsage, "--one is only available for the standard semantics"};
      auto o = a.index_of(one);
      if (!o) throw CliError{kUsage, "no element named " + one};
      v = evaluate_unbounded(a, alpha, *o, f);
    } else {
      v = evaluate(*k, a, alpha, f);
    }
  } catch (const AlgebraError& e) {
    throw CliError{kUsage, e.what()};
  }
  std::cout << (g.porcelain ? "value " : "") << a.name(v) << (g.porcelain ? " " + std::to_string(v) : "") << "\n";
  return kOk;
}

std::vector<Formula> load_formulas(const std::string& file) {
  std::istringstream in(read_file(file));
  std::vector<Formula> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_formula(line));
    } catch (const ParseError& e) {
      throw CliError{kData, file + ": line " + std::to_string(lineno) + ": " + e.what()};
    }
  }
  return out;
}

int cmd_dns(const Globals& g, const std::string& cls_file, const std::string& kind, const std::string& formulas,
            int count, int depth, int vars) {
  auto cls = load_class(cls_file);
  auto k = semantics_from_name(kind);
  if (!k) throw CliError{kUsage, "unknown semantics " + kind};
  for (const auto& m : cls)
    if (!m.algebra.one()) throw CliError{kData, m.name + " is not bounded"};
  auto corpus = formulas.empty() ? random_formulas(depth, vars, static_cast<std::size_t>(count), g.seed)
                                 : load_formulas(formulas);
  auto r = check_dns(*k, cls, corpus, g.jobs);
  fs::path base = fs::path(cls_file).parent_path();
  auto alg_ref = [&](const std::string& name) {
    std::ifstream in(cls_file);
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream w(line);
      std::string item;
      if (!(w >> item) || item[0] == '#') continue;
      std::string n = item.rfind("catalog:", 0) == 0 ? item.substr(8) : fs::path(item).stem().string();
      if (n == name) return item.rfind("catalog:", 0) == 0 || base.empty() ? item : (base / item).string();
    }
    return "catalog:" + name;
  };
  if (g.porcelain) {
    auto rec = [&](const char* name, const DnsProperty& p) {
      std::cout << name << " " << (p.pass ? "pass" : "fail");
      if (!p.pass)
        std::cout << " algebra=" << p.witness->algebra << " at=" << p.witness->assignment_names
                  << " value=" << p.witness->value_name << " formula=" << print_formula(p.witness->formula);
      std::cout << "\n";
    };
    rec("DNS1", r.dns1);
    rec("DNS2", r.dns2);
    rec("DNS3", r.dns3);
  } else {
    std::cout << dns_report_text(r);
    for (const auto* p : {&r.dns1, &r.dns2, &r.dns3}) {
      if (p->pass) continue;
      std::cout << "replay: hoops eval --alg " << alg_ref(p->witness->algebra) << " --kind " << semantics_name(r.kind);
      if (!p->witness->assignment.empty()) std::cout << " --assign " << p->witness->assignment_names;
      std::cout << " \"" << print_formula(p->witness->formula) << "\"\n";
    }
  }
  return r.pass() ? kOk : kRefuted;
}

int cmd_catalog(const Globals& g, const std::string& name) {
  if (name.empty()) {
    for (const auto& n : catalog_names()) std::cout << n << "\n";
    return kOk;
  }
  FiniteAlgebra a = load_algebra("catalog:" + name);
  if (g.porcelain) std::cout << "algebra " << name << " add=" << table_row(a, true) << " imp=" << table_row(a, false) << "\n";
  else std::cout << write_algebra(a);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite pocrims, hoop identities and Lukasiewicz proofs"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "seed for generated corpora")->capture_default_str();
  app.add_flag("--porcelain", g.porcelain, "one record per line");
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();

  std::function<int()> action;

  auto* en = app.add_subcommand("enumerate", "pocrims of order n up to isomorphism");
  int en_n = 0;
  std::vector<std::string> en_filter;
  bool en_count = false;
  std::uint64_t en_budget = 0;
  en->add_option("n", en_n)->required()->check(CLI::Range(1, 8));
  en->add_option("--filter", en_filter, "pocrim|hoop|involutive|wajsberg|idempotent")->delimiter(',');
  en->add_flag("--count", en_count);
  en->add_option("--budget", en_budget, "search node budget, 0 = none");
  en->callback([&] { action = [&] { return cmd_enumerate(g, en_n, en_filter, en_count, en_budget); }; });

  std::string file;
  auto* ca = app.add_subcommand("check-algebra", "check the pocrim laws");
  ca->add_option("algebra", file)->required();
  ca->callback([&] { action = [&] { return cmd_check_algebra(g, file); }; });

  auto* cl = app.add_subcommand("classify", "class membership flags");
  cl->add_option("algebra", file)->required();
  cl->callback([&] { action = [&] { return cmd_classify(g, file); }; });

  std::string text, domain = "auto";
  bool bounded = false;
  auto* de = app.add_subcommand("decide", "decide an identity in involutive or Wajsberg hoops");
  de->add_option("--domain", domain, "unit|nonneg|involutive|wajsberg|auto")->capture_default_str();
  de->add_flag("--bounded", bounded);
  de->add_option("identity", text)->required();
  de->callback([&] { action = [&] { return cmd_decide(g, domain, bounded, text); }; });

  int depth = 6, cex_order = 5;
  std::string target = "hoops", cert_out;
  auto* pr = app.add_subcommand("prove", "prove an identity in all (bounded) hoops");
  pr->add_flag("--bounded", bounded);
  pr->add_option("--depth", depth)->capture_default_str();
  pr->add_option("--cex-order", cex_order)->capture_default_str();
  pr->add_option("--target", target, "hoops|pocrims")->capture_default_str();
  pr->add_option("--certificate", cert_out, "write the certificate to a file");
  pr->add_option("identity", text)->required();
  pr->callback([&] { action = [&] { return cmd_prove(g, text, bounded, depth, cex_order, target, cert_out); }; });

  int max_order = 5, min_order = 1;
  std::vector<std::string> sc_filter;
  auto* sc = app.add_subcommand("search-cex", "search finite pocrims for a counterexample");
  sc->add_flag("--bounded", bounded);
  sc->add_option("--max-order", max_order)->capture_default_str()->check(CLI::Range(1, 8));
  sc->add_option("--min-order", min_order)->capture_default_str();
  sc->add_option("--filter", sc_filter)->delimiter(',');
  sc->add_option("identity", text)->required();
  sc->callback([&] { action = [&] { return cmd_search_cex(g, text, bounded, max_order, min_order, sc_filter); }; });

  std::string logic = "ALm";
  auto* cp = app.add_subcommand("check-proof", "check a Hilbert proof");
  cp->add_option("--logic", logic)->capture_default_str();
  cp->add_option("proof", file)->required();
  cp->callback([&] { action = [&] { return cmd_check_proof(g, file, logic); }; });

  bool inl = false, eq2 = false;
  std::string out;
  auto* tp = app.add_subcommand("translate-proof", "translate a Lukasiewicz proof into an equational proof");
  tp->add_option("--logic", logic)->capture_default_str();
  tp->add_flag("--inline", inl, "single chain");
  tp->add_flag("--expand-eq2", eq2, "eliminate x->0 = 0");
  tp->add_option("-o,--output", out);
  tp->add_option("proof", file)->required();
  tp->callback([&] { action = [&] { return cmd_translate(g, file, logic, inl, eq2, out); }; });

  auto* ce = app.add_subcommand("check-eq-proof", "check an equational proof");
  ce->add_option("proof", file)->required();
  ce->callback([&] { action = [&] { return cmd_check_eq(g, file); }; });

  std::string alg, kind = "standard", assign, one;
  auto* ev = app.add_subcommand("eval", "evaluate a formula");
  ev->add_option("--alg", alg, "algebra file or catalog:NAME")->required();
  ev->add_option("--kind", kind, "standard|kolmogorov|gentzen|glivenko")->capture_default_str();
  ev->add_option("--assign", assign, "V=name,W=name");
  ev->add_option("--one", one, "value of 1 (standard semantics, unbounded mode)");
  ev->add_option("formula", text)->required();
  ev->callback([&] { action = [&] { return cmd_eval(g, alg, kind, assign, one, text); }; });

  std::string formulas;
  int count = 1000, fdepth = 6, vars = 3;
  auto* dn = app.add_subcommand("dns-check", "test DNS1-3 over a finite class");
  dn->add_option("class", file, "file listing algebra files or catalog:NAME")->required();
  dn->add_option("--kind", kind)->capture_default_str();
  dn->add_option("--formulas", formulas, "formula file, one per line");
  dn->add_option("--count", count)->capture_default_str();
  dn->add_option("--depth", fdepth)->capture_default_str();
  dn->add_option("--vars", vars)->capture_default_str();
  dn->callback([&] { action = [&] { return cmd_dns(g, file, kind, formulas, count, fdepth, vars); }; });

  std::string cname;
  auto* cat = app.add_subcommand("catalog", "list or print catalog algebras");
  cat->add_option("name", cname);
  cat->callback([&] { action = [&] { return cmd_catalog(g, cname); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  try {
    return action();
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kData;
  }
}
