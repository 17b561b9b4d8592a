#include "cli_app.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "lbforge/error.hpp"
#include "lbforge/serialize.hpp"
#include "lbforge/twist.hpp"

namespace lbforge::cli {

namespace {

struct Exit {
  int code;
  std::string message;
};

[[noreturn]] void invalid(const std::string& message) { throw Exit{kInvalidConfig, message}; }
[[noreturn]] void io_error(const std::string& message) { throw Exit{kIoError, message}; }

LieAlgebra parse_algebra(const std::string& text) {
  if (text.size() < 3 || text.compare(0, 2, "A:") != 0) invalid("--algebra expects A:n, got '" + text + "'");
  int rank = 0;
  std::istringstream in(text.substr(2));
  if (!(in >> rank) || !in.eof() || rank < 1) invalid("--algebra expects A:n with n >= 1, got '" + text + "'");
  return build_sl(rank + 1);
}

CaseSpec parse_case(const std::string& text) {
  CaseSpec spec;
  try {
    spec = CaseSpec::parse(text);
  } catch (const Error& e) {
    invalid(std::string("--case: ") + e.what());
  }
  const CaseValidation v = validate_case(spec);
  if (!v.ok) invalid("case " + text + " rejected: " + v.reason);
  return spec;
}

Rational parse_number(const std::string& text, const std::string& what) {
  try {
    return parse_rational(text);
  } catch (const Error&) {
    invalid(what + " expects an exact rational, got '" + text + "'");
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

int checked_degree(int n) {
  if (n < 1) invalid("--degree must be at least 1, got " + std::to_string(n));
  if (const char* cap = std::getenv("LBFORGE_MAX_DEGREE")) {
    char* end = nullptr;
    const long limit = std::strtol(cap, &end, 10);
    if (end == cap || *end != '\0' || limit < 1) invalid(std::string("LBFORGE_MAX_DEGREE is not a positive integer: ") + cap);
    if (n > limit) invalid("--degree " + std::to_string(n) + " exceeds LBFORGE_MAX_DEGREE=" + std::to_string(limit));
  }
  return n;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) io_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  if (in.bad()) io_error("cannot read " + path);
  return s.str();
}

SpectralDocument read_document(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return spectral_from_json(Json::parse(text));
  } catch (const Json::exception& e) {
    io_error(path + ": malformed JSON: " + e.what());
  } catch (const Error& e) {
    io_error(path + ": " + e.what());
  }
}

void emit(const Json& doc, const std::string& path, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) io_error("cannot write " + path);
}

RKind parse_r(const LieAlgebra& alg, const CaseSpec& spec, const std::string& text) {
  const std::string_view t(text);
  try {
    if (text.empty()) return catalog_r(alg, spec);
    if (t == "zero") return RKind::zero(alg);
    if (t == "dj") return RKind::dj(alg);
    if (t.starts_with("jordanian:")) {
      const auto ij = split(text.substr(10), ',');
      int i = 0, j = 0;
      if (ij.size() != 2 || !(std::istringstream(ij[0]) >> i) || !(std::istringstream(ij[1]) >> j))
        invalid("--r jordanian expects jordanian:i,j");
      const auto root = alg.root_index(i, j);
      if (!root) invalid("--r " + text + ": no positive root e_" + ij[0] + " - e_" + ij[1]);
      return RKind::jordanian(alg, *root);
    }
    if (t.starts_with("file:")) {
      const SpectralDocument doc = read_document(text.substr(5));
      if (doc.rank != alg.rank()) invalid("--r " + text + ": algebra rank differs from --algebra");
      ConstTensor2 value;
      for (const auto& [ij, e] : doc.r.entries()) {
        const Poly2& num = e.numerator();
        if (e.den_power() != 0 || num != Poly2(num.constant_term()))
          invalid("--r " + text + ": constant part must have constant entries");
        value.add(ij, num.constant_term());
      }
      return RKind(alg, required_kind(spec), std::move(value));
    }
  } catch (const Error& e) {
    invalid(std::string("--r ") + text + ": " + e.what());
  }
  invalid("--r expects zero, dj, jordanian:i,j or file:path, got '" + text + "'");
}

std::string label(const LieAlgebra& alg, int i) { return alg.labels()[static_cast<std::size_t>(i)]; }

template <std::size_t N>
Json label_list(const LieAlgebra& alg, const std::array<int, N>& idx) {
  Json list = Json::array();
  for (int i : idx) list.push_back(label(alg, i));
  return list;
}

struct CheckOutcome {
  bool pass = true;
  Json witness;  // null on pass
};

// First entry of a tensor difference, as basis labels plus coefficient.
template <std::size_t N, class Coeff>
CheckOutcome first_entry(const LieAlgebra& alg, const SparseTensor<N, Coeff>& diff) {
  if (diff.is_zero()) return {};
  const auto& [idx, c] = *diff.entries().begin();
  return {false, {{"basis", label_list(alg, idx)}, {"coefficient", to_string(c)}}};
}

CheckOutcome check_cybe(const LieAlgebra& alg, const SpectralTensor2& r) {
  const SpectralCyb cyb = cyb_spectral(alg, r);
  if (cyb.is_zero()) return {};
  const auto& [idx, p] = *cyb.numerator.entries().begin();
  const auto& [e, c] = *p.terms().begin();
  return {false,
          {{"basis", label_list(alg, idx)},
           {"monomial", to_string(Poly3::monomial(e))},
           {"coefficient", to_string(c)},
           {"cleared_by", "(v-u)^" + std::to_string(cyb.den_power) + "*(w-u)^" + std::to_string(cyb.den_power) +
                              "*(w-v)^" + std::to_string(cyb.den_power)}}};
}

CheckOutcome check_duality(const LieAlgebra& alg, const CaseSpec& spec, const SpectralTensor2& r, int n) {
  const WPresentation w = catalog_w0(alg, spec);
  const std::vector<DualElement> duals = dual_basis(alg, w, n);
  for (const auto& d : duals)
    for (int l = 0; l <= n; ++l)
      for (int b = 0; b < alg.dim(); ++b) {
        const Rational q = q_form(alg, spec, canonical_element(spec, b, l), d.dual);
        const Rational want = (b == d.basis && l == d.degree) ? 1 : 0;
        if (q != want)
          return {false,
                  {{"pairing", {label(alg, b) + "*u^" + std::to_string(l),
                                "w[" + label(alg, d.basis) + "," + std::to_string(d.degree) + "]"}},
                   {"value", to_string(q)},
                   {"expected", to_string(want)}}};
      }
  CheckOutcome series = first_entry(alg, sum_dual_series(alg, w, n) - expand_region(r, n));
  if (!series.pass) series.witness["source"] = "dual series minus expansion of r through u^" + std::to_string(n);
  return series;
}

CheckOutcome check_axioms(const LieAlgebra& alg, const std::string& family, const SpectralTensor2& r, int n) {
  const auto results = axiom_sweep(alg, family, r, {n, n, n});
  for (const auto& res : results)
    if (!res.pass) return {false, {{"element", res.element}, {"check", res.check}, {"evaluated", results.size()}}};
  return {};
}

CheckOutcome check_equiv(const LieAlgebra& alg, const CaseSpec& spec, const SpectralTensor2& r,
                         const std::string& from) {
  if (spec.form != AForm::TwoPoints || spec.type != DoubleType::I)
    invalid("equiv check needs a case of the form I:two-points:d1,d2");
  const auto cs = split(from, ',');
  if (cs.size() != 2) invalid("--from expects c1,c2");
  const Rational c1 = parse_number(cs[0], "--from"), c2 = parse_number(cs[1], "--from");
  AffineChange ch;
  try {
    ch = solve_pq(c1, c2, spec.c1, spec.c2);
  } catch (const Error& e) {
    invalid(std::string("--from: ") + e.what());
  }
  const Rational scale = ch.p / ((1 - c1 * ch.q) * (1 - c2 * ch.q));
  const SpectralTensor2 source = build_r(alg, CaseSpec::two_points(c1, c2), RKind::dj(alg));
  CheckOutcome res = first_entry(alg, r - substitute_affine_tensor(source, ch) * scale);
  if (!res.pass) {
    res.witness["p"] = to_string(ch.p);
    res.witness["q"] = to_string(ch.q);
    res.witness["C"] = to_string(scale);
  }
  return res;
}

struct Options {
  std::string algebra = "A:1";
  std::string case_text;
  std::string r_text;
  std::optional<int> degree;
  std::string checks = "cybe,skew,delta-axioms";
  std::string out_path;
  std::string in_path;
  std::string from;
  std::vector<std::string> positional;
};

int cmd_build(const Options& o, std::ostream& out) {
  const LieAlgebra alg = parse_algebra(o.algebra);
  const CaseSpec spec = parse_case(o.case_text);
  const RKind r = parse_r(alg, spec, o.r_text);
  SpectralTensor2 built;
  try {
    built = build_r(alg, spec, r);
  } catch (const Error& e) {
    invalid(e.what());
  }
  Json doc = spectral_to_json(alg, built);
  doc["case"] = spec.to_string();
  emit(doc, o.out_path, out);
  return kPass;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.in_path.empty()) invalid("verify needs --in");
  const int n = checked_degree(o.degree.value_or(2));
  const SpectralDocument doc = read_document(o.in_path);
  const LieAlgebra alg = build_sl(doc.rank + 1);

  std::optional<CaseSpec> spec;
  std::string case_text = !o.case_text.empty() ? o.case_text : doc.case_text.value_or("");
  if (!case_text.empty()) spec = parse_case(case_text);

  std::vector<std::string> checks = split(o.checks, ',');
  for (const auto& c : checks)
    if (c != "cybe" && c != "skew" && c != "duality" && c != "delta-axioms" && c != "equiv")
      invalid("unknown check '" + c + "'");

  Json report;
  report["algebra"] = {{"type", "A"}, {"rank", doc.rank}};
  if (spec) report["case"] = spec->to_string();
  report["degree"] = n;
  Json list = Json::array();
  bool all = true;
  for (const auto& name : checks) {
    CheckOutcome res;
    if ((name == "duality" || name == "equiv") && !spec) invalid(name + " check needs --case or a \"case\" member");
    try {
      if (name == "cybe") res = check_cybe(alg, doc.r);
      if (name == "skew") res = first_entry(alg, unitarity_defect(doc.r));
      if (name == "duality") res = check_duality(alg, *spec, doc.r, n);
      if (name == "delta-axioms") res = check_axioms(alg, case_text.empty() ? "document" : case_text, doc.r, n);
      if (name == "equiv") {
        if (o.from.empty()) invalid("equiv check needs --from c1,c2");
        res = check_equiv(alg, *spec, doc.r, o.from);
      }
    } catch (const Error& e) {
      res = {false, {{"error", e.what()}}};
    }
    Json entry{{"check", name}, {"pass", res.pass}};
    if (!res.pass) {
      entry["witness"] = res.witness;
      err << name << ": FAIL " << res.witness.dump() << "\n";
    }
    list.push_back(std::move(entry));
    all = all && res.pass;
  }
  report["checks"] = std::move(list);
  report["pass"] = all;
  emit(report, o.out_path, out);
  return all ? kPass : kCheckFailure;
}

int cmd_dualbasis(const Options& o, std::ostream& out) {
  const LieAlgebra alg = parse_algebra(o.algebra);
  const CaseSpec spec = parse_case(o.case_text);
  const int n = checked_degree(o.degree.value_or(6));
  std::vector<DualElement> duals;
  try {
    duals = dual_basis(alg, catalog_w0(alg, spec), n);
  } catch (const Error& e) {
    invalid(e.what());
  }
  emit(dual_basis_to_json(alg, spec, duals), o.out_path, out);
  return kPass;
}

int cmd_equiv(const Options& o, std::ostream& out) {
  if (o.positional.size() != 4) invalid("equiv expects c1 c2 d1 d2");
  const LieAlgebra alg = parse_algebra(o.algebra);
  Rational v[4];
  for (std::size_t i = 0; i < 4; ++i) v[i] = parse_number(o.positional[i], "equiv");
  TwistReport rep;
  try {
    rep = quasi_twist_verify(alg, v[0], v[1], v[2], v[3]);
  } catch (const Error& e) {
    invalid(e.what());
  }
  out << "p=" << to_string(rep.change.p) << " q=" << to_string(rep.change.q) << " C=" << to_string(rep.scale) << " "
      << (rep.equal ? "equal" : "not-equal") << "\n";
  return rep.equal ? kPass : kCheckFailure;
}

DoubleType parse_type(const std::string& text) {
  if (text == "I") return DoubleType::I;
  if (text == "II") return DoubleType::II;
  if (text == "III") return DoubleType::III;
  invalid("double type must be I, II or III, got '" + text + "'");
}

std::string cell(DoubleType type, const Vertex& vertex) {
  const auto d = admissible_degree(type, vertex);
  return d ? std::to_string(*d) : "impossible";
}

int cmd_table(const Options& o, std::ostream& out) {
  const auto& args = o.positional;
  if (args.empty()) {
    for (DoubleType t : {DoubleType::I, DoubleType::II, DoubleType::III}) {
      out << to_string(t) << " minus-alpha-max " << cell(t, Vertex::minus_alpha_max()) << "\n";
      out << to_string(t) << " simple 1 " << cell(t, Vertex::simple(1)) << "\n";
      out << to_string(t) << " simple k>1 " << cell(t, Vertex::simple(2)) << "\n";
    }
    return kPass;
  }
  const DoubleType type = parse_type(args[0]);
  if (args.size() == 2 && args[1] == "minus-alpha-max") {
    out << cell(type, Vertex::minus_alpha_max()) << "\n";
    return kPass;
  }
  if (args.size() == 3 && args[1] == "simple") {
    int k = 0;
    std::istringstream in(args[2]);
    if (!(in >> k) || !in.eof() || k < 1) invalid("k_i must be a positive integer, got '" + args[2] + "'");
    out << cell(type, Vertex::simple(k)) << "\n";
    return kPass;
  }
  invalid("table expects <I|II|III> minus-alpha-max | <I|II|III> simple <k>");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact r-matrices and Lie bialgebra structures on g[u]", "lbforge"};
  app.require_subcommand(1);
  Options o;

  auto* build = app.add_subcommand("build", "write r(u,v) for a case as JSON");
  build->add_option("--algebra", o.algebra, "A:n, i.e. sl_{n+1}")->capture_default_str();
  build->add_option("--case", o.case_text, "case, e.g. I:two-points:1,2")->required();
  build->add_option("--r", o.r_text, "zero | dj | jordanian:i,j | file:path (default: catalog choice)");
  build->add_option("--out", o.out_path, "output file (default: stdout)");

  auto* verify = app.add_subcommand("verify", "check a serialized r(u,v)");
  verify->add_option("--in", o.in_path, "input JSON")->required();
  verify->add_option("--case", o.case_text, "case (default: the document's \"case\" member)");
  verify->add_option("--checks", o.checks, "subset of cybe,skew,duality,delta-axioms,equiv")->capture_default_str();
  verify->add_option("--degree", o.degree, "truncation for duality, degree for delta-axioms (default 2)");
  verify->add_option("--from", o.from, "c1,c2 of the source family for the equiv check");
  verify->add_option("--out", o.out_path, "report file (default: stdout)");

  auto* dual = app.add_subcommand("dualbasis", "dual basis of the catalog W0");
  dual->add_option("--algebra", o.algebra, "A:n")->capture_default_str();
  dual->add_option("--case", o.case_text, "case")->required();
  dual->add_option("--degree", o.degree, "truncation (default 6)");
  dual->add_option("--out", o.out_path, "output file (default: stdout)");

  auto* equiv = app.add_subcommand("equiv", "quasi-twist between two-point families");
  equiv->add_option("--algebra", o.algebra, "A:n")->capture_default_str();
  equiv->add_option("values", o.positional, "c1 c2 d1 d2");

  auto* table = app.add_subcommand("table", "admissible degree of 1/a(u)");
  table->add_option("cell", o.positional, "<I|II|III> minus-alpha-max | <I|II|III> simple <k>");

  std::vector<const char*> argv{"lbforge"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInvalidConfig;
  }

  try {
    if (build->parsed()) return cmd_build(o, out);
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (dual->parsed()) return cmd_dualbasis(o, out);
    if (equiv->parsed()) return cmd_equiv(o, out);
    return cmd_table(o, out);
  } catch (const Exit& e) {
    err << "lbforge: " << e.message << "\n";
    return e.code;
  } catch (const Error& e) {
    err << "lbforge: " << e.what() << "\n";
    return kInvalidConfig;
  }
}

}  // namespace lbforge::cli
