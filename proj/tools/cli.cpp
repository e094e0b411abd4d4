#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "ringlab/catalog.hpp"
#include "ringlab/central.hpp"
#include "ringlab/ideals.hpp"
#include "ringlab/report.hpp"
#include "ringlab/spec_io.hpp"
#include "ringlab/suites.hpp"

namespace ringlab {

namespace {

FieldDesc field_from_name(const std::string& name) {
  if (name == "Q") return FieldDesc::rationals();
  if (name.size() < 2 || name[0] != 'F') throw Error(ErrorCode::ParseError, "unknown field " + name);
  return FieldDesc::prime(std::stoull(name.substr(1)));
}

std::optional<std::pair<std::string, FieldDesc>> builtin_parts(const std::string& input) {
  static const std::regex pattern(R"(^(paper|M[0-9]+|UT[0-9]+)@(F[0-9]+|Q)$)");
  std::smatch m;
  if (!std::regex_match(input, m, pattern)) return std::nullopt;
  return std::make_pair(m[1].str(), field_from_name(m[2].str()));
}

Element parse_element(const Algebra& a, const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty element");
  Element v = a.zero();
  std::size_t pos = 0;
  while (pos < text.size()) {
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
    }
    std::size_t end = text.find_first_of("+-", pos);
    std::string term = text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    pos = end == std::string::npos ? text.size() : end;
    if (term.empty()) throw Error(ErrorCode::ParseError, "malformed element '" + raw + "'");
    Scalar coeff = a.field().one();
    std::string name = term;
    if (auto star = term.find('*'); star != std::string::npos) {
      coeff = a.field().parse(term.substr(0, star));
      name = term.substr(star + 1);
    }
    auto idx = a.index_of(name);
    if (!idx) throw Error(ErrorCode::ParseError, "unknown basis name '" + name + "'");
    if (negative) coeff = -coeff;
    v[*idx] += coeff;
  }
  return v;
}

struct Common {
  std::string input;
  std::string json_path;
  unsigned threads = 1;
};

unsigned default_threads() {
  if (const char* env = std::getenv("RINGLAB_THREADS")) {
    try {
      long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  return 1;
}

Side parse_side(const std::string& s) { return s == "left" ? Side::left : Side::right; }

void emit(const Common& c, std::ostream& out, const Json& j, const std::string& text) {
  if (c.json_path == "-") {
    out << dump_json(j);
    return;
  }
  if (!c.json_path.empty()) {
    std::ofstream f(c.json_path);
    if (!f) throw Error(ErrorCode::ParseError, "--json: cannot write " + c.json_path);
    f << dump_json(j);
  }
  out << text;
}

std::string products_text(const Algebra& a) {
  std::string out;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.basis(i) == a.unit()) continue;
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (a.basis(j) == a.unit()) continue;
      Element p = a.multiply(a.basis(i), a.basis(j));
      if (is_zero_vector(p)) continue;
      out += "  " + a.names()[i] + "·" + a.names()[j] + " = " + a.format(p) + "\n";
    }
  }
  return out;
}

std::string ce_line(const Algebra& a, const CEReport& r) {
  std::string out = verdict_name(r.verdict);
  if (r.mode == CEMode::exhaustive)
    out += " (exhaustive, " + std::to_string(r.nonzero_checked) + " non-zero elements checked)";
  else
    out += " (random, " + std::to_string(r.trials) + " trials, seed " + std::to_string(r.seed) + ")";
  out += "\n";
  if (r.counterexample) out += "counterexample: " + a.format(*r.counterexample) + "\n";
  return out;
}

}  // namespace

Algebra resolve_algebra(const std::string& input) {
  if (auto parts = builtin_parts(input)) {
    const auto& [kind, field] = *parts;
    if (kind == "paper") return paper_algebra(field).algebra();
    if (kind.rfind("UT", 0) == 0) return upper_triangular(std::stoul(kind.substr(2)), field);
    return full_matrix(std::stoul(kind.substr(1)), field);
  }
  return load_algebra_file(input);
}

Subspace parse_subspace(const Algebra& a, const std::string& text, const std::string& option) {
  if (text == "I" || text == "J" || text == "C") {
    PaperBundle pb = paper_algebra(a.field());
    if (!(pb.algebra() == a)) throw Error(ErrorCode::ParseError, option + ": " + text + " is only defined for paper@...");
    return text == "I" ? pb.I : text == "J" ? pb.J : pb.C;
  }
  if (text == "center") return center(a);
  if (text == "radical") return radical_subspace(a);
  if (text == "0") return Subspace::zero(a.field(), a.dim());
  if (text == "all") return Subspace::full(a.field(), a.dim());
  std::vector<Element> gens;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';'))
    if (!item.empty()) {
      try {
        gens.push_back(parse_element(a, item));
      } catch (const Error& e) {
        const std::string what = e.what();
        throw Error(e.code(), option + ": " + what.substr(what.find(": ") + 2));
      }
    }
  if (gens.empty()) throw Error(ErrorCode::ParseError, option + ": no generators in '" + text + "'");
  return Subspace::span(a.field(), a.dim(), gens);
}

int exit_status(const Error& e) { return e.is_certificate_failure() ? 2 : 1; }

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ringlab: exact checks for finite-dimensional associative algebras", "ringlab"};
  app.require_subcommand(1);
  Common c;
  c.threads = default_threads();

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    if (needs_input) sub->add_option("input", c.input, "built-in name (paper@F2, M2@F3, UT2@F2) or spec file")->required();
    sub->add_option("--json", c.json_path, "write the JSON report to this path ('-' for stdout)");
    sub->add_option("--threads", c.threads, "worker threads (default from RINGLAB_THREADS)")->check(CLI::PositiveNumber);
    return sub;
  };

  std::string subspace, inner, outer, candidate, other, side = "right", method = "auto", mode = "exhaustive",
                                                         kind = "sidedness";
  std::uint64_t seed = 0, samples = 500, trials = 1000;
  std::size_t degree = 2;
  bool full_witnesses = false, inject_paper = false;
  std::vector<std::size_t> dims{2, 3, 4};
  std::vector<std::uint32_t> primes{2, 3};
  const std::vector<std::string> sides{"right", "left"};

  auto* validate = add_common(app.add_subcommand("validate", "build and validate an algebra"), true);
  auto* info = add_common(app.add_subcommand("info", "summary of an algebra"), true);
  auto* center_cmd = add_common(app.add_subcommand("center", "center of the algebra"), true);
  auto* radical = add_common(app.add_subcommand("radical", "Jacobson radical with certificate"), true);
  radical->add_option("--method", method, "auto, trace or filter")->check(CLI::IsMember({"auto", "trace", "filter"}));
  auto* ce = add_common(app.add_subcommand("ce", "centrally essential decision"), true);
  ce->add_option("--mode", mode, "exhaustive or random")->check(CLI::IsMember({"exhaustive", "random"}));
  ce->add_option("--trials", trials, "random trials");
  ce->add_option("--seed", seed, "random seed");
  ce->add_flag("--full-witnesses", full_witnesses, "never elide the witness table");
  auto* ideals = add_common(app.add_subcommand("ideals", "sidedness of a subspace, or ideal lists"), true);
  ideals->add_option("--subspace", subspace, "I, J, C, center, radical, or generators like \"Eb;Ef\"");
  ideals->add_option("--kind", kind, "sidedness, maximal, minimal or socle")
      ->check(CLI::IsMember({"sidedness", "maximal", "minimal", "socle"}));
  ideals->add_option("--side", side, "right or left")->check(CLI::IsMember(sides));
  auto* essential = add_common(app.add_subcommand("essential", "is --inner essential in --outer"), true);
  essential->add_option("--inner", inner, "smaller one-sided ideal")->required();
  essential->add_option("--outer", outer, "larger one-sided ideal")->required();
  essential->add_option("--side", side, "right or left")->check(CLI::IsMember(sides));
  auto* closed = add_common(app.add_subcommand("closed", "closedness of a one-sided ideal"), true);
  closed->add_option("--subspace", subspace, "the ideal")->required();
  closed->add_option("--side", side, "right or left")->check(CLI::IsMember(sides));
  auto* complement = add_common(app.add_subcommand("complement", "∩-complement check"), true);
  complement->add_option("--candidate", candidate, "candidate complement K")->required();
  complement->add_option("--other", other, "the ideal it should complement")->required();
  complement->add_option("--side", side, "right or left")->check(CLI::IsMember(sides));
  auto* qi = add_common(app.add_subcommand("quasi-invariant", "are all maximal one-sided ideals two-sided"), true);
  auto* quotient = add_common(app.add_subcommand("quotient", "quotient by a two-sided ideal"), true);
  quotient->add_option("--subspace", subspace, "the ideal")->required();
  auto* truncate = add_common(app.add_subcommand("truncate", "A[x]/(x^m)"), true);
  truncate->add_option("--m", degree, "truncation order (>= 2)")->check(CLI::Range(2, 64));
  auto* verify = add_common(app.add_subcommand("verify-paper", "verdict sheet for the 7x7 example"), true);
  auto* lemma21 = add_common(app.add_subcommand("lemma21", "maximal right ideal extension in A[x]/(x^m)"), true);
  lemma21->add_option("--subspace", subspace, "maximal right ideal M (default: first one found)");
  lemma21->add_option("--m", degree, "truncation order (>= 2)")->check(CLI::Range(2, 64));
  auto* lemma22 = add_common(app.add_subcommand("lemma22", "central essentiality of A[x]/(x^m)"), true);
  lemma22->add_option("--m", degree, "truncation order (>= 2)")->check(CLI::Range(2, 64));
  auto* remarks = add_common(app.add_subcommand("remarks", "radical-quotient and minimal-ideal implications"), true);
  auto* search = add_common(app.add_subcommand("search-oq15", "random search for a non-two-sided minimal right ideal"), false);
  search->add_option("--seed", seed, "master seed");
  search->add_option("--samples", samples, "number of random samples");
  search->add_option("--dims", dims, "matrix sizes")->delimiter(',');
  search->add_option("--primes", primes, "prime fields")->delimiter(',');
  search->add_flag("--inject-paper", inject_paper, "also evaluate the 7x7 example over F2");
  auto* export_cmd = add_common(app.add_subcommand("export-example", "write a built-in algebra as a spec file"), true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    const Side s = parse_side(side);
    if (search->parsed()) {
      OQ15Config cfg;
      cfg.dims = dims;
      cfg.primes = primes;
      cfg.samples = samples;
      cfg.seed = seed;
      cfg.threads = c.threads;
      cfg.inject_paper = inject_paper;
      OQ15Findings f = search_oq15(cfg);
      emit(c, out, findings_json(f), findings_text(f));
      return 0;
    }

    if (verify->parsed()) {
      auto parts = builtin_parts(c.input);
      if (!parts || parts->first != "paper")
        throw Error(ErrorCode::ParseError, "input: verify-paper expects paper@F<p> or paper@Q");
      VerdictSheet sheet = verify_paper_example(parts->second, c.threads);
      emit(c, out, sheet_json(sheet), sheet_text(sheet));
      return 0;
    }

    if (export_cmd->parsed()) {
      auto parts = builtin_parts(c.input);
      if (!parts) throw Error(ErrorCode::ParseError, "input: export-example expects a built-in name");
      Json spec;
      if (parts->first == "paper") {
        PaperBundle pb = paper_algebra(parts->second);
        spec = matrix_basis_spec(parts->second, 7, paper_generators(parts->second), pb.algebra().names(), false);
      } else {
        spec = structure_constants_spec(resolve_algebra(c.input));
      }
      if (c.json_path.empty() || c.json_path == "-") {
        out << dump_json(spec);
      } else {
        std::ofstream f(c.json_path);
        if (!f) throw Error(ErrorCode::ParseError, "--json: cannot write " + c.json_path);
        f << dump_json(spec);
        out << "wrote " << c.json_path << "\n";
      }
      return 0;
    }

    Algebra a = resolve_algebra(c.input);

    if (validate->parsed()) {
      Json j{{"valid", true}, {"field", a.field().name()}, {"dim", a.dim()}, {"names", a.names()},
             {"unit", element_json(a, a.unit())}};
      emit(c, out, j, "valid: dimension " + std::to_string(a.dim()) + " over " + a.field().name() + "\n");
      return 0;
    }
    if (info->parsed()) {
      CommutativityVerdict comm = is_commutative(a);
      Subspace z = center(a);
      std::ostringstream os;
      os << "algebra: dimension " << a.dim() << " over " << a.field().name() << "\n";
      os << "basis:";
      for (const auto& n : a.names()) os << " " << n;
      os << "\nunit: " << a.format(a.unit()) << "\n";
      os << "commutative: " << (comm.commutative ? "yes" : "no");
      if (comm.witness)
        os << " (" << a.names()[comm.witness->first] << "·" << a.names()[comm.witness->second] << " != "
           << a.names()[comm.witness->second] << "·" << a.names()[comm.witness->first] << ")";
      os << "\ncenter: " << span_text(a, z) << " (dim " << z.dim() << ")\n";
      std::string products = products_text(a);
      if (!products.empty()) os << "non-zero products of non-unit basis elements:\n" << products;
      Json j = structure_constants_spec(a);
      j["commutative"] = comm.commutative;
      j["center"] = subspace_json(a, z);
      emit(c, out, j, os.str());
      return 0;
    }
    if (center_cmd->parsed()) {
      Subspace z = center(a);
      emit(c, out, subspace_json(a, z), "center: " + span_text(a, z) + " (dim " + std::to_string(z.dim()) + ")\n");
      return 0;
    }
    if (radical->parsed()) {
      RadicalMethod m = method == "trace"    ? RadicalMethod::trace_form
                        : method == "filter" ? RadicalMethod::element_filter
                                             : RadicalMethod::automatic;
      RadicalCertificate rc = jacobson_radical(a, m);
      std::string text = "radical: " + span_text(a, rc.radical) + " (dim " + std::to_string(rc.radical.dim()) +
                         "), nilpotency index " + std::to_string(rc.nilpotency_index) + ", method " + rc.method + "\n";
      emit(c, out, radical_json(a, rc), text);
      return 0;
    }
    if (ce->parsed()) {
      CEOptions opt;
      opt.mode = mode == "random" ? CEMode::random : CEMode::exhaustive;
      opt.trials = trials;
      opt.seed = seed;
      opt.threads = c.threads;
      CEReport r = check_centrally_essential(a, opt);
      if (auto e = validate_ce_report(a, r)) throw Error(ErrorCode::CertificateFailure, *e);
      emit(c, out, ce_json(a, r, full_witnesses), ce_line(a, r));
      return 0;
    }
    if (ideals->parsed()) {
      if (kind == "sidedness") {
        if (subspace.empty()) throw Error(ErrorCode::ParseError, "--subspace is required for --kind sidedness");
        SidedIdeal si = sidedness(a, parse_subspace(a, subspace));
        emit(c, out, sided_json(a, si), sidedness_text(a, si) + "\n");
        return 0;
      }
      if (kind == "socle") {
        Subspace soc = socle(a, s, c.threads);
        emit(c, out, subspace_json(a, soc), std::string(side_name(s)) + " socle: " + span_text(a, soc) + "\n");
        return 0;
      }
      std::vector<SidedIdeal> list = kind == "maximal" ? maximal_ideals(a, s) : minimal_ideals(a, s, c.threads);
      Json arr = Json::array();
      std::string text = std::to_string(list.size()) + " " + kind + " " + side_name(s) + " ideal(s)\n";
      for (const auto& m : list) {
        arr.push_back(sided_json(a, m));
        text += "  " + span_text(a, m.subspace) + (m.two_sided() ? "  two-sided" : "  one-sided") + "\n";
      }
      emit(c, out, Json{{"kind", kind}, {"side", side_name(s)}, {"ideals", arr}}, text);
      return 0;
    }
    if (essential->parsed()) {
      Subspace n = parse_subspace(a, inner, "--inner"), m = parse_subspace(a, outer, "--outer");
      EssentialVerdict v = is_essential(a, n, m, s, true);
      std::string text = v.essential ? "essential: yes (" + std::to_string(v.checked) + " non-zero elements checked)\n"
                                     : "essential: no (witness " + a.format(*v.witness) + ")\n";
      emit(c, out, essential_json(a, v), text);
      return 0;
    }
    if (closed->parsed()) {
      ClosedVerdict v = is_closed(a, parse_subspace(a, subspace), s);
      std::string text = v.closed ? "closed: yes (" + std::to_string(v.extensions_checked) + " extensions checked)\n"
                                  : "closed: no (essential in " + span_text(a, *v.extension) + ", extender " +
                                        a.format(*v.extender) + ")\n";
      emit(c, out, closed_json(a, v), text);
      return 0;
    }
    if (complement->parsed()) {
      ComplementVerdict v = intersection_complement_check(a, parse_subspace(a, candidate, "--candidate"), parse_subspace(a, other, "--other"), s);
      std::string text;
      if (v.is_complement)
        text = "complement: yes (" + std::to_string(v.maximality_witnesses.size()) + " extensions checked)\n";
      else if (v.common_element)
        text = "complement: no (meets at " + a.format(*v.common_element) + ")\n";
      else
        text = "complement: no (extender " + a.format(*v.extender) + " gives " + span_text(a, *v.extension) +
               ", still meeting trivially)\n";
      emit(c, out, complement_json(a, v), text);
      return 0;
    }
    if (qi->parsed()) {
      QuasiInvariantVerdict r = is_quasi_invariant(a, Side::right);
      QuasiInvariantVerdict l = is_quasi_invariant(a, Side::left);
      auto line = [&](const char* name, const QuasiInvariantVerdict& v) {
        std::string t = std::string(name) + " quasi-invariant: " + (v.quasi_invariant ? "yes" : "no") + " (" +
                        std::to_string(v.maximal_count) + " maximal " + name + " ideals)";
        if (v.witness) t += "; " + span_text(a, v.witness->subspace) + " is not two-sided";
        return t + "\n";
      };
      emit(c, out, Json{{"right", quasi_invariant_json(a, r)}, {"left", quasi_invariant_json(a, l)}},
           line("right", r) + line("left", l));
      return 0;
    }
    if (quotient->parsed()) {
      QuotientAlgebra q = quotient_algebra(a, parse_subspace(a, subspace));
      std::string text = "quotient: dimension " + std::to_string(q.algebra.dim()) + ", representatives";
      for (const auto& n : q.algebra.names()) text += " " + n;
      text += "\n" + products_text(q.algebra);
      emit(c, out, structure_constants_spec(q.algebra), text);
      return 0;
    }
    if (truncate->parsed()) {
      Algebra r = truncated_polynomial_algebra(a, degree);
      emit(c, out, structure_constants_spec(r),
           "truncated extension: dimension " + std::to_string(r.dim()) + " (m = " + std::to_string(degree) + ")\n");
      return 0;
    }
    if (lemma21->parsed()) {
      Subspace m = Subspace::zero(a.field(), a.dim());
      if (subspace.empty()) {
        std::vector<SidedIdeal> maxima = maximal_right_ideals(a);
        m = maxima.front().subspace;
      } else {
        m = parse_subspace(a, subspace);
      }
      VerdictSheet sheet = lemma21_truncated_check(a, m, degree, c.input);
      emit(c, out, sheet_json(sheet), sheet_text(sheet));
      return 0;
    }
    if (lemma22->parsed()) {
      VerdictSheet sheet = lemma22_truncated_check(a, degree, c.input, c.threads);
      emit(c, out, sheet_json(sheet), sheet_text(sheet));
      return 0;
    }
    if (remarks->parsed()) {
      VerdictSheet r11 = remark11_check(a, c.input, c.threads);
      VerdictSheet r13 = remark13_check(a, c.input, c.threads);
      emit(c, out, Json{{"remark11", sheet_json(r11)}, {"remark13", sheet_json(r13)}},
           sheet_text(r11) + "\n" + sheet_text(r13));
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_status(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace ringlab
