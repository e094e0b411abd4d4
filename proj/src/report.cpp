#include "ringlab/report.hpp"

#include <algorithm>
#include <sstream>

namespace ringlab {

namespace {

std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

Json coords_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

Json element_json(const Algebra& a, const Element& v) {
  Json out;
  out["text"] = a.format(v);
  out["coords"] = coords_json(v);
  return out;
}

Json subspace_json(const Algebra& a, const Subspace& s) {
  Json out;
  out["dim"] = s.dim();
  out["span"] = span_text(a, s);
  Json basis = Json::array();
  for (std::size_t r = 0; r < s.dim(); ++r) basis.push_back(coords_json(s.basis_vector(r)));
  out["basis"] = std::move(basis);
  return out;
}

std::string span_text(const Algebra& a, const Subspace& s) {
  if (s.is_zero()) return "0";
  std::string out = "span{";
  for (std::size_t r = 0; r < s.dim(); ++r) {
    if (r) out += ", ";
    out += a.format(s.basis_vector(r));
  }
  return out + "}";
}

std::string escape_text(const Algebra& a, const MultiplicationEscape& e, Side side) {
  const std::string g = a.format(e.generator);
  const std::string& b = a.names()[e.multiplier];
  return (side == Side::right ? g + "·" + b : b + "·" + g) + " = " + a.format(e.product);
}

std::string sidedness_text(const Algebra& a, const SidedIdeal& s) {
  std::string out = "right ideal: " + yes_no(s.is_right);
  if (s.right_violation) out += " (witness " + escape_text(a, *s.right_violation, Side::right) + ")";
  out += "; left ideal: " + yes_no(s.is_left);
  if (s.left_violation) out += " (witness " + escape_text(a, *s.left_violation, Side::left) + ")";
  return out;
}

Json sided_json(const Algebra& a, const SidedIdeal& s) {
  Json out;
  out["subspace"] = subspace_json(a, s.subspace);
  out["is_right"] = s.is_right;
  out["is_left"] = s.is_left;
  out["two_sided"] = s.two_sided();
  if (s.right_violation) {
    out["right_violation"] = {{"generator", element_json(a, s.right_violation->generator)},
                              {"multiplier", a.names()[s.right_violation->multiplier]},
                              {"product", element_json(a, s.right_violation->product)},
                              {"text", escape_text(a, *s.right_violation, Side::right)}};
  }
  if (s.left_violation) {
    out["left_violation"] = {{"generator", element_json(a, s.left_violation->generator)},
                             {"multiplier", a.names()[s.left_violation->multiplier]},
                             {"product", element_json(a, s.left_violation->product)},
                             {"text", escape_text(a, *s.left_violation, Side::left)}};
  }
  return out;
}

Json radical_json(const Algebra& a, const RadicalCertificate& r) {
  Json out;
  out["radical"] = subspace_json(a, r.radical);
  out["nilpotency_index"] = r.nilpotency_index;
  out["power_dims"] = r.power_dims;
  out["method"] = r.method;
  out["quotient_dim"] = a.dim() - r.radical.dim();
  out["quotient_semisimple"] = r.quotient_semisimple;
  return out;
}

Json ce_json(const Algebra& a, const CEReport& r, bool full_witnesses, std::size_t witness_limit) {
  Json out;
  out["verdict"] = verdict_name(r.verdict);
  out["mode"] = r.mode == CEMode::exhaustive ? "exhaustive" : "random";
  out["center"] = subspace_json(a, r.center);
  out["nonzero_checked"] = r.nonzero_checked;
  out["noncentral_checked"] = r.noncentral_checked;
  if (r.mode == CEMode::random) {
    out["trials"] = r.trials;
    out["seed"] = r.seed;
  }
  if (r.counterexample) {
    out["counterexample"] = element_json(a, *r.counterexample);
    out["counterexample_index"] = *r.counterexample_index;
  }
  out["witness_count"] = r.witnesses.size();
  if (full_witnesses || r.witnesses.size() <= witness_limit) {
    Json ws = Json::array();
    for (const auto& w : r.witnesses)
      ws.push_back({{"index", w.index},
                    {"element", a.format(w.element)},
                    {"x", a.format(w.multiplier)},
                    {"y", a.format(w.product)}});
    out["witnesses"] = std::move(ws);
  } else {
    out["witnesses_elided"] = true;
  }
  return out;
}

Json essential_json(const Algebra& a, const EssentialVerdict& v) {
  Json out;
  out["essential"] = v.essential;
  out["checked"] = v.checked;
  if (v.witness) out["witness"] = element_json(a, *v.witness);
  if (!v.certificates.empty()) {
    Json cs = Json::array();
    for (const auto& c : v.certificates)
      cs.push_back({{"m", a.format(c.element)}, {"multiplier", a.format(c.multiplier)}, {"product", a.format(c.product)}});
    out["certificates"] = std::move(cs);
  }
  return out;
}

Json closed_json(const Algebra& a, const ClosedVerdict& v) {
  Json out;
  out["closed"] = v.closed;
  out["representatives_checked"] = v.representatives_checked;
  out["extensions_checked"] = v.extensions_checked;
  if (v.extender) out["extender"] = element_json(a, *v.extender);
  if (v.extension) out["extension"] = subspace_json(a, *v.extension);
  if (v.evidence) out["essential_extension"] = essential_json(a, *v.evidence);
  return out;
}

Json complement_json(const Algebra& a, const ComplementVerdict& v) {
  Json out;
  out["is_complement"] = v.is_complement;
  out["meets_trivially"] = v.meets_trivially;
  out["representatives_checked"] = v.representatives_checked;
  if (v.common_element) out["common_element"] = element_json(a, *v.common_element);
  if (v.extender) out["extender"] = element_json(a, *v.extender);
  if (v.extension) out["extension"] = subspace_json(a, *v.extension);
  if (!v.maximality_witnesses.empty()) {
    Json ws = Json::array();
    for (const auto& [u, hit] : v.maximality_witnesses) ws.push_back({{"u", a.format(u)}, {"meets_at", a.format(hit)}});
    out["maximality_witnesses"] = std::move(ws);
  }
  return out;
}

Json quasi_invariant_json(const Algebra& a, const QuasiInvariantVerdict& v) {
  Json out;
  out["quasi_invariant"] = v.quasi_invariant;
  out["maximal_count"] = v.maximal_count;
  if (v.witness) out["witness"] = sided_json(a, *v.witness);
  return out;
}

Json witness_certificate_json(const WitnessCertificate& c) {
  Json out;
  out["variables"] = c.variables;
  Json product = Json::array();
  for (const auto& f : c.product) product.push_back(f.to_string());
  out["product"] = std::move(product);
  out["noncentral_vanishes"] = c.noncentral_vanishes;
  Json central = Json::object();
  for (const auto& [name, f] : c.central_part) central[name] = f.to_string();
  out["central_coordinates"] = std::move(central);
  Json vanishing = Json::array();
  for (std::size_t i = 0; i < c.primes.size(); ++i) {
    Json v;
    v["p"] = c.primes[i];
    if (c.vanishing[i]) {
      Json point = Json::object();
      for (std::size_t k = 0; k < c.variables.size(); ++k)
        point[c.variables[k]] = c.vanishing[i]->point[k].to_string();
      v["fails"] = true;
      v["first_point"] = std::move(point);
      v["failures"] = c.vanishing[i]->failures;
      v["noncentral_checked"] = c.vanishing[i]->checked;
    } else {
      v["fails"] = false;
    }
    vanishing.push_back(std::move(v));
  }
  out["finite_fields"] = std::move(vanishing);
  return out;
}

Json piecewise_json(const Algebra& a, const PiecewiseCertificate& c) {
  Json out;
  Json branches = Json::array();
  for (const auto& b : c.branches) {
    Json j;
    j["coordinate"] = a.names()[b.coordinate];
    Json product = Json::array();
    for (const auto& f : b.product) product.push_back(f.to_string());
    j["product"] = std::move(product);
    j["central"] = b.central;
    j["nonzero_by"] = b.nonzero_by ? Json(*b.nonzero_by) : Json(nullptr);
    branches.push_back(std::move(j));
  }
  out["branches"] = std::move(branches);
  out["covers_noncentral"] = c.covers_noncentral;
  out["valid"] = c.valid;
  return out;
}

Json sheet_json(const VerdictSheet& s) {
  Json out;
  out["sheet"] = s.name;
  out["subject"] = s.subject;
  out["implication"] = implication_name(s.implication);
  Json rows = Json::array();
  for (const auto& r : s.rows) {
    Json j;
    j["id"] = r.id;
    j["claim"] = r.claim;
    j["expected"] = r.expected;
    j["computed"] = r.computed;
    j["agrees_with_paper"] = r.agrees_with_paper ? Json(*r.agrees_with_paper) : Json(nullptr);
    j["summary"] = r.summary;
    j["evidence"] = r.evidence;
    rows.push_back(std::move(j));
  }
  out["rows"] = std::move(rows);
  return out;
}

std::string sheet_text(const VerdictSheet& s) {
  std::ostringstream os;
  os << s.name << " " << s.subject << "\n";
  std::vector<std::vector<std::string>> table{{"id", "expected", "computed", "agrees"}};
  for (const auto& r : s.rows)
    table.push_back({r.id, r.expected, r.computed, r.agrees_with_paper ? yes_no(*r.agrees_with_paper) : "-"});
  os << aligned_table(table);
  bool notes = false;
  for (const auto& r : s.rows) {
    if (r.summary.empty()) continue;
    if (!notes) os << "\n";
    notes = true;
    os << r.id << ": " << r.summary << "\n";
  }
  if (s.implication != Implication::not_applicable) os << "\nimplication: " << implication_name(s.implication) << "\n";
  return os.str();
}

Json findings_json(const OQ15Findings& f, bool include_samples) {
  Json out;
  out["config"] = {{"dims", f.config.dims},
                   {"primes", f.config.primes},
                   {"samples", f.config.samples},
                   {"seed", f.config.seed},
                   {"inject_paper", f.config.inject_paper},
                   {"size_limit", f.config.size_limit},
                   {"scheme", kRandomScheme}};
  out["sampled"] = f.sampled;
  out["skipped"] = f.skipped;
  out["centrally_essential"] = f.centrally_essential;
  out["ce_all_minimal_central"] = f.ce_all_minimal_central;
  out["ce_socle_in_center"] = f.ce_socle_in_center;
  out["counterexamples"] = f.counterexamples;
  if (!include_samples) return out;
  Json samples = Json::array();
  for (const auto& s : f.samples) {
    Json j;
    j["index"] = s.index;
    j["source"] = s.source;
    j["matrix_size"] = s.matrix_size;
    j["p"] = s.p;
    if (s.source == "random") {
      j["generators"] = s.generator_count;
      j["profile"] = profile_name(s.profile);
      j["sample_seed"] = s.sample_seed;
    }
    j["dim"] = s.dim;
    j["skipped"] = s.skipped;
    if (!s.skipped) {
      j["centrally_essential"] = s.centrally_essential;
      if (s.centrally_essential) {
        j["quotient_commutative"] = s.quotient_commutative;
        j["minimal_right_ideals"] = s.minimal_count;
        j["all_minimal_two_sided"] = s.all_minimal_two_sided;
        j["all_minimal_central"] = s.all_minimal_central;
        j["socle_in_center"] = s.socle_in_center;
      }
    }
    if (s.counterexample) {
      Json basis = Json::array();
      for (const auto& v : *s.counterexample) basis.push_back(coords_json(v));
      j["counterexample"] = std::move(basis);
    }
    samples.push_back(std::move(j));
  }
  out["samples"] = std::move(samples);
  return out;
}

std::string findings_text(const OQ15Findings& f) {
  std::ostringstream os;
  os << "search-oq15 seed " << f.config.seed << ", " << f.config.samples << " samples\n";
  std::vector<std::vector<std::string>> table{{"quantity", "count"}};
  table.push_back({"sampled", std::to_string(f.sampled)});
  table.push_back({"skipped (size guard)", std::to_string(f.skipped)});
  table.push_back({"centrally essential", std::to_string(f.centrally_essential)});
  table.push_back({"CE, all minimal right ideals central", std::to_string(f.ce_all_minimal_central)});
  table.push_back({"CE, socle in center", std::to_string(f.ce_socle_in_center)});
  table.push_back({"counterexamples", std::to_string(f.counterexamples)});
  os << aligned_table(table);
  return os.str();
}

std::string aligned_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& r : rows) {
    if (widths.size() < r.size()) widths.resize(r.size(), 0);
    for (std::size_t c = 0; c < r.size(); ++c) widths[c] = std::max(widths[c], display_width(r[c]));
  }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(widths[c] - display_width(r[c]) + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

}  // namespace ringlab
