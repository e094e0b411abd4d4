#include "ringlab/symbolic.hpp"

#include <algorithm>
#include <map>

#include "ringlab/central.hpp"

namespace ringlab {

namespace {

mpz_class integral(const Scalar& s, const char* what) {
  if (!s.is_rational()) return mpz_class(s.residue());
  const mpq_class& q = s.rational();
  if (q.get_den() != 1) throw Error(ErrorCode::NonIntegralConstants, std::string(what) + " " + q.get_str() + " is not an integer");
  return q.get_num();
}

// Copy of an integral algebra with every constant reduced mod p.
Algebra reduce_mod(const Algebra& a, std::uint32_t p) {
  FieldDesc fp = FieldDesc::prime(p);
  std::vector<Scalar> table;
  table.reserve(a.table().size());
  for (const auto& c : a.table()) table.push_back(fp.from_mpz(integral(c, "structure constant")));
  Element unit;
  for (const auto& c : a.unit()) unit.push_back(fp.from_mpz(integral(c, "unit coordinate")));
  return Algebra::build(fp, a.dim(), unit, table, a.names());
}

Element reduce_element(const Element& v, const FieldDesc& fp) {
  Element out;
  for (const auto& c : v) out.push_back(fp.from_mpz(integral(c, "coordinate")));
  return out;
}

void check_variables(const Algebra& a, const std::vector<std::string>& variables) {
  if (variables.size() != a.dim())
    throw Error(ErrorCode::DimensionMismatch, "need one variable per coordinate");
}

struct CentralSplit {
  std::vector<MultiPoly> residual;
  std::vector<std::pair<std::string, MultiPoly>> central;
};

CentralSplit split_central(const Algebra& a, const Subspace& z, const std::vector<MultiPoly>& v) {
  CentralSplit out{v, {}};
  for (std::size_t r = 0; r < z.dim(); ++r) {
    const std::size_t pivot = z.pivots()[r];
    MultiPoly coeff = v[pivot];
    for (std::size_t k = 0; k < a.dim(); ++k) {
      const Scalar& e = z.basis()(r, k);
      if (e.is_zero()) continue;
      out.residual[k] -= integral(e, "center basis entry") * coeff;
    }
    out.central.emplace_back(a.names()[pivot], std::move(coeff));
  }
  return out;
}

}  // namespace

std::vector<mpz_class> integral_constants(const Algebra& a) {
  std::vector<mpz_class> out;
  out.reserve(a.table().size());
  for (const auto& c : a.table()) out.push_back(integral(c, "structure constant"));
  return out;
}

std::vector<MultiPoly> generic_element(const std::vector<std::string>& variables) {
  std::vector<MultiPoly> out;
  for (const auto& v : variables) out.push_back(MultiPoly::variable(v));
  return out;
}

std::vector<std::string> prefixed_variables(const Algebra& a, const std::string& prefix,
                                            const std::vector<std::string>& labels) {
  const std::vector<std::string>& base = labels.empty() ? a.names() : labels;
  if (base.size() != a.dim()) throw Error(ErrorCode::DimensionMismatch, "need one label per coordinate");
  std::vector<std::string> out;
  for (const auto& l : base) out.push_back(prefix + "_" + l);
  return out;
}

std::vector<MultiPoly> symbolic_multiply(const Algebra& a, const std::vector<MultiPoly>& u,
                                         const std::vector<MultiPoly>& v) {
  const std::size_t n = a.dim();
  if (u.size() != n || v.size() != n) throw Error(ErrorCode::DimensionMismatch, "operand length differs from dimension");
  std::vector<mpz_class> c = integral_constants(a);
  std::vector<MultiPoly> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j].is_zero()) continue;
      MultiPoly uv;
      bool computed = false;
      for (std::size_t k = 0; k < n; ++k) {
        const mpz_class& ck = c[(i * n + j) * n + k];
        if (ck == 0) continue;
        if (!computed) {
          uv = u[i] * v[j];
          computed = true;
        }
        out[k] += ck * uv;
      }
    }
  }
  return out;
}

std::vector<MultiPoly> generic_product(const Algebra& a, const std::string& u_prefix, const std::string& v_prefix,
                                       const std::vector<std::string>& labels) {
  return symbolic_multiply(a, generic_element(prefixed_variables(a, u_prefix, labels)),
                           generic_element(prefixed_variables(a, v_prefix, labels)));
}

WitnessCertificate witness_certificate_check(const Algebra& a, const Matrix& w,
                                             const std::vector<std::string>& variables,
                                             const std::vector<std::uint32_t>& primes) {
  check_variables(a, variables);
  const std::size_t n = a.dim();
  if (w.rows() != n || w.cols() != n) throw Error(ErrorCode::BadShape, "witness map must be n x n");
  integral_constants(a);
  Subspace z = center(a);
  for (std::size_t j = 0; j < n; ++j) {
    Element col = w.column(j);
    for (const auto& s : col) integral(s, "witness entry");
    if (!z.contains(col))
      throw Error(ErrorCode::WitnessNotCentral, "witness column " + std::to_string(j) + " (" + a.format(col) +
                                                    ") is not central");
  }

  std::vector<MultiPoly> x = generic_element(variables);
  std::vector<MultiPoly> wx(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      const Scalar& e = w(k, i);
      if (!e.is_zero()) wx[k] += integral(e, "witness entry") * x[i];
    }

  WitnessCertificate cert;
  cert.variables = variables;
  cert.product = symbolic_multiply(a, x, wx);
  CentralSplit split = split_central(a, z, cert.product);
  cert.residual = std::move(split.residual);
  cert.central_part = std::move(split.central);
  cert.noncentral_vanishes =
      std::all_of(cert.residual.begin(), cert.residual.end(), [](const MultiPoly& f) { return f.is_zero(); });
  cert.primes = primes;

  for (std::uint32_t p : primes) {
    Algebra ap = reduce_mod(a, p);
    Subspace zp = center(ap);
    Matrix wp(ap.field(), n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) wp(r, c) = ap.field().from_mpz(integral(w(r, c), "witness entry"));
    std::optional<VanishingPoint> found;
    std::uint64_t failures = 0, checked = 0;
    for (const Element& el : enumerate_elements(ap)) {
      if (zp.contains(el)) continue;
      ++checked;
      Element y = ap.multiply(el, wp.apply(el));
      if (!is_zero_vector(y) && zp.contains(y)) continue;
      ++failures;
      if (!found) found = VanishingPoint{p, el, 0, 0};
    }
    if (found) {
      found->failures = failures;
      found->checked = checked;
    }
    cert.vanishing.push_back(std::move(found));
  }
  return cert;
}

PiecewiseCertificate piecewise_witness_check(const Algebra& a, const std::vector<WitnessBranch>& branches,
                                             const std::vector<std::string>& variables) {
  check_variables(a, variables);
  Subspace z = center(a);
  std::vector<MultiPoly> x = generic_element(variables);
  PiecewiseCertificate cert{{}, true, true};
  for (const auto& b : branches) {
    if (b.coordinate >= a.dim()) throw Error(ErrorCode::DimensionMismatch, "branch coordinate out of range");
    if (!z.contains(b.multiplier))
      throw Error(ErrorCode::WitnessNotCentral, "branch multiplier " + a.format(b.multiplier) + " is not central");
    std::vector<MultiPoly> zc;
    for (const auto& s : b.multiplier) zc.push_back(MultiPoly::constant(integral(s, "multiplier coordinate")));
    BranchCertificate bc{b.coordinate, symbolic_multiply(a, x, zc), false, std::nullopt};
    CentralSplit split = split_central(a, z, bc.product);
    bc.central = std::all_of(split.residual.begin(), split.residual.end(), [](const MultiPoly& f) { return f.is_zero(); });
    const MultiPoly xk = MultiPoly::variable(variables[b.coordinate]);
    for (const auto& [name, f] : split.central)
      if (f == xk || f == -xk) {
        bc.nonzero_by = name;
        break;
      }
    cert.valid = cert.valid && bc.central && bc.nonzero_by.has_value();
    cert.branches.push_back(std::move(bc));
  }
  for (std::size_t i = 0; i < a.dim(); ++i) {
    bool branched = std::any_of(branches.begin(), branches.end(), [&](const WitnessBranch& b) { return b.coordinate == i; });
    if (!branched && !z.contains(a.basis(i))) cert.covers_noncentral = false;
  }
  cert.valid = cert.valid && cert.covers_noncentral;
  return cert;
}

PiecewiseRun run_piecewise_witness(const Algebra& a, const std::vector<WitnessBranch>& branches) {
  if (!a.field().is_finite()) throw Error(ErrorCode::InfiniteField, "piecewise witness run needs a finite field");
  Subspace z = center(a);
  std::vector<Element> multipliers;
  for (const auto& b : branches)
    multipliers.push_back(b.multiplier.empty() || b.multiplier.front().field() == a.field()
                              ? b.multiplier
                              : reduce_element(b.multiplier, a.field()));
  PiecewiseRun run;
  for (const Element& el : enumerate_elements(a)) {
    if (z.contains(el)) continue;
    ++run.checked;
    std::optional<std::size_t> branch;
    for (std::size_t k = 0; k < branches.size() && !branch; ++k)
      if (!el[branches[k].coordinate].is_zero()) branch = k;
    bool ok = false;
    if (branch) {
      Element y = a.multiply(el, multipliers[*branch]);
      ok = !is_zero_vector(y) && z.contains(y);
    }
    if (!ok) {
      run.failure = el;
      break;
    }
  }
  return run;
}

}  // namespace ringlab
