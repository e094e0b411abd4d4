#include "ringlab/poly.hpp"

#include <algorithm>
#include <numeric>

namespace ringlab {

bool MultiPoly::GrlexDescending::operator()(const Exponents& x, const Exponents& y) const {
  const unsigned dx = std::accumulate(x.begin(), x.end(), 0u);
  const unsigned dy = std::accumulate(y.begin(), y.end(), 0u);
  if (dx != dy) return dx > dy;
  return std::lexicographical_compare(y.begin(), y.end(), x.begin(), x.end());
}

MultiPoly MultiPoly::constant(const mpz_class& c) {
  MultiPoly f;
  if (c != 0) f.terms_.emplace(Exponents{}, c);
  return f;
}

MultiPoly MultiPoly::variable(const std::string& name) {
  MultiPoly f;
  f.vars_.push_back(name);
  f.terms_.emplace(Exponents{1}, mpz_class(1));
  return f;
}

unsigned MultiPoly::degree() const {
  if (terms_.empty()) return 0;
  const Exponents& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0u);
}

void MultiPoly::adopt_variables(const std::vector<std::string>& names) {
  bool grew = false;
  for (const auto& n : names) {
    if (std::find(vars_.begin(), vars_.end(), n) != vars_.end()) continue;
    vars_.push_back(n);
    grew = true;
  }
  if (!grew) return;
  Terms widened;
  for (auto& [e, c] : terms_) {
    Exponents w = e;
    w.resize(vars_.size(), 0);
    widened.emplace(std::move(w), std::move(c));
  }
  terms_ = std::move(widened);
}

MultiPoly::Exponents MultiPoly::aligned(const Exponents& e, const std::vector<std::string>& from) const {
  Exponents out(vars_.size(), 0);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    auto pos = std::find(vars_.begin(), vars_.end(), from[i]) - vars_.begin();
    out[static_cast<std::size_t>(pos)] = e[i];
  }
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& g) {
  adopt_variables(g.vars_);
  for (const auto& [e, c] : g.terms_) {
    Exponents k = aligned(e, g.vars_);
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(std::move(k), c);
      continue;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& g) { return *this += -g; }

MultiPoly MultiPoly::operator-() const {
  MultiPoly f = *this;
  for (auto& [e, c] : f.terms_) c = -c;
  return f;
}

MultiPoly operator*(const MultiPoly& f, const MultiPoly& g) {
  MultiPoly out;
  out.adopt_variables(f.vars_);
  out.adopt_variables(g.vars_);
  for (const auto& [ef, cf] : f.terms_) {
    MultiPoly::Exponents af = out.aligned(ef, f.vars_);
    for (const auto& [eg, cg] : g.terms_) {
      MultiPoly::Exponents k = out.aligned(eg, g.vars_);
      for (std::size_t i = 0; i < k.size(); ++i) k[i] += af[i];
      mpz_class c = cf * cg;
      auto it = out.terms_.find(k);
      if (it == out.terms_.end()) {
        out.terms_.emplace(std::move(k), std::move(c));
        continue;
      }
      it->second += c;
      if (it->second == 0) out.terms_.erase(it);
    }
  }
  return out;
}

MultiPoly operator*(const mpz_class& c, const MultiPoly& f) {
  if (c == 0) return {};
  MultiPoly out = f;
  for (auto& [e, v] : out.terms_) v *= c;
  return out;
}

bool operator==(const MultiPoly& f, const MultiPoly& g) { return (f - g).is_zero(); }

mpz_class MultiPoly::coefficient(const std::map<std::string, unsigned>& monomial) const {
  Exponents e(vars_.size(), 0);
  for (const auto& [name, power] : monomial) {
    if (power == 0) continue;
    auto pos = std::find(vars_.begin(), vars_.end(), name);
    if (pos == vars_.end()) return 0;
    e[static_cast<std::size_t>(pos - vars_.begin())] = power;
  }
  auto it = terms_.find(e);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

Scalar MultiPoly::evaluate(const FieldDesc& field, const std::map<std::string, Scalar>& point) const {
  std::vector<Scalar> values;
  for (const auto& v : vars_) {
    auto it = point.find(v);
    if (it == point.end()) throw Error(ErrorCode::DimensionMismatch, "no value for variable " + v);
    values.push_back(it->second);
  }
  Scalar total = field.zero();
  for (const auto& [e, c] : terms_) {
    Scalar t = field.from_mpz(c);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) t *= values[i];
    total += t;
  }
  return total;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    mpz_class mag = abs(c);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;

    std::string monomial;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!monomial.empty()) monomial += "*";
      monomial += vars_[i];
      if (e[i] > 1) monomial += "^" + std::to_string(e[i]);
    }
    if (monomial.empty())
      out += mag.get_str();
    else if (mag == 1)
      out += monomial;
    else
      out += mag.get_str() + "*" + monomial;
  }
  return out;
}

MultiPoly poly_arith(PolyOp op, const MultiPoly& f, const MultiPoly& g) {
  switch (op) {
    case PolyOp::add: return f + g;
    case PolyOp::mul: return f * g;
    case PolyOp::neg: return -f;
  }
  return f;
}

}  // namespace ringlab
