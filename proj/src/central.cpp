#include "ringlab/central.hpp"

#include <atomic>
#include <random>

#include "ringlab/parallel.hpp"

namespace ringlab {

Subspace center(const Algebra& a) {
  Matrix system(a.field(), 0, a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Element b = a.basis(i);
    system = system.stacked(a.right_multiplication(b) - a.left_multiplication(b));
  }
  return kernel(system);
}

bool is_central(const Algebra& a, const Element& u) {
  if (u.size() != a.dim()) throw Error(ErrorCode::DimensionMismatch, "element does not belong to the algebra");
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Element b = a.basis(i);
    if (a.multiply(u, b) != a.multiply(b, u)) return false;
  }
  return true;
}

const char* verdict_name(CEVerdict v) {
  switch (v) {
    case CEVerdict::centrally_essential: return "centrally_essential";
    case CEVerdict::not_centrally_essential: return "not_centrally_essential";
    case CEVerdict::inconclusive_random: return "inconclusive_random";
  }
  return "?";
}

Subspace central_image_intersection(const Algebra& a, const Subspace& z, const Element& element) {
  std::vector<Element> images;
  for (std::size_t i = 0; i < z.dim(); ++i) images.push_back(a.multiply(element, z.basis_vector(i)));
  return subspace_intersect(Subspace::span(a.field(), a.dim(), images), z);
}

namespace {

struct ChunkResult {
  std::vector<CEWitness> witnesses;
  std::uint64_t noncentral = 0;
  std::optional<std::uint64_t> counterexample_index;
  Element counterexample;
};

// First z in the base-p sweep of Z's basis coordinates with element*z in Z \ {0}.
std::optional<CEWitness> sweep_witness(const Algebra& a, const Subspace& z, const std::vector<Element>& images,
                                       const Element& element, std::uint64_t index) {
  Vector t = zero_vector(a.field(), z.dim());
  while (increment_coordinates(t)) {
    Element y = a.zero();
    for (std::size_t i = 0; i < t.size(); ++i) axpy(y, t[i], images[i]);
    if (is_zero_vector(y) || !z.contains(y)) continue;
    return CEWitness{index, element, z.combine(t), std::move(y)};
  }
  return std::nullopt;
}

CEReport exhaustive(const Algebra& a, const CEOptions& options) {
  Subspace z = center(a);
  const std::uint64_t total = element_count(a);
  const unsigned chunks = chunk_count(1, total, options.threads);
  std::vector<ChunkResult> results(chunks);
  std::atomic<std::uint64_t> best{total};

  parallel_chunks(1, total, options.threads, [&](unsigned chunk, std::uint64_t first, std::uint64_t last) {
    ChunkResult& out = results[chunk];
    ElementRange range(a.field(), a.dim(), first, last);
    for (auto it = range.begin(); it != range.end(); ++it) {
      if (it.index() > best.load()) break;
      const Element& element = *it;
      if (z.contains(element)) continue;
      ++out.noncentral;
      std::vector<Element> images;
      images.reserve(z.dim());
      for (std::size_t i = 0; i < z.dim(); ++i) images.push_back(a.multiply(element, z.basis_vector(i)));
      Subspace meet = subspace_intersect(Subspace::span(a.field(), a.dim(), images), z);
      if (meet.is_zero()) {
        out.counterexample_index = it.index();
        out.counterexample = element;
        std::uint64_t cur = best.load();
        while (it.index() < cur && !best.compare_exchange_weak(cur, it.index())) {
        }
        break;
      }
      if (!options.keep_witnesses) continue;
      auto w = sweep_witness(a, z, images, element, it.index());
      if (!w)
        throw Error(ErrorCode::CertificateFailure,
                    "a*Z meets Z but no witness found for " + a.format(element));
      out.witnesses.push_back(std::move(*w));
    }
  });

  CEReport report{CEVerdict::centrally_essential, CEMode::exhaustive, z};
  for (auto& chunk : results) {
    report.noncentral_checked += chunk.noncentral;
    if (chunk.counterexample_index) {
      report.verdict = CEVerdict::not_centrally_essential;
      report.counterexample = chunk.counterexample;
      report.counterexample_index = chunk.counterexample_index;
      report.nonzero_checked = *chunk.counterexample_index;
      break;
    }
    for (auto& w : chunk.witnesses) report.witnesses.push_back(std::move(w));
  }
  if (report.verdict == CEVerdict::centrally_essential)
    report.nonzero_checked = total - 1;
  else
    report.witnesses.clear();
  return report;
}

CEReport randomized(const Algebra& a, const CEOptions& options) {
  Subspace z = center(a);
  CEReport report{CEVerdict::inconclusive_random, CEMode::random, z};
  report.trials = options.trials;
  report.seed = options.seed;
  std::mt19937_64 rng(options.seed);
  for (std::uint64_t trial = 0; trial < options.trials; ++trial) {
    Element element = a.zero();
    for (auto& c : element) c = a.field().from_int(static_cast<long long>(rng() % 5) - 2);
    if (is_zero_vector(element)) continue;
    ++report.nonzero_checked;
    if (z.contains(element)) continue;
    ++report.noncentral_checked;
    std::vector<Element> images;
    for (std::size_t i = 0; i < z.dim(); ++i) images.push_back(a.multiply(element, z.basis_vector(i)));
    Subspace meet = subspace_intersect(Subspace::span(a.field(), a.dim(), images), z);
    if (meet.is_zero()) {
      report.verdict = CEVerdict::not_centrally_essential;
      report.counterexample = element;
      report.counterexample_index = trial;
      report.witnesses.clear();
      return report;
    }
    if (!options.keep_witnesses) continue;
    Element y = meet.basis_vector(0);
    Matrix image_columns(a.field(), a.dim(), images.size());
    for (std::size_t i = 0; i < images.size(); ++i) image_columns.set_column(i, images[i]);
    auto t = solve(image_columns, y);
    if (!t) throw Error(ErrorCode::CertificateFailure, "intersection vector has no preimage");
    report.witnesses.push_back(CEWitness{trial, element, z.combine(*t), y});
  }
  return report;
}

}  // namespace

CEReport check_centrally_essential(const Algebra& a, const CEOptions& options) {
  if (options.mode == CEMode::exhaustive) {
    if (!a.field().is_finite())
      throw Error(ErrorCode::InfiniteField, "exhaustive central-essentiality check needs a finite field");
    return exhaustive(a, options);
  }
  return randomized(a, options);
}

std::optional<std::string> validate_ce_report(const Algebra& a, const CEReport& report) {
  const Subspace& z = report.center;
  if (z != center(a)) return "recorded center differs from the recomputed center";
  for (const auto& w : report.witnesses) {
    const std::string who = a.format(w.element);
    if (z.contains(w.element)) return "witnessed element " + who + " is central";
    if (is_zero_vector(w.multiplier) || !z.contains(w.multiplier))
      return "multiplier for " + who + " is zero or not central";
    if (a.multiply(w.element, w.multiplier) != w.product) return "product mismatch for " + who;
    if (is_zero_vector(w.product) || !z.contains(w.product))
      return "product for " + who + " is zero or not central";
  }
  if (report.counterexample) {
    if (z.contains(*report.counterexample)) return "counterexample is central";
    if (!central_image_intersection(a, z, *report.counterexample).is_zero())
      return "counterexample has a*Z meeting Z";
  }
  if (report.verdict == CEVerdict::not_centrally_essential && !report.counterexample)
    return "negative verdict without counterexample";
  return std::nullopt;
}

}  // namespace ringlab
