#pragma once

#include <string>
#include <vector>

#include "ringlab/central.hpp"
#include "ringlab/ideals.hpp"
#include "ringlab/suites.hpp"
#include "ringlab/symbolic.hpp"

namespace ringlab {

/// Scalars are written as decimal strings ("3", "-1/2").
Json element_json(const Algebra& a, const Element& v);
Json subspace_json(const Algebra& a, const Subspace& s);
/// "span{Eb, Ef}" using canonical basis vectors, or "0".
std::string span_text(const Algebra& a, const Subspace& s);
/// "Ea·Eb = Ec", written in the order the product is taken.
std::string escape_text(const Algebra& a, const MultiplicationEscape& e, Side side);

/// "right ideal: yes; left ideal: no (witness Ea·Eb = Ec)".
std::string sidedness_text(const Algebra& a, const SidedIdeal& s);
Json sided_json(const Algebra& a, const SidedIdeal& s);
Json radical_json(const Algebra& a, const RadicalCertificate& r);
/// Witness tables longer than `witness_limit` are elided unless `full_witnesses`.
Json ce_json(const Algebra& a, const CEReport& r, bool full_witnesses, std::size_t witness_limit = 32);
Json essential_json(const Algebra& a, const EssentialVerdict& v);
Json closed_json(const Algebra& a, const ClosedVerdict& v);
Json complement_json(const Algebra& a, const ComplementVerdict& v);
Json quasi_invariant_json(const Algebra& a, const QuasiInvariantVerdict& v);
Json witness_certificate_json(const WitnessCertificate& c);
Json piecewise_json(const Algebra& a, const PiecewiseCertificate& c);

Json sheet_json(const VerdictSheet& s);
std::string sheet_text(const VerdictSheet& s);
Json findings_json(const OQ15Findings& f, bool include_samples = true);
std::string findings_text(const OQ15Findings& f);

/// Left-aligned columns separated by two spaces; the first row is the header.
std::string aligned_table(const std::vector<std::vector<std::string>>& rows);

}  // namespace ringlab
