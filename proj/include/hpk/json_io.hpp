#pragma once

#include <json.hpp>

#include "hpk/dirichlet.hpp"
#include "hpk/experiment.hpp"
#include "hpk/zeros.hpp"

namespace hpk {

using Json = nlohmann::json;

// Encodings used repo-wide: a complex number is [re, im]; an AnalyticPoly is
// {"coeffs": [[re,im], ...]} ascending (a bare coefficient array is accepted
// on input); a HarmonicFn is {"h": ..., "g": ...}; a MixedPoly is
// {"c": [[[re,im], ...], ...]} with row j the z-power and column k the
// conj(z)-power; a RealTrigPoly maps integer frequencies to coefficients.
// All parsers throw InvalidInput (or InvalidBoundaryData) on malformed data.

Json to_json(Complex z);
Json to_json(const AnalyticPoly& p);
Json to_json(const HarmonicFn& f);
Json to_json(const MixedPoly& a);
Json to_json(const RationalFn& r);
Json to_json(const RealTrigPoly& p);
Json to_json(const BoundaryData& b);
Json to_json(const TraceReport& r);
Json to_json(const ClaimAudit& a);
Json to_json(const SquareVerdict& v);
Json to_json(const ProductVerdict& v);
Json to_json(const Zero& z);
Json to_json(const ZeroReport& r);
Json to_json(const ProductZeros& p);
// wall_time is wall-clock noise and is deliberately not serialized, so that
// equal configurations always produce byte-identical output.
Json to_json(const ExperimentSummary& s);

Complex complex_from_json(const Json& j);
AnalyticPoly analytic_poly_from_json(const Json& j);
HarmonicFn harmonic_fn_from_json(const Json& j);
MixedPoly mixed_poly_from_json(const Json& j);
RationalFn rational_fn_from_json(const Json& j);
RealTrigPoly real_trig_poly_from_json(const Json& j);
BoundaryData boundary_data_from_json(const Json& j);
TraceReport trace_report_from_json(const Json& j);
ClaimAudit claim_audit_from_json(const Json& j);
SquareVerdict square_verdict_from_json(const Json& j);
ProductVerdict product_verdict_from_json(const Json& j);
Zero zero_from_json(const Json& j);
ZeroReport zero_report_from_json(const Json& j);
ProductZeros product_zeros_from_json(const Json& j);
ExperimentSummary experiment_summary_from_json(const Json& j);

const char* orientation_name(Orientation o);
Orientation orientation_from_name(const std::string& name);

}  // namespace hpk
