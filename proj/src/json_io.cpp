#include "hpk/json_io.hpp"

#include <map>
#include <string>

#include "hpk/errors.hpp"

namespace hpk {

namespace {

double number_from(const Json& j, const char* what) {
    if (!j.is_number()) {
        throw InvalidInput(std::string(what) + " must be a number");
    }
    return j.get<double>();
}

const Json& member(const Json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key)) {
        throw InvalidInput(std::string(what) + " needs field \"" + key + "\"");
    }
    return j.at(key);
}

long integer_from(const Json& j, const char* what) {
    if (!j.is_number_integer()) {
        throw InvalidInput(std::string(what) + " must be an integer");
    }
    return j.get<long>();
}

bool bool_from(const Json& j, const char* what) {
    if (!j.is_boolean()) {
        throw InvalidInput(std::string(what) + " must be a boolean");
    }
    return j.get<bool>();
}

}  // namespace

Json to_json(Complex z) {
    return Json::array({z.real(), z.imag()});
}

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw InvalidInput("complex number must be [re, im]");
    }
    return Complex(number_from(j[0], "complex part"),
                   number_from(j[1], "complex part"));
}

Json to_json(const AnalyticPoly& p) {
    Json coeffs = Json::array();
    for (const Complex& c : p.coeffs()) coeffs.push_back(to_json(c));
    return Json{{"coeffs", coeffs}};
}

AnalyticPoly analytic_poly_from_json(const Json& j) {
    // Both {"coeffs": [...]} and a bare coefficient array are accepted.
    const Json& arr = j.is_array() ? j : member(j, "coeffs", "polynomial");
    if (!arr.is_array()) {
        throw InvalidInput("polynomial coefficients must be an array");
    }
    std::vector<Complex> coeffs;
    coeffs.reserve(arr.size());
    for (const Json& c : arr) coeffs.push_back(complex_from_json(c));
    return AnalyticPoly(std::move(coeffs));
}

Json to_json(const HarmonicFn& f) {
    return Json{{"h", to_json(f.h)}, {"g", to_json(f.g)}};
}

HarmonicFn harmonic_fn_from_json(const Json& j) {
    return HarmonicFn{
        analytic_poly_from_json(member(j, "h", "harmonic function")),
        analytic_poly_from_json(member(j, "g", "harmonic function"))};
}

Json to_json(const MixedPoly& a) {
    Json rows = Json::array();
    for (const auto& row : a.rows()) {
        Json r = Json::array();
        for (const Complex& v : row) r.push_back(to_json(v));
        rows.push_back(r);
    }
    return Json{{"c", rows}};
}

MixedPoly mixed_poly_from_json(const Json& j) {
    const Json& rows = member(j, "c", "mixed polynomial");
    if (!rows.is_array()) {
        throw InvalidInput("mixed coefficients must be an array of rows");
    }
    std::vector<std::vector<Complex>> c;
    for (const Json& row : rows) {
        if (!row.is_array()) {
            throw InvalidInput("mixed coefficient rows must be arrays");
        }
        std::vector<Complex> r;
        r.reserve(row.size());
        for (const Json& v : row) r.push_back(complex_from_json(v));
        c.push_back(std::move(r));
    }
    return MixedPoly(std::move(c));
}

Json to_json(const RationalFn& r) {
    return Json{{"num", to_json(r.num)}, {"den", to_json(r.den)}};
}

RationalFn rational_fn_from_json(const Json& j) {
    RationalFn r{analytic_poly_from_json(member(j, "num", "rational function")),
                 analytic_poly_from_json(member(j, "den", "rational function"))};
    if (r.den.is_zero()) {
        throw InvalidInput("rational function needs a nonzero denominator");
    }
    return r;
}

Json to_json(const RealTrigPoly& p) {
    Json j = Json::object();
    for (int k = -p.max_degree(); k <= p.max_degree(); ++k) {
        const Complex c = p.coeff(k);
        if (c != Complex{}) j[std::to_string(k)] = to_json(c);
    }
    return j;
}

RealTrigPoly real_trig_poly_from_json(const Json& j) {
    if (!j.is_object()) {
        throw InvalidInput("trig polynomial must map frequencies to [re, im]");
    }
    std::map<int, Complex> c;
    for (const auto& [key, value] : j.items()) {
        int k = 0;
        try {
            std::size_t used = 0;
            k = std::stoi(key, &used);
            if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw InvalidInput("trig frequency keys must be integers, got \"" +
                               key + "\"");
        }
        c[k] = complex_from_json(value);
    }
    return RealTrigPoly::from_coeffs(c);
}

Json to_json(const BoundaryData& b) {
    return Json{{"phi1", to_json(b.phi1)}, {"phi2", to_json(b.phi2)}};
}

BoundaryData boundary_data_from_json(const Json& j) {
    return BoundaryData{
        real_trig_poly_from_json(member(j, "phi1", "boundary data")),
        real_trig_poly_from_json(member(j, "phi2", "boundary data"))};
}

Json to_json(const TraceReport& r) {
    return Json{{"max_deviation", r.max_deviation},
                {"argmax_theta", r.argmax_theta},
                {"samples", r.samples}};
}

TraceReport trace_report_from_json(const Json& j) {
    return TraceReport{
        number_from(member(j, "max_deviation", "trace report"), "max_deviation"),
        number_from(member(j, "argmax_theta", "trace report"), "argmax_theta"),
        static_cast<int>(
            integer_from(member(j, "samples", "trace report"), "samples"))};
}

Json to_json(const ClaimAudit& a) {
    return Json{{"cofactor_report", to_json(a.cofactor_report)},
                {"product_report", to_json(a.product_report)}};
}

ClaimAudit claim_audit_from_json(const Json& j) {
    return ClaimAudit{
        trace_report_from_json(member(j, "cofactor_report", "claim audit")),
        trace_report_from_json(member(j, "product_report", "claim audit"))};
}

Json to_json(const SquareVerdict& v) {
    return Json{{"harmonic", v.harmonic},
                {"mixed_residual", v.mixed_residual},
                {"degree_criterion", v.degree_criterion},
                {"witness", to_json(v.witness)}};
}

SquareVerdict square_verdict_from_json(const Json& j) {
    return SquareVerdict{
        bool_from(member(j, "harmonic", "square verdict"), "harmonic"),
        number_from(member(j, "mixed_residual", "square verdict"),
                    "mixed_residual"),
        mixed_poly_from_json(member(j, "witness", "square verdict")),
        bool_from(member(j, "degree_criterion", "square verdict"),
                  "degree_criterion")};
}

Json to_json(const ProductVerdict& v) {
    return Json{{"harmonic", v.harmonic},
                {"mixed_residual", v.mixed_residual},
                {"k_constant", v.k_constant},
                {"k", to_json(v.k_poly)}};
}

ProductVerdict product_verdict_from_json(const Json& j) {
    return ProductVerdict{
        bool_from(member(j, "harmonic", "product verdict"), "harmonic"),
        number_from(member(j, "mixed_residual", "product verdict"),
                    "mixed_residual"),
        mixed_poly_from_json(member(j, "k", "product verdict")),
        bool_from(member(j, "k_constant", "product verdict"), "k_constant")};
}

const char* orientation_name(Orientation o) {
    switch (o) {
        case Orientation::SensePreserving:
            return "preserving";
        case Orientation::SenseReversing:
            return "reversing";
        case Orientation::Singular:
            break;
    }
    return "singular";
}

Orientation orientation_from_name(const std::string& name) {
    if (name == "preserving") return Orientation::SensePreserving;
    if (name == "reversing") return Orientation::SenseReversing;
    if (name == "singular") return Orientation::Singular;
    throw InvalidInput("unknown orientation \"" + name + "\"");
}

Json to_json(const Zero& z) {
    return Json{{"z", to_json(z.location)},
                {"index", z.index},
                {"orientation", orientation_name(z.orientation)},
                {"residual", z.residual}};
}

Zero zero_from_json(const Json& j) {
    Zero z;
    z.location = complex_from_json(member(j, "z", "zero"));
    z.index = integer_from(member(j, "index", "zero"), "index");
    const Json& o = member(j, "orientation", "zero");
    if (!o.is_string()) throw InvalidInput("orientation must be a string");
    z.orientation = orientation_from_name(o.get<std::string>());
    z.residual = number_from(member(j, "residual", "zero"), "residual");
    return z;
}

Json to_json(const ZeroReport& r) {
    Json zeros = Json::array();
    for (const Zero& z : r.zeros) zeros.push_back(to_json(z));
    return Json{{"zeros", zeros},
                {"distinct", r.distinct_count},
                {"with_multiplicity", r.count_with_multiplicity},
                {"index_sum", r.index_sum},
                {"bound", r.bound},
                {"within_bound", r.within_bound},
                {"search_radius", r.search_radius}};
}

ZeroReport zero_report_from_json(const Json& j) {
    ZeroReport r;
    const Json& zeros = member(j, "zeros", "zero report");
    if (!zeros.is_array()) throw InvalidInput("\"zeros\" must be an array");
    for (const Json& z : zeros) r.zeros.push_back(zero_from_json(z));
    r.distinct_count = static_cast<int>(
        integer_from(member(j, "distinct", "zero report"), "distinct"));
    r.count_with_multiplicity = integer_from(
        member(j, "with_multiplicity", "zero report"), "with_multiplicity");
    r.index_sum =
        integer_from(member(j, "index_sum", "zero report"), "index_sum");
    r.bound = integer_from(member(j, "bound", "zero report"), "bound");
    r.within_bound =
        bool_from(member(j, "within_bound", "zero report"), "within_bound");
    r.search_radius = number_from(member(j, "search_radius", "zero report"),
                                  "search_radius");
    return r;
}

Json to_json(const ProductZeros& p) {
    return Json{{"f_report", to_json(p.f_report)},
                {"F_report", to_json(p.F_report)},
                {"product_report", to_json(p.product_report)},
                {"union_ok", p.union_ok},
                {"multiplicities_add", p.multiplicities_add},
                {"max_match_distance", p.max_match_distance}};
}

ProductZeros product_zeros_from_json(const Json& j) {
    ProductZeros p;
    p.f_report = zero_report_from_json(member(j, "f_report", "product zeros"));
    p.F_report = zero_report_from_json(member(j, "F_report", "product zeros"));
    p.product_report =
        zero_report_from_json(member(j, "product_report", "product zeros"));
    p.union_ok = bool_from(member(j, "union_ok", "product zeros"), "union_ok");
    p.multiplicities_add = bool_from(
        member(j, "multiplicities_add", "product zeros"), "multiplicities_add");
    p.max_match_distance = number_from(
        member(j, "max_match_distance", "product zeros"), "max_match_distance");
    return p;
}

Json to_json(const ExperimentSummary& s) {
    return Json{{"trials_run", s.trials_run},
                {"bound_violations", s.bound_violations},
                {"max_zero_count", s.max_zero_count},
                {"mean_zero_count", s.mean_zero_count},
                {"degenerate_skips", s.degenerate_skips}};
}

ExperimentSummary experiment_summary_from_json(const Json& j) {
    ExperimentSummary s;
    s.trials_run = static_cast<int>(
        integer_from(member(j, "trials_run", "summary"), "trials_run"));
    s.bound_violations = static_cast<int>(integer_from(
        member(j, "bound_violations", "summary"), "bound_violations"));
    s.max_zero_count =
        integer_from(member(j, "max_zero_count", "summary"), "max_zero_count");
    s.mean_zero_count = number_from(member(j, "mean_zero_count", "summary"),
                                    "mean_zero_count");
    s.degenerate_skips = static_cast<int>(integer_from(
        member(j, "degenerate_skips", "summary"), "degenerate_skips"));
    return s;
}

}  // namespace hpk
