#ifndef SCLGAP_SERIALIZE_HPP_
#define SCLGAP_SERIALIZE_HPP_

#include <string>

#include <json.hpp>

#include "sclgap/certificate.hpp"
#include "sclgap/hyperbolic.hpp"
#include "sclgap/oracle.hpp"
#include "sclgap/orbifold.hpp"
#include "sclgap/splitting.hpp"

// JSON records. Rationals are {"num": "<int>", "den": "<int>"}, reals are
// {"value": <double>, "tol": <double>}; objects keep keys sorted, so dumps
// are deterministic.
namespace sclgap::json {

  using Json = nlohmann::json;

  inline constexpr char const* schema_version = "1";

  Json     rational(Rational const& r);
  Rational rational_from(Json const& j);
  Json     real(double value, double tol);

  Json certificate(GapCertificate const& c);
  // Rebuilds a certificate from its record; the witness is re-derived from
  // its base words, so verify() on the result re-checks the arithmetic.
  GapCertificate certificate_from(Json const& j);

  Json relative_certificate(RelGapCertificate const& c);
  Json closed_certificate(SplittingSpec const& s, ClosedGapCertificate const& c);
  Json splitting(SplittingSpec const& s, AcylindricityReport const& r);

  Json trace_report(hyperbolic::TraceGapReport const& r);
  Json gap_constant();

  Json defect_report(GroupSpec const& g, Word const& base, int L, oracle::DefectReport const& r);

  // {"schema_version", "command", "inputs", "result"}
  Json document(std::string const& command, Json inputs, Json result);

}  // namespace sclgap::json

#endif  // SCLGAP_SERIALIZE_HPP_
