#include "sclgap/serialize.hpp"

#include "sclgap/error.hpp"
#include "sclgap/parse.hpp"

namespace sclgap::json {

  Json rational(Rational const& r) {
    return Json{{"num", std::to_string(r.numerator())}, {"den", std::to_string(r.denominator())}};
  }

  Rational rational_from(Json const& j) {
    try {
      return Rational(std::stoll(j.at("num").get<std::string>()),
                      std::stoll(j.at("den").get<std::string>()));
    } catch (std::exception const& e) {
      throw ParseError(std::string("malformed rational record: ") + e.what());
    }
  }

  Json real(double value, double tol) {
    return Json{{"value", value}, {"tol", tol}};
  }

  Json certificate(GapCertificate const& c) {
    Json j;
    j["group"]  = to_string(c.group);
    j["chain"]  = to_string(c.group, c.chain);
    j["status"] = to_string(c.status);
    j["notes"]  = c.notes;
    if (c.status == GapStatus::LowerBound) {
      j["bound"]  = rational(c.bound);
      j["method"] = to_string(c.method);
    }
    if (c.value) {
      j["value"] = rational(*c.value);
    }
    if (c.witness) {
      Json terms = Json::array();
      for (auto const& t : c.witness->terms()) {
        terms.push_back({{"coeff", rational(t.coefficient)}, {"base", to_string(c.group, t.qm.base())}});
      }
      j["witness"]      = terms;
      j["defect_bound"] = rational(c.witness->defect_bound());
    }
    if (c.reason) {
      j["reason"] = to_string(*c.reason);
    }
    return j;
  }

  namespace {
    template <class E, std::size_t N>
    E enum_from(std::string const& s, E const (&values)[N]) {
      for (E v : values) {
        if (s == to_string(v)) {
          return v;
        }
      }
      throw ParseError("unknown enumeration value '" + s + "'");
    }
  }  // namespace

  GapCertificate certificate_from(Json const& j) {
    GapCertificate c;
    try {
      c.group  = parse_group(j.at("group").get<std::string>());
      c.chain  = parse_chain(j.at("chain").get<std::string>(), c.group);
      c.status = enum_from(j.at("status").get<std::string>(),
                           {GapStatus::LowerBound, GapStatus::Zero, GapStatus::Infinite});
      c.notes  = j.value("notes", "");
      if (j.contains("bound")) {
        c.bound = rational_from(j["bound"]);
      }
      if (j.contains("method")) {
        c.method = enum_from(j["method"].get<std::string>(),
                             {BoundMethod::Bavard, BoundMethod::Acylindrical});
      }
      if (j.contains("value")) {
        c.value = rational_from(j["value"]);
      }
      if (j.contains("witness")) {
        std::vector<QMTerm> terms;
        for (auto const& t : j["witness"]) {
          terms.push_back({rational_from(t.at("coeff")),
                           CountingQM(c.group, parse_word(t.at("base").get<std::string>(), c.group))});
        }
        c.witness = QMCombination(std::move(terms));
      }
      if (j.contains("reason")) {
        c.reason = enum_from(j["reason"].get<std::string>(),
                             {VanishingReason::EquivalentToZeroChain, VanishingReason::FiniteOrder,
                              VanishingReason::ConjugateToInverse, VanishingReason::Peripheral});
      }
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(std::string("malformed certificate record: ") + e.what());
    }
    return c;
  }

  Json relative_certificate(RelGapCertificate const& c) {
    Json j = certificate(c.certificate);
    if (c.case_tag) {
      j["case_tag"] = to_string(*c.case_tag);
    }
    j["peripheral_chain"] = to_string(c.certificate.group, c.peripheral_chain);
    return j;
  }

  Json closed_certificate(SplittingSpec const& s, ClosedGapCertificate const& c) {
    Json j = certificate(c.certificate);
    j["disposition"] = c.disposition;
    if (c.case_tag) {
      j["case_tag"]         = to_string(*c.case_tag);
      j["peripheral_chain"] = to_string(c.certificate.group, c.peripheral_chain);
    }
    auto const& cl = c.classification;
    Json        k;
    k["kind"]        = cl.elliptic ? "elliptic" : "hyperbolic";
    k["cyclic_form"] = to_string(s.ambient, to_ambient_word(s, cl.cyclic_form));
    if (cl.elliptic) {
      auto const& v   = s.vertices.at(cl.vertex);
      k["vertex"]     = v.tag;
      k["conjugated"] = to_string(v.group, cl.conjugated);
    } else {
      k["normal_form_length"] = cl.normal_form_length;
    }
    j["classification"] = k;
    j["splitting"]      = {{"kind", to_string(s.kind)}, {"provenance", to_string(s.provenance)}};
    return j;
  }

  Json splitting(SplittingSpec const& s, AcylindricityReport const& r) {
    Json j;
    j["orbifold"]             = to_string(s.orbifold);
    j["euler_characteristic"] = rational(euler_char_orbifold(s.orbifold));
    j["kind"]                 = to_string(s.kind);
    j["provenance"]           = to_string(s.provenance);
    j["ambient"]              = to_string(s.ambient);
    Json vertices             = Json::array();
    for (auto const& v : s.vertices) {
      vertices.push_back({{"tag", v.tag}, {"group", to_string(v.group)}});
    }
    j["vertices"] = vertices;
    GroupSpec const& g1 = s.vertices.front().group;
    GroupSpec const& g2 = s.vertices.back().group;
    j["edge_images"]    = {to_string(g1, s.edge_images.first), to_string(g2, s.edge_images.second)};
    if (s.kind == SplittingKind::HNN) {
      j["stable_letter"] = s.ambient.names[s.stable_generator];
    }
    j["acylindricity"] = {
        {"K", r.K}, {"N", r.N}, {"gap", rational(r.gap)}, {"checks", r.checks}};
    return j;
  }

  Json trace_report(hyperbolic::TraceGapReport const& r) {
    constexpr double tol = hyperbolic::default_trace_tol;
    Json             j;
    j["pqr"]                    = r.orders;
    j["samples"]                = r.samples;
    j["hyperbolic"]             = r.hyperbolic;
    j["violations"]             = r.violations;
    j["enumerated"]             = r.enumerated;
    j["trace_bound"]            = real(hyperbolic::trace_lower_bound(), 1e-12);
    j["delta"]                  = real(hyperbolic::delta_bound(), 1e-12);
    j["min_sampled_trace"]      = real(r.min_sampled_trace, tol);
    j["min_enumerated_trace"]   = real(r.min_enumerated_trace, tol);
    j["min_enumerated_word"]    = r.min_enumerated_word;
    j["min_observed_trace"]     = real(r.min_observed_trace, tol);
    j["min_translation_length"] = real(r.min_translation_length, tol);
    return j;
  }

  Json gap_constant() {
    auto const w   = hyperbolic::epsilon_window();
    auto const opt = hyperbolic::optimized_constant();
    Json       j;
    j["delta"]         = real(hyperbolic::delta_bound(), 1e-12);
    j["eps_max"]       = real(w.eps_max, 1e-12);
    j["delta_over_8"]  = real(w.delta_over_8, 1e-12);
    j["sinh_bound"]    = real(w.sinh_bound, 1e-12);
    j["binding"]       = w.binding;
    j["eps"]           = real(opt.eps, 1e-12);
    j["C"]             = real(opt.C, 1e-12);
    j["sinh_feasible"] = opt.sinh_feasible;
    return j;
  }

  Json defect_report(GroupSpec const& g, Word const& base, int L, oracle::DefectReport const& r) {
    Json j;
    j["group"]          = to_string(g);
    j["base"]           = to_string(g, base);
    j["L"]              = L;
    j["max_coboundary"] = r.max_coboundary;
    j["pairs"]          = r.pairs;
    j["worst_pair"]     = {to_string(g, r.worst_h1), to_string(g, r.worst_h2)};
    j["within_bound"]   = r.max_coboundary <= 3;
    return j;
  }

  Json document(std::string const& command, Json inputs, Json result) {
    return Json{{"schema_version", schema_version},
                {"command", command},
                {"inputs", std::move(inputs)},
                {"result", std::move(result)}};
  }

}  // namespace sclgap::json
