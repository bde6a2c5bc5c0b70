#include "sclgap/certificate.hpp"

#include <algorithm>
#include <map>

#include "sclgap/error.hpp"

namespace sclgap {

  char const* to_string(GapStatus s) {
    switch (s) {
      case GapStatus::LowerBound:
        return "LowerBound";
      case GapStatus::Zero:
        return "Zero";
      case GapStatus::Infinite:
        return "Infinite";
    }
    return "?";
  }

  char const* to_string(VanishingReason r) {
    switch (r) {
      case VanishingReason::EquivalentToZeroChain:
        return "EquivalentToZeroChain";
      case VanishingReason::FiniteOrder:
        return "FiniteOrder";
      case VanishingReason::ConjugateToInverse:
        return "ConjugateToInverse";
      case VanishingReason::Peripheral:
        return "Peripheral";
    }
    return "?";
  }

  char const* to_string(BoundMethod m) {
    return m == BoundMethod::Bavard ? "bavard" : "acylindrical";
  }

  GapCertificate GapCertificate::zero(GroupSpec g, Chain c, VanishingReason why, std::string notes) {
    GapCertificate out;
    out.group  = std::move(g);
    out.chain  = std::move(c);
    out.status = GapStatus::Zero;
    out.reason = why;
    out.notes  = std::move(notes);
    return out;
  }

  GapCertificate GapCertificate::infinite(GroupSpec g, Chain c, std::string notes) {
    GapCertificate out;
    out.group  = std::move(g);
    out.chain  = std::move(c);
    out.status = GapStatus::Infinite;
    out.notes  = std::move(notes);
    return out;
  }

  GapCertificate GapCertificate::bavard(GroupSpec g, Chain c, QMCombination witness, std::string notes) {
    GapCertificate out;
    out.value  = evaluate_on_chain(g, witness, c);
    out.bound  = abs(*out.value) / (2 * witness.defect_bound());
    out.group  = std::move(g);
    out.chain  = std::move(c);
    out.status = GapStatus::LowerBound;
    out.method = BoundMethod::Bavard;
    out.witness = std::move(witness);
    out.notes  = std::move(notes);
    check_internal(out.bound > 0, "Bavard certificate with non-positive bound");
    return out;
  }

  bool verify(GapCertificate const& cert) {
    if (cert.status != GapStatus::LowerBound || cert.method != BoundMethod::Bavard) {
      return true;
    }
    if (!cert.witness || !cert.value) {
      return false;
    }
    Rational const v = evaluate_on_chain(cert.group, *cert.witness, cert.chain);
    return v == *cert.value && cert.bound == abs(v) / (2 * cert.witness->defect_bound())
           && cert.bound > 0;
  }

  Chain normalize_chain(GroupSpec const& g, Chain const& c) {
    std::map<Word, Rational> merged;
    for (auto const& t : c.terms) {
      if (has_finite_order(g, t.element)) {
        continue;  // g^o = 1, so o*g ~ 0
      }
      auto const root   = primitive_root(g, t.element);
      Word const pos    = least_rotation(root.root);
      Word const neg    = least_rotation(invert(g, root.root));
      if (pos == neg) {
        continue;  // g ~ g^-1 ~ -g, so 2g ~ 0
      }
      Rational const coeff = t.coefficient * root.power;
      // The smaller of the two canonical words represents the pair {h, h^-1}.
      if (pos < neg) {
        merged[pos] += coeff;
      } else {
        merged[neg] -= coeff;
      }
    }
    std::vector<ChainTerm> terms;
    for (auto& [w, coeff] : merged) {
      if (coeff != 0) {
        terms.push_back({coeff, w});
      }
    }
    std::stable_sort(terms.begin(), terms.end(), [](ChainTerm const& a, ChainTerm const& b) {
      return a.element.size() > b.element.size();
    });
    return Chain(std::move(terms));
  }

  GapCertificate chain_gap_certificate(GroupSpec const& g, Chain const& c) {
    Chain const normal = normalize_chain(g, c);
    if (normal.empty()) {
      return GapCertificate::zero(g, c, VanishingReason::EquivalentToZeroChain,
                                  "chain vanishes in B1H(G) tensor Q");
    }
    if (!is_null_homologous(g, c)) {
      return GapCertificate::infinite(g, c, "chain is not null-homologous");
    }
    // Terms are sorted by decreasing length and then lexicographically, so
    // the first term is the longest with ties broken by canonical rotation.
    auto const& lead = normal.terms.front();
    check_internal(lead.element.size() >= 2,
                   "null-homologous normalized chain with only length-one terms");
    Word const base = minimal_cyclic_conjugate(g, lead.element);
    CountingQM const qm(g, base);

    check_internal(qm(g, lead.element) == 1, "phi_bar(g1) != 1 on the leading term");
    for (std::size_t i = 1; i < normal.size(); ++i) {
      check_internal(qm(g, normal.terms[i].element) == 0, "phi_bar(g_i) != 0 on a shorter term");
    }

    auto cert = GapCertificate::bavard(g, c, QMCombination::single(qm),
                                       "witness is the homogenized counting quasimorphism of the "
                                       "longest normalized term");
    check_internal(*cert.value == lead.coefficient, "phi_bar(c) differs from the leading coefficient");
    if (c.is_integral()) {
      check_internal(cert.bound >= Rational(1, 12), "integral chain certified below 1/12");
    }
    return cert;
  }

  GapCertificate element_gap(GroupSpec const& g, Word const& w) {
    Chain const c = single_term_chain(w);
    if (has_finite_order(g, w)) {
      return GapCertificate::zero(g, c, VanishingReason::FiniteOrder, "element has finite order");
    }
    if (is_in_free_factor(g, w)) {
      return GapCertificate::infinite(g, c, "conjugate into an infinite cyclic free factor");
    }
    if (is_conjugate_to_inverse(g, w)) {
      return GapCertificate::zero(g, c, VanishingReason::ConjugateToInverse,
                                  "cyclic reduction of the inverse is a rotation");
    }
    return chain_gap_certificate(g, c);
  }

}  // namespace sclgap
