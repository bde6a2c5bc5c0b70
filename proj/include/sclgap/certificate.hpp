#ifndef SCLGAP_CERTIFICATE_HPP_
#define SCLGAP_CERTIFICATE_HPP_

#include <optional>
#include <string>

#include "sclgap/chain.hpp"
#include "sclgap/group.hpp"
#include "sclgap/quasimorphism.hpp"
#include "sclgap/rational.hpp"

namespace sclgap {

  enum class GapStatus { LowerBound, Zero, Infinite };

  enum class VanishingReason {
    EquivalentToZeroChain,
    FiniteOrder,
    ConjugateToInverse,
    Peripheral,
  };

  // How a LowerBound was obtained. Bavard certificates carry a witness
  // quasimorphism and satisfy bound = |value| / (2 * defect_bound(witness));
  // acylindrical ones rest on the tree-action gap and carry no witness.
  enum class BoundMethod { Bavard, Acylindrical };

  char const* to_string(GapStatus s);
  char const* to_string(VanishingReason r);
  char const* to_string(BoundMethod m);

  struct GapCertificate {
    GroupSpec                      group;  // where chain and witness live
    Chain                          chain;
    GapStatus                      status = GapStatus::Zero;
    Rational                       bound  = 0;
    BoundMethod                    method = BoundMethod::Bavard;
    std::optional<QMCombination>   witness;
    std::optional<Rational>        value;
    std::optional<VanishingReason> reason;
    std::string                    notes;

    static GapCertificate zero(GroupSpec g, Chain c, VanishingReason why, std::string notes = {});
    static GapCertificate infinite(GroupSpec g, Chain c, std::string notes = {});
    // Bavard certificate; computes value and bound from the witness.
    static GapCertificate bavard(GroupSpec g, Chain c, QMCombination witness, std::string notes = {});
  };

  // Recomputes a Bavard certificate's value and bound from its witness.
  // Non-Bavard certificates verify trivially.
  bool verify(GapCertificate const& cert);

  // Representative of c in B_1^H(G) (x) Q: cyclically reduced, primitive,
  // infinite-order elements in canonical rotation, conjugacy classes and
  // inverse classes merged. Sorted by decreasing length, then lexicographically.
  Chain normalize_chain(GroupSpec const& g, Chain const& c);

  GapCertificate chain_gap_certificate(GroupSpec const& g, Chain const& c);
  GapCertificate element_gap(GroupSpec const& g, Word const& w);

  inline Chain single_term_chain(Word w, Rational c = 1) {
    Chain out;
    out.add(c, std::move(w));
    return out;
  }

}  // namespace sclgap

#endif  // SCLGAP_CERTIFICATE_HPP_
