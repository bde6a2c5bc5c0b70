#ifndef SCLGAP_QUASIMORPHISM_HPP_
#define SCLGAP_QUASIMORPHISM_HPP_

#include <cstdint>
#include <vector>

#include "sclgap/chain.hpp"
#include "sclgap/group.hpp"
#include "sclgap/rational.hpp"

namespace sclgap {

  // Number of start positions at which `pattern` occurs letter-for-letter in
  // `text`. Torsion letters only match with equal exponents.
  std::int64_t count_occurrences(Word const& pattern, Word const& text);

  // Occurrences of `pattern` starting at the |cyclic| positions of the
  // periodic word cyclic^infinity.
  std::int64_t count_cyclic_occurrences(Word const& pattern, Word const& cyclic);

  // phi_g(h) = C_g(h) - C_{g^-1}(h); defined for any non-empty reduced g.
  std::int64_t phi(GroupSpec const& g, Word const& base, Word const& h);

  // The homogenized counting quasimorphism of a base word that is cyclically
  // reduced, of length at least two and not self-overlapping. Those are the
  // hypotheses under which its defect is at most 6.
  class CountingQM {
   public:
    CountingQM(GroupSpec const& g, Word base);

    Word const& base() const noexcept {
      return _base;
    }
    Word const& inverse_base() const noexcept {
      return _inverse;
    }

    // Exact homogenization: periodic occurrence count on the cyclic core.
    std::int64_t operator()(GroupSpec const& g, Word const& h) const;

    friend bool operator==(CountingQM const& a, CountingQM const& b) {
      return a._base == b._base;
    }

   private:
    Word _base;
    Word _inverse;
  };

  std::int64_t phi_bar(GroupSpec const& g, CountingQM const& qm, Word const& h);

  // Certifies whether `base` is an admissible CountingQM base; returns a
  // reason string when not, empty otherwise.
  std::string counting_qm_obstruction(GroupSpec const& g, Word const& base);

  struct QMTerm {
    Rational   coefficient;
    CountingQM qm;
  };

  // A rational combination of homogenized counting quasimorphisms, with the
  // additive defect bound sum |c_i| * 6.
  class QMCombination {
   public:
    QMCombination() = default;
    explicit QMCombination(std::vector<QMTerm> terms);

    static QMCombination single(CountingQM qm, Rational coefficient = 1) {
      return QMCombination({QMTerm{coefficient, std::move(qm)}});
    }

    std::vector<QMTerm> const& terms() const noexcept {
      return _terms;
    }
    bool empty() const noexcept {
      return _terms.empty();
    }

    Rational defect_bound() const;
    Rational operator()(GroupSpec const& g, Word const& h) const;

   private:
    std::vector<QMTerm> _terms;
  };

  inline constexpr std::int64_t homogenized_defect_per_unit = 6;

  Rational defect_bound(QMCombination const& q);
  Rational evaluate_on_chain(GroupSpec const& g, QMCombination const& q, Chain const& c);

}  // namespace sclgap

#endif  // SCLGAP_QUASIMORPHISM_HPP_
