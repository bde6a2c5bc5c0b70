#ifndef SCLGAP_ORBIFOLD_HPP_
#define SCLGAP_ORBIFOLD_HPP_

#include <optional>
#include <string>
#include <vector>

#include "sclgap/certificate.hpp"
#include "sclgap/chain.hpp"
#include "sclgap/group.hpp"
#include "sclgap/rational.hpp"

namespace sclgap {

  // A compact 2-orbifold: underlying surface (orientability, genus, number
  // of boundary components) plus cone points.
  struct OrbifoldSpec {
    bool             orientable          = true;
    int              genus               = 0;
    int              boundary_components = 0;
    std::vector<int> cone_orders;

    bool closed() const noexcept {
      return boundary_components == 0;
    }
    friend bool operator==(OrbifoldSpec const&, OrbifoldSpec const&) = default;
  };

  void validate(OrbifoldSpec const& s);
  Rational euler_char_orbifold(OrbifoldSpec const& s);
  std::string to_string(OrbifoldSpec const& s);

  // Free-product presentation of an orbifold group with boundary, together
  // with its peripheral structure. `surface_generators` are the x's,
  // `boundary_generators` the b's; the last boundary component is the long
  // word b, and the boundary chain is [b] - sum [b_i].
  struct BoundaryData {
    GroupSpec         group;
    bool              orientable = true;
    std::vector<int>  surface_generators;
    std::vector<int>  boundary_generators;
    std::vector<Word> boundary_words;  // b_1, ..., b_m, b
    Word              long_word;
    Chain             boundary_chain;
  };

  BoundaryData fundamental_group(OrbifoldSpec const& s);
  // As fundamental_group but without the Euler characteristic check; used
  // for vertex groups of splittings, which may be Euclidean.
  BoundaryData presentation_with_boundary(OrbifoldSpec const& s);

  enum class RelCase { PhiOfBZero, Composite, NonorientableExceptional, HalfIntegerMismatch };
  char const* to_string(RelCase c);

  struct RelGapCertificate {
    GapCertificate         certificate;  // chain is g - c (+ 0 * dB)
    std::optional<RelCase> case_tag;
    Chain                  peripheral_chain;  // the eliminated c
  };

  // Lower bound for scl relative to the boundary, or a vanishing reason.
  // Works on any BoundaryData whose long word is cyclically reduced and
  // not self-overlapping; the proof's side conditions are checked at runtime.
  RelGapCertificate relative_gap_certificate(BoundaryData const& data, Word const& g);
  RelGapCertificate relative_gap_certificate(OrbifoldSpec const& s, Word const& g);

}  // namespace sclgap

#endif  // SCLGAP_ORBIFOLD_HPP_
