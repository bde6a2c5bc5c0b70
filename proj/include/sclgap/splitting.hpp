#ifndef SCLGAP_SPLITTING_HPP_
#define SCLGAP_SPLITTING_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sclgap/certificate.hpp"
#include "sclgap/group.hpp"
#include "sclgap/orbifold.hpp"
#include "sclgap/rational.hpp"

namespace sclgap {

  enum class SplittingKind { HNN, Amalgam };

  // Which closed case produced the splitting.
  enum class SplittingCase {
    OrientableHNN,         // genus >= 1, stable letter x1
    SphereAmalgam,         // genus 0, >= 4 cone points
    NonorientableAmalgam,  // <x1> amalgamated along x1^-2
  };

  char const* to_string(SplittingKind k);
  char const* to_string(SplittingCase c);

  struct VertexGroup {
    std::string      tag;  // "H", "left" or "right"
    GroupSpec        group;
    std::vector<int> local_to_ambient;
    std::vector<int> ambient_to_local;  // -1 where the generator is elsewhere
    // The vertex as an orbifold with boundary; absent for the infinite
    // cyclic vertex <x1> of the nonorientable amalgam.
    std::optional<BoundaryData> boundary;
  };

  // A splitting of a closed orbifold group over Z. For HNN both edge images
  // lie in vertices[0] and t * first^k * t^-1 = second^k with t the stable
  // generator; for amalgams edge_images.first lies in vertices[0] and
  // edge_images.second in vertices[1], and the two are identified.
  struct SplittingSpec {
    SplittingKind            kind;
    SplittingCase            provenance;
    OrbifoldSpec             orbifold;
    GroupSpec                ambient;  // x's and y's without the surface relation
    std::vector<VertexGroup> vertices;
    std::pair<Word, Word>    edge_images;
    int                      stable_generator = -1;  // ambient index, HNN only
  };

  SplittingSpec closed_splitting(OrbifoldSpec const& s);

  struct AcylindricityReport {
    int                      K   = 0;
    int                      N   = 0;
    Rational                 gap = 0;
    std::vector<std::string> checks;
  };

  // N = ceil((K + 3) / 2) and gap = 1 / (12 N).
  int      cfl_n(int K);
  Rational cfl_gap(int K);

  AcylindricityReport acylindricity_report(SplittingSpec const& s);

  // One piece of a word in a graph of groups: a vertex-group syllable, or a
  // stable letter t^{+-1} when vertex < 0.
  struct Piece {
    int  vertex = 0;
    Word word;
    int  stable_exp = 0;

    friend bool operator==(Piece const&, Piece const&) = default;
  };

  using SplitWord = std::vector<Piece>;

  SplitWord to_split_word(SplittingSpec const& s, Word const& ambient_word);
  Word      to_ambient_word(SplittingSpec const& s, SplitWord const& w);
  // Amalgam alternating form or Britton-reduced form.
  SplitWord reduce(SplittingSpec const& s, SplitWord w);
  SplitWord multiply(SplittingSpec const& s, SplitWord const& a, SplitWord const& b);
  SplitWord invert(SplittingSpec const& s, SplitWord const& w);
  bool      is_trivial(SplittingSpec const& s, SplitWord const& w);
  // Reduced form of a conjugate that admits no cyclic reduction.
  SplitWord cyclically_reduce(SplittingSpec const& s, SplitWord w);

  // Canonical normal form c * r_1 ... r_L: right-coset representatives r_i
  // of the edge subgroup (minimal length over e^k r, |k| <= |r|, ties
  // lexicographic) and an edge power c = z^edge_power on the left, in the
  // vertex of the first piece. For HNN words the representatives alternate
  // vertex pieces (possibly empty) with stable letters, starting and ending
  // with a vertex piece, and the leading edge power is absorbed into the
  // first piece, so edge_power is 0.
  struct NormalForm {
    int       edge_power = 0;
    SplitWord representatives;
  };
  NormalForm normal_form(SplittingSpec const& s, Word const& ambient_word);

  struct Classification {
    bool      elliptic = false;
    int       vertex   = -1;  // elliptic: vertex containing `conjugated`
    Word      conjugated;     // elliptic: a conjugate of g in that vertex group
    int       normal_form_length = 0;  // hyperbolic: syllables / stable letters
    SplitWord cyclic_form;
  };

  Classification classify_element(SplittingSpec const& s, Word const& ambient_word);

  // Searches conjugators (cyclic permutations composed with edge powers z^j,
  // |j| <= ball) taking g to g^-1. Complete for hyperbolic g up to the ball.
  std::optional<SplitWord> find_inverse_conjugator(SplittingSpec const& s,
                                                   Word const&          ambient_word,
                                                   int                  ball);

  struct ClosedGapCertificate {
    GapCertificate         certificate;
    Classification         classification;
    std::string            disposition;
    std::optional<RelCase> case_tag;
    Chain                  peripheral_chain;
  };

  ClosedGapCertificate closed_gap_certificate(OrbifoldSpec const& s,
                                              Word const&         ambient_word,
                                              int                 conjugacy_ball = 8);
  ClosedGapCertificate closed_gap_certificate(SplittingSpec const& s,
                                              Word const&          ambient_word,
                                              int                  conjugacy_ball = 8);

}  // namespace sclgap

#endif  // SCLGAP_SPLITTING_HPP_
