#ifndef SCLGAP_ORACLE_HPP_
#define SCLGAP_ORACLE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sclgap/group.hpp"
#include "sclgap/rational.hpp"

// Brute-force checks, independent of the periodic-count and rotation
// shortcuts used by the main modules.
namespace sclgap::oracle {

  enum class WordFilter { All, CyclicallyReduced, NonSelfOverlapping };

  char const* to_string(WordFilter f);

  struct EnumerationPlan {
    GroupSpec  group;
    int        max_length = 0;
    WordFilter filter     = WordFilter::All;
  };

  // Every letter of the alphabet, in the fixed letter order.
  std::vector<Letter> alphabet(GroupSpec const& g);

  // Every reduced word of length <= max_length passing the filter, once, by
  // length and then lexicographically. Stops early when `visit` returns false.
  void for_each_word(EnumerationPlan const& plan, std::function<bool(Word const&)> const& visit);
  std::vector<Word> enumerate_words(EnumerationPlan const& plan);

  struct DefectReport {
    std::int64_t max_coboundary = 0;
    std::int64_t pairs          = 0;
    Word         worst_h1, worst_h2;
    int          resumed_blocks = 0;  // blocks taken from the checkpoint
  };

  // max |phi(h1) + phi(h2) - phi(h1 h2)| over reduced h1, h2 of length <= L,
  // with phi the (unhomogenized) counting quasimorphism of `base`. Work is
  // split into blocks of h1; with a checkpoint path, finished blocks are
  // appended to that file and skipped on a later run with the same inputs.
  DefectReport brute_defect(GroupSpec const&   g,
                            Word const&        base,
                            int                L,
                            int                jobs       = 1,
                            std::string const& checkpoint = {});

  // phi(h^n)/n for n = 1..n_max.
  std::vector<Rational> homogenize_by_limit(GroupSpec const& g,
                                            Word const&      base,
                                            Word const&      h,
                                            int              n_max);

  // Shortest-then-least u with |u| <= L and u w1 u^-1 = w2.
  std::optional<Word> conjugator_search(GroupSpec const& g, Word const& w1, Word const& w2, int L);

  // { u w u^-1 : |u| <= L }.
  std::set<Word> conjugates_in_ball(GroupSpec const& g, Word const& w, int L);

}  // namespace sclgap::oracle

#endif  // SCLGAP_ORACLE_HPP_
