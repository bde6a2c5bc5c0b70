#ifndef SCLGAP_CHAIN_HPP_
#define SCLGAP_CHAIN_HPP_

#include <string>
#include <vector>

#include "sclgap/group.hpp"
#include "sclgap/rational.hpp"

namespace sclgap {

  struct ChainTerm {
    Rational coefficient;
    Word     element;

    friend bool operator==(ChainTerm const&, ChainTerm const&) = default;
  };

  // A formal rational combination of group elements. Zero coefficients are
  // never stored; terms are otherwise kept as given.
  struct Chain {
    std::vector<ChainTerm> terms;

    Chain() = default;
    explicit Chain(std::vector<ChainTerm> ts);

    bool empty() const noexcept {
      return terms.empty();
    }
    std::size_t size() const noexcept {
      return terms.size();
    }
    bool is_integral() const;

    Chain& add(Rational c, Word w);
    Chain& add(Chain const& other, Rational scale = 1);

    friend bool operator==(Chain const&, Chain const&) = default;
  };

  // Image in H_1(G; Q), which only sees the free factors.
  struct HomologyClass {
    std::vector<Rational> free_part;

    bool is_zero() const;
  };

  HomologyClass homology_class(GroupSpec const& g, Chain const& c);
  bool is_null_homologous(GroupSpec const& g, Chain const& c);

  // "3[x1 y1] - 2[y1 x1 y1^2] + 1/2[x2]"; "0" for the empty chain.
  std::string to_string(GroupSpec const& g, Chain const& c);

}  // namespace sclgap

#endif  // SCLGAP_CHAIN_HPP_
