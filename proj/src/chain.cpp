#include "sclgap/chain.hpp"

#include <algorithm>

namespace sclgap {

  Chain::Chain(std::vector<ChainTerm> ts) {
    for (auto& t : ts) {
      add(t.coefficient, std::move(t.element));
    }
  }

  bool Chain::is_integral() const {
    return std::all_of(terms.begin(), terms.end(), [](ChainTerm const& t) {
      return sclgap::is_integral(t.coefficient);
    });
  }

  Chain& Chain::add(Rational c, Word w) {
    if (c != 0) {
      terms.push_back({c, std::move(w)});
    }
    return *this;
  }

  Chain& Chain::add(Chain const& other, Rational scale) {
    for (auto const& t : other.terms) {
      add(scale * t.coefficient, t.element);
    }
    return *this;
  }

  bool HomologyClass::is_zero() const {
    return std::all_of(
        free_part.begin(), free_part.end(), [](Rational const& r) { return r == 0; });
  }

  HomologyClass homology_class(GroupSpec const& g, Chain const& c) {
    HomologyClass h{std::vector<Rational>(g.free_rank, Rational(0))};
    for (auto const& t : c.terms) {
      auto const sums = free_exponent_sums(g, t.element);
      for (int i = 0; i < g.free_rank; ++i) {
        h.free_part[i] += t.coefficient * Rational(sums[i]);
      }
    }
    return h;
  }

  bool is_null_homologous(GroupSpec const& g, Chain const& c) {
    return homology_class(g, c).is_zero();
  }

  std::string to_string(GroupSpec const& g, Chain const& c) {
    if (c.empty()) {
      return "0";
    }
    std::string out;
    for (auto const& t : c.terms) {
      Rational coeff = t.coefficient;
      if (out.empty()) {
        if (coeff < 0) {
          out += "-";
          coeff = -coeff;
        }
      } else {
        out += coeff < 0 ? " - " : " + ";
        coeff = abs(coeff);
      }
      out += to_string(coeff) + "[" + to_string(g, t.element) + "]";
    }
    return out;
  }

}  // namespace sclgap
