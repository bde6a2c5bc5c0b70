#ifndef SCLGAP_GROUP_HPP_
#define SCLGAP_GROUP_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sclgap {

  // A free product Z^{*m} * Z/o_1 * ... * Z/o_n. Generators are indexed
  // 0..m-1 for the infinite cyclic factors and m..m+n-1 for the finite ones.
  //
  // `names` are the print names (x1.., y1.. unless declared otherwise) and
  // `aliases` optional single-letter shorthands accepted by the word parser.
  // Neither takes part in equality.
  struct GroupSpec {
    int                      free_rank = 0;
    std::vector<int>         torsion_orders;
    std::vector<std::string> names;
    std::vector<std::string> aliases;

    GroupSpec() = default;
    GroupSpec(int free_rank, std::vector<int> torsion_orders);

    int generator_count() const noexcept {
      return free_rank + static_cast<int>(torsion_orders.size());
    }
    bool is_free(int gen) const noexcept {
      return gen < free_rank;
    }
    // Order of a torsion generator; 0 for free generators.
    int order(int gen) const noexcept {
      return is_free(gen) ? 0 : torsion_orders[gen - free_rank];
    }
    int torsion_index(int gen) const noexcept {
      return gen - free_rank;
    }

    friend bool operator==(GroupSpec const& a, GroupSpec const& b) {
      return a.free_rank == b.free_rank && a.torsion_orders == b.torsion_orders;
    }
  };

  // One symbol of the alphabet: x_i^{+-1} for free generators, y_j^e with
  // 0 < e < o_j for torsion generators.
  struct Letter {
    int gen = 0;
    int exp = 1;

    friend bool operator==(Letter, Letter) = default;
  };

  // Position of a letter within its generator in the fixed total order
  // x1 < x1^-1 < x2 < ... < y1 < y1^2 < ... < y2 < ...
  constexpr int order_key(Letter l) noexcept {
    return l.exp < 0 ? 1 - l.exp : l.exp;
  }

  constexpr std::strong_ordering operator<=>(Letter a, Letter b) noexcept {
    if (auto c = a.gen <=> b.gen; c != 0) {
      return c;
    }
    return order_key(a) <=> order_key(b);
  }

  // A reduced word. Only `reduce` and the operations built on it construct
  // non-trivial words; the invariant is not re-checked on access.
  struct Word {
    std::vector<Letter> letters;

    Word() = default;
    explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

    std::size_t size() const noexcept {
      return letters.size();
    }
    bool empty() const noexcept {
      return letters.empty();
    }
    Letter const& operator[](std::size_t i) const {
      return letters[i];
    }
    auto begin() const noexcept {
      return letters.begin();
    }
    auto end() const noexcept {
      return letters.end();
    }

    friend bool operator==(Word const&, Word const&) = default;
    // Shortlex would be more usual; plain lexicographic is what the
    // minimal-rotation arguments need, and rotations share a length anyway.
    friend std::strong_ordering operator<=>(Word const& a, Word const& b) {
      return std::lexicographical_compare_three_way(
          a.letters.begin(), a.letters.end(), b.letters.begin(), b.letters.end());
    }
  };

  struct CyclicWord {
    Word base;
    Word canonical_rotation;
  };

  struct CyclicReduction {
    CyclicWord core;
    Word       conjugator;  // w = conjugator * core * conjugator^-1
  };

  struct PrimitiveRoot {
    Word root;
    int  power = 1;
  };

  void validate(GroupSpec const& g);

  // Freely reduces a raw letter sequence. Free letters may carry any non-zero
  // exponent (expanded to unit letters); torsion exponents are taken mod o.
  Word reduce(GroupSpec const& g, std::span<Letter const> raw);

  Word multiply(GroupSpec const& g, Word const& a, Word const& b);
  Word invert(GroupSpec const& g, Word const& w);
  Word power(GroupSpec const& g, Word const& w, int n);
  // a * b * a^-1
  Word conjugate(GroupSpec const& g, Word const& a, Word const& b);

  Letter invert(GroupSpec const& g, Letter l);

  // Seams cancel free inverse pairs and merge same-index torsion letters.
  CyclicReduction cyclic_reduce(GroupSpec const& g, Word const& w);

  // Lexicographically least rotation (two-pointer minimum expression).
  Word least_rotation(Word const& w);
  bool is_rotation(Word const& a, Word const& b);

  bool is_conjugate(GroupSpec const& g, Word const& a, Word const& b);
  bool is_self_overlapping(Word const& w);
  PrimitiveRoot primitive_root(GroupSpec const& g, Word const& w);
  Word minimal_cyclic_conjugate(GroupSpec const& g, Word const& w);

  bool has_finite_order(GroupSpec const& g, Word const& w);
  bool is_conjugate_to_inverse(GroupSpec const& g, Word const& w);
  bool is_in_free_factor(GroupSpec const& g, Word const& w);
  // k with w conjugate to base^k; base must have infinite order.
  std::optional<int> power_conjugate(GroupSpec const& g, Word const& w, Word const& base);

  // Exponent sum of each free generator.
  std::vector<std::int64_t> free_exponent_sums(GroupSpec const& g, Word const& w);

  std::string to_string(GroupSpec const& g, Word const& w);
  std::string to_string(GroupSpec const& g);

}  // namespace sclgap

#endif  // SCLGAP_GROUP_HPP_
