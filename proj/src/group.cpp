#include "sclgap/group.hpp"

#include <algorithm>
#include <deque>

#include "sclgap/error.hpp"

namespace sclgap {

  namespace {
    constexpr char const* free_shorthand[]    = {"x", "y", "z"};
    constexpr char const* torsion_shorthand[] = {"a", "b", "c", "d", "e", "f"};

    int mod(int a, int m) {
      int r = a % m;
      return r < 0 ? r + m : r;
    }

    bool cancels(GroupSpec const& g, Letter a, Letter b) {
      return g.is_free(a.gen) && a.gen == b.gen && a.exp == -b.exp;
    }

    bool merges(GroupSpec const& g, Letter a, Letter b) {
      return !g.is_free(a.gen) && a.gen == b.gen;
    }
  }  // namespace

  GroupSpec::GroupSpec(int m, std::vector<int> orders)
      : free_rank(m), torsion_orders(std::move(orders)) {
    validate(*this);
    int const n = static_cast<int>(torsion_orders.size());
    for (int i = 0; i < m; ++i) {
      names.push_back("x" + std::to_string(i + 1));
      aliases.emplace_back(m <= 3 ? free_shorthand[i] : "");
    }
    for (int j = 0; j < n; ++j) {
      names.push_back("y" + std::to_string(j + 1));
      aliases.emplace_back(n <= 6 ? torsion_shorthand[j] : "");
    }
  }

  void validate(GroupSpec const& g) {
    if (g.free_rank < 0) {
      throw DomainError("free rank must be non-negative");
    }
    for (int o : g.torsion_orders) {
      if (o < 2) {
        throw DomainError("torsion orders must be at least 2, got " + std::to_string(o));
      }
    }
  }

  Letter invert(GroupSpec const& g, Letter l) {
    if (g.is_free(l.gen)) {
      return {l.gen, -l.exp};
    }
    return {l.gen, g.order(l.gen) - l.exp};
  }

  Word reduce(GroupSpec const& g, std::span<Letter const> raw) {
    std::vector<Letter> out;
    out.reserve(raw.size());
    auto push = [&](Letter l) {
      if (!out.empty()) {
        Letter& top = out.back();
        if (cancels(g, top, l)) {
          out.pop_back();
          return;
        }
        if (merges(g, top, l)) {
          top.exp = mod(top.exp + l.exp, g.order(l.gen));
          if (top.exp == 0) {
            out.pop_back();
          }
          return;
        }
      }
      out.push_back(l);
    };
    for (Letter l : raw) {
      if (l.gen < 0 || l.gen >= g.generator_count()) {
        throw DomainError("generator index " + std::to_string(l.gen) + " out of range");
      }
      if (g.is_free(l.gen)) {
        int const step = l.exp < 0 ? -1 : 1;
        for (int k = 0; k != l.exp; k += step) {
          push({l.gen, step});
        }
      } else {
        int const e = mod(l.exp, g.order(l.gen));
        if (e != 0) {
          push({l.gen, e});
        }
      }
    }
    return Word(std::move(out));
  }

  Word multiply(GroupSpec const& g, Word const& a, Word const& b) {
    std::vector<Letter> raw(a.letters);
    raw.insert(raw.end(), b.letters.begin(), b.letters.end());
    return reduce(g, raw);
  }

  Word invert(GroupSpec const& g, Word const& w) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
      out.push_back(invert(g, *it));
    }
    return Word(std::move(out));
  }

  Word power(GroupSpec const& g, Word const& w, int n) {
    Word const& unit = n < 0 ? invert(g, w) : w;
    std::vector<Letter> raw;
    for (int i = 0; i < std::abs(n); ++i) {
      raw.insert(raw.end(), unit.letters.begin(), unit.letters.end());
    }
    return reduce(g, raw);
  }

  Word conjugate(GroupSpec const& g, Word const& a, Word const& b) {
    return multiply(g, multiply(g, a, b), invert(g, a));
  }

  CyclicReduction cyclic_reduce(GroupSpec const& g, Word const& w) {
    std::deque<Letter> core(w.begin(), w.end());
    std::vector<Letter> conj;
    while (core.size() >= 2) {
      Letter const f = core.front();
      Letter const l = core.back();
      if (cancels(g, f, l)) {
        conj.push_back(f);
        core.pop_front();
        core.pop_back();
      } else if (merges(g, f, l)) {
        // f m l = f (m l f) f^-1, and l f merges into a single letter.
        conj.push_back(f);
        core.pop_front();
        core.pop_back();
        int const e = mod(f.exp + l.exp, g.order(f.gen));
        if (e != 0) {
          core.push_back({f.gen, e});
        }
      } else {
        break;
      }
    }
    CyclicReduction out;
    out.core.base = Word(std::vector<Letter>(core.begin(), core.end()));
    out.core.canonical_rotation = least_rotation(out.core.base);
    out.conjugator = Word(std::move(conj));
    return out;
  }

  Word least_rotation(Word const& w) {
    std::size_t const n = w.size();
    if (n <= 1) {
      return w;
    }
    std::size_t i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
      Letter const a = w[(i + k) % n];
      Letter const b = w[(j + k) % n];
      if (a == b) {
        ++k;
        continue;
      }
      if (a > b) {
        i += k + 1;
      } else {
        j += k + 1;
      }
      if (i == j) {
        ++j;
      }
      k = 0;
    }
    std::size_t const start = std::min(i, j);
    std::vector<Letter> out(w.letters.begin() + start, w.letters.end());
    out.insert(out.end(), w.letters.begin(), w.letters.begin() + start);
    return Word(std::move(out));
  }

  bool is_rotation(Word const& a, Word const& b) {
    return a.size() == b.size() && least_rotation(a) == least_rotation(b);
  }

  bool is_conjugate(GroupSpec const& g, Word const& a, Word const& b) {
    return cyclic_reduce(g, a).core.canonical_rotation
           == cyclic_reduce(g, b).core.canonical_rotation;
  }

  bool is_self_overlapping(Word const& w) {
    // A shortest border never exceeds half the length, so w = v u v with
    // |v| <= |w|/2 covers every border.
    std::size_t const n = w.size();
    for (std::size_t k = 1; 2 * k <= n; ++k) {
      if (std::equal(w.begin(), w.begin() + k, w.end() - k)) {
        return true;
      }
    }
    return false;
  }

  bool has_finite_order(GroupSpec const& g, Word const& w) {
    auto const core = cyclic_reduce(g, w).core.base;
    return core.empty() || (core.size() == 1 && !g.is_free(core[0].gen));
  }

  bool is_in_free_factor(GroupSpec const& g, Word const& w) {
    return cyclic_reduce(g, w).core.base.size() <= 1;
  }

  bool is_conjugate_to_inverse(GroupSpec const& g, Word const& w) {
    return is_conjugate(g, w, invert(g, w));
  }

  PrimitiveRoot primitive_root(GroupSpec const& g, Word const& w) {
    if (has_finite_order(g, w)) {
      throw DomainError("primitive root of a finite-order element: " + to_string(g, w));
    }
    Word const     core = cyclic_reduce(g, w).core.base;
    std::size_t const n = core.size();
    for (std::size_t d = 1; d <= n; ++d) {
      if (n % d != 0) {
        continue;
      }
      bool periodic = true;
      for (std::size_t i = 0; i + d < n && periodic; ++i) {
        periodic = core[i] == core[i + d];
      }
      if (periodic) {
        return {Word(std::vector<Letter>(core.begin(), core.begin() + d)),
                static_cast<int>(n / d)};
      }
    }
    return {core, 1};  // unreachable: d = n always succeeds
  }

  Word minimal_cyclic_conjugate(GroupSpec const& g, Word const& w) {
    auto const root = primitive_root(g, w);
    if (root.power != 1) {
      throw DomainError("minimal cyclic conjugate of a proper power: " + to_string(g, w));
    }
    return least_rotation(root.root);
  }

  std::optional<int> power_conjugate(GroupSpec const& g, Word const& w, Word const& base) {
    if (has_finite_order(g, base)) {
      throw DomainError("power_conjugate needs a base of infinite order");
    }
    Word const cw = cyclic_reduce(g, w).core.base;
    Word const cb = cyclic_reduce(g, base).core.base;
    if (cw.empty()) {
      return 0;
    }
    if (cw.size() % cb.size() != 0) {
      return std::nullopt;
    }
    int const k      = static_cast<int>(cw.size() / cb.size());
    Word const target = least_rotation(cw);
    // cb is cyclically reduced, so its powers are cyclically reduced words.
    if (least_rotation(power(g, cb, k)) == target) {
      return k;
    }
    if (least_rotation(power(g, cb, -k)) == target) {
      return -k;
    }
    return std::nullopt;
  }

  std::vector<std::int64_t> free_exponent_sums(GroupSpec const& g, Word const& w) {
    std::vector<std::int64_t> sums(g.free_rank, 0);
    for (Letter l : w) {
      if (g.is_free(l.gen)) {
        sums[l.gen] += l.exp;
      }
    }
    return sums;
  }

  std::string to_string(GroupSpec const& g, Word const& w) {
    std::string out;
    for (Letter l : w) {
      if (!out.empty()) {
        out += ' ';
      }
      out += g.names[l.gen];
      if (g.is_free(l.gen) ? l.exp == -1 : l.exp != 1) {
        out += '^' + std::to_string(l.exp);
      }
    }
    return out;
  }

  std::string to_string(GroupSpec const& g) {
    GroupSpec const canonical(g.free_rank, g.torsion_orders);
    bool const      declared = g.names != canonical.names;
    auto names = [&](int from, int to) {
      std::string out;
      for (int i = from; i < to; ++i) {
        out += (i == from ? "(" : ", ") + g.names[i];
      }
      return declared && to > from ? out + ")" : std::string();
    };
    std::string out;
    if (g.free_rank > 0 || g.torsion_orders.empty()) {
      out = "F" + std::to_string(g.free_rank) + names(0, g.free_rank);
    }
    for (int j = 0; j < static_cast<int>(g.torsion_orders.size()); ++j) {
      if (!out.empty()) {
        out += " * ";
      }
      int const i = g.free_rank + j;
      out += "C" + std::to_string(g.torsion_orders[j]) + names(i, i + 1);
    }
    return out;
  }

}  // namespace sclgap
