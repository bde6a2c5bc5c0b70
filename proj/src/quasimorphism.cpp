#include "sclgap/quasimorphism.hpp"

#include <algorithm>

#include "sclgap/error.hpp"

namespace sclgap {

  std::int64_t count_occurrences(Word const& pattern, Word const& text) {
    if (pattern.empty() || pattern.size() > text.size()) {
      return 0;
    }
    std::int64_t n = 0;
    for (std::size_t i = 0; i + pattern.size() <= text.size(); ++i) {
      if (std::equal(pattern.begin(), pattern.end(), text.begin() + i)) {
        ++n;
      }
    }
    return n;
  }

  std::int64_t count_cyclic_occurrences(Word const& pattern, Word const& cyclic) {
    std::size_t const n = cyclic.size();
    if (pattern.empty() || n == 0) {
      return 0;
    }
    std::int64_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
      bool match = true;
      for (std::size_t j = 0; j < pattern.size() && match; ++j) {
        match = pattern[j] == cyclic[(i + j) % n];
      }
      count += match;
    }
    return count;
  }

  std::int64_t phi(GroupSpec const& g, Word const& base, Word const& h) {
    return count_occurrences(base, h) - count_occurrences(invert(g, base), h);
  }

  std::string counting_qm_obstruction(GroupSpec const& g, Word const& base) {
    if (base.size() < 2) {
      return "base must have length at least 2";
    }
    if (cyclic_reduce(g, base).core.base != base) {
      return "base must be cyclically reduced";
    }
    if (is_self_overlapping(base)) {
      return "base must not be self-overlapping";
    }
    return {};
  }

  CountingQM::CountingQM(GroupSpec const& g, Word base) : _base(std::move(base)) {
    if (auto why = counting_qm_obstruction(g, _base); !why.empty()) {
      throw DomainError("invalid counting quasimorphism base '" + to_string(g, _base)
                        + "': " + why);
    }
    _inverse = invert(g, _base);
  }

  std::int64_t CountingQM::operator()(GroupSpec const& g, Word const& h) const {
    if (has_finite_order(g, h)) {
      return 0;
    }
    Word const core = cyclic_reduce(g, h).core.base;
    return count_cyclic_occurrences(_base, core) - count_cyclic_occurrences(_inverse, core);
  }

  std::int64_t phi_bar(GroupSpec const& g, CountingQM const& qm, Word const& h) {
    return qm(g, h);
  }

  QMCombination::QMCombination(std::vector<QMTerm> terms) : _terms(std::move(terms)) {
    if (_terms.empty()) {
      throw DomainError("a quasimorphism combination needs at least one term");
    }
  }

  Rational QMCombination::defect_bound() const {
    if (_terms.empty()) {
      throw DomainError("defect bound of an empty combination");
    }
    Rational total = 0;
    for (auto const& t : _terms) {
      total += abs(t.coefficient) * homogenized_defect_per_unit;
    }
    return total;
  }

  Rational QMCombination::operator()(GroupSpec const& g, Word const& h) const {
    Rational total = 0;
    for (auto const& t : _terms) {
      total += t.coefficient * Rational(t.qm(g, h));
    }
    return total;
  }

  Rational defect_bound(QMCombination const& q) {
    return q.defect_bound();
  }

  Rational evaluate_on_chain(GroupSpec const& g, QMCombination const& q, Chain const& c) {
    Rational total = 0;
    for (auto const& t : c.terms) {
      total += t.coefficient * q(g, t.element);
    }
    return total;
  }

}  // namespace sclgap
