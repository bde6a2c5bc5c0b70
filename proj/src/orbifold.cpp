#include "sclgap/orbifold.hpp"

#include <algorithm>

#include "sclgap/error.hpp"

namespace sclgap {

  void validate(OrbifoldSpec const& s) {
    if (s.genus < 0 || s.boundary_components < 0) {
      throw DomainError("genus and boundary count must be non-negative");
    }
    if (!s.orientable && s.genus < 1) {
      throw DomainError("a nonorientable orbifold needs genus at least 1");
    }
    for (int o : s.cone_orders) {
      if (o < 2) {
        throw DomainError("cone orders must be at least 2");
      }
    }
  }

  Rational euler_char_orbifold(OrbifoldSpec const& s) {
    validate(s);
    int const chi_surface = s.orientable ? 2 - 2 * s.genus - s.boundary_components
                                         : 2 - s.genus - s.boundary_components;
    Rational chi = chi_surface;
    for (int o : s.cone_orders) {
      chi -= 1 - Rational(1, o);
    }
    return chi;
  }

  std::string to_string(OrbifoldSpec const& s) {
    std::string cones;
    for (int o : s.cone_orders) {
      cones += (cones.empty() ? "" : ",") + std::to_string(o);
    }
    return "orb(orientable=" + std::string(s.orientable ? "true" : "false")
           + ", genus=" + std::to_string(s.genus) + ", boundary="
           + std::to_string(s.boundary_components) + ", cones=[" + cones + "])";
  }

  BoundaryData fundamental_group(OrbifoldSpec const& s) {
    validate(s);
    if (s.closed()) {
      throw DomainError("fundamental_group needs an orbifold with boundary");
    }
    if (euler_char_orbifold(s) >= 0) {
      throw DomainError("orbifold has non-negative Euler characteristic "
                        + to_string(euler_char_orbifold(s)) + "; scl vanishes identically");
    }
    return presentation_with_boundary(s);
  }

  BoundaryData presentation_with_boundary(OrbifoldSpec const& s) {
    validate(s);
    if (s.closed()) {
      throw DomainError("presentation_with_boundary needs an orbifold with boundary");
    }
    int const surf = s.orientable ? 2 * s.genus : s.genus;
    int const m    = s.boundary_components - 1;

    BoundaryData d;
    d.orientable = s.orientable;
    d.group      = GroupSpec(surf + m, s.cone_orders);
    for (int i = 0; i < surf; ++i) {
      d.surface_generators.push_back(i);
    }
    for (int i = 0; i < m; ++i) {
      d.boundary_generators.push_back(surf + i);
      d.group.names[surf + i] = "b" + std::to_string(i + 1);
    }
    if (d.group.free_rank > 0) {
      for (auto& a : d.group.aliases) {
        a.clear();  // x/y/b names are canonical here; shorthands would collide
      }
    }

    std::vector<Letter> raw;
    if (s.orientable) {
      for (int i = 0; i < s.genus; ++i) {
        int const a = 2 * i, b = 2 * i + 1;
        raw.insert(raw.end(), {{a, 1}, {b, 1}, {a, -1}, {b, -1}});
      }
    } else {
      for (int i = 0; i < s.genus; ++i) {
        raw.insert(raw.end(), {{i, 1}, {i, 1}});
      }
    }
    for (int bi : d.boundary_generators) {
      raw.push_back({bi, 1});
    }
    for (std::size_t j = 0; j < s.cone_orders.size(); ++j) {
      raw.push_back({surf + m + static_cast<int>(j), 1});
    }
    d.long_word = reduce(d.group, raw);

    for (int bi : d.boundary_generators) {
      d.boundary_words.push_back(Word({{bi, 1}}));
    }
    d.boundary_words.push_back(d.long_word);
    d.boundary_chain.add(1, d.long_word);
    for (int bi : d.boundary_generators) {
      d.boundary_chain.add(-1, Word({{bi, 1}}));
    }
    return d;
  }

  char const* to_string(RelCase c) {
    switch (c) {
      case RelCase::PhiOfBZero:
        return "PhiOfBZero";
      case RelCase::Composite:
        return "Composite";
      case RelCase::NonorientableExceptional:
        return "NonorientableExceptional";
      case RelCase::HalfIntegerMismatch:
        return "HalfIntegerMismatch";
    }
    return "?";
  }

  namespace {
    RelGapCertificate vanishing(BoundaryData const& d,
                                Word const&         g,
                                VanishingReason     why,
                                std::string         notes) {
      return {GapCertificate::zero(d.group, single_term_chain(g), why, std::move(notes)),
              std::nullopt,
              Chain()};
    }
  }  // namespace

  RelGapCertificate relative_gap_certificate(BoundaryData const& d, Word const& g) {
    GroupSpec const& G = d.group;

    // Vanishing conditions.
    if (has_finite_order(G, g)) {
      return vanishing(d, g, VanishingReason::FiniteOrder, "element has finite order");
    }
    if (is_conjugate_to_inverse(G, g)) {
      return vanishing(d, g, VanishingReason::ConjugateToInverse,
                       "cyclic reduction of the inverse is a rotation");
    }
    for (Word const& bw : d.boundary_words) {
      if (auto k = power_conjugate(G, g, bw)) {
        return vanishing(d, g, VanishingReason::Peripheral,
                         "conjugate to (" + to_string(G, bw) + ")^" + std::to_string(*k));
      }
    }

    // Homology membership in the span of the boundary classes, and the
    // peripheral chain c with [g] = [c].
    auto const sums = free_exponent_sums(G, g);
    Chain      c;
    Rational   c0 = 0;
    if (d.orientable) {
      for (int x : d.surface_generators) {
        if (sums[x] != 0) {
          RelGapCertificate out{
              GapCertificate::infinite(G, single_term_chain(g),
                                       "homology class is not carried by the boundary"),
              std::nullopt, Chain()};
          return out;
        }
      }
      for (int bi : d.boundary_generators) {
        c.add(Rational(sums[bi]), Word({{bi, 1}}));
      }
    } else {
      check_internal(!d.surface_generators.empty(), "nonorientable data without x generators");
      std::int64_t const s = sums[d.surface_generators.front()];
      for (int x : d.surface_generators) {
        if (sums[x] != s) {
          return {GapCertificate::infinite(G, single_term_chain(g),
                                           "x exponent sums differ; class not carried by the boundary"),
                  std::nullopt, Chain()};
        }
      }
      c0 = Rational(s, 2);
      c.add(c0, d.long_word);
      for (int bi : d.boundary_generators) {
        c.add(Rational(sums[bi]) - c0, Word({{bi, 1}}));
      }
    }
    Chain g_minus_c = single_term_chain(g);
    g_minus_c.add(c, -1);

    CountingQM const qm_b(G, d.long_word);

    // Nonorientable genus one: g conjugate to a power of x1.
    if (!d.orientable && d.surface_generators.size() == 1) {
      Word const x1({{d.surface_generators.front(), 1}});
      if (auto ell = power_conjugate(G, g, x1)) {
        auto cert = GapCertificate::bavard(G, g_minus_c, QMCombination::single(qm_b),
                                           "g is conjugate to x1^" + std::to_string(*ell));
        check_internal(cert.bound == Rational(std::abs(*ell), 24),
                       "exceptional case bound differs from |l|/24");
        return {std::move(cert), RelCase::NonorientableExceptional, std::move(c)};
      }
    }

    auto const root = primitive_root(G, g);
    int const  q    = root.power;
    Word const h    = least_rotation(root.root);
    check_internal(h.size() >= 2, "primitive root conjugate into a free factor");
    CountingQM const qm_h(G, h);
    std::int64_t const s1 = qm_h(G, d.long_word);
    check_internal(s1 >= -1 && s1 <= 1, "root occurs more than once in the boundary word");
    check_internal(qm_h(G, g) == q, "phi_bar_h'(g) != q");

    QMCombination witness;
    RelCase       tag;
    std::string   notes;
    if (s1 == 0) {
      witness = QMCombination::single(qm_h);
      tag     = RelCase::PhiOfBZero;
      notes   = "phi_bar_h'(b) = 0";
    } else {
      check_internal(qm_b(G, h) == 0, "phi_bar_b(h') != 0");
      check_internal(qm_b(G, d.long_word) == 1, "phi_bar_b(b) != 1");
      QMCombination composite({{Rational(1), qm_h}, {Rational(-s1), qm_b}});
      if (!d.orientable && c0 != Rational(s1 * q)) {
        witness = QMCombination::single(qm_h);
        tag     = RelCase::HalfIntegerMismatch;
        notes   = "phi_bar_h'(b) = " + std::to_string(s1) + ", c0 = " + to_string(c0) + " != "
                + std::to_string(s1 * q);
      } else {
        witness = std::move(composite);
        tag     = RelCase::Composite;
        notes   = "phi_bar_h'(b) = " + std::to_string(s1) + "; witness phi_bar_h' "
                + (s1 > 0 ? "- " : "+ ") + "phi_bar_b";
      }
    }

    auto cert = GapCertificate::bavard(G, g_minus_c, witness, notes);
    if (d.orientable) {
      // Pairing with the boundary chain vanishes, so the value is the same
      // for g - c + t * dB at every t.
      check_internal(evaluate_on_chain(G, witness, d.boundary_chain) == 0,
                     "witness does not vanish on the boundary chain");
      Chain shifted = g_minus_c;
      shifted.add(d.boundary_chain);
      check_internal(evaluate_on_chain(G, witness, shifted) == *cert.value,
                     "witness value depends on t");
    }
    check_internal(cert.bound >= Rational(1, 24), "relative certificate below 1/24");
    return {std::move(cert), tag, std::move(c)};
  }

  RelGapCertificate relative_gap_certificate(OrbifoldSpec const& s, Word const& g) {
    return relative_gap_certificate(fundamental_group(s), g);
  }

}  // namespace sclgap
