#include "sclgap/splitting.hpp"

#include <algorithm>
#include <cstdlib>

#include "sclgap/error.hpp"

namespace sclgap {

  char const* to_string(SplittingKind k) {
    return k == SplittingKind::HNN ? "HNN" : "Amalgam";
  }

  char const* to_string(SplittingCase c) {
    switch (c) {
      case SplittingCase::OrientableHNN:
        return "OrientableHNN";
      case SplittingCase::SphereAmalgam:
        return "SphereAmalgam";
      case SplittingCase::NonorientableAmalgam:
        return "NonorientableAmalgam";
    }
    return "?";
  }

  namespace {

    // `gens` lists ambient generators, free ones first.
    VertexGroup make_vertex(std::string tag, GroupSpec const& ambient, std::vector<int> gens) {
      VertexGroup v;
      v.tag = std::move(tag);
      int              free_count = 0;
      std::vector<int> orders;
      for (int a : gens) {
        if (ambient.is_free(a)) {
          ++free_count;
        } else {
          orders.push_back(ambient.order(a));
        }
      }
      v.group            = GroupSpec(free_count, orders);
      v.local_to_ambient = gens;
      v.ambient_to_local.assign(ambient.generator_count(), -1);
      for (std::size_t i = 0; i < gens.size(); ++i) {
        v.ambient_to_local[gens[i]] = static_cast<int>(i);
        v.group.names[i]            = ambient.names[gens[i]];
        v.group.aliases[i].clear();
      }
      return v;
    }

    // Maps ambient letters into a vertex group.
    Word local_word(VertexGroup const& v, std::vector<Letter> const& ambient_letters) {
      std::vector<Letter> raw;
      for (Letter l : ambient_letters) {
        raw.push_back({v.ambient_to_local.at(l.gen), l.exp});
      }
      return reduce(v.group, raw);
    }

    void adopt_names(BoundaryData& d, VertexGroup const& v) {
      check_internal(d.group == v.group, "vertex orbifold group differs from the vertex group");
      d.group.names   = v.group.names;
      d.group.aliases = v.group.aliases;
    }

    std::optional<int> edge_power(GroupSpec const& g, Word const& edge, Word const& w) {
      if (w.empty()) {
        return 0;
      }
      if (w.size() % edge.size() != 0) {
        return std::nullopt;
      }
      int const k = static_cast<int>(w.size() / edge.size());
      if (power(g, edge, k) == w) {
        return k;
      }
      if (power(g, edge, -k) == w) {
        return -k;
      }
      return std::nullopt;
    }

    GroupSpec const& vertex_group(SplittingSpec const& s, int v) {
      return s.vertices.at(v).group;
    }

    Word const& amalgam_edge(SplittingSpec const& s, int v) {
      return v == 0 ? s.edge_images.first : s.edge_images.second;
    }

    SplitWord canonicalize(SplittingSpec const& s, SplitWord const& w) {
      SplitWord out;
      for (Piece const& p : w) {
        if (p.vertex < 0) {
          out.push_back(p);
          continue;
        }
        if (p.word.empty()) {
          continue;
        }
        if (!out.empty() && out.back().vertex == p.vertex) {
          out.back().word = multiply(vertex_group(s, p.vertex), out.back().word, p.word);
          if (out.back().word.empty()) {
            out.pop_back();
          }
          continue;
        }
        out.push_back(p);
      }
      return out;
    }

    // One amalgam rewrite: a syllable lying in the edge group moves across.
    bool amalgam_step(SplittingSpec const& s, SplitWord& w) {
      if (w.size() <= 1) {
        return false;
      }
      for (Piece& p : w) {
        if (auto k = edge_power(vertex_group(s, p.vertex), amalgam_edge(s, p.vertex), p.word)) {
          int const other = 1 - p.vertex;
          p.vertex        = other;
          p.word          = power(vertex_group(s, other), amalgam_edge(s, other), *k);
          return true;
        }
      }
      return false;
    }

    // One Britton pinch: t a^k t^-1 -> b^k or t^-1 b^k t -> a^k.
    bool hnn_step(SplittingSpec const& s, SplitWord& w) {
      GroupSpec const& H = vertex_group(s, 0);
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].vertex >= 0) {
          continue;
        }
        std::size_t j = i + 1;
        Word        middle;
        if (j < w.size() && w[j].vertex >= 0) {
          middle = w[j].word;
          ++j;
        }
        if (j >= w.size() || w[j].vertex >= 0 || w[j].stable_exp != -w[i].stable_exp) {
          continue;
        }
        bool const  forward = w[i].stable_exp > 0;
        Word const& from    = forward ? s.edge_images.first : s.edge_images.second;
        Word const& to      = forward ? s.edge_images.second : s.edge_images.first;
        if (auto k = edge_power(H, from, middle)) {
          Piece replacement{0, power(H, to, *k), 0};
          w.erase(w.begin() + i, w.begin() + j + 1);
          w.insert(w.begin() + i, replacement);
          return true;
        }
      }
      return false;
    }

    int stable_count(SplitWord const& w) {
      return static_cast<int>(
          std::count_if(w.begin(), w.end(), [](Piece const& p) { return p.vertex < 0; }));
    }

    // x = edge^k * r with r of minimal length (then lexicographically
    // least) over |k| <= |x|.
    std::pair<int, Word> coset_split(GroupSpec const& g, Word const& edge, Word const& x) {
      int const bound = static_cast<int>(x.size());
      int       best_k = 0;
      Word      best   = x;
      for (int k = -bound; k <= bound; ++k) {
        Word cand = multiply(g, power(g, edge, -k), x);
        if (cand.size() < best.size() || (cand.size() == best.size() && cand < best)) {
          best   = std::move(cand);
          best_k = k;
        }
      }
      return {best_k, best};
    }

    std::vector<std::int64_t> closed_homology_obstruction(SplittingSpec const& s, Word const& w) {
      auto sums = free_exponent_sums(s.ambient, w);
      if (!s.orbifold.orientable && !sums.empty()) {
        // H_1 over Q is Q^k modulo the all-ones vector times 2.
        std::int64_t const first = sums.front();
        for (auto& v : sums) {
          v -= first;
        }
      }
      return sums;
    }

    bool closed_null_homologous(SplittingSpec const& s, Word const& w) {
      auto const sums = closed_homology_obstruction(s, w);
      return std::all_of(sums.begin(), sums.end(), [](std::int64_t v) { return v == 0; });
    }

  }  // namespace

  SplittingSpec closed_splitting(OrbifoldSpec const& orb) {
    validate(orb);
    if (!orb.closed()) {
      throw DomainError("closed_splitting needs a closed orbifold");
    }
    if (euler_char_orbifold(orb) >= 0) {
      throw DomainError("orbifold has non-negative Euler characteristic "
                        + to_string(euler_char_orbifold(orb)) + "; scl vanishes identically");
    }
    int const n = static_cast<int>(orb.cone_orders.size());
    if (orb.orientable && orb.genus == 0 && n == 3) {
      throw DomainError("sphere with three cone points is a von Dyck group; use the vondyck commands");
    }

    SplittingSpec s;
    s.orbifold       = orb;
    int const free_n = orb.orientable ? 2 * orb.genus : orb.genus;
    s.ambient        = GroupSpec(free_n, orb.cone_orders);
    for (auto& a : s.ambient.aliases) {
      a.clear();
    }
    auto y = [&](int j) { return free_n + j; };  // ambient index of y_{j+1}

    if (orb.orientable && orb.genus >= 1) {
      s.kind             = SplittingKind::HNN;
      s.provenance       = SplittingCase::OrientableHNN;
      s.stable_generator = 0;
      std::vector<int> gens;
      for (int i = 1; i < free_n; ++i) {
        gens.push_back(i);
      }
      for (int j = 0; j < n; ++j) {
        gens.push_back(y(j));
      }
      VertexGroup H = make_vertex("H", s.ambient, gens);

      std::vector<Letter> rel{{1, -1}};
      for (int i = 1; i < orb.genus; ++i) {
        int const a = 2 * i, b = 2 * i + 1;
        rel.insert(rel.end(), {{a, 1}, {b, 1}, {a, -1}, {b, -1}});
      }
      for (int j = 0; j < n; ++j) {
        rel.push_back({y(j), 1});
      }
      s.edge_images = {local_word(H, {{1, -1}}), local_word(H, rel)};

      // Genus k-1 with two boundary circles, carried by x2 and the second
      // edge image.
      BoundaryData d;
      d.group      = H.group;
      d.orientable = true;
      for (int i = 1; i < free_n - 1; ++i) {
        d.surface_generators.push_back(i);
      }
      d.boundary_generators = {0};
      d.long_word           = invert(H.group, s.edge_images.second);
      d.boundary_words      = {Word({{0, 1}}), d.long_word};
      d.boundary_chain.add(1, d.long_word).add(-1, Word({{0, 1}}));
      H.boundary = std::move(d);
      s.vertices.push_back(std::move(H));
    } else if (orb.orientable) {
      s.kind       = SplittingKind::Amalgam;
      s.provenance = SplittingCase::SphereAmalgam;
      VertexGroup left  = make_vertex("left", s.ambient, {y(0), y(1)});
      std::vector<int> right_gens;
      std::vector<Letter> right_word;
      for (int j = 2; j < n; ++j) {
        right_gens.push_back(y(j));
        right_word.push_back({y(j), 1});
      }
      VertexGroup right = make_vertex("right", s.ambient, right_gens);
      s.edge_images     = {invert(left.group, local_word(left, {{y(0), 1}, {y(1), 1}})),
                           local_word(right, right_word)};

      OrbifoldSpec left_orb{true, 0, 1, {orb.cone_orders[0], orb.cone_orders[1]}};
      OrbifoldSpec right_orb{true, 0, 1,
                             std::vector<int>(orb.cone_orders.begin() + 2, orb.cone_orders.end())};
      left.boundary  = presentation_with_boundary(left_orb);
      right.boundary = presentation_with_boundary(right_orb);
      adopt_names(*left.boundary, left);
      adopt_names(*right.boundary, right);
      s.vertices.push_back(std::move(left));
      s.vertices.push_back(std::move(right));
    } else {
      s.kind           = SplittingKind::Amalgam;
      s.provenance     = SplittingCase::NonorientableAmalgam;
      VertexGroup left = make_vertex("left", s.ambient, {0});
      std::vector<int>    right_gens;
      std::vector<Letter> right_word;
      for (int i = 1; i < free_n; ++i) {
        right_gens.push_back(i);
        right_word.insert(right_word.end(), {{i, 1}, {i, 1}});
      }
      for (int j = 0; j < n; ++j) {
        right_gens.push_back(y(j));
        right_word.push_back({y(j), 1});
      }
      VertexGroup right = make_vertex("right", s.ambient, right_gens);
      s.edge_images     = {local_word(left, {{0, -2}}), local_word(right, right_word)};

      OrbifoldSpec right_orb = orb.genus == 1
                                   ? OrbifoldSpec{true, 0, 1, orb.cone_orders}
                                   : OrbifoldSpec{false, orb.genus - 1, 1, orb.cone_orders};
      right.boundary = presentation_with_boundary(right_orb);
      adopt_names(*right.boundary, right);
      s.vertices.push_back(std::move(left));
      s.vertices.push_back(std::move(right));
    }

    for (auto const& v : s.vertices) {
      if (v.boundary) {
        Word const& e = s.kind == SplittingKind::HNN ? s.edge_images.second
                        : (&v == &s.vertices.front()) ? s.edge_images.first
                                                      : s.edge_images.second;
        check_internal(is_conjugate(v.group, v.boundary->long_word, e)
                           || is_conjugate(v.group, v.boundary->long_word, invert(v.group, e)),
                       "vertex boundary word is not the edge image");
      }
    }
    return s;
  }

  int cfl_n(int K) {
    if (K < 1) {
      throw DomainError("acylindricity constant must be positive");
    }
    return (K + 3 + 1) / 2;
  }

  Rational cfl_gap(int K) {
    return Rational(1, 12 * cfl_n(K));
  }

  AcylindricityReport acylindricity_report(SplittingSpec const& s) {
    AcylindricityReport r;
    r.K   = s.kind == SplittingKind::HNN ? 1 : 2;
    r.N   = cfl_n(r.K);
    r.gap = cfl_gap(r.K);

    auto require = [&](bool ok, std::string what) {
      if (!ok) {
        throw InternalError("acylindricity side condition failed: " + what);
      }
      r.checks.push_back(std::move(what));
    };

    GroupSpec const& g_first  = vertex_group(s, 0);
    GroupSpec const& g_second = vertex_group(s, s.kind == SplittingKind::HNN ? 0 : 1);
    Word const&      e1       = s.edge_images.first;
    Word const&      e2       = s.edge_images.second;

    require(!has_finite_order(g_first, e1) && !has_finite_order(g_second, e2),
            "edge images have infinite order");
    if (s.provenance == SplittingCase::NonorientableAmalgam) {
      require(primitive_root(g_first, e1).power == 2 && primitive_root(g_second, e2).power == 1,
              "left edge group has index 2 in <x1>; right edge image is not a proper power");
    } else {
      require(primitive_root(g_first, e1).power == 1 && primitive_root(g_second, e2).power == 1,
              "edge images are not proper powers");
    }

    auto const& orb = s.orbifold;
    switch (s.provenance) {
      case SplittingCase::OrientableHNN: {
        bool const apart = !power_conjugate(g_first, e2, e1) && !power_conjugate(g_first, e1, e2);
        require(apart, "no power of one edge image is conjugate to a power of the other");
        require(orb.genus >= 2 || !orb.cone_orders.empty(),
                "genus >= 2 or at least one cone point");
        break;
      }
      case SplittingCase::SphereAmalgam: {
        auto const& o = orb.cone_orders;
        if (o[0] == 2 && o[1] == 2) {
          require(o.size() > 4 || !(o[2] == 2 && o[3] == 2),
                  "o1 = o2 = 2, so n > 4 or o3, o4 not both 2");
          require(!is_conjugate_to_inverse(g_second, e2),
                  "right edge image is not conjugate to its inverse");
        } else {
          require(!is_conjugate_to_inverse(g_first, e1),
                  "left edge image is not conjugate to its inverse");
        }
        break;
      }
      case SplittingCase::NonorientableAmalgam: {
        require(e2.size() >= 2 && !is_conjugate_to_inverse(g_second, e2),
                "right edge image has length >= 2 and is not conjugate to its inverse");
        break;
      }
    }
    return r;
  }

  SplitWord to_split_word(SplittingSpec const& s, Word const& ambient_word) {
    SplitWord out;
    for (Letter l : ambient_word) {
      if (l.gen < 0 || l.gen >= s.ambient.generator_count()) {
        throw DomainError("generator index out of range for the closed presentation");
      }
      if (s.kind == SplittingKind::HNN && l.gen == s.stable_generator) {
        out.push_back({-1, Word(), l.exp});
        continue;
      }
      int v = -1;
      for (std::size_t i = 0; i < s.vertices.size(); ++i) {
        if (s.vertices[i].ambient_to_local[l.gen] >= 0) {
          v = static_cast<int>(i);
        }
      }
      check_internal(v >= 0, "generator in no vertex group");
      Letter const local{s.vertices[v].ambient_to_local[l.gen], l.exp};
      if (out.empty() || out.back().vertex != v) {
        out.push_back({v, Word(), 0});
      }
      std::vector<Letter> raw = out.back().word.letters;
      raw.push_back(local);
      out.back().word = reduce(s.vertices[v].group, raw);
    }
    return reduce(s, std::move(out));
  }

  Word to_ambient_word(SplittingSpec const& s, SplitWord const& w) {
    std::vector<Letter> raw;
    for (Piece const& p : w) {
      if (p.vertex < 0) {
        raw.push_back({s.stable_generator, p.stable_exp});
        continue;
      }
      for (Letter l : p.word) {
        raw.push_back({s.vertices[p.vertex].local_to_ambient[l.gen], l.exp});
      }
    }
    return reduce(s.ambient, raw);
  }

  SplitWord reduce(SplittingSpec const& s, SplitWord w) {
    for (;;) {
      w = canonicalize(s, w);
      bool const changed = s.kind == SplittingKind::Amalgam ? amalgam_step(s, w) : hnn_step(s, w);
      if (!changed) {
        return w;
      }
    }
  }

  SplitWord multiply(SplittingSpec const& s, SplitWord const& a, SplitWord const& b) {
    SplitWord out = a;
    out.insert(out.end(), b.begin(), b.end());
    return reduce(s, std::move(out));
  }

  SplitWord invert(SplittingSpec const& s, SplitWord const& w) {
    SplitWord out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      if (it->vertex < 0) {
        out.push_back({-1, Word(), -it->stable_exp});
      } else {
        out.push_back({it->vertex, invert(vertex_group(s, it->vertex), it->word), 0});
      }
    }
    return out;
  }

  bool is_trivial(SplittingSpec const& s, SplitWord const& w) {
    return reduce(s, w).empty();
  }

  SplitWord cyclically_reduce(SplittingSpec const& s, SplitWord w) {
    w = reduce(s, std::move(w));
    for (;;) {
      if (s.kind == SplittingKind::Amalgam) {
        if (w.size() <= 1 || w.front().vertex != w.back().vertex) {
          return w;
        }
        std::rotate(w.begin(), w.begin() + 1, w.end());
        w = reduce(s, std::move(w));
        continue;
      }
      if (stable_count(w) == 0) {
        return w;
      }
      if (w.front().vertex >= 0) {
        std::rotate(w.begin(), w.begin() + 1, w.end());
        w = reduce(s, std::move(w));
        continue;
      }
      // w = t^e1 h1 ... t^eL [hL]; test for a pinch across the seam.
      SplitWord probe(w.begin() + 1, w.end());
      probe.push_back(w.front());
      SplitWord reduced = reduce(s, probe);
      if (stable_count(reduced) < stable_count(w)) {
        w = std::move(reduced);
        continue;
      }
      return w;
    }
  }

  NormalForm normal_form(SplittingSpec const& s, Word const& ambient_word) {
    SplitWord const w = to_split_word(s, ambient_word);
    NormalForm      nf;
    if (s.kind == SplittingKind::Amalgam) {
      int       carry = 0;
      SplitWord reps(w.size());
      for (std::size_t i = w.size(); i-- > 0;) {
        int const        v = w[i].vertex;
        GroupSpec const& G = vertex_group(s, v);
        Word const x = multiply(G, w[i].word, power(G, amalgam_edge(s, v), carry));
        auto [k, r]  = coset_split(G, amalgam_edge(s, v), x);
        reps[i]      = {v, std::move(r), 0};
        carry        = k;
      }
      nf.edge_power      = carry;
      nf.representatives = std::move(reps);
      return nf;
    }
    GroupSpec const& H = vertex_group(s, 0);
    // Pad to h0 t h1 t ... t hL with possibly empty h's, then walk right to
    // left pushing edge powers through each stable letter.
    SplitWord padded;
    for (Piece const& p : w) {
      if (p.vertex < 0 && (padded.empty() || padded.back().vertex < 0)) {
        padded.push_back({0, Word(), 0});
      }
      padded.push_back(p);
    }
    if (padded.empty() || padded.back().vertex < 0) {
      padded.push_back({0, Word(), 0});
    }
    SplitWord reps;
    Word      carry;
    for (std::size_t i = padded.size(); i-- > 0;) {
      if (padded[i].vertex < 0) {
        reps.push_back(padded[i]);
        continue;
      }
      Word const x = multiply(H, padded[i].word, carry);
      carry        = Word();
      if (i == 0) {
        reps.push_back({0, x, 0});
        continue;
      }
      bool const  forward = padded[i - 1].stable_exp > 0;
      Word const& through = forward ? s.edge_images.first : s.edge_images.second;
      Word const& across  = forward ? s.edge_images.second : s.edge_images.first;
      auto [k, r]         = coset_split(H, through, x);
      reps.push_back({0, std::move(r), 0});
      carry = power(H, across, k);
    }
    std::reverse(reps.begin(), reps.end());
    nf.representatives = std::move(reps);
    return nf;
  }

  Classification classify_element(SplittingSpec const& s, Word const& ambient_word) {
    Classification c;
    c.cyclic_form = cyclically_reduce(s, to_split_word(s, ambient_word));
    if (s.kind == SplittingKind::Amalgam) {
      c.elliptic           = c.cyclic_form.size() <= 1;
      c.normal_form_length = static_cast<int>(c.cyclic_form.size());
      if (c.elliptic) {
        c.vertex     = c.cyclic_form.empty() ? 0 : c.cyclic_form.front().vertex;
        c.conjugated = c.cyclic_form.empty() ? Word() : c.cyclic_form.front().word;
      }
      return c;
    }
    c.normal_form_length = stable_count(c.cyclic_form);
    c.elliptic           = c.normal_form_length == 0;
    if (c.elliptic) {
      c.vertex     = 0;
      c.conjugated = c.cyclic_form.empty() ? Word() : c.cyclic_form.front().word;
    }
    return c;
  }

  std::optional<SplitWord> find_inverse_conjugator(SplittingSpec const& s,
                                                   Word const&          ambient_word,
                                                   int                  ball) {
    SplitWord const g   = cyclically_reduce(s, to_split_word(s, ambient_word));
    std::vector<SplitWord> edge_generators;
    if (s.kind == SplittingKind::Amalgam) {
      edge_generators.push_back({{0, s.edge_images.first, 0}});
    } else {
      edge_generators.push_back({{0, s.edge_images.first, 0}});
      edge_generators.push_back({{0, s.edge_images.second, 0}});
    }
    for (std::size_t i = 0; i < std::max<std::size_t>(g.size(), 1); ++i) {
      SplitWord const prefix(g.begin(), g.begin() + std::min(i, g.size()));
      SplitWord const u_inv = invert(s, prefix);
      for (auto const& e : edge_generators) {
        for (int j = -ball; j <= ball; ++j) {
          SplitWord c;
          for (int r = 0; r < std::abs(j); ++r) {
            c = multiply(s, c, j < 0 ? invert(s, e) : e);
          }
          SplitWord const x = multiply(s, c, u_inv);
          // x g x^-1 g == 1
          SplitWord const test = multiply(s, multiply(s, multiply(s, x, g), invert(s, x)), g);
          if (test.empty()) {
            return x;
          }
        }
      }
    }
    return std::nullopt;
  }

  namespace {

    ClosedGapCertificate from_relative(RelGapCertificate rel, Classification cls) {
      ClosedGapCertificate out;
      out.certificate      = std::move(rel.certificate);
      out.classification   = std::move(cls);
      out.case_tag         = rel.case_tag;
      out.peripheral_chain = std::move(rel.peripheral_chain);
      out.disposition      = "elliptic: relative certificate in the vertex orbifold";
      return out;
    }

    ClosedGapCertificate edge_result(GapCertificate cert, Classification cls, std::string why) {
      ClosedGapCertificate out;
      out.certificate = std::move(cert);
      out.classification = std::move(cls);
      out.disposition = std::move(why);
      return out;
    }

  }  // namespace

  ClosedGapCertificate closed_gap_certificate(SplittingSpec const& s,
                                              Word const&          g,
                                              int                  ball) {
    Classification cls = classify_element(s, g);
    if (!cls.elliptic) {
      auto const report = acylindricity_report(s);
      if (auto x = find_inverse_conjugator(s, g, ball)) {
        auto cert = GapCertificate::zero(
            s.ambient, single_term_chain(g), VanishingReason::ConjugateToInverse,
            "conjugator to the inverse (of the cyclic normal form): "
                + to_string(s.ambient, to_ambient_word(s, *x)));
        return edge_result(std::move(cert), std::move(cls), "hyperbolic: conjugate to its inverse");
      }
      GapCertificate cert;
      cert.group  = s.ambient;
      cert.chain  = single_term_chain(g);
      cert.status = GapStatus::LowerBound;
      cert.bound  = report.gap;
      cert.method = BoundMethod::Acylindrical;
      cert.notes  = "hyperbolic in the Bass-Serre tree (normal form length "
                   + std::to_string(cls.normal_form_length) + "); action is "
                   + std::to_string(report.K) + "-acylindrical, N = " + std::to_string(report.N)
                   + "; scl >= " + to_string(report.gap)
                   + " or scl = 0 iff g is conjugate to g^-1; no such conjugator within edge ball "
                   + std::to_string(ball);
      return edge_result(std::move(cert), std::move(cls), "hyperbolic: acylindrical gap");
    }

    int const          v  = cls.vertex;
    VertexGroup const& vg = s.vertices.at(v);
    Word const         x  = cls.conjugated;
    if (has_finite_order(vg.group, x)) {
      return edge_result(GapCertificate::zero(vg.group, single_term_chain(x),
                                              VanishingReason::FiniteOrder,
                                              "elliptic element of finite order"),
                         std::move(cls), "elliptic: finite order");
    }

    auto const& orb = s.orbifold;
    switch (s.provenance) {
      case SplittingCase::OrientableHNN: {
        if (power_conjugate(vg.group, x, s.edge_images.first)
            || power_conjugate(vg.group, x, s.edge_images.second)) {
          return edge_result(GapCertificate::infinite(vg.group, single_term_chain(x),
                                                      "edge element; nontrivial in H_1"),
                             std::move(cls), "elliptic: edge element of the HNN extension");
        }
        break;
      }
      case SplittingCase::SphereAmalgam: {
        if (auto j = power_conjugate(vg.group, x, amalgam_edge(s, v))) {
          GroupSpec const& gl = vertex_group(s, 0);
          GroupSpec const& gr = vertex_group(s, 1);
          auto left  = element_gap(gl, power(gl, s.edge_images.first, *j));
          auto right = element_gap(gr, power(gr, s.edge_images.second, *j));
          std::string const why
              = "elliptic: edge element z^" + std::to_string(*j)
                + "; scl is the minimum over both vertex groups";
          for (auto* side : {&left, &right}) {
            if (side->status == GapStatus::Zero) {
              side->notes += "; zero in one vertex group, so zero in the closed group";
              return edge_result(std::move(*side), std::move(cls), why);
            }
          }
          check_internal(left.status == GapStatus::LowerBound && right.status == GapStatus::LowerBound,
                         "edge element of a torsion free product is not null-homologous");
          auto& best = left.bound <= right.bound ? left : right;
          best.notes += "; minimum of the two vertex-group certificates";
          return edge_result(std::move(best), std::move(cls), why);
        }
        break;
      }
      case SplittingCase::NonorientableAmalgam: {
        GroupSpec const& gr = vertex_group(s, 1);
        std::optional<Rational> z_power;  // x conjugate to z^{z_power}, z = x1^-2
        if (v == 0) {
          // <x1>: x = x1^l = z^{-l/2}
          auto const sums = free_exponent_sums(vg.group, x);
          z_power         = Rational(-sums[0], 2);
        } else if (auto j = power_conjugate(gr, x, s.edge_images.second)) {
          z_power = Rational(*j);
        }
        if (z_power) {
          if (orb.genus >= 2) {
            return edge_result(GapCertificate::infinite(vg.group, single_term_chain(x),
                                                        "power of x1; nontrivial in H_1"),
                               std::move(cls), "elliptic: edge-group element (genus >= 2)");
          }
          // scl(z^p) = |p| scl_H(y1...yn) with H the cone-point free product.
          Chain c;
          c.add(abs(*z_power), power(gr, s.edge_images.second, *z_power < 0 ? -1 : 1));
          auto cert = chain_gap_certificate(gr, c);
          cert.notes += "; scl(z) equals scl of y1...yn in the cone-point free product";
          return edge_result(std::move(cert), std::move(cls),
                             "elliptic: power of the edge generator (genus 1)");
        }
        break;
      }
    }

    check_internal(vg.boundary.has_value(), "elliptic element in a vertex without boundary data");
    auto rel = relative_gap_certificate(*vg.boundary, x);
    if (rel.certificate.status == GapStatus::Infinite) {
      check_internal(!closed_null_homologous(s, g),
                     "vertex class outside the boundary span but null-homologous in the closed group");
    }
    return from_relative(std::move(rel), std::move(cls));
  }

  ClosedGapCertificate closed_gap_certificate(OrbifoldSpec const& orb, Word const& g, int ball) {
    return closed_gap_certificate(closed_splitting(orb), g, ball);
  }

}  // namespace sclgap
