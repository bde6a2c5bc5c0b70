#include "sclgap/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

#include "sclgap/error.hpp"

namespace sclgap::hyperbolic {

  namespace {
    constexpr double pi = std::numbers::pi;
  }

  Isometry Isometry::normalized(double a, double b, double c, double d) {
    double const det = a * d - b * c;
    if (!(det > 0)) {
      throw DomainError("isometry matrix must have positive determinant");
    }
    double const s = std::sqrt(det);
    return {a / s, b / s, c / s, d / s};
  }

  Isometry Isometry::rotation(Point center, double angle) {
    double const   y  = center.imag();
    double const   x  = center.real();
    double const   sy = std::sqrt(y);
    Isometry const T{sy, x / sy, 0, 1 / sy};  // i -> center
    Isometry const R{std::cos(angle / 2), std::sin(angle / 2), -std::sin(angle / 2),
                     std::cos(angle / 2)};
    return T * R * T.inverse();
  }

  double Isometry::distance_to_identity() const noexcept {
    auto dist = [&](double s) {
      return std::max({std::abs(a - s), std::abs(b), std::abs(c), std::abs(d - s)});
    };
    return std::min(dist(1), dist(-1));
  }

  Isometry power(Isometry const& m, int n) {
    Isometry base = n < 0 ? m.inverse() : m;
    Isometry out  = Isometry::identity();
    for (int k = std::abs(n); k > 0; k >>= 1) {
      if (k & 1) {
        out = out * base;
      }
      base = base * base;
    }
    return out;
  }

  IsometryClass classify_isometry(Isometry const& m, double tol) {
    double const t = std::abs(m.trace());
    if (t < 2 - tol) {
      return Elliptic{2 * std::acos(t / 2)};
    }
    if (std::abs(t - 2) <= tol) {
      return Parabolic{};
    }
    return Hyperbolic{2 * std::acosh(t / 2)};
  }

  Point fixed_point(Isometry const& m) {
    double const t = m.trace();
    if (!(std::abs(t) < 2) || m.c == 0) {
      throw DomainError("fixed_point needs an elliptic isometry");
    }
    return {(m.a - m.d) / (2 * m.c), std::sqrt(4 - t * t) / (2 * std::abs(m.c))};
  }

  double hyperbolic_distance(Point z, Point w) {
    double const num = std::norm(z - w);
    return std::acosh(1 + num / (2 * z.imag() * w.imag()));
  }

  TriangleGroupData von_dyck_generators(int p, int q, int r) {
    if (p < 2 || q < 2 || r < 2) {
      throw DomainError("triangle orders must be at least 2");
    }
    // 1/p + 1/q + 1/r < 1  <=>  qr + pr + pq < pqr
    if (static_cast<long long>(q) * r + static_cast<long long>(p) * r + static_cast<long long>(p) * q
        >= static_cast<long long>(p) * q * r) {
      throw DomainError("(p,q,r) is not hyperbolic: 1/p + 1/q + 1/r >= 1");
    }
    double const alpha = pi / p, beta = pi / q, gamma = pi / r;
    // Side PQ opposite the angle gamma (law of cosines for angles).
    double const c = std::acosh((std::cos(gamma) + std::cos(alpha) * std::cos(beta))
                                / (std::sin(alpha) * std::sin(beta)));
    Point const P{0, 1};
    Point const Q{0, std::exp(c)};

    TriangleGroupData out;
    out.orders = {p, q, r};
    Isometry const A = Isometry::rotation(P, 2 * alpha);
    Isometry       B = Isometry::rotation(Q, 2 * beta);
    if (std::abs(std::abs((A * B).trace()) - 2 * std::cos(gamma)) > 1e-9) {
      B = Isometry::rotation(Q, -2 * beta);
    }
    Isometry const C = (A * B).inverse();
    out.rotation_generators = {A, B, C};
    out.vertices            = {P, Q, fixed_point(C)};
    return out;
  }

  double trace_lower_bound() {
    return 2 * std::cos(2 * pi / 7) + 1;
  }

  double delta_bound() {
    return 2 * std::acosh(std::cos(2 * pi / 7) + 0.5);
  }

  namespace {

    struct Syllable {
      int gen;
      int exp;
    };

    class TraceScan {
     public:
      TraceScan(TriangleGroupData const& data, TraceGapReport& report)
          : _report(report), _bound(trace_lower_bound()) {
        for (int g = 0; g < 3; ++g) {
          for (int e = 1; e < data.orders[g]; ++e) {
            _powers[g].push_back(power(data.rotation_generators[g], e));
          }
        }
      }

      // Returns |tr| if m is hyperbolic.
      std::optional<double> record(Isometry const& m) {
        auto const cls = classify_isometry(m);
        if (!std::holds_alternative<Hyperbolic>(cls)) {
          return std::nullopt;
        }
        double const t = std::abs(m.trace());
        ++_report.hyperbolic;
        if (t < _bound - 1e-9) {
          ++_report.violations;
        }
        _report.min_translation_length
            = std::min(_report.min_translation_length, std::get<Hyperbolic>(cls).length);
        return t;
      }

      Isometry const& syllable(Syllable s) const {
        return _powers[s.gen][s.exp - 1];
      }
      int exponents(int g) const {
        return static_cast<int>(_powers[g].size());
      }

      void enumerate(int depth, int prev, Isometry const& acc, std::vector<Syllable>& word) {
        if (!word.empty()) {
          ++_report.enumerated;
          if (auto t = record(acc); t && *t < _report.min_enumerated_trace) {
            _report.min_enumerated_trace = *t;
            _report.min_enumerated_word  = render(word);
          }
        }
        if (depth == 0) {
          return;
        }
        for (int g = 0; g < 3; ++g) {
          if (g == prev) {
            continue;
          }
          for (int e = 1; e <= exponents(g); ++e) {
            word.push_back({g, e});
            enumerate(depth - 1, g, acc * syllable({g, e}), word);
            word.pop_back();
          }
        }
      }

      static std::string render(std::vector<Syllable> const& w) {
        static constexpr char names[] = {'A', 'B', 'C'};
        std::string out;
        for (auto s : w) {
          if (!out.empty()) {
            out += ' ';
          }
          out += names[s.gen];
          if (s.exp != 1) {
            out += '^' + std::to_string(s.exp);
          }
        }
        return out;
      }

     private:
      TraceGapReport&                      _report;
      double                               _bound;
      std::array<std::vector<Isometry>, 3> _powers;
    };

  }  // namespace

  TraceGapReport verify_trace_gap(int           p,
                                  int           q,
                                  int           r,
                                  std::int64_t  samples,
                                  int           max_len,
                                  std::uint64_t seed,
                                  int           enumerate_len) {
    if (samples < 0 || max_len < 1 || enumerate_len < 0) {
      throw DomainError("sample budget and lengths must be positive");
    }
    auto const     data = von_dyck_generators(p, q, r);
    TraceGapReport report;
    report.orders                 = {p, q, r};
    constexpr double inf          = std::numeric_limits<double>::infinity();
    report.min_sampled_trace      = inf;
    report.min_enumerated_trace   = inf;
    report.min_translation_length = inf;
    TraceScan scan(data, report);

    std::mt19937_64                    rng(seed);
    std::uniform_int_distribution<int> length(1, max_len);
    std::uniform_int_distribution<int> first(0, 2);
    std::uniform_int_distribution<int> step(1, 2);
    for (std::int64_t i = 0; i < samples; ++i) {
      int const L   = length(rng);
      int       g   = first(rng);
      Isometry  acc = Isometry::identity();
      for (int k = 0; k < L; ++k) {
        if (k > 0) {
          g = (g + step(rng)) % 3;
        }
        std::uniform_int_distribution<int> exp(1, scan.exponents(g));
        acc = acc * scan.syllable({g, exp(rng)});
      }
      ++report.samples;
      if (auto t = scan.record(acc)) {
        report.min_sampled_trace = std::min(report.min_sampled_trace, *t);
      }
    }

    std::vector<Syllable> word;
    scan.enumerate(enumerate_len, -1, Isometry::identity(), word);
    report.min_observed_trace = std::min(report.min_sampled_trace, report.min_enumerated_trace);
    return report;
  }

  EpsilonWindow epsilon_window() {
    double const  delta = delta_bound();
    EpsilonWindow w;
    w.delta_over_8 = delta / 8;
    w.sinh_bound   = 0.5 * std::asinh(std::sinh(delta / 2) / std::numbers::sqrt2);
    if (w.delta_over_8 <= w.sinh_bound) {
      w.eps_max = w.delta_over_8;
      w.binding = "8*eps < delta";
    } else {
      w.eps_max = w.sinh_bound;
      w.binding = "sinh(2*eps) <= sinh(delta/2)/sqrt(2)";
    }
    return w;
  }

  double von_dyck_gap_constant(double eps) {
    double const eps_max = epsilon_window().eps_max;
    if (!(eps > 0) || eps > eps_max) {
      throw DomainError("eps must lie in (0, eps_max]");
    }
    return 1 / (12 * (2 + (4 * eps + 2 * pi / (3 * eps)) / delta_bound()));
  }

  OptimizedConstant optimized_constant() {
    double const eps = epsilon_window().eps_max * (1 - 1e-9);
    double const delta = delta_bound();
    return {eps, von_dyck_gap_constant(eps),
            std::sinh(2 * eps) <= std::sinh(delta / 2) / std::numbers::sqrt2};
  }

  double elliptic_displacement_radius(double theta, double t) {
    if (!(theta > 0) || theta > pi) {
      throw DomainError("theta must lie in (0, pi]");
    }
    if (!(t > 0)) {
      throw DomainError("displacement must be positive");
    }
    return std::asinh(std::sinh(t / 2) / std::sin(theta / 2));
  }

}  // namespace sclgap::hyperbolic
