#ifndef SCLGAP_HYPERBOLIC_HPP_
#define SCLGAP_HYPERBOLIC_HPP_

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <variant>

// Upper half-plane model throughout: points are complex numbers with
// positive imaginary part, isometries act by Moebius transformations.
namespace sclgap::hyperbolic {

  using Point = std::complex<double>;

  inline constexpr double default_trace_tol = 1e-9;

  // An element of PSL(2,R), stored as a determinant-one matrix. The sign
  // is not canonical; everything downstream uses |tr|.
  struct Isometry {
    double a = 1, b = 0, c = 0, d = 1;

    static Isometry identity() {
      return {};
    }
    // Rescales to determinant one; the determinant must be positive.
    static Isometry normalized(double a, double b, double c, double d);
    // Counterclockwise rotation by `angle` about `center`.
    static Isometry rotation(Point center, double angle);

    double   trace() const noexcept {
      return a + d;
    }
    double   det() const noexcept {
      return a * d - b * c;
    }
    Isometry inverse() const noexcept {
      return {d, -b, -c, a};
    }
    Point    apply(Point z) const {
      return (a * z + b) / (c * z + d);
    }
    // Distance to +-identity in the max norm.
    double   distance_to_identity() const noexcept;

    friend Isometry operator*(Isometry const& x, Isometry const& y) noexcept {
      return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
              x.c * y.b + x.d * y.d};
    }
  };

  Isometry power(Isometry const& m, int n);

  struct Elliptic {
    double angle;  // rotation angle in (0, 2pi)
  };
  struct Parabolic {};
  struct Hyperbolic {
    double length;  // translation length
  };
  using IsometryClass = std::variant<Elliptic, Parabolic, Hyperbolic>;

  IsometryClass classify_isometry(Isometry const& m, double tol = default_trace_tol);
  // Fixed point in the upper half-plane of an elliptic isometry.
  Point fixed_point(Isometry const& m);

  double hyperbolic_distance(Point z, Point w);

  // Rotations A, B, C by 2pi/p, 2pi/q, 2pi/r about the vertices of a
  // triangle with angles pi/p, pi/q, pi/r, with A B C = +-1.
  struct TriangleGroupData {
    std::array<int, 3>      orders;
    std::array<Isometry, 3> rotation_generators;
    std::array<Point, 3>    vertices;
  };

  // Throws DomainError unless 1/p + 1/q + 1/r < 1.
  TriangleGroupData von_dyck_generators(int p, int q, int r);

  // 2 arccosh(cos(2pi/7) + 1/2)
  double delta_bound();
  // 2 cos(2pi/7) + 1: least |trace| of a hyperbolic element in any von Dyck group.
  double trace_lower_bound();

  struct TraceGapReport {
    std::array<int, 3> orders{};
    std::int64_t       samples     = 0;
    std::int64_t       hyperbolic  = 0;
    std::int64_t       violations  = 0;  // hyperbolic with |tr| below the bound (less 1e-9)
    double             min_sampled_trace = 0;
    std::int64_t       enumerated        = 0;
    double             min_enumerated_trace = 0;
    std::string        min_enumerated_word;
    double             min_observed_trace = 0;
    double             min_translation_length = 0;
  };

  // Seeded random syllable words of 1..max_len syllables over A, B, C
  // (adjacent syllables use different generators), plus exhaustive
  // enumeration up to enumerate_len syllables.
  TraceGapReport verify_trace_gap(int           p,
                                  int           q,
                                  int           r,
                                  std::int64_t  samples,
                                  int           max_len,
                                  std::uint64_t seed,
                                  int           enumerate_len = 8);

  struct EpsilonWindow {
    double      eps_max;
    double      delta_over_8;
    double      sinh_bound;  // (1/2) arcsinh(sinh(delta/2) / sqrt 2)
    std::string binding;     // "8*eps < delta" or "sinh(2*eps) <= sinh(delta/2)/sqrt(2)"
  };

  EpsilonWindow epsilon_window();
  // 1 / (12 (2 + (4 eps + 2pi / (3 eps)) / delta)); throws DomainError
  // outside (0, eps_max].
  double von_dyck_gap_constant(double eps);

  struct OptimizedConstant {
    double eps;
    double C;
    bool   sinh_feasible;
  };
  // C is increasing on the window, so the supremum sits at eps_max; it is
  // taken just inside since the constraints are strict.
  OptimizedConstant optimized_constant();

  // r with sinh(t/2) = sinh(r) sin(theta/2): the distance from the centre of
  // a rotation by theta at which points move by t.
  double elliptic_displacement_radius(double theta, double t);

}  // namespace sclgap::hyperbolic

#endif  // SCLGAP_HYPERBOLIC_HPP_
