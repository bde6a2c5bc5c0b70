#ifndef SCLGAP_REFERENCE_VALUES_HPP_
#define SCLGAP_REFERENCE_VALUES_HPP_

// Evaluated independently at 40 significant digits (mpmath) and frozen.
namespace sclgap::test::reference {

  // 2 arccosh(cos(2pi/7) + 1/2)
  inline constexpr double delta = 0.98398656220758220597842707787658;
  // 2 cos(2pi/7) + 1
  inline constexpr double trace_bound = 2.24697960371746706105000976800848;
  inline constexpr double delta_over_8 = 0.12299832027594777574730338473457;
  // (1/2) arcsinh(sinh(delta/2) / sqrt 2)
  inline constexpr double sinh_bound = 0.17730913467461389356803092436755;
  // 1 / (12 (2 + (4 eps + 2pi / (3 eps)) / delta)) at eps = delta/8
  inline constexpr double C_at_eps_max = 0.00420770298794772511769427587618;
  // the same at eps = (delta/8)(1 - 1e-9)
  inline constexpr double C_inside = 0.00420770298437739364875172967027;

}  // namespace sclgap::test::reference

#endif  // SCLGAP_REFERENCE_VALUES_HPP_
