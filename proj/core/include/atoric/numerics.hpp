#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

#include "atoric/jet2.hpp"
#include "atoric/labels.hpp"

namespace atoric::numerics {

/// tau evaluated as the double nearest 2*pi.
inline constexpr double kTau = 6.283185307179586;

class BranchCutError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

double evaluate(const Coeff& c);
double evaluate(const Jet2& f, double x, double y);
std::complex<double> evaluate(const JetMap& e, double x, double y);

/// The logarithm with ln+(1) = 0 and branch cut on the positive imaginary
/// axis: arg in (-3pi/2, pi/2). Throws BranchCutError on the cut or at 0.
std::complex<double> ln_plus(std::complex<double> c);

/// K+(c) = -Im(c ln+ c - c), extended by 0 at c = 0.
double k_plus(std::complex<double> c);

/// Square grid {(i + 1/2) h : |(i + 1/2) h| <= half_width} in each axis.
/// The half-integer offset keeps the grid off both coordinate axes.
struct GridSpec {
  double h = 1e-2;
  double half_width = 0.1;

  std::vector<double> axis() const;
};

struct SampledFunction {
  GridSpec grid;
  std::vector<double> xs;
  std::vector<double> ys;
  std::vector<double> values;  // values[iy * xs.size() + ix]

  double at(std::size_t ix, std::size_t iy) const { return values[iy * xs.size() + ix]; }
};

/// Samples A^2 = (S~ + sum_u K+ o E_u) / (2 pi) on the grid. Every E_u is a
/// polynomial germ fixing 0; throws BranchCutError if a grid point maps onto
/// the cut of some E_u.
SampledFunction regularized_action(const Jet2& s_tilde, std::span<const JetMap> e_list, const GridSpec& grid);

/// Which grid points the x-derivative stencils use. kLeft / kRight restrict
/// to x < 0 / x > 0, i.e. to one side of a vertical cut.
enum class StencilSide { kCentral, kLeft, kRight };

/// Taylor coefficients at 0 of the sampled function, by tensor-product finite
/// differences on the half-integer grid with one Richardson step (stencils
/// scaled by 3). Coefficients are converted exactly from double to rational.
Jet2 taylor_coefficients(const SampledFunction& f, int order, StencilSide side = StencilSide::kCentral);

/// Recovers S~ = 2 pi A^2 - sum_u K+ o E_u from samples and returns
/// Tl_0[S~ o E_u^{-1}] for every u. Requires order <= 4 and h <= 1e-2.
std::vector<RelativeActionSeries> extract_relative_series(const SampledFunction& a2, std::span<const JetMap> e_list,
                                                          int order, StencilSide side = StencilSide::kCentral);

/// Largest |coefficient difference| over all monomials, tau evaluated numerically.
double max_coefficient_error(const Jet2& a, const Jet2& b);

}  // namespace atoric::numerics
