#pragma once

#include <string>

#include "shadowrank/geometry.hpp"

namespace shadowrank {

enum class ShadowKind { Area, Length };
enum class ShadowMethod { LosIntegral, ClosedForm, PlaneWaveSweep };

std::string shadow_kind_name(ShadowKind k);
std::string shadow_method_name(ShadowMethod m);

/// Cumulative mutual shadow area (m^2) or length (m) with the derived
/// degrees-of-freedom predictor: dof = value / lambda^2 for areas and
/// value / lambda for lengths.
struct ShadowEstimate {
    double value = 0.0;
    ShadowKind kind = ShadowKind::Area;
    double dof = 0.0;
    ShadowMethod method = ShadowMethod::LosIntegral;
    double rel_err_est = 0.0;
    bool degenerate = false;
};

/// Line-of-sight double surface integral of
/// |n'.(r-r')| |n.(r-r')| / |r-r'|^4 over source x observer, evaluated with
/// the cloud quadrature weights. One refinement step (delta -> 2 delta for
/// catalog scenes) provides rel_err_est. k enters only through dof.
ShadowEstimate shadow_area_los(const ScenePair& scene);

/// 2-D analogue with a |r-r'|^3 denominator over curve pairs; dof = L/lambda.
ShadowEstimate shadow_length_los(const ScenePair& scene);

/// Closed form for coaxial parallel discs of radius a separated by d:
/// pi^2/4 (sqrt(4a^2+d^2) - d)^2.
ShadowEstimate shadow_discs_closed_form(double a, double d, double wavelength);

/// Closed form for parallel lines of length a, spacing d, lateral shift h:
/// sqrt(d^2+(a+h)^2) - 2 sqrt(d^2+h^2) + sqrt(d^2+(a-h)^2).
/// The d = h = 0 boundary case returns 2a flagged as degenerate.
ShadowEstimate shadow_lines_closed_form(double a, double d, double h, double wavelength);

/// Direction quadrature for the plane-wave sweep: a product grid uniform in
/// (cos theta, phi) over the hemisphere of directions pointing from the
/// observer centroid toward the source centroid.
struct SweepSpec {
    int n_polar = 100;
    int n_azimuth = 100;
};

/// Integrates the projected overlap area A(k_hat) dOmega by convex-polygon
/// clipping. Requires flat convex catalog domains; discs are replaced by
/// equal-area regular 64-gons.
ShadowEstimate shadow_area_sweep(const ScenePair& scene, const SweepSpec& spec = {});

/// Geometric knee/DoF predictor: area/lambda^2 in 3-D, length/lambda in 2-D.
/// A 3-D result below 1 falls back to the shadow length of the scene's 2-D
/// cross-section. Doubled when vector_doubling is set.
double predict_knee(const ScenePair& scene, bool vector_doubling = false);

}  // namespace shadowrank
