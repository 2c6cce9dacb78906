#include "shadowrank/shadow.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "shadowrank/errors.hpp"
#include "shadowrank/parallel.hpp"

namespace shadowrank {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Double quadrature of |n'.(r-r')||n.(r-r')| / R^p with p = 4 (area) or
// p = 3 (length). Outer index owns its partial sum; partials are reduced in
// index order, so the result does not depend on the thread count.
double mutual_integral(const PointCloud& src, const PointCloud& obs, int power) {
    const Eigen::Index ns = src.size(), no = obs.size();
    std::vector<double> partial(static_cast<std::size_t>(ns), 0.0);
    parallel_for(static_cast<std::size_t>(ns), [&](std::size_t i) {
        const Eigen::Vector3d rs = src.points.col(static_cast<Eigen::Index>(i));
        const Eigen::Vector3d nsrc = src.normals.col(static_cast<Eigen::Index>(i));
        double acc = 0.0;
        for (Eigen::Index j = 0; j < no; ++j) {
            const Eigen::Vector3d diff = obs.points.col(j) - rs;
            const double r2 = diff.squaredNorm();
            const double proj = std::abs(diff.dot(nsrc)) * std::abs(diff.dot(obs.normals.col(j)));
            const double den = (power == 4) ? r2 * r2 : r2 * std::sqrt(r2);
            acc += obs.weights(j) * proj / den;
        }
        partial[i] = src.weights(static_cast<Eigen::Index>(i)) * acc;
    });
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

PointCloud decimated(const PointCloud& pc) {
    PointCloud out = pc;
    const Eigen::Index n = (pc.size() + 1) / 2;
    out.points.resize(3, n);
    out.normals.resize(3, n);
    out.weights.resize(n);
    out.boundary_dist.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        out.points.col(i) = pc.points.col(2 * i);
        out.normals.col(i) = pc.normals.col(2 * i);
        out.weights(i) = pc.weights(2 * i);
        out.boundary_dist(i) = pc.boundary_dist(2 * i);
    }
    out.weights *= pc.weights.sum() / out.weights.sum();
    return out;
}

ShadowEstimate los_estimate(const ScenePair& scene, ShadowKind kind) {
    const int power = (kind == ShadowKind::Area) ? 4 : 3;
    const double coarse = mutual_integral(scene.source, scene.observer, power);
    double fine = coarse, rel = 0.0;
    if (scene.spec) {
        GeometrySpec refined = *scene.spec;
        refined.delta *= 2.0;
        const ScenePair fine_scene = scene.cross_section
                                         ? cross_section_scene(refined, scene.wavelength)
                                         : build_scene(refined, scene.wavelength);
        fine = mutual_integral(fine_scene.source, fine_scene.observer, power);
        rel = std::abs(fine - coarse) / std::abs(fine);
    } else {
        const double dec =
            mutual_integral(decimated(scene.source), decimated(scene.observer), power);
        rel = std::abs(coarse - dec) / std::abs(coarse);
    }
    if (!(rel < 0.1))
        throw ConvergenceError("shadow quadrature refinement is not converging; "
                               "domains are nearly touching");
    ShadowEstimate e;
    e.value = fine;
    e.kind = kind;
    e.method = ShadowMethod::LosIntegral;
    e.rel_err_est = rel;
    e.dof = (kind == ShadowKind::Area) ? fine / (scene.wavelength * scene.wavelength)
                                       : fine / scene.wavelength;
    return e;
}

using Poly = std::vector<Eigen::Vector2d>;

double polygon_area(const Poly& p) {
    if (p.size() < 3) return 0.0;
    double s = 0.0;
    for (std::size_t i = 0, j = p.size() - 1; i < p.size(); j = i++)
        s += p[j].x() * p[i].y() - p[i].x() * p[j].y();
    return 0.5 * s;
}

void make_ccw(Poly& p) {
    if (polygon_area(p) < 0.0) std::reverse(p.begin(), p.end());
}

// Sutherland-Hodgman clip of `subject` by convex CCW polygon `clip`.
Poly clip_convex(const Poly& subject, const Poly& clip) {
    Poly out = subject;
    const std::size_t m = clip.size();
    for (std::size_t e2 = 0, e1 = m - 1; e2 < m && !out.empty(); e1 = e2++) {
        const Eigen::Vector2d a = clip[e1], b = clip[e2];
        const Eigen::Vector2d edge = b - a;
        Poly in;
        in.swap(out);
        const std::size_t n = in.size();
        for (std::size_t v2 = 0, v1 = n - 1; v2 < n; v1 = v2++) {
            const double s1 = edge.x() * (in[v1].y() - a.y()) - edge.y() * (in[v1].x() - a.x());
            const double s2 = edge.x() * (in[v2].y() - a.y()) - edge.y() * (in[v2].x() - a.x());
            const bool in1 = s1 >= 0.0, in2 = s2 >= 0.0;
            if (in1 != in2) {
                const double t = s1 / (s1 - s2);
                out.push_back(in[v1] + t * (in[v2] - in[v1]));
            }
            if (in2) out.push_back(in[v2]);
        }
    }
    return out;
}

using Poly3 = std::vector<Eigen::Vector3d>;

Poly3 regular_ngon(double radius_equal_area, int n, const Eigen::Vector3d& center) {
    // radius chosen so the n-gon area equals the disc area
    const double r = radius_equal_area * std::sqrt(2.0 * kPi / (n * std::sin(2.0 * kPi / n)));
    Poly3 p;
    p.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double phi = 2.0 * kPi * i / n;
        p.push_back(center + Eigen::Vector3d(r * std::cos(phi), r * std::sin(phi), 0.0));
    }
    return p;
}

Poly3 square_corners(double edge, const Eigen::Vector3d& center) {
    const double h = 0.5 * edge;
    return {center + Eigen::Vector3d(-h, -h, 0), center + Eigen::Vector3d(h, -h, 0),
            center + Eigen::Vector3d(h, h, 0), center + Eigen::Vector3d(-h, h, 0)};
}

std::pair<Poly3, Poly3> scene_polygons(const ScenePair& scene) {
    if (!scene.spec)
        throw GeometryError("shadow_area_sweep: scene has no catalog geometry attached");
    const GeometrySpec& g = *scene.spec;
    switch (g.shape) {
        case Shape::ParallelDiscs:
            return {regular_ngon(g.a, 64, {0, 0, 0}), regular_ngon(g.a, 64, {0, 0, g.d})};
        case Shape::ParallelPlates:
            return {square_corners(g.a, {0, 0, 0}), square_corners(g.a, {0, 0, g.d})};
        case Shape::SlantedPlates:
            return {square_corners(g.a, {0, 0, 0}),
                    square_corners(g.a, {g.a + g.d * std::cos(g.phi), 0, g.d * std::sin(g.phi)})};
        case Shape::CoplanarSquares:
            return {square_corners(g.a, {0, 0, 0}), square_corners(g.a, {2 * g.a, 2 * g.a, 0})};
        case Shape::ParallelLines:
            throw DimensionError("shadow_area_sweep: scene must be 3-D");
        case Shape::PlateAndFrame:
            throw GeometryError("shadow_area_sweep: frame domain is not convex");
    }
    throw GeometryError("shadow_area_sweep: unsupported shape");
}

double sweep_integral(const Poly3& ps, const Poly3& po, const Eigen::Vector3d& axis, int n_polar,
                      int n_azimuth) {
    // orthonormal frame around the hemisphere axis
    Eigen::Vector3d e1 = axis.unitOrthogonal();
    Eigen::Vector3d e2 = axis.cross(e1);
    std::vector<double> rows(static_cast<std::size_t>(n_polar), 0.0);
    parallel_for(static_cast<std::size_t>(n_polar), [&](std::size_t ic) {
        const double c = (static_cast<double>(ic) + 0.5) / n_polar;  // cos(theta) in (0,1)
        const double s = std::sqrt(1.0 - c * c);
        double acc = 0.0;
        for (int ia = 0; ia < n_azimuth; ++ia) {
            const double phi = 2.0 * kPi * (ia + 0.5) / n_azimuth;
            const Eigen::Vector3d k = s * (std::cos(phi) * e1 + std::sin(phi) * e2) + c * axis;
            // projection plane basis
            const Eigen::Vector3d p1 = k.unitOrthogonal();
            const Eigen::Vector3d p2 = k.cross(p1);
            Poly a, b;
            a.reserve(ps.size());
            b.reserve(po.size());
            for (const auto& v : ps) a.emplace_back(v.dot(p1), v.dot(p2));
            for (const auto& v : po) b.emplace_back(v.dot(p1), v.dot(p2));
            make_ccw(a);
            make_ccw(b);
            if (polygon_area(a) <= 0.0 || polygon_area(b) <= 0.0) continue;
            acc += std::abs(polygon_area(clip_convex(a, b)));
        }
        rows[ic] = acc;
    });
    double total = 0.0;
    for (double r : rows) total += r;
    return total * (1.0 / n_polar) * (2.0 * kPi / n_azimuth);
}

}  // namespace

std::string shadow_kind_name(ShadowKind k) { return k == ShadowKind::Area ? "area" : "length"; }

std::string shadow_method_name(ShadowMethod m) {
    switch (m) {
        case ShadowMethod::LosIntegral: return "los-integral";
        case ShadowMethod::ClosedForm: return "closed-form";
        case ShadowMethod::PlaneWaveSweep: return "plane-wave-sweep";
    }
    return "unknown";
}

ShadowEstimate shadow_area_los(const ScenePair& scene) {
    if (scene.dim != 3) throw DimensionError("shadow_area_los: scene must be 3-D");
    return los_estimate(scene, ShadowKind::Area);
}

ShadowEstimate shadow_length_los(const ScenePair& scene) {
    if (scene.dim != 2) throw DimensionError("shadow_length_los: scene must be 2-D");
    return los_estimate(scene, ShadowKind::Length);
}

ShadowEstimate shadow_discs_closed_form(double a, double d, double wavelength) {
    if (!(a > 0.0) || !(d >= 0.0) || !(wavelength > 0.0))
        throw ParameterError("shadow_discs_closed_form: need a > 0, d >= 0, lambda > 0");
    const double root = std::sqrt(4.0 * a * a + d * d) - d;
    ShadowEstimate e;
    e.value = 0.25 * kPi * kPi * root * root;
    e.kind = ShadowKind::Area;
    e.method = ShadowMethod::ClosedForm;
    e.dof = e.value / (wavelength * wavelength);
    return e;
}

ShadowEstimate shadow_lines_closed_form(double a, double d, double h, double wavelength) {
    if (!(a > 0.0) || !(d >= 0.0) || !(h >= 0.0) || !(wavelength > 0.0))
        throw ParameterError("shadow_lines_closed_form: need a > 0, d, h >= 0, lambda > 0");
    ShadowEstimate e;
    e.kind = ShadowKind::Length;
    e.method = ShadowMethod::ClosedForm;
    e.value = std::sqrt(d * d + (a + h) * (a + h)) - 2.0 * std::hypot(d, h) +
              std::sqrt(d * d + (a - h) * (a - h));
    e.degenerate = (d == 0.0 && h == 0.0);  // touching lines: formula value 2a
    e.dof = e.value / wavelength;
    return e;
}

ShadowEstimate shadow_area_sweep(const ScenePair& scene, const SweepSpec& spec) {
    if (scene.dim != 3) throw DimensionError("shadow_area_sweep: scene must be 3-D");
    if (spec.n_polar < 2 || spec.n_azimuth < 2)
        throw ParameterError("shadow_area_sweep: need at least a 2x2 direction grid");
    auto [ps, po] = scene_polygons(scene);
    Eigen::Vector3d cs = Eigen::Vector3d::Zero(), co = Eigen::Vector3d::Zero();
    for (const auto& v : ps) cs += v;
    for (const auto& v : po) co += v;
    cs /= static_cast<double>(ps.size());
    co /= static_cast<double>(po.size());
    Eigen::Vector3d axis = cs - co;
    if (axis.norm() == 0.0) axis = Eigen::Vector3d::UnitZ();
    axis.normalize();

    const double full = sweep_integral(ps, po, axis, spec.n_polar, spec.n_azimuth);
    const double half = sweep_integral(ps, po, axis, std::max(2, spec.n_polar / 2),
                                       std::max(2, spec.n_azimuth / 2));
    ShadowEstimate e;
    e.value = full;
    e.kind = ShadowKind::Area;
    e.method = ShadowMethod::PlaneWaveSweep;
    e.rel_err_est = (full > 0.0) ? std::abs(full - half) / full : 0.0;
    e.dof = full / (scene.wavelength * scene.wavelength);
    return e;
}

double predict_knee(const ScenePair& scene, bool vector_doubling) {
    const double factor = vector_doubling ? 2.0 : 1.0;
    if (scene.dim == 2) return factor * shadow_length_los(scene).dof;
    const double n_area = shadow_area_los(scene).dof;
    if (n_area >= 1.0) return factor * n_area;
    if (!scene.spec)
        throw GeometryError(
            "predict_knee: quasi-planar scene needs catalog geometry for the 2-D fallback");
    const ScenePair cross = cross_section_scene(*scene.spec, scene.wavelength);
    return factor * shadow_length_los(cross).dof;
}

}  // namespace shadowrank
