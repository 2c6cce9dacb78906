#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>

#include "json.hpp"

namespace shadowrank {

/// Sampled surface (3-D) or curve (2-D). Positions and normals are stored as
/// 3 x N columns; 2-D clouds live in the z = 0 plane. Weights are quadrature
/// weights in m^2 (surfaces) or m (curves), boundary_dist is the distance to
/// the domain boundary.
struct PointCloud {
    Eigen::Matrix3Xd points;
    Eigen::Matrix3Xd normals;
    Eigen::VectorXd weights;
    Eigen::VectorXd boundary_dist;
    int dim = 3;

    Eigen::Index size() const { return points.cols(); }
    double weight_sum() const { return weights.sum(); }
    Eigen::Vector3d centroid() const;

    /// Checks unit normals, positive weights and non-negative boundary
    /// distances; throws ParameterError on violation.
    void validate() const;
};

/// Applies the same rigid motion (rotation then translation) to a cloud.
PointCloud transformed(const PointCloud& pc, const Eigen::Matrix3d& rot,
                       const Eigen::Vector3d& shift);

enum class Shape {
    ParallelDiscs,
    ParallelPlates,
    SlantedPlates,
    CoplanarSquares,
    ParallelLines,
    PlateAndFrame,
};

std::string shape_name(Shape s);
Shape shape_from_name(const std::string& name);

/// Parametric description of one catalog geometry.
///   a     characteristic size (disc radius, plate/line edge length), m
///   d     separation, m
///   h     lateral shift (lines) or structure height (plate-and-frame), m
///   phi   slant angle, rad (slanted plates only)
///   delta sampling density, points per wavelength per dimension
struct GeometrySpec {
    Shape shape = Shape::ParallelDiscs;
    double a = 1.0;
    double d = 1.0;
    double h = 0.0;
    double phi = 0.0;
    double delta = 4.0;

    void validate() const;
    nlohmann::json to_json() const;
    static GeometrySpec from_json(const nlohmann::json& j);
};

/// A (source, observer) pair of clouds plus the wavelength the interaction is
/// evaluated at. Immutable after construction; `spec` records the catalog
/// entry the pair was built from, when there is one, and enables quadrature
/// refinement and the 2-D cross-section fallback.
struct ScenePair {
    PointCloud source;
    PointCloud observer;
    double wavelength = 1.0;
    int dim = 3;
    std::optional<GeometrySpec> spec;
    bool cross_section = false;  // built by cross_section_scene

    double min_distance() const;
    void validate() const;
};

/// Concentric-ring (body of revolution) sampling of a disc of given radius in
/// the z = 0 plane, normals +z. Ring and arc spacing are at most `spacing`;
/// weights are annulus-sector areas and sum to pi r^2 exactly.
PointCloud sample_disc(double radius, double spacing);

/// Cell-centered uniform grid on an edge_a x edge_b rectangle centered at the
/// origin in the z = 0 plane, normals +z, weights the cell areas.
PointCloud sample_rectangle(double edge_a, double edge_b, double spacing);

/// Uniform sampling of a segment of given length along x (centered at the
/// origin), normals +y, ambient dimension 2.
PointCloud sample_segment(double length, double spacing);

/// Builds the catalog scene for `spec` sampled at spacing wavelength/delta.
ScenePair build_scene(const GeometrySpec& spec, double wavelength);

/// 2-D reduction of a catalog scene used by the shadow-length fallback:
/// lines map to themselves, coplanar squares to their facing corner-edge
/// curves, surfaces to their central cross-section segments.
ScenePair cross_section_scene(const GeometrySpec& spec, double wavelength);

}  // namespace shadowrank
