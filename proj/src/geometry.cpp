#include "shadowrank/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "shadowrank/errors.hpp"

namespace shadowrank {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

int cell_count(double extent, double spacing) {
    return std::max(1, static_cast<int>(std::ceil(extent / spacing - 1e-12)));
}

void append_segment(PointCloud& pc, double length, double spacing, const Eigen::Vector3d& center,
                    const Eigen::Vector3d& tangent, const Eigen::Vector3d& normal) {
    const int n = cell_count(length, spacing);
    const double dl = length / n;
    const Eigen::Index base = pc.points.cols();
    pc.points.conservativeResize(3, base + n);
    pc.normals.conservativeResize(3, base + n);
    pc.weights.conservativeResize(base + n);
    pc.boundary_dist.conservativeResize(base + n);
    for (int i = 0; i < n; ++i) {
        const double t = (i + 0.5) * dl - 0.5 * length;
        pc.points.col(base + i) = center + t * tangent;
        pc.normals.col(base + i) = normal;
        pc.weights(base + i) = dl;
        pc.boundary_dist(base + i) = std::min(t + 0.5 * length, 0.5 * length - t);
    }
}

PointCloud empty_cloud(int dim) {
    PointCloud pc;
    pc.points.resize(3, 0);
    pc.normals.resize(3, 0);
    pc.weights.resize(0);
    pc.boundary_dist.resize(0);
    pc.dim = dim;
    return pc;
}

PointCloud shifted(PointCloud pc, const Eigen::Vector3d& t) {
    pc.points.colwise() += t;
    return pc;
}

}  // namespace

Eigen::Vector3d PointCloud::centroid() const {
    if (size() == 0) throw ParameterError("centroid of empty cloud");
    return (points * weights).eval() / weights.sum();
}

void PointCloud::validate() const {
    for (Eigen::Index i = 0; i < size(); ++i) {
        if (std::abs(normals.col(i).norm() - 1.0) > 1e-12)
            throw ParameterError("point cloud normal is not unit length");
        if (!(weights(i) > 0.0)) throw ParameterError("point cloud weight must be positive");
        if (boundary_dist(i) < 0.0) throw ParameterError("negative boundary distance");
    }
}

PointCloud transformed(const PointCloud& pc, const Eigen::Matrix3d& rot,
                       const Eigen::Vector3d& shift) {
    PointCloud out = pc;
    out.points = (rot * pc.points).colwise() + shift;
    out.normals = rot * pc.normals;
    return out;
}

std::string shape_name(Shape s) {
    switch (s) {
        case Shape::ParallelDiscs: return "parallel-discs";
        case Shape::ParallelPlates: return "parallel-plates";
        case Shape::SlantedPlates: return "slanted-plates";
        case Shape::CoplanarSquares: return "coplanar-squares";
        case Shape::ParallelLines: return "parallel-lines";
        case Shape::PlateAndFrame: return "plate-and-frame";
    }
    throw ParameterError("unknown shape");
}

Shape shape_from_name(const std::string& name) {
    if (name == "parallel-discs") return Shape::ParallelDiscs;
    if (name == "parallel-plates") return Shape::ParallelPlates;
    if (name == "slanted-plates") return Shape::SlantedPlates;
    if (name == "coplanar-squares") return Shape::CoplanarSquares;
    if (name == "parallel-lines") return Shape::ParallelLines;
    if (name == "plate-and-frame") return Shape::PlateAndFrame;
    throw ParameterError("unknown shape name: " + name);
}

void GeometrySpec::validate() const {
    if (!(a > 0.0)) throw ParameterError("geometry: a must be positive");
    if (!(d >= 0.0)) throw ParameterError("geometry: d must be non-negative");
    if (!(h >= 0.0)) throw ParameterError("geometry: h must be non-negative");
    if (!(delta >= 2.0)) throw ParameterError("geometry: delta must be at least 2 (Nyquist)");
    if (shape == Shape::SlantedPlates && !(phi > 0.0 && phi <= kPi / 2.0 + 1e-12))
        throw ParameterError("geometry: slant angle must lie in (0, pi/2]");
}

nlohmann::json GeometrySpec::to_json() const {
    return {{"shape", shape_name(shape)}, {"a", a}, {"d", d},
            {"h", h},                     {"phi", phi}, {"delta", delta}};
}

GeometrySpec GeometrySpec::from_json(const nlohmann::json& j) {
    GeometrySpec s;
    if (!j.contains("shape")) throw ParameterError("geometry json: missing \"shape\"");
    s.shape = shape_from_name(j.at("shape").get<std::string>());
    s.a = j.value("a", s.a);
    s.d = j.value("d", s.d);
    s.h = j.value("h", s.h);
    s.phi = j.value("phi", s.phi);
    s.delta = j.value("delta", s.delta);
    s.validate();
    return s;
}

double ScenePair::min_distance() const {
    if (spec) {
        const GeometrySpec& g = *spec;
        switch (g.shape) {
            case Shape::ParallelDiscs:
            case Shape::ParallelPlates:
            case Shape::SlantedPlates: return g.d;
            case Shape::CoplanarSquares: return std::sqrt(2.0) * g.a;
            case Shape::ParallelLines:
                return std::hypot(g.d, std::max(0.0, g.h - g.a));
            case Shape::PlateAndFrame: return std::hypot(g.h, 0.5 * g.a);
        }
    }
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < source.size(); ++i)
        for (Eigen::Index j = 0; j < observer.size(); ++j)
            best = std::min(best, (source.points.col(i) - observer.points.col(j)).norm());
    return best;
}

void ScenePair::validate() const {
    if (!(wavelength > 0.0)) throw ParameterError("scene: wavelength must be positive");
    if (source.dim != dim || observer.dim != dim)
        throw DimensionError("scene: cloud dimensions disagree with scene dimension");
    source.validate();
    observer.validate();
    if (!(min_distance() > 0.0)) throw OverlapError("scene: domains touch");
}

PointCloud sample_disc(double radius, double spacing) {
    if (!(radius > 0.0) || !(spacing > 0.0))
        throw ParameterError("sample_disc: radius and spacing must be positive");
    const int n_rings = cell_count(radius, spacing);
    const double dr = radius / n_rings;
    Eigen::Index total = 0;
    for (int i = 0; i < n_rings; ++i) {
        const double rho = (i + 0.5) * dr;
        total += std::max(1, static_cast<int>(std::ceil(2.0 * kPi * rho / spacing)));
    }
    PointCloud pc = empty_cloud(3);
    pc.points.resize(3, total);
    pc.normals.resize(3, total);
    pc.weights.resize(total);
    pc.boundary_dist.resize(total);
    Eigen::Index idx = 0;
    for (int i = 0; i < n_rings; ++i) {
        const double rho = (i + 0.5) * dr;
        const int n_phi = std::max(1, static_cast<int>(std::ceil(2.0 * kPi * rho / spacing)));
        const double sector = 2.0 * kPi * rho * dr / n_phi;  // annulus area / sectors
        for (int j = 0; j < n_phi; ++j) {
            const double phi = 2.0 * kPi * (j + 0.5) / n_phi;
            pc.points.col(idx) = Eigen::Vector3d(rho * std::cos(phi), rho * std::sin(phi), 0.0);
            pc.normals.col(idx) = Eigen::Vector3d::UnitZ();
            pc.weights(idx) = sector;
            pc.boundary_dist(idx) = radius - rho;
            ++idx;
        }
    }
    return pc;
}

PointCloud sample_rectangle(double edge_a, double edge_b, double spacing) {
    if (!(edge_a > 0.0) || !(edge_b > 0.0) || !(spacing > 0.0))
        throw ParameterError("sample_rectangle: edges and spacing must be positive");
    const int nx = cell_count(edge_a, spacing);
    const int ny = cell_count(edge_b, spacing);
    const double dx = edge_a / nx, dy = edge_b / ny;
    PointCloud pc = empty_cloud(3);
    pc.points.resize(3, static_cast<Eigen::Index>(nx) * ny);
    pc.normals.resize(3, pc.points.cols());
    pc.weights = Eigen::VectorXd::Constant(pc.points.cols(), dx * dy);
    pc.boundary_dist.resize(pc.points.cols());
    Eigen::Index idx = 0;
    for (int i = 0; i < nx; ++i) {
        const double x = (i + 0.5) * dx - 0.5 * edge_a;
        for (int j = 0; j < ny; ++j) {
            const double y = (j + 0.5) * dy - 0.5 * edge_b;
            pc.points.col(idx) = Eigen::Vector3d(x, y, 0.0);
            pc.normals.col(idx) = Eigen::Vector3d::UnitZ();
            pc.boundary_dist(idx) =
                std::min(std::min(x + 0.5 * edge_a, 0.5 * edge_a - x),
                         std::min(y + 0.5 * edge_b, 0.5 * edge_b - y));
            ++idx;
        }
    }
    return pc;
}

PointCloud sample_segment(double length, double spacing) {
    if (!(length > 0.0) || !(spacing > 0.0))
        throw ParameterError("sample_segment: length and spacing must be positive");
    PointCloud pc = empty_cloud(2);
    append_segment(pc, length, spacing, Eigen::Vector3d::Zero(), Eigen::Vector3d::UnitX(),
                   Eigen::Vector3d::UnitY());
    return pc;
}

namespace {

PointCloud frame_cloud(double a, double spacing) {
    // coplanar square frame: outer edge 3a, inner hole edge 2a
    const int n = cell_count(3.0 * a, spacing);
    const double dc = 3.0 * a / n;
    PointCloud pc = empty_cloud(3);
    std::vector<Eigen::Vector3d> pts;
    std::vector<double> bd;
    for (int i = 0; i < n; ++i) {
        const double x = (i + 0.5) * dc - 1.5 * a;
        for (int j = 0; j < n; ++j) {
            const double y = (j + 0.5) * dc - 1.5 * a;
            if (std::max(std::abs(x), std::abs(y)) <= a) continue;  // hole
            pts.emplace_back(x, y, 0.0);
            const double to_outer = 1.5 * a - std::max(std::abs(x), std::abs(y));
            const double to_inner = std::max(std::abs(x), std::abs(y)) - a;
            bd.push_back(std::min(to_outer, to_inner));
        }
    }
    pc.points.resize(3, static_cast<Eigen::Index>(pts.size()));
    pc.normals.resize(3, pc.points.cols());
    pc.weights = Eigen::VectorXd::Constant(pc.points.cols(), dc * dc);
    pc.boundary_dist.resize(pc.points.cols());
    for (Eigen::Index k = 0; k < pc.points.cols(); ++k) {
        pc.points.col(k) = pts[static_cast<std::size_t>(k)];
        pc.normals.col(k) = Eigen::Vector3d::UnitZ();
        pc.boundary_dist(k) = bd[static_cast<std::size_t>(k)];
    }
    return pc;
}

}  // namespace

ScenePair build_scene(const GeometrySpec& spec, double wavelength) {
    spec.validate();
    if (!(wavelength > 0.0)) throw ParameterError("build_scene: wavelength must be positive");
    const double spacing = wavelength / spec.delta;
    ScenePair scene;
    scene.wavelength = wavelength;
    scene.spec = spec;
    switch (spec.shape) {
        case Shape::ParallelDiscs: {
            scene.dim = 3;
            scene.source = sample_disc(spec.a, spacing);
            scene.observer = shifted(sample_disc(spec.a, spacing), {0.0, 0.0, spec.d});
            break;
        }
        case Shape::ParallelPlates: {
            scene.dim = 3;
            scene.source = sample_rectangle(spec.a, spec.a, spacing);
            scene.observer = shifted(sample_rectangle(spec.a, spec.a, spacing), {0.0, 0.0, spec.d});
            break;
        }
        case Shape::SlantedPlates: {
            // plates stay parallel; the near-edge gap vector d(cos phi, 0, sin phi)
            // keeps the closest-edge distance equal to d for every slant angle
            scene.dim = 3;
            scene.source = sample_rectangle(spec.a, spec.a, spacing);
            scene.observer = shifted(
                sample_rectangle(spec.a, spec.a, spacing),
                {spec.a + spec.d * std::cos(spec.phi), 0.0, spec.d * std::sin(spec.phi)});
            break;
        }
        case Shape::CoplanarSquares: {
            scene.dim = 3;
            scene.source = sample_rectangle(spec.a, spec.a, spacing);
            scene.observer =
                shifted(sample_rectangle(spec.a, spec.a, spacing), {2.0 * spec.a, 2.0 * spec.a, 0.0});
            break;
        }
        case Shape::ParallelLines: {
            scene.dim = 2;
            scene.source = sample_segment(spec.a, spacing);
            scene.observer = shifted(sample_segment(spec.a, spacing), {spec.h, spec.d, 0.0});
            break;
        }
        case Shape::PlateAndFrame: {
            scene.dim = 3;
            scene.source = shifted(sample_rectangle(spec.a, spec.a, spacing), {0.0, 0.0, spec.h});
            scene.observer = frame_cloud(spec.a, spacing);
            break;
        }
    }
    const double guard = wavelength / 100.0;
    if (!(scene.min_distance() > guard))
        throw OverlapError("build_scene: domains intersect or are closer than lambda/100");
    scene.validate();
    return scene;
}

ScenePair cross_section_scene(const GeometrySpec& spec, double wavelength) {
    spec.validate();
    const double spacing = wavelength / spec.delta;
    ScenePair scene;
    scene.wavelength = wavelength;
    scene.dim = 2;
    scene.spec = spec;
    scene.cross_section = true;
    switch (spec.shape) {
        case Shape::ParallelLines: {
            ScenePair s = build_scene(spec, wavelength);
            s.cross_section = true;
            return s;
        }
        case Shape::ParallelDiscs: {
            scene.source = sample_segment(2.0 * spec.a, spacing);
            scene.observer = shifted(sample_segment(2.0 * spec.a, spacing), {0.0, spec.d, 0.0});
            break;
        }
        case Shape::ParallelPlates: {
            scene.source = sample_segment(spec.a, spacing);
            scene.observer = shifted(sample_segment(spec.a, spacing), {0.0, spec.d, 0.0});
            break;
        }
        case Shape::SlantedPlates: {
            scene.source = sample_segment(spec.a, spacing);
            scene.observer = shifted(sample_segment(spec.a, spacing),
                                     {spec.a + spec.d * std::cos(spec.phi),
                                      spec.d * std::sin(spec.phi), 0.0});
            break;
        }
        case Shape::CoplanarSquares: {
            // facing corner-edge curves of the two squares, in the common plane
            const double a = spec.a;
            PointCloud src = empty_cloud(2);
            append_segment(src, a, spacing, {0.5 * a, 0.0, 0.0}, Eigen::Vector3d::UnitY(),
                           Eigen::Vector3d::UnitX());
            append_segment(src, a, spacing, {0.0, 0.5 * a, 0.0}, Eigen::Vector3d::UnitX(),
                           Eigen::Vector3d::UnitY());
            PointCloud obs = empty_cloud(2);
            append_segment(obs, a, spacing, {1.5 * a, 2.0 * a, 0.0}, Eigen::Vector3d::UnitY(),
                           Eigen::Vector3d::UnitX());
            append_segment(obs, a, spacing, {2.0 * a, 1.5 * a, 0.0}, Eigen::Vector3d::UnitX(),
                           Eigen::Vector3d::UnitY());
            scene.source = src;
            scene.observer = obs;
            break;
        }
        case Shape::PlateAndFrame: {
            const double a = spec.a;
            scene.source = shifted(sample_segment(a, spacing), {0.0, spec.h, 0.0});
            PointCloud obs = empty_cloud(2);
            append_segment(obs, 0.5 * a, spacing, {1.25 * a, 0.0, 0.0}, Eigen::Vector3d::UnitX(),
                           Eigen::Vector3d::UnitY());
            append_segment(obs, 0.5 * a, spacing, {-1.25 * a, 0.0, 0.0}, Eigen::Vector3d::UnitX(),
                           Eigen::Vector3d::UnitY());
            scene.observer = obs;
            break;
        }
    }
    scene.validate();
    return scene;
}

}  // namespace shadowrank
