#include "shadowrank/kernel.hpp"

#include <fstream>
#include <vector>

#include "json.hpp"
#include "shadowrank/errors.hpp"
#include "shadowrank/parallel.hpp"

namespace shadowrank {

namespace {

constexpr Eigen::Index kPanelRows = 128;

KernelSpec spec_for(const ScenePair& scene) {
    KernelSpec ks;
    ks.dim = scene.dim;
    ks.wavenumber = 2.0 * 3.14159265358979323846264338327950288 / scene.wavelength;
    return ks;
}

Complex point_kernel(const KernelSpec& spec, const Eigen::Vector3d& r, const Eigen::Vector3d& rp) {
    if ((r - rp).squaredNorm() == 0.0)
        throw SingularityError("kernel evaluated at zero separation");
    PointCloud obs, src;
    obs.points = r;
    src.points = rp;
    Complex out;
    detail::fill_panel(spec, obs, 0, 1, src, 0, 1, &out, 1);
    return out;
}

}  // namespace

void KernelSpec::validate() const {
    if (dim != 2 && dim != 3) throw DimensionError("kernel: dim must be 2 or 3");
    if (!(wavenumber > 0.0)) throw ParameterError("kernel: wavenumber must be positive");
}

Complex kernel_3d(double k, const Eigen::Vector3d& r, const Eigen::Vector3d& rp) {
    KernelSpec ks{3, k};
    ks.validate();
    return point_kernel(ks, r, rp);
}

Complex kernel_2d(double k, const Eigen::Vector3d& r, const Eigen::Vector3d& rp) {
    KernelSpec ks{2, k};
    ks.validate();
    return point_kernel(ks, r, rp);
}

InteractionBlock InteractionBlock::dense(const ScenePair& scene, std::size_t cap) {
    scene.validate();
    const auto rows = scene.observer.size(), cols = scene.source.size();
    if (static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols) > cap)
        throw SizeError("assemble_dense: block exceeds the dense entry cap");
    InteractionBlock b;
    b.rep_ = Representation::Dense;
    b.scene_ = scene;
    b.kernel_ = spec_for(scene);
    b.rows_ = rows;
    b.cols_ = cols;
    ComplexMatrix m(rows, cols);
    const Eigen::Index ntiles = (rows + kPanelRows - 1) / kPanelRows;
    parallel_for(static_cast<std::size_t>(ntiles), [&](std::size_t t) {
        const Eigen::Index r0 = static_cast<Eigen::Index>(t) * kPanelRows;
        const Eigen::Index nr = std::min(kPanelRows, rows - r0);
        detail::fill_panel(b.kernel_, scene.observer, r0, nr, scene.source, 0, cols,
                           m.data() + r0, rows);
    });
    b.dense_ = std::move(m);
    return b;
}

InteractionBlock InteractionBlock::matrix_free(const ScenePair& scene) {
    scene.validate();
    InteractionBlock b;
    b.rep_ = Representation::Operator;
    b.scene_ = scene;
    b.kernel_ = spec_for(scene);
    b.rows_ = scene.observer.size();
    b.cols_ = scene.source.size();
    return b;
}

InteractionBlock InteractionBlock::from_matrix(ComplexMatrix m) {
    InteractionBlock b;
    b.rep_ = Representation::Dense;
    b.rows_ = m.rows();
    b.cols_ = m.cols();
    b.dense_ = std::move(m);
    return b;
}

const ComplexMatrix& InteractionBlock::matrix() const {
    if (!dense_) throw SizeError("block has no dense representation");
    return *dense_;
}

const ScenePair& InteractionBlock::scene() const {
    if (!scene_) throw MissingDataError("block has no scene attached");
    return *scene_;
}

ComplexMatrix InteractionBlock::apply_block(const ComplexMatrix& x) const {
    if (x.rows() != cols_) throw ShapeError("apply: operand rows must equal block columns");
    if (dense_) return *dense_ * x;
    ComplexMatrix y(rows_, x.cols());
    const Eigen::Index ntiles = (rows_ + kPanelRows - 1) / kPanelRows;
    parallel_for(static_cast<std::size_t>(ntiles), [&](std::size_t t) {
        const Eigen::Index r0 = static_cast<Eigen::Index>(t) * kPanelRows;
        const Eigen::Index nr = std::min(kPanelRows, rows_ - r0);
        ComplexMatrix panel(nr, cols_);
        detail::fill_panel(kernel_, scene_->observer, r0, nr, scene_->source, 0, cols_,
                           panel.data(), nr);
        y.middleRows(r0, nr).noalias() = panel * x;
    });
    return y;
}

ComplexMatrix InteractionBlock::apply_adjoint_block(const ComplexMatrix& y) const {
    if (y.rows() != rows_) throw ShapeError("apply_adjoint: operand rows must equal block rows");
    if (dense_) return dense_->adjoint() * y;
    ComplexMatrix x(cols_, y.cols());
    const Eigen::Index ntiles = (cols_ + kPanelRows - 1) / kPanelRows;
    parallel_for(static_cast<std::size_t>(ntiles), [&](std::size_t t) {
        const Eigen::Index c0 = static_cast<Eigen::Index>(t) * kPanelRows;
        const Eigen::Index nc = std::min(kPanelRows, cols_ - c0);
        // panel of Z rows x tile-columns; adjoint applied on the fly
        ComplexMatrix panel(rows_, nc);
        detail::fill_panel(kernel_, scene_->observer, 0, rows_, scene_->source, c0, nc,
                           panel.data(), rows_);
        x.middleRows(c0, nc).noalias() = panel.adjoint() * y;
    });
    return x;
}

ComplexVector InteractionBlock::apply(const ComplexVector& x) const {
    return apply_block(x).col(0);
}

ComplexVector InteractionBlock::apply_adjoint(const ComplexVector& y) const {
    return apply_adjoint_block(y).col(0);
}

InteractionBlock assemble_dense(const ScenePair& scene, std::size_t cap) {
    return InteractionBlock::dense(scene, cap);
}

void dump_dense(const InteractionBlock& block, const std::filesystem::path& base) {
    const ComplexMatrix& m = block.matrix();
    std::filesystem::path bin = base;
    bin += ".bin";
    std::ofstream out(bin, std::ios::binary);
    if (!out) throw Error("dump_dense: cannot open " + bin.string());
    std::vector<float> buf(2 * static_cast<std::size_t>(m.rows()));
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            buf[2 * static_cast<std::size_t>(r)] = static_cast<float>(m(r, c).real());
            buf[2 * static_cast<std::size_t>(r) + 1] = static_cast<float>(m(r, c).imag());
        }
        out.write(reinterpret_cast<const char*>(buf.data()),
                  static_cast<std::streamsize>(buf.size() * sizeof(float)));
    }
    nlohmann::json sidecar = {{"rows", m.rows()},
                              {"cols", m.cols()},
                              {"k", block.kernel().wavenumber},
                              {"dim", block.kernel().dim}};
    std::filesystem::path js = base;
    js += ".json";
    std::ofstream meta(js);
    meta << sidecar.dump(2) << "\n";
}

}  // namespace shadowrank
