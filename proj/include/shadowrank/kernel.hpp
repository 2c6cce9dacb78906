#pragma once

#include <Eigen/Core>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <optional>

#include "shadowrank/geometry.hpp"

namespace shadowrank {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Scalar Green kernel selector: exp(-j k R)/R in 3-D, H0^(2)(k R) in 2-D,
/// with the exp(+j omega t) time convention (outgoing phase -kR).
struct KernelSpec {
    int dim = 3;
    double wavenumber = 0.0;

    void validate() const;
};

Complex kernel_3d(double k, const Eigen::Vector3d& r, const Eigen::Vector3d& rp);
Complex kernel_2d(double k, const Eigen::Vector3d& r, const Eigen::Vector3d& rp);

inline constexpr std::size_t kDefaultDenseCap = std::size_t{4000} * 4000;

/// Interaction block Z with Z[i][j] = K(r_i, r'_j) over observer rows and
/// source columns. Either materialized (dense) or applied matrix-free
/// (operator); both evaluate entries through the same panel routine.
class InteractionBlock {
  public:
    enum class Representation { Dense, Operator };

    /// Materializes the block; throws SizeError when rows*cols exceeds cap.
    static InteractionBlock dense(const ScenePair& scene, std::size_t cap = kDefaultDenseCap);

    /// Matrix-free block; entries are recomputed per application in panels.
    static InteractionBlock matrix_free(const ScenePair& scene);

    /// Wraps an explicit matrix (synthetic spectra, tests).
    static InteractionBlock from_matrix(ComplexMatrix m);

    Eigen::Index rows() const { return rows_; }
    Eigen::Index cols() const { return cols_; }
    Representation representation() const { return rep_; }
    const ComplexMatrix& matrix() const;
    const ScenePair& scene() const;
    const KernelSpec& kernel() const { return kernel_; }

    ComplexVector apply(const ComplexVector& x) const;
    ComplexVector apply_adjoint(const ComplexVector& y) const;
    ComplexMatrix apply_block(const ComplexMatrix& x) const;
    ComplexMatrix apply_adjoint_block(const ComplexMatrix& y) const;

  private:
    InteractionBlock() = default;

    Representation rep_ = Representation::Dense;
    std::optional<ScenePair> scene_;
    KernelSpec kernel_;
    std::optional<ComplexMatrix> dense_;
    Eigen::Index rows_ = 0, cols_ = 0;
};

/// Spec-level alias for InteractionBlock::dense.
InteractionBlock assemble_dense(const ScenePair& scene, std::size_t cap = kDefaultDenseCap);

/// Writes `base`.bin (little-endian interleaved complex64, column-major) and
/// `base`.json ({rows, cols, k, dim}).
void dump_dense(const InteractionBlock& block, const std::filesystem::path& base);

namespace detail {
/// Fills a column-major panel of kernel entries: out[r + ld*c] =
/// K(obs[row0 + r], src[col0 + c]). Lives in a fast-math translation unit so
/// the 3-D phase evaluation vectorizes.
void fill_panel(const KernelSpec& spec, const PointCloud& obs, Eigen::Index row0,
                Eigen::Index nrows, const PointCloud& src, Eigen::Index col0, Eigen::Index ncols,
                Complex* out, Eigen::Index ld);
}  // namespace detail

}  // namespace shadowrank
