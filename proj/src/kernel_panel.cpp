// Panel evaluation of kernel entries. Compiled with -ffast-math so the
// sqrt/sin/cos loops vectorize through libmvec; everything else in the
// library keeps strict FP semantics.

#include <cmath>
#include <vector>

#include "shadowrank/bessel.hpp"
#include "shadowrank/kernel.hpp"

namespace shadowrank::detail {

void fill_panel(const KernelSpec& spec, const PointCloud& obs, Eigen::Index row0,
                Eigen::Index nrows, const PointCloud& src, Eigen::Index col0, Eigen::Index ncols,
                Complex* out, Eigen::Index ld) {
    const double k = spec.wavenumber;
    const double* op = obs.points.data();
    const double* sp = src.points.data();
    std::vector<double> radius(static_cast<std::size_t>(nrows));
    std::vector<double> phase(static_cast<std::size_t>(nrows));
    std::vector<double> cosv(static_cast<std::size_t>(nrows));
    std::vector<double> sinv(static_cast<std::size_t>(nrows));
    for (Eigen::Index c = 0; c < ncols; ++c) {
        const double sx = sp[3 * (col0 + c)], sy = sp[3 * (col0 + c) + 1],
                     sz = sp[3 * (col0 + c) + 2];
        for (Eigen::Index r = 0; r < nrows; ++r) {
            const double dx = op[3 * (row0 + r)] - sx;
            const double dy = op[3 * (row0 + r) + 1] - sy;
            const double dz = op[3 * (row0 + r) + 2] - sz;
            radius[static_cast<std::size_t>(r)] = std::sqrt(dx * dx + dy * dy + dz * dz);
        }
        Complex* col = out + ld * c;
        if (spec.dim == 3) {
            for (Eigen::Index r = 0; r < nrows; ++r)
                phase[static_cast<std::size_t>(r)] = -k * radius[static_cast<std::size_t>(r)];
            for (Eigen::Index r = 0; r < nrows; ++r)
                cosv[static_cast<std::size_t>(r)] = std::cos(phase[static_cast<std::size_t>(r)]);
            for (Eigen::Index r = 0; r < nrows; ++r)
                sinv[static_cast<std::size_t>(r)] = std::sin(phase[static_cast<std::size_t>(r)]);
            for (Eigen::Index r = 0; r < nrows; ++r) {
                const double inv = 1.0 / radius[static_cast<std::size_t>(r)];
                col[r] = Complex(cosv[static_cast<std::size_t>(r)] * inv,
                                 sinv[static_cast<std::size_t>(r)] * inv);
            }
        } else {
            for (Eigen::Index r = 0; r < nrows; ++r)
                col[r] = hankel0_2(k * radius[static_cast<std::size_t>(r)]);
        }
    }
}

}  // namespace shadowrank::detail
