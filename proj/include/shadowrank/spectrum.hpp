#pragma once

#include <cstdint>
#include <optional>

#include "shadowrank/kernel.hpp"

namespace shadowrank {

/// Ordered singular-value spectrum of an interaction block, optionally with
/// the observer-side (U) and source-side (V) orthonormal columns. tol_floor
/// is the smallest sigma/sigma_1 ratio the method certifies.
struct SpectrumResult {
    enum class Method { Dense, Randomized };

    Eigen::VectorXd sigmas;
    std::optional<ComplexMatrix> u_cols;
    std::optional<ComplexMatrix> v_cols;
    Method method = Method::Dense;
    std::uint64_t seed = 0;
    double tol_floor = 0.0;
};

/// Full dense SVD (bidiagonal divide and conquer). Reconstruction error is
/// at machine-precision level; tol_floor is a few tens of eps.
SpectrumResult svd_dense(const InteractionBlock& block, bool want_vectors = true);

struct RandomizedOptions {
    int block_size = 64;
    int power_iterations = 2;
    int oversampling = 10;
    Eigen::Index max_rank = -1;  // default min(rows, cols)
    bool want_vectors = true;
};

/// Adaptive blocked randomized SVD: Gaussian test blocks, re-orthonormalized
/// power iterations, growing Q until the estimated sigma/sigma_1 falls below
/// target_tau/10 with `oversampling` guard columns beyond the certified
/// range. Deterministic for a fixed seed, independent of thread count.
SpectrumResult svd_randomized(const InteractionBlock& block, double target_tau,
                              std::uint64_t seed, const RandomizedOptions& opts = {});

/// Number of singular values with sigma_n/sigma_1 > tau (strict).
int rank_at(const SpectrumResult& spectrum, double tau);

/// Knee index of the normalized SV curve: bracketed max-distance-to-chord on
/// (n, log10(sigma_n/sigma_1)). The first pass runs the chord to
/// rank_at(1e-3); a second pass over [1, knee_1] refines from the left and
/// the integer midpoint of the two passes is returned. Throws DegenerateError
/// when the curve is chord-straight (no knee).
int detect_knee(const SpectrumResult& spectrum);

/// max(0, rank_at(tau) - round(knee_pred)).
int remainder_width(const SpectrumResult& spectrum, double knee_pred, double tau);

struct RankReport {
    double tau = 0.0;
    int rank = 0;
    double knee_pred = 0.0;
    int knee_detected = 0;
    int remainder = 0;
};

RankReport rank_report(const SpectrumResult& spectrum, double knee_pred, double tau);

}  // namespace shadowrank
