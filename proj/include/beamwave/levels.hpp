#ifndef BEAMWAVE_LEVELS_HPP
#define BEAMWAVE_LEVELS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "beamwave/counting.hpp"
#include "beamwave/model.hpp"

namespace beamwave {

/// One integer-level crossing L(theta_k) = k on a continuity branch.
struct SolutionCandidate {
    int k;           ///< level
    double theta;    ///< root, strictly inside its branch
    int branch;      ///< continuity-subinterval index (0 or 1)
    double residual; ///< |L(theta) - k|
};

struct CountResult {
    ModelParams params;
    std::vector<SolutionCandidate> candidates; ///< ascending k within each branch
    int count;
    int lemma_bound;
    bool window_empty;
};

/// Solves L(theta) = k on (lo, hi) by monotone bisection to |L - k| <= 1e-10.
/// Throws bracket_error when the level is not bracketed by the branch.
SolutionCandidate solve_level(const ModelParams& params, int k, double lo, double hi,
                              int branch_index = 0);

/// Floor-difference counting: on each continuity branch (alpha, beta) the
/// number of one-troughed waves equals the number of integers strictly between
/// the one-sided endpoint limits (L is strictly decreasing), each then solved
/// for its root. Levels within 1e-9 of an endpoint limit are excluded
/// (open-interval semantics). Throws numeric_error if the limits ever imply
/// seven or more crossings.
CountResult count_levels(const ModelParams& params);
CountResult count_levels(const ModelParams& params, double theta_min_value);

/// p0(c) = 4 (c^2 - 1) / c^4; sign of theta1: theta1 < 0 iff p > p0.
double p0(double c);

/// Strip threshold p_k = 1 - ((k^2-1)/(k^2+1))^2, k >= 2; equivalent to
/// kappa2/kappa1 < k.
double p_threshold(int k);

/// Sharpest lemma bound at (c,p): with k the smallest integer exceeding
/// kappa2/kappa1, returns 2(ceil(k/2)-1) for p >= p0 and ceil((k+1)/2)-1
/// otherwise, capped at 6.
int lemma_bound(const ModelParams& params);

struct TheoremReport {
    double max_ls;   ///< max of L_s over the grid (-inf for an empty grid)
    double argmax_c; ///< grid point attaining the max (NaN for empty grid)
    bool pass;       ///< max_ls < 7
    std::size_t n_points;
};

/// Evaluates L_s over a c grid and checks the sup-bound max < 7.
TheoremReport theorem_check(std::span<const double> c_grid);

} // namespace beamwave

#endif
