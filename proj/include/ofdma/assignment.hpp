#pragma once

#include "ofdma/domain.hpp"

namespace ofdma {

/// phi(k, n): the gain of placing station k on RU n. Units depend on the policy.
using WeightMatrix = Matrix<double>;

struct Assignment {
    ScheduleMatrix schedule;
    double value = 0.0;
};

/// Maximum-weight matching between stations (rows) and RUs (columns) where any
/// station or RU may stay unmatched. Negative pairings are never emitted;
/// zero-weight pairings may be, since they leave the objective unchanged.
/// Hungarian method on the zero-padded square matrix, O(max(K,N)^3).
/// Throws InputError on an empty or non-finite matrix.
Assignment max_weight_assignment(const WeightMatrix& w);

/// Exhaustive search over all partial injective assignments. Test oracle;
/// refuses inputs with max(K, N) > 8.
Assignment brute_force_assignment(const WeightMatrix& w);

/// Sum of w over the assigned cells.
double assignment_value(const ScheduleMatrix& s, const WeightMatrix& w);

}  // namespace ofdma
