#include "ofdma/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace ofdma {

namespace {

void check_weights(const WeightMatrix& w) {
    if (w.rows() == 0 || w.cols() == 0) throw InputError("assignment: empty weight matrix");
    for (double v : w.values()) {
        if (!std::isfinite(v)) throw InputError("assignment: non-finite weight");
    }
}

// Shortest augmenting path Hungarian method with row/column potentials on an
// n x n cost matrix (minimization). Returns row_of_col: for each column, the
// matched row.
std::vector<std::size_t> hungarian_min(const std::vector<double>& cost, std::size_t n) {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    // 1-based bookkeeping; index 0 is the virtual root.
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
    std::vector<double> minv(n + 1);
    std::vector<char> used(n + 1);

    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::fill(minv.begin(), minv.end(), kInf);
        std::fill(used.begin(), used.end(), 0);
        do {
            used[j0] = 1;
            const std::size_t i0 = p[j0];
            double delta = kInf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    std::vector<std::size_t> row_of_col(n);
    for (std::size_t j = 1; j <= n; ++j) row_of_col[j - 1] = p[j] - 1;
    return row_of_col;
}

}  // namespace

double assignment_value(const ScheduleMatrix& s, const WeightMatrix& w) {
    double total = 0.0;
    for (std::size_t k = 0; k < w.rows(); ++k) {
        for (std::size_t n = 0; n < w.cols(); ++n) {
            if (s.assign(k, n)) total += w(k, n);
        }
    }
    return total;
}

Assignment max_weight_assignment(const WeightMatrix& w) {
    check_weights(w);
    const std::size_t k_count = w.rows();
    const std::size_t n_rus = w.cols();
    const std::size_t n = std::max(k_count, n_rus);

    // Maximization as minimization of the negated, zero-floored weights; the
    // padding rows/columns stand for "leave unmatched".
    std::vector<double> cost(n * n, 0.0);
    for (std::size_t k = 0; k < k_count; ++k) {
        for (std::size_t r = 0; r < n_rus; ++r) {
            cost[k * n + r] = -std::max(w(k, r), 0.0);
        }
    }

    const auto row_of_col = hungarian_min(cost, n);
    Assignment out{ScheduleMatrix(k_count, n_rus), 0.0};
    for (std::size_t r = 0; r < n_rus; ++r) {
        const std::size_t k = row_of_col[r];
        if (k < k_count && w(k, r) >= 0.0) {
            out.schedule.assign(k, r) = 1;
            out.value += w(k, r);
        }
    }
    return out;
}

namespace {

struct BruteForce {
    const WeightMatrix& w;
    std::vector<char> ru_used;
    std::vector<int> current;  // RU of each station, -1 when unassigned
    std::vector<int> best;
    double best_value = 0.0;

    void search(std::size_t k, double value) {
        if (k == w.rows()) {
            if (value > best_value) {
                best_value = value;
                best = current;
            }
            return;
        }
        current[k] = -1;
        search(k + 1, value);
        for (std::size_t r = 0; r < w.cols(); ++r) {
            if (ru_used[r]) continue;
            ru_used[r] = 1;
            current[k] = static_cast<int>(r);
            search(k + 1, value + w(k, r));
            ru_used[r] = 0;
        }
        current[k] = -1;
    }
};

}  // namespace

Assignment brute_force_assignment(const WeightMatrix& w) {
    check_weights(w);
    if (std::max(w.rows(), w.cols()) > 8) {
        throw InputError("brute_force_assignment: refusing matrices larger than 8");
    }
    BruteForce bf{w, std::vector<char>(w.cols(), 0), std::vector<int>(w.rows(), -1),
                  std::vector<int>(w.rows(), -1)};
    bf.search(0, 0.0);

    Assignment out{ScheduleMatrix(w.rows(), w.cols()), bf.best_value};
    for (std::size_t k = 0; k < w.rows(); ++k) {
        if (bf.best[k] >= 0) out.schedule.assign(k, static_cast<std::size_t>(bf.best[k])) = 1;
    }
    return out;
}

}  // namespace ofdma
