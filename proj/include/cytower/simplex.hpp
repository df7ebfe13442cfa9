#ifndef CYTOWER_SIMPLEX_HPP
#define CYTOWER_SIMPLEX_HPP

#include <stdexcept>
#include <vector>

#include "cytower/rational.hpp"

namespace cytower {

/// Exact rational simplex for max c^T x s.t. A x <= b, x >= 0, with b >= 0
/// (slack basis is feasible).  Bland's rule on both the entering and the
/// leaving choice guarantees termination.
struct SimplexResult {
    enum class Status { optimal, unbounded };
    Status status = Status::optimal;
    Rat objective;
    std::vector<Rat> x;     // primal solution
    std::vector<Rat> dual;  // one multiplier per row, >= 0 at optimum
};

inline SimplexResult simplex_max(const std::vector<std::vector<Rat>>& a,
                                 const std::vector<Rat>& b, const std::vector<Rat>& c) {
    const size_t m = a.size();
    const size_t nv = c.size();
    for (const Rat& bi : b)
        if (bi < 0) throw std::invalid_argument("simplex_max: b must be non-negative");
    const size_t cols = nv + m + 1;  // variables, slacks, rhs
    std::vector<std::vector<Rat>> t(m + 1, std::vector<Rat>(cols));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < nv; ++j) t[i][j] = a[i][j];
        t[i][nv + i] = 1;
        t[i][cols - 1] = b[i];
    }
    for (size_t j = 0; j < nv; ++j) t[m][j] = -c[j];
    std::vector<size_t> basis(m);
    for (size_t i = 0; i < m; ++i) basis[i] = nv + i;

    while (true) {
        size_t enter = cols;
        for (size_t j = 0; j + 1 < cols; ++j)
            if (t[m][j] < 0) { enter = j; break; }  // Bland: smallest index
        if (enter == cols) break;
        size_t leave = m;
        Rat best;
        for (size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rat ratio = t[i][cols - 1] / t[i][enter];
            if (leave == m || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) {
            SimplexResult r;
            r.status = SimplexResult::Status::unbounded;
            return r;
        }
        // pivot on (leave, enter)
        Rat piv = t[leave][enter];
        for (size_t j = 0; j < cols; ++j) t[leave][j] /= piv;
        for (size_t i = 0; i <= m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rat f = t[i][enter];
            for (size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    SimplexResult r;
    r.objective = t[m][cols - 1];
    r.x.assign(nv, Rat(0));
    for (size_t i = 0; i < m; ++i)
        if (basis[i] < nv) r.x[basis[i]] = t[i][cols - 1];
    r.dual.assign(m, Rat(0));
    for (size_t i = 0; i < m; ++i) r.dual[i] = t[m][nv + i];
    return r;
}

}  // namespace cytower

#endif
