#include "simplex.hpp"

#include <stdexcept>

namespace nefcert {

namespace {

/* Dense tableau, rows 1..R are constraints, row 0 is the phase-1
 * objective (reduced costs); column layout:
 *   [0, 2N)        u_j, v_j for the free variables
 *   [2N, 2N+S)     surplus columns for inequality rows
 *   [2N+S, ...)    artificial columns, one per row
 * and the last column is the rhs. */
struct Tableau {
    std::size_t rows, cols;
    std::vector<std::vector<Rat>> t;
    std::vector<std::size_t> basis;  // basis[r] = column basic in constraint r
};

}  // namespace

std::optional<std::vector<Rat>> phase1_feasible_point(int num_vars,
                                                      const std::vector<LinRow>& rows) {
    const std::size_t n = static_cast<std::size_t>(num_vars);
    const std::size_t R = rows.size();
    std::size_t surplus = 0;
    for (const LinRow& r : rows) {
        if (r.a.size() != n) throw std::invalid_argument("simplex: row width mismatch");
        if (!r.equality) ++surplus;
    }
    if (R == 0) return std::vector<Rat>(n, Rat(0));

    Tableau tab;
    tab.rows = R + 1;
    tab.cols = 2 * n + surplus + R + 1;
    tab.t.assign(tab.rows, std::vector<Rat>(tab.cols, Rat(0)));
    tab.basis.assign(R, 0);

    const std::size_t surplus0 = 2 * n;
    const std::size_t art0 = 2 * n + surplus;
    const std::size_t rhs_col = tab.cols - 1;

    std::size_t s = 0;
    for (std::size_t r = 0; r < R; ++r) {
        auto& row = tab.t[r + 1];
        int sign = rows[r].rhs < 0 ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) {
            row[2 * j] = sign * rows[r].a[j];
            row[2 * j + 1] = -sign * rows[r].a[j];
        }
        if (!rows[r].equality) row[surplus0 + s++] = Rat(-sign);
        row[art0 + r] = 1;
        row[rhs_col] = sign * rows[r].rhs;
        tab.basis[r] = art0 + r;
    }

    // objective: minimize sum of artificials; express in nonbasic terms
    auto& obj = tab.t[0];
    for (std::size_t r = 1; r <= R; ++r)
        for (std::size_t c = 0; c < tab.cols; ++c)
            if (c < art0 || c >= art0 + R) obj[c] -= tab.t[r][c];

    auto pivot = [&](std::size_t prow, std::size_t pcol) {
        auto& pr = tab.t[prow];
        Rat inv = pr[pcol];
        for (auto& x : pr) x /= inv;
        for (std::size_t r = 0; r < tab.rows; ++r) {
            if (r == prow) continue;
            Rat factor = tab.t[r][pcol];
            if (factor == 0) continue;
            auto& row = tab.t[r];
            for (std::size_t c = 0; c < tab.cols; ++c)
                if (pr[c] != 0) row[c] -= factor * pr[c];
        }
        tab.basis[prow - 1] = pcol;
    };

    for (;;) {
        // Bland: entering = smallest column with negative reduced cost
        std::size_t enter = rhs_col;
        for (std::size_t c = 0; c < rhs_col; ++c)
            if (obj[c] < 0) {
                enter = c;
                break;
            }
        if (enter == rhs_col) break;  // optimal

        // leaving: min ratio, ties by smallest basic column (Bland)
        std::size_t leave = 0;
        Rat best;
        for (std::size_t r = 1; r <= R; ++r) {
            const Rat& coef = tab.t[r][enter];
            if (coef <= 0) continue;
            Rat ratio = tab.t[r][rhs_col] / coef;
            if (leave == 0 || ratio < best ||
                (ratio == best && tab.basis[r - 1] < tab.basis[leave - 1])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave == 0)
            throw std::logic_error("simplex: phase-1 objective unbounded");  // cannot happen
        pivot(leave, enter);
    }

    if (obj[rhs_col] != 0) return std::nullopt;  // artificial residue: infeasible

    std::vector<Rat> x(n, Rat(0));
    for (std::size_t r = 0; r < R; ++r) {
        std::size_t c = tab.basis[r];
        if (c < 2 * n) {
            const Rat& val = tab.t[r + 1][rhs_col];
            if (c % 2 == 0)
                x[c / 2] += val;
            else
                x[c / 2] -= val;
        }
    }
    return x;
}

}  // namespace nefcert
