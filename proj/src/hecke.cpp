#include "hvt/hecke.hpp"

#include <algorithm>
#include <string>

#include "hvt/error.hpp"

namespace hvt {

InsertionOutcome hecke_insert(const IncreasingTableau &t, int x) {
    if (x < 1) fail(ErrorCode::validation, "inserted letter must be positive, got " + std::to_string(x));

    TableauEditor ed(t);
    auto &rows = ed.rows();
    int v = x;
    for (int r = 0;; ++r) {
        if (r == static_cast<int>(rows.size())) {
            // A value carried into a fresh row always exceeds the bottom entry
            // of the first column, so the append below must succeed.
            ensure(r == 0 || rows[r - 1].front() < v, "carried value exceeds the first column");
            rows.push_back({v});
            return {std::move(ed).finish(), Cell{r + 1, 1}, 1};
        }
        auto &row = rows[r];
        auto bigger = std::upper_bound(row.begin(), row.end(), v);
        if (bigger == row.end()) {
            const int len = static_cast<int>(row.size());
            const bool room_above = r == 0 || static_cast<int>(rows[r - 1].size()) > len;
            if (v > row.back() && room_above && (r == 0 || rows[r - 1][len] < v)) {
                row.push_back(v);
                return {std::move(ed).finish(), Cell{r + 1, len + 1}, 1};
            }
            IncreasingTableau out = std::move(ed).finish();
            const Partition shape = out.shape();
            const Cell corner{shape.col_height(len), len};
            ensure(is_corner(shape, corner), "rejecting row yields a corner");
            return {std::move(out), corner, 0};
        }
        const int col = static_cast<int>(bigger - row.begin());
        const int y = *bigger;
        if (ed.fits(r, col, v)) row[col] = v;
        v = y;
    }
}

std::pair<IncreasingTableau, int> hecke_reverse_insert(const IncreasingTableau &u, Cell corner, int alpha) {
    if (alpha != 0 && alpha != 1) fail(ErrorCode::precondition, "alpha must be 0 or 1");
    const Partition shape = u.shape();
    if (!is_corner(shape, corner))
        fail(ErrorCode::precondition, "cell (" + std::to_string(corner.row) + "," + std::to_string(corner.col) +
                                          ") is not a corner of the tableau");

    TableauEditor ed(u);
    auto &rows = ed.rows();
    int y = u.at(corner);
    if (alpha == 1) {
        rows[corner.row - 1].pop_back();
        if (rows[corner.row - 1].empty()) rows.pop_back();
    }
    for (int r = corner.row - 2; r >= 0; --r) {
        auto &row = rows[r];
        auto smaller = std::lower_bound(row.begin(), row.end(), y);
        if (smaller == row.begin())
            fail(ErrorCode::unreachable,
                 "row " + std::to_string(r + 1) + " has no entry smaller than " + std::to_string(y) +
                     "; the triple is not produced by forward insertion");
        --smaller;
        const int col = static_cast<int>(smaller - row.begin());
        const int x = *smaller;
        if (ed.fits(r, col, y)) row[col] = y;
        y = x;
    }
    return {std::move(ed).finish(), y};
}

IncreasingTableau insertion_tableau(const Word &w) {
    IncreasingTableau t;
    for (int letter : w) t = hecke_insert(t, letter).result;
    return t;
}

MonotoneLengths longest_monotone(const Word &w) {
    const std::size_t n = w.size();
    std::vector<int> inc(n, 1), dec(n, 1);
    MonotoneLengths out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (w[j] < w[i]) inc[i] = std::max(inc[i], inc[j] + 1);
            if (w[j] > w[i]) dec[i] = std::max(dec[i], dec[j] + 1);
        }
        out.increasing = std::max(out.increasing, inc[i]);
        out.decreasing = std::max(out.decreasing, dec[i]);
    }
    return out;
}

} // namespace hvt
