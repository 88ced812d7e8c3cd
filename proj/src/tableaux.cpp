#include "hvt/tableaux.hpp"

#include <algorithm>
#include <string>

#include "hvt/error.hpp"

namespace hvt {

namespace {

std::string cell_str(int r, int c) { return "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")"; }

void check_rows(const std::vector<std::vector<int>> &rows) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].empty()) fail(ErrorCode::validation, "tableau row " + std::to_string(r + 1) + " is empty");
        if (r > 0 && rows[r].size() > rows[r - 1].size())
            fail(ErrorCode::validation, "tableau row " + std::to_string(r + 1) + " is longer than the row above");
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            const int v = rows[r][c];
            const int ri = static_cast<int>(r), ci = static_cast<int>(c);
            if (v <= 0) fail(ErrorCode::validation, "entry at " + cell_str(ri, ci) + " is not positive");
            if (c > 0 && rows[r][c - 1] >= v)
                fail(ErrorCode::validation,
                     "row not strictly increasing between " + cell_str(ri, ci - 1) + " and " + cell_str(ri, ci));
            if (r > 0 && rows[r - 1][c] >= v)
                fail(ErrorCode::validation,
                     "column not strictly increasing between " + cell_str(ri - 1, ci) + " and " + cell_str(ri, ci));
        }
    }
}

} // namespace

IncreasingTableau IncreasingTableau::from_rows(std::vector<std::vector<int>> rows) {
    check_rows(rows);
    IncreasingTableau t;
    t.rows_ = std::move(rows);
    return t;
}

Partition IncreasingTableau::shape() const {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto &row : rows_) parts.push_back(static_cast<int>(row.size()));
    return Partition(std::move(parts));
}

int IncreasingTableau::max_entry() const noexcept {
    int m = 0;
    for (const auto &row : rows_)
        if (!row.empty()) m = std::max(m, row.back());
    return m;
}

HeckeTableau::HeckeTableau(IncreasingTableau tab, std::optional<Cell> mark) : tab_(std::move(tab)), mark_(mark) {
    if (mark_ && !is_corner(tab_.shape(), *mark_)) fail(ErrorCode::validation, "marked cell is not a corner");
}

IncreasingTableau validate_increasing(const Partition &shape, const std::map<Cell, int> &entries) {
    std::vector<std::vector<int>> rows(shape.rows());
    std::size_t used = 0;
    for (int r = 1; r <= shape.rows(); ++r) {
        for (int c = 1; c <= shape.row_length(r); ++c) {
            auto it = entries.find({r, c});
            if (it == entries.end())
                fail(ErrorCode::shape_mismatch, "no entry for cell " + cell_str(r - 1, c - 1));
            rows[r - 1].push_back(it->second);
            ++used;
        }
    }
    if (used != entries.size()) fail(ErrorCode::shape_mismatch, "entries given for cells outside the shape");
    return IncreasingTableau::from_rows(std::move(rows));
}

std::pair<int, int> rows_and_cols(const IncreasingTableau &t) { return {t.num_rows(), t.num_cols()}; }

IncreasingTableau delete_letter_squares(const IncreasingTableau &t, int k) {
    TableauEditor ed(t);
    bool present = false;
    for (auto &row : ed.rows()) {
        auto it = std::find(row.begin(), row.end(), k);
        if (it != row.end()) {
            present = true;
            row.erase(it, row.end());
        }
    }
    if (present && k != t.max_entry())
        fail(ErrorCode::precondition, "letter " + std::to_string(k) + " is present but not the maximum entry");
    auto &rows = ed.rows();
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    ensure(std::none_of(rows.begin(), rows.end(), [](const auto &r) { return r.empty(); }),
           "deleting the maximal letter leaves a Young diagram");
    return std::move(ed).finish();
}

namespace {

void fill_rec(const Partition &shape, int max_entry, std::size_t idx, const std::vector<Cell> &cells,
              std::vector<std::vector<int>> &rows, std::vector<IncreasingTableau> &out) {
    if (idx == cells.size()) {
        out.push_back(IncreasingTableau::from_rows(rows));
        return;
    }
    const auto [r, c] = cells[idx];
    int lo = 1;
    if (c > 1) lo = std::max(lo, rows[r - 1][c - 2] + 1);
    if (r > 1) lo = std::max(lo, rows[r - 2][c - 1] + 1);
    for (int v = lo; v <= max_entry; ++v) {
        rows[r - 1].push_back(v);
        fill_rec(shape, max_entry, idx + 1, cells, rows, out);
        rows[r - 1].pop_back();
    }
}

} // namespace

std::vector<IncreasingTableau> increasing_tableaux_in_box(int rows, int cols, int max_entry) {
    std::vector<IncreasingTableau> out;
    for (const auto &shape : partitions_in_box(rows, cols)) {
        std::vector<Cell> cells = skew_cells(shape, Partition{});
        std::vector<std::vector<int>> fill(shape.rows());
        fill_rec(shape, max_entry, 0, cells, fill, out);
    }
    return out;
}

bool TableauEditor::fits(int r, int c, int v) const {
    if (c > 0 && rows_[r][c - 1] >= v) return false;
    if (c + 1 < static_cast<int>(rows_[r].size()) && rows_[r][c + 1] <= v) return false;
    if (r > 0 && rows_[r - 1][c] >= v) return false;
    if (r + 1 < static_cast<int>(rows_.size()) && c < static_cast<int>(rows_[r + 1].size()) &&
        rows_[r + 1][c] <= v)
        return false;
    return true;
}

IncreasingTableau TableauEditor::finish() && { return IncreasingTableau::from_rows(std::move(rows_)); }

} // namespace hvt
