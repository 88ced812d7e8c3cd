#include "hvt/shapes.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hvt/error.hpp"

namespace hvt {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            fail(ErrorCode::validation, "partition part " + std::to_string(i + 1) + " is not positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            fail(ErrorCode::validation, "partition parts increase at row " + std::to_string(i + 1));
    }
}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::row_length(int row) const noexcept {
    if (row < 1 || row > rows()) return 0;
    return parts_[row - 1];
}

int Partition::col_height(int col) const noexcept {
    int h = 0;
    while (h < rows() && parts_[h] >= col) ++h;
    return col >= 1 ? h : 0;
}

bool Partition::contains(Cell c) const noexcept {
    return c.row >= 1 && c.col >= 1 && c.col <= row_length(c.row);
}

bool Partition::contains(const Partition &inner) const noexcept {
    if (inner.rows() > rows()) return false;
    for (int r = 1; r <= inner.rows(); ++r)
        if (inner.row_length(r) > row_length(r)) return false;
    return true;
}

HeckeDiagram::HeckeDiagram(Partition shape, std::optional<Cell> mark)
    : shape_(std::move(shape)), mark_(mark) {
    if (mark_ && !is_corner(shape_, *mark_))
        fail(ErrorCode::validation, "marked cell (" + std::to_string(mark_->row) + "," +
                                        std::to_string(mark_->col) + ") is not a corner");
}

std::vector<Cell> corners(const Partition &p) {
    std::vector<Cell> out;
    for (int r = 1; r <= p.rows(); ++r)
        if (r == p.rows() || p.row_length(r + 1) < p.row_length(r)) out.push_back({r, p.row_length(r)});
    return out;
}

bool is_corner(const Partition &p, Cell c) {
    return p.contains(c) && c.col == p.row_length(c.row) && p.row_length(c.row + 1) < c.col;
}

std::vector<Cell> skew_cells(const Partition &outer, const Partition &inner) {
    if (!outer.contains(inner)) fail(ErrorCode::precondition, "inner diagram is not contained in outer");
    std::vector<Cell> out;
    for (int r = 1; r <= outer.rows(); ++r)
        for (int c = inner.row_length(r) + 1; c <= outer.row_length(r); ++c) out.push_back({r, c});
    return out;
}

bool is_rook_strip(const Partition &outer, const Partition &inner) {
    // Row condition: each row grows by at most one. Column condition: the
    // added cells (r, inner_r + 1) must sit in distinct columns.
    auto cells = skew_cells(outer, inner);
    for (std::size_t i = 1; i < cells.size(); ++i) {
        if (cells[i].row == cells[i - 1].row) return false;
    }
    std::vector<int> cols;
    for (const auto &c : cells) cols.push_back(c.col);
    std::sort(cols.begin(), cols.end());
    return std::adjacent_find(cols.begin(), cols.end()) == cols.end();
}

Partition conjugate(const Partition &p) {
    std::vector<int> t;
    for (int c = 1; c <= p.cols(); ++c) t.push_back(p.col_height(c));
    return Partition(std::move(t));
}

HeckeDiagram conjugate_diagram(const HeckeDiagram &d) {
    std::optional<Cell> m;
    if (d.mark()) m = Cell{d.mark()->col, d.mark()->row};
    return HeckeDiagram(conjugate(d.shape()), m);
}

Partition remove_corner(const Partition &p, Cell c) {
    if (!is_corner(p, c)) fail(ErrorCode::precondition, "cell is not a corner of the diagram");
    auto parts = p.parts();
    if (--parts[c.row - 1] == 0) parts.pop_back();
    return Partition(std::move(parts));
}

namespace {

void box_rec(int rows, int max_part, std::vector<int> &cur, std::vector<Partition> &out) {
    out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == rows) return;
    for (int v = 1; v <= max_part; ++v) {
        cur.push_back(v);
        box_rec(rows, v, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    std::vector<int> cur;
    box_rec(rows, cols, cur, out);
    return out;
}

} // namespace hvt
