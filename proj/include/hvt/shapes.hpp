#pragma once

#include <compare>
#include <optional>
#include <vector>

namespace hvt {

/// A square of a Young diagram in English notation: row 1 is the top row,
/// column 1 the leftmost column.
struct Cell {
    int row = 1;
    int col = 1;

    auto operator<=>(const Cell &) const = default;
};

/// Weakly decreasing sequence of positive row lengths. The empty partition
/// is the empty diagram; trailing zeros are never stored.
class Partition {
  public:
    Partition() = default;
    /// Throws ErrorCode::validation if `parts` is not weakly decreasing or has
    /// a nonpositive entry.
    explicit Partition(std::vector<int> parts);

    const std::vector<int> &parts() const noexcept { return parts_; }
    int rows() const noexcept { return static_cast<int>(parts_.size()); }
    int cols() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    int size() const noexcept;
    bool empty() const noexcept { return parts_.empty(); }

    /// Length of row `row` (1-indexed); 0 past the last row.
    int row_length(int row) const noexcept;
    /// Number of cells in column `col` (1-indexed).
    int col_height(int col) const noexcept;
    bool contains(Cell c) const noexcept;
    /// Rowwise containment of `inner` in *this.
    bool contains(const Partition &inner) const noexcept;

    bool operator==(const Partition &) const = default;
    auto operator<=>(const Partition &) const = default;

  private:
    std::vector<int> parts_;
};

/// Young diagram with at most one marked corner.
class HeckeDiagram {
  public:
    HeckeDiagram() = default;
    explicit HeckeDiagram(Partition shape, std::optional<Cell> mark = std::nullopt);

    const Partition &shape() const noexcept { return shape_; }
    const std::optional<Cell> &mark() const noexcept { return mark_; }
    bool marked() const noexcept { return mark_.has_value(); }

    bool operator==(const HeckeDiagram &) const = default;
    auto operator<=>(const HeckeDiagram &) const = default;

  private:
    Partition shape_;
    std::optional<Cell> mark_;
};

/// Removable cells, ordered top to bottom.
std::vector<Cell> corners(const Partition &p);
bool is_corner(const Partition &p, Cell c);

/// Cells of outer/inner in row-major order. Throws ErrorCode::precondition
/// unless inner is contained in outer.
std::vector<Cell> skew_cells(const Partition &outer, const Partition &inner);

/// At most one square per row and per column; outer == inner counts.
bool is_rook_strip(const Partition &outer, const Partition &inner);

Partition conjugate(const Partition &p);
HeckeDiagram conjugate_diagram(const HeckeDiagram &d);

/// p with cell c removed; c must be a corner.
Partition remove_corner(const Partition &p, Cell c);

/// All partitions fitting in a rows x cols box, in lexicographic order of
/// their parts.
std::vector<Partition> partitions_in_box(int rows, int cols);

} // namespace hvt
