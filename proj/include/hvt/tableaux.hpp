#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hvt/shapes.hpp"

namespace hvt {

/// Filling of a Young diagram by positive integers, strictly increasing
/// along rows and down columns. Rows are stored top to bottom.
class IncreasingTableau {
  public:
    IncreasingTableau() = default;

    /// Validating constructor. Throws ErrorCode::validation naming the first
    /// offending pair of cells.
    static IncreasingTableau from_rows(std::vector<std::vector<int>> rows);

    const std::vector<std::vector<int>> &rows() const noexcept { return rows_; }
    Partition shape() const;
    bool empty() const noexcept { return rows_.empty(); }
    int num_rows() const noexcept { return static_cast<int>(rows_.size()); }
    int num_cols() const noexcept { return rows_.empty() ? 0 : static_cast<int>(rows_.front().size()); }

    /// Entry at a cell of the shape.
    int at(Cell c) const { return rows_.at(c.row - 1).at(c.col - 1); }
    int max_entry() const noexcept;

    bool operator==(const IncreasingTableau &) const = default;

  private:
    friend class TableauEditor;
    std::vector<std::vector<int>> rows_;
};

/// Increasing tableau with an optional marked corner.
class HeckeTableau {
  public:
    HeckeTableau() = default;
    explicit HeckeTableau(IncreasingTableau tab, std::optional<Cell> mark = std::nullopt);

    const IncreasingTableau &tab() const noexcept { return tab_; }
    const std::optional<Cell> &mark() const noexcept { return mark_; }
    HeckeDiagram diagram() const { return HeckeDiagram(tab_.shape(), mark_); }

    bool operator==(const HeckeTableau &) const = default;

  private:
    IncreasingTableau tab_;
    std::optional<Cell> mark_;
};

/// Builds a tableau from a cell map, checking that the map covers exactly the
/// cells of `shape` (ErrorCode::shape_mismatch) and that entries are positive
/// and strictly increasing (ErrorCode::validation).
IncreasingTableau validate_increasing(const Partition &shape, const std::map<Cell, int> &entries);

/// (row count, column count); (0, 0) for the empty tableau.
std::pair<int, int> rows_and_cols(const IncreasingTableau &t);

/// Removes every square holding `k`. `k` must be the maximum entry or absent
/// from `t`; otherwise ErrorCode::precondition.
IncreasingTableau delete_letter_squares(const IncreasingTableau &t, int k);

/// Every increasing tableau whose shape fits in a rows x cols box and whose
/// entries lie in [1, max_entry].
std::vector<IncreasingTableau> increasing_tableaux_in_box(int rows, int cols, int max_entry);

/// Mutable access for algorithms that rewrite tableaux in place. Checks local
/// strictness around a cell and materializes a validated tableau at the end.
class TableauEditor {
  public:
    TableauEditor() = default;
    explicit TableauEditor(const IncreasingTableau &t) : rows_(t.rows_) {}

    std::vector<std::vector<int>> &rows() noexcept { return rows_; }
    const std::vector<std::vector<int>> &rows() const noexcept { return rows_; }

    /// Would writing `v` at (r, c) (0-indexed) keep the filling strictly
    /// increasing with respect to all four neighbours?
    bool fits(int r, int c, int v) const;

    IncreasingTableau finish() &&;

  private:
    std::vector<std::vector<int>> rows_;
};

} // namespace hvt
