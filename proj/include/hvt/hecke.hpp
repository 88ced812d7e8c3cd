#pragma once

#include <utility>
#include <vector>

#include "hvt/tableaux.hpp"

namespace hvt {

/// Sequence of positive letters.
using Word = std::vector<int>;

/// Result of one Hecke insertion. `alpha == 1` means the shape grew by
/// `corner`; `alpha == 0` means the shape is unchanged and `corner` is the
/// corner where the insertion stopped.
struct InsertionOutcome {
    IncreasingTableau result;
    Cell corner;
    int alpha = 0;

    bool operator==(const InsertionOutcome &) const = default;
};

/// Hecke row insertion of x into t.
///
/// Each row either absorbs the incoming value at its end (alpha = 1), refuses
/// it when appending would break strictness (alpha = 0, corner at the bottom
/// of the column holding the row's last square), or passes on its leftmost
/// entry larger than the incoming value, replacing that entry only when the
/// result stays increasing. Throws ErrorCode::validation for x < 1.
InsertionOutcome hecke_insert(const IncreasingTableau &t, int x);

/// Inverse of hecke_insert: recovers (t, x) from (u, corner, alpha).
///
/// Throws ErrorCode::precondition if `corner` is not a corner of u or alpha is
/// not 0/1, and ErrorCode::unreachable if some row has no entry below the
/// carried value.
std::pair<IncreasingTableau, int> hecke_reverse_insert(const IncreasingTableau &u, Cell corner, int alpha);

/// Left fold of hecke_insert over w, starting from the empty tableau.
IncreasingTableau insertion_tableau(const Word &w);

struct MonotoneLengths {
    int increasing = 0;
    int decreasing = 0;

    bool operator==(const MonotoneLengths &) const = default;
};

/// Longest strictly increasing / strictly decreasing subword, by a quadratic
/// dynamic program over positions. Does not touch tableaux.
MonotoneLengths longest_monotone(const Word &w);

} // namespace hvt
