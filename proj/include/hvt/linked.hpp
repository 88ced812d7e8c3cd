#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <set>
#include <vector>

namespace hvt {

struct Arc {
    int left = 1;
    int right = 2;

    auto operator<=>(const Arc &) const = default;
};

/// Arc set on [n] in which every vertex is the right endpoint of at most one
/// arc. Arcs are kept sorted by (left, right).
class LinkedPartition {
  public:
    LinkedPartition() = default;
    /// Throws ErrorCode::validation on out-of-range endpoints, left >= right,
    /// duplicate arcs, or a vertex with two incoming arcs.
    LinkedPartition(int n, std::vector<Arc> arcs);

    int n() const noexcept { return n_; }
    const std::vector<Arc> &arcs() const noexcept { return arcs_; }
    /// Left endpoint of the arc ending at v, or 0 if none.
    int parent(int v) const noexcept;

    bool operator==(const LinkedPartition &) const = default;
    auto operator<=>(const LinkedPartition &) const = default;

  private:
    int n_ = 0;
    std::vector<Arc> arcs_;
};

/// Block view: nonempty, pairwise nearly disjoint subsets covering [n]. Each
/// block is sorted; blocks are sorted by their minima.
struct BlockPartition {
    int n = 0;
    std::vector<std::vector<int>> blocks;

    bool operator==(const BlockPartition &) const = default;
};

/// Checks coverage and near-disjointness; returns the normalized partition.
/// A violation throws ErrorCode::validation naming both blocks and the shared
/// element.
BlockPartition validate_nearly_disjoint(int n, std::vector<std::vector<int>> blocks);

LinkedPartition blocks_to_arcs(const BlockPartition &bp);
BlockPartition arcs_to_blocks(const LinkedPartition &lp);

struct CrossNest {
    int crossing = 0;
    int nesting = 0;

    bool operator==(const CrossNest &) const = default;
};

/// Crossing and nesting numbers. Nesting is the longest chain with strictly
/// increasing left and strictly decreasing right endpoints; crossing is the
/// longest chain increasing in both among arcs spanning a common gap.
CrossNest crossing_nesting(const LinkedPartition &lp);

/// Brute force over all arc subsets. Refuses (ErrorCode::limit) above
/// `kOracleArcLimit` arcs.
CrossNest crossing_nesting_oracle(const LinkedPartition &lp);
inline constexpr std::size_t kOracleArcLimit = 20;

struct Endpoints {
    std::set<int> left;
    std::set<int> right;

    bool operator==(const Endpoints &) const = default;
    auto operator<=>(const Endpoints &) const = default;
};

Endpoints endpoints(const LinkedPartition &lp);
bool is_front_representation(const LinkedPartition &lp);

inline constexpr int kMaxEnumerateN = 9;

/// Visits every linked partition of [n] in a fixed order (lexicographic on the
/// vector of per-vertex parents). Throws ErrorCode::limit outside 1..9.
void for_each_linked(int n, const std::function<void(const LinkedPartition &)> &visit);

/// All linked partitions of [n] in lexicographic order of their sorted arc
/// lists; exactly n! of them.
std::vector<LinkedPartition> enumerate_linked(int n);

} // namespace hvt
