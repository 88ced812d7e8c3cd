#include "hvt/linked.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "hvt/error.hpp"

namespace hvt {

namespace {

std::string block_str(const std::vector<int> &b) {
    std::string s = "{";
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
    return s + "}";
}

} // namespace

LinkedPartition::LinkedPartition(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
    if (n_ < 0) fail(ErrorCode::validation, "ground set size must be nonnegative");
    std::sort(arcs_.begin(), arcs_.end());
    std::vector<int> indeg(n_ + 1, 0);
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        const auto [l, r] = arcs_[i];
        const std::string name = std::to_string(l) + "-" + std::to_string(r);
        if (l < 1 || r > n_) fail(ErrorCode::validation, "arc " + name + " has an endpoint outside [n]");
        if (l >= r) fail(ErrorCode::validation, "arc " + name + " must have left < right");
        if (i > 0 && arcs_[i - 1] == arcs_[i]) fail(ErrorCode::validation, "arc " + name + " listed twice");
        if (++indeg[r] > 1)
            fail(ErrorCode::validation, "vertex " + std::to_string(r) + " is the right endpoint of two arcs");
    }
}

int LinkedPartition::parent(int v) const noexcept {
    for (const auto &a : arcs_)
        if (a.right == v) return a.left;
    return 0;
}

BlockPartition validate_nearly_disjoint(int n, std::vector<std::vector<int>> blocks) {
    std::vector<int> seen(n + 1, 0);
    for (auto &b : blocks) {
        if (b.empty()) fail(ErrorCode::validation, "empty block");
        std::sort(b.begin(), b.end());
        if (std::adjacent_find(b.begin(), b.end()) != b.end())
            fail(ErrorCode::validation, "block " + block_str(b) + " repeats an element");
        if (b.front() < 1 || b.back() > n)
            fail(ErrorCode::validation, "block " + block_str(b) + " has an element outside [n]");
        for (int v : b) seen[v] = 1;
    }
    for (int v = 1; v <= n; ++v)
        if (!seen[v]) fail(ErrorCode::validation, "element " + std::to_string(v) + " is in no block");

    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (std::size_t j = i + 1; j < blocks.size(); ++j) {
            const auto &bi = blocks[i];
            const auto &bj = blocks[j];
            std::vector<int> shared;
            std::set_intersection(bi.begin(), bi.end(), bj.begin(), bj.end(), std::back_inserter(shared));
            for (int t : shared) {
                const bool c1 = t == bi.front() && bi.size() > 1 && t != bj.front();
                const bool c2 = t == bj.front() && bj.size() > 1 && t != bi.front();
                if (!c1 && !c2)
                    fail(ErrorCode::validation, "blocks " + block_str(bi) + " and " + block_str(bj) +
                                                    " are not nearly disjoint at " + std::to_string(t));
            }
        }
    }
    std::sort(blocks.begin(), blocks.end());
    return {n, std::move(blocks)};
}

LinkedPartition blocks_to_arcs(const BlockPartition &bp) {
    const BlockPartition checked = validate_nearly_disjoint(bp.n, bp.blocks);
    std::vector<Arc> arcs;
    for (const auto &b : checked.blocks)
        for (std::size_t k = 1; k < b.size(); ++k) arcs.push_back({b.front(), b[k]});
    return LinkedPartition(bp.n, std::move(arcs));
}

BlockPartition arcs_to_blocks(const LinkedPartition &lp) {
    std::vector<std::vector<int>> children(lp.n() + 1);
    std::vector<bool> touched(lp.n() + 1, false);
    for (const auto &a : lp.arcs()) {
        children[a.left].push_back(a.right);
        touched[a.left] = touched[a.right] = true;
    }
    std::vector<std::vector<int>> blocks;
    for (int v = 1; v <= lp.n(); ++v) {
        if (!children[v].empty()) {
            std::vector<int> b{v};
            b.insert(b.end(), children[v].begin(), children[v].end());
            blocks.push_back(std::move(b));
        } else if (!touched[v]) {
            blocks.push_back({v});
        }
    }
    return validate_nearly_disjoint(lp.n(), std::move(blocks));
}

CrossNest crossing_nesting(const LinkedPartition &lp) {
    const auto &arcs = lp.arcs(); // sorted by (left, right)
    const std::size_t m = arcs.size();
    CrossNest out;

    std::vector<int> best(m);
    for (std::size_t i = 0; i < m; ++i) {
        best[i] = 1;
        for (std::size_t j = 0; j < i; ++j)
            if (arcs[j].left < arcs[i].left && arcs[j].right > arcs[i].right) best[i] = std::max(best[i], best[j] + 1);
        out.nesting = std::max(out.nesting, best[i]);
    }

    // A k-crossing has all left endpoints before all right endpoints, so it
    // spans the gap just after its last left endpoint.
    for (int gap = 1; gap < lp.n(); ++gap) {
        std::vector<Arc> spanning;
        for (const auto &a : arcs)
            if (a.left <= gap && gap < a.right) spanning.push_back(a);
        std::vector<int> chain(spanning.size(), 1);
        for (std::size_t i = 0; i < spanning.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j)
                if (spanning[j].left < spanning[i].left && spanning[j].right < spanning[i].right)
                    chain[i] = std::max(chain[i], chain[j] + 1);
            out.crossing = std::max(out.crossing, chain[i]);
        }
    }
    return out;
}

CrossNest crossing_nesting_oracle(const LinkedPartition &lp) {
    const auto &arcs = lp.arcs();
    const std::size_t m = arcs.size();
    if (m > kOracleArcLimit)
        fail(ErrorCode::limit, "brute-force oracle is limited to " + std::to_string(kOracleArcLimit) + " arcs");
    CrossNest out;
    std::vector<Arc> sub;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask) {
        const int k = std::popcount(mask);
        if (k <= out.crossing && k <= out.nesting) continue;
        sub.clear();
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (std::uint32_t{1} << i)) sub.push_back(arcs[i]);
        // sub is sorted by left endpoint; ties make both patterns impossible.
        bool lefts_strict = true;
        for (int i = 1; i < k; ++i) lefts_strict = lefts_strict && sub[i - 1].left < sub[i].left;
        if (!lefts_strict) continue;
        bool cross = sub[k - 1].left < sub[0].right;
        bool nest = sub[k - 1].left < sub[k - 1].right;
        for (int i = 1; i < k; ++i) {
            cross = cross && sub[i - 1].right < sub[i].right;
            nest = nest && sub[i - 1].right > sub[i].right;
        }
        if (cross) out.crossing = std::max(out.crossing, k);
        if (nest) out.nesting = std::max(out.nesting, k);
    }
    return out;
}

Endpoints endpoints(const LinkedPartition &lp) {
    Endpoints e;
    for (const auto &a : lp.arcs()) {
        e.left.insert(a.left);
        e.right.insert(a.right);
    }
    return e;
}

bool is_front_representation(const LinkedPartition &lp) {
    const Endpoints e = endpoints(lp);
    return std::none_of(e.left.begin(), e.left.end(), [&](int v) { return e.right.count(v) > 0; });
}

namespace {

void check_enum_range(int n) {
    if (n < 1 || n > kMaxEnumerateN)
        fail(ErrorCode::limit, "enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerateN));
}

} // namespace

void for_each_linked(int n, const std::function<void(const LinkedPartition &)> &visit) {
    check_enum_range(n);
    // parent[v] in {0 (none), 1, ..., v-1}; odometer over the choice vector.
    std::vector<int> parent(n + 1, 0);
    while (true) {
        std::vector<Arc> arcs;
        for (int v = 2; v <= n; ++v)
            if (parent[v]) arcs.push_back({parent[v], v});
        visit(LinkedPartition(n, std::move(arcs)));
        int v = n;
        while (v >= 2 && parent[v] == v - 1) parent[v--] = 0;
        if (v < 2) return;
        ++parent[v];
    }
}

std::vector<LinkedPartition> enumerate_linked(int n) {
    std::vector<LinkedPartition> out;
    for_each_linked(n, [&](const LinkedPartition &lp) { out.push_back(lp); });
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace hvt
