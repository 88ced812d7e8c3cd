#pragma once

#include <functional>
#include <vector>

#include "hvt/hecke.hpp"
#include "hvt/linked.hpp"
#include "hvt/shapes.hpp"
#include "hvt/tableaux.hpp"

namespace hvt {

/// Sequence of 2n+1 Hecke diagrams from empty to empty. Odd positions are
/// unmarked; even positions add a rook strip (and possibly mark a corner),
/// odd positions remove at most one square or drop the previous mark.
class VacillatingTableau {
  public:
    VacillatingTableau() : diagrams_(1) {}

    /// Half-length n; the sequence holds 2n + 1 diagrams.
    int n() const noexcept { return static_cast<int>(diagrams_.size() / 2); }
    const std::vector<HeckeDiagram> &diagrams() const noexcept { return diagrams_; }
    const HeckeDiagram &operator[](std::size_t i) const { return diagrams_.at(i); }

    bool operator==(const VacillatingTableau &) const = default;
    auto operator<=>(const VacillatingTableau &) const = default;

  private:
    friend VacillatingTableau validate_vht(std::vector<HeckeDiagram> diagrams);
    std::vector<HeckeDiagram> diagrams_;
};

/// Checks every clause of the definition; the error names the failing index
/// and clause (ErrorCode::validation).
VacillatingTableau validate_vht(std::vector<HeckeDiagram> diagrams);

/// Intermediate data of the map to linked partitions. Index i runs over
/// 0..2n. `letters[i]` is the letter recovered by reverse insertion at odd
/// step i, or 0 when no arc was added there.
struct PhiTrace {
    std::vector<std::vector<Arc>> edges;
    std::vector<HeckeTableau> tableaux;
    std::vector<int> letters;
};

/// The bijection from vacillating Hecke tableaux to linked partitions of [n].
/// Fills `trace` when given.
LinkedPartition phi(const VacillatingTableau &v, PhiTrace *trace = nullptr);

/// Inverse bijection, built by deleting maximal letters and Hecke-inserting
/// the left endpoint of each arc, from vertex n down to vertex 1.
VacillatingTableau phi_inverse(const LinkedPartition &p);

struct Extrema {
    int rows = 0;
    int cols = 0;

    bool operator==(const Extrema &) const = default;
};

/// Largest row count and largest column count over all diagrams.
Extrema vht_extrema(const VacillatingTableau &v);

/// Transposes every diagram.
VacillatingTableau conjugate_vht(const VacillatingTableau &v);

/// Involution on linked partitions of [n] obtained by conjugating the
/// vacillating tableau; swaps crossing and nesting numbers.
LinkedPartition psi(const LinkedPartition &p);

/// Words w(0), ..., w(2n) whose insertion tableaux are the underlying
/// tableaux of the phi trace.
std::vector<Word> phi_word_trace(const VacillatingTableau &v);

/// Every vacillating Hecke tableau of half-length n, found by a direct search
/// over diagram sequences. Throws ErrorCode::limit outside 1..8.
void for_each_vht(int n, const std::function<void(const VacillatingTableau &)> &visit);
std::vector<VacillatingTableau> enumerate_vht(int n);

} // namespace hvt
