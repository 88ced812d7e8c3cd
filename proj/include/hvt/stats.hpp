#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hvt/linked.hpp"

namespace hvt {

/// Counts of linked partitions of [n] keyed by (crossing, nesting), optionally
/// restricted to a fixed pair of endpoint sets.
struct JointDistribution {
    int n = 0;
    std::optional<Endpoints> restriction;
    std::map<std::pair<int, int>, std::uint64_t> counts;

    std::uint64_t total() const;
    /// Monoid addition; both sides must describe the same n and restriction.
    JointDistribution &operator+=(const JointDistribution &other);

    bool operator==(const JointDistribution &) const = default;
};

inline constexpr int kMaxDistributionN = 8;
inline constexpr int kMaxRestrictedDistributionN = 9;

/// Exhaustive count over enumerate_linked(n). Throws ErrorCode::limit above
/// 8 (unrestricted) or 9 (restricted).
JointDistribution joint_distribution(int n, const std::optional<Endpoints> &restriction = std::nullopt);

/// Every nonempty restricted distribution of [n], keyed by its endpoint sets.
std::map<Endpoints, JointDistribution> restricted_distributions(int n);

bool verify_symmetry(const JointDistribution &d);

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string counterexample;

    bool operator==(const CheckResult &) const = default;
};

struct VerificationReport {
    int n = 0;
    std::vector<CheckResult> checks;

    bool all_passed() const;

    bool operator==(const VerificationReport &) const = default;
};

inline constexpr int kMaxVerifyN = 6;

/// Runs every check for size n (1..6): bijection of the map from vacillating
/// tableaux, the row/column extrema against crossing/nesting numbers, distribution symmetry
/// (unrestricted, restricted, front representations), the conjugation
/// involution, and the factorial, Schroeder and Bell counts.
VerificationReport verify_suite(int n);

/// Large Schroeder numbers r_0..r_m via r_k = r_{k-1} + sum_i r_i r_{k-1-i}.
std::vector<std::uint64_t> large_schroeder(int m);

/// Number of set partitions of [n], by enumerating restricted growth strings.
std::uint64_t count_set_partitions_rgs(int n);

} // namespace hvt
