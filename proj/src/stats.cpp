#include "hvt/stats.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hvt/error.hpp"
#include "hvt/format.hpp"
#include "hvt/vacillating.hpp"

namespace hvt {

std::uint64_t JointDistribution::total() const {
    std::uint64_t t = 0;
    for (const auto &[key, c] : counts) t += c;
    return t;
}

JointDistribution &JointDistribution::operator+=(const JointDistribution &other) {
    ensure(n == other.n && restriction == other.restriction, "merged distributions describe the same universe");
    for (const auto &[key, c] : other.counts) counts[key] += c;
    return *this;
}

JointDistribution joint_distribution(int n, const std::optional<Endpoints> &restriction) {
    const int cap = restriction ? kMaxRestrictedDistributionN : kMaxDistributionN;
    if (n < 1 || n > cap) fail(ErrorCode::limit, "distribution supports 1 <= n <= " + std::to_string(cap));
    JointDistribution d{n, restriction, {}};
    for_each_linked(n, [&](const LinkedPartition &p) {
        if (restriction && endpoints(p) != *restriction) return;
        const CrossNest cn = crossing_nesting(p);
        ++d.counts[{cn.crossing, cn.nesting}];
    });
    return d;
}

std::map<Endpoints, JointDistribution> restricted_distributions(int n) {
    if (n < 1 || n > kMaxRestrictedDistributionN)
        fail(ErrorCode::limit, "distribution supports 1 <= n <= " + std::to_string(kMaxRestrictedDistributionN));
    std::map<Endpoints, JointDistribution> out;
    for_each_linked(n, [&](const LinkedPartition &p) {
        Endpoints e = endpoints(p);
        auto [it, inserted] = out.try_emplace(e, JointDistribution{n, e, {}});
        const CrossNest cn = crossing_nesting(p);
        ++it->second.counts[{cn.crossing, cn.nesting}];
    });
    return out;
}

bool verify_symmetry(const JointDistribution &d) {
    for (const auto &[key, c] : d.counts) {
        auto it = d.counts.find({key.second, key.first});
        if (it == d.counts.end() || it->second != c) return false;
    }
    return true;
}

bool VerificationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; });
}

std::vector<std::uint64_t> large_schroeder(int m) {
    std::vector<std::uint64_t> r{1};
    for (int k = 1; k <= m; ++k) {
        std::uint64_t next = r[k - 1];
        for (int i = 0; i < k; ++i) next += r[i] * r[k - 1 - i];
        r.push_back(next);
    }
    return r;
}

namespace {

std::uint64_t rgs_count(int pos, int n, int max_used) {
    if (pos == n) return 1;
    std::uint64_t total = 0;
    for (int v = 0; v <= max_used + 1; ++v) total += rgs_count(pos + 1, n, std::max(max_used, v));
    return total;
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::string distribution_text(const JointDistribution &d) {
    std::string s;
    for (const auto &[key, c] : d.counts)
        s += "(" + std::to_string(key.first) + "," + std::to_string(key.second) + "):" + std::to_string(c) + " ";
    if (d.restriction) s += "S=" + to_text(d.restriction->left) + " T=" + to_text(d.restriction->right);
    return s;
}

// Accumulates one named check; only the first counterexample is kept.
class Check {
  public:
    explicit Check(std::string name) { result_.name = std::move(name); }

    void require(bool ok, const std::string &counterexample) {
        if (ok || !result_.passed) return;
        result_.passed = false;
        result_.counterexample = counterexample;
    }
    CheckResult done() && { return std::move(result_); }

  private:
    CheckResult result_;
};

} // namespace

std::uint64_t count_set_partitions_rgs(int n) { return n <= 0 ? 1 : rgs_count(1, n, 0); }

VerificationReport verify_suite(int n) {
    if (n < 1 || n > kMaxVerifyN) fail(ErrorCode::limit, "verification supports 1 <= n <= " + std::to_string(kMaxVerifyN));
    VerificationReport report{n, {}};
    const std::vector<LinkedPartition> all = enumerate_linked(n);
    const std::vector<VacillatingTableau> tableaux = enumerate_vht(n);

    {
        Check c("bijection");
        std::set<LinkedPartition> image;
        for (const auto &v : tableaux) {
            const LinkedPartition p = phi(v);
            c.require(image.insert(p).second, "two tableaux map to " + to_text(p) + ", e.g. " + to_text(v));
        }
        c.require(tableaux.size() == all.size(),
                  std::to_string(tableaux.size()) + " tableaux vs " + std::to_string(all.size()) + " partitions");
        c.require(std::equal(image.begin(), image.end(), all.begin(), all.end()), "image differs from all partitions");
        report.checks.push_back(std::move(c).done());
    }
    {
        Check c("inverse-roundtrip");
        for (const auto &v : tableaux) {
            const VacillatingTableau back = phi_inverse(phi(v));
            c.require(back == v, to_text(v) + " -> " + to_text(back));
        }
        for (const auto &p : all) {
            const LinkedPartition back = phi(phi_inverse(p));
            c.require(back == p, to_text(p) + " -> " + to_text(back));
        }
        report.checks.push_back(std::move(c).done());
    }
    {
        Check c("extrema");
        for (const auto &p : all) {
            const Extrema e = vht_extrema(phi_inverse(p));
            const CrossNest cn = crossing_nesting_oracle(p);
            c.require(e.rows == cn.crossing && e.cols == cn.nesting,
                      to_text(p) + " rows=" + std::to_string(e.rows) + " cols=" + std::to_string(e.cols) +
                          " cr=" + std::to_string(cn.crossing) + " ne=" + std::to_string(cn.nesting));
            c.require(crossing_nesting(p) == cn, to_text(p) + " fast statistics disagree with the oracle");
        }
        report.checks.push_back(std::move(c).done());
    }

    const auto restricted = restricted_distributions(n);
    {
        Check c("symmetry-unrestricted");
        const JointDistribution d = joint_distribution(n);
        c.require(verify_symmetry(d), distribution_text(d));
        report.checks.push_back(std::move(c).done());
    }
    {
        Check c("symmetry-restricted");
        for (const auto &[e, d] : restricted) c.require(verify_symmetry(d), distribution_text(d));
        report.checks.push_back(std::move(c).done());
    }
    {
        Check c("symmetry-front");
        JointDistribution front{n, std::nullopt, {}};
        for (const auto &[e, d] : restricted) {
            if (std::any_of(e.left.begin(), e.left.end(), [&](int v) { return e.right.count(v) > 0; })) continue;
            c.require(verify_symmetry(d), distribution_text(d));
            for (const auto &[key, cnt] : d.counts) front.counts[key] += cnt;
        }
        c.require(verify_symmetry(front), "front aggregate " + distribution_text(front));
        report.checks.push_back(std::move(c).done());
    }
    {
        Check c("psi");
        for (const auto &p : all) {
            const LinkedPartition q = psi(p);
            const CrossNest a = crossing_nesting(p);
            const CrossNest b = crossing_nesting(q);
            c.require(psi(q) == p, to_text(p) + " is not fixed by psi twice");
            c.require(a.crossing == b.nesting && a.nesting == b.crossing,
                      to_text(p) + " -> " + to_text(q) + " does not swap statistics");
            c.require(endpoints(p) == endpoints(q), to_text(p) + " -> " + to_text(q) + " changes endpoints");
        }
        report.checks.push_back(std::move(c).done());
    }
    {
        Check c("factorial");
        c.require(all.size() == factorial(n),
                  std::to_string(all.size()) + " partitions, expected " + std::to_string(factorial(n)));
        report.checks.push_back(std::move(c).done());
    }
    {
        Check c("schroeder");
        const auto schroeder = large_schroeder(n - 1);
        for (int m = 0; m + 1 <= n; ++m) {
            std::uint64_t noncrossing = 0;
            for_each_linked(m + 1, [&](const LinkedPartition &p) { noncrossing += crossing_nesting(p).crossing <= 1; });
            c.require(noncrossing == schroeder[m], "[" + std::to_string(m + 1) + "] has " + std::to_string(noncrossing) +
                                                       " noncrossing, expected " + std::to_string(schroeder[m]));
        }
        report.checks.push_back(std::move(c).done());
    }
    {
        Check c("bell");
        const auto front = std::count_if(all.begin(), all.end(), [](const auto &p) { return is_front_representation(p); });
        const std::uint64_t bell = count_set_partitions_rgs(n);
        c.require(static_cast<std::uint64_t>(front) == bell,
                  std::to_string(front) + " front representations, expected " + std::to_string(bell));
        report.checks.push_back(std::move(c).done());
    }
    return report;
}

} // namespace hvt
