#include "hvt/vacillating.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "hvt/error.hpp"

namespace hvt {

namespace {

[[noreturn]] void clause_fail(std::size_t index, const char *clause, const std::string &what) {
    fail(ErrorCode::validation, "diagram " + std::to_string(index) + ": clause " + clause + ": " + what);
}

bool equal_or_rook_strip(const Partition &outer, const Partition &inner) {
    return outer.contains(inner) && is_rook_strip(outer, inner);
}

bool equal_or_single_square(const Partition &outer, const Partition &inner) {
    return outer.contains(inner) && outer.size() - inner.size() <= 1;
}

} // namespace

VacillatingTableau validate_vht(std::vector<HeckeDiagram> diagrams) {
    if (diagrams.size() % 2 == 0) fail(ErrorCode::validation, "a vacillating tableau has an odd number of diagrams");
    const std::size_t last = diagrams.size() - 1;
    if (!diagrams.front().shape().empty() || diagrams.front().marked())
        clause_fail(0, "(i)", "first diagram must be empty");
    if (!diagrams.back().shape().empty() || diagrams.back().marked())
        clause_fail(last, "(i)", "last diagram must be empty");
    for (std::size_t i = 1; i < diagrams.size(); i += 2)
        if (diagrams[i].marked()) clause_fail(i, "(i)", "odd-indexed diagrams carry no mark");

    for (std::size_t e = 0; e <= last; e += 2) {
        const HeckeDiagram &d = diagrams[e];
        const Partition &mu = d.shape();
        if (e > 0) {
            const Partition &before = diagrams[e - 1].shape();
            if (!equal_or_rook_strip(mu, before))
                clause_fail(e, "(ii)",
                            d.marked() ? "underlying diagram must equal or add a rook strip to the previous one"
                                       : "diagram must equal or add a rook strip to the previous one");
        }
        if (e < last) {
            const Partition &after = diagrams[e + 1].shape();
            if (d.marked()) {
                if (after != mu) clause_fail(e + 1, "(ii)", "diagram after a marked one must be its underlying diagram");
            } else if (!equal_or_single_square(mu, after)) {
                clause_fail(e + 1, "(ii)", "diagram must equal or remove one square from the previous one");
            }
        }
    }
    VacillatingTableau v;
    v.diagrams_ = std::move(diagrams);
    return v;
}

LinkedPartition phi(const VacillatingTableau &v, PhiTrace *trace) {
    const int n = v.n();
    const std::size_t len = v.diagrams().size();
    std::vector<HeckeTableau> tabs(len);
    std::vector<std::vector<Arc>> edges(len);
    std::vector<int> letters(len, 0);

    for (std::size_t i = 1; i < len; ++i) {
        const HeckeDiagram &cur = v[i];
        const HeckeDiagram &prev = v[i - 1];
        edges[i] = edges[i - 1];
        if (cur == prev) {
            tabs[i] = tabs[i - 1];
            continue;
        }
        if (i % 2 == 1) {
            const int k = static_cast<int>((i + 1) / 2);
            Cell corner;
            int alpha = 0;
            if (prev.marked()) {
                corner = *prev.mark();
            } else {
                const auto removed = skew_cells(prev.shape(), cur.shape());
                ensure(removed.size() == 1, "odd step removes one square");
                corner = removed.front();
                alpha = 1;
            }
            int j = 0;
            IncreasingTableau t;
            try {
                std::tie(t, j) = hecke_reverse_insert(tabs[i - 1].tab(), corner, alpha);
            } catch (const Error &err) {
                fail(ErrorCode::internal,
                     "reverse insertion failed at step " + std::to_string(i) + " of a validated tableau: " + err.what());
            }
            ensure(j >= 1 && j < k, "recovered letter precedes the current vertex");
            tabs[i] = HeckeTableau(std::move(t));
            edges[i].push_back({j, k});
            letters[i] = j;
        } else {
            const int k = static_cast<int>(i / 2);
            TableauEditor ed(tabs[i - 1].tab());
            auto &rows = ed.rows();
            for (const Cell &c : skew_cells(cur.shape(), prev.shape())) {
                if (c.row > static_cast<int>(rows.size())) rows.emplace_back();
                rows[c.row - 1].push_back(k);
            }
            tabs[i] = HeckeTableau(std::move(ed).finish(), cur.mark());
        }
        ensure(tabs[i].diagram() == cur, "trace tableau has the diagram's shape");
        ensure(tabs[i].tab().max_entry() <= n, "tableau letters are bounded by n");
    }

    LinkedPartition out(n, edges.back());
    if (trace) *trace = PhiTrace{std::move(edges), std::move(tabs), std::move(letters)};
    return out;
}

VacillatingTableau phi_inverse(const LinkedPartition &p) {
    const int n = p.n();
    std::vector<HeckeTableau> tabs(2 * n + 1);
    for (int i = n; i >= 1; --i) {
        tabs[2 * i - 1] = HeckeTableau(delete_letter_squares(tabs[2 * i].tab(), i));
        const int j = p.parent(i);
        if (j == 0) {
            tabs[2 * i - 2] = tabs[2 * i - 1];
            continue;
        }
        auto out = hecke_insert(tabs[2 * i - 1].tab(), j);
        tabs[2 * i - 2] = out.alpha == 1 ? HeckeTableau(std::move(out.result))
                                         : HeckeTableau(std::move(out.result), out.corner);
    }
    std::vector<HeckeDiagram> diagrams;
    diagrams.reserve(tabs.size());
    for (const auto &t : tabs) diagrams.push_back(t.diagram());
    try {
        return validate_vht(std::move(diagrams));
    } catch (const Error &err) {
        fail(ErrorCode::internal, std::string("inverse construction produced an invalid tableau: ") + err.what());
    }
}

Extrema vht_extrema(const VacillatingTableau &v) {
    Extrema e;
    for (const auto &d : v.diagrams()) {
        e.rows = std::max(e.rows, d.shape().rows());
        e.cols = std::max(e.cols, d.shape().cols());
    }
    return e;
}

VacillatingTableau conjugate_vht(const VacillatingTableau &v) {
    std::vector<HeckeDiagram> out;
    out.reserve(v.diagrams().size());
    for (const auto &d : v.diagrams()) out.push_back(conjugate_diagram(d));
    return validate_vht(std::move(out));
}

LinkedPartition psi(const LinkedPartition &p) { return phi(conjugate_vht(phi_inverse(p))); }

std::vector<Word> phi_word_trace(const VacillatingTableau &v) {
    PhiTrace trace;
    phi(v, &trace);
    const std::size_t len = v.diagrams().size();
    std::vector<Word> words(len);
    for (std::size_t i = len - 1; i >= 1; --i) {
        Word w = words[i];
        if (!(trace.tableaux[i - 1] == trace.tableaux[i])) {
            if (i % 2 == 1) {
                ensure(trace.letters[i] > 0, "changed odd step recovers a letter");
                w.push_back(trace.letters[i]);
            } else {
                const int k = static_cast<int>(i / 2);
                std::erase(w, k);
            }
        }
        words[i - 1] = std::move(w);
    }
    return words;
}

namespace {

// Diagrams mu containing nu with mu/nu empty or a rook strip and |mu| <= cap.
std::vector<Partition> rook_strip_extensions(const Partition &nu, int cap) {
    std::vector<Partition> out;
    const int candidates = nu.rows() + 1;
    for (unsigned mask = 0; mask < (1u << candidates); ++mask) {
        if (nu.size() + std::popcount(mask) > cap) continue;
        std::vector<int> parts = nu.parts();
        parts.resize(candidates, 0);
        std::vector<int> cols;
        for (int r = 0; r < candidates; ++r) {
            if (mask & (1u << r)) {
                ++parts[r];
                cols.push_back(parts[r]);
            }
        }
        bool ok = std::is_sorted(parts.rbegin(), parts.rend());
        std::sort(cols.begin(), cols.end());
        ok = ok && std::adjacent_find(cols.begin(), cols.end()) == cols.end();
        if (!ok) continue;
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        out.emplace_back(std::move(parts));
    }
    return out;
}

void vht_search(int n, int step, std::vector<HeckeDiagram> &seq,
                const std::function<void(const VacillatingTableau &)> &visit) {
    // seq holds diagrams 0..2*step; extend with 2*step+1 and 2*step+2.
    if (step == n) {
        visit(validate_vht(seq));
        return;
    }
    const HeckeDiagram cur = seq.back();
    std::vector<Partition> odd_choices;
    if (cur.marked()) {
        odd_choices.push_back(cur.shape());
    } else {
        odd_choices.push_back(cur.shape());
        for (const Cell &c : corners(cur.shape())) odd_choices.push_back(remove_corner(cur.shape(), c));
    }
    const int remaining = n - (step + 1); // odd steps left after the next even one
    for (const auto &nu : odd_choices) {
        seq.emplace_back(nu);
        for (const auto &mu : rook_strip_extensions(nu, remaining)) {
            seq.emplace_back(mu);
            vht_search(n, step + 1, seq, visit);
            seq.pop_back();
            if (mu.size() <= remaining - 1) {
                for (const Cell &c : corners(mu)) {
                    seq.emplace_back(mu, c);
                    vht_search(n, step + 1, seq, visit);
                    seq.pop_back();
                }
            }
        }
        seq.pop_back();
    }
}

} // namespace

void for_each_vht(int n, const std::function<void(const VacillatingTableau &)> &visit) {
    if (n < 1 || n > 8) fail(ErrorCode::limit, "vacillating tableau search supports 1 <= n <= 8");
    std::vector<HeckeDiagram> seq(1);
    vht_search(n, 0, seq, visit);
}

std::vector<VacillatingTableau> enumerate_vht(int n) {
    std::vector<VacillatingTableau> out;
    for_each_vht(n, [&](const VacillatingTableau &v) { out.push_back(v); });
    return out;
}

} // namespace hvt
