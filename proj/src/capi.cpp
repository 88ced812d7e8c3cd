#include "hvt/hvt.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "hvt/document.hpp"
#include "hvt/error.hpp"

struct hvt_document {
    hvt::Document doc;
};

namespace {

thread_local std::string g_last_error;

hvt_status to_status(hvt::ErrorCode code) {
    switch (code) {
    case hvt::ErrorCode::parse: return HVT_ERR_PARSE;
    case hvt::ErrorCode::validation: return HVT_ERR_VALIDATION;
    case hvt::ErrorCode::shape_mismatch: return HVT_ERR_SHAPE_MISMATCH;
    case hvt::ErrorCode::precondition: return HVT_ERR_PRECONDITION;
    case hvt::ErrorCode::unreachable: return HVT_ERR_UNREACHABLE;
    case hvt::ErrorCode::limit: return HVT_ERR_LIMIT;
    case hvt::ErrorCode::internal: return HVT_ERR_INTERNAL;
    }
    return HVT_ERR_INTERNAL;
}

struct ArgumentError {
    std::string what;
};

// Runs `body`, translating exceptions into status codes.
template <class F> hvt_status guarded(F &&body) {
    try {
        g_last_error.clear();
        body();
        return HVT_OK;
    } catch (const hvt::Error &e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const ArgumentError &e) {
        g_last_error = e.what;
        return HVT_ERR_ARGUMENT;
    } catch (const std::exception &e) {
        g_last_error = e.what();
        return HVT_ERR_INTERNAL;
    }
}

void need(const void *p, const char *name) {
    if (!p) throw ArgumentError{std::string(name) + " must not be null"};
}

char *dup_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

hvt_document *wrap(hvt::Document d) { return new hvt_document{std::move(d)}; }

template <class T> const T &expect(const hvt_document *d, const char *what) {
    need(d, what);
    if (const T *v = std::get_if<T>(&d->doc.value)) return *v;
    throw ArgumentError{std::string(what) + " has kind \"" + std::string(hvt::kind_name(d->doc.kind)) +
                        "\", which this call does not accept"};
}

hvt::LinkedPartition as_linked(const hvt_document *d, const char *what) {
    need(d, what);
    if (const auto *b = std::get_if<hvt::BlockPartition>(&d->doc.value)) return hvt::blocks_to_arcs(*b);
    return expect<hvt::LinkedPartition>(d, what);
}

std::optional<hvt::Endpoints> restriction_from(const char *left, const char *right) {
    if (!left && !right) return std::nullopt;
    if (!left || !right) throw ArgumentError{"give both endpoint sets or neither"};
    return hvt::Endpoints{hvt::parse_int_set(left), hvt::parse_int_set(right)};
}

std::string arcs_text(const std::vector<hvt::Arc> &arcs) {
    std::string s = "{";
    for (std::size_t i = 0; i < arcs.size(); ++i)
        s += (i ? "," : "") + std::to_string(arcs[i].left) + "-" + std::to_string(arcs[i].right);
    return s + "}";
}

} // namespace

extern "C" {

const char *hvt_version(void) { return "1.0.0"; }

const char *hvt_last_error(void) { return g_last_error.c_str(); }

const char *hvt_status_name(hvt_status status) {
    switch (status) {
    case HVT_OK: return "ok";
    case HVT_ERR_PARSE: return "parse error";
    case HVT_ERR_VALIDATION: return "validation error";
    case HVT_ERR_SHAPE_MISMATCH: return "shape mismatch";
    case HVT_ERR_PRECONDITION: return "precondition violated";
    case HVT_ERR_UNREACHABLE: return "unreachable input";
    case HVT_ERR_LIMIT: return "size limit exceeded";
    case HVT_ERR_INTERNAL: return "internal error";
    case HVT_ERR_ARGUMENT: return "invalid argument";
    }
    return "unknown status";
}

void hvt_string_free(char *s) { std::free(s); }

hvt_status hvt_document_parse(const char *kind, const char *text, hvt_document **out) {
    return guarded([&] {
        need(kind, "kind");
        need(text, "text");
        need(out, "out");
        *out = wrap(hvt::parse(hvt::kind_from_name(kind), text));
    });
}

hvt_status hvt_document_from_json(const char *json, hvt_document **out) {
    return guarded([&] {
        need(json, "json");
        need(out, "out");
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(json);
        } catch (const nlohmann::json::exception &e) {
            hvt::fail(hvt::ErrorCode::parse, e.what());
        }
        *out = wrap(hvt::from_json(j));
    });
}

hvt_document *hvt_document_clone(const hvt_document *doc) { return doc ? new hvt_document{doc->doc} : nullptr; }

void hvt_document_free(hvt_document *doc) { delete doc; }

const char *hvt_document_kind(const hvt_document *doc) {
    return doc ? hvt::kind_name(doc->doc.kind).data() : nullptr;
}

hvt_status hvt_document_to_text(const hvt_document *doc, char **out) {
    return guarded([&] {
        need(doc, "doc");
        need(out, "out");
        *out = dup_string(hvt::serialize(doc->doc));
    });
}

hvt_status hvt_document_to_json(const hvt_document *doc, char **out) {
    return guarded([&] {
        need(doc, "doc");
        need(out, "out");
        *out = dup_string(hvt::to_json(doc->doc).dump());
    });
}

int hvt_document_equal(const hvt_document *a, const hvt_document *b) {
    if (!a || !b) return a == b;
    return a->doc == b->doc;
}

hvt_status hvt_insert(const hvt_document *tableau, int x, hvt_document **out, int *corner_row, int *corner_col,
                      int *alpha) {
    return guarded([&] {
        need(out, "out");
        auto res = hvt::hecke_insert(expect<hvt::IncreasingTableau>(tableau, "tableau"), x);
        if (corner_row) *corner_row = res.corner.row;
        if (corner_col) *corner_col = res.corner.col;
        if (alpha) *alpha = res.alpha;
        *out = wrap(hvt::make_document(std::move(res.result)));
    });
}

hvt_status hvt_reverse_insert(const hvt_document *tableau, int corner_row, int corner_col, int alpha,
                              hvt_document **out, int *x) {
    return guarded([&] {
        need(out, "out");
        auto [t, letter] = hvt::hecke_reverse_insert(expect<hvt::IncreasingTableau>(tableau, "tableau"),
                                                     hvt::Cell{corner_row, corner_col}, alpha);
        if (x) *x = letter;
        *out = wrap(hvt::make_document(std::move(t)));
    });
}

hvt_status hvt_word_tableau(const hvt_document *word, hvt_document **out, int *inc, int *dec) {
    return guarded([&] {
        need(out, "out");
        const auto &w = expect<hvt::Word>(word, "word");
        const auto m = hvt::longest_monotone(w);
        if (inc) *inc = m.increasing;
        if (dec) *dec = m.decreasing;
        *out = wrap(hvt::make_document(hvt::insertion_tableau(w)));
    });
}

hvt_status hvt_to_blocks(const hvt_document *partition, hvt_document **out) {
    return guarded([&] {
        need(out, "out");
        *out = wrap(hvt::make_document(hvt::arcs_to_blocks(as_linked(partition, "partition"))));
    });
}

hvt_status hvt_to_arcs(const hvt_document *partition, hvt_document **out) {
    return guarded([&] {
        need(out, "out");
        *out = wrap(hvt::make_document(as_linked(partition, "partition")));
    });
}

hvt_status hvt_crossing_nesting(const hvt_document *partition, int use_oracle, int *crossing, int *nesting) {
    return guarded([&] {
        const auto p = as_linked(partition, "partition");
        const auto cn = use_oracle ? hvt::crossing_nesting_oracle(p) : hvt::crossing_nesting(p);
        if (crossing) *crossing = cn.crossing;
        if (nesting) *nesting = cn.nesting;
    });
}

hvt_status hvt_endpoints(const hvt_document *partition, char **left, char **right, int *front) {
    return guarded([&] {
        const auto p = as_linked(partition, "partition");
        const auto e = hvt::endpoints(p);
        if (front) *front = hvt::is_front_representation(p);
        if (left) *left = dup_string(hvt::to_text(e.left));
        if (right) *right = dup_string(hvt::to_text(e.right));
    });
}

hvt_status hvt_to_linked(const hvt_document *vht, hvt_document **out) {
    return guarded([&] {
        need(out, "out");
        *out = wrap(hvt::make_document(hvt::phi(expect<hvt::VacillatingTableau>(vht, "vht"))));
    });
}

hvt_status hvt_to_vht(const hvt_document *partition, hvt_document **out) {
    return guarded([&] {
        need(out, "out");
        *out = wrap(hvt::make_document(hvt::phi_inverse(as_linked(partition, "partition"))));
    });
}

hvt_status hvt_phi_trace(const hvt_document *vht, int structured, char **out) {
    return guarded([&] {
        need(out, "out");
        const auto &v = expect<hvt::VacillatingTableau>(vht, "vht");
        hvt::PhiTrace trace;
        hvt::phi(v, &trace);
        const auto words = hvt::phi_word_trace(v);
        if (structured) {
            nlohmann::json steps = nlohmann::json::array();
            for (std::size_t i = 0; i < words.size(); ++i) {
                nlohmann::json edges = nlohmann::json::array();
                for (const auto &a : trace.edges[i]) edges.push_back({a.left, a.right});
                steps.push_back({{"index", i},
                                 {"diagram", hvt::to_text(v[i])},
                                 {"edges", edges},
                                 {"tableau", hvt::to_text(trace.tableaux[i])},
                                 {"word", words[i]}});
            }
            *out = dup_string(steps.dump());
            return;
        }
        std::string text;
        for (std::size_t i = 0; i < words.size(); ++i) {
            text += "i=" + std::to_string(i) + " E=" + arcs_text(trace.edges[i]) +
                    " T=" + hvt::to_text(trace.tableaux[i]) + " w=" + hvt::to_text(words[i]) + "\n";
        }
        *out = dup_string(text);
    });
}

hvt_status hvt_vht_extrema(const hvt_document *vht, int *rows, int *cols) {
    return guarded([&] {
        const auto e = hvt::vht_extrema(expect<hvt::VacillatingTableau>(vht, "vht"));
        if (rows) *rows = e.rows;
        if (cols) *cols = e.cols;
    });
}

hvt_status hvt_conjugate(const hvt_document *doc, hvt_document **out) {
    return guarded([&] {
        need(doc, "doc");
        need(out, "out");
        if (const auto *d = std::get_if<hvt::HeckeDiagram>(&doc->doc.value))
            *out = wrap(hvt::make_document(hvt::conjugate_diagram(*d)));
        else if (const auto *v = std::get_if<hvt::VacillatingTableau>(&doc->doc.value))
            *out = wrap(hvt::make_document(hvt::conjugate_vht(*v)));
        else
            *out = wrap(hvt::make_document(hvt::psi(as_linked(doc, "doc"))));
    });
}

hvt_status hvt_stats(int n, const char *left, const char *right, hvt_document **out, int *symmetric) {
    return guarded([&] {
        need(out, "out");
        auto d = hvt::joint_distribution(n, restriction_from(left, right));
        if (symmetric) *symmetric = hvt::verify_symmetry(d);
        *out = wrap(hvt::make_document(std::move(d)));
    });
}

hvt_status hvt_enumerate(const char *kind, int n, unsigned filters, const char *left, const char *right,
                         hvt_visit_fn visit, void *user) {
    return guarded([&] {
        need(kind, "kind");
        need(reinterpret_cast<const void *>(visit), "visit");
        const std::string k = kind;
        if (k != "linked" && k != "blocks" && k != "vht")
            throw ArgumentError{"enumerate supports the kinds linked, blocks and vht"};
        const auto restriction = restriction_from(left, right);
        for (const auto &p : hvt::enumerate_linked(n)) {
            if ((filters & HVT_FILTER_NONCROSSING) && hvt::crossing_nesting(p).crossing > 1) continue;
            if ((filters & HVT_FILTER_SETPARTITION) && !hvt::is_front_representation(p)) continue;
            if (restriction && hvt::endpoints(p) != *restriction) continue;
            hvt_document doc{k == "linked"   ? hvt::make_document(p)
                             : k == "blocks" ? hvt::make_document(hvt::arcs_to_blocks(p))
                                             : hvt::make_document(hvt::phi_inverse(p))};
            if (visit(&doc, user)) return;
        }
    });
}

hvt_status hvt_verify(int n, hvt_document **report, int *passed) {
    return guarded([&] {
        need(report, "report");
        auto r = hvt::verify_suite(n);
        if (passed) *passed = r.all_passed();
        *report = wrap(hvt::make_document(std::move(r)));
    });
}

} // extern "C"
