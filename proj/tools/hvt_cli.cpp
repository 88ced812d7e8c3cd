// Command-line front end. Uses only the C interface in hvt.h.

#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hvt/hvt.h"

namespace {

enum Exit { kOk = 0, kDomain = 1, kUsage = 2, kVerifyFailed = 3 };

struct DocDeleter {
    void operator()(hvt_document *d) const { hvt_document_free(d); }
};
using Doc = std::unique_ptr<hvt_document, DocDeleter>;

struct StrDeleter {
    void operator()(char *s) const { hvt_string_free(s); }
};
using Str = std::unique_ptr<char, StrDeleter>;

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(hvt_status st) {
    if (st != HVT_OK) throw DomainError(std::string(hvt_status_name(st)) + ": " + hvt_last_error());
}

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Inline text, "@path" for a file, "@-" or no value for standard input.
std::string resolve_input(const std::optional<std::string> &arg) {
    if (arg && (arg->empty() || arg->front() != '@')) return trim(*arg);
    const std::string path = arg ? arg->substr(1) : "-";
    if (path == "-") return trim(std::string(std::istreambuf_iterator<char>(std::cin), {}));
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read " + path);
    return trim(std::string(std::istreambuf_iterator<char>(in), {}));
}

Doc parse(const char *kind, const std::string &text) {
    hvt_document *d = nullptr;
    check(hvt_document_parse(kind, text.c_str(), &d));
    return Doc(d);
}

// Best guess from the text; overridden by --kind.
const char *guess_kind(const std::string &text) {
    if (text.find('{') != std::string::npos) return "blocks";
    if (text.rfind("n=", 0) == 0) return "linked";
    if (text.find(';') != std::string::npos) return "vht";
    if (text.find('/') != std::string::npos) return "tableau";
    return "partition";
}

Doc parse_object(const std::optional<std::string> &arg, const std::string &kind) {
    const std::string text = resolve_input(arg);
    return parse(kind.empty() ? guess_kind(text) : kind.c_str(), text);
}

std::string text_of(const hvt_document *d) {
    char *s = nullptr;
    check(hvt_document_to_text(d, &s));
    return Str(s).get();
}

nlohmann::json json_of(const hvt_document *d) {
    char *s = nullptr;
    check(hvt_document_to_json(d, &s));
    return nlohmann::json::parse(Str(s).get());
}

std::string take(char *s) { return Str(s).get(); }

std::pair<int, int> parse_corner(const std::string &text) {
    int r = 0, c = 0;
    char tail = 0;
    if (std::sscanf(text.c_str(), "%d,%d%c", &r, &c, &tail) != 2) throw DomainError("corner must look like r,c");
    return {r, c};
}

struct Options {
    bool json = false;
    std::optional<std::string> object;
    std::string kind;
    int x = 0;
    std::string corner;
    int alpha = 1;
    bool trace = false;
    bool word_trace = false;
    bool blocks = false;
    bool oracle = false;
    bool extrema = false;
    int n = 0;
    std::optional<std::string> left, right;
    bool noncrossing = false;
    bool setpartition = false;
    bool count_only = false;
};

void print(const Options &o, const nlohmann::json &j, const std::string &text) {
    if (o.json)
        std::cout << j.dump() << '\n';
    else
        std::cout << text;
}

int cmd_insert(const Options &o) {
    Doc t = parse_object(o.object, "tableau");
    hvt_document *out = nullptr;
    int r = 0, c = 0, alpha = 0;
    check(hvt_insert(t.get(), o.x, &out, &r, &c, &alpha));
    Doc res(out);
    print(o, {{"tableau", json_of(res.get())}, {"corner", {r, c}}, {"alpha", alpha}},
          text_of(res.get()) + "\ncorner=" + std::to_string(r) + "," + std::to_string(c) +
              " alpha=" + std::to_string(alpha) + "\n");
    return kOk;
}

int cmd_rinsert(const Options &o) {
    Doc t = parse_object(o.object, "tableau");
    const auto [r, c] = parse_corner(o.corner);
    hvt_document *out = nullptr;
    int x = 0;
    check(hvt_reverse_insert(t.get(), r, c, o.alpha, &out, &x));
    Doc res(out);
    print(o, {{"tableau", json_of(res.get())}, {"x", x}}, text_of(res.get()) + "\nx=" + std::to_string(x) + "\n");
    return kOk;
}

int cmd_word_tableau(const Options &o) {
    Doc w = parse_object(o.object, "word");
    hvt_document *out = nullptr;
    int inc = 0, dec = 0;
    check(hvt_word_tableau(w.get(), &out, &inc, &dec));
    Doc res(out);
    print(o, {{"tableau", json_of(res.get())}, {"is", inc}, {"de", dec}},
          text_of(res.get()) + "\nis=" + std::to_string(inc) + " de=" + std::to_string(dec) + "\n");
    return kOk;
}

// Optionally re-expresses a linked partition by its blocks.
Doc as_requested(Doc p, bool blocks) {
    if (!blocks) return p;
    hvt_document *out = nullptr;
    check(hvt_to_blocks(p.get(), &out));
    return Doc(out);
}

int cmd_to_linked(const Options &o) {
    Doc v = parse_object(o.object, "vht");
    hvt_document *out = nullptr;
    check(hvt_to_linked(v.get(), &out));
    Doc res = as_requested(Doc(out), o.blocks);

    if (!o.trace && !o.word_trace) {
        print(o, json_of(res.get()), text_of(res.get()) + "\n");
        return kOk;
    }
    char *raw = nullptr;
    check(hvt_phi_trace(v.get(), o.json ? 1 : 0, &raw));
    const std::string trace = take(raw);
    if (o.json) {
        auto steps = nlohmann::json::parse(trace);
        if (!o.trace)
            for (auto &s : steps) s = {{"index", s["index"]}, {"word", s["word"]}};
        std::cout << nlohmann::json{{"result", json_of(res.get())}, {"trace", steps}}.dump() << '\n';
        return kOk;
    }
    std::istringstream lines(trace);
    for (std::string line; std::getline(lines, line);) {
        if (o.trace) {
            std::cout << line << '\n';
        } else {
            const auto w = line.rfind(" w=");
            std::cout << line.substr(0, line.find(' ')) << line.substr(w) << '\n';
        }
    }
    std::cout << text_of(res.get()) << '\n';
    return kOk;
}

int cmd_to_vht(const Options &o) {
    Doc p = parse_object(o.object, o.kind);
    hvt_document *out = nullptr;
    check(hvt_to_vht(p.get(), &out));
    Doc v(out);
    if (!o.extrema) {
        print(o, json_of(v.get()), text_of(v.get()) + "\n");
        return kOk;
    }
    int rows = 0, cols = 0;
    check(hvt_vht_extrema(v.get(), &rows, &cols));
    print(o, {{"vht", json_of(v.get())}, {"rows", rows}, {"cols", cols}},
          text_of(v.get()) + "\nrows=" + std::to_string(rows) + " cols=" + std::to_string(cols) + "\n");
    return kOk;
}

int cmd_conjugate(const Options &o) {
    Doc d = parse_object(o.object, o.kind);
    hvt_document *out = nullptr;
    check(hvt_conjugate(d.get(), &out));
    Doc res(out);
    if (std::strcmp(hvt_document_kind(res.get()), "linked") == 0) res = as_requested(std::move(res), o.blocks);
    print(o, json_of(res.get()), text_of(res.get()) + "\n");
    return kOk;
}

int cmd_endpoints(const Options &o) {
    Doc p = parse_object(o.object, o.kind);
    char *left = nullptr, *right = nullptr;
    int front = 0, cr = 0, ne = 0;
    check(hvt_endpoints(p.get(), &left, &right, &front));
    const std::string s = take(left), t = take(right);
    check(hvt_crossing_nesting(p.get(), o.oracle ? 1 : 0, &cr, &ne));
    print(o, {{"S", s}, {"T", t}, {"front", front != 0}, {"cr", cr}, {"ne", ne}},
          "S=" + s + "\nT=" + t + "\nfront=" + (front ? "yes" : "no") + "\ncr=" + std::to_string(cr) +
              " ne=" + std::to_string(ne) + "\n");
    return kOk;
}

const char *c_str_or_null(const std::optional<std::string> &s) { return s ? s->c_str() : nullptr; }

int cmd_stats(const Options &o) {
    hvt_document *out = nullptr;
    int symmetric = 0;
    check(hvt_stats(o.n, c_str_or_null(o.left), c_str_or_null(o.right), &out, &symmetric));
    Doc d(out);
    print(o, json_of(d.get()), text_of(d.get()));
    return kOk;
}

struct EnumerateState {
    bool json;
    bool count_only;
    std::uint64_t count = 0;
    std::string error;
};

int visit(const hvt_document *doc, void *user) {
    auto *st = static_cast<EnumerateState *>(user);
    ++st->count;
    if (st->count_only) return 0;
    char *s = nullptr;
    if (hvt_document_to_json(doc, &s) != HVT_OK || !s) {
        st->error = hvt_last_error();
        return 1;
    }
    Str owned(s);
    if (!st->json && hvt_document_to_text(doc, &s) == HVT_OK) owned.reset(s);
    std::cout << owned.get() << '\n';
    return 0;
}

int cmd_enumerate(const Options &o) {
    EnumerateState st{o.json, o.count_only};
    unsigned filters = 0;
    if (o.noncrossing) filters |= HVT_FILTER_NONCROSSING;
    if (o.setpartition) filters |= HVT_FILTER_SETPARTITION;
    const std::string kind = o.kind.empty() ? "linked" : o.kind;
    check(hvt_enumerate(kind.c_str(), o.n, filters, c_str_or_null(o.left), c_str_or_null(o.right), visit, &st));
    if (!st.error.empty()) throw DomainError(st.error);
    if (o.count_only) print(o, {{"count", st.count}}, std::to_string(st.count) + "\n");
    return kOk;
}

int cmd_verify(const Options &o) {
    hvt_document *out = nullptr;
    int passed = 0;
    check(hvt_verify(o.n, &out, &passed));
    Doc r(out);
    print(o, json_of(r.get()), text_of(r.get()));
    return passed ? kOk : kVerifyFailed;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Hecke insertion, vacillating Hecke tableaux and linked partitions"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(hvt_version()));
    Options o;
    app.add_flag("--json", o.json, "Emit JSON documents instead of text");

    const std::string object_help = "Object text, @file, or @- for standard input (default: standard input)";
    auto object = [&](CLI::App *sub, const std::string &name) {
        sub->add_option(name + ",--" + name, o.object, object_help);
    };
    auto kind = [&](CLI::App *sub, const std::string &choices) {
        sub->add_option("--kind", o.kind, "Input kind (" + choices + "); guessed from the text when omitted");
    };
    auto restriction = [&](CLI::App *sub) {
        sub->add_option("--S", o.left, "Left endpoint set, e.g. {1,2}");
        sub->add_option("--T", o.right, "Right endpoint set, e.g. {2,3}");
    };

    auto *insert = app.add_subcommand("insert", "Hecke-insert a letter into an increasing tableau");
    object(insert, "tableau");
    insert->add_option("-x,--x", o.x, "Letter to insert")->required();

    auto *rinsert = app.add_subcommand("rinsert", "Reverse Hecke insertion from a corner");
    object(rinsert, "tableau");
    rinsert->add_option("--corner", o.corner, "Corner as r,c (1-based)")->required();
    rinsert->add_option("--alpha", o.alpha, "1 removes the corner, 0 keeps it")->check(CLI::Range(0, 1));

    auto *word = app.add_subcommand("word-tableau", "Insertion tableau of a word with is/de statistics");
    object(word, "word");

    auto *to_linked = app.add_subcommand("to-linked", "Map a vacillating Hecke tableau to its linked partition");
    object(to_linked, "vht");
    to_linked->add_flag("--trace", o.trace, "Print every intermediate step");
    to_linked->add_flag("--word-trace", o.word_trace, "Print the word sequence of the trace");
    to_linked->add_flag("--blocks", o.blocks, "Print the result as blocks");

    auto *to_vht = app.add_subcommand("to-vht", "Map a linked partition to its vacillating Hecke tableau");
    object(to_vht, "partition");
    kind(to_vht, "linked|blocks");
    to_vht->add_flag("--extrema", o.extrema, "Also print the largest row and column counts");

    auto *conj = app.add_subcommand("conjugate", "Involution on linked partitions; transpose for diagrams and tableaux");
    object(conj, "object");
    kind(conj, "linked|blocks|partition|vht");
    conj->add_flag("--blocks", o.blocks, "Print a linked result as blocks");

    auto *ends = app.add_subcommand("endpoints", "Endpoint sets and crossing/nesting numbers");
    object(ends, "partition");
    kind(ends, "linked|blocks");
    ends->add_flag("--oracle", o.oracle, "Use the brute-force statistics");

    auto *stats = app.add_subcommand("stats", "Joint crossing/nesting distribution");
    stats->add_option("-n,--n", o.n, "Size")->required();
    restriction(stats);

    auto *enumerate = app.add_subcommand("enumerate", "Stream every object of a given size");
    enumerate->add_option("-n,--n", o.n, "Size")->required();
    enumerate->add_option("--kind", o.kind, "linked (default), blocks or vht")
        ->check(CLI::IsMember({"linked", "blocks", "vht"}));
    enumerate->add_flag("--noncrossing", o.noncrossing, "Only partitions without a 2-crossing");
    enumerate->add_flag("--setpartition", o.setpartition, "Only front representations");
    enumerate->add_flag("--count", o.count_only, "Print the number of objects only");
    restriction(enumerate);

    auto *verify = app.add_subcommand("verify", "Run the verification suite");
    verify->add_option("-n,--n", o.n, "Size")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*insert) return cmd_insert(o);
        if (*rinsert) return cmd_rinsert(o);
        if (*word) return cmd_word_tableau(o);
        if (*to_linked) return cmd_to_linked(o);
        if (*to_vht) return cmd_to_vht(o);
        if (*conj) return cmd_conjugate(o);
        if (*ends) return cmd_endpoints(o);
        if (*stats) return cmd_stats(o);
        if (*enumerate) return cmd_enumerate(o);
        if (*verify) return cmd_verify(o);
    } catch (const DomainError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDomain;
    }
    return kUsage;
}
