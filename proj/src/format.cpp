#include "hvt/format.hpp"

#include <cctype>
#include <limits>

#include "hvt/error.hpp"

namespace hvt {

namespace {

class Scanner {
  public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ == text_.size();
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) error(std::string("expected '") + c + "'");
    }
    bool peek_int() {
        skip_ws();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }
    int integer() {
        skip_ws();
        if (!peek_int()) error("expected a nonnegative integer");
        long long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_++] - '0');
            if (v > std::numeric_limits<int>::max()) error("integer out of range");
        }
        return static_cast<int>(v);
    }
    void finish() {
        if (!at_end()) error("unexpected trailing input");
    }
    // Consumes a lone "-" standing for an empty object.
    bool accept_dash() {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '-') {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void error(const std::string &what) const {
        fail(ErrorCode::parse, "at position " + std::to_string(pos_ + 1) + ": " + what);
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

std::vector<int> int_list(Scanner &s, char sep) {
    std::vector<int> out{s.integer()};
    while (s.accept(sep)) out.push_back(s.integer());
    return out;
}

Cell cell_after_at(Scanner &s) {
    const int r = s.integer();
    s.expect(',');
    const int c = s.integer();
    return {r, c};
}

Partition partition_body(Scanner &s) {
    if (s.accept_dash() || !s.peek_int()) return Partition{};
    return Partition(int_list(s, ','));
}

HeckeDiagram diagram_body(Scanner &s) {
    Partition p = partition_body(s);
    std::optional<Cell> mark;
    if (s.accept('@')) mark = cell_after_at(s);
    return HeckeDiagram(std::move(p), mark);
}

IncreasingTableau tableau_body(Scanner &s) {
    if (s.accept_dash() || !s.peek_int()) return IncreasingTableau{};
    std::vector<std::vector<int>> rows{int_list(s, ',')};
    while (s.accept('/')) rows.push_back(int_list(s, ','));
    return IncreasingTableau::from_rows(std::move(rows));
}

int ground_size(Scanner &s) {
    s.expect('n');
    s.expect('=');
    const int n = s.integer();
    s.expect(';');
    return n;
}

std::string join(const std::vector<int> &v, const char *sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

} // namespace

std::string to_text(Cell c) { return std::to_string(c.row) + "," + std::to_string(c.col); }

std::string to_text(const Partition &p) { return p.empty() ? "-" : join(p.parts(), ","); }

std::string to_text(const HeckeDiagram &d) {
    std::string out = to_text(d.shape());
    if (d.mark()) out += "@" + to_text(*d.mark());
    return out;
}

std::string to_text(const IncreasingTableau &t) {
    if (t.empty()) return "-";
    std::string out;
    for (std::size_t r = 0; r < t.rows().size(); ++r) {
        if (r) out += "/";
        out += join(t.rows()[r], ",");
    }
    return out;
}

std::string to_text(const HeckeTableau &t) {
    std::string out = to_text(t.tab());
    if (t.mark()) out += "@" + to_text(*t.mark());
    return out;
}

std::string to_text(const Word &w) { return w.empty() ? "-" : join(w, " "); }

std::string to_text(const LinkedPartition &lp) {
    std::string out = "n=" + std::to_string(lp.n()) + ";";
    for (std::size_t i = 0; i < lp.arcs().size(); ++i) {
        out += i ? "," : " ";
        out += std::to_string(lp.arcs()[i].left) + "-" + std::to_string(lp.arcs()[i].right);
    }
    return out;
}

std::string to_text(const BlockPartition &bp) {
    std::string out = "n=" + std::to_string(bp.n) + ";";
    if (!bp.blocks.empty()) out += " ";
    for (const auto &b : bp.blocks) out += "{" + join(b, ",") + "}";
    return out;
}

std::string to_text(const VacillatingTableau &v) {
    std::string out;
    for (std::size_t i = 0; i < v.diagrams().size(); ++i) {
        if (i) out += ";";
        out += to_text(v[i]);
    }
    return out;
}

std::string to_text(const std::set<int> &s) { return "{" + join({s.begin(), s.end()}, ",") + "}"; }

Partition parse_partition(std::string_view text) {
    Scanner s(text);
    Partition p = partition_body(s);
    s.finish();
    return p;
}

HeckeDiagram parse_diagram(std::string_view text) {
    Scanner s(text);
    HeckeDiagram d = diagram_body(s);
    s.finish();
    return d;
}

IncreasingTableau parse_tableau(std::string_view text) {
    Scanner s(text);
    IncreasingTableau t = tableau_body(s);
    s.finish();
    return t;
}

HeckeTableau parse_hecke_tableau(std::string_view text) {
    Scanner s(text);
    IncreasingTableau t = tableau_body(s);
    std::optional<Cell> mark;
    if (s.accept('@')) mark = cell_after_at(s);
    s.finish();
    return HeckeTableau(std::move(t), mark);
}

Word parse_word(std::string_view text) {
    Scanner s(text);
    Word w;
    if (s.accept_dash()) {
        s.finish();
        return w;
    }
    while (!s.at_end()) {
        const int v = s.integer();
        if (v < 1) s.error("letters must be positive");
        w.push_back(v);
        s.accept(',');
    }
    return w;
}

LinkedPartition parse_linked(std::string_view text) {
    Scanner s(text);
    const int n = ground_size(s);
    std::vector<Arc> arcs;
    if (s.peek_int()) {
        do {
            const int l = s.integer();
            s.expect('-');
            arcs.push_back({l, s.integer()});
        } while (s.accept(','));
    }
    s.finish();
    return LinkedPartition(n, std::move(arcs));
}

BlockPartition parse_blocks(std::string_view text) {
    Scanner s(text);
    const int n = ground_size(s);
    std::vector<std::vector<int>> blocks;
    while (s.accept('{')) {
        std::vector<int> b;
        if (s.peek_int()) b = int_list(s, ',');
        s.expect('}');
        blocks.push_back(std::move(b));
    }
    s.finish();
    return validate_nearly_disjoint(n, std::move(blocks));
}

VacillatingTableau parse_vht(std::string_view text) {
    Scanner s(text);
    std::vector<HeckeDiagram> diagrams{diagram_body(s)};
    while (s.accept(';')) diagrams.push_back(diagram_body(s));
    s.finish();
    return validate_vht(std::move(diagrams));
}

Cell parse_cell(std::string_view text) {
    Scanner s(text);
    Cell c = cell_after_at(s);
    s.finish();
    if (c.row < 1 || c.col < 1) fail(ErrorCode::validation, "cell coordinates are 1-indexed");
    return c;
}

std::set<int> parse_int_set(std::string_view text) {
    Scanner s(text);
    const bool braced = s.accept('{');
    std::set<int> out;
    if (!braced && s.accept_dash()) {
        s.finish();
        return out;
    }
    if (s.peek_int())
        for (int v : int_list(s, ',')) out.insert(v);
    if (braced) s.expect('}');
    s.finish();
    return out;
}

} // namespace hvt
