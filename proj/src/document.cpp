#include "hvt/document.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "hvt/error.hpp"

namespace hvt {

namespace {

constexpr std::array<std::pair<Kind, std::string_view>, 9> kKindNames{{
    {Kind::partition, "partition"},
    {Kind::tableau, "tableau"},
    {Kind::hecke_tableau, "hecke-tableau"},
    {Kind::word, "word"},
    {Kind::linked, "linked"},
    {Kind::blocks, "blocks"},
    {Kind::vht, "vht"},
    {Kind::distribution, "distribution"},
    {Kind::report, "report"},
}};

using nlohmann::json;

std::string pad(const std::string &s, std::size_t width) {
    return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
}

std::string distribution_to_text(const JointDistribution &d) {
    std::ostringstream os;
    os << "n=" << d.n << "\n";
    if (d.restriction) os << "S=" << to_text(d.restriction->left) << " T=" << to_text(d.restriction->right) << "\n";
    int max_i = 0, max_j = 0;
    for (const auto &[key, c] : d.counts) {
        max_i = std::max(max_i, key.first);
        max_j = std::max(max_j, key.second);
    }
    std::size_t width = 2;
    for (const auto &[key, c] : d.counts) width = std::max(width, std::to_string(c).size() + 1);
    os << "cr\\ne";
    for (int j = 0; j <= max_j; ++j) os << pad(std::to_string(j), width);
    os << "\n";
    for (int i = 0; i <= max_i; ++i) {
        os << pad(std::to_string(i), 5);
        for (int j = 0; j <= max_j; ++j) {
            auto it = d.counts.find({i, j});
            os << pad(it == d.counts.end() ? "0" : std::to_string(it->second), width);
        }
        os << "\n";
    }
    for (const auto &[key, c] : d.counts) os << key.first << "," << key.second << "," << c << "\n";
    os << "symmetric=" << (verify_symmetry(d) ? "yes" : "no") << "\n";
    return os.str();
}

std::string report_to_text(const VerificationReport &r) {
    std::string out = "n=" + std::to_string(r.n) + "\n";
    for (const auto &c : r.checks) {
        out += c.name + (c.passed ? " PASS" : " FAIL");
        if (!c.counterexample.empty()) out += " " + c.counterexample;
        out += "\n";
    }
    return out;
}

std::vector<std::string> lines_of(std::string_view text) {
    std::vector<std::string> out;
    std::istringstream is{std::string(text)};
    for (std::string line; std::getline(is, line);) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        out.push_back(line);
    }
    return out;
}

int header_n(const std::vector<std::string> &lines) {
    if (lines.empty() || lines[0].rfind("n=", 0) != 0) fail(ErrorCode::parse, "at line 1: expected \"n=N\"");
    try {
        std::size_t used = 0;
        const int n = std::stoi(lines[0].substr(2), &used);
        if (used + 2 != lines[0].size()) throw std::invalid_argument("trailing");
        return n;
    } catch (const std::exception &) {
        fail(ErrorCode::parse, "at line 1: malformed ground set size");
    }
}

JointDistribution distribution_from_text(std::string_view text) {
    const auto lines = lines_of(text);
    JointDistribution d{header_n(lines), std::nullopt, {}};
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::string &line = lines[i];
        if (line.rfind("S=", 0) == 0) {
            const auto t = line.find(" T=");
            if (t == std::string::npos) fail(ErrorCode::parse, "at line " + std::to_string(i + 1) + ": expected \" T=\"");
            d.restriction = Endpoints{parse_int_set(line.substr(2, t - 2)), parse_int_set(line.substr(t + 3))};
            continue;
        }
        if (line.empty() || !std::isdigit(static_cast<unsigned char>(line[0])) ||
            std::count(line.begin(), line.end(), ',') != 2)
            continue; // matrix rows, header, verdict
        int a = 0, b = 0;
        unsigned long long c = 0;
        char tail = 0;
        if (std::sscanf(line.c_str(), "%d,%d,%llu%c", &a, &b, &c, &tail) != 3)
            fail(ErrorCode::parse, "at line " + std::to_string(i + 1) + ": expected \"i,j,count\"");
        d.counts[{a, b}] = c;
    }
    return d;
}

VerificationReport report_from_text(std::string_view text) {
    const auto lines = lines_of(text);
    VerificationReport r{header_n(lines), {}};
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::string &line = lines[i];
        if (line.empty()) continue;
        const auto sp = line.find(' ');
        if (sp == std::string::npos) fail(ErrorCode::parse, "at line " + std::to_string(i + 1) + ": expected a verdict");
        CheckResult c;
        c.name = line.substr(0, sp);
        const std::string rest = line.substr(sp + 1);
        const std::string verdict = rest.substr(0, 4);
        if (verdict != "PASS" && verdict != "FAIL")
            fail(ErrorCode::parse, "at line " + std::to_string(i + 1) + ": verdict must be PASS or FAIL");
        c.passed = verdict == "PASS";
        if (rest.size() > 5) c.counterexample = rest.substr(5);
        r.checks.push_back(std::move(c));
    }
    return r;
}

json cell_json(const std::optional<Cell> &c) { return c ? json::array({c->row, c->col}) : json(nullptr); }

std::optional<Cell> cell_from_json(const json &j) {
    if (j.is_null()) return std::nullopt;
    return Cell{j.at(0).get<int>(), j.at(1).get<int>()};
}

json diagram_json(const HeckeDiagram &d) { return {{"parts", d.shape().parts()}, {"mark", cell_json(d.mark())}}; }

HeckeDiagram diagram_from_json(const json &j) {
    return HeckeDiagram(Partition(j.at("parts").get<std::vector<int>>()), cell_from_json(j.value("mark", json())));
}

} // namespace

std::string_view kind_name(Kind k) {
    for (const auto &[kind, name] : kKindNames)
        if (kind == k) return name;
    return "unknown";
}

Kind kind_from_name(std::string_view name) {
    for (const auto &[kind, n] : kKindNames)
        if (n == name) return kind;
    fail(ErrorCode::parse, "unknown document kind \"" + std::string(name) + "\"");
}

Document make_document(HeckeDiagram d) { return {Kind::partition, std::move(d)}; }
Document make_document(IncreasingTableau t) { return {Kind::tableau, std::move(t)}; }
Document make_document(HeckeTableau t) { return {Kind::hecke_tableau, std::move(t)}; }
Document make_word_document(Word w) { return {Kind::word, std::move(w)}; }
Document make_document(LinkedPartition p) { return {Kind::linked, std::move(p)}; }
Document make_document(BlockPartition b) { return {Kind::blocks, std::move(b)}; }
Document make_document(VacillatingTableau v) { return {Kind::vht, std::move(v)}; }
Document make_document(JointDistribution d) { return {Kind::distribution, std::move(d)}; }
Document make_document(VerificationReport r) { return {Kind::report, std::move(r)}; }

std::string serialize(const Document &doc) {
    return std::visit(
        [](const auto &v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, JointDistribution>)
                return distribution_to_text(v);
            else if constexpr (std::is_same_v<T, VerificationReport>)
                return report_to_text(v);
            else
                return to_text(v);
        },
        doc.value);
}

Document parse(Kind kind, std::string_view text) {
    switch (kind) {
    case Kind::partition: return make_document(parse_diagram(text));
    case Kind::tableau: return make_document(parse_tableau(text));
    case Kind::hecke_tableau: return make_document(parse_hecke_tableau(text));
    case Kind::word: return make_word_document(parse_word(text));
    case Kind::linked: return make_document(parse_linked(text));
    case Kind::blocks: return make_document(parse_blocks(text));
    case Kind::vht: return make_document(parse_vht(text));
    case Kind::distribution: return make_document(distribution_from_text(text));
    case Kind::report: return make_document(report_from_text(text));
    }
    fail(ErrorCode::internal, "unhandled document kind");
}

json to_json(const Document &doc) {
    json j = std::visit(
        [](const auto &v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, HeckeDiagram>) {
                return diagram_json(v);
            } else if constexpr (std::is_same_v<T, IncreasingTableau>) {
                return {{"rows", v.rows()}};
            } else if constexpr (std::is_same_v<T, HeckeTableau>) {
                return {{"rows", v.tab().rows()}, {"mark", cell_json(v.mark())}};
            } else if constexpr (std::is_same_v<T, Word>) {
                return {{"letters", v}};
            } else if constexpr (std::is_same_v<T, LinkedPartition>) {
                json arcs = json::array();
                for (const auto &a : v.arcs()) arcs.push_back({a.left, a.right});
                return {{"n", v.n()}, {"arcs", arcs}};
            } else if constexpr (std::is_same_v<T, BlockPartition>) {
                return {{"n", v.n}, {"blocks", v.blocks}};
            } else if constexpr (std::is_same_v<T, VacillatingTableau>) {
                json ds = json::array();
                for (const auto &d : v.diagrams()) ds.push_back(diagram_json(d));
                return {{"n", v.n()}, {"diagrams", ds}};
            } else if constexpr (std::is_same_v<T, JointDistribution>) {
                json counts = json::array();
                for (const auto &[key, c] : v.counts) counts.push_back({key.first, key.second, c});
                json restriction = nullptr;
                if (v.restriction) restriction = {{"S", v.restriction->left}, {"T", v.restriction->right}};
                return {{"n", v.n}, {"restriction", restriction}, {"counts", counts}, {"symmetric", verify_symmetry(v)}};
            } else {
                json checks = json::array();
                for (const auto &c : v.checks)
                    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"counterexample", c.counterexample}});
                return {{"n", v.n}, {"checks", checks}, {"passed", v.all_passed()}};
            }
        },
        doc.value);
    j["kind"] = kind_name(doc.kind);
    return j;
}

Document from_json(const json &j) {
    try {
        const Kind kind = kind_from_name(j.at("kind").get<std::string>());
        switch (kind) {
        case Kind::partition: return make_document(diagram_from_json(j));
        case Kind::tableau:
            return make_document(IncreasingTableau::from_rows(j.at("rows").get<std::vector<std::vector<int>>>()));
        case Kind::hecke_tableau:
            return make_document(HeckeTableau(
                IncreasingTableau::from_rows(j.at("rows").get<std::vector<std::vector<int>>>()),
                cell_from_json(j.value("mark", json()))));
        case Kind::word: {
            auto w = j.at("letters").get<Word>();
            if (std::any_of(w.begin(), w.end(), [](int x) { return x < 1; }))
                fail(ErrorCode::validation, "letters must be positive");
            return make_word_document(std::move(w));
        }
        case Kind::linked: {
            std::vector<Arc> arcs;
            for (const auto &a : j.at("arcs")) arcs.push_back({a.at(0).get<int>(), a.at(1).get<int>()});
            return make_document(LinkedPartition(j.at("n").get<int>(), std::move(arcs)));
        }
        case Kind::blocks:
            return make_document(validate_nearly_disjoint(j.at("n").get<int>(),
                                                          j.at("blocks").get<std::vector<std::vector<int>>>()));
        case Kind::vht: {
            std::vector<HeckeDiagram> ds;
            for (const auto &d : j.at("diagrams")) ds.push_back(diagram_from_json(d));
            return make_document(validate_vht(std::move(ds)));
        }
        case Kind::distribution: {
            JointDistribution d{j.at("n").get<int>(), std::nullopt, {}};
            if (const auto &r = j.at("restriction"); !r.is_null())
                d.restriction = Endpoints{r.at("S").get<std::set<int>>(), r.at("T").get<std::set<int>>()};
            for (const auto &c : j.at("counts"))
                d.counts[{c.at(0).get<int>(), c.at(1).get<int>()}] = c.at(2).get<std::uint64_t>();
            return make_document(std::move(d));
        }
        case Kind::report: {
            VerificationReport r{j.at("n").get<int>(), {}};
            for (const auto &c : j.at("checks"))
                r.checks.push_back({c.at("name").get<std::string>(), c.at("passed").get<bool>(),
                                    c.value("counterexample", std::string())});
            return make_document(std::move(r));
        }
        }
    } catch (const json::exception &e) {
        fail(ErrorCode::parse, std::string("malformed JSON document: ") + e.what());
    }
    fail(ErrorCode::internal, "unhandled document kind");
}

} // namespace hvt
