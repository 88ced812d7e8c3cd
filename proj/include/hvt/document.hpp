#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <nlohmann/json.hpp>

#include "hvt/format.hpp"
#include "hvt/stats.hpp"

namespace hvt {

enum class Kind { partition, tableau, hecke_tableau, word, linked, blocks, vht, distribution, report };

std::string_view kind_name(Kind k);
/// Throws ErrorCode::parse for an unknown name.
Kind kind_from_name(std::string_view name);

/// A tagged domain object. `partition` documents carry a HeckeDiagram so that
/// marked diagrams share the kind.
struct Document {
    using Value = std::variant<HeckeDiagram, IncreasingTableau, HeckeTableau, Word, LinkedPartition, BlockPartition,
                               VacillatingTableau, JointDistribution, VerificationReport>;

    Kind kind = Kind::partition;
    Value value;

    bool operator==(const Document &) const = default;
};

Document make_document(HeckeDiagram d);
Document make_document(IncreasingTableau t);
Document make_document(HeckeTableau t);
Document make_word_document(Word w);
Document make_document(LinkedPartition p);
Document make_document(BlockPartition b);
Document make_document(VacillatingTableau v);
Document make_document(JointDistribution d);
Document make_document(VerificationReport r);

/// Canonical text. Distributions render as an aligned matrix followed by
/// "i,j,count" rows; reports as one "name PASS|FAIL [counterexample]" line per
/// check.
std::string serialize(const Document &doc);
Document parse(Kind kind, std::string_view text);

nlohmann::json to_json(const Document &doc);
/// Inverse of to_json; validates like parse().
Document from_json(const nlohmann::json &j);

} // namespace hvt
