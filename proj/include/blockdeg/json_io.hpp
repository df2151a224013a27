#pragma once

#include <json.hpp>

#include "blockdeg/blocks.hpp"
#include "blockdeg/chartable.hpp"
#include "blockdeg/classifier.hpp"

namespace blockdeg::json_io {

using json = nlohmann::ordered_json;
using u64 = std::uint64_t;

json cyc_to_json(const cyclo::Cyc& v);
cyclo::Cyc cyc_from_json(const json& j);

json table_to_json(const chartable::CharacterTable& t);

// Self-contained mirror of the serialized table; parse(print(x)) = x holds
// through this document type.
struct TableDocument {
    u64 order = 1;
    u64 exponent = 1;
    u64 dixon_prime = 0;
    std::vector<u64> class_sizes;
    std::vector<u64> class_orders;
    std::vector<std::string> class_representatives;
    std::vector<u64> degrees;
    std::vector<std::vector<cyclo::Cyc>> values;
};

TableDocument table_from_json(const json& j);
json table_doc_to_json(const TableDocument& d);

json blocks_to_json(const chartable::CharacterTable& t, const blocks::BlockPartition& bp);
json verdict_to_json(const classifier::PairVerdict& v);

} // namespace blockdeg::json_io
