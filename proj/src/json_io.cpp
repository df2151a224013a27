#include "blockdeg/json_io.hpp"

namespace blockdeg::json_io {

json cyc_to_json(const cyclo::Cyc& v) {
    return json{{"conductor", v.conductor}, {"coeffs", v.coeffs}};
}

cyclo::Cyc cyc_from_json(const json& j) {
    cyclo::Cyc v;
    v.conductor = j.at("conductor").get<u64>();
    v.coeffs = j.at("coeffs").get<std::vector<long long>>();
    require(v.coeffs.size() == cyclo::euler_phi(v.conductor),
            "cyclotomic JSON: coefficient count must equal phi(conductor)");
    return v;
}

json table_to_json(const chartable::CharacterTable& t) {
    const auto& cd = *t.classes;
    json classes;
    classes["sizes"] = cd.sizes;
    classes["orders"] = cd.orders;
    json reps = json::array();
    for (unsigned k = 0; k < cd.num_classes(); ++k)
        reps.push_back(permgroup::perm_to_cycles(cd.rep(k)));
    classes["representatives"] = std::move(reps);
    json values = json::array();
    for (const auto& row : t.values) {
        json jrow = json::array();
        for (const auto& v : row) jrow.push_back(cyc_to_json(v));
        values.push_back(std::move(jrow));
    }
    return json{{"order", t.order},
                {"exponent", t.exponent},
                {"dixon_prime", t.dixon_prime},
                {"classes", std::move(classes)},
                {"degrees", t.degrees},
                {"values", std::move(values)}};
}

TableDocument table_from_json(const json& j) {
    TableDocument d;
    d.order = j.at("order").get<u64>();
    d.exponent = j.at("exponent").get<u64>();
    d.dixon_prime = j.at("dixon_prime").get<u64>();
    d.class_sizes = j.at("classes").at("sizes").get<std::vector<u64>>();
    d.class_orders = j.at("classes").at("orders").get<std::vector<u64>>();
    d.class_representatives = j.at("classes").at("representatives").get<std::vector<std::string>>();
    d.degrees = j.at("degrees").get<std::vector<u64>>();
    for (const auto& jrow : j.at("values")) {
        std::vector<cyclo::Cyc> row;
        for (const auto& jv : jrow) row.push_back(cyc_from_json(jv));
        d.values.push_back(std::move(row));
    }
    return d;
}

json table_doc_to_json(const TableDocument& d) {
    json classes;
    classes["sizes"] = d.class_sizes;
    classes["orders"] = d.class_orders;
    classes["representatives"] = d.class_representatives;
    json values = json::array();
    for (const auto& row : d.values) {
        json jrow = json::array();
        for (const auto& v : row) jrow.push_back(cyc_to_json(v));
        values.push_back(std::move(jrow));
    }
    return json{{"order", d.order},
                {"exponent", d.exponent},
                {"dixon_prime", d.dixon_prime},
                {"classes", std::move(classes)},
                {"degrees", d.degrees},
                {"values", std::move(values)}};
}

json blocks_to_json(const chartable::CharacterTable& t, const blocks::BlockPartition& bp) {
    std::vector<u64> cd;
    for (unsigned c : bp.blocks[bp.principal]) cd.push_back(t.degrees[c]);
    std::sort(cd.begin(), cd.end());
    cd.erase(std::unique(cd.begin(), cd.end()), cd.end());
    return json{{"p", bp.p},
                {"blocks", bp.blocks},
                {"principal", bp.principal},
                {"defects", bp.defects},
                {"cd_b0", cd}};
}

json verdict_to_json(const classifier::PairVerdict& v) {
    json j{{"group", v.group},
           {"p", v.p},
           {"accepted", v.accepted},
           {"method", v.method},
           {"cd_b0", v.cd_b0},
           {"prime_divisors", v.prime_divisors}};
    if (v.theorem_a_case)
        j["case"] = *v.theorem_a_case;
    else
        j["case"] = nullptr;
    return j;
}

} // namespace blockdeg::json_io
