#include <doctest.h>

#include <fstream>

#include <json.hpp>

#include "multiseg/criteria.hpp"
#include "multiseg/involution.hpp"
#include "multiseg/verify.hpp"

using namespace multiseg;
using nlohmann::json;

namespace {

json load_schema(const std::string& name) {
    std::ifstream in(std::string(MULTISEG_SCHEMA_DIR) + "/" + name);
    REQUIRE(in.good());
    return json::parse(in);
}

// minimal structural validator: type / required / properties / items /
// enum / minItems / maxItems — enough for the shipped schemas
bool validates(const json& schema, const json& value);

bool type_matches(const std::string& t, const json& v) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer() || v.is_number_unsigned();
    if (t == "number") return v.is_number();
    if (t == "boolean") return v.is_boolean();
    return false;
}

bool validates(const json& schema, const json& value) {
    if (schema.contains("type") && !type_matches(schema["type"], value)) return false;
    if (schema.contains("enum")) {
        bool hit = false;
        for (const auto& e : schema["enum"]) hit = hit || e == value;
        if (!hit) return false;
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& k : schema["required"])
                if (!value.contains(k.get<std::string>())) return false;
        if (schema.contains("properties"))
            for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it)
                if (value.contains(it.key()) && !validates(it.value(), value[it.key()]))
                    return false;
    }
    if (value.is_array()) {
        if (schema.contains("minItems") && value.size() < schema["minItems"]) return false;
        if (schema.contains("maxItems") && value.size() > schema["maxItems"]) return false;
        if (schema.contains("items"))
            for (const auto& v : value)
                if (!validates(schema["items"], v)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("multisegment json matches schema") {
    json schema = load_schema("multisegment.schema.json");
    Multisegment a = parse_multisegment("[0,1]+[1,2]");
    CHECK(validates(schema, json::parse(to_json(a))));
    // multi-line form is an array of line groups
    json multi = json::parse(to_json(parse_multisegment("[0,1];[2,3]@mu")));
    REQUIRE(multi.is_array());
    for (const auto& group : multi) CHECK(validates(schema, group));
    // and a negative control
    CHECK_FALSE(validates(schema, json::parse(R"({"segments": [[0,1]]})")));
}

TEST_CASE("verdict json matches schema") {
    json schema = load_schema("verdict.schema.json");
    Verdict v = speh_reducible_thm72(SpehParams(0, 1, 2, 3), SpehParams(1, 2, 3, 4));
    CHECK(validates(schema, json::parse(v.to_json())));
    CHECK_FALSE(validates(schema, json::parse(R"({"status": "Maybe"})")));
}

TEST_CASE("report json matches schema") {
    json schema = load_schema("report.schema.json");
    VerifyConfig cfg;
    cfg.max_end = 2;
    cfg.trials = 5;
    Report rep = run_suite("rectangle-duality", cfg);
    CHECK(validates(schema, json::parse(rep.to_json())));
}

TEST_CASE("trace json matches schema") {
    json schema = load_schema("trace.schema.json");
    std::vector<StepTrace> traces;
    mwa_left(parse_multisegment("[0,2]+[1,3]"), &traces);
    CHECK(validates(schema, json::parse(traces_to_json(traces))));
}
