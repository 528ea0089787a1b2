#include <hermrep/json_io.hpp>

#include <map>

namespace hermrep {

namespace {

[[noreturn]] void bad(const std::string& pointer, const std::string& message) {
    throw Error(ErrorCode::BadInput, message, pointer);
}

void require_keys(const Json& j, const std::string& where,
                  std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (const char* a : allowed)
            if (key == a) known = true;
        if (!known) bad(where + "/" + key, "unknown key");
    }
}

Index index_from_key(const std::string& key, const std::string& where) {
    std::size_t used = 0;
    long long i = 0;
    try {
        i = std::stoll(key, &used);
    } catch (const std::exception&) {
        bad(where, "index keys must be positive integers");
    }
    if (used != key.size() || i < 1) bad(where, "index keys must be positive integers");
    return static_cast<Index>(i);
}

} // namespace

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::BadInput, e.what());
    }
}

Json rat_to_json(const Rat& r) { return rat_str(r); }

Rat rat_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_number()) bad(where, "write rationals as \"p/q\" strings, not floats");
    if (!j.is_string()) bad(where, "expected a rational");
    try {
        return parse_rat(j.get<std::string>());
    } catch (const std::exception&) {
        bad(where, "malformed rational literal \"" + j.get<std::string>() + "\"");
    }
}

Json weight_to_json(const Weight& w) {
    Json entries = Json::object();
    for (const auto& [i, v] : w.entries()) entries[std::to_string(i)] = rat_str(v);
    return Json{{"entries", std::move(entries)}, {"den", w.den()}};
}

Weight weight_from_json(const Json& j, const std::string& where) {
    if (!j.is_object()) bad(where, "expected a weight object");
    require_keys(j, where, {"entries", "den"});
    if (!j.contains("entries") || !j["entries"].is_object())
        bad(where + "/entries", "expected an object of index: rational pairs");
    std::map<Index, Rat> entries;
    for (const auto& [key, value] : j["entries"].items()) {
        const std::string p = where + "/entries/" + key;
        entries[index_from_key(key, p)] = rat_from_json(value, p);
    }
    Weight w;
    try {
        w = Weight(std::move(entries));
    } catch (const Error& e) {
        bad(where + "/entries", e.message());
    }
    if (j.contains("den")) {
        if (!j["den"].is_number_integer() ||
            (j["den"].get<int>() != 1 && j["den"].get<int>() != 2))
            bad(where + "/den", "den must be 1 or 2");
        if (j["den"].get<int>() != w.den())
            bad(where + "/den", "den does not match the entries");
    }
    return w;
}

Json index_set_to_json(const IndexSet& J) {
    if (J.finite) return Json{{"kind", "finite"}, {"n", J.n}};
    return Json{{"kind", "inf"}};
}

IndexSet index_set_from_json(const Json& j, const std::string& where) {
    if (!j.is_object()) bad(where, "expected an index set object");
    if (!j.contains("kind") || !j["kind"].is_string())
        bad(where + "/kind", "expected \"finite\" or \"inf\"");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "inf") {
        require_keys(j, where, {"kind"});
        return IndexSet::Infinite();
    }
    if (kind != "finite") bad(where + "/kind", "expected \"finite\" or \"inf\"");
    require_keys(j, where, {"kind", "n"});
    if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<long long>() < 1)
        bad(where + "/n", "finite index sets need a positive integer n");
    return IndexSet::Finite(j["n"].get<std::uint64_t>());
}

Problem problem_from_json(const Json& j) {
    if (!j.is_object()) bad("", "expected a group/representation object");
    require_keys(j, "",
                 {"family", "curvature", "Jplus", "Jminus", "j0", "lambda_plus",
                  "lambda_minus", "lambda", "mu", "c", "scalar_type"});

    Problem p;
    if (!j.contains("family") || !j["family"].is_string())
        bad("/family", "expected one of \"I\", \"II\", \"III\", \"IV\", \"Flat\"");
    const std::string fam = j["family"].get<std::string>();
    if (fam == "I") p.spec.family = GroupFamily::I;
    else if (fam == "II") p.spec.family = GroupFamily::II;
    else if (fam == "III") p.spec.family = GroupFamily::III;
    else if (fam == "IV") p.spec.family = GroupFamily::IV;
    else if (fam == "Flat") p.spec.family = GroupFamily::Flat;
    else bad("/family", "unknown family \"" + fam + "\"");

    if (!j.contains("curvature") || !j["curvature"].is_string())
        bad("/curvature", "expected one of \"domain\", \"cdual\", \"flat\"");
    const std::string cur = j["curvature"].get<std::string>();
    if (cur == "domain") p.spec.curvature = Curvature::Domain;
    else if (cur == "cdual") p.spec.curvature = Curvature::Cdual;
    else if (cur == "flat") p.spec.curvature = Curvature::Flat;
    else bad("/curvature", "unknown curvature \"" + cur + "\"");

    if (j.contains("Jplus")) p.spec.jplus = index_set_from_json(j["Jplus"], "/Jplus");
    if (j.contains("Jminus")) p.spec.jminus = index_set_from_json(j["Jminus"], "/Jminus");
    if (j.contains("j0")) {
        if (!j["j0"].is_number_integer() || j["j0"].get<long long>() < 1)
            bad("/j0", "expected a positive integer index");
        p.spec.j0 = j["j0"].get<Index>();
    }

    int single = 0;
    for (const char* key : {"lambda_plus", "lambda", "mu"})
        if (j.contains(key)) {
            p.rep.lambda_plus = weight_from_json(j[key], std::string("/") + key);
            ++single;
        }
    if (single > 1) bad("", "give at most one of lambda_plus, lambda, mu");
    if (j.contains("lambda_minus"))
        p.rep.lambda_minus = weight_from_json(j["lambda_minus"], "/lambda_minus");
    if (j.contains("c")) p.rep.c = rat_from_json(j["c"], "/c");
    if (j.contains("scalar_type")) {
        if (!j["scalar_type"].is_boolean()) bad("/scalar_type", "expected a boolean");
        p.rep.scalar_type = j["scalar_type"].get<bool>();
    }
    return p;
}

Json rep_to_json(const RepData& rep) {
    Json j = Json::object();
    if (!rep.lambda_plus.is_zero()) j["lambda_plus"] = weight_to_json(rep.lambda_plus);
    if (!rep.lambda_minus.is_zero()) j["lambda_minus"] = weight_to_json(rep.lambda_minus);
    j["c"] = rat_str(rep.c);
    if (rep.scalar_type) j["scalar_type"] = true;
    return j;
}

Json problem_to_json(const GroupSpec& spec, const RepData& rep) {
    Json j = Json::object();
    j["family"] = family_name(spec.family);
    j["curvature"] = curvature_name(spec.curvature);
    j["Jplus"] = index_set_to_json(spec.jplus);
    j["Jminus"] = index_set_to_json(spec.jminus);
    if (spec.family == GroupFamily::IV) j["j0"] = spec.j0;
    for (auto& [key, value] : rep_to_json(rep).items()) j[key] = value;
    return j;
}

Json verdict_to_json(const Verdict& v) {
    Json j = Json::object();
    j["inducible"] = v.inducible;
    j["bounded"] = bounded_name(v.bounded);
    Json params = Json::object();
    for (const auto& [key, value] : v.parameters) params[key] = value;
    j["parameters"] = std::move(params);
    if (!v.violated_condition.empty()) j["violated_condition"] = v.violated_condition;
    j["reason_tag"] = v.reason_tag;
    j["reason"] = v.reason;
    return j;
}

Json cross_table_to_json(const CrossTable& t) {
    Json rows = Json::array();
    for (const CrossRow& r : t.rows) {
        Json row = Json::object();
        row["c"] = rat_str(r.c);
        row["inducible"] = r.verdict.inducible;
        row["min_eigenvalue"] = r.min_eigenvalue;
        row["kernel_positive"] = r.kernel_positive;
        row["agree"] = r.agree;
        rows.push_back(std::move(row));
    }
    return Json{{"rows", std::move(rows)}, {"all_agree", t.all_agree}};
}

} // namespace hermrep
