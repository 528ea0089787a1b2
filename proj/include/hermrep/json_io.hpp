#pragma once

// JSON wire formats. Rationals travel as "p/q" strings (integers are also
// accepted on input), index sets as {"kind":"finite","n":3} or
// {"kind":"inf"}, weights as sparse entry maps keyed by the index. Schema
// violations throw Error(BadInput) carrying a JSON pointer to the bad node.

#include <hermrep/classifier.hpp>
#include <hermrep/kernelver.hpp>

#include <json.hpp>

namespace hermrep {

// ordered_json keeps object members in insertion order, which is what makes
// output byte-identical across runs.
using Json = nlohmann::ordered_json;

// wraps nlohmann parse errors into Error(BadInput)
Json parse_json_text(const std::string& text);

Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j, const std::string& where);

Json weight_to_json(const Weight& w);
Weight weight_from_json(const Json& j, const std::string& where);

Json index_set_to_json(const IndexSet& J);
IndexSet index_set_from_json(const Json& j, const std::string& where);

// One document carries both the group data and the representation data.
// "lambda" and "mu" are accepted as aliases for "lambda_plus" so that
// single-weight families read naturally.
struct Problem {
    GroupSpec spec;
    RepData rep;
};

Problem problem_from_json(const Json& j);
Json problem_to_json(const GroupSpec& spec, const RepData& rep);

Json rep_to_json(const RepData& rep);
Json verdict_to_json(const Verdict& v);
Json cross_table_to_json(const CrossTable& t);

} // namespace hermrep
