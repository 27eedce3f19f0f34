#pragma once

// JSON wire formats and the small text parsers used by the command line.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qflag/qcoh.hpp"
#include "qflag/solver.hpp"
#include "qflag/toeplitz.hpp"
#include "qflag/verify.hpp"

namespace qflag::io {

using json = nlohmann::json;

json to_json(const weyl::Permutation& w);
weyl::Permutation permutation_from_json(const json& j);

// [{"coeff": "p/q", "monomial": [["x",i,e], ["sigma",j,i,e], ["q",j,e], ["lambda",e], ["E",j,i,e]]}, ...]
json to_json(const poly::Poly& f);
poly::Poly poly_from_json(const json& j);

json to_json(const qcoh::Expansion& e);
qcoh::Expansion expansion_from_json(const json& j);

json to_json(const toeplitz::ExactPoint& x);
json to_json(const toeplitz::FloatPoint& x);
// Accepts strings ("p/q" or decimals, read exactly) or JSON numbers.
toeplitz::ExactPoint exact_point_from_json(const json& j);

// Every coefficient must be a nonnegative integer; anything else is an InternalError.
json to_json(const qcoh::StructureTable& t);
json to_json(const solver::PositivePoint& pp);
json to_json(const solver::InverseResult& r);
json to_json(const std::vector<verify::CheckResult>& report);

// Command-line lists: "1,2,3" with optional surrounding brackets.
std::vector<std::string> split_list(const std::string& s);
std::vector<int> parse_int_list(const std::string& s);
std::vector<double> parse_double_list(const std::string& s);
weyl::Permutation parse_permutation(const std::string& s, int n);
// Entries a_1..a_{n-1}; n is one more than the list length.
toeplitz::ExactPoint parse_point(const std::string& s);

}  // namespace qflag::io
