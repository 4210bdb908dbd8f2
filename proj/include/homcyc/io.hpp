#pragma once

// JSON and text serialisation of algebras, coefficients and reports.
//
// Algebra files:
//   {"name": "...", "basis": ["e1", "e2"],
//    "mul": [[[c_000, c_001], [..]], ..],   mul[i][j] = e_i e_j
//    "alpha": [[..], [..]]}                  rows; column j = alpha(e_j)
// Scalars are strings ("-3/2") or integers. "dim", when present, must match.

#include "homcyc/cocycle.hpp"
#include "homcyc/cyclic.hpp"

#include <json.hpp>

#include <string>

namespace homcyc::io {

using json = nlohmann::json;

class FormatError : public Error {
public:
    using Error::Error;
};

Scalar scalar_from_json(const json& j);
json scalar_to_json(const Scalar& s);
Vector vector_from_json(const json& j, std::size_t size);
json vector_to_json(std::span<const Scalar> v);
Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols);
json matrix_to_json(const Matrix& m);

AlgebraData algebra_from_json(const json& j);
json algebra_to_json(const AlgebraData& a);
AlgebraData read_algebra(const std::string& path);
void write_algebra(const std::string& path, const AlgebraData& a);

/// {"name", "basis", "left": [a][v][w], "right": [v][a][w], "beta": rows}
ModuleData module_from_json(const json& j, std::size_t algebra_dim);
json module_to_json(const ModuleData& m);

json read_json(const std::string& path);

json to_json(const CheckResult& r, const std::vector<std::string>& basis);
json to_json(const HomologyReport& r);
json to_json(const CyclicReport& r);
json to_json(const PeriodicReport& r);
json to_json(const BBReport& r);
json to_json(const Functional& f, const HomAlgebra& a);

std::string to_text(const HomologyReport& r);
std::string to_text(const CyclicReport& r);
std::string to_text(const PeriodicReport& r);
std::string to_text(const BBReport& r);

/// Sorted keys, two-space indent, trailing newline.
std::string dump(const json& j);

}  // namespace homcyc::io
