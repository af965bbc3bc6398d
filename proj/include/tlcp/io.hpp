#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "tlcp/analysis.hpp"
#include "tlcp/classify.hpp"
#include "tlcp/solver.hpp"
#include "tlcp/tensor.hpp"

namespace tlcp {

using Json = nlohmann::ordered_json;

// Tensor file schema:
//   {
//     "order": 4,
//     "dims": [2, 2, 2, 2],
//     "entries": [{"idx": [2, 1, 1, 1], "val": "1"}, ...],
//     "default": "0"
//   }
// Indices are 1-based; values are rational strings ("p" or "p/q"); floats
// are rejected. "entries" and "default" are optional ([] and "0"). Entries
// not listed take the default. Duplicate indices are a schema violation.
// parse(write(T)) == T for every tensor of order >= 1.
DenseTensor tensor_from_json(const Json& j, std::string_view origin = "");
Json tensor_to_json(const DenseTensor& t);

DenseTensor parse_tensor(std::istream& in, std::string_view origin = "");
DenseTensor parse_tensor(const std::filesystem::path& path);
void write_tensor(const DenseTensor& t, const std::filesystem::path& path);

Json matrix_to_json(const Matrix& a);

// FNV-1a 64-bit digest, as "fnv1a:<16 hex digits>".
std::string fnv1a_digest(std::string_view bytes);
std::string file_digest(const std::filesystem::path& path);

// Report bodies. Deterministic functions of their inputs: fixed key order,
// canonical rational strings, no timing or host data.
Json verdict_to_json(const Verdict& v);
Json classification_to_json(const ClassificationReport& r);
Json solution_to_json(const Solution& s);
Json lemke_to_json(const LemkeResult& r);
Json piece_to_json(const SolutionPiece& p);
Json solution_set_to_json(const SolutionSet& s);
Json convexity_to_json(const ConvexityReport& r);
Json witness_to_json(const NonConvexWitness& w);
Json uniqueness_to_json(const UniquenessResult& r);
Json harness_to_json(const HarnessReport& r);

// Envelope shared by every CLI report.
Json report_envelope(std::string_view command,
                     const std::vector<std::filesystem::path>& inputs);

} // namespace tlcp
