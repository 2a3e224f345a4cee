#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "gbihom/classify.hpp"
#include "gbihom/error.hpp"

namespace gbihom {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

/// Malformed input document; location is a JSON path such as
/// "$.components[1].basis[0]".
class SchemaError : public Error {
 public:
  SchemaError(std::string location, const std::string& msg)
      : Error("SchemaError at " + location + ": " + msg), location_(std::move(location)) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

struct LoadOptions {
  bool lenient = false;  // unknown keys become warnings instead of errors
};

struct LoadedDocument {
  GradedBiHomAlgebra algebra;
  std::vector<std::string> warnings;
};

/// Parses an input document. Structural problems raise SchemaError; a
/// well-formed document describing an impossible object (non-bijective group
/// map, singular conjugator, ...) raises the library error from construction.
LoadedDocument algebra_from_json(const Json& doc, const LoadOptions& opts = {});
LoadedDocument algebra_from_text(const std::string& text, const LoadOptions& opts = {});

/// Document in the input schema; reloading gives an equal algebra.
Json algebra_to_json(const GradedBiHomAlgebra& A);

Json scalar_json(const Scalar& s);
Json matrix_json(const Mat& m);
Json elem_json(const GroupElem& g);
Json subspace_json(const Subspace& s);

Json validation_json(const ValidationReport& r);
Json support_json(const GradedBiHomAlgebra& A);
Json witness_json(const ConnectionWitness& w);
/// With verify_with set, each witness is replayed and annotated.
Json partition_json(const ClassPartition& p, const GradedBiHomAlgebra* verify_with = nullptr);
Json decomposition_json(const DecompositionReport& r, bool with_bases);
Json simplicity_json(const SimplicityReport& r);

/// Sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const Json& j);

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(const std::string& bytes);

}  // namespace gbihom
