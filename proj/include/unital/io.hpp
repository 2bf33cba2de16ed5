#pragma once

// JSON serialization. Objects are written with sorted keys and two-space
// indentation, so equal values always produce identical bytes.

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "unital/aut.hpp"
#include "unital/gf.hpp"
#include "unital/incidence.hpp"
#include "unital/perm.hpp"

namespace unital {

using Json = nlohmann::json;

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

Json to_json(const FieldSpec& spec);
FieldSpec field_from_json(const Json& j);

// {"q", "num_points", "long_blocks", "short_blocks"}
Json to_json(const IncidenceStructure& u);
IncidenceStructure structure_from_json(const Json& j);

// {"classes"}
Json to_json(const Parallelism& pi);
Parallelism parallelism_from_json(const Json& j);

Json to_json(const Permutation& g);  // image list
Permutation permutation_from_json(const Json& j);

// {"order", "generators"}
Json to_json(const PermGroup& g);

// List of lists of element indices.
Json to_json(const BlockCollection& dc);
BlockCollection collection_from_json(const Json& j);

std::string dump(const Json& j);  // with trailing newline
Json parse(const std::string& text);

// "-" reads from `in`.
Json read_json(const std::string& path, std::istream& in);

// Writes to a temporary file in the same directory, then renames it.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace unital
