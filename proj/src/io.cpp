#include "unital/io.hpp"

#include <fstream>
#include <iterator>
#include <sstream>
#include <unistd.h>

namespace unital {

namespace {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw IoError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& ex) {
    throw IoError(std::string("bad field \"") + key + "\": " + ex.what());
  }
}

}  // namespace

Json to_json(const FieldSpec& spec) {
  return Json{{"p", spec.p}, {"e", spec.e}, {"modulus", spec.modulus}};
}

FieldSpec field_from_json(const Json& j) {
  const auto p = field<std::uint32_t>(j, "p");
  const auto e = field<std::uint32_t>(j, "e");
  if (j.contains("modulus")) return make_field(p, e, field<std::vector<std::uint32_t>>(j, "modulus"));
  return make_field(p, e);
}

Json to_json(const IncidenceStructure& u) {
  return Json{{"q", u.order()},
              {"num_points", u.num_points()},
              {"long_blocks", u.long_blocks()},
              {"short_blocks", u.short_blocks()}};
}

IncidenceStructure structure_from_json(const Json& j) {
  const auto n = field<std::uint32_t>(j, "num_points");
  auto lb = field<std::vector<Block>>(j, "long_blocks");
  auto sb = j.contains("short_blocks") ? field<std::vector<Block>>(j, "short_blocks") : std::vector<Block>{};
  const auto q = j.contains("q") ? field<std::uint32_t>(j, "q") : 0u;
  try {
    return IncidenceStructure(n, std::move(lb), std::move(sb), q);
  } catch (const std::invalid_argument& ex) {
    throw IoError(std::string("malformed structure: ") + ex.what());
  }
}

Json to_json(const Parallelism& pi) { return Json{{"classes", pi.classes}}; }

Parallelism parallelism_from_json(const Json& j) {
  return Parallelism{field<std::vector<std::vector<std::uint32_t>>>(j, "classes")};
}

Json to_json(const Permutation& g) {
  return Json(std::vector<std::uint32_t>(g.images().begin(), g.images().end()));
}

Permutation permutation_from_json(const Json& j) {
  try {
    return Permutation(j.get<std::vector<std::uint32_t>>());
  } catch (const nlohmann::json::exception& ex) {
    throw IoError(std::string("bad permutation: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw IoError(std::string("bad permutation: ") + ex.what());
  }
}

Json to_json(const PermGroup& g) {
  Json gens = Json::array();
  for (const auto& s : g.generators()) gens.push_back(to_json(s));
  return Json{{"order", g.order()}, {"generators", gens}};
}

Json to_json(const BlockCollection& dc) { return Json(dc.sets); }

BlockCollection collection_from_json(const Json& j) {
  try {
    return BlockCollection{j.get<std::vector<std::vector<ElementId>>>()};
  } catch (const nlohmann::json::exception& ex) {
    throw IoError(std::string("bad block collection: ") + ex.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw IoError(std::string("invalid JSON: ") + ex.what());
  }
}

Json read_json(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse(text);
  }
  std::ifstream file(path);
  if (!file) throw IoError("cannot read " + path);
  std::stringstream ss;
  ss << file.rdbuf();
  return parse(ss.str());
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw IoError("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot rename into " + path.string());
  }
}

}  // namespace unital
