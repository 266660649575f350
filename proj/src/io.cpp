#include "slq/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace slq {

namespace {

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

GeneratorSet from_json(const nlohmann::json& j) {
  if (!j.contains("generators") || !j["generators"].is_array() ||
      j["generators"].empty())
    throw ConfigError("generator file: missing or empty \"generators\"");
  const int d = j.value("d", 0);
  std::vector<IntMat> gens;
  for (const auto& mat : j["generators"]) {
    if (!mat.is_array() || static_cast<int>(mat.size()) != d)
      throw ConfigError("generator file: matrix is not d x d");
    IntMat g(d, d);
    for (int r = 0; r < d; ++r) {
      if (!mat[r].is_array() || static_cast<int>(mat[r].size()) != d)
        throw ConfigError("generator file: matrix is not d x d");
      for (int c = 0; c < d; ++c) {
        if (!mat[r][c].is_number_integer())
          throw ConfigError("generator file: non-integer entry");
        g(r, c) = Int(mat[r][c].get<long long>());
      }
    }
    gens.push_back(std::move(g));
  }
  const bool symmetrize = j.value("symmetrize", true);
  try {
    return GeneratorSet::make(std::move(gens), symmetrize);
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(std::string("generator file: ") + e.what());
  }
}

}  // namespace

GeneratorSet load_generator_set(const std::string& path) {
  return from_json(read_json_file(path));
}

GeneratorSet parse_generator_set(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("invalid generator JSON: ") + e.what());
  }
  return from_json(j);
}

std::vector<u32> load_subset_indices(const std::string& path) {
  nlohmann::json j = read_json_file(path);
  if (!j.is_array()) throw ConfigError("subset file: expected a JSON array");
  std::vector<u32> idx;
  for (const auto& v : j) {
    if (!v.is_number_unsigned() && !v.is_number_integer())
      throw ConfigError("subset file: non-integer index");
    const long long x = v.get<long long>();
    if (x < 0) throw ConfigError("subset file: negative index");
    idx.push_back(static_cast<u32>(x));
  }
  return idx;
}

void save_subset_indices(const std::string& path, const std::vector<u32>& idx) {
  std::vector<u32> sorted = idx;
  std::sort(sorted.begin(), sorted.end());
  nlohmann::json j = sorted;
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write file: " + path);
  out << j.dump() << "\n";
}

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string fmt_rational(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

}  // namespace slq
