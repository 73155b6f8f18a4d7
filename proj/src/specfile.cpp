#include "bolalg/specfile.hpp"

#include "json.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace bolalg {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& pointer, const std::string& what) {
  throw SpecError(pointer + ": " + what);
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  // nlohmann reports the byte after the offending character
  if (column > 1) --column;
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

void only_keys(const json& obj, const std::string& pointer, std::initializer_list<const char*> keys) {
  if (!obj.is_object()) fail(pointer, "expected an object");
  for (const auto& [key, _] : obj.items())
    if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return key == k; }))
      fail(pointer, "unknown field '" + key + "'");
}

int index_field(const json& entry, const std::string& pointer, const char* key, int dim) {
  const std::string at = pointer + "/" + key;
  if (!entry.contains(key)) fail(pointer, std::string("missing field '") + key + "'");
  const json& v = entry.at(key);
  if (!v.is_number_integer()) fail(at, "index must be an integer");
  const auto n = v.get<long long>();
  if (n < 1 || n > dim)
    fail(at, "index " + std::to_string(n) + " out of range [1, " + std::to_string(dim) + "]");
  return static_cast<int>(n);
}

Rational coefficient(const json& entry, const std::string& pointer) {
  if (!entry.contains("c")) fail(pointer, "missing field 'c'");
  const json& v = entry.at("c");
  if (!v.is_string()) fail(pointer + "/c", "coefficient must be a string \"p/q\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(pointer + "/c", e.what());
  }
}

}  // namespace

AlgebraFile parse_algebra_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw SpecError("syntax error at " + line_column(text, e.byte) + ": " + e.what());
  }
  only_keys(doc, "", {"label", "dim", "bilinear", "trilinear"});

  AlgebraFile file;
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) fail("/label", "expected a string");
    file.label = doc["label"].get<std::string>();
  }
  if (!doc.contains("dim")) fail("", "missing field 'dim'");
  if (!doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 1 ||
      doc["dim"].get<long long>() > 64)
    fail("/dim", "dim must be an integer in [1, 64]");
  file.dim = doc["dim"].get<int>();

  auto entries = [&](const char* key) -> const json& {
    static const json empty = json::array();
    if (!doc.contains(key)) return empty;
    if (!doc[key].is_array()) fail(std::string("/") + key, "expected an array");
    return doc[key];
  };

  std::set<std::array<int, 3>> seen2;
  const json& bil = entries("bilinear");
  for (std::size_t n = 0; n < bil.size(); ++n) {
    const std::string at = "/bilinear/" + std::to_string(n);
    only_keys(bil[n], at, {"i", "j", "k", "c"});
    BilinearEntry e{index_field(bil[n], at, "i", file.dim), index_field(bil[n], at, "j", file.dim),
                    index_field(bil[n], at, "k", file.dim), coefficient(bil[n], at)};
    if (!seen2.insert({e.i, e.j, e.k}).second) fail(at, "duplicate index tuple");
    file.bilinear.push_back(e);
  }

  std::set<std::array<int, 4>> seen3;
  const json& tri = entries("trilinear");
  for (std::size_t n = 0; n < tri.size(); ++n) {
    const std::string at = "/trilinear/" + std::to_string(n);
    only_keys(tri[n], at, {"i", "j", "k", "l", "c"});
    TrilinearEntry e{index_field(tri[n], at, "i", file.dim), index_field(tri[n], at, "j", file.dim),
                     index_field(tri[n], at, "k", file.dim), index_field(tri[n], at, "l", file.dim),
                     coefficient(tri[n], at)};
    if (!seen3.insert({e.i, e.j, e.k, e.l}).second) fail(at, "duplicate index tuple");
    file.trilinear.push_back(e);
  }
  return file;
}

std::string emit_algebra_file(const AlgebraFile& file) {
  json doc;
  doc["label"] = file.label;
  doc["dim"] = file.dim;
  doc["bilinear"] = json::array();
  for (const auto& e : file.bilinear)
    doc["bilinear"].push_back({{"i", e.i}, {"j", e.j}, {"k", e.k}, {"c", format_rational(e.c)}});
  doc["trilinear"] = json::array();
  for (const auto& e : file.trilinear)
    doc["trilinear"].push_back(
        {{"i", e.i}, {"j", e.j}, {"k", e.k}, {"l", e.l}, {"c", format_rational(e.c)}});
  return doc.dump(2) + "\n";
}

Algebra to_algebra(const AlgebraFile& file) {
  Algebra alg(file.dim, file.label);
  for (const auto& e : file.bilinear) alg.bilinear.set({e.i - 1, e.j - 1, e.k - 1}, e.c);
  for (const auto& e : file.trilinear)
    alg.trilinear.set({e.i - 1, e.j - 1, e.k - 1, e.l - 1}, e.c);
  return alg;
}

AlgebraFile to_file(const Algebra& alg) {
  AlgebraFile file{alg.label, alg.dim, {}, {}};
  for (const auto& [idx, c] : alg.bilinear.entries())
    file.bilinear.push_back({idx[0] + 1, idx[1] + 1, idx[2] + 1, c});
  for (const auto& [idx, c] : alg.trilinear.entries())
    file.trilinear.push_back({idx[0] + 1, idx[1] + 1, idx[2] + 1, idx[3] + 1, c});
  return file;
}

}  // namespace bolalg
