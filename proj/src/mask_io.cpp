#include "twodir/mask_io.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "twodir/const_expr.hpp"
#include "twodir/errors.hpp"

namespace twodir {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw MaskFileError(path + ": " + what);
}

const json& require(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing field '") + key + "'");
  return *it;
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& path) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) fail(path, "unknown field '" + key + "'");
  }
}

int to_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  return v.get<int>();
}

double to_scalar(const json& v, const std::string& path) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    try {
      return parse_const_expr(v.get<std::string>());
    } catch (const ExprError& e) {
      fail(path, "\"" + v.get<std::string>() + "\": " + e.what());
    }
  }
  fail(path, "expected a number or an expression string");
}

int parse_index(const std::string& key, const std::string& path) {
  int k = 0;
  const char* end = key.data() + key.size();
  auto [ptr, ec] = std::from_chars(key.data(), end, k);
  if (ec != std::errc() || ptr != end) fail(path, "translation key '" + key + "' is not an integer");
  return k;
}

// Shape is kept as given so validate() reports mismatches uniformly.
Matrix to_matrix(const json& v, const std::string& path) {
  if (!v.is_array() || v.empty()) fail(path, "expected a nonempty list of rows");
  const auto rows = static_cast<Eigen::Index>(v.size());
  Eigen::Index cols = -1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_array()) fail(path + "/" + std::to_string(i), "expected a row list");
    const auto n = static_cast<Eigen::Index>(v[i].size());
    if (cols >= 0 && n != cols) fail(path, "ragged matrix rows");
    cols = n;
  }
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      m(i, j) = to_scalar(v[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                          path + "/" + std::to_string(i) + "/" + std::to_string(j));
    }
  }
  return m;
}

std::map<int, Matrix> to_table(const json& obj, const std::string& path) {
  std::map<int, Matrix> table;
  if (!obj.is_object()) fail(path, "expected an object keyed by translation index");
  for (const auto& [key, value] : obj.items()) {
    const int k = parse_index(key, path);
    if (table.count(k)) fail(path, "duplicate translation " + key);
    table.emplace(k, to_matrix(value, path + "/" + key));
  }
  return table;
}

Support to_support(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2) fail(path, "expected [k_min, k_max]");
  return {to_int(v[0], path + "/0"), to_int(v[1], path + "/1")};
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json table_json(const std::map<int, Matrix>& table) {
  json obj = json::object();
  for (const auto& [k, m] : table) obj[std::to_string(k)] = matrix_json(m);
  return obj;
}

}  // namespace

MaskBundle mask_from_json(const json& doc) {
  if (!doc.is_object()) fail("", "mask document must be a JSON object");
  reject_unknown(doc, {"name", "dilation", "multiplicity", "note", "scaling", "wavelets"}, "");

  MaskBundle bundle;
  auto& s = bundle.scaling;
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) fail("/name", "expected a string");
    s.name = it->get<std::string>();
  }
  s.dilation = to_int(require(doc, "dilation", ""), "/dilation");
  s.multiplicity = to_int(require(doc, "multiplicity", ""), "/multiplicity");

  const json& scaling = require(doc, "scaling", "");
  if (!scaling.is_object()) fail("/scaling", "expected an object");
  reject_unknown(scaling, {"support", "positive", "negative"}, "/scaling");
  s.support = to_support(require(scaling, "support", "/scaling"), "/scaling/support");
  if (auto it = scaling.find("positive"); it != scaling.end()) {
    s.positive = to_table(*it, "/scaling/positive");
  }
  if (auto it = scaling.find("negative"); it != scaling.end()) {
    s.negative = to_table(*it, "/scaling/negative");
  }

  if (auto it = doc.find("wavelets"); it != doc.end()) {
    if (!it->is_array()) fail("/wavelets", "expected a list");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string path = "/wavelets/" + std::to_string(i);
      const json& w = (*it)[i];
      if (!w.is_object()) fail(path, "expected an object");
      reject_unknown(w, {"branch", "support", "positive", "negative"}, path);
      WaveletMask wm;
      wm.branch = to_int(require(w, "branch", path), path + "/branch");
      wm.support = to_support(require(w, "support", path), path + "/support");
      if (auto p = w.find("positive"); p != w.end()) wm.positive = to_table(*p, path + "/positive");
      if (auto p = w.find("negative"); p != w.end()) wm.negative = to_table(*p, path + "/negative");
      bundle.wavelets.push_back(std::move(wm));
    }
  }
  return bundle;
}

MaskBundle parse_mask(std::string_view text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw MaskFileError(source + ": " + e.what());
  }
  MaskBundle bundle;
  try {
    bundle = mask_from_json(doc);
  } catch (const MaskFileError& e) {
    throw MaskFileError(source + ": " + e.what());
  } catch (const json::exception& e) {
    throw MaskFileError(source + ": " + e.what());
  }
  const auto report = validate(bundle);
  if (!report.ok()) throw MaskFileError(source + ": invalid mask: " + report.summary());
  return bundle;
}

MaskBundle load_mask(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MaskFileError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_mask(buffer.str(), path);
}

json mask_to_json(const MaskBundle& bundle) {
  const auto& s = bundle.scaling;
  json doc;
  doc["name"] = s.name;
  doc["dilation"] = s.dilation;
  doc["multiplicity"] = s.multiplicity;
  doc["scaling"] = {{"support", {s.support.lo, s.support.hi}},
                    {"positive", table_json(s.positive)},
                    {"negative", table_json(s.negative)}};
  doc["wavelets"] = json::array();
  for (const auto& w : bundle.wavelets) {
    doc["wavelets"].push_back({{"branch", w.branch},
                               {"support", {w.support.lo, w.support.hi}},
                               {"positive", table_json(w.positive)},
                               {"negative", table_json(w.negative)}});
  }
  return doc;
}

void save_mask(const MaskBundle& bundle, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw MaskFileError(path + ": cannot open for writing");
  out << mask_to_json(bundle).dump(2) << '\n';
  if (!out) throw MaskFileError(path + ": write failed");
}

MaskBundle resolve_mask(const std::string& spec) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) return load_mask(spec);
  const auto names = bundled_example_names();
  if (std::find(names.begin(), names.end(), spec) != names.end()) return bundled_example(spec);
  throw MaskFileError(spec + ": cannot open file (and no bundled example of that name)");
}

}  // namespace twodir
