#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "support/random_masks.hpp"
#include "support/reference_values.hpp"
#include "twodir/const_expr.hpp"
#include "twodir/errors.hpp"
#include "twodir/mask_io.hpp"

using namespace twodir;
using namespace twodir::testing;
namespace fs = std::filesystem;

namespace {

const char* kMinimal = R"({
  "name": "minimal",
  "dilation": 2,
  "multiplicity": 1,
  "scaling": {"support": [0, 1], "positive": {"0": [[0.5]]}, "negative": {"1": [["1/2"]]}},
  "wavelets": []
})";

bool bitwise_equal(const MaskBundle& a, const MaskBundle& b) {
  auto same = [](const std::map<int, Matrix>& x, const std::map<int, Matrix>& y) {
    if (x.size() != y.size()) return false;
    for (const auto& [k, m] : x) {
      auto it = y.find(k);
      if (it == y.end() || it->second.rows() != m.rows() || it->second.cols() != m.cols()) return false;
      for (Eigen::Index i = 0; i < m.size(); ++i)
        if (std::memcmp(&m.data()[i], &it->second.data()[i], sizeof(double)) != 0) return false;
    }
    return true;
  };
  if (a.scaling.dilation != b.scaling.dilation || a.scaling.multiplicity != b.scaling.multiplicity ||
      !(a.scaling.support == b.scaling.support) || !same(a.scaling.positive, b.scaling.positive) ||
      !same(a.scaling.negative, b.scaling.negative) || a.wavelets.size() != b.wavelets.size())
    return false;
  for (std::size_t s = 0; s < a.wavelets.size(); ++s) {
    const auto& u = a.wavelets[s];
    const auto& v = b.wavelets[s];
    if (u.branch != v.branch || !(u.support == v.support) || !same(u.positive, v.positive) ||
        !same(u.negative, v.negative))
      return false;
  }
  return true;
}

fs::path temp_dir(const std::string& tag) {
  auto p = fs::temp_directory_path() / ("twodir_io_" + tag);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("bundled examples load") {
  const auto names = bundled_example_names();
  CHECK(names == std::vector<std::string>{"example_5_1", "example_5_2"});

  const auto a = bundled_example("example_5_1");
  CHECK(a.scaling.dilation == 2);
  CHECK(a.scaling.multiplicity == 1);
  CHECK(a.scaling.positive.at(1)(0, 0) == doctest::Approx(3.0 / (4.0 * kSqrt2)));
  CHECK(a.scaling.positive.at(1)(0, 0) == doctest::Approx(0.5303301).epsilon(1e-7));
  CHECK(a.scaling.negative.at(2)(0, 0) == doctest::Approx((2 + kSqrt7) / (4 * kSqrt2)));
  REQUIRE(a.wavelets.size() == 1);
  CHECK(a.wavelets[0].branch == 1);

  const auto b = bundled_example("example_5_2");
  CHECK(b.scaling.multiplicity == 2);
  CHECK(b.scaling.dilation == 2);
  CHECK(validate(b).ok());

  CHECK_THROWS_AS(bundled_example("nope"), MaskFileError);
}

TEST_CASE("expression entries match an independent evaluation") {
  const auto a = bundled_example("example_5_1");
  const long double s2 = std::sqrt(2.0L), s7 = std::sqrt(7.0L);
  auto close = [](double got, long double want) {
    return std::abs(static_cast<long double>(got) - want) <= 4 * std::numeric_limits<double>::epsilon() * std::abs(want);
  };
  CHECK(close(a.scaling.positive.at(2)(0, 0), (2 - s7) / 4 / s2));
  CHECK(close(a.scaling.negative.at(3)(0, 0), 1 / 4.0L / s2));
  CHECK(close(a.wavelets[0].negative.at(-1)(0, 0), -(2 + s7) / 4 / s2));
}

TEST_CASE("minimal document parses with numbers and expressions") {
  const auto b = parse_mask(kMinimal);
  CHECK(b.scaling.positive.at(0)(0, 0) == 0.5);
  CHECK(b.scaling.negative.at(1)(0, 0) == 0.5);
  CHECK(b.wavelets.empty());
}

TEST_CASE("schema errors") {
  auto doc = nlohmann::json::parse(kMinimal);
  SUBCASE("missing dilation") {
    doc.erase("dilation");
    CHECK_THROWS_WITH_AS(parse_mask(doc.dump()), doctest::Contains("dilation"), MaskFileError);
  }
  SUBCASE("unknown key") {
    doc["extra"] = 1;
    CHECK_THROWS_WITH_AS(parse_mask(doc.dump()), doctest::Contains("extra"), MaskFileError);
  }
  SUBCASE("wrong matrix shape") {
    doc["scaling"]["positive"]["0"] = {{1.0, 2.0}};
    CHECK_THROWS_AS(parse_mask(doc.dump()), MaskFileError);
  }
  SUBCASE("bad expression") {
    doc["scaling"]["positive"]["0"] = {{"1/0"}};
    CHECK_THROWS_WITH_AS(parse_mask(doc.dump()), doctest::Contains("division by zero"), MaskFileError);
  }
  SUBCASE("coefficient outside support") {
    doc["scaling"]["positive"]["5"] = {{1.0}};
    CHECK_THROWS_WITH_AS(parse_mask(doc.dump()), doctest::Contains("invalid mask"), MaskFileError);
  }
  SUBCASE("non-integer key") {
    doc["scaling"]["positive"]["x"] = {{1.0}};
    CHECK_THROWS_AS(parse_mask(doc.dump()), MaskFileError);
  }
}

TEST_CASE("syntax errors report a position") {
  const std::string broken = "{\n  \"name\": \"x\",\n  \"dilation\": 2,,\n}";
  CHECK_THROWS_WITH_AS(parse_mask(broken, "broken.json"), doctest::Contains("line 3"), MaskFileError);
  CHECK_THROWS_WITH_AS(parse_mask(broken, "broken.json"), doctest::Contains("broken.json"), MaskFileError);
}

TEST_CASE("missing files") {
  CHECK_THROWS_AS(load_mask("/nonexistent/mask.json"), MaskFileError);
  CHECK_THROWS_WITH_AS(resolve_mask("/nonexistent/mask.json"), doctest::Contains("cannot open"),
                       MaskFileError);
  CHECK_NOTHROW(resolve_mask("example_5_2"));
}

TEST_CASE("property: save and load round-trip bit-exactly") {
  std::mt19937 rng(4242);
  const auto dir = temp_dir("roundtrip");
  for (int trial = 0; trial < 50; ++trial) {
    const int r = 1 + trial % 3, d = 2 + trial % 3;
    const auto b = random_condition_e_bundle(rng, r, d, -2, 2, d - 1);
    const auto path = (dir / ("m" + std::to_string(trial) + ".json")).string();
    save_mask(b, path);
    CHECK(bitwise_equal(b, load_mask(path)));
    CHECK(bitwise_equal(b, mask_from_json(mask_to_json(b))));
  }
  fs::remove_all(dir);
}

TEST_CASE("bundled texts round-trip through files") {
  const auto dir = temp_dir("export");
  for (const auto& name : bundled_example_names()) {
    const auto path = dir / (name + ".json");
    {
      std::ofstream out(path);
      out << bundled_example_text(name);
    }
    CHECK(bitwise_equal(bundled_example(name), load_mask(path.string())));
    CHECK(bitwise_equal(bundled_example(name), resolve_mask(path.string())));
  }
  fs::remove_all(dir);
}
