#include <cstdio>

#include <json.hpp>

#include "qgeo/document.hpp"
#include "qgeo/error.hpp"
#include "support.hpp"

using namespace qgeo;

namespace {

Document sample() {
  Document d;
  d.params = {{"command", std::string("demo")}, {"omega0", 1.25}, {"steps", std::int64_t{5}}};
  d.columns = {"name", "x", "n", "ok"};
  d.add_row({std::string("alpha"), 0.1, std::int64_t{-3}, true});
  d.add_row({std::string("beta"), 1e-300, std::int64_t{0}, false});
  d.add_row({std::string("gamma"), 3.141592653589793, std::int64_t{1} << 40, true});
  d.add_row({std::string("delta"), -2.5e17, std::int64_t{7}, false});
  d.summary = {{"g_min", 0.7071067811865476}, {"crossing", false}};
  return d;
}

}  // namespace

TEST_SUITE("document") {
  TEST_CASE("cell formatting") {
    CHECK(format_cell(0.1) == "0.10000000000000001");
    CHECK(format_cell(std::int64_t{42}) == "42");
    CHECK(format_cell(true) == "true");
    CHECK(format_cell(std::string("x_y")) == "x_y");
    CHECK_THROWS_KIND(format_cell(std::string("a,b")), ErrorKind::InvalidArgument);
    CHECK_THROWS_KIND(format_cell(std::string("a\nb")), ErrorKind::InvalidArgument);
  }

  TEST_CASE("csv layout") {
    const std::string csv = to_csv(sample());
    CHECK(csv.rfind("# schema=1\n# command=demo\n# omega0=1.25\n# steps=5\n", 0) == 0);
    CHECK(csv.find("# summary.crossing=false\nname,x,n,ok\nalpha,0.10000000000000001,-3,true\n") != std::string::npos);
    CHECK(csv.find('\r') == std::string::npos);
    CHECK(csv.back() == '\n');
  }

  TEST_CASE("csv round trip is byte identical") {
    const std::string first = to_csv(sample());
    const Document back = parse_csv(first);
    CHECK(back.columns == sample().columns);
    REQUIRE(back.rows.size() == 4);
    CHECK(std::get<double>(back.rows[1][1]) == 1e-300);
    CHECK(std::get<std::int64_t>(back.rows[2][2]) == std::int64_t{1} << 40);
    CHECK(std::get<bool>(back.rows[0][3]));
    CHECK(std::get<std::string>(back.rows[3][0]) == "delta");
    CHECK(to_csv(back) == first);

    auto g = testing::rng(71);
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    Document d;
    d.columns = {"v"};
    for (int k = 0; k < 1000; ++k) d.add_row({u(g) * std::pow(10.0, k % 40 - 20)});
    const std::string text = to_csv(d);
    const Document e = parse_csv(text);
    // Integral doubles come back as integers; the value must survive either way.
    const auto number = [](const Cell& c) {
      return std::holds_alternative<double>(c) ? std::get<double>(c) : static_cast<double>(std::get<std::int64_t>(c));
    };
    for (std::size_t k = 0; k < d.rows.size(); ++k) CHECK(number(e.rows[k][0]) == std::get<double>(d.rows[k][0]));
    CHECK(to_csv(e) == text);
  }

  TEST_CASE("json layout") {
    const nlohmann::json j = nlohmann::json::parse(to_json(sample()));
    CHECK(j["schema"] == 1);
    CHECK(j["params"]["omega0"] == 1.25);
    CHECK(j["params"]["command"] == "demo");
    REQUIRE(j["rows"].size() == 4);
    CHECK(j["rows"][0]["name"] == "alpha");
    CHECK(j["rows"][0]["x"].get<double>() == 0.1);
    CHECK(j["rows"][2]["n"].get<std::int64_t>() == std::int64_t{1} << 40);
    CHECK(j["rows"][1]["ok"] == false);
    CHECK(j["summary"]["g_min"].get<double>() == 0.7071067811865476);

    Document plain = sample();
    plain.summary.clear();
    CHECK_FALSE(nlohmann::json::parse(to_json(plain)).contains("summary"));
  }

  TEST_CASE("document guards") {
    Document d;
    d.columns = {"a", "b"};
    CHECK_THROWS_KIND(d.add_row({1.0}), ErrorKind::DimensionMismatch);
    CHECK_THROWS_KIND(parse_csv("a,b\n1,2\n"), ErrorKind::InvalidArgument);
    CHECK_THROWS_KIND(parse_csv("# schema=2\na\n1\n"), ErrorKind::InvalidArgument);
    CHECK_THROWS_KIND(parse_csv("# schema=1\n"), ErrorKind::InvalidArgument);
    CHECK_THROWS_KIND(write_text("/nonexistent-dir/out.csv", "x"), ErrorKind::Io);
  }

  TEST_CASE("write_text") {
    const std::string path = "document_test_output.csv";
    write_text(path, to_csv(sample()));
    std::FILE* f = std::fopen(path.c_str(), "rb");
    REQUIRE(f != nullptr);
    std::string text;
    char buf[256];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, f)) > 0) text.append(buf, n);
    std::fclose(f);
    std::remove(path.c_str());
    CHECK(text == to_csv(sample()));
  }
}
