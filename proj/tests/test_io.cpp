#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "pdslab/error.hpp"
#include "pdslab/io.hpp"
#include "pdslab/scheme.hpp"

using namespace pdslab;

namespace {

std::filesystem::path temp_dir() {
  auto d = std::filesystem::temp_directory_path() / "pdslab_io_test";
  std::filesystem::create_directories(d);
  return d;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("field and group round trip") {
    const FiniteField F(3, 4);
    CHECK(io::field_from_json(io::field_to_json(F)) == F);
    const io::GroupDescriptor g{FiniteField(5, 2), 2};
    const auto back = io::group_from_json(io::group_to_json(g));
    CHECK(back.field == g.field);
    CHECK(back.n == 2);
    CHECK(*back.group() == *g.group());
  }

  TEST_CASE("set file round trip keeps members and prediction") {
    const auto c = construct_cyclotomic_pds(2, 3, 1, 1, FormKind::Elliptic, 0);
    const io::GroupDescriptor g{FiniteField(2, 2), 2};
    const auto j = io::set_to_json(g, c.set, c.predicted);
    const auto back = io::set_from_json(nlohmann::ordered_json::parse(io::dump(j)));
    CHECK(back.set.members == c.set.members);
    REQUIRE(back.predicted.has_value());
    CHECK(back.predicted->same_parameters(c.predicted));
  }

  TEST_CASE("partition file round trip") {
    const auto part = build_cyclotomic_scheme(2, 3, 1, 1, FormKind::Hyperbolic);
    const io::GroupDescriptor g{FiniteField(2, 2), 2};
    const auto back = io::partition_from_json(io::partition_to_json(g, part));
    CHECK(back.partition.labels == part.labels);
    REQUIRE(back.partition.d() == part.d());
    for (std::uint32_t i = 0; i < part.d(); ++i) CHECK(back.partition.classes[i].members == part.classes[i].members);
  }

  TEST_CASE("function file round trip") {
    const FiniteField F(3, 2);
    const auto f = PAryFunction::trace_quadratic(F, F.generator());
    CHECK(io::function_from_json(io::function_to_json(f)) == f);
  }

  TEST_CASE("malformed inputs are invalid arguments") {
    CHECK_THROWS_AS(io::set_from_json(nlohmann::ordered_json::parse(R"({"group": {"n": 2}})")), InvalidArgument);
    const auto dir = temp_dir();
    const auto bad = (dir / "bad.json").string();
    std::ofstream(bad) << "{ not json";
    CHECK_THROWS_AS(io::read_json_file(bad), InvalidArgument);
    const auto j = nlohmann::ordered_json::parse(
        R"({"group": {"field": {"p": 2, "k": 2, "modulus": [1,1,1]}, "n": 2}, "members": [1, 99]})");
    CHECK_THROWS_AS(io::set_from_json(j), InvalidArgument);
  }

  TEST_CASE("missing files are I/O errors; writes are atomic") {
    CHECK_THROWS_AS(io::read_json_file("/nonexistent/pdslab/x.json"), IoError);
    CHECK_THROWS_AS(io::write_file_atomic("/nonexistent/pdslab/x.json", "{}"), IoError);
    const auto path = (temp_dir() / "out.json").string();
    io::write_file_atomic(path, "{\"a\": 1}\n");
    CHECK(io::read_json_file(path)["a"] == 1);
    CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
  }

  TEST_CASE("form entries are g^e strings") {
    const FiniteField F(2, 2);
    const auto j = io::form_to_json(QuadraticForm::standard_hyperbolic(F, 1));
    const auto text = j.dump();
    CHECK(text.find("g^0") != std::string::npos);
  }
}
