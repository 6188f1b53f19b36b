#include "doctest.h"
#include "evidence/error.hpp"
#include "evidence/harness.hpp"
#include "evidence/io.hpp"
#include "support/generators.hpp"

using namespace evidence;

namespace {

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an evidence::Error");
  return Errc::out_of_range;
}

std::string message_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("mass JSON") {
  const Frame f = Frame::make({"a", "b", "c"});
  const auto m = MassFunction::make(f, {{FrameSubset::from_names(f, {"b"}), Rational(1, 3)},
                                        {FrameSubset::from_names(f, {"a", "c"}), Rational(2, 3)}});
  const std::string text = io::mass_to_json(m);
  CHECK(text ==
        "{\n  \"frame\": [\n    \"a\",\n    \"b\",\n    \"c\"\n  ],\n  \"focal\": [\n"
        "    {\n      \"set\": \"a|c\",\n      \"num\": 2,\n      \"den\": 3\n    },\n"
        "    {\n      \"set\": \"b\",\n      \"num\": 1,\n      \"den\": 3\n    }\n  ]\n}\n");
  CHECK(io::mass_from_json(text) == m);
  CHECK(io::mass_to_json(io::mass_from_json(text)) == text);

  // Non-canonical input is accepted and re-validated.
  CHECK(io::mass_from_json(R"({"frame":["a","b","c"],"focal":[{"set":"b","num":2,"den":6},)"
                           R"({"set":"c|a","num":2,"den":3}]})") == m);

  CHECK(error_of([] { io::mass_from_json("{"); }) == Errc::parse_error);
  CHECK(error_of([] { io::mass_from_json(R"({"frame":["a"],"focal":[{"set":"a","num":0.5,"den":1}]})"); }) ==
        Errc::parse_error);
  CHECK(error_of([] { io::mass_from_json(R"({"frame":["a","b"],"focal":[{"set":"a","num":1,"den":2}]})"); }) ==
        Errc::mass_sum_not_one);
  CHECK(error_of([] { io::mass_from_json(R"({"frame":["a"],"focal":[{"set":"{}","num":1,"den":1}]})"); }) ==
        Errc::mass_on_empty_set);
  CHECK(error_of([] {
          io::mass_from_json(
              R"({"frame":["a","b"],"focal":[{"set":"a","num":-1,"den":2},{"set":"b","num":3,"den":2}]})");
        }) == Errc::nonpositive_weight);
  CHECK(error_of([] { io::mass_from_json(R"({"frame":["a","a"],"focal":[]})"); }) == Errc::duplicate_name);
}

TEST_CASE("tables JSON") {
  const Frame f = Frame::make({"a", "b"});
  const auto text = io::tables_to_json(MassFunction::vacuous(f));
  CHECK(text.find("\"belief\"") != std::string::npos);
  CHECK(text.find("\"plausibility\"") != std::string::npos);
}

TEST_CASE("population CSV") {
  const Frame f = Frame::make({"a", "b", "c"});
  const Population p(f, {PopulationRecord("x", FrameSubset::from_names(f, {"a", "b"})),
                         PopulationRecord("y", FrameSubset::from_names(f, {"c"}),
                                          FrameSubset::from_names(f, {"b", "c"}))});
  const std::string text = io::population_to_csv(p);
  CHECK(text == "#frame=a|b|c\nobject_id,response,label\nx,a|b,\ny,c,b|c\n");
  CHECK(io::population_from_csv(text) == p);
  CHECK(io::population_to_csv(io::population_from_csv(text)) == text);

  const std::string coot = io::population_to_csv(coot_fixture());
  CHECK(io::population_to_csv(io::population_from_csv(coot)) == coot);

  // Windows line endings and no frame line: frame inferred from first use.
  const auto inferred = io::population_from_csv("object_id,response,label\r\nx,b,\r\ny,a|b,a\r\n");
  CHECK(inferred.frame().names() == std::vector<std::string>{"b", "a"});
  CHECK(inferred.records()[0].label() == FrameSubset::full(inferred.frame()));

  const auto overridden = io::population_from_csv(text, Frame::make({"c", "b", "a"}));
  CHECK(overridden.frame().names().front() == "c");
}

TEST_CASE("population CSV errors carry line numbers") {
  const std::string head = "#frame=a|b\nobject_id,response,label\n";
  CHECK(message_of([&] { io::population_from_csv(head + "x,a,\ny,a,b\n"); }).starts_with("line 4:"));
  CHECK(message_of([&] { io::population_from_csv(head + "x,a,\ny,{},\n"); }).starts_with("line 4:"));
  CHECK(message_of([&] { io::population_from_csv(head + "x,a,\nx,b,\n"); }).starts_with("line 4:"));
  CHECK(message_of([&] { io::population_from_csv(head + "x,a\n"); }).starts_with("line 3:"));
  CHECK(message_of([&] { io::population_from_csv(head + "x,q,\n"); }).starts_with("line 3:"));
  CHECK(message_of([&] { io::population_from_csv("#frame=a\nid,response,label\n"); }).starts_with("line 2:"));
  CHECK(error_of([&] { io::population_from_csv(head + "x,,\n"); }) == Errc::parse_error);
}

TEST_CASE("relabel report") {
  const auto out = simple_relabel(coot_standin(), coot_label());
  CHECK(io::relabel_report_json(out) ==
        "{\n  \"survivors\": 682,\n  \"discarded\": 35,\n  \"conflict_num\": 35,\n  \"conflict_den\": 717\n}\n");
}
