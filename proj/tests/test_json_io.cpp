#include "doctest.h"
#include "otbook/json_io.hpp"
#include "otbook/kirby.hpp"

using namespace otbook;
using io::Json;

namespace {

void check_round_trip(const Json& j) {
  const std::string text = j.dump();
  CHECK(Json::parse(text).dump() == text);
  const std::string pretty = j.dump(2);
  CHECK(Json::parse(pretty).dump(2) == pretty);
}

}  // namespace

TEST_CASE("twist words") {
  const auto w = mcg::phi_word(2, 3);
  const Json j = io::to_json(w);
  CHECK(j.dump() == R"([["a",2],["b",1],["c",1],["d",1],["e",-4]])");
  CHECK(io::word_from_json(j) == w);
  CHECK(io::word_from_json(Json::array()) == mcg::TwistWord());
  CHECK_THROWS_AS(io::word_from_json(Json::parse(R"([["f",1]])")), LookupError);
  CHECK_THROWS_AS(io::word_from_json(Json::parse(R"([["a",0]])")), DomainError);
  CHECK_THROWS_AS(io::word_from_json(Json::parse(R"([["a"]])")), DomainError);
  CHECK_THROWS_AS(io::word_from_json(Json::parse(R"({"a":1})")), DomainError);
  check_round_trip(j);
}

TEST_CASE("contact diagrams use string coefficients") {
  const auto d = contact::presentation_for(1, 2);
  const Json j = io::to_json(d);
  CHECK(j.at("components").at(0).at("coeff") == "1/3");
  CHECK(j.at("linking").at(0) == Json::parse(R"(["Ke","Ka",-2])"));
  CHECK(io::contact_from_json(j) == d);
  check_round_trip(j);
  CHECK_THROWS_AS(io::contact_from_json(Json::parse(R"({"components":[{"id":"x"}]})")), DomainError);
}

TEST_CASE("framed diagrams and move logs") {
  const auto chain = kirby::reduce_family_diagram(2, 2);
  const Json j = io::to_json(chain, true);
  CHECK(j.at("move_log").size() == chain.move_log().size());
  CHECK(io::diagram_from_json(j).same_graph(chain));
  check_round_trip(j);

  const auto rational = contact::smooth_diagram(contact::presentation_for(3, 1));
  const Json r = io::to_json(rational);
  CHECK(io::diagram_from_json(r).same_graph(rational));
  CHECK(r.at("vertices").at(0).at("framing").is_string());
}

TEST_CASE("move scripts round-trip through JSON") {
  const auto script = kirby::family_script(3, 2);
  const Json j = io::script_to_json(script);
  CHECK(io::script_from_json(j) == script);
  check_round_trip(j);
  CHECK_THROWS_AS(io::move_from_json(Json::parse(R"({"move":"twist","args":{}})")), LookupError);
  CHECK_THROWS_AS(io::move_from_json(Json::parse(R"({"move":"blow_down","args":{}})")), DomainError);
  CHECK_THROWS_AS(io::script_from_json(Json::object()), DomainError);

  const auto start = contact::smooth_diagram(contact::presentation_for(3, 2));
  const auto replayed = kirby::replay(start, io::script_from_json(Json::parse(j.dump())));
  CHECK(replayed.same_graph(kirby::replay(start, script)));
}

TEST_CASE("certificates round-trip and keep the table version") {
  const auto cert = veering::prove_right_veering(mcg::phi_word(4, 2));
  REQUIRE(cert.has_value());
  const Json j = io::to_json(*cert);
  CHECK(j.at("table_version") == mcg::kTableVersion);
  CHECK(io::certificate_from_json(j) == *cert);
  check_round_trip(j);

  Json wrong = j;
  wrong["table_version"] = mcg::kTableVersion + 1;
  CHECK_THROWS_AS(io::certificate_from_json(wrong), DomainError);
  Json bad_rule = j;
  bad_rule["goals"][0]["rule"] = "MAGIC";
  CHECK_THROWS_AS(io::certificate_from_json(bad_rule), LookupError);
}

TEST_CASE("census and d3 data serialize exact rationals") {
  const auto ot = census::overtwisted_verdict(1, 1);
  const Json j = io::to_json(ot);
  CHECK(j.at("d3").at("d3") == "1/2");
  CHECK(j.at("census_d3") == Json::parse(R"(["1/4"])"));
  CHECK(j.at("verdict") == "OVERTWISTED_CERTIFIED");
  CHECK(j.at("presentation").at("Q").size() == 3);
  check_round_trip(j);
  CHECK(io::to_json(lens::LensSpace{4, 3}).dump() == R"j({"name":"L(4,3)","p":4,"q":3})j");
  CHECK(io::to_json(H1Order::infinite()) == "INFINITE");
}
