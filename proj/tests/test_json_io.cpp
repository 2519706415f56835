#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include "sdot/json_io.hpp"

using namespace sdot;

TEST_CASE("tss round trip is byte identical") {
  for (const auto& doc :
       {tss_to_json(standard_simplex(2, 2)),
        tss_to_json(nerve_of_category(FiniteCategory::cyclic_group(2), 3).object),
        tss_to_json(spine(3, 2).object)}) {
    CHECK(tss_to_json(tss_from_json(doc)) == doc);
    CHECK(schema_of(doc) == "tss/v1");
  }
}

TEST_CASE("pdec round trip is byte identical") {
  for (const auto& t : enumerate_triangulations(5)) {
    auto doc = pdec_to_json(t);
    CHECK(pdec_to_json(pdec_from_json(doc)) == doc);
    CHECK(schema_of(doc) == "pdec/v1");
  }
}

TEST_CASE("dcat round trip is byte identical") {
  for (const auto& doc :
       {dcat_to_json(generate_w(2).cat), dcat_to_json(generate_h(1).cat),
        dcat_to_json(generate_box(1, 2).cat)}) {
    CHECK(dcat_to_json(dcat_from_json(doc)) == doc);
    CHECK(schema_of(doc) == "dcat/v1");
  }
}

TEST_CASE("paug round trip is byte identical") {
  for (const auto& doc :
       {paug_to_json(generate_w_preaug(1, 2).y),
        paug_to_json(representable(1, 1, 2)),
        paug_to_json(generate_h_preaug(2, 2)),
        paug_to_json(representable_minus_one(2))}) {
    CHECK(paug_to_json(paug_from_json(doc)) == doc);
    CHECK(schema_of(doc) == "paug/v1");
  }
}

TEST_CASE("unknown fields are rejected") {
  auto add_junk = [](const std::string& doc) {
    auto j = nlohmann::json::parse(doc);
    j["unexpected"] = 1;
    return j.dump(2) + "\n";
  };
  CHECK_THROWS_AS(tss_from_json(add_junk(tss_to_json(standard_simplex(1, 1)))),
                  Error);
  CHECK_THROWS_AS(
      pdec_from_json(add_junk(pdec_to_json(trivial_decomposition(3)))), Error);
  CHECK_THROWS_AS(dcat_from_json(add_junk(dcat_to_json(generate_w(1).cat))),
                  Error);
  CHECK_THROWS_AS(
      paug_from_json(add_junk(paug_to_json(representable(0, 0, 1)))), Error);
}

TEST_CASE("malformed documents are rejected with InvalidDocument") {
  for (const auto& bad : {std::string("not json at all"), std::string("[]"),
                          std::string("{\"schema\": \"nope/v9\"}")}) {
    try {
      tss_from_json(bad);
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.code() == "InvalidDocument");
    }
  }
  CHECK_THROWS_AS(schema_of("{}"), Error);
  CHECK(schema_of("{\"schema\": \"pdec/v1\"}") == "pdec/v1");
}

TEST_CASE("parsing validates the object") {
  auto j = nlohmann::json::parse(tss_to_json(standard_simplex(2, 2)));
  // break a simplicial identity while staying in range
  j["faces"][0][0][0] = (j["faces"][0][0][0].get<int>() + 1) % 3;
  CHECK_THROWS_AS(tss_from_json(j.dump(2) + "\n"), Error);
}

TEST_CASE("reports serialize with their schema") {
  auto rep = check_simplicial(standard_simplex(2, 3),
                              SimplicialProperty::segal, 2);
  auto doc = report_to_json(rep, "delta2");
  CHECK(schema_of(doc) == "report/v1");
  CHECK(doc.find("\"verdict\"") != std::string::npos);

  auto rt = roundtrip_simplicial(standard_simplex(2, 5), 2);
  auto rdoc = roundtrip_to_json(rt);
  CHECK(schema_of(rdoc) == "report/v1");
}
