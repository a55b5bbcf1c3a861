#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>
#include <fstream>
#include <functional>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "skewbrace/enumerate.hpp"
#include "skewbrace/io.hpp"
#include "skewbrace/primality.hpp"
#include "skewbrace/products.hpp"

using namespace skewbrace;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name, const std::string& content) {
  fs::path p = fs::temp_directory_path() / name;
  std::ofstream out(p, std::ios::binary);
  out << content;
  return p;
}

errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  throw std::logic_error("expected a library error");
}

}  // namespace

TEST_CASE("group JSON round trips byte for byte") {
  FiniteGroup g = make_dihedral(4);
  std::string text = group_to_json(g);
  FiniteGroup back = group_from_json(text);
  CHECK(back == g);
  CHECK(group_to_json(back) == text);

  json j = json::parse(text);
  CHECK(j["order"] == 8);
  CHECK(j["table"].size() == 8);

  j["order"] = 9;
  CHECK(code_of([&] { group_from_json(j.dump()); }) == errc::parse_error);
}

TEST_CASE("brace JSON round trips byte for byte") {
  for (const SkewBrace& b :
       {mod_p_squared_brace(3), trivial_brace(make_symmetric(3)),
        opposite_mul_brace(make_quaternion())}) {
    std::string text = brace_to_json(b);
    SkewBrace back = brace_from_json(text);
    CHECK(back == b);
    CHECK(brace_to_json(back) == text);
  }
}

TEST_CASE("plain text round trips and accepts shifted identities") {
  for (const SkewBrace& b :
       {mod_p_squared_brace(2), trivial_brace(make_symmetric(3))}) {
    std::string text = brace_to_plain_text(b);
    SkewBrace back = brace_from_plain_text(text);
    CHECK(back == b);
    CHECK(brace_to_plain_text(back) == text);
  }

  CHECK(brace_from_plain_text("2\n1 2\n2 1\n\n1 2\n2 1\n") ==
        trivial_brace(make_cyclic(2)));

  // Identity sits at position 3 of both tables; the importer relabels it to
  // the first slot.
  std::string shifted =
      "3\n"
      "2 3 1\n3 1 2\n1 2 3\n"
      "\n"
      "2 3 1\n3 1 2\n1 2 3\n";
  CHECK(brace_from_plain_text(shifted) == trivial_brace(make_cyclic(3)));
}

TEST_CASE("mismatched table identities are reported as such") {
  json j;
  j["order"] = 4;
  auto standard = json::array();
  auto moved = json::array();
  std::vector<int> s = {1, 0, 2, 3};
  for (int a = 0; a < 4; ++a) {
    auto r1 = json::array(), r2 = json::array();
    for (int b = 0; b < 4; ++b) {
      r1.push_back((a + b) % 4);
      r2.push_back(s[(s[a] + s[b]) % 4]);
    }
    standard.push_back(r1);
    moved.push_back(r2);
  }
  j["add"] = standard;
  j["mul"] = moved;
  CHECK(code_of([&] { brace_from_json(j.dump()); }) == errc::identity_mismatch);
}

TEST_CASE("parse failures carry the parse_error code") {
  CHECK(code_of([] { brace_from_json("{oops"); }) == errc::parse_error);
  CHECK(code_of([] { brace_from_json("{\"order\": 4}"); }) == errc::parse_error);
  CHECK(code_of([] {
          brace_from_json(
              "{\"order\": 2, \"add\": [[0,1],[1,0]], \"mul\": [[0,\"x\"],[1,0]]}");
        }) == errc::parse_error);
  CHECK(code_of([] {
          brace_from_json(
              "{\"order\": 2, \"add\": [[0,1],[1,0]], \"mul\": [[0]]}");
        }) == errc::parse_error);
  CHECK(code_of([] { brace_from_plain_text("abc"); }) == errc::parse_error);
  CHECK(code_of([] { brace_from_plain_text("2\n0 1\n1 0\n\n1 2\n2 1\n"); }) ==
        errc::parse_error);
  CHECK(code_of([] {
          brace_from_plain_text("2\n1 2\n2 1\n\n1 2\n2 1\nextra");
        }) == errc::parse_error);
  CHECK(code_of([] { brace_from_plain_text("70000\n"); }) == errc::parse_error);
}

TEST_CASE("file import dispatches on the leading character") {
  SkewBrace b = mod_p_squared_brace(2);
  fs::path as_json = temp_file("skbr_io_a.json", brace_to_json(b));
  fs::path as_text = temp_file("skbr_io_b.txt", brace_to_plain_text(b));
  fs::path garbage = temp_file("skbr_io_c.txt", "neither format\n");

  CHECK(brace_from_file(as_json.string()) == b);
  CHECK(brace_from_file(as_text.string()) == b);
  CHECK(code_of([&] { brace_from_file(garbage.string()); }) ==
        errc::parse_error);
  CHECK(code_of([] { brace_from_file("/nonexistent/skbr.json"); }) ==
        errc::parse_error);

  fs::remove(as_json);
  fs::remove(as_text);
  fs::remove(garbage);
}

TEST_CASE("semidirect specs round trip and are validated on input") {
  SkewBrace b1 = trivial_brace(make_klein());
  SkewBrace b2 = trivial_brace(make_cyclic(2));
  SemidirectSpec spec{b1, b2, {{0, 1, 2, 3}, {0, 2, 1, 3}}};
  std::string text = semidirect_spec_to_json(spec);

  SemidirectSpec back = semidirect_spec_from_json(text);
  CHECK(back.b1 == spec.b1);
  CHECK(back.b2 == spec.b2);
  CHECK(back.action == spec.action);
  CHECK(semidirect_spec_to_json(back) == text);

  json j = json::parse(text);
  j["action"][1][0] = 9;
  CHECK(code_of([&] { semidirect_spec_from_json(j.dump()); }) ==
        errc::parse_error);
  j["action"][1] = {1, 2, 3, 0};
  CHECK(code_of([&] { semidirect_spec_from_json(j.dump()); }) ==
        errc::not_a_homomorphism);
}

TEST_CASE("validation reports expose the headline facts") {
  json j = json::parse(validation_report_json(mod_p_squared_brace(3)));
  CHECK(j["order"] == 9);
  CHECK(j["valid"] == true);
  CHECK(j["trivial"] == false);
  CHECK(j["abelian_type"] == true);
  CHECK(j["fingerprint"].get<std::string>().size() == 16);

  json t = json::parse(validation_report_json(trivial_brace(make_symmetric(3))));
  CHECK(t["trivial"] == true);
  CHECK(t["abelian_type"] == false);
}

TEST_CASE("ideal reports list every ideal with flags") {
  SkewBrace b = mod_p_squared_brace(2);
  json j = json::parse(ideal_report_json(b, all_ideals(b)));
  CHECK(j["order"] == 4);
  CHECK(j["count"] == 3);
  CHECK(j["ideals"][1]["elements"] == json::array({0, 2}));
  CHECK(j["ideals"][1]["size"] == 2);
  CHECK(j["ideals"][1]["ideal"] == true);
  CHECK(j["ideals"][1]["left_ideal"] == true);
  CHECK(j["ideals"][1]["minimal"] == true);
  CHECK(j["ideals"][2]["minimal"] == false);
}

TEST_CASE("primality reports embed replayable witnesses") {
  SkewBrace c2 = trivial_brace(make_cyclic(2));
  json bad = json::parse(
      primality_report_json(c2, "semiprime", check_semiprime(c2)));
  CHECK(bad["property"] == "semiprime");
  CHECK(bad["holds"] == false);
  CHECK(bad["witness"]["ideals"] == json::array({json::array({0, 1})}));
  CHECK(bad["witness"]["chain"][0]["left"] == json::array({0, 1}));
  CHECK(bad["witness"]["chain"][0]["result"] == json::array({0}));

  // The smallest prime braces are the simple order-12 classes.
  SkewBrace prime_brace = trivial_brace(make_cyclic(2));
  for (const auto& c : enumerate_braces(12).classes)
    if (is_simple(c.rep)) {
      prime_brace = c.rep;
      break;
    }
  REQUIRE(prime_brace.order() == 12);
  json good = json::parse(
      primality_report_json(prime_brace, "prime", check_prime(prime_brace)));
  CHECK(good["holds"] == true);
  CHECK(good["witness"].is_null());
}

TEST_CASE("automorphism and isomorphism reports") {
  SkewBrace b = mod_p_squared_brace(2);
  json a = json::parse(automorphism_report_json(b, brace_automorphisms(b)));
  CHECK(a["count"] == 2);
  CHECK(a["automorphisms"][0] == json::array({0, 1, 2, 3}));
  CHECK(a["automorphisms"][1] == json::array({0, 3, 2, 1}));

  json yes = json::parse(isomorphism_report_json(are_isomorphic(b, b)));
  CHECK(yes["isomorphic"] == true);
  CHECK(yes["mapping"].size() == 4);

  json no = json::parse(isomorphism_report_json(
      are_isomorphic(b, trivial_brace(make_cyclic(4)))));
  CHECK(no["isomorphic"] == false);
  CHECK(no["mapping"].is_null());
}

TEST_CASE("semidirect and enumeration reports") {
  SkewBrace b1 = trivial_brace(make_klein());
  SkewBrace b2 = trivial_brace(make_cyclic(2));
  SemidirectSpec spec{b1, b2, {{0, 1, 2, 3}, {0, 2, 1, 3}}};
  json p = json::parse(semidirect_report_json(semidirect_product(spec)));
  CHECK(p["order"] == 8);
  CHECK(p["brace"]["add"].size() == 8);
  CHECK(p["left_factor"] == json::array({0, 1, 2, 3}));
  CHECK(p["right_factor"] == json::array({0, 4}));

  EnumerationResult r = enumerate_braces(4);
  json e = json::parse(enumeration_report_json(r));
  CHECK(e["order"] == 4);
  CHECK(e["complete"] == true);
  CHECK(e["count"] == 4);
  CHECK(e["raw_count"] == 6);
  CHECK(e["classes"].size() == 4);
  CHECK(e["classes"][0].contains("add"));
  CHECK(e["classes"][0]["fingerprint"].get<std::string>().size() == 16);

  json lean = json::parse(enumeration_report_json(r, false));
  CHECK_FALSE(lean["classes"][0].contains("add"));
  CHECK(enumeration_report_json(r) == enumeration_report_json(r));
}
