#include <doctest.h>

#include <sstream>

#include "gencover/io.hpp"

using namespace gencover;

namespace {

const std::string data = TEST_DATA_DIR;

Errc parse_error_code(const std::string& text) {
  std::istringstream in(text);
  try {
    parse_code(in);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("parse succeeded: " << text);
  return Errc::DomainError;
}

}  // namespace

TEST_CASE("code files") {
  const auto h = read_code_file(data + "/hamming7.code");
  CHECK(h.same_code(hamming_code(3, 2)));
  CHECK(read_code_file(data + "/shortened6.code").same_code(shorten(hamming_code(3, 2), 6)));

  std::ostringstream out;
  write_code(out, h);
  std::istringstream back(out.str());
  CHECK(parse_code(back).same_code(h));

  std::istringstream crlf("q 3\r\nn 2\r\nk 1\r\nG\r\n1 2\r\n");
  CHECK(parse_code(crlf).n() == 2);
  std::istringstream zero("q 2\nn 3\nk 0\nG\n");
  CHECK(parse_code(zero).degenerate());
  std::istringstream dup("q 2\nn 3\nk 2\nG\n1 0 1\n1 0 1\n");
  const auto d = parse_code(dup);
  CHECK(d.k() == 1);
  CHECK(d.rank_dropped());
}

TEST_CASE("malformed code files") {
  CHECK(parse_error_code("q 4\nn 3\nk 1\nG\n1 1 1\n") == Errc::NonPrimeCharacteristic);
  CHECK(parse_error_code("q 2\nn 3\nk 1\nG\n1 2 1\n") == Errc::ParseError);
  CHECK(parse_error_code("q 2\nn 3\nk 1\nG\n1 1\n") == Errc::ParseError);
  CHECK(parse_error_code("q 2\nn 3\nk 2\nG\n1 1 1\n") == Errc::ParseError);
  CHECK(parse_error_code("q 2\nk 1\nn 3\nG\n1 1 1\n") == Errc::ParseError);
  CHECK(parse_error_code("q 2\nn 3\nk 1\nH\n1 1 1\n") == Errc::ParseError);
  CHECK(parse_error_code("q 2\nn 3\nk 1\nG\n1 1 1\n1 1 1\n") == Errc::ParseError);
  CHECK(parse_error_code("q 2\nn 3\nk 4\nG\n") == Errc::ParseError);
  CHECK(parse_error_code("q two\n") == Errc::ParseError);
  CHECK(parse_error_code("") == Errc::ParseError);
  CHECK_THROWS_AS(read_code_file(data + "/missing.code"), Error);
}

TEST_CASE("syndrome files") {
  const auto s = read_syndrome_file(data + "/pair.syn", 3, 2);
  CHECK(s == std::vector<Vec>{{1, 0, 0}, {0, 1, 0}});
  std::istringstream bad("1 0\n");
  CHECK_THROWS_AS(parse_syndromes(bad, 3, 2), Error);
  std::istringstream range("1 0 3\n");
  CHECK_THROWS_AS(parse_syndromes(range, 3, 2), Error);
  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(parse_syndromes(empty, 3, 2), Error);
}

TEST_CASE("JSON round trips") {
  const auto h = hamming_code(3, 2);
  for (Method m : {Method::Lifted, Method::SpanCover, Method::BallCover}) {
    const auto report = radii_hierarchy(h, 3, m);
    const auto j = to_json(report);
    CHECK(radii_report_from_json(nlohmann::json::parse(j.dump())) == report);
  }
  const auto j = to_json(radii_hierarchy(h, 2, Method::Lifted));
  CHECK(j["entries"][1]["value"] == 2);
  CHECK(j["method"] == "lifted");

  const std::vector<Vec> batch{{1, 0, 1}, {0, 0, 0}, {1, 1, 1}};
  for (const auto& plan : {plan_exact(h.parity_check(), batch), plan_greedy(h.parity_check(), batch)}) {
    const auto pj = to_json(plan);
    const auto back = batch_plan_from_json(nlohmann::json::parse(pj.dump()), h.field());
    CHECK(back == plan);
    CHECK(verify_plan(h.parity_check(), batch, back));
  }
  CHECK_THROWS_AS(radii_report_from_json(nlohmann::json::parse("{\"n\": 1}")), Error);
  CHECK_THROWS_AS(batch_plan_from_json(nlohmann::json::parse("{\"method\": \"fast\"}"), h.field()), Error);
}
