#include "immaculate/serialize.hpp"

#include <doctest.h>

#include "immaculate/analysis.hpp"
#include "immaculate/composition.hpp"

using namespace immaculate;

namespace {

Composition comp(std::vector<int> parts) { return Composition(std::move(parts)); }

}  // namespace

TEST_CASE("rational strings") {
  CHECK(rational_to_string(Rational(5)) == "5");
  CHECK(rational_to_string(Rational(-3, 6)) == "-1/2");
  CHECK(rational_to_string(Rational(0)) == "0");
}

TEST_CASE("expansion JSON uses graded-lex keys and string coefficients") {
  const auto x = dual_immaculate_via_kostka(comp({1, 2}));
  CHECK(expansion_json(x).dump() ==
        R"({"algebra":"QSym","basis":"M","degree":3,"coeffs":{"[1,1,1]":"1","[1,2]":"1"}})");

  const auto h = immaculate_in_h(comp({1, 1}));
  CHECK(expansion_json(h).dump() ==
        R"({"algebra":"NSym","basis":"H","degree":2,"coeffs":{"[1,1]":"1","[2]":"-1"}})");

  CHECK(expansion_json_compact(characteristic(quotient_module(comp({3})))).dump() ==
        R"({"F":{"[3]":"1"}})");
}

TEST_CASE("tableau JSON is the row array") {
  CHECK(tableau_json(ImmaculateTableau({{1, 1, 2}, {2, 3}})).dump() ==
        "[[1,1,2],[2,3]]");
  CHECK(tableau_json(ImmaculateTableau{}).dump() == "[]");
}

TEST_CASE("module JSON dump") {
  const auto v = quotient_module(comp({2, 1}));
  CHECK(module_json(v).dump() ==
        R"({"label":"V","alpha":"[2,1]","dim":2,"generators":)"
        R"({"1":[{"fixed":true},{"zero":true}],"2":[{"to":1},{"fixed":true}]}})");
  const auto m = word_module(comp({1, 1}));
  CHECK(module_json(m).dump() ==
        R"({"label":"M","alpha":"[1,1]","dim":2,"generators":{"1":[{"to":1},{"fixed":true}]}})");
}

TEST_CASE("DOT export") {
  const std::string dot = module_dot(quotient_module(comp({2, 1})));
  CHECK(dot ==
        "digraph module {\n"
        "  rankdir=TB;\n"
        "  \"112\";\n"
        "  \"121\";\n"
        "  \"0\";\n"
        "  \"112\" -> \"121\" [label=\"2\"];\n"
        "  \"121\" -> \"0\" [label=\"1\"];\n"
        "}\n");

  // No zero sink when no image is zero.
  const std::string word_dot = module_dot(word_module(comp({1, 1})));
  CHECK(word_dot.find("\"0\"") == std::string::npos);
  CHECK(word_dot.find("\"12\" -> \"21\" [label=\"1\"]") != std::string::npos);
}

TEST_CASE("certificate JSON replays deterministically") {
  const auto cert = indecomposability_certificate(comp({2, 2}));
  const std::string once = certificate_json(cert).dump();
  const std::string twice = certificate_json(indecomposability_certificate(comp({2, 2}))).dump();
  CHECK(once == twice);
  CHECK(once ==
        R"({"alpha":"[2,2]","dim":3,"commutant_dim":1,)"
        R"("cyclic":{"seed":0,"complete":true,"witnesses":{"0":[],"1":[2],"2":[3,2]}},)"
        R"("separation":{"1":1,"2":1},"valid":true})");
}

TEST_CASE("identical module builds produce byte-identical dumps") {
  const auto a = module_json(quotient_module(comp({2, 2, 3}))).dump();
  const auto b = module_json(quotient_module(comp({2, 2, 3}))).dump();
  CHECK(a == b);
  CHECK(module_dot(word_module(comp({2, 1}))) == module_dot(word_module(comp({2, 1}))));
}
