#include <doctest.h>

#include "gr/error.hpp"
#include "gr/pattern.hpp"
#include "oracles.hpp"

using namespace gr;

TEST_SUITE("pattern") {
  TEST_CASE("catalog shapes") {
    const auto ids = catalog_ids();
    REQUIRE(ids.size() == 12);
    for (PatternId id : ids) {
      Pattern p = resolve(id);
      CHECK(p.m == 5);
      CHECK(chromatic_number(p) == 3);
      for (auto [a, b] : p.edges) CHECK(a < b);
    }
    CHECK(resolve(PatternId::h(10)).edges.size() == 4);
    CHECK(resolve(PatternId::h(8)).edges.size() == 8);
  }

  TEST_CASE("catalog members are pairwise distinct up to isomorphism") {
    const auto ids = catalog_ids();
    for (std::size_t i = 0; i < ids.size(); ++i)
      for (std::size_t j = i + 1; j < ids.size(); ++j)
        CHECK_MESSAGE(!are_isomorphic(resolve(ids[i]), resolve(ids[j])),
                      ids[i].to_string() << " vs " << ids[j].to_string());
  }

  TEST_CASE("h12 is the kipas on four rim vertices and kipas(2) is a triangle") {
    CHECK(are_isomorphic(resolve(PatternId::h(12)), resolve(PatternId::kipas(4))));
    CHECK(are_isomorphic(resolve(PatternId::kipas(2)), resolve(PatternId::complete(3))));
    CHECK_FALSE(are_isomorphic(resolve(PatternId::h(11)), resolve(PatternId::kipas(4))));
  }

  TEST_CASE("kipas has hub 0 and a rim path") {
    Pattern k = resolve(PatternId::kipas(4));
    CHECK(k.m == 5);
    CHECK(k.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
  }

  TEST_CASE("family sizes and automorphism counts") {
    CHECK(oracle::automorphisms(resolve(PatternId::cycle(5))) == 10);
    CHECK(oracle::automorphisms(resolve(PatternId::path(3))) == 2);
    CHECK(oracle::automorphisms(resolve(PatternId::star(3))) == 6);
    CHECK(oracle::automorphisms(resolve(PatternId::kipas(4))) == 2);
    CHECK(resolve(PatternId::path(1)).edges.empty());
    CHECK(resolve(PatternId::star(2)).m == 3);
  }

  TEST_CASE("chromatic numbers of the standard families") {
    CHECK(chromatic_number(resolve(PatternId::cycle(6))) == 2);
    CHECK(chromatic_number(resolve(PatternId::cycle(7))) == 3);
    CHECK(chromatic_number(resolve(PatternId::complete(6))) == 6);
    CHECK(chromatic_number(resolve(PatternId::path(1))) == 1);
    CHECK(chromatic_number(resolve(PatternId::kipas(5))) == 3);
  }

  TEST_CASE("text forms round-trip") {
    for (const char* text : {"h1", "h12", "kipas(3)", "path(4)", "star(2)", "cycle(5)", "complete(4)"})
      CHECK(PatternId::parse(text).to_string() == text);
    CHECK(PatternId::parse("p3") == PatternId::path(3));
    CHECK(PatternId::parse("k3") == PatternId::complete(3));
  }

  TEST_CASE("bad ids") {
    auto code = [](const char* text) {
      try {
        PatternId::parse(text);
      } catch (const Error& e) {
        return e.code();
      }
      return ErrorCode::InvalidArgument;
    };
    CHECK(code("h13") == ErrorCode::ParameterOutOfRange);
    CHECK(code("kipas(1)") == ErrorCode::ParameterOutOfRange);
    CHECK(code("cycle(2)") == ErrorCode::ParameterOutOfRange);
    CHECK(code("wheel(4)") == ErrorCode::UnknownPattern);
    CHECK(code("kipas(") == ErrorCode::UnknownPattern);
  }

  TEST_CASE("make_pattern normalizes and rejects loops") {
    Pattern p = make_pattern(3, {{2, 0}, {1, 0}}, "v");
    CHECK(p.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
    CHECK_THROWS_AS(make_pattern(3, {{1, 1}}, "loop"), Error);
    CHECK_THROWS_AS(make_pattern(3, {{0, 3}}, "out"), Error);
  }
}
