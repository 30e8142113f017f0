#include <doctest.h>

#include <functional>

#include "gr/constructions.hpp"
#include "gr/error.hpp"
#include "gr/partition.hpp"
#include "oracles.hpp"

using namespace gr;

namespace {

// Fewest parts over every set partition of the vertices.
int naive_min_parts(const EdgeColoring& c) {
  const int n = c.n();
  std::vector<int> block(n, 0);
  int best = n + 1;
  std::function<void(int, int)> rec = [&](int v, int used) {
    if (used >= best) return;
    if (v == n) {
      if (used < 2) return;
      std::vector<std::vector<int>> parts(used);
      for (int u = 0; u < n; ++u) parts[block[u]].push_back(u);
      if (oracle::parts_valid(c, parts)) best = used;
      return;
    }
    for (int b = 0; b <= used && b < n; ++b) {
      block[v] = b;
      rec(v + 1, std::max(used, b + 1));
    }
  };
  rec(0, 0);
  return best;
}

}  // namespace

TEST_SUITE("partition") {
  TEST_CASE("pentagon is prime with five singleton parts") {
    GallaiPartition p = gallai_partition(base_pentagon(1, 2));
    CHECK(p.ell() == 5);
    CHECK(p.quotient == base_pentagon(1, 2));
  }

  TEST_CASE("a disconnected color class gives two parts") {
    EdgeColoring c = join(EdgeColoring::monochromatic(3, 1, 3), base_pentagon(1, 2), 3);
    GallaiPartition p = gallai_partition(c);
    CHECK(p.ell() == 2);
    CHECK(oracle::parts_valid(c, p.parts));
  }

  TEST_CASE("planted blow-up recovers its parts") {
    std::vector<EdgeColoring> parts(5, EdgeColoring::monochromatic(3, 3));
    EdgeColoring c = blowup(base_pentagon(1, 2), parts);
    GallaiPartition p = gallai_partition(c);
    CHECK(p.ell() == 5);
    CHECK(p.parts[1] == std::vector<int>{3, 4, 5});
    CHECK(reduced_coloring(c, p) == p.quotient);
  }

  TEST_CASE("random substitution colorings yield valid minimum partitions") {
    oracle::Rng rng(1234);
    for (int trial = 0; trial < 150; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 7);
      EdgeColoring c = oracle::random_gallai(rng, n, 1 + static_cast<int>(rng() % 4));
      GallaiPartition p = gallai_partition(c);
      REQUIRE(oracle::parts_valid(c, p.parts));
      CHECK(p.ell() == naive_min_parts(c));
      CHECK(reduced_coloring(c, p) == p.quotient);
    }
  }

  TEST_CASE("rainbow input raises with a witness") {
    ColoringBuilder b(4, 3);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) b.set(i, j, 1);
    b.set(1, 2, 2);
    b.set(1, 3, 3);
    EdgeColoring c = std::move(b).build();
    try {
      gallai_partition(c);
      FAIL("expected RainbowTriangle");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::RainbowTriangle);
      REQUIRE(e.detail().size() == 3);
      CHECK(oracle::is_rainbow(c, e.detail()[0], e.detail()[1], e.detail()[2]));
    }
  }

  TEST_CASE("too small") {
    CHECK_THROWS_AS(gallai_partition(EdgeColoring::monochromatic(1, 1)), Error);
    GallaiPartition p = gallai_partition(EdgeColoring::monochromatic(2, 1));
    CHECK(p.ell() == 2);
  }

  TEST_CASE("reduced_coloring rejects invalid partitions") {
    EdgeColoring c = base_pentagon(1, 2);
    auto code = [&](std::vector<std::vector<int>> parts) {
      GallaiPartition p;
      p.parts = std::move(parts);
      try {
        reduced_coloring(c, p);
      } catch (const Error& e) {
        return e.code();
      }
      return ErrorCode::InvalidArgument;
    };
    CHECK(code({{0, 1}, {2, 3, 4}}) == ErrorCode::InvalidPartition);
    CHECK(code({{0, 1, 2, 3}}) == ErrorCode::InvalidPartition);
    CHECK(code({{0}, {1}, {2}, {3}}) == ErrorCode::InvalidPartition);
    CHECK(code({{0, 1}, {1}, {2}, {3}, {4}}) == ErrorCode::InvalidPartition);
  }
}
