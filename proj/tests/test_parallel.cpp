#include <doctest.h>

#include <numeric>

#include "realenum/parallel.hpp"

using namespace realenum;

TEST_CASE("parallel sums match sequential sums") {
  std::vector<long long> items(999);
  std::iota(items.begin(), items.end(), 1);
  auto term = [](long long v) { return Integer(v) * Integer(v) * Integer::pow2(40); };
  Integer sequential(0);
  for (long long v : items) sequential += term(v);
  for (unsigned workers : {1u, 2u, 3u, 7u, 16u}) {
    CHECK(parallel_integer_sum(items, term, workers) == sequential);
  }
  // default worker count
  CHECK(parallel_integer_sum(items, term) == sequential);
}

TEST_CASE("parallel sum edge cases") {
  std::vector<int> none;
  CHECK(parallel_integer_sum(none, [](int) { return Integer(1); }, 4).is_zero());
  std::vector<int> few{1, 2, 3};
  CHECK(parallel_integer_sum(few, [](int v) { return Integer(v); }, 64) == Integer(6));
}
