#ifndef REALENUM_PARALLEL_HPP
#define REALENUM_PARALLEL_HPP

#include <thread>
#include <vector>

#include "realenum/integer.hpp"

namespace realenum {

// Fan out a pure per-item term over a worker pool and merge by exact
// addition.  workers = 0 picks the hardware concurrency; small batches run
// inline.  Each worker owns one accumulator slot, so no locking is needed.
template <typename Item, typename Fn>
Integer parallel_integer_sum(const std::vector<Item>& items, const Fn& term,
                             unsigned workers = 0) {
  if (workers == 0) workers = std::thread::hardware_concurrency();
  if (workers > items.size()) workers = static_cast<unsigned>(items.size());
  if (workers <= 1 || items.size() < 16) {
    Integer total(0);
    for (const Item& item : items) total += term(item);
    return total;
  }
  std::vector<Integer> partial(workers, Integer(0));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < items.size(); i += workers) partial[w] += term(items[i]);
    });
  }
  for (std::thread& t : pool) t.join();
  Integer total(0);
  for (const Integer& p : partial) total += p;
  return total;
}

}  // namespace realenum

#endif  // REALENUM_PARALLEL_HPP
