#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace tricoh::detail {

/// Splits [0, n) into `shards` contiguous ranges and runs
/// `fn(shard, begin, end, partial)` on one thread per shard. Partials come
/// back in shard order; callers merge with associative operations only.
template <class Partial, class Fn>
std::vector<Partial> run_sharded(std::uint64_t n, unsigned shards, Fn&& fn) {
  shards = std::max(1u, shards);
  std::vector<Partial> partials(shards);
  auto range = [&](unsigned s) {
    const std::uint64_t begin = n * s / shards;
    const std::uint64_t end = n * (s + 1) / shards;
    fn(s, begin, end, partials[s]);
  };
  if (shards == 1) {
    range(0);
    return partials;
  }
  std::vector<std::jthread> workers;
  workers.reserve(shards);
  for (unsigned s = 0; s < shards; ++s) workers.emplace_back(range, s);
  workers.clear();
  return partials;
}

}  // namespace tricoh::detail
