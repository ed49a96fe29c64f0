#ifndef HILZETA_PARALLEL_HPP
#define HILZETA_PARALLEL_HPP

// Deterministic fan-out: work is split into contiguous chunks and results are
// concatenated in chunk order, never in completion order.

#include <algorithm>
#include <cstdlib>
#include <future>
#include <string>
#include <thread>
#include <vector>

namespace hilzeta {

/// Worker count: `requested` if nonzero, else hardware concurrency; capped by HILZETA_THREADS.
inline unsigned worker_count(unsigned requested = 0) {
  unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("HILZETA_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, n);
}

/// fn(begin, end) -> std::vector<T> over [0, n); results joined in index order.
template <typename T, typename Fn>
std::vector<T> parallel_chunks(std::size_t n, unsigned threads, Fn&& fn) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(threads), std::max<std::size_t>(n, 1)));
  if (workers <= 1) return fn(std::size_t{0}, n);
  std::vector<std::future<std::vector<T>>> parts;
  const std::size_t step = (n + workers - 1) / workers;
  for (std::size_t begin = 0; begin < n; begin += step) {
    const std::size_t end = std::min(n, begin + step);
    parts.push_back(std::async(std::launch::async, [&fn, begin, end] { return fn(begin, end); }));
  }
  std::vector<T> out;
  for (auto& p : parts) {
    auto chunk = p.get();
    out.insert(out.end(), std::make_move_iterator(chunk.begin()), std::make_move_iterator(chunk.end()));
  }
  return out;
}

/// Applies fn to every input element; output order follows input order.
template <typename In, typename Fn>
auto parallel_map(const std::vector<In>& in, unsigned threads, Fn&& fn) {
  using Out = decltype(fn(in.front()));
  return parallel_chunks<Out>(in.size(), threads, [&](std::size_t b, std::size_t e) {
    std::vector<Out> out;
    out.reserve(e - b);
    for (std::size_t i = b; i < e; ++i) out.push_back(fn(in[i]));
    return out;
  });
}

}  // namespace hilzeta

#endif  // HILZETA_PARALLEL_HPP
