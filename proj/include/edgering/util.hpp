#ifndef EDGERING_UTIL_HPP
#define EDGERING_UTIL_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace edgering {

using Int = std::int64_t;

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or out-of-contract input (bad graph, bad record, bad flag).
class InvalidInput : public Error {
public:
  using Error::Error;
};

/// A configurable resource guard tripped (lattice size, face count, ...).
class GuardLimit : public Error {
public:
  using Error::Error;
};

/// Exact integer arithmetic left the representable range.
class OverflowError : public Error {
public:
  using Error::Error;
};

Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);

/// Runs fn(0..n-1) on up to `jobs` threads. Callers keep determinism by
/// writing results into per-index slots and merging in index order.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

/// Job count from EDGERING_JOBS, else 1.
int default_jobs();

/// FNV-1a over the elements; usable for vector<Int> and vector<int>.
template <typename V>
struct VecHash {
  std::size_t operator()(const V& v) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace edgering

#endif
