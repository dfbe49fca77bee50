#ifndef WALLCUBE_CORE_HPP
#define WALLCUBE_CORE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace wallcube {

using Vertex = std::size_t;

// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;

// Stable process exit codes shared by the library errors and the CLI.
enum class ExitCode : int {
  ok = 0,
  parse = 1,
  validation = 2,
  cap = 3,
  theorem = 4,
  oracle = 5,
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual ExitCode exit_code() const noexcept = 0;
};

// Malformed input document or out-of-range identifiers.
class InputError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const noexcept override { return ExitCode::parse; }
};

// The model violates a structural requirement (not a cut set, empty halfspace, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const noexcept override { return ExitCode::validation; }
};

class CapExceeded : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const noexcept override { return ExitCode::cap; }
};

// A lemma or theorem asserted on the instance did not hold.
class TheoremViolation : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const noexcept override { return ExitCode::theorem; }
};

// Two independent computations of the same object disagree.
class OracleMismatch : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const noexcept override { return ExitCode::oracle; }
};

enum class Side : std::int8_t { plus = 1, minus = -1 };

constexpr Side opposite(Side s) noexcept { return s == Side::plus ? Side::minus : Side::plus; }
constexpr char side_char(Side s) noexcept { return s == Side::plus ? '+' : '-'; }

inline VertexSet make_set(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline bool contains(const VertexSet& s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

inline bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool intersects(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

inline VertexSet all_vertices(std::size_t n) {
  VertexSet s(n);
  std::iota(s.begin(), s.end(), Vertex{0});
  return s;
}

// Disjoint-set forest with path halving; deterministic representatives are
// not promised, only the partition.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

struct VectorHash {
  template <class T>
  std::size_t operator()(const std::vector<T>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (const auto& x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace wallcube

#endif  // WALLCUBE_CORE_HPP
