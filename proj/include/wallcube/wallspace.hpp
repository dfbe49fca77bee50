#ifndef WALLCUBE_WALLSPACE_HPP
#define WALLCUBE_WALLSPACE_HPP

#include <wallcube/divisions.hpp>

#include <array>
#include <string>
#include <vector>

namespace wallcube {

// Unordered triple of distinct vertices, stored ascending.
struct Triple {
  std::array<Vertex, 3> v{};

  Triple() = default;
  Triple(Vertex a, Vertex b, Vertex c) : v{a, b, c} {
    std::sort(v.begin(), v.end());
    if (v[0] == v[1] || v[1] == v[2]) throw ValidationError("triple points must be distinct");
  }

  Triple image(const Permutation& g) const { return Triple(g(v[0]), g(v[1]), g(v[2])); }
  auto operator<=>(const Triple&) const = default;
};

// A signed wall: the halfspace W_D^side of wall index `wall`.
struct Halfspace {
  std::size_t wall = 0;
  Side side = Side::plus;

  Halfspace complement() const { return {wall, opposite(side)}; }
  auto operator<=>(const Halfspace&) const = default;
};

// Counts of off-the-wall points in the four regions M_1^e n M_2^d.
struct RegionCounts {
  std::size_t pp = 0, pm = 0, mp = 0, mm = 0;

  std::size_t at(Side s1, Side s2) const {
    if (s1 == Side::plus) return s2 == Side::plus ? pp : pm;
    return s2 == Side::plus ? mp : mm;
  }
  std::size_t total() const { return pp + pm + mp + mm; }
};

/**
 * Walls on triples of off-the-wall points, one per division, with the
 * majority-rule halfspaces. Halfspaces are never materialized; every query
 * reduces to counts of off-the-wall points per side.
 */
class Wallspace {
 public:
  /// Problems that prevent the family from defining a wallspace; empty when fine.
  static std::vector<std::string> diagnose(const SpaceGraph& g, const std::vector<Division>& divisions) {
    std::vector<std::string> out;
    VertexSet off = off_the_wall(g, divisions);
    if (off.size() < 3) {
      out.push_back("fewer than 3 off-the-wall points (" + std::to_string(off.size()) + ")");
      return out;
    }
    for (std::size_t w = 0; w < divisions.size(); ++w) {
      const auto& d = divisions[w];
      for (Side s : {Side::plus, Side::minus}) {
        if (set_intersection(d.side(s), off).size() < 2) {
          out.push_back("empty halfspace: wall " + std::to_string(w) + " cut " + g.format(d.cut_set) + " side " +
                        g.format(d.side(s)) + " holds fewer than 2 off-the-wall points");
        }
      }
    }
    if (!out.empty()) return out;
    for (std::size_t a = 0; a < divisions.size(); ++a) {
      for (std::size_t b = a + 1; b < divisions.size(); ++b) {
        VertexSet pa = set_intersection(divisions[a].side_plus, off);
        VertexSet pb = set_intersection(divisions[b].side_plus, off);
        VertexSet mb = set_intersection(divisions[b].side_minus, off);
        if (pa == pb || pa == mb) {
          out.push_back("duplicate wall: walls " + std::to_string(a) + " (cut " + g.format(divisions[a].cut_set) +
                        ") and " + std::to_string(b) + " (cut " + g.format(divisions[b].cut_set) +
                        ") split the off-the-wall points identically");
        }
      }
    }
    return out;
  }

  static VertexSet off_the_wall(const SpaceGraph& g, const std::vector<Division>& divisions) {
    std::vector<char> on(g.size(), 0);
    for (const auto& d : divisions) {
      for (Vertex v : d.cut_set) on.at(v) = 1;
    }
    VertexSet out;
    for (Vertex v = 0; v < g.size(); ++v) {
      if (!on[v]) out.push_back(v);
    }
    return out;
  }

  Wallspace(const SpaceGraph& g, std::vector<Division> divisions) : divisions_(std::move(divisions)) {
    auto problems = diagnose(g, divisions_);
    if (!problems.empty()) {
      std::string msg = "invalid wallspace:";
      for (const auto& p : problems) msg += "\n  " + p;
      throw ValidationError(msg);
    }
    off_wall_ = off_the_wall(g, divisions_);
    side_.assign(divisions_.size(), std::vector<std::int8_t>(g.size(), 0));
    for (std::size_t w = 0; w < divisions_.size(); ++w) {
      for (Vertex v : divisions_[w].side_plus) side_[w][v] = 1;
      for (Vertex v : divisions_[w].side_minus) side_[w][v] = -1;
    }
    std::vector<char> off(g.size(), 0);
    for (Vertex v : off_wall_) off[v] = 1;
    region_.assign(divisions_.size(), std::vector<RegionCounts>(divisions_.size()));
    for (std::size_t a = 0; a < divisions_.size(); ++a) {
      for (std::size_t b = 0; b < divisions_.size(); ++b) {
        RegionCounts r;
        for (Vertex v : off_wall_) {
          bool pa = side_[a][v] > 0;
          bool pb = side_[b][v] > 0;
          (pa ? (pb ? r.pp : r.pm) : (pb ? r.mp : r.mm))++;
        }
        region_[a][b] = r;
      }
    }
    vertex_count_ = g.size();
  }

  std::size_t wall_count() const noexcept { return divisions_.size(); }
  const std::vector<Division>& divisions() const noexcept { return divisions_; }
  const Division& division(std::size_t w) const { return divisions_.at(w); }
  const VertexSet& off_wall() const noexcept { return off_wall_; }
  std::size_t vertex_count() const noexcept { return vertex_count_; }

  bool is_off_wall(Vertex v) const { return contains(off_wall_, v); }

  Side side_of_point(std::size_t wall, Vertex v) const {
    if (!is_off_wall(v)) throw ValidationError("not off-the-wall: vertex " + std::to_string(v));
    return side_.at(wall)[v] > 0 ? Side::plus : Side::minus;
  }

  /// Majority rule: plus iff at least two of the three points lie in M_D^+.
  Side side_of_triple(std::size_t wall, const Triple& t) const {
    int plus = 0;
    for (Vertex v : t.v) plus += side_of_point(wall, v) == Side::plus ? 1 : 0;
    return plus >= 2 ? Side::plus : Side::minus;
  }

  // Number of walls with t1 and t2 on opposite sides.
  std::size_t finiteness_condition(const Triple& t1, const Triple& t2) const {
    std::size_t n = 0;
    for (std::size_t w = 0; w < wall_count(); ++w) {
      if (side_of_triple(w, t1) != side_of_triple(w, t2)) ++n;
    }
    return n;
  }

  const RegionCounts& regions(std::size_t w1, std::size_t w2) const { return region_.at(w1).at(w2); }

  /**
   * W_1^s1 n W_2^s2 is nonempty iff some triple has two points in M_1^s1 and
   * two in M_2^s2: either two points in the shared region (plus any third),
   * or one point in the shared region and one in each of the two mixed ones.
   */
  bool corner_nonempty(Halfspace h1, Halfspace h2) const {
    if (h1.wall == h2.wall) return h1.side == h2.side && !halfspace_empty(h1);
    const RegionCounts& r = regions(h1.wall, h2.wall);
    std::size_t shared = r.at(h1.side, h2.side);
    std::size_t only1 = r.at(h1.side, opposite(h2.side));
    std::size_t only2 = r.at(opposite(h1.side), h2.side);
    return (shared >= 2 && r.total() >= 3) || (shared >= 1 && only1 >= 1 && only2 >= 1);
  }

  bool halfspace_empty(Halfspace h) const {
    return set_intersection(divisions_.at(h.wall).side(h.side), off_wall_).size() < 2;
  }

  bool transverse(std::size_t w1, std::size_t w2) const {
    if (w1 == w2) throw std::invalid_argument("transverse: a wall is not compared with itself");
    for (Side a : {Side::plus, Side::minus}) {
      for (Side b : {Side::plus, Side::minus}) {
        if (!corner_nonempty({w1, a}, {w2, b})) return false;
      }
    }
    return true;
  }

  // h1 is contained in h2 iff h1 misses the complement of h2.
  bool halfspace_subset(Halfspace h1, Halfspace h2) const { return !corner_nonempty(h1, h2.complement()); }

 private:
  std::vector<Division> divisions_;
  VertexSet off_wall_;
  std::vector<std::vector<std::int8_t>> side_;
  std::vector<std::vector<RegionCounts>> region_;
  std::size_t vertex_count_ = 0;
};

/**
 * Brute-force reference answers obtained by polling every triple of
 * off-the-wall points directly against the division sides.
 */
namespace triple_scan {

inline Side majority(const Division& d, const Triple& t) {
  int plus = 0;
  for (Vertex v : t.v) plus += contains(d.side_plus, v) ? 1 : 0;
  return plus >= 2 ? Side::plus : Side::minus;
}

template <class F>
void for_each_triple(const VertexSet& points, F&& f) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      for (std::size_t k = j + 1; k < points.size(); ++k) {
        if (!f(Triple(points[i], points[j], points[k]))) return;
      }
    }
  }
}

inline bool corner_nonempty(const Wallspace& ws, Halfspace h1, Halfspace h2) {
  bool found = false;
  for_each_triple(ws.off_wall(), [&](const Triple& t) {
    if (majority(ws.division(h1.wall), t) == h1.side && majority(ws.division(h2.wall), t) == h2.side) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

inline bool transverse(const Wallspace& ws, std::size_t w1, std::size_t w2) {
  for (Side a : {Side::plus, Side::minus}) {
    for (Side b : {Side::plus, Side::minus}) {
      if (!corner_nonempty(ws, {w1, a}, {w2, b})) return false;
    }
  }
  return true;
}

inline bool halfspace_subset(const Wallspace& ws, Halfspace h1, Halfspace h2) {
  return !corner_nonempty(ws, h1, h2.complement());
}

}  // namespace triple_scan

using TransversalityMatrix = std::vector<std::vector<bool>>;

inline TransversalityMatrix transversality_matrix(const Wallspace& ws) {
  const std::size_t m = ws.wall_count();
  TransversalityMatrix t(m, std::vector<bool>(m, false));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) t[a][b] = t[b][a] = ws.transverse(a, b);
  }
  return t;
}

struct Clique {
  std::size_t size = 0;
  std::vector<std::size_t> witness;
};

/// Exact maximum clique of the crossing graph (Bron-Kerbosch with pivoting).
inline Clique max_transverse_clique(const TransversalityMatrix& t) {
  Clique best;
  const std::size_t m = t.size();
  std::vector<std::size_t> r;
  auto rec = [&](auto&& self, std::vector<std::size_t> p, std::vector<std::size_t> x) -> void {
    if (p.empty() && x.empty()) {
      if (r.size() > best.size) {
        best.size = r.size();
        best.witness = r;
        std::sort(best.witness.begin(), best.witness.end());
      }
      return;
    }
    if (r.size() + p.size() <= best.size) return;
    std::size_t pivot = p.empty() ? x.front() : p.front();
    std::size_t pivot_deg = 0;
    for (auto* set : {&p, &x}) {
      for (std::size_t u : *set) {
        std::size_t d = 0;
        for (std::size_t v : p) d += t[u][v] ? 1 : 0;
        if (d > pivot_deg) {
          pivot_deg = d;
          pivot = u;
        }
      }
    }
    std::vector<std::size_t> candidates;
    for (std::size_t v : p) {
      if (!t[pivot][v]) candidates.push_back(v);
    }
    for (std::size_t v : candidates) {
      std::vector<std::size_t> np, nx;
      for (std::size_t u : p) {
        if (t[v][u]) np.push_back(u);
      }
      for (std::size_t u : x) {
        if (t[v][u]) nx.push_back(u);
      }
      r.push_back(v);
      self(self, np, nx);
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  };
  std::vector<std::size_t> all(m);
  std::iota(all.begin(), all.end(), std::size_t{0});
  if (m > 0) rec(rec, all, {});
  return best;
}

inline Clique max_transverse_clique(const Wallspace& ws) { return max_transverse_clique(transversality_matrix(ws)); }

}  // namespace wallcube

#endif  // WALLCUBE_WALLSPACE_HPP
