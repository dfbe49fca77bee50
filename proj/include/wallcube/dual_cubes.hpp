#ifndef WALLCUBE_DUAL_CUBES_HPP
#define WALLCUBE_DUAL_CUBES_HPP

#include <wallcube/wallspace.hpp>

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace wallcube {

/// A choice of one halfspace per wall, written as a string of '+'/'-' in wall order.
class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(std::string bits) : bits_(std::move(bits)) {
    for (char c : bits_) {
      if (c != '+' && c != '-') throw std::invalid_argument("orientation characters must be '+' or '-'");
    }
  }
  static Orientation uniform(std::size_t walls, Side s) { return Orientation(std::string(walls, side_char(s))); }

  std::size_t size() const noexcept { return bits_.size(); }
  Side operator[](std::size_t w) const { return bits_.at(w) == '+' ? Side::plus : Side::minus; }
  void set(std::size_t w, Side s) { bits_.at(w) = side_char(s); }
  Orientation flipped(std::size_t w) const {
    Orientation o = *this;
    o.set(w, opposite((*this)[w]));
    return o;
  }
  const std::string& str() const noexcept { return bits_; }
  Halfspace chosen(std::size_t w) const { return {w, (*this)[w]}; }

  auto operator<=>(const Orientation&) const = default;

 private:
  std::string bits_;
};

struct OrientationHash {
  std::size_t operator()(const Orientation& o) const noexcept { return std::hash<std::string>{}(o.str()); }
};

/// How inclusion between halfspaces is decided.
enum class InclusionMethod { region_count, triple_scan };

/**
 * Precomputed inclusion relation between all signed walls. Index of a
 * halfspace is 2*wall + (side == minus).
 */
class HalfspaceOrder {
 public:
  HalfspaceOrder(const Wallspace& ws, InclusionMethod method = InclusionMethod::region_count)
      : walls_(ws.wall_count()), subset_(2 * walls_, std::vector<bool>(2 * walls_, false)) {
    for (std::size_t a = 0; a < 2 * walls_; ++a) {
      for (std::size_t b = 0; b < 2 * walls_; ++b) {
        Halfspace ha = unpack(a), hb = unpack(b);
        subset_[a][b] = method == InclusionMethod::region_count ? ws.halfspace_subset(ha, hb)
                                                                : triple_scan::halfspace_subset(ws, ha, hb);
      }
    }
  }

  std::size_t wall_count() const noexcept { return walls_; }
  bool subset(Halfspace a, Halfspace b) const { return subset_[pack(a)][pack(b)]; }

  static std::size_t pack(Halfspace h) { return 2 * h.wall + (h.side == Side::minus ? 1 : 0); }
  static Halfspace unpack(std::size_t i) { return {i / 2, (i % 2) ? Side::minus : Side::plus}; }

 private:
  std::size_t walls_;
  std::vector<std::vector<bool>> subset_;
};

/// Ultrafilter condition: no chosen halfspace lies inside an unchosen one.
inline bool is_consistent(const HalfspaceOrder& order, const Orientation& o) {
  const std::size_t m = order.wall_count();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a != b && order.subset(o.chosen(a), o.chosen(b).complement())) return false;
    }
  }
  return true;
}

// The chosen halfspace on `w` is minimal: no other chosen halfspace sits inside it.
inline bool is_minimal(const HalfspaceOrder& order, const Orientation& o, std::size_t w) {
  for (std::size_t b = 0; b < order.wall_count(); ++b) {
    if (b != w && order.subset(o.chosen(b), o.chosen(w))) return false;
  }
  return true;
}

inline Orientation principal_ultrafilter(const Wallspace& ws, const Triple& t) {
  Orientation o = Orientation::uniform(ws.wall_count(), Side::plus);
  for (std::size_t w = 0; w < ws.wall_count(); ++w) o.set(w, ws.side_of_triple(w, t));
  return o;
}

struct CubeEdge {
  std::size_t u = 0, v = 0;  // u < v
  std::size_t wall = 0;
  auto operator<=>(const CubeEdge&) const = default;
};

struct Cube {
  std::vector<std::size_t> walls;    // ascending
  std::vector<std::size_t> corners;  // ascending vertex indices
  auto operator<=>(const Cube&) const = default;
};

struct CubeComplex {
  std::size_t wall_count = 0;
  std::vector<Orientation> vertices;  // sorted
  std::vector<CubeEdge> edges;        // sorted
  // cubes[k] holds the k-cubes for k >= 2; cubes[0], cubes[1] stay empty.
  std::vector<std::vector<Cube>> cubes;
  std::size_t dimension = 0;

  std::optional<std::size_t> index_of(const Orientation& o) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), o);
    if (it == vertices.end() || *it != o) return std::nullopt;
    return static_cast<std::size_t>(it - vertices.begin());
  }

  std::optional<std::size_t> edge_index(std::size_t a, std::size_t b) const {
    if (b < a) std::swap(a, b);
    auto it = std::lower_bound(edges.begin(), edges.end(), CubeEdge{a, b, 0},
                               [](const CubeEdge& x, const CubeEdge& y) { return std::tie(x.u, x.v) < std::tie(y.u, y.v); });
    if (it == edges.end() || it->u != a || it->v != b) return std::nullopt;
    return static_cast<std::size_t>(it - edges.begin());
  }

  std::size_t cube_count(std::size_t dim) const { return dim < cubes.size() ? cubes[dim].size() : 0; }
};

inline constexpr std::size_t default_vertex_cap = 100'000;
inline constexpr std::size_t default_oracle_wall_cap = 20;

// Distinct principal ultrafilters, in order of the lexicographically first triple realizing each.
inline std::vector<Orientation> principal_orientations(const Wallspace& ws) {
  std::vector<Orientation> out;
  std::unordered_map<Orientation, bool, OrientationHash> seen;
  triple_scan::for_each_triple(ws.off_wall(), [&](const Triple& t) {
    Orientation o = principal_ultrafilter(ws, t);
    if (seen.emplace(o, true).second) out.push_back(o);
    return true;
  });
  return out;
}

/**
 * Dual cube complex: breadth-first search from every principal ultrafilter,
 * moving across minimal chosen halfspaces, followed by cube filling by
 * dimension. Vertices are renumbered in lexicographic order of their
 * orientation strings.
 */
inline CubeComplex build_complex(const Wallspace& ws, const HalfspaceOrder& order,
                                 std::size_t vertex_cap = default_vertex_cap) {
  const std::size_t m = ws.wall_count();
  std::unordered_map<Orientation, std::size_t, OrientationHash> seen;
  std::vector<Orientation> found;
  std::deque<std::size_t> queue;
  auto visit = [&](const Orientation& o) {
    if (seen.emplace(o, found.size()).second) {
      if (found.size() >= vertex_cap) throw CapExceeded("complex too large (vertex cap " + std::to_string(vertex_cap) + ")");
      found.push_back(o);
      queue.push_back(found.size() - 1);
    }
  };
  for (const auto& o : principal_orientations(ws)) visit(o);
  while (!queue.empty()) {
    Orientation o = found[queue.front()];
    queue.pop_front();
    for (std::size_t w = 0; w < m; ++w) {
      if (!is_minimal(order, o, w)) continue;
      Orientation next = o.flipped(w);
      if (!is_consistent(order, next)) {
        throw TheoremViolation("flipping the minimal wall " + std::to_string(w) + " of " + o.str() +
                               " produced an inconsistent orientation");
      }
      visit(next);
    }
  }

  CubeComplex cx;
  cx.wall_count = m;
  cx.vertices = std::move(found);
  std::sort(cx.vertices.begin(), cx.vertices.end());
  for (std::size_t i = 0; i < cx.vertices.size(); ++i) {
    for (std::size_t w = 0; w < m; ++w) {
      if (!is_minimal(order, cx.vertices[i], w)) continue;
      auto j = cx.index_of(cx.vertices[i].flipped(w));
      if (j && i < *j) cx.edges.push_back({i, *j, w});
    }
  }
  std::sort(cx.edges.begin(), cx.edges.end());
  cx.dimension = cx.edges.empty() ? 0 : 1;
  cx.cubes.assign(2, {});

  // Cube filling: from each corner, grow sets of pairwise transverse minimal
  // walls whose every sub-flip is a vertex.
  std::vector<std::vector<bool>> cross(m, std::vector<bool>(m, false));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) cross[a][b] = cross[b][a] = ws.transverse(a, b);
  }
  std::set<Cube> cubes;
  for (std::size_t i = 0; i < cx.vertices.size(); ++i) {
    const Orientation& base = cx.vertices[i];
    std::vector<std::size_t> flippable;
    for (std::size_t w = 0; w < m; ++w) {
      if (is_minimal(order, base, w)) flippable.push_back(w);
    }
    std::vector<std::size_t> chosen;
    auto corners_of = [&](const std::vector<std::size_t>& walls) -> std::optional<std::vector<std::size_t>> {
      std::vector<std::size_t> corners;
      for (std::size_t mask = 0; mask < (std::size_t{1} << walls.size()); ++mask) {
        Orientation o = base;
        for (std::size_t k = 0; k < walls.size(); ++k) {
          if (mask & (std::size_t{1} << k)) o = o.flipped(walls[k]);
        }
        auto idx = cx.index_of(o);
        if (!idx) return std::nullopt;
        corners.push_back(*idx);
      }
      std::sort(corners.begin(), corners.end());
      return corners;
    };
    auto grow = [&](auto&& self, std::size_t from) -> void {
      for (std::size_t k = from; k < flippable.size(); ++k) {
        std::size_t w = flippable[k];
        bool ok = std::all_of(chosen.begin(), chosen.end(), [&](std::size_t c) { return cross[c][w]; });
        if (!ok) continue;
        chosen.push_back(w);
        auto corners = corners_of(chosen);
        if (corners) {
          cubes.insert({chosen, *corners});
          self(self, k + 1);
        }
        chosen.pop_back();
      }
    };
    grow(grow, 0);
  }
  for (const auto& c : cubes) {
    std::size_t k = c.walls.size();
    if (k < 2) continue;
    if (cx.cubes.size() <= k) cx.cubes.resize(k + 1);
    cx.cubes[k].push_back(c);
    cx.dimension = std::max(cx.dimension, k);
  }
  return cx;
}

inline CubeComplex build_complex(const Wallspace& ws, std::size_t vertex_cap = default_vertex_cap) {
  return build_complex(ws, HalfspaceOrder(ws), vertex_cap);
}

/// Every consistent orientation among all 2^walls, ascending. Brute force.
inline std::vector<Orientation> oracle_enumerate(const HalfspaceOrder& order,
                                                 std::size_t wall_cap = default_oracle_wall_cap) {
  const std::size_t m = order.wall_count();
  if (m > wall_cap) {
    throw CapExceeded("oracle enumeration over " + std::to_string(m) + " walls exceeds the cap of " +
                      std::to_string(wall_cap));
  }
  std::vector<Orientation> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::string bits(m, '+');
    for (std::size_t w = 0; w < m; ++w) {
      if (mask & (std::size_t{1} << w)) bits[w] = '-';
    }
    Orientation o(std::move(bits));
    if (is_consistent(order, o)) out.push_back(std::move(o));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/**
 * Splits a set of orientations into classes connected by single-wall
 * differences (the 1-skeleton of the ambient complex), ascending by first
 * member.
 */
inline std::vector<std::vector<Orientation>> hamming_components(const std::vector<Orientation>& all) {
  std::map<Orientation, std::size_t> idx;
  for (std::size_t i = 0; i < all.size(); ++i) idx.emplace(all[i], i);
  UnionFind uf(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t w = 0; w < all[i].size(); ++w) {
      auto it = idx.find(all[i].flipped(w));
      if (it != idx.end()) uf.unite(i, it->second);
    }
  }
  std::map<std::size_t, std::vector<Orientation>> groups;
  for (std::size_t i = 0; i < all.size(); ++i) groups[uf.find(i)].push_back(all[i]);
  std::vector<std::vector<Orientation>> out;
  for (auto& [k, v] : groups) {
    std::sort(v.begin(), v.end());
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Hyperplane {
  std::size_t wall = 0;
  std::vector<std::size_t> edges;  // ascending edge indices
};

/// Edge classes under "opposite sides of a square"; each class must carry one wall.
inline std::vector<Hyperplane> hyperplanes(const CubeComplex& cx) {
  UnionFind uf(cx.edges.size());
  if (cx.cubes.size() > 2) {
    for (const auto& sq : cx.cubes[2]) {
      std::map<std::size_t, std::vector<std::size_t>> by_wall;
      for (std::size_t a = 0; a < sq.corners.size(); ++a) {
        for (std::size_t b = a + 1; b < sq.corners.size(); ++b) {
          auto e = cx.edge_index(sq.corners[a], sq.corners[b]);
          if (e) by_wall[cx.edges[*e].wall].push_back(*e);
        }
      }
      for (auto& [w, es] : by_wall) {
        if (es.size() != 2) throw TheoremViolation("square with a missing side");
        uf.unite(es[0], es[1]);
      }
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> classes;
  for (std::size_t e = 0; e < cx.edges.size(); ++e) classes[uf.find(e)].push_back(e);
  std::vector<Hyperplane> out;
  for (auto& [root, es] : classes) {
    Hyperplane h{cx.edges[es.front()].wall, es};
    for (std::size_t e : es) {
      if (cx.edges[e].wall != h.wall) {
        throw TheoremViolation("hyperplane containing edges dual to walls " + std::to_string(h.wall) + " and " +
                               std::to_string(cx.edges[e].wall));
      }
    }
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), [](const Hyperplane& a, const Hyperplane& b) { return a.wall < b.wall; });
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i].wall == out[i - 1].wall) {
      throw TheoremViolation("wall " + std::to_string(out[i].wall) + " is dual to two hyperplanes");
    }
  }
  return out;
}

/**
 * Induced action of a group on walls, vertices, edges and hyperplanes,
 * with the stabilizer comparison between hyperplanes and divisions.
 */
struct ComplexAction {
  // Per group element: wall permutation and whether the side labels swap.
  std::vector<std::vector<std::size_t>> wall_image;
  std::vector<std::vector<bool>> wall_swap;
  std::vector<std::vector<std::size_t>> vertex_image;
  std::vector<std::vector<std::size_t>> hyperplane_image;

  std::vector<std::vector<std::size_t>> division_stabilizers;    // per wall
  std::vector<std::vector<std::size_t>> hyperplane_stabilizers;  // per hyperplane
  std::vector<std::vector<std::size_t>> vertex_stabilizers;
  std::vector<std::vector<std::size_t>> edge_stabilizers;
  std::size_t division_orbits = 0;
  std::size_t hyperplane_orbits = 0;
  // (group element, wall) pairs where the element stabilizes the wall but swaps its halfspaces.
  std::vector<std::pair<std::size_t, std::size_t>> inversions;
  bool theorem_a = false;  // stabilizer multisets and orbit counts agree

  Orientation act(std::size_t g, const Orientation& o) const {
    Orientation out = o;
    for (std::size_t w = 0; w < o.size(); ++w) {
      Side s = o[w];
      out.set(wall_image[g][w], wall_swap[g][w] ? opposite(s) : s);
    }
    return out;
  }
};

inline std::size_t count_orbits(const std::vector<std::vector<std::size_t>>& images, std::size_t n) {
  UnionFind uf(n);
  for (const auto& img : images) {
    for (std::size_t i = 0; i < n; ++i) uf.unite(i, img[i]);
  }
  std::size_t orbits = 0;
  for (std::size_t i = 0; i < n; ++i) orbits += uf.find(i) == i ? 1 : 0;
  return orbits;
}

inline ComplexAction induced_action(const Wallspace& ws, const CubeComplex& cx, const std::vector<Hyperplane>& hps,
                                    const Group& group) {
  const std::size_t m = ws.wall_count();
  const std::size_t order = group.order();
  ComplexAction act;
  std::map<Division, std::size_t> wall_of;
  for (std::size_t w = 0; w < m; ++w) wall_of.emplace(ws.division(w), w);

  act.wall_image.assign(order, std::vector<std::size_t>(m));
  act.wall_swap.assign(order, std::vector<bool>(m));
  act.division_stabilizers.assign(m, {});
  for (std::size_t g = 0; g < order; ++g) {
    for (std::size_t w = 0; w < m; ++w) {
      Division img = ws.division(w).image(group[g]);
      auto it = wall_of.find(img);
      if (it == wall_of.end()) throw ValidationError("action does not preserve the wall family");
      act.wall_image[g][w] = it->second;
      act.wall_swap[g][w] = !img.same_orientation(ws.division(it->second));
      if (it->second == w) {
        act.division_stabilizers[w].push_back(g);
        if (act.wall_swap[g][w]) act.inversions.emplace_back(g, w);
      }
    }
  }

  const std::size_t nv = cx.vertices.size();
  act.vertex_image.assign(order, std::vector<std::size_t>(nv));
  act.vertex_stabilizers.assign(nv, {});
  act.edge_stabilizers.assign(cx.edges.size(), {});
  for (std::size_t g = 0; g < order; ++g) {
    for (std::size_t v = 0; v < nv; ++v) {
      auto idx = cx.index_of(act.act(g, cx.vertices[v]));
      if (!idx) throw TheoremViolation("group element " + std::to_string(g) + " maps vertex " + cx.vertices[v].str() +
                                       " outside the complex");
      act.vertex_image[g][v] = *idx;
      if (*idx == v) act.vertex_stabilizers[v].push_back(g);
    }
  }

  std::vector<std::size_t> hp_of_edge(cx.edges.size());
  for (std::size_t h = 0; h < hps.size(); ++h) {
    for (std::size_t e : hps[h].edges) hp_of_edge[e] = h;
  }
  act.hyperplane_image.assign(order, std::vector<std::size_t>(hps.size()));
  act.hyperplane_stabilizers.assign(hps.size(), {});
  for (std::size_t g = 0; g < order; ++g) {
    std::vector<std::size_t> edge_img(cx.edges.size());
    for (std::size_t e = 0; e < cx.edges.size(); ++e) {
      auto img = cx.edge_index(act.vertex_image[g][cx.edges[e].u], act.vertex_image[g][cx.edges[e].v]);
      if (!img) throw TheoremViolation("group element " + std::to_string(g) + " does not preserve adjacency");
      edge_img[e] = *img;
      if (*img == e) act.edge_stabilizers[e].push_back(g);
    }
    for (std::size_t h = 0; h < hps.size(); ++h) {
      std::size_t target = hp_of_edge[edge_img[hps[h].edges.front()]];
      for (std::size_t e : hps[h].edges) {
        if (hp_of_edge[edge_img[e]] != target) throw TheoremViolation("group element splits a hyperplane");
      }
      act.hyperplane_image[g][h] = target;
      if (target == h) act.hyperplane_stabilizers[h].push_back(g);
    }
  }

  act.division_orbits = count_orbits(act.wall_image, m);
  act.hyperplane_orbits = count_orbits(act.hyperplane_image, hps.size());
  bool same = hps.size() == m && act.division_orbits == act.hyperplane_orbits;
  for (std::size_t h = 0; same && h < hps.size(); ++h) {
    same = act.hyperplane_stabilizers[h] == act.division_stabilizers[hps[h].wall];
  }
  act.theorem_a = same;
  return act;
}

}  // namespace wallcube

#endif  // WALLCUBE_DUAL_CUBES_HPP
