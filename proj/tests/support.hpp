#ifndef WALLCUBE_TESTS_SUPPORT_HPP
#define WALLCUBE_TESTS_SUPPORT_HPP

#include <wallcube/wallcube.hpp>

#include <random>
#include <string>
#include <vector>

namespace wallcube::testing {

inline std::string fixture(const std::string& name) { return std::string(WALLCUBE_FIXTURES) + "/" + name + ".json"; }

inline SpaceGraph cycle(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    edges.emplace_back(i, (i + 1) % n);
  }
  return SpaceGraph(names, edges);
}

inline Permutation rotation(std::size_t n, std::size_t k) {
  std::vector<Vertex> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = (i + k) % n;
  return Permutation(img);
}

// v -> c - v (mod n)
inline Permutation reflection(std::size_t n, std::size_t c) {
  std::vector<Vertex> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = (c + n - i % n) % n;
  return Permutation(img);
}

inline VertexSet vs(std::initializer_list<Vertex> v) { return make_set(v); }

// Theta graph: a=0, b=1, arcs a-x_i-y_i-b with x_i = 2i, y_i = 2i+1 for i = 1..3.
inline SpaceGraph theta() {
  return SpaceGraph::from_names({"a", "b", "x1", "y1", "x2", "y2", "x3", "y3"},
                                {{"a", "x1"}, {"x1", "y1"}, {"y1", "b"}, {"a", "x2"}, {"x2", "y2"},
                                 {"y2", "b"}, {"a", "x3"}, {"x3", "y3"}, {"y3", "b"}});
}

inline Group theta_group(const SpaceGraph& g) {
  GroupAction act;
  act.generators.emplace_back(std::vector<Vertex>{0, 1, 4, 5, 2, 3, 6, 7});
  act.generators.emplace_back(std::vector<Vertex>{0, 1, 4, 5, 6, 7, 2, 3});
  return enumerate_group(g, act);
}

inline Group trivial_group(const SpaceGraph& g) { return enumerate_group(g, {}); }

/**
 * 2-connected graph from an ear decomposition: a cycle, then ears (paths
 * between two distinct existing vertices) until `max_vertices` is reached.
 */
inline SpaceGraph random_ear_graph(std::mt19937_64& rng, std::size_t max_vertices) {
  auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  std::size_t n = pick(4, std::min<std::size_t>(8, max_vertices));
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  auto add = [&](Vertex a, Vertex b) {
    if (seen.emplace(std::min(a, b), std::max(a, b)).second) edges.emplace_back(a, b);
  };
  for (std::size_t i = 0; i < n; ++i) add(i, (i + 1) % n);
  std::size_t ears = pick(1, 3);
  for (std::size_t e = 0; e < ears && n < max_vertices; ++e) {
    Vertex a = pick(0, n - 1), b = pick(0, n - 1);
    if (a == b) continue;
    std::size_t inner = pick(0, std::min<std::size_t>(4, max_vertices - n));
    if (inner == 0) {
      if (!seen.count({std::min(a, b), std::max(a, b)})) add(a, b);
      continue;
    }
    Vertex prev = a;
    for (std::size_t k = 0; k < inner; ++k) {
      add(prev, n);
      prev = n++;
    }
    add(prev, b);
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return SpaceGraph(names, edges);
}

struct RandomInstance {
  SpaceGraph graph;
  std::vector<VertexSet> cuts;
  std::vector<Division> divisions;
};

/**
 * Random graph plus a canonical family over 1..max_cuts random cut sets of
 * size <= 2 that forms a valid wallspace with at most `max_walls` walls.
 * With `non_separating` the cut sets are pairwise mutually non-separating.
 */
inline RandomInstance random_instance(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_walls,
                                      std::size_t max_cuts, bool non_separating = false) {
  for (;;) {
    RandomInstance r{random_ear_graph(rng, max_vertices), {}, {}};
    auto pool = enumerate_cut_sets(r.graph, 2);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::size_t want = 1 + rng() % max_cuts;
    for (const auto& c : pool) {
      if (r.cuts.size() >= want) break;
      if (non_separating) {
        bool ok = std::all_of(r.cuts.begin(), r.cuts.end(), [&](const VertexSet& d) {
          return mutually_non_separating(r.graph, c, d).non_separating;
        });
        if (!ok) continue;
      }
      r.cuts.push_back(c);
    }
    if (r.cuts.empty()) continue;
    r.divisions = canonical_divisions(r.graph, r.cuts).divisions;
    if (r.divisions.size() > max_walls || !Wallspace::diagnose(r.graph, r.divisions).empty()) continue;
    return r;
  }
}

// Cut vertices by deleting each vertex in turn.
inline VertexSet brute_cut_vertices(const SpaceGraph& g) {
  VertexSet out;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (g.size() > 1 && components(g, {v}).size() > 1) out.push_back(v);
  }
  return out;
}

// Majority halfspace as an explicit set of triples.
inline std::set<Triple> halfspace_triples(const Wallspace& ws, Halfspace h) {
  std::set<Triple> out;
  triple_scan::for_each_triple(ws.off_wall(), [&](const Triple& t) {
    if (triple_scan::majority(ws.division(h.wall), t) == h.side) out.insert(t);
    return true;
  });
  return out;
}

}  // namespace wallcube::testing

#endif  // WALLCUBE_TESTS_SUPPORT_HPP
