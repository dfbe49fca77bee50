#ifndef WALLCUBE_CUTPOINT_TREE_HPP
#define WALLCUBE_CUTPOINT_TREE_HPP

#include <wallcube/trees.hpp>

#include <map>
#include <set>
#include <string>
#include <vector>

namespace wallcube {

/**
 * Quotient of the graph collapsing each cut set of the family to a single
 * vertex. Quotient vertices keep the original order, a pinched cut set
 * taking the position of its least member.
 */
struct PinchedSpace {
  SpaceGraph quotient;
  std::vector<Vertex> projection;  // original vertex -> quotient vertex
  std::vector<VertexSet> cuts;     // sorted
  std::vector<Vertex> cut_point;   // per cut, its quotient vertex

  Permutation induced(const Permutation& g) const {
    std::vector<Vertex> image(quotient.size(), static_cast<Vertex>(-1));
    for (Vertex v = 0; v < projection.size(); ++v) {
      Vertex from = projection[v];
      Vertex to = projection[g(v)];
      if (image[from] != static_cast<Vertex>(-1) && image[from] != to) {
        throw ValidationError("group action does not descend to the pinched quotient");
      }
      image[from] = to;
    }
    return Permutation(std::move(image));
  }

  VertexSet project(const VertexSet& s) const {
    std::vector<Vertex> out;
    for (Vertex v : s) out.push_back(projection.at(v));
    return make_set(std::move(out));
  }
};

inline PinchedSpace pinch(const SpaceGraph& g, const std::vector<VertexSet>& cuts_in) {
  PinchedSpace p;
  std::set<VertexSet> uniq;
  for (const auto& c : cuts_in) uniq.insert(make_set(c));
  p.cuts.assign(uniq.begin(), uniq.end());
  constexpr Vertex unset = static_cast<Vertex>(-1);
  std::vector<std::size_t> owner(g.size(), unset);
  for (std::size_t i = 0; i < p.cuts.size(); ++i) {
    for (Vertex v : p.cuts[i]) {
      if (v >= g.size()) throw InputError("cut set names a vertex outside the graph");
      if (owner[v] != unset) throw ValidationError("cut sets overlap at vertex " + g.name(v));
      owner[v] = i;
    }
  }
  std::vector<std::string> names;
  p.projection.assign(g.size(), unset);
  p.cut_point.assign(p.cuts.size(), unset);
  for (Vertex v = 0; v < g.size(); ++v) {
    if (owner[v] == unset) {
      p.projection[v] = names.size();
      names.push_back(g.name(v));
    } else if (p.cut_point[owner[v]] == unset) {
      std::size_t c = owner[v];
      p.cut_point[c] = names.size();
      std::string label = g.format(p.cuts[c]);
      while (g.index_of(label)) label += "'";
      names.push_back(label);
    }
  }
  for (Vertex v = 0; v < g.size(); ++v) {
    if (owner[v] != unset) p.projection[v] = p.cut_point[owner[v]];
  }
  std::set<std::pair<Vertex, Vertex>> edges;
  for (auto [a, b] : g.edges()) {
    Vertex qa = p.projection[a], qb = p.projection[b];
    if (qa == qb) continue;
    edges.emplace(std::min(qa, qb), std::max(qa, qb));
  }
  p.quotient = SpaceGraph(std::move(names), {edges.begin(), edges.end()});
  return p;
}

/**
 * Nontrivial cyclic elements straight from the definition: for each non-cut
 * vertex p, p together with every vertex that no cut vertex separates from p.
 * Cut vertices are found by deleting each vertex in turn.
 */
inline std::vector<VertexSet> cyclic_elements(const SpaceGraph& g) {
  const std::size_t n = g.size();
  VertexSet cut;
  std::vector<std::vector<std::size_t>> comp_id;  // per cut vertex
  for (Vertex v = 0; v < n; ++v) {
    if (n < 2) break;
    auto comps = components(g, {v});
    if (comps.size() < 2) continue;
    cut.push_back(v);
    std::vector<std::size_t> id(n, static_cast<std::size_t>(-1));
    for (std::size_t k = 0; k < comps.size(); ++k) {
      for (Vertex w : comps[k]) id[w] = k;
    }
    comp_id.push_back(std::move(id));
  }
  std::set<VertexSet> out;
  for (Vertex p = 0; p < n; ++p) {
    if (contains(cut, p)) continue;
    VertexSet elem;
    for (Vertex q = 0; q < n; ++q) {
      bool separated = false;
      for (std::size_t k = 0; k < cut.size() && !separated; ++k) {
        if (cut[k] == q) continue;
        separated = comp_id[k][p] != comp_id[k][q];
      }
      if (!separated) elem.push_back(q);
    }
    out.insert(elem);
  }
  return {out.begin(), out.end()};
}

// Oracle: biconnected blocks that contain at least one non-articulation vertex.
inline std::vector<VertexSet> cyclic_elements_by_blocks(const SpaceGraph& g) {
  auto bd = biconnected_blocks(g);
  std::vector<VertexSet> out;
  for (const auto& b : bd.blocks) {
    if (!is_subset(b, bd.articulation)) out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/**
 * Bipartite incidence tree: nodes 0..|cut_points|-1 are the cut vertices of
 * the quotient, the remaining nodes are its nontrivial cyclic elements.
 */
struct CutPointTree {
  VertexSet cut_points;
  std::vector<VertexSet> cyclic;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (cut point node, cyclic node), sorted

  std::size_t node_count() const { return cut_points.size() + cyclic.size(); }

  std::size_t cut_node(Vertex q) const {
    auto it = std::lower_bound(cut_points.begin(), cut_points.end(), q);
    if (it == cut_points.end() || *it != q) return static_cast<std::size_t>(-1);
    return static_cast<std::size_t>(it - cut_points.begin());
  }

  std::size_t cyclic_node(const VertexSet& k) const {
    auto it = std::lower_bound(cyclic.begin(), cyclic.end(), k);
    if (it == cyclic.end() || *it != k) return static_cast<std::size_t>(-1);
    return cut_points.size() + static_cast<std::size_t>(it - cyclic.begin());
  }

  // Node permutation induced by a quotient automorphism.
  std::vector<std::size_t> act(const Permutation& q) const {
    std::vector<std::size_t> out(node_count());
    for (std::size_t i = 0; i < cut_points.size(); ++i) out[i] = cut_node(q(cut_points[i]));
    for (std::size_t i = 0; i < cyclic.size(); ++i) out[cut_points.size() + i] = cyclic_node(q(cyclic[i]));
    return out;
  }
};

inline CutPointTree build_cutpoint_tree(const PinchedSpace& p) {
  if (!is_connected(p.quotient)) throw ValidationError("pinched quotient is disconnected");
  CutPointTree t;
  t.cyclic = cyclic_elements(p.quotient);
  auto blocks = cyclic_elements_by_blocks(p.quotient);
  if (t.cyclic != blocks) {
    throw OracleMismatch("cyclic elements disagree with the biconnected-block decomposition");
  }
  t.cut_points = cut_vertices(p.quotient);
  for (std::size_t i = 0; i < t.cut_points.size(); ++i) {
    for (std::size_t k = 0; k < t.cyclic.size(); ++k) {
      if (contains(t.cyclic[k], t.cut_points[i])) t.edges.emplace_back(i, t.cut_points.size() + k);
    }
  }
  if (!graph_is_tree(t.node_count(), t.edges)) throw TheoremViolation("cut point incidence graph is not a tree");
  return t;
}

/// Outcome of matching T(C) against the cut point tree.
struct IsomorphismCertificate {
  bool ok = false;
  std::string failure;
  std::vector<std::size_t> vertex_map;  // T(C) node -> cut point tree node
  bool bijective = false;
  bool edge_check = false;
  bool equivariance_check = false;
  bool off_wall_bijection = false;  // q: off-the-wall points -> non-cut points
  bool cut_sets_to_cut_points = false;
  bool class_count_matches = false;  // ~-classes vs nontrivial cyclic elements
};

/**
 * Builds the explicit map phi: principal vertex -> cyclic element containing
 * the image of its class; semi-principal or midpoint vertex -> the pinched
 * image of its cut set. Then checks bijectivity, edges in both directions,
 * and phi(g.v) = g.phi(v) for every group element.
 */
inline IsomorphismCertificate compare_trees(const TypedTree& tc, const std::vector<std::vector<std::size_t>>& tc_action,
                                            const PinchedSpace& p, const CutPointTree& cpt, const Group& group,
                                            const VertexSet& off_wall) {
  IsomorphismCertificate cert;
  auto fail = [&](std::string why) {
    cert.failure = std::move(why);
    return cert;
  };

  VertexSet non_cut = set_difference(all_vertices(p.quotient.size()), cpt.cut_points);
  cert.off_wall_bijection = p.project(off_wall) == non_cut && off_wall.size() == non_cut.size();
  cert.cut_sets_to_cut_points = std::all_of(p.cut_point.begin(), p.cut_point.end(),
                                            [&](Vertex q) { return contains(cpt.cut_points, q); });
  cert.class_count_matches = tc.classes.size() == cpt.cyclic.size();
  if (!cert.off_wall_bijection) return fail("projection of off-the-wall points is not onto the non-cut points");
  if (!cert.cut_sets_to_cut_points) return fail("some pinched cut set is not a cut point");
  if (!cert.class_count_matches) {
    return fail(std::to_string(tc.classes.size()) + " ~-classes but " + std::to_string(cpt.cyclic.size()) +
                " nontrivial cyclic elements");
  }

  std::size_t principal = 0, other = 0;
  for (const auto& t : tc.types) {
    if (t.type == VertexType::principal) ++principal;
    else if (t.type != VertexType::unclassified) ++other;
    else return fail("T(C) has an unclassified vertex");
  }
  if (principal != cpt.cyclic.size() || other != cpt.cut_points.size()) {
    return fail("type counts differ: " + std::to_string(principal) + " principal vs " +
                std::to_string(cpt.cyclic.size()) + " cyclic elements, " + std::to_string(other) +
                " cut-set vertices vs " + std::to_string(cpt.cut_points.size()) + " cut points");
  }

  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  cert.vertex_map.assign(tc.types.size(), npos);
  for (std::size_t v = 0; v < tc.types.size(); ++v) {
    const auto& t = tc.types[v];
    if (t.type == VertexType::principal) {
      VertexSet image = p.project(tc.classes[t.ref]);
      std::size_t hit = npos;
      for (std::size_t k = 0; k < cpt.cyclic.size(); ++k) {
        if (is_subset(image, cpt.cyclic[k])) {
          if (hit != npos) return fail("class image lies in two cyclic elements");
          hit = cpt.cut_points.size() + k;
        }
      }
      if (hit == npos) return fail("class image lies in no cyclic element");
      cert.vertex_map[v] = hit;
    } else {
      std::size_t node = cpt.cut_node(p.cut_point[cut_index(p.cuts, tc.tree.cuts[t.ref])]);
      if (node == npos) return fail("cut set does not pinch to a cut point");
      cert.vertex_map[v] = node;
    }
  }
  std::vector<std::size_t> sorted = cert.vertex_map;
  std::sort(sorted.begin(), sorted.end());
  cert.bijective = sorted.size() == cpt.node_count() && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  if (!cert.bijective) return fail("vertex map is not a bijection");

  std::set<std::pair<std::size_t, std::size_t>> target(cpt.edges.begin(), cpt.edges.end());
  std::set<std::pair<std::size_t, std::size_t>> mapped;
  for (auto [a, b] : tc.tree.edges) {
    std::size_t x = cert.vertex_map[a], y = cert.vertex_map[b];
    mapped.emplace(std::min(x, y), std::max(x, y));
    if (!target.count({std::min(x, y), std::max(x, y)})) {
      return fail("edge (" + std::to_string(a) + "," + std::to_string(b) + ") maps to a non-edge");
    }
  }
  cert.edge_check = mapped == target;
  if (!cert.edge_check) return fail("cut point tree has an edge with no preimage");

  for (std::size_t g = 0; g < group.order(); ++g) {
    auto q = cpt.act(p.induced(group[g]));
    for (std::size_t v = 0; v < tc.types.size(); ++v) {
      if (cert.vertex_map[tc_action[g][v]] != q[cert.vertex_map[v]]) {
        return fail("equivariance fails for group element " + std::to_string(g) + " at vertex " + std::to_string(v));
      }
    }
  }
  cert.equivariance_check = true;
  cert.ok = true;
  return cert;
}

}  // namespace wallcube

#endif  // WALLCUBE_CUTPOINT_TREE_HPP
