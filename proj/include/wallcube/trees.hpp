#ifndef WALLCUBE_TREES_HPP
#define WALLCUBE_TREES_HPP

#include <wallcube/dual_cubes.hpp>

#include <map>
#include <string>
#include <vector>

namespace wallcube {

struct TreeCheck {
  bool no_transverse_walls = false;
  bool acyclic_connected = false;

  bool is_tree() const noexcept { return no_transverse_walls && acyclic_connected; }
  bool agree() const noexcept { return no_transverse_walls == acyclic_connected; }
};

inline bool graph_is_tree(std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  if (vertices == 0 || edges.size() + 1 != vertices) return false;
  UnionFind uf(vertices);
  for (auto [a, b] : edges) {
    if (!uf.unite(a, b)) return false;
  }
  return true;
}

inline TreeCheck is_tree(const Wallspace& ws, const CubeComplex& cx) {
  TreeCheck t;
  t.no_transverse_walls = max_transverse_clique(ws).size <= 1;
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (const auto& edge : cx.edges) e.emplace_back(edge.u, edge.v);
  t.acyclic_connected = graph_is_tree(cx.vertices.size(), e);
  return t;
}

/**
 * Per-division and per-pair evaluation of the sufficient conditions for the
 * dual complex to be a tree: connected cut sets, connected differences
 * C \ I, and connected complement of I = C n C'.
 */
struct TreeHypothesisReport {
  struct PairCheck {
    std::size_t a = 0, b = 0;
    bool difference_a_connected = false;
    bool difference_b_connected = false;
    bool complement_connected = false;
    bool ok() const { return difference_a_connected && difference_b_connected && complement_connected; }
  };
  std::vector<bool> cut_connected;  // per division
  std::vector<PairCheck> pairs;     // every unordered pair of distinct divisions

  bool all_hold() const {
    return std::all_of(cut_connected.begin(), cut_connected.end(), [](bool b) { return b; }) &&
           std::all_of(pairs.begin(), pairs.end(), [](const PairCheck& p) { return p.ok(); });
  }
};

inline TreeHypothesisReport check_tree_hypotheses(const SpaceGraph& g, const std::vector<Division>& divisions) {
  TreeHypothesisReport r;
  for (const auto& d : divisions) r.cut_connected.push_back(induces_connected(g, d.cut_set));
  for (std::size_t a = 0; a < divisions.size(); ++a) {
    for (std::size_t b = a + 1; b < divisions.size(); ++b) {
      const auto& ca = divisions[a].cut_set;
      const auto& cb = divisions[b].cut_set;
      VertexSet inter = set_intersection(ca, cb);
      TreeHypothesisReport::PairCheck p;
      p.a = a;
      p.b = b;
      p.difference_a_connected = induces_connected(g, set_difference(ca, inter));
      p.difference_b_connected = induces_connected(g, set_difference(cb, inter));
      p.complement_connected = components(g, inter).size() == 1;
      r.pairs.push_back(p);
    }
  }
  return r;
}

/// Off-the-wall vertices grouped by their side on every division, ordered by least member.
inline std::vector<VertexSet> equivalence_classes(const SpaceGraph& g, const std::vector<Division>& divisions) {
  VertexSet off = Wallspace::off_the_wall(g, divisions);
  std::map<std::string, VertexSet> by_signature;
  for (Vertex v : off) {
    std::string sig;
    for (const auto& d : divisions) sig += contains(d.side_plus, v) ? '+' : '-';
    by_signature[sig].push_back(v);
  }
  std::vector<VertexSet> out;
  for (auto& [sig, members] : by_signature) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

struct TreeNode {
  enum class Kind { complex_vertex, midpoint };
  Kind kind = Kind::complex_vertex;
  std::size_t ref = 0;  // complex vertex index, or cut index for a midpoint
};

/**
 * T(C): the dual tree with the edge dual to each valence-2 cut set's
 * division subdivided. Nodes 0..n-1 are the complex vertices in order;
 * midpoints follow in cut order.
 */
struct SubdividedTree {
  std::vector<TreeNode> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (a, b), a < b, sorted
  std::vector<VertexSet> cuts;                             // distinct cut sets, sorted
  std::vector<std::size_t> cut_valence;
  std::vector<std::size_t> cut_of_wall;
  std::vector<std::size_t> midpoint_of_cut;  // node id, or npos for valence >= 3
  std::vector<std::size_t> subdivided_edge;  // complex edge per cut, npos if none
  std::size_t complex_vertices = 0;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::vector<std::size_t> degree() const {
    std::vector<std::size_t> d(nodes.size(), 0);
    for (auto [a, b] : edges) {
      ++d[a];
      ++d[b];
    }
    return d;
  }
};

inline std::size_t cut_index(const std::vector<VertexSet>& cuts, const VertexSet& c) {
  auto it = std::lower_bound(cuts.begin(), cuts.end(), c);
  if (it == cuts.end() || *it != c) throw ValidationError("cut set not in the family");
  return static_cast<std::size_t>(it - cuts.begin());
}

inline SubdividedTree subdivide(const SpaceGraph& g, const Wallspace& ws, const CubeComplex& cx) {
  if (!is_tree(ws, cx).is_tree()) throw TheoremViolation("the dual complex is not a tree");
  SubdividedTree t;
  t.cuts = cut_sets_of(ws.divisions());
  for (const auto& c : t.cuts) t.cut_valence.push_back(components(g, c).size());
  for (const auto& d : ws.divisions()) t.cut_of_wall.push_back(cut_index(t.cuts, d.cut_set));
  t.complex_vertices = cx.vertices.size();
  for (std::size_t v = 0; v < cx.vertices.size(); ++v) t.nodes.push_back({TreeNode::Kind::complex_vertex, v});
  t.midpoint_of_cut.assign(t.cuts.size(), SubdividedTree::npos);
  t.subdivided_edge.assign(t.cuts.size(), SubdividedTree::npos);
  for (std::size_t e = 0; e < cx.edges.size(); ++e) {
    const auto& edge = cx.edges[e];
    std::size_t c = t.cut_of_wall[edge.wall];
    if (t.cut_valence[c] == 2) {
      if (t.midpoint_of_cut[c] != SubdividedTree::npos) {
        throw TheoremViolation("valence-2 cut set " + g.format(t.cuts[c]) + " is dual to more than one edge");
      }
      std::size_t mid = t.nodes.size();
      t.nodes.push_back({TreeNode::Kind::midpoint, c});
      t.midpoint_of_cut[c] = mid;
      t.subdivided_edge[c] = e;
      t.edges.emplace_back(edge.u, mid);
      t.edges.emplace_back(edge.v, mid);
    } else {
      t.edges.emplace_back(edge.u, edge.v);
    }
  }
  std::sort(t.edges.begin(), t.edges.end());
  return t;
}

enum class VertexType { principal, semi_principal, midpoint, unclassified };

inline const char* to_string(VertexType t) {
  switch (t) {
    case VertexType::principal: return "principal";
    case VertexType::semi_principal: return "semi-principal";
    case VertexType::midpoint: return "midpoint";
    default: return "unclassified";
  }
}

struct TypedVertex {
  VertexType type = VertexType::unclassified;
  std::size_t ref = 0;  // class index for principal, cut index otherwise
};

struct TypedTree {
  SubdividedTree tree;
  std::vector<VertexSet> classes;
  std::vector<std::size_t> thin_classes;  // classes with fewer than 2 points
  std::vector<TypedVertex> types;
  std::vector<std::size_t> principal_vertex;       // per class (complex vertex), npos if thin
  std::vector<std::size_t> semi_principal_vertex;  // per cut, npos for valence 2

  // Typing and isomorphism checks apply only when every class is fat.
  bool checked() const noexcept { return thin_classes.empty(); }
};

// The orientation that picks the big side on C's own divisions and the side containing C elsewhere.
inline Orientation semi_principal_orientation(const SpaceGraph& g, const Wallspace& ws, const VertexSet& cut) {
  Orientation o = Orientation::uniform(ws.wall_count(), Side::plus);
  for (std::size_t w = 0; w < ws.wall_count(); ++w) {
    const Division& d = ws.division(w);
    if (d.cut_set == cut) {
      SmallSide small = small_side(g, d);
      if (small == SmallSide::none) throw ValidationError("semi-principal vertex requested for a valence-2 cut set");
      o.set(w, small == SmallSide::plus ? Side::minus : Side::plus);
    } else if (is_subset(cut, d.side_plus)) {
      o.set(w, Side::plus);
    } else if (is_subset(cut, d.side_minus)) {
      o.set(w, Side::minus);
    } else {
      throw ValidationError("cut set " + g.format(cut) + " is split by the division of " + g.format(d.cut_set));
    }
  }
  return o;
}

/**
 * Assigns each vertex of T(C) its type: principal for a ~-class,
 * semi-principal for a valence >= 3 cut set, or midpoint of a valence-2 cut
 * set. With no thin classes any vertex matching zero or several types is a
 * TheoremViolation.
 */
inline TypedTree classify_vertices(const SpaceGraph& g, const Wallspace& ws, const CubeComplex& cx,
                                   SubdividedTree tree) {
  constexpr std::size_t npos = SubdividedTree::npos;
  TypedTree out;
  out.tree = std::move(tree);
  out.classes = equivalence_classes(g, ws.divisions());
  for (std::size_t i = 0; i < out.classes.size(); ++i) {
    if (out.classes[i].size() < 2) out.thin_classes.push_back(i);
  }

  std::vector<std::vector<std::pair<VertexType, std::size_t>>> matches(out.tree.nodes.size());
  std::vector<std::string> violations;

  out.principal_vertex.assign(out.classes.size(), npos);
  for (std::size_t k = 0; k < out.classes.size(); ++k) {
    const auto& cls = out.classes[k];
    if (cls.size() < 2) continue;
    std::optional<Orientation> principal;
    for (Vertex c : ws.off_wall()) {
      if (c == cls[0] || c == cls[1]) continue;
      Orientation o = principal_ultrafilter(ws, Triple(cls[0], cls[1], c));
      if (!principal) principal = o;
      else if (*principal != o) violations.push_back("class " + g.format(cls) + " has triples with different principal vertices");
    }
    auto idx = cx.index_of(*principal);
    if (!idx) throw TheoremViolation("principal ultrafilter missing from the complex");
    out.principal_vertex[k] = *idx;
    matches[*idx].emplace_back(VertexType::principal, k);
  }

  out.semi_principal_vertex.assign(out.tree.cuts.size(), npos);
  for (std::size_t c = 0; c < out.tree.cuts.size(); ++c) {
    if (out.tree.cut_valence[c] == 2) {
      matches[out.tree.midpoint_of_cut[c]].emplace_back(VertexType::midpoint, c);
      continue;
    }
    Orientation o = semi_principal_orientation(g, ws, out.tree.cuts[c]);
    auto idx = cx.index_of(o);
    if (!idx) {
      violations.push_back("no vertex is semi-principal for " + g.format(out.tree.cuts[c]));
      continue;
    }
    out.semi_principal_vertex[c] = *idx;
    matches[*idx].emplace_back(VertexType::semi_principal, c);
  }

  out.types.assign(out.tree.nodes.size(), {});
  for (std::size_t v = 0; v < matches.size(); ++v) {
    if (matches[v].size() == 1) {
      out.types[v] = {matches[v][0].first, matches[v][0].second};
    } else {
      std::string label = v < cx.vertices.size() ? cx.vertices[v].str() : "midpoint " + std::to_string(v);
      violations.push_back("vertex " + std::to_string(v) + " (" + label + ") matches " +
                           std::to_string(matches[v].size()) + " types");
    }
  }
  if (out.checked() && !violations.empty()) {
    std::string msg = "classification violation:";
    for (const auto& s : violations) msg += "\n  " + s;
    throw TheoremViolation(msg);
  }
  return out;
}

struct AdjacencyReport {
  // (tree node, its degree, valence of its cut set) for semi-principal and midpoint vertices.
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> valences;
};

/// Checks that same types are never adjacent, semi-principal and midpoint
/// vertices are never adjacent, and cut-set vertices have the cut set's valence.
inline AdjacencyReport adjacency_laws(const TypedTree& t) {
  AdjacencyReport r;
  std::vector<std::string> violations;
  for (auto [a, b] : t.tree.edges) {
    VertexType ta = t.types[a].type, tb = t.types[b].type;
    if (ta == VertexType::unclassified || tb == VertexType::unclassified) continue;
    if (ta == tb) {
      violations.push_back("clause (i): adjacent vertices " + std::to_string(a) + " and " + std::to_string(b) +
                           " are both " + to_string(ta));
    } else if (ta != VertexType::principal && tb != VertexType::principal) {
      violations.push_back("clause (ii): semi-principal and midpoint vertices " + std::to_string(a) + " and " +
                           std::to_string(b) + " are adjacent");
    }
  }
  auto deg = t.tree.degree();
  for (std::size_t v = 0; v < t.types.size(); ++v) {
    VertexType ty = t.types[v].type;
    if (ty != VertexType::semi_principal && ty != VertexType::midpoint) continue;
    std::size_t val = t.tree.cut_valence[t.types[v].ref];
    r.valences.emplace_back(v, deg[v], val);
    if (deg[v] != val) {
      violations.push_back("clause (iii): vertex " + std::to_string(v) + " has valence " + std::to_string(deg[v]) +
                           " but its cut set has valence " + std::to_string(val));
    }
  }
  if (!violations.empty()) {
    std::string msg = "adjacency law violation:";
    for (const auto& s : violations) msg += "\n  " + s;
    throw TheoremViolation(msg);
  }
  return r;
}

/**
 * Group action on T(C) nodes extending the complex action; midpoints follow
 * their cut sets. Also checks that the subdivided edge of each valence-2 cut
 * set has Stab(e) = Stab(C).
 */
inline std::vector<std::vector<std::size_t>> tree_action(const SubdividedTree& t, const ComplexAction& act,
                                                         const Group& group) {
  std::vector<std::vector<std::size_t>> out(group.order(), std::vector<std::size_t>(t.nodes.size()));
  for (std::size_t g = 0; g < group.order(); ++g) {
    for (std::size_t n = 0; n < t.nodes.size(); ++n) {
      const auto& node = t.nodes[n];
      if (node.kind == TreeNode::Kind::complex_vertex) {
        out[g][n] = act.vertex_image[g][node.ref];
      } else {
        std::size_t c = cut_index(t.cuts, group[g](t.cuts[node.ref]));
        out[g][n] = t.midpoint_of_cut[c];
      }
    }
  }
  for (std::size_t c = 0; c < t.cuts.size(); ++c) {
    if (t.subdivided_edge[c] == SubdividedTree::npos) continue;
    if (act.edge_stabilizers[t.subdivided_edge[c]] != stabilizer(group, t.cuts[c])) {
      throw TheoremViolation("subdivided edge stabilizer differs from the stabilizer of its cut set");
    }
  }
  return out;
}

// True iff every group element maps each vertex to one of the same type whose reference is the image reference.
inline bool types_equivariant(const TypedTree& t, const std::vector<std::vector<std::size_t>>& action,
                              const Group& group) {
  for (std::size_t e = 0; e < group.order(); ++e) {
    for (std::size_t v = 0; v < t.types.size(); ++v) {
      const TypedVertex& a = t.types[v];
      const TypedVertex& b = t.types[action[e][v]];
      if (a.type != b.type) return false;
      if (a.type == VertexType::principal) {
        if (group[e](t.classes[a.ref]) != t.classes[b.ref]) return false;
      } else if (a.type != VertexType::unclassified) {
        if (group[e](t.tree.cuts[a.ref]) != t.tree.cuts[b.ref]) return false;
      }
    }
  }
  return true;
}

}  // namespace wallcube

#endif  // WALLCUBE_TREES_HPP
