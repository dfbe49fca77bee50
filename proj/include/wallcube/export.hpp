#ifndef WALLCUBE_EXPORT_HPP
#define WALLCUBE_EXPORT_HPP

#include <wallcube/cutpoint_tree.hpp>

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace wallcube {

using ojson = nlohmann::ordered_json;

inline ojson names_json(const SpaceGraph& g, const VertexSet& s) {
  ojson a = ojson::array();
  for (Vertex v : s) a.push_back(g.name(v));
  return a;
}

inline ojson division_json(const SpaceGraph& g, const Division& d) {
  return ojson{{"cut_set", names_json(g, d.cut_set)},
               {"side_plus", names_json(g, d.side_plus)},
               {"side_minus", names_json(g, d.side_minus)},
               {"small_side_flag", to_string(small_side(g, d))}};
}

inline ojson indices_json(const std::vector<std::size_t>& v) {
  ojson a = ojson::array();
  for (auto x : v) a.push_back(x);
  return a;
}

/// Divisions with orbit id, stabilizer orders and the fullness index.
inline ojson family_json(const SpaceGraph& g, const DivisionFamily& fam, const Group& group) {
  ojson a = ojson::array();
  for (std::size_t i = 0; i < fam.divisions.size(); ++i) {
    const auto& d = fam.divisions[i];
    ojson j = division_json(g, d);
    if (!fam.orbit.empty()) j["orbit"] = fam.orbit[i];
    j["stabilizer_order"] = division_stabilizer(group, d).size();
    j["cut_set_stabilizer_order"] = stabilizer(group, d.cut_set).size();
    j["fullness_index"] = fullness_index(group, d);
    a.push_back(std::move(j));
  }
  return ojson{{"divisions", a}, {"orbit_count", fam.orbit_count}};
}

inline ojson transversality_json(const TransversalityMatrix& t) {
  ojson rows = ojson::array();
  for (const auto& row : t) {
    ojson r = ojson::array();
    for (bool b : row) r.push_back(b ? 1 : 0);
    rows.push_back(std::move(r));
  }
  return ojson{{"walls", t.size()}, {"transverse", rows}};
}

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

inline const char* palette(std::size_t i) {
  static const char* colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                 "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  return colors[i % 10];
}

// Crossing graph: walls as nodes, transverse pairs as edges.
inline std::string crossing_graph_dot(const SpaceGraph& g, const Wallspace& ws, const TransversalityMatrix& t) {
  std::ostringstream os;
  os << "graph crossing {\n";
  for (std::size_t w = 0; w < ws.wall_count(); ++w) {
    const auto& d = ws.division(w);
    os << "  w" << w << " [label=" << dot_quote("W" + std::to_string(w) + " " + g.format(d.cut_set) + " " +
                                                 g.format(d.side_plus))
       << "];\n";
  }
  for (std::size_t a = 0; a < t.size(); ++a) {
    for (std::size_t b = a + 1; b < t.size(); ++b) {
      if (t[a][b]) os << "  w" << a << " -- w" << b << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

inline ojson complex_json(const CubeComplex& cx, const std::vector<Hyperplane>& hps, const ComplexAction& act) {
  ojson j;
  ojson verts = ojson::array();
  for (std::size_t v = 0; v < cx.vertices.size(); ++v) {
    verts.push_back(ojson{{"id", v}, {"orientation", cx.vertices[v].str()},
                          {"stabilizer", indices_json(act.vertex_stabilizers[v])}});
  }
  ojson edges = ojson::array();
  for (std::size_t e = 0; e < cx.edges.size(); ++e) {
    edges.push_back(ojson{{"u", cx.edges[e].u}, {"v", cx.edges[e].v}, {"wall", cx.edges[e].wall},
                          {"stabilizer", indices_json(act.edge_stabilizers[e])}});
  }
  ojson cubes = ojson::array();
  for (std::size_t k = 2; k < cx.cubes.size(); ++k) {
    for (const auto& c : cx.cubes[k]) {
      cubes.push_back(ojson{{"dimension", k}, {"walls", indices_json(c.walls)}, {"corners", indices_json(c.corners)}});
    }
  }
  ojson hyp = ojson::array();
  for (std::size_t h = 0; h < hps.size(); ++h) {
    hyp.push_back(ojson{{"wall", hps[h].wall}, {"edges", indices_json(hps[h].edges)},
                        {"stabilizer", indices_json(act.hyperplane_stabilizers[h])},
                        {"division_stabilizer", indices_json(act.division_stabilizers[hps[h].wall])}});
  }
  ojson inv = ojson::array();
  for (auto [g, w] : act.inversions) inv.push_back(ojson{{"element", g}, {"wall", w}});
  j["dimension"] = cx.dimension;
  j["vertices"] = verts;
  j["edges"] = edges;
  j["cubes"] = cubes;
  j["hyperplanes"] = hyp;
  j["hyperplane_orbits"] = act.hyperplane_orbits;
  j["division_orbits"] = act.division_orbits;
  j["stabilizers_match"] = act.theorem_a;
  j["inversions"] = inv;
  return j;
}

// Vertices labelled by orientation strings, edges coloured by hyperplane.
inline std::string complex_dot(const CubeComplex& cx, const std::vector<Hyperplane>& hps) {
  std::vector<std::size_t> hp_of_edge(cx.edges.size(), 0);
  for (std::size_t h = 0; h < hps.size(); ++h) {
    for (std::size_t e : hps[h].edges) hp_of_edge[e] = h;
  }
  std::ostringstream os;
  os << "graph complex {\n  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t v = 0; v < cx.vertices.size(); ++v) {
    os << "  v" << v << " [label=" << dot_quote(cx.vertices[v].str().empty() ? "()" : cx.vertices[v].str()) << "];\n";
  }
  for (std::size_t e = 0; e < cx.edges.size(); ++e) {
    os << "  v" << cx.edges[e].u << " -- v" << cx.edges[e].v << " [color=\"" << palette(hp_of_edge[e])
       << "\", label=\"W" << cx.edges[e].wall << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

inline std::string tree_node_label(const SpaceGraph& g, const TypedTree& t, std::size_t v) {
  const auto& ty = t.types[v];
  switch (ty.type) {
    case VertexType::principal: return "P " + g.format(t.classes[ty.ref]);
    case VertexType::semi_principal: return "S " + g.format(t.tree.cuts[ty.ref]);
    case VertexType::midpoint: return "M " + g.format(t.tree.cuts[ty.ref]);
    default: return "? " + std::to_string(v);
  }
}

inline std::string typed_tree_dot(const SpaceGraph& g, const TypedTree& t) {
  std::ostringstream os;
  os << "graph tree_tc {\n";
  for (std::size_t v = 0; v < t.types.size(); ++v) {
    const char* color = "#bbbbbb";
    switch (t.types[v].type) {
      case VertexType::principal: color = "#8fd18f"; break;
      case VertexType::semi_principal: color = "#f2b36b"; break;
      case VertexType::midpoint: color = "#8fb8e8"; break;
      default: break;
    }
    os << "  t" << v << " [label=" << dot_quote(tree_node_label(g, t, v)) << ", style=filled, fillcolor=\"" << color
       << "\"];\n";
  }
  for (auto [a, b] : t.tree.edges) os << "  t" << a << " -- t" << b << ";\n";
  os << "}\n";
  return os.str();
}

inline ojson typed_tree_json(const SpaceGraph& g, const TypedTree& t, const CubeComplex& cx) {
  ojson nodes = ojson::array();
  for (std::size_t v = 0; v < t.types.size(); ++v) {
    ojson n{{"id", v}, {"type", to_string(t.types[v].type)}};
    if (t.tree.nodes[v].kind == TreeNode::Kind::complex_vertex) n["orientation"] = cx.vertices[v].str();
    const auto& ty = t.types[v];
    if (ty.type == VertexType::principal) n["class"] = names_json(g, t.classes[ty.ref]);
    else if (ty.type != VertexType::unclassified) n["cut_set"] = names_json(g, t.tree.cuts[ty.ref]);
    nodes.push_back(std::move(n));
  }
  ojson edges = ojson::array();
  for (auto [a, b] : t.tree.edges) edges.push_back(ojson::array({a, b}));
  ojson thin = ojson::array();
  for (auto k : t.thin_classes) thin.push_back(names_json(g, t.classes[k]));
  return ojson{{"nodes", nodes}, {"edges", edges}, {"thin_classes", thin}};
}

inline std::string cutpoint_node_label(const PinchedSpace& p, const CutPointTree& t, std::size_t n) {
  if (n < t.cut_points.size()) return p.quotient.name(t.cut_points[n]);
  return p.quotient.format(t.cyclic[n - t.cut_points.size()]);
}

// Cut points as boxes, cyclic elements as ellipses.
inline std::string cutpoint_tree_dot(const PinchedSpace& p, const CutPointTree& t) {
  std::ostringstream os;
  os << "graph cutpoint_tree {\n";
  for (std::size_t n = 0; n < t.node_count(); ++n) {
    os << "  c" << n << " [label=" << dot_quote(cutpoint_node_label(p, t, n))
       << ", shape=" << (n < t.cut_points.size() ? "box" : "ellipse") << "];\n";
  }
  for (auto [a, b] : t.edges) os << "  c" << a << " -- c" << b << ";\n";
  os << "}\n";
  return os.str();
}

inline ojson certificate_json(const SpaceGraph& g, const TypedTree& t, const PinchedSpace& p, const CutPointTree& cpt,
                              const IsomorphismCertificate& cert) {
  ojson map = ojson::array();
  for (std::size_t v = 0; v < cert.vertex_map.size(); ++v) {
    ojson m{{"tree_vertex", v}, {"tree_label", tree_node_label(g, t, v)}};
    if (cert.vertex_map[v] != static_cast<std::size_t>(-1)) {
      m["cutpoint_node"] = cert.vertex_map[v];
      m["cutpoint_label"] = cutpoint_node_label(p, cpt, cert.vertex_map[v]);
    }
    map.push_back(std::move(m));
  }
  ojson j{{"ok", cert.ok},
          {"vertex_map", map},
          {"bijective", cert.bijective},
          {"edge_check", cert.edge_check},
          {"equivariance_check", cert.equivariance_check},
          {"off_wall_bijection", cert.off_wall_bijection},
          {"cut_sets_to_cut_points", cert.cut_sets_to_cut_points},
          {"class_count_matches", cert.class_count_matches}};
  if (!cert.ok) j["failure"] = cert.failure;
  return j;
}

}  // namespace wallcube

#endif  // WALLCUBE_EXPORT_HPP
