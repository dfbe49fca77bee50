#ifndef WALLCUBE_COMMANDS_HPP
#define WALLCUBE_COMMANDS_HPP

#include <wallcube/export.hpp>
#include <wallcube/input.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <memory>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace wallcube {

struct RunConfig {
  std::string command;
  std::string input;
  std::string out_dir = ".";
  bool oracle = true;
  std::size_t cap_group = default_group_cap;
  std::size_t cap_vertices = default_vertex_cap;
  std::size_t cap_walls = default_oracle_wall_cap;
  std::uint64_t seed = 0;

  static const std::vector<std::string>& commands() {
    static const std::vector<std::string> c{"validate", "build", "tree", "oracle"};
    return c;
  }

  void check() const {
    if (std::find(commands().begin(), commands().end(), command) == commands().end()) {
      throw InputError("unknown command '" + command + "'");
    }
    if (cap_group == 0 || cap_vertices == 0 || cap_walls == 0) throw InputError("caps must be positive");
  }
};

inline std::string plural(std::size_t n, const std::string& one, const std::string& many) {
  return std::to_string(n) + " " + (n == 1 ? one : many);
}

inline std::string format_division(const SpaceGraph& g, const Division& d) {
  return "(" + g.format(d.cut_set) + "; " + g.format(d.side_plus) + " | " + g.format(d.side_minus) + ")";
}

/**
 * Staged state shared by the commands. Each stage requires the previous
 * ones; failures surface as wallcube::Error with the matching exit code.
 */
struct Pipeline {
  Instance instance;
  Group group;
  std::vector<VertexSet> cuts;
  DivisionFamily family;
  std::unique_ptr<Wallspace> wallspace;
  std::unique_ptr<HalfspaceOrder> order;
  CubeComplex complex;
  std::vector<Hyperplane> hyperplanes;
  ComplexAction action;

  const SpaceGraph& graph() const { return instance.graph; }

  void require_model() const {
    auto report = validate_model(graph(), instance.action);
    for (const auto& item : report.items) {
      if (!item.ok) {
        throw ValidationError("model check failed: " + item.name + (item.detail.empty() ? "" : ": " + item.detail));
      }
    }
  }

  void make_group(std::size_t cap) { group = enumerate_group(graph(), instance.action, cap); }

  void make_family() {
    cuts = close_cut_sets(group, instance.cut_sets);
    family = close_under_action(canonical_divisions(graph(), cuts), group);
  }

  void make_wallspace() {
    wallspace = std::make_unique<Wallspace>(graph(), family.divisions);
    order = std::make_unique<HalfspaceOrder>(*wallspace);
  }

  void make_complex(std::size_t vertex_cap) {
    complex = build_complex(*wallspace, *order, vertex_cap);
    hyperplanes = wallcube::hyperplanes(complex);
    action = induced_action(*wallspace, complex, hyperplanes, group);
  }
};

// principal_ultrafilter(g.t) = g.principal_ultrafilter(t) for every element and off-the-wall triple.
inline void check_principal_equivariance(const Pipeline& p) {
  const auto& ws = *p.wallspace;
  for (std::size_t g = 0; g < p.group.order(); ++g) {
    triple_scan::for_each_triple(ws.off_wall(), [&](const Triple& t) {
      Orientation lhs = principal_ultrafilter(ws, t.image(p.group[g]));
      Orientation rhs = p.action.act(g, principal_ultrafilter(ws, t));
      if (lhs != rhs) {
        throw TheoremViolation("principal ultrafilter is not equivariant under group element " + std::to_string(g));
      }
      return true;
    });
  }
}

inline void write_file(const std::string& dir, const std::string& name, const std::string& content) {
  std::filesystem::create_directories(dir);
  std::ofstream f(std::filesystem::path(dir) / name, std::ios::binary);
  if (!f) throw InputError("cannot write " + (std::filesystem::path(dir) / name).string());
  f << content;
}

inline std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

inline int report_error(const Error& e, std::ostream& err) {
  err << "error: " << e.what() << "\n";
  return static_cast<int>(e.exit_code());
}

// ---------------------------------------------------------------- validate

inline int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    cfg.check();
    Pipeline p;
    p.instance = load_instance(cfg.input);
    const auto& g = p.graph();
    bool pass = true;
    auto line = [&](bool ok, const std::string& what) {
      out << (ok ? "[PASS] " : "[FAIL] ") << what << "\n";
      pass = pass && ok;
    };

    out << "instance: " << (p.instance.name.empty() ? cfg.input : p.instance.name) << "\n";
    out << "graph: " << plural(g.size(), "vertex", "vertices") << ", " << plural(g.edges().size(), "edge", "edges")
        << "\n";
    auto model = validate_model(g, p.instance.action);
    for (const auto& item : model.items) line(item.ok, item.name + (item.detail.empty() ? "" : ": " + item.detail));
    if (!model.ok()) {
      out << "RESULT: FAIL\n";
      return static_cast<int>(ExitCode::validation);
    }

    p.make_group(cfg.cap_group);
    out << "group order: " << p.group.order() << "\n";

    p.cuts = close_cut_sets(p.group, p.instance.cut_sets);
    out << "cut sets (closed under the group): " << p.cuts.size() << "\n";
    bool cuts_ok = true;
    for (const auto& c : p.cuts) {
      auto r = is_cut_set(g, c);
      std::string what = "cut set " + g.format(c) + ": valence " + std::to_string(r.valence);
      if (!r.is_cut) what += ", not a cut set";
      if (!r.nowhere_dense()) what += ", members without an outside neighbour " + g.format(r.interior_members);
      line(r.is_cut && r.nowhere_dense(), what);
      cuts_ok = cuts_ok && r.is_cut;
    }
    if (!cuts_ok) {
      out << "RESULT: FAIL\n";
      return static_cast<int>(ExitCode::validation);
    }

    p.family = close_under_action(canonical_divisions(g, p.cuts), p.group);
    out << "divisions: " << p.family.divisions.size() << " in " << plural(p.family.orbit_count, "orbit", "orbits")
        << "\n";
    for (std::size_t i = 0; i < p.family.divisions.size(); ++i) {
      const auto& d = p.family.divisions[i];
      auto r = validate_division(g, d);
      std::string what = "division " + format_division(g, d) + ": orbit " + std::to_string(p.family.orbit[i]) +
                         ", small side " + to_string(small_side(g, d)) + ", stabilizer order " +
                         std::to_string(division_stabilizer(p.group, d).size()) + ", fullness index " +
                         std::to_string(fullness_index(p.group, d));
      for (const auto& f : r.failed) what += "; " + f;
      line(r.ok(), what);
    }

    VertexSet off = Wallspace::off_the_wall(g, p.family.divisions);
    out << "off-the-wall points: " << off.size() << "\n";
    auto problems = Wallspace::diagnose(g, p.family.divisions);
    line(problems.empty(), "wallspace on off-the-wall triples");
    for (const auto& s : problems) out << "  " << s << "\n";

    out << "RESULT: " << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? 0 : static_cast<int>(ExitCode::validation);
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

// ------------------------------------------------------------------- build

inline std::string complex_summary(const CubeComplex& cx, const ComplexAction& act) {
  std::string s = plural(cx.vertices.size(), "vertex", "vertices");
  if (!cx.edges.empty()) s += ", " + plural(cx.edges.size(), "edge", "edges");
  for (std::size_t k = 2; k < cx.cubes.size(); ++k) {
    std::size_t n = cx.cubes[k].size();
    if (n == 0) continue;
    if (k == 2) s += ", " + plural(n, "square", "squares");
    else if (k == 3) s += ", " + plural(n, "cube", "cubes");
    else s += ", " + plural(n, std::to_string(k) + "-cube", std::to_string(k) + "-cubes");
  }
  s += ", dimension " + std::to_string(cx.dimension);
  if (cx.wall_count > 0) {
    s += ", " + plural(act.hyperplane_orbits, "hyperplane orbit", "hyperplane orbits") +
         (act.hyperplane_orbits == act.division_orbits ? " = " : " != ") +
         plural(act.division_orbits, "division orbit", "division orbits");
  }
  return s;
}

/// BFS vertices against the principal component of all consistent orientations.
struct OracleDiff {
  std::size_t complex_vertices = 0;
  std::size_t component_vertices = 0;
  std::size_t consistent_total = 0;
  std::size_t non_principal_components = 0;
  bool vertices_match = false;
  bool edges_match = false;
};

inline OracleDiff diff_against_oracle(const Wallspace& ws, const CubeComplex& cx, std::size_t wall_cap) {
  HalfspaceOrder scan(ws, InclusionMethod::triple_scan);
  auto all = oracle_enumerate(scan, wall_cap);
  auto comps = hamming_components(all);
  auto principal = principal_orientations(ws);
  OracleDiff d;
  d.complex_vertices = cx.vertices.size();
  d.consistent_total = all.size();
  const std::vector<Orientation>* home = nullptr;
  for (const auto& c : comps) {
    if (!principal.empty() && std::binary_search(c.begin(), c.end(), principal.front())) home = &c;
    else ++d.non_principal_components;
  }
  if (home == nullptr) return d;
  d.component_vertices = home->size();
  d.vertices_match = *home == cx.vertices;
  std::size_t adjacent = 0;
  for (const auto& o : *home) {
    for (std::size_t w = 0; w < o.size(); ++w) {
      auto f = o.flipped(w);
      if (o < f && std::binary_search(home->begin(), home->end(), f)) ++adjacent;
    }
  }
  d.edges_match = adjacent == cx.edges.size();
  return d;
}

struct OracleOutcome {
  std::size_t checks = 0;
  std::size_t agree = 0;
  std::vector<std::string> mismatches;  // first 20
  OracleDiff diff;

  bool ok() const { return checks == agree; }
  std::size_t percent() const {
    std::size_t pct = checks == 0 ? 100 : (100 * agree) / checks;
    return (!ok() && pct == 100) ? 99 : pct;
  }
};

/**
 * Region-count criteria against full triple scans, the complex against the
 * brute-force enumeration, and the complex against a rebuild with the walls
 * shuffled by `seed`.
 */
inline OracleOutcome oracle_check(const SpaceGraph& g, const Wallspace& ws, const CubeComplex& cx,
                                  std::size_t wall_cap, std::size_t vertex_cap, std::uint64_t seed) {
  OracleOutcome o;
  auto tally = [&](bool ok, const std::string& what) {
    ++o.checks;
    if (ok) ++o.agree;
    else if (o.mismatches.size() < 20) o.mismatches.push_back(what);
  };

  const std::size_t m = ws.wall_count();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      tally(ws.transverse(a, b) == triple_scan::transverse(ws, a, b),
            "transversality of walls " + std::to_string(a) + "," + std::to_string(b));
    }
  }
  for (std::size_t i = 0; i < 2 * m; ++i) {
    for (std::size_t j = 0; j < 2 * m; ++j) {
      Halfspace h1 = HalfspaceOrder::unpack(i), h2 = HalfspaceOrder::unpack(j);
      tally(ws.halfspace_subset(h1, h2) == triple_scan::halfspace_subset(ws, h1, h2),
            "inclusion of halfspaces " + std::to_string(i) + "," + std::to_string(j));
    }
  }

  o.diff = diff_against_oracle(ws, cx, wall_cap);
  tally(o.diff.vertices_match, "complex vertices vs principal component");
  tally(o.diff.edges_match, "complex edges vs principal component");

  std::mt19937_64 rng(seed);
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Division> shuffled;
  for (std::size_t w : perm) shuffled.push_back(ws.division(w));
  Wallspace ws2(g, shuffled);
  auto cx2 = build_complex(ws2, vertex_cap);
  std::vector<Orientation> remapped;
  for (const auto& v : cx2.vertices) {
    Orientation back = Orientation::uniform(m, Side::plus);
    for (std::size_t k = 0; k < m; ++k) back.set(perm[k], v[k]);
    remapped.push_back(back);
  }
  std::sort(remapped.begin(), remapped.end());
  tally(remapped == cx.vertices && cx2.edges.size() == cx.edges.size() && cx2.dimension == cx.dimension,
        "complex after shuffling wall order (seed " + std::to_string(seed) + ")");
  return o;
}

inline int cmd_build(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    cfg.check();
    Pipeline p;
    p.instance = load_instance(cfg.input);
    p.require_model();
    p.make_group(cfg.cap_group);
    p.make_family();
    p.make_wallspace();
    p.make_complex(cfg.cap_vertices);
    const auto& g = p.graph();
    const auto& ws = *p.wallspace;

    auto tm = transversality_matrix(ws);
    auto clique = max_transverse_clique(tm);
    std::ostringstream rep;
    rep << "instance: " << (p.instance.name.empty() ? cfg.input : p.instance.name) << "\n";
    rep << "group order: " << p.group.order() << "\n";
    rep << "walls: " << ws.wall_count() << " (" << plural(p.family.orbit_count, "division orbit", "division orbits")
        << ")\n";
    rep << "off-the-wall points: " << ws.off_wall().size() << "\n";
    rep << "max transverse clique: " << clique.size << "\n";
    rep << "complex: " << complex_summary(p.complex, p.action) << "\n";
    for (std::size_t k = 2; k < p.complex.cubes.size(); ++k) {
      rep << "  " << k << "-cubes: " << p.complex.cubes[k].size() << "\n";
    }
    rep << "hyperplanes: " << p.hyperplanes.size() << "\n";
    rep << "inversions: " << p.action.inversions.size() << "\n";
    for (auto [e, w] : p.action.inversions) {
      rep << "  element " << e << " swaps the halfspaces of wall " << w << " " << g.format(ws.division(w).cut_set)
          << "\n";
    }

    std::vector<std::string> violations;
    if (!p.action.theorem_a) violations.push_back("hyperplane stabilizers differ from division stabilizers");
    if (p.complex.dimension != clique.size) {
      violations.push_back("dimension " + std::to_string(p.complex.dimension) + " differs from max transverse clique " +
                           std::to_string(clique.size));
    }
    check_principal_equivariance(p);
    rep << "stabilizers match: " << (p.action.theorem_a ? "yes" : "no") << "\n";
    rep << "dimension law: " << (p.complex.dimension == clique.size ? "yes" : "no") << "\n";
    rep << "principal ultrafilters equivariant: yes\n";

    bool oracle_ok = true;
    if (cfg.oracle && ws.wall_count() <= cfg.cap_walls) {
      auto d = diff_against_oracle(ws, p.complex, cfg.cap_walls);
      oracle_ok = d.vertices_match && d.edges_match;
      rep << "oracle: " << d.complex_vertices << (d.vertices_match ? " = " : " != ") << d.component_vertices
          << " principal-component vertices, " << d.non_principal_components << " other components\n";
    } else {
      rep << "oracle: skipped\n";
    }

    write_file(cfg.out_dir, "complex.json", dump(complex_json(p.complex, p.hyperplanes, p.action)));
    write_file(cfg.out_dir, "complex.dot", complex_dot(p.complex, p.hyperplanes));
    write_file(cfg.out_dir, "divisions.json", dump(family_json(g, p.family, p.group)));
    write_file(cfg.out_dir, "transversality.json", dump(transversality_json(tm)));
    write_file(cfg.out_dir, "crossing.dot", crossing_graph_dot(g, ws, tm));
    write_file(cfg.out_dir, "report.txt", rep.str());
    out << rep.str();

    if (!violations.empty()) {
      for (const auto& v : violations) err << "error: " << v << "\n";
      return static_cast<int>(ExitCode::theorem);
    }
    if (!oracle_ok) {
      err << "error: complex disagrees with the brute-force enumeration\n";
      return static_cast<int>(ExitCode::oracle);
    }
    return 0;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

// -------------------------------------------------------------------- tree

inline int cmd_tree(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    cfg.check();
    Pipeline p;
    p.instance = load_instance(cfg.input);
    p.require_model();
    p.make_group(cfg.cap_group);
    p.cuts = close_cut_sets(p.group, p.instance.cut_sets);
    const auto& g = p.graph();
    if (auto bad = first_separating_pair(g, p.cuts)) {
      throw ValidationError("mutual separation violated by (" + g.format(p.cuts[bad->first]) + "," +
                            g.format(p.cuts[bad->second]) + ")");
    }
    p.family = close_under_action(canonical_divisions(g, p.cuts), p.group);
    p.make_wallspace();
    p.make_complex(cfg.cap_vertices);
    const auto& ws = *p.wallspace;

    std::ostringstream rep;
    rep << "instance: " << (p.instance.name.empty() ? cfg.input : p.instance.name) << "\n";
    rep << "complex: " << complex_summary(p.complex, p.action) << "\n";

    auto check = is_tree(ws, p.complex);
    if (!check.agree()) {
      throw OracleMismatch("tree tests disagree: no transverse walls = " + std::string(check.no_transverse_walls ? "yes" : "no") +
                           ", acyclic and connected = " + (check.acyclic_connected ? "yes" : "no"));
    }
    auto hyp = check_tree_hypotheses(g, ws.divisions());
    rep << "tree hypotheses on cut sets: " << (hyp.all_hold() ? "hold" : "do not all hold") << "\n";
    if (!check.is_tree()) throw TheoremViolation("dual complex of a mutually non-separating family is not a tree");
    rep << "dual complex is a tree: yes\n";

    auto typed = classify_vertices(g, ws, p.complex, subdivide(g, ws, p.complex));
    rep << "T(C): " << plural(typed.tree.nodes.size(), "vertex", "vertices") << ", "
        << plural(typed.tree.edges.size(), "edge", "edges") << "\n";
    rep << "~-classes: " << typed.classes.size() << "\n";
    for (const auto& c : typed.classes) rep << "  " << g.format(c) << "\n";

    auto pinched = pinch(g, typed.tree.cuts);
    auto cpt = build_cutpoint_tree(pinched);
    rep << "cut point tree: " << plural(cpt.cut_points.size(), "cut point", "cut points") << ", "
        << plural(cpt.cyclic.size(), "cyclic element", "cyclic elements") << "\n";
    write_file(cfg.out_dir, "tree_tc.dot", typed_tree_dot(g, typed));
    write_file(cfg.out_dir, "tree_tc.json", dump(typed_tree_json(g, typed, p.complex)));
    write_file(cfg.out_dir, "cutpoint_tree.dot", cutpoint_tree_dot(pinched, cpt));

    if (!typed.checked()) {
      rep << "thin classes:";
      for (auto k : typed.thin_classes) rep << " " << g.format(typed.classes[k]);
      rep << "\nvertex typing and isomorphism checks: skipped (thin classes)\n";
      write_file(cfg.out_dir, "tree_report.txt", rep.str());
      out << rep.str();
      return 0;
    }

    for (std::size_t v = 0; v < typed.types.size(); ++v) {
      rep << "  vertex " << v << ": " << tree_node_label(g, typed, v) << "\n";
    }
    auto adj = adjacency_laws(typed);
    for (auto [v, deg, val] : adj.valences) {
      rep << "  valence of vertex " << v << ": " << deg << " = cut set valence " << val << "\n";
    }
    rep << "adjacency laws: pass\n";
    auto tact = tree_action(typed.tree, p.action, p.group);
    if (!types_equivariant(typed, tact, p.group)) throw TheoremViolation("vertex types are not preserved by the action");

    auto cert = compare_trees(typed, tact, pinched, cpt, p.group, ws.off_wall());
    write_file(cfg.out_dir, "certificate.json", dump(certificate_json(g, typed, pinched, cpt, cert)));
    rep << "isomorphism certificate: " << (cert.ok ? "verified" : "FAILED: " + cert.failure) << " (group order "
        << p.group.order() << ")\n";
    write_file(cfg.out_dir, "tree_report.txt", rep.str());
    out << rep.str();
    if (!cert.ok) {
      err << "error: " << cert.failure << "\n";
      return static_cast<int>(ExitCode::theorem);
    }
    return 0;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

// ------------------------------------------------------------------ oracle

inline int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    cfg.check();
    Pipeline p;
    p.instance = load_instance(cfg.input);
    p.require_model();
    p.make_group(cfg.cap_group);
    p.make_family();
    if (p.family.divisions.size() > cfg.cap_walls) {
      throw CapExceeded("oracle enumeration over " + std::to_string(p.family.divisions.size()) +
                        " walls exceeds the cap of " + std::to_string(cfg.cap_walls));
    }
    p.make_wallspace();
    const auto& ws = *p.wallspace;
    p.complex = build_complex(ws, *p.order, cfg.cap_vertices);

    auto o = oracle_check(p.graph(), ws, p.complex, cfg.cap_walls, cfg.cap_vertices, cfg.seed);
    const auto& d = o.diff;
    const std::size_t m = ws.wall_count();

    std::ostringstream rep;
    rep << "instance: " << (p.instance.name.empty() ? cfg.input : p.instance.name) << "\n";
    rep << "walls: " << m << ", off-the-wall points: " << ws.off_wall().size() << "\n";
    rep << "consistent orientations: " << d.consistent_total << "\n";
    rep << "complex vertices: " << d.complex_vertices << (d.vertices_match ? " = " : " != ") << d.component_vertices
        << " principal-component orientations\n";
    rep << "non-principal components: " << d.non_principal_components << "\n";
    rep << "oracle agreement: " << o.percent() << "% (" << o.agree << "/" << o.checks << " checks)\n";
    for (const auto& s : o.mismatches) rep << "  mismatch: " << s << "\n";
    write_file(cfg.out_dir, "oracle_report.txt", rep.str());
    out << rep.str();
    return o.ok() ? 0 : static_cast<int>(ExitCode::oracle);
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.command == "validate") return cmd_validate(cfg, out, err);
  if (cfg.command == "build") return cmd_build(cfg, out, err);
  if (cfg.command == "tree") return cmd_tree(cfg, out, err);
  if (cfg.command == "oracle") return cmd_oracle(cfg, out, err);
  err << "error: unknown command '" << cfg.command << "'\n";
  return static_cast<int>(ExitCode::parse);
}

}  // namespace wallcube

#endif  // WALLCUBE_COMMANDS_HPP
