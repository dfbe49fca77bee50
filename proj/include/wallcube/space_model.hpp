#ifndef WALLCUBE_SPACE_MODEL_HPP
#define WALLCUBE_SPACE_MODEL_HPP

#include <wallcube/core.hpp>

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace wallcube {

/**
 * Finite simple graph standing in for the space being divided.
 * Vertices are indices 0..n-1 with attached names; adjacency lists are sorted.
 */
class SpaceGraph {
 public:
  SpaceGraph() = default;

  SpaceGraph(std::vector<std::string> names, const std::vector<std::pair<Vertex, Vertex>>& edges)
      : names_(std::move(names)), adj_(names_.size()) {
    for (Vertex v = 0; v < names_.size(); ++v) {
      if (!index_.emplace(names_[v], v).second) {
        throw InputError("duplicate vertex name '" + names_[v] + "'");
      }
    }
    for (auto [a, b] : edges) {
      if (a >= size() || b >= size()) throw InputError("edge endpoint out of range");
      if (a == b) throw InputError("loop at vertex '" + names_[a] + "'");
      if (b < a) std::swap(a, b);
      if (contains(adj_[a], b)) {
        throw InputError("duplicate edge {" + names_[a] + "," + names_[b] + "}");
      }
      adj_[a].insert(std::upper_bound(adj_[a].begin(), adj_[a].end(), b), b);
      adj_[b].insert(std::upper_bound(adj_[b].begin(), adj_[b].end(), a), a);
    }
    for (Vertex a = 0; a < size(); ++a) {
      for (Vertex b : adj_[a]) {
        if (a < b) edges_.emplace_back(a, b);
      }
    }
  }

  static SpaceGraph from_names(std::vector<std::string> names,
                               const std::vector<std::pair<std::string, std::string>>& edges) {
    std::map<std::string, Vertex> idx;
    for (Vertex v = 0; v < names.size(); ++v) idx.emplace(names[v], v);
    std::vector<std::pair<Vertex, Vertex>> e;
    for (const auto& [a, b] : edges) {
      auto ia = idx.find(a);
      auto ib = idx.find(b);
      if (ia == idx.end() || ib == idx.end()) throw InputError("edge {" + a + "," + b + "} names an unknown vertex");
      e.emplace_back(ia->second, ib->second);
    }
    return SpaceGraph(std::move(names), e);
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Vertex v) const { return names_.at(v); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const VertexSet& neighbors(Vertex v) const { return adj_.at(v); }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const noexcept { return edges_; }
  bool has_edge(Vertex a, Vertex b) const { return a < size() && contains(adj_[a], b); }

  std::optional<Vertex> index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::string format(const VertexSet& s) const {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out += ",";
      out += names_.at(s[i]);
    }
    return out + "}";
  }

 private:
  std::vector<std::string> names_;
  std::vector<VertexSet> adj_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::map<std::string, Vertex> index_;
};

/**
 * Connected components of the subgraph induced on vertices \ removed,
 * ordered by least member.
 */
inline std::vector<VertexSet> components(const SpaceGraph& g, const VertexSet& removed) {
  for (Vertex v : removed) {
    if (v >= g.size()) throw InputError("removed set names a vertex outside the graph");
  }
  if (make_set(removed).size() >= g.size()) throw ValidationError("degenerate removal");
  std::vector<char> gone(g.size(), 0);
  for (Vertex v : removed) gone[v] = 1;
  std::vector<char> seen(g.size(), 0);
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < g.size(); ++s) {
    if (gone[s] || seen[s]) continue;
    VertexSet comp;
    std::deque<Vertex> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!gone[w] && !seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const SpaceGraph& g) {
  return g.size() > 0 && components(g, {}).size() == 1;
}

// True iff the induced subgraph on `s` is connected; the empty set is not.
inline bool induces_connected(const SpaceGraph& g, const VertexSet& s) {
  if (s.empty()) return false;
  return components(g, set_difference(all_vertices(g.size()), s)).size() == 1;
}

struct CutSetReport {
  bool is_cut = false;
  std::size_t valence = 0;
  // Members with no neighbour outside the candidate (nowhere-dense analogue fails).
  VertexSet interior_members;

  bool nowhere_dense() const noexcept { return interior_members.empty(); }
};

inline CutSetReport is_cut_set(const SpaceGraph& g, const VertexSet& candidate) {
  VertexSet c = make_set(candidate);
  for (Vertex v : c) {
    if (v >= g.size()) throw InputError("cut set candidate is not a subset of the vertices");
  }
  if (c.empty() || c.size() >= g.size()) throw ValidationError("cut set candidate must be nonempty and proper");
  CutSetReport r;
  r.valence = components(g, c).size();
  r.is_cut = r.valence >= 2;
  for (Vertex v : c) {
    const auto& nb = g.neighbors(v);
    bool outside = std::any_of(nb.begin(), nb.end(), [&](Vertex w) { return !contains(c, w); });
    if (!outside) r.interior_members.push_back(v);
  }
  return r;
}

struct BlockDecomposition {
  std::vector<VertexSet> blocks;  // sorted by least member, then lexicographically
  VertexSet articulation;
};

/**
 * Biconnected blocks and articulation vertices (iterative Hopcroft-Tarjan).
 * Isolated vertices form singleton blocks.
 */
inline BlockDecomposition biconnected_blocks(const SpaceGraph& g) {
  const std::size_t n = g.size();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, unset), low(n, 0);
  std::vector<char> art(n, 0);
  std::vector<std::pair<Vertex, Vertex>> edge_stack;
  BlockDecomposition out;
  std::size_t timer = 0;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != unset) continue;
    if (g.neighbors(root).empty()) {
      disc[root] = timer++;
      out.blocks.push_back({root});
      continue;
    }
    std::vector<Frame> stack{{root, unset, 0}};
    disc[root] = low[root] = timer++;
    std::size_t root_children = 0;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        Vertex w = nb[f.next++];
        if (disc[w] == unset) {
          edge_stack.emplace_back(f.v, w);
          disc[w] = low[w] = timer++;
          if (f.v == root) ++root_children;
          stack.push_back({w, f.v, 0});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          edge_stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Vertex v = f.v;
      Vertex parent = f.parent;
      stack.pop_back();
      if (parent == unset) continue;
      low[parent] = std::min(low[parent], low[v]);
      if (low[v] >= disc[parent]) {
        if (parent != root) art[parent] = 1;
        VertexSet block;
        while (!edge_stack.empty()) {
          auto e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e.first);
          block.push_back(e.second);
          if (e.first == parent && e.second == v) break;
        }
        out.blocks.push_back(make_set(std::move(block)));
      }
    }
    if (root_children >= 2) art[root] = 1;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (art[v]) out.articulation.push_back(v);
  }
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

// Articulation vertices: single vertices whose removal disconnects the graph.
inline VertexSet cut_vertices(const SpaceGraph& g) { return biconnected_blocks(g).articulation; }

/// Vertex permutation; (a * b)(v) = a(b(v)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Vertex> image) : image_(std::move(image)) {
    std::vector<char> hit(image_.size(), 0);
    for (Vertex v : image_) {
      if (v >= image_.size() || hit[v]) throw InputError("map is not a bijection of the vertex set");
      hit[v] = 1;
    }
  }

  static Permutation identity(std::size_t n) { return Permutation(all_vertices(n)); }

  std::size_t size() const noexcept { return image_.size(); }
  Vertex operator()(Vertex v) const { return image_.at(v); }
  const std::vector<Vertex>& images() const noexcept { return image_; }

  VertexSet operator()(const VertexSet& s) const {
    VertexSet out;
    out.reserve(s.size());
    for (Vertex v : s) out.push_back(image_.at(v));
    std::sort(out.begin(), out.end());
    return out;
  }

  Permutation operator*(const Permutation& rhs) const {
    std::vector<Vertex> out(rhs.size());
    for (Vertex v = 0; v < rhs.size(); ++v) out[v] = image_[rhs.image_[v]];
    Permutation p;
    p.image_ = std::move(out);
    return p;
  }

  Permutation inverse() const {
    std::vector<Vertex> out(image_.size());
    for (Vertex v = 0; v < image_.size(); ++v) out[image_[v]] = v;
    Permutation p;
    p.image_ = std::move(out);
    return p;
  }

  bool is_identity() const {
    for (Vertex v = 0; v < image_.size(); ++v) {
      if (image_[v] != v) return false;
    }
    return true;
  }

  bool is_automorphism(const SpaceGraph& g) const {
    if (size() != g.size()) return false;
    for (auto [a, b] : g.edges()) {
      if (!g.has_edge(image_[a], image_[b])) return false;
    }
    return true;
  }

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<Vertex> image_;
};

struct GroupAction {
  std::vector<Permutation> generators;
};

/**
 * Finite group enumerated from generators. Element 0 is the identity;
 * the remaining order is breadth-first over generator words, which makes it
 * deterministic for fixed input.
 */
class Group {
 public:
  Group() = default;
  explicit Group(std::vector<Permutation> elements) : elements_(std::move(elements)) {
    for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i].images(), i);
  }

  std::size_t order() const noexcept { return elements_.size(); }
  const Permutation& operator[](std::size_t i) const { return elements_.at(i); }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }

  std::optional<std::size_t> index_of(const Permutation& p) const {
    auto it = index_.find(p.images());
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::vector<Permutation> elements_;
  std::unordered_map<std::vector<Vertex>, std::size_t, VectorHash> index_;
};

inline constexpr std::size_t default_group_cap = 1'000'000;

inline Group enumerate_group(const SpaceGraph& g, const GroupAction& action,
                             std::size_t cap = default_group_cap) {
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < action.generators.size(); ++i) {
    const auto& s = action.generators[i];
    if (s.size() != g.size()) throw InputError("generator " + std::to_string(i) + " has the wrong size");
    if (!s.is_automorphism(g)) {
      throw ValidationError("generator " + std::to_string(i) + " is not a graph automorphism");
    }
    gens.push_back(s);
    gens.push_back(s.inverse());
  }
  std::vector<Permutation> elements{Permutation::identity(g.size())};
  std::unordered_map<std::vector<Vertex>, std::size_t, VectorHash> seen{{elements[0].images(), 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& s : gens) {
      Permutation next = s * elements[head];
      if (seen.emplace(next.images(), elements.size()).second) {
        if (elements.size() >= cap) {
          throw CapExceeded("group too large (cap " + std::to_string(cap) + ")");
        }
        elements.push_back(std::move(next));
      }
    }
  }
  return Group(std::move(elements));
}

template <class T>
struct OrbitStabilizer {
  std::vector<T> orbit;                 // in order of first appearance
  std::vector<std::size_t> stabilizer;  // group element indices, ascending
};

/**
 * Orbit and stabilizer of `subject` under `act(g, subject)`. T must be
 * totally ordered and equality must be the intended identification.
 */
template <class T, class Act>
OrbitStabilizer<T> orbit_and_stabilizer(const Group& group, const T& subject, Act act) {
  OrbitStabilizer<T> out;
  std::set<T> seen;
  for (std::size_t i = 0; i < group.order(); ++i) {
    T image = act(group[i], subject);
    if (image == subject) out.stabilizer.push_back(i);
    if (seen.insert(image).second) out.orbit.push_back(std::move(image));
  }
  return out;
}

inline OrbitStabilizer<VertexSet> orbit_and_stabilizer(const Group& group, const VertexSet& subject) {
  return orbit_and_stabilizer(group, make_set(subject),
                              [](const Permutation& p, const VertexSet& s) { return p(s); });
}

inline std::vector<std::size_t> stabilizer(const Group& group, const VertexSet& s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < group.order(); ++i) {
    if (group[i](s) == s) out.push_back(i);
  }
  return out;
}

/**
 * Cut sets of size <= max_size whose members each touch every complementary
 * component (so every canonical division of them is valid). Ordered by size,
 * then lexicographically.
 */
inline std::vector<VertexSet> enumerate_cut_sets(const SpaceGraph& g, std::size_t max_size = 4) {
  std::vector<VertexSet> out;
  const std::size_t n = g.size();
  VertexSet current;
  auto accept = [&](const VertexSet& c) {
    if (c.size() + 1 >= n) return;
    auto comps = components(g, c);
    if (comps.size() < 2) return;
    for (Vertex v : c) {
      for (const auto& comp : comps) {
        const auto& nb = g.neighbors(v);
        if (!intersects(nb, comp)) return;
      }
    }
    out.push_back(c);
  };
  for (std::size_t k = 1; k <= max_size && k < n; ++k) {
    std::vector<Vertex> idx(k);
    std::iota(idx.begin(), idx.end(), Vertex{0});
    while (true) {
      accept(idx);
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

// One line per requirement of the finite model; `ok` is their conjunction.
struct ModelReport {
  struct Item {
    std::string name;
    bool ok;
    std::string detail;
  };
  std::vector<Item> items;
  bool ok() const {
    return std::all_of(items.begin(), items.end(), [](const Item& i) { return i.ok; });
  }
};

inline ModelReport validate_model(const SpaceGraph& g, const GroupAction& action) {
  ModelReport r;
  r.items.push_back({"non-degenerate (>= 4 vertices)", g.size() >= 4, std::to_string(g.size()) + " vertices"});
  bool conn = is_connected(g);
  r.items.push_back({"connected", conn, ""});
  if (conn) {
    VertexSet cv = cut_vertices(g);
    r.items.push_back({"no cut point (2-connected)", cv.empty(),
                       cv.empty() ? "" : "articulation vertices " + g.format(cv)});
  }
  for (std::size_t i = 0; i < action.generators.size(); ++i) {
    bool ok = action.generators[i].is_automorphism(g);
    r.items.push_back({"generator " + std::to_string(i) + " is an automorphism", ok, ""});
  }
  return r;
}

}  // namespace wallcube

#endif  // WALLCUBE_SPACE_MODEL_HPP
