#ifndef WALLCUBE_DIVISIONS_HPP
#define WALLCUBE_DIVISIONS_HPP

#include <wallcube/space_model.hpp>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace wallcube {

/**
 * A cut set with a two-sided partition of its complement. Sides are stored
 * ordered but equality and ordering treat {side_plus, side_minus} as an
 * unordered pair.
 */
struct Division {
  VertexSet cut_set;
  VertexSet side_plus;
  VertexSet side_minus;

  const VertexSet& side(Side s) const { return s == Side::plus ? side_plus : side_minus; }

  // (cut, lesser side, greater side)
  std::tuple<const VertexSet&, const VertexSet&, const VertexSet&> key() const {
    if (side_minus < side_plus) return {cut_set, side_minus, side_plus};
    return {cut_set, side_plus, side_minus};
  }

  friend bool operator==(const Division& a, const Division& b) { return a.key() == b.key(); }
  friend bool operator<(const Division& a, const Division& b) { return a.key() < b.key(); }

  Division image(const Permutation& g) const { return {g(cut_set), g(side_plus), g(side_minus)}; }

  // Same division with the same side labelled plus.
  bool same_orientation(const Division& other) const {
    return cut_set == other.cut_set && side_plus == other.side_plus && side_minus == other.side_minus;
  }
};

enum class SmallSide { none, plus, minus };

inline const char* to_string(SmallSide s) {
  switch (s) {
    case SmallSide::plus: return "plus";
    case SmallSide::minus: return "minus";
    default: return "none";
  }
}

// Recomputed from the graph: a side is small when it is a single component
// of the complement and the other side is not.
inline SmallSide small_side(const SpaceGraph& g, const Division& d) {
  auto comps = components(g, d.cut_set);
  auto single = [&](const VertexSet& side) {
    return std::find(comps.begin(), comps.end(), side) != comps.end();
  };
  bool p = single(d.side_plus);
  bool m = single(d.side_minus);
  if (p && !m) return SmallSide::plus;
  if (m && !p) return SmallSide::minus;
  return SmallSide::none;
}

struct DivisionReport {
  std::vector<std::string> failed;  // clause names
  bool ok() const noexcept { return failed.empty(); }
};

// Checks every clause of the division definition; never throws.
inline DivisionReport validate_division(const SpaceGraph& g, const Division& d) {
  DivisionReport r;
  auto in_range = [&](const VertexSet& s) {
    return std::all_of(s.begin(), s.end(), [&](Vertex v) { return v < g.size(); }) &&
           std::is_sorted(s.begin(), s.end()) && std::adjacent_find(s.begin(), s.end()) == s.end();
  };
  if (!in_range(d.cut_set) || !in_range(d.side_plus) || !in_range(d.side_minus)) {
    r.failed.push_back("well-formed vertex sets");
    return r;
  }
  if (d.cut_set.empty() || d.cut_set.size() >= g.size()) {
    r.failed.push_back("cut set nonempty and proper");
    return r;
  }
  auto cut = is_cut_set(g, d.cut_set);
  if (!cut.is_cut) r.failed.push_back("cut set disconnects");
  if (!cut.nowhere_dense()) r.failed.push_back("cut set nowhere dense");
  if (d.side_plus.empty() || d.side_minus.empty()) r.failed.push_back("sides nonempty");
  VertexSet complement = set_difference(all_vertices(g.size()), d.cut_set);
  if (intersects(d.side_plus, d.side_minus) || set_union(d.side_plus, d.side_minus) != complement) {
    r.failed.push_back("sides partition the complement");
  }
  auto comps = components(g, d.cut_set);
  auto union_of_components = [&](const VertexSet& side) {
    for (const auto& c : comps) {
      if (intersects(c, side) && !is_subset(c, side)) return false;
    }
    return true;
  };
  if (!union_of_components(d.side_plus) || !union_of_components(d.side_minus)) {
    r.failed.push_back("sides are unions of components");
  }
  auto closure = [&](const VertexSet& side) {
    for (Vertex c : d.cut_set) {
      if (!intersects(g.neighbors(c), side)) return false;
    }
    return true;
  };
  if (!closure(d.side_plus)) r.failed.push_back("closure of plus side contains the cut set");
  if (!closure(d.side_minus)) r.failed.push_back("closure of minus side contains the cut set");
  return r;
}

struct DivisionFamily {
  std::vector<Division> divisions;
  // Orbit id per division (ids assigned in order of first appearance); empty
  // until the family has been closed under a group.
  std::vector<std::size_t> orbit;
  std::size_t orbit_count = 0;
};

/**
 * One division (C, {A, M \ (C u A)}) per component A of M \ C, except that a
 * valence-2 cut set yields a single division whose plus side holds the least
 * vertex. For valence >= 3 the plus side is the small side A.
 */
inline DivisionFamily canonical_divisions(const SpaceGraph& g, const std::vector<VertexSet>& cuts) {
  std::set<VertexSet> done;
  DivisionFamily fam;
  for (const auto& raw : cuts) {
    VertexSet c = make_set(raw);
    if (!done.insert(c).second) continue;
    auto report = is_cut_set(g, c);
    if (!report.is_cut) throw ValidationError("not a cut set: " + g.format(c));
    auto comps = components(g, c);
    VertexSet complement = set_difference(all_vertices(g.size()), c);
    if (comps.size() == 2) {
      fam.divisions.push_back({c, comps[0], comps[1]});
      continue;
    }
    for (const auto& a : comps) fam.divisions.push_back({c, a, set_difference(complement, a)});
  }
  return fam;
}

inline constexpr std::size_t default_family_cap = 100'000;

// Sorted closure of a list of cut sets under the group.
inline std::vector<VertexSet> close_cut_sets(const Group& group, const std::vector<VertexSet>& cuts) {
  std::set<VertexSet> out;
  for (const auto& c : cuts) {
    VertexSet s = make_set(c);
    for (const auto& g : group.elements()) out.insert(g(s));
  }
  return {out.begin(), out.end()};
}

/**
 * Adds every image g.D, deduplicated as unordered-side divisions. The result
 * keeps the given divisions' orientation where present; new images carry the
 * orientation transported by the first group element reaching them. Output
 * is sorted and annotated with orbit ids.
 */
inline DivisionFamily close_under_action(const DivisionFamily& family, const Group& group,
                                         std::size_t cap = default_family_cap) {
  std::map<Division, Division> found;  // key -> oriented representative
  for (const auto& d : family.divisions) found.emplace(d, d);
  for (const auto& d : family.divisions) {
    for (const auto& g : group.elements()) {
      Division img = d.image(g);
      found.emplace(img, img);
      if (found.size() > cap) throw CapExceeded("division family too large (cap " + std::to_string(cap) + ")");
    }
  }
  DivisionFamily out;
  for (auto& [k, v] : found) out.divisions.push_back(v);
  out.orbit.assign(out.divisions.size(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < out.divisions.size(); ++i) {
    if (out.orbit[i] != static_cast<std::size_t>(-1)) continue;
    std::size_t id = out.orbit_count++;
    for (const auto& g : group.elements()) {
      Division img = out.divisions[i].image(g);
      auto it = std::lower_bound(out.divisions.begin(), out.divisions.end(), img);
      out.orbit[static_cast<std::size_t>(it - out.divisions.begin())] = id;
    }
  }
  return out;
}

// Stab(D): elements fixing the cut set and the unordered pair of sides.
inline std::vector<std::size_t> division_stabilizer(const Group& group, const Division& d) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < group.order(); ++i) {
    if (d.image(group[i]) == d) out.push_back(i);
  }
  return out;
}

// Stab(M_D^+) = Stab(M_D^-) inside Stab(D): elements not swapping the sides.
inline std::vector<std::size_t> oriented_stabilizer(const Group& group, const Division& d) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < group.order(); ++i) {
    if (d.image(group[i]).same_orientation(d)) out.push_back(i);
  }
  return out;
}

// [Stab(C_D) : Stab(D)]; finite groups make every division G-full.
inline std::size_t fullness_index(const Group& group, const Division& d) {
  return stabilizer(group, d.cut_set).size() / division_stabilizer(group, d).size();
}

struct SeparationResult {
  bool non_separating = false;
  bool overlap = false;
};

inline SeparationResult mutually_non_separating(const SpaceGraph& g, const VertexSet& c1, const VertexSet& c2) {
  SeparationResult r;
  if (intersects(c1, c2)) {
    r.overlap = true;
    return r;
  }
  auto inside_one = [&](const VertexSet& cut, const VertexSet& other) {
    auto comps = components(g, cut);
    return std::any_of(comps.begin(), comps.end(), [&](const VertexSet& c) { return is_subset(other, c); });
  };
  r.non_separating = inside_one(c1, c2) && inside_one(c2, c1);
  return r;
}

// First pair (in list order) that is not mutually non-separating.
inline std::optional<std::pair<std::size_t, std::size_t>> first_separating_pair(
    const SpaceGraph& g, const std::vector<VertexSet>& cuts) {
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    for (std::size_t j = i + 1; j < cuts.size(); ++j) {
      if (!mutually_non_separating(g, cuts[i], cuts[j]).non_separating) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

// Distinct cut sets of a family, sorted.
inline std::vector<VertexSet> cut_sets_of(const std::vector<Division>& divisions) {
  std::set<VertexSet> s;
  for (const auto& d : divisions) s.insert(d.cut_set);
  return {s.begin(), s.end()};
}

}  // namespace wallcube

#endif  // WALLCUBE_DIVISIONS_HPP
