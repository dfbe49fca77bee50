#ifndef WALLCUBE_INPUT_HPP
#define WALLCUBE_INPUT_HPP

#include <wallcube/space_model.hpp>

#include <json.hpp>

#include <fstream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace wallcube {

/// One self-contained problem instance as read from an input document.
struct Instance {
  std::string name;
  SpaceGraph graph;
  GroupAction action;
  std::vector<VertexSet> cut_sets;
};

namespace detail {

// Character iterator that publishes how far the parser has read.
class CountingIterator {
 public:
  using iterator_category = std::input_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  CountingIterator(const char* p, const char* base, std::size_t* consumed) : p_(p), base_(base), consumed_(consumed) {}

  reference operator*() const { return *p_; }
  CountingIterator& operator++() {
    ++p_;
    *consumed_ = static_cast<std::size_t>(p_ - base_);
    return *this;
  }
  CountingIterator operator++(int) {
    CountingIterator old = *this;
    ++*this;
    return old;
  }
  bool operator==(const CountingIterator& o) const { return p_ == o.p_; }
  bool operator!=(const CountingIterator& o) const { return p_ != o.p_; }

 private:
  const char* p_;
  const char* base_;
  std::size_t* consumed_;
};

// Records, for every value in the document, the byte offset just past its first token.
class OffsetRecorder : public nlohmann::json_sax<nlohmann::json> {
 public:
  explicit OffsetRecorder(const std::size_t* consumed) : consumed_(consumed) {}

  std::map<std::string, std::size_t> offsets;

  bool null() override { return scalar(); }
  bool boolean(bool) override { return scalar(); }
  bool number_integer(number_integer_t) override { return scalar(); }
  bool number_unsigned(number_unsigned_t) override { return scalar(); }
  bool number_float(number_float_t, const string_t&) override { return scalar(); }
  bool string(string_t&) override { return scalar(); }
  bool binary(binary_t&) override { return scalar(); }
  bool start_object(std::size_t) override {
    begin();
    stack_.push_back({true, {}, 0});
    return true;
  }
  bool key(string_t& k) override {
    stack_.back().key = k;
    return true;
  }
  bool end_object() override {
    stack_.pop_back();
    end();
    return true;
  }
  bool start_array(std::size_t) override {
    begin();
    stack_.push_back({false, {}, 0});
    return true;
  }
  bool end_array() override {
    stack_.pop_back();
    end();
    return true;
  }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception&) override { return false; }

 private:
  struct Frame {
    bool object;
    std::string key;
    std::size_t index;
  };

  static std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
      if (c == '~') out += "~0";
      else if (c == '/') out += "~1";
      else out += c;
    }
    return out;
  }

  std::string path() const {
    std::string p;
    for (const auto& f : stack_) p += "/" + (f.object ? escape(f.key) : std::to_string(f.index));
    return p;
  }
  void begin() { offsets.emplace(path(), *consumed_); }
  void end() {
    if (!stack_.empty() && !stack_.back().object) ++stack_.back().index;
  }
  bool scalar() {
    begin();
    end();
    return true;
  }

  const std::size_t* consumed_;
  std::vector<Frame> stack_;
};

}  // namespace detail

/**
 * Parses an instance document:
 *   { "name": str?, "vertices": [str], "edges": [[str,str]],
 *     "generators": [{str: str}]?, "cut_sets": [[str]]? }
 * Any violation raises InputError naming the source and line.
 */
inline Instance parse_instance(const std::string& text, const std::string& source = "<input>") {
  auto line_at = [&](std::size_t offset) {
    std::size_t end = std::min(offset, text.size());
    while (end > 0 && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    if (end > 0) --end;
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(end), '\n'));
  };

  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
    std::string what = e.what();
    auto pos = what.find("syntax error");
    throw InputError(source + ":" + std::to_string(line_at(byte + 1)) + ": " +
                     (pos == std::string::npos ? what : what.substr(pos)));
  }

  std::size_t consumed = 0;
  detail::OffsetRecorder rec(&consumed);
  const char* base = text.data();
  nlohmann::json::sax_parse(detail::CountingIterator(base, base, &consumed),
                            detail::CountingIterator(base + text.size(), base, &consumed), &rec);

  auto fail = [&](const std::string& pointer, const std::string& msg) -> InputError {
    std::string p = pointer;
    while (!p.empty() && !rec.offsets.count(p)) p = p.substr(0, p.rfind('/'));
    std::size_t off = rec.offsets.count(p) ? rec.offsets.at(p) : 0;
    return InputError(source + ":" + std::to_string(line_at(off)) + ": " + msg);
  };

  if (!doc.is_object()) throw fail("", "document must be a JSON object");
  static const std::set<std::string> known{"name", "vertices", "edges", "generators", "cut_sets"};
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (!known.count(it.key())) throw fail("/" + it.key(), "unknown key '" + it.key() + "'");
  }

  Instance inst;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw fail("/name", "'name' must be a string");
    inst.name = doc["name"].get<std::string>();
  }

  if (!doc.contains("vertices")) throw fail("", "missing required key 'vertices'");
  const auto& jv = doc["vertices"];
  if (!jv.is_array() || jv.empty()) throw fail("/vertices", "'vertices' must be a nonempty array of strings");
  std::vector<std::string> names;
  std::map<std::string, Vertex> index;
  for (std::size_t i = 0; i < jv.size(); ++i) {
    std::string ptr = "/vertices/" + std::to_string(i);
    if (!jv[i].is_string()) throw fail(ptr, "vertex identifiers must be strings");
    std::string n = jv[i].get<std::string>();
    if (!index.emplace(n, names.size()).second) throw fail(ptr, "duplicate vertex '" + n + "'");
    names.push_back(n);
  }
  auto vertex = [&](const nlohmann::json& j, const std::string& ptr) {
    if (!j.is_string()) throw fail(ptr, "expected a vertex identifier (string)");
    auto it = index.find(j.get<std::string>());
    if (it == index.end()) throw fail(ptr, "unknown vertex '" + j.get<std::string>() + "'");
    return it->second;
  };

  if (!doc.contains("edges")) throw fail("", "missing required key 'edges'");
  const auto& je = doc["edges"];
  if (!je.is_array()) throw fail("/edges", "'edges' must be an array");
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::set<std::pair<Vertex, Vertex>> seen_edges;
  for (std::size_t i = 0; i < je.size(); ++i) {
    std::string ptr = "/edges/" + std::to_string(i);
    if (!je[i].is_array() || je[i].size() != 2) throw fail(ptr, "each edge must be a 2-element array");
    Vertex a = vertex(je[i][0], ptr + "/0");
    Vertex b = vertex(je[i][1], ptr + "/1");
    if (a == b) throw fail(ptr, "loop at vertex '" + names[a] + "'");
    if (!seen_edges.emplace(std::min(a, b), std::max(a, b)).second) {
      throw fail(ptr, "duplicate edge {" + names[a] + "," + names[b] + "}");
    }
    edges.emplace_back(a, b);
  }
  inst.graph = SpaceGraph(names, edges);

  if (doc.contains("generators")) {
    const auto& jg = doc["generators"];
    if (!jg.is_array()) throw fail("/generators", "'generators' must be an array of objects");
    for (std::size_t i = 0; i < jg.size(); ++i) {
      std::string ptr = "/generators/" + std::to_string(i);
      if (!jg[i].is_object()) throw fail(ptr, "a generator must be an object mapping vertex to vertex");
      std::vector<Vertex> image = all_vertices(names.size());
      std::vector<char> hit(names.size(), 0);
      for (auto it = jg[i].begin(); it != jg[i].end(); ++it) {
        std::string kptr = ptr + "/" + it.key();
        auto from = index.find(it.key());
        if (from == index.end()) throw fail(kptr, "unknown vertex '" + it.key() + "'");
        image[from->second] = vertex(it.value(), kptr);
      }
      for (Vertex v : image) {
        if (hit[v]) throw fail(ptr, "generator is not a bijection (two vertices map to '" + names[v] + "')");
        hit[v] = 1;
      }
      inst.action.generators.emplace_back(std::move(image));
    }
  }

  if (doc.contains("cut_sets")) {
    const auto& jc = doc["cut_sets"];
    if (!jc.is_array()) throw fail("/cut_sets", "'cut_sets' must be an array of vertex arrays");
    for (std::size_t i = 0; i < jc.size(); ++i) {
      std::string ptr = "/cut_sets/" + std::to_string(i);
      if (!jc[i].is_array() || jc[i].empty()) throw fail(ptr, "a cut set must be a nonempty array of vertices");
      std::vector<Vertex> members;
      for (std::size_t k = 0; k < jc[i].size(); ++k) members.push_back(vertex(jc[i][k], ptr + "/" + std::to_string(k)));
      VertexSet s = make_set(members);
      if (s.size() != members.size()) throw fail(ptr, "cut set lists a vertex twice");
      if (s.size() >= names.size()) throw fail(ptr, "cut set must be a proper subset of the vertices");
      inst.cut_sets.push_back(std::move(s));
    }
  }
  return inst;
}

inline Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str(), path);
}

}  // namespace wallcube

#endif  // WALLCUBE_INPUT_HPP
