#include "zigzag/parse_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace zigzag {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) tokens.emplace_back(line.substr(start, i - start));
  }
  return tokens;
}

double parse_weight(const std::string& token, std::size_t line_no) {
  const char* begin = token.c_str();
  char* end = nullptr;
  double w = std::strtod(begin, &end);
  if (end != begin + token.size()) {
    throw Error(ErrorCode::SyntaxError,
                "line " + std::to_string(line_no) + ": bad weight '" + token +
                    "'");
  }
  return w;
}

}  // namespace

Network parse_edge_list(std::string_view text, Strictness strictness) {
  std::vector<ArcSpec> specs;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    std::size_t first = 0;
    while (first < line.size() && is_space(line[first])) ++first;
    if (first == line.size() || line[first] == '#') continue;

    auto tokens = split_tokens(line);
    if (tokens.size() < 2 || tokens.size() > 3) {
      throw Error(ErrorCode::SyntaxError,
                  "line " + std::to_string(line_no) +
                      ": expected 'tail head [weight]'");
    }
    ArcSpec spec;
    spec.tail = tokens[0];
    spec.head = tokens[1];
    if (tokens.size() == 3) {
      double w = parse_weight(tokens[2], line_no);
      if (w < 0.0) {
        throw Error(ErrorCode::NegativeWeight,
                    "line " + std::to_string(line_no) + ": negative weight");
      }
      spec.weight = w;
    }
    if (spec.tail == spec.head) {
      throw Error(ErrorCode::SelfLoop,
                  "line " + std::to_string(line_no) + ": self-loop at '" +
                      spec.tail + "'");
    }
    specs.push_back(std::move(spec));
  }
  return Network::from_arcs(specs, strictness);
}

std::string format_weight(double w) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), w);
  return std::string(buf, res.ptr);
}

std::string write_edge_list(const Network& net) {
  std::string out;
  for (const Arc& arc : net.arcs()) {
    out += net.name(arc.tail);
    out += ' ';
    out += net.name(arc.head);
    if (arc.has_weight) {
      out += ' ';
      out += format_weight(arc.weight);
    }
    out += '\n';
  }
  return out;
}

namespace {

// Recursive-descent parser for the restricted eNewick dialect.
class ENewickParser {
 public:
  explicit ENewickParser(std::string_view text) : text_(text) {}

  Network parse(Strictness strictness) {
    parse_subtree(/*parent=*/-1, std::nullopt);
    skip_ws();
    expect(';');
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input after ';'");

    // Merge hybrid occurrences; the representative is the first occurrence.
    std::unordered_map<int, int> rep;           // tag -> node index
    std::unordered_map<int, int> occurrences;   // tag -> count
    std::vector<int> resolved(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      resolved[i] = int(i);
      if (nodes_[i].tag >= 0) {
        auto [it, fresh] = rep.emplace(nodes_[i].tag, int(i));
        occurrences[nodes_[i].tag]++;
        if (!fresh) {
          resolved[i] = it->second;
          if (!nodes_[i].name.empty() && nodes_[it->second].name.empty()) {
            nodes_[it->second].name = nodes_[i].name;
          }
        }
      }
    }
    for (auto [tag, cnt] : occurrences) {
      if (cnt < 2) {
        throw Error(ErrorCode::UnpairedHybridTag,
                    "hybrid tag #H" + std::to_string(tag) +
                        " appears only once");
      }
    }

    assign_names(rep, resolved);

    // X is a set: two distinct vertices may not share a label, or name
    // interning in the network builder would silently merge them.
    {
      std::set<std::string> seen;
      for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (resolved[i] != int(i)) continue;
        if (!seen.insert(nodes_[i].name).second) {
          ErrorCode code = nodes_[i].has_children ? ErrorCode::SyntaxError
                                                  : ErrorCode::DuplicateLeafName;
          throw Error(code, "duplicate label '" + nodes_[i].name + "'");
        }
      }
    }

    std::vector<ArcSpec> specs;
    for (const auto& e : edges_) {
      ArcSpec s;
      s.tail = nodes_[resolved[e.parent]].name;
      s.head = nodes_[resolved[e.child]].name;
      s.weight = e.length;
      specs.push_back(std::move(s));
    }
    return Network::from_arcs(specs, strictness);
  }

 private:
  struct NodeRec {
    std::string name;
    int tag = -1;  // hybrid tag number, -1 if none
    bool has_children = false;
  };
  struct EdgeRec {
    int parent;
    int child;
    std::optional<double> length;
  };

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& what) {
    throw Error(ErrorCode::SyntaxError,
                "position " + std::to_string(pos_) + ": " + what);
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  int parse_subtree(int parent, std::optional<double>) {
    skip_ws();
    int node = int(nodes_.size());
    nodes_.emplace_back();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      nodes_[node].has_children = true;
      parse_subtree(node, std::nullopt);
      skip_ws();
      while (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        parse_subtree(node, std::nullopt);
        skip_ws();
      }
      expect(')');
    }
    parse_label(node);
    std::optional<double> length = parse_length();
    if (parent >= 0) {
      edges_.push_back({parent, node, length});
    }
    return node;
  }

  void parse_label(int node) {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::string_view("(),;:#").find(text_[pos_]) ==
               std::string_view::npos &&
           !is_space(text_[pos_]) && text_[pos_] != '\n') {
      ++pos_;
    }
    nodes_[node].name = std::string(text_.substr(start, pos_ - start));
    if (pos_ < text_.size() && text_[pos_] == '#') {
      ++pos_;
      if (pos_ >= text_.size() || (text_[pos_] != 'H' && text_[pos_] != 'h')) {
        fail("expected 'H' after '#'");
      }
      ++pos_;
      std::size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) {
        ++pos_;
      }
      if (pos_ == dstart) fail("expected digits after '#H'");
      nodes_[node].tag =
          std::atoi(std::string(text_.substr(dstart, pos_ - dstart)).c_str());
    }
  }

  std::optional<double> parse_length() {
    if (pos_ >= text_.size() || text_[pos_] != ':') return std::nullopt;
    ++pos_;
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit((unsigned char)text_[pos_]) || text_[pos_] == '.' ||
            text_[pos_] == '-' || text_[pos_] == '+' || text_[pos_] == 'e' ||
            text_[pos_] == 'E')) {
      ++pos_;
    }
    if (pos_ == start) fail("expected branch length after ':'");
    std::string token(text_.substr(start, pos_ - start));
    const char* begin = token.c_str();
    char* end = nullptr;
    double w = std::strtod(begin, &end);
    if (end != begin + token.size()) fail("bad branch length '" + token + "'");
    return w;
  }

  // Unnamed vertices get synthetic names that cannot collide with user
  // labels (suffix underscores until unique).
  void assign_names(const std::unordered_map<int, int>& rep,
                    const std::vector<int>& resolved) {
    std::set<std::string> taken;
    for (const NodeRec& n : nodes_) {
      if (!n.name.empty()) taken.insert(n.name);
    }
    int counter = 0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (resolved[i] != int(i) || !nodes_[i].name.empty()) continue;
      std::string base = nodes_[i].tag >= 0
                             ? "H" + std::to_string(nodes_[i].tag)
                             : "i" + std::to_string(++counter);
      while (!taken.insert(base).second) base += "_";
      nodes_[i].name = base;
    }
    (void)rep;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<NodeRec> nodes_;
  std::vector<EdgeRec> edges_;
};

}  // namespace

Network parse_enewick(std::string_view text, Strictness strictness) {
  ENewickParser parser(text);
  return parser.parse(strictness);
}

namespace {

// Fixed palette for trail overlays; cycled when there are more trails.
constexpr const char* kPalette[] = {
    "red",      "blue",    "forestgreen", "darkorange", "purple",
    "deeppink", "teal",    "saddlebrown", "gold3",      "navy",
    "crimson",  "olive",   "slateblue",   "darkcyan",   "magenta",
};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

}  // namespace

std::string export_dot(const Network& net, const DotOverlay& overlay) {
  std::ostringstream out;
  out << "digraph N {\n";
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    out << "  n" << v << " [label=\"" << net.name(v) << "\"";
    if (net.is_leaf(v)) out << " shape=box";
    out << "];\n";
  }
  std::vector<char> in_tree;
  if (overlay.tree) {
    in_tree.assign(net.arc_count(), 0);
    for (ArcId a : overlay.tree->arcs) in_tree[a] = 1;
  }
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    const Arc& arc = net.arc(a);
    out << "  n" << arc.tail << " -> n" << arc.head << " [";
    bool first = true;
    if (arc.has_weight) {
      out << "label=\"" << format_weight(arc.weight) << "\"";
      first = false;
    }
    if (overlay.decomposition) {
      auto [trail, pos] = overlay.decomposition->arc_to_trail[a];
      if (!first) out << " ";
      out << "color=\"" << kPalette[trail % kPaletteSize] << "\"";
      (void)pos;
      first = false;
    }
    if (overlay.tree && in_tree[a]) {
      if (!first) out << " ";
      out << "style=bold penwidth=2";
      first = false;
    }
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace zigzag
