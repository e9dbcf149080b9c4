#include "sldtree/render.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace sldtree {

TreeView view_of(const SearchTree& tree) {
  TreeView view;
  view.query = to_string(tree.query);
  view.truncated = tree.truncated;
  // Views number nodes in preorder, the same order deserialize produces.
  const std::vector<NodeId> order = tree.preorder();
  std::vector<std::size_t> renumber(tree.nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) renumber[order[i]] = i;
  view.nodes.reserve(order.size());
  for (NodeId id : order) {
    const auto& n = tree.nodes[id];
    TreeView::Node v;
    v.goals = goal_texts(n.goals);
    v.status = n.status;
    for (const auto& b : n.label.bindings) v.label.emplace_back(b.name, to_string(b.term));
    for (NodeId c : n.children) v.children.push_back(renumber[c]);
    view.nodes.push_back(std::move(v));
  }
  return view;
}

namespace {

// Display width in columns; counts UTF-8 code points.
int columns(std::string_view s) {
  int n = 0;
  for (unsigned char c : s) {
    if ((c & 0xC0) != 0x80) ++n;
  }
  return n;
}

// Splits UTF-8 text into one string per code point.
std::vector<std::string> glyphs(std::string_view s) {
  std::vector<std::string> out;
  for (unsigned char c : s) {
    if ((c & 0xC0) != 0x80 || out.empty()) {
      out.emplace_back(1, static_cast<char>(c));
    } else {
      out.back() += static_cast<char>(c);
    }
  }
  return out;
}

std::string label_text(const std::pair<std::string, std::string>& b) {
  return b.first + "=" + b.second;
}

std::string node_text(const TreeView::Node& n, const RenderOptions& opts) {
  switch (n.status) {
    case NodeStatus::Success: return opts.success_glyph;
    case NodeStatus::Fail: return opts.fail_glyph;
    case NodeStatus::Pruned: return opts.pruned_glyph;
    case NodeStatus::Truncated: return opts.truncated_glyph;
    case NodeStatus::Open: break;
  }
  std::string body;
  for (std::size_t i = 0; i < n.goals.size(); ++i) {
    if (i) body += ',';
    body += n.goals[i];
  }
  return opts.show_boxes ? "[" + body + "]" : body;
}

class Canvas {
public:
  void put(int row, int col, std::string_view text) {
    for (const auto& g : glyphs(text)) cell(row, col++) = g;
  }
  void put_glyph(int row, int col, const char* g) { cell(row, col) = g; }

  std::string str() const {
    std::string out;
    for (const auto& row : rows_) {
      std::string line;
      for (const auto& c : row) line += c.empty() ? " " : c;
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out += line;
      out += '\n';
    }
    return out;
  }

private:
  std::string& cell(int row, int col) {
    if (static_cast<int>(rows_.size()) <= row) rows_.resize(row + 1);
    auto& r = rows_[row];
    if (static_cast<int>(r.size()) <= col) r.resize(col + 1);
    return r[col];
  }
  std::vector<std::vector<std::string>> rows_;
};

constexpr int kGutter = 3;

// Geometry of one subtree, relative to its left edge.
struct Box {
  std::string text;
  int width = 0;
  int anchor = 0;      // column of the node's connector
  int text_start = 0;  // column where text begins
  int height = 0;      // rows used by the whole subtree
  int link_rows = 0;   // connector rows between this node and its children
  std::vector<int> child_x;  // left edge of each child subtree
};

// The first of several children carries its label left of the branch.
bool label_left(std::size_t index, std::size_t count) { return count > 1 && index == 0; }

int label_width(const TreeView::Node& n) {
  int w = 0;
  for (const auto& b : n.label) w = std::max(w, columns(label_text(b)));
  return w;
}

std::vector<Box> layout(const TreeView& tree, const RenderOptions& opts) {
  std::vector<Box> boxes(tree.nodes.size());
  // Children always have larger ids, so a reverse sweep is bottom-up.
  for (std::size_t id = tree.nodes.size(); id-- > 0;) {
    const auto& n = tree.nodes[id];
    Box& b = boxes[id];
    b.text = node_text(n, opts);
    const int len = columns(b.text);
    if (n.children.empty()) {
      b.width = len;
      b.anchor = len / 2;
      b.text_start = 0;
      b.height = 1;
      continue;
    }
    const std::size_t k = n.children.size();
    int max_labels = 0;
    int x = 0;
    std::vector<int> anchors;
    int right = 0;
    int child_height = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const auto& cn = tree.nodes[n.children[i]];
      const Box& cb = boxes[n.children[i]];
      max_labels = std::max(max_labels, static_cast<int>(cn.label.size()));
      const int lw = label_width(cn);
      int lpad = 0;
      int extent = cb.width;
      if (lw > 0) {
        if (label_left(i, k)) {
          lpad = std::max(0, lw + 2 - cb.anchor);
        } else {
          extent = std::max(extent, cb.anchor + 2 + lw);
        }
      }
      b.child_x.push_back(x + lpad);
      anchors.push_back(x + lpad + cb.anchor);
      right = x + lpad + extent;
      x = right + kGutter;
      child_height = std::max(child_height, cb.height);
    }
    b.anchor = (anchors.front() + anchors.back()) / 2;
    b.text_start = b.anchor - len / 2;
    if (b.text_start < 0) {
      const int shift = -b.text_start;
      for (auto& cx : b.child_x) cx += shift;
      b.anchor += shift;
      right += shift;
      b.text_start = 0;
    }
    b.width = std::max(right, b.text_start + len);
    b.link_rows = 1 + std::max(1, max_labels);
    b.height = 1 + b.link_rows + child_height;
  }
  return boxes;
}

void draw(const TreeView& tree, const std::vector<Box>& boxes, Canvas& canvas) {
  struct Item {
    std::size_t id;
    int row;
    int col;
  };
  std::vector<Item> stack{{0, 0, 0}};
  while (!stack.empty()) {
    auto [id, row, col] = stack.back();
    stack.pop_back();
    const auto& n = tree.nodes[id];
    const Box& b = boxes[id];
    canvas.put(row, col + b.text_start, b.text);
    if (n.children.empty()) continue;

    const std::size_t k = n.children.size();
    int r = row + 1;
    std::vector<int> anchors;
    for (std::size_t i = 0; i < k; ++i) {
      anchors.push_back(col + b.child_x[i] + boxes[n.children[i]].anchor);
    }
    if (k > 1) {
      for (int c = anchors.front() + 1; c < anchors.back(); ++c) canvas.put_glyph(r, c, "_");
      canvas.put_glyph(r, col + b.anchor, "|");
      ++r;
    } else {
      canvas.put_glyph(r, anchors.front(), "|");
      ++r;
    }
    const int label_rows = b.link_rows - (r - row - 1);
    for (std::size_t i = 0; i < k; ++i) {
      const char* g = "|";
      if (k > 1 && i == 0) g = "/";
      if (k > 1 && i + 1 == k) g = "\\";
      const auto& label = tree.nodes[n.children[i]].label;
      for (int j = 0; j < label_rows; ++j) {
        canvas.put_glyph(r + j, anchors[i], g);
        if (j < static_cast<int>(label.size())) {
          const std::string text = label_text(label[j]);
          if (label_left(i, k)) {
            canvas.put(r + j, anchors[i] - 1 - columns(text), text);
          } else {
            canvas.put(r + j, anchors[i] + 2, text);
          }
        }
      }
    }
    const int child_row = row + 1 + b.link_rows;
    for (std::size_t i = k; i-- > 0;) {
      stack.push_back({n.children[i], child_row, col + b.child_x[i]});
    }
  }
}

}  // namespace

std::string render_outline(const TreeView& tree, const RenderOptions& opts) {
  if (tree.nodes.empty()) return {};
  std::string out;
  struct Item {
    std::size_t id;
    std::string lead;    // text before the node on its own line
    std::string prefix;  // indentation inherited by the node's children
  };
  std::vector<Item> stack{{0, "", ""}};
  while (!stack.empty()) {
    Item it = std::move(stack.back());
    stack.pop_back();
    const auto& n = tree.nodes[it.id];
    out += it.lead + node_text(n, opts) + "\n";
    for (std::size_t i = n.children.size(); i-- > 0;) {
      const bool last = i + 1 == n.children.size();
      const auto& cn = tree.nodes[n.children[i]];
      std::string lead = it.prefix + (last ? "\\-- " : "|-- ");
      if (!cn.label.empty()) {
        lead += '(';
        for (std::size_t j = 0; j < cn.label.size(); ++j) {
          if (j) lead += ", ";
          lead += label_text(cn.label[j]);
        }
        lead += ") ";
      }
      stack.push_back({n.children[i], std::move(lead), it.prefix + (last ? "    " : "|   ")});
    }
  }
  return out;
}

std::string render_text(const TreeView& tree, const RenderOptions& opts) {
  if (opts.max_width < 40) throw std::invalid_argument("max width must be at least 40");
  if (tree.nodes.empty()) return {};
  auto boxes = layout(tree, opts);
  if (boxes.front().width > opts.max_width) return render_outline(tree, opts);
  Canvas canvas;
  draw(tree, boxes, canvas);
  return canvas.str();
}

std::string render_text(const SearchTree& tree, const RenderOptions& opts) {
  return render_text(view_of(tree), opts);
}

namespace {

std::string json_quote(std::string_view s) { return nlohmann::json(std::string(s)).dump(); }

void emit_node_head(const TreeView::Node& n, std::string& out) {
  out += "{\"goals\":[";
  for (std::size_t i = 0; i < n.goals.size(); ++i) {
    if (i) out += ',';
    out += json_quote(n.goals[i]);
  }
  out += "],\"status\":";
  out += json_quote(to_string(n.status));
  out += ",\"children\":[";
}

void emit_label(const TreeView::Node& n, std::string& out) {
  out += "{\"label\":[";
  for (std::size_t i = 0; i < n.label.size(); ++i) {
    if (i) out += ',';
    out += '[' + json_quote(n.label[i].first) + ',' + json_quote(n.label[i].second) + ']';
  }
  out += "],\"node\":";
}

}  // namespace

std::string serialize(const TreeView& tree) {
  std::string out = "{\"format\":\"sldtree\",\"version\":1,\"query\":";
  out += json_quote(tree.query);
  out += ",\"truncated\":";
  out += tree.truncated ? "true" : "false";
  out += ",\"root\":";
  if (tree.nodes.empty()) throw std::invalid_argument("cannot serialize an empty tree");

  // Explicit stack: (node id, index of next child to emit).
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  emit_node_head(tree.nodes[0], out);
  stack.emplace_back(0, 0);
  while (!stack.empty()) {
    auto& [id, next] = stack.back();
    const auto& n = tree.nodes[id];
    if (next == n.children.size()) {
      out += "]}";
      stack.pop_back();
      if (!stack.empty()) out += '}';  // closes the edge record
      continue;
    }
    if (next > 0) out += ',';
    const std::size_t child = n.children[next++];
    emit_label(tree.nodes[child], out);
    emit_node_head(tree.nodes[child], out);
    stack.emplace_back(child, 0);
  }
  out += "}\n";
  return out;
}

std::string serialize(const SearchTree& tree) { return serialize(view_of(tree)); }

namespace {

using json = nlohmann::json;

const json& field(const json& obj, const char* key, json::value_t type, const std::string& path) {
  if (!obj.is_object()) throw FormatError("expected an object", path);
  auto it = obj.find(key);
  if (it == obj.end()) throw FormatError(std::string("missing field \"") + key + "\"", path);
  if (it->type() != type &&
      !(type == json::value_t::number_integer && it->is_number_unsigned())) {
    throw FormatError(std::string("field \"") + key + "\" has the wrong type",
                      path + "/" + key);
  }
  return *it;
}

std::string string_at(const json& j, const std::string& path) {
  if (!j.is_string()) throw FormatError("expected a string", path);
  return j.get<std::string>();
}

}  // namespace

TreeView deserialize(std::string_view text) {
  json doc;
  try {
    std::istringstream in{std::string(text)};
    in >> doc;
  } catch (const json::parse_error& e) {
    throw FormatError(e.what(), "byte " + std::to_string(e.byte));
  }
  if (string_at(field(doc, "format", json::value_t::string, ""), "/format") != "sldtree") {
    throw FormatError("not an sldtree document", "/format");
  }
  if (field(doc, "version", json::value_t::number_integer, "").get<long long>() != 1) {
    throw FormatError("unsupported version", "/version");
  }
  TreeView view;
  view.query = string_at(field(doc, "query", json::value_t::string, ""), "/query");
  view.truncated = field(doc, "truncated", json::value_t::boolean, "").get<bool>();

  struct Item {
    const json* node;
    std::string path;
    std::optional<std::size_t> parent;
    std::vector<std::pair<std::string, std::string>> label;
  };
  std::vector<Item> stack;
  stack.push_back({&field(doc, "root", json::value_t::object, ""), "/root", std::nullopt, {}});
  while (!stack.empty()) {
    Item it = std::move(stack.back());
    stack.pop_back();
    const json& j = *it.node;
    TreeView::Node n;
    const auto& goals = field(j, "goals", json::value_t::array, it.path);
    for (std::size_t i = 0; i < goals.size(); ++i) {
      n.goals.push_back(string_at(goals[i], it.path + "/goals/" + std::to_string(i)));
    }
    const std::string st = string_at(field(j, "status", json::value_t::string, it.path),
                                     it.path + "/status");
    auto status = parse_status(st);
    if (!status) throw FormatError("unknown status \"" + st + "\"", it.path + "/status");
    n.status = *status;
    n.label = std::move(it.label);

    const std::size_t id = view.nodes.size();
    if (it.parent) view.nodes[*it.parent].children.push_back(id);
    const auto& children = field(j, "children", json::value_t::array, it.path);
    if (!children.empty() && n.status != NodeStatus::Open) {
      throw FormatError("only open nodes may have children", it.path + "/status");
    }
    view.nodes.push_back(std::move(n));

    for (std::size_t i = children.size(); i-- > 0;) {
      const std::string cpath = it.path + "/children/" + std::to_string(i);
      const json& edge = children[i];
      std::vector<std::pair<std::string, std::string>> label;
      const auto& lab = field(edge, "label", json::value_t::array, cpath);
      for (std::size_t b = 0; b < lab.size(); ++b) {
        const std::string bpath = cpath + "/label/" + std::to_string(b);
        if (!lab[b].is_array() || lab[b].size() != 2) {
          throw FormatError("binding must be a [name, term] pair", bpath);
        }
        label.emplace_back(string_at(lab[b][0], bpath + "/0"), string_at(lab[b][1], bpath + "/1"));
      }
      stack.push_back({&field(edge, "node", json::value_t::object, cpath), cpath + "/node", id,
                       std::move(label)});
    }
  }
  return view;
}

}  // namespace sldtree
