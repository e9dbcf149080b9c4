#pragma once

// Text rendering and canonical serialization of search trees.
//
// Both work on TreeView, a render-level copy of a SearchTree that keeps only
// what is drawn: goal texts, statuses, edge labels and child order. A view
// can be rebuilt from canonical text, so files written by `serialize` can be
// re-rendered without the program that produced them.
//
// Canonical format (UTF-8 JSON, fields always in this order, no whitespace):
//
//   {"format":"sldtree","version":1,"query":"<text>","truncated":<bool>,
//    "root":<node>}
//   <node>  = {"goals":["<goal>",...],"status":"<status>","children":[<edge>,...]}
//   <edge>  = {"label":[["<var>","<term>"],...],"node":<node>}
//   <status> is one of open, success, fail, pruned, truncated.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sldtree/engine.hpp"

namespace sldtree {

struct TreeView {
  struct Node {
    std::vector<std::string> goals;
    NodeStatus status = NodeStatus::Open;
    std::vector<std::pair<std::string, std::string>> label;  // edge from parent
    std::vector<std::size_t> children;

    bool operator==(const Node&) const = default;
  };
  std::vector<Node> nodes;  // root first; children have larger ids than parents
  std::string query;
  bool truncated = false;

  bool operator==(const TreeView&) const = default;
};

TreeView view_of(const SearchTree& tree);

struct RenderOptions {
  int max_width = 120;  // >= 40
  bool show_boxes = true;
  std::string success_glyph = "[]";
  std::string fail_glyph = "x";
  std::string pruned_glyph = "X";
  std::string truncated_glyph = "...";
};

/// Draws the tree top-down with '/', '|' and '\' branches and the edge
/// bindings beside each branch. Trees wider than max_width are drawn as an
/// indented outline instead; nothing is ever clipped.
std::string render_text(const TreeView& tree, const RenderOptions& opts = {});
std::string render_text(const SearchTree& tree, const RenderOptions& opts = {});

/// The indented outline form, regardless of width.
std::string render_outline(const TreeView& tree, const RenderOptions& opts = {});

class FormatError : public std::runtime_error {
public:
  FormatError(const std::string& message, std::string where)
      : std::runtime_error("format error at " + where + ": " + message), where_(std::move(where)) {}
  /// Byte offset ("byte 17") or JSON pointer of the offending element.
  const std::string& where() const { return where_; }

private:
  std::string where_;
};

std::string serialize(const TreeView& tree);
std::string serialize(const SearchTree& tree);

/// Reads one canonical document. Text after the document (such as the answer
/// list the CLI prints) is ignored.
TreeView deserialize(std::string_view text);

}  // namespace sldtree
