// Copyright 2026 The focusres Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "focusres/ontology.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "focusres/errors.h"

namespace focusres {
namespace {

std::string_view Trim(std::string_view s) {
  const char* ws = " \t\r\n";
  std::size_t b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

bool ValidName(std::string_view s) {
  if (s.empty()) return false;
  return std::none_of(s.begin(), s.end(), [](char c) {
    return c == ' ' || c == '\t' || c == ':' || c == ',' || c == '[' ||
           c == ']' || c == '=' || c == '#';
  });
}

[[noreturn]] void SyntaxAt(std::string_view source, int line,
                           const std::string& what) {
  throw SyntaxError(std::string(source) + ":" + std::to_string(line) + ": " +
                    what);
}

}  // namespace

Ontology Ontology::FromNodes(std::vector<OntologyNode> nodes) {
  Ontology ont;
  for (OntologyNode& n : nodes) {
    std::string name = n.name;
    if (!ont.nodes_.emplace(name, std::move(n)).second) {
      throw ValidationError("ontology: duplicate node '" + name + "'");
    }
  }

  std::vector<std::string> roots;
  for (const auto& [name, node] : ont.nodes_) {
    if (node.parents.empty()) roots.push_back(name);
    for (const std::string& p : node.parents) {
      if (!ont.nodes_.contains(p)) {
        throw ValidationError("ontology: node '" + name +
                              "' has unknown parent '" + p + "'");
      }
    }
  }
  if (roots.size() != 1 || roots.front() != kOntologyRoot) {
    std::string found;
    for (const std::string& r : roots) found += (found.empty() ? "" : ", ") + r;
    throw ValidationError(
        "ontology: expected a single root named 'entity', found roots {" +
        found + "}");
  }

  // Colour-marking depth-first search for ISA cycles.
  enum class Mark { kNone, kActive, kDone };
  std::map<std::string_view, Mark> marks;
  for (const auto& [name, node] : ont.nodes_) marks[name] = Mark::kNone;
  for (const auto& [start, unused] : ont.nodes_) {
    if (marks[start] != Mark::kNone) continue;
    // Stack of (node, next parent to visit).
    std::vector<std::pair<std::string_view, std::size_t>> stack;
    stack.emplace_back(start, 0);
    marks[start] = Mark::kActive;
    while (!stack.empty()) {
      auto& [name, next] = stack.back();
      const OntologyNode& node = ont.nodes_.find(name)->second;
      if (next == node.parents.size()) {
        marks[name] = Mark::kDone;
        stack.pop_back();
        continue;
      }
      std::string_view parent = node.parents[next++];
      Mark& m = marks[parent];
      if (m == Mark::kActive) {
        throw ValidationError("ontology: ISA cycle through '" +
                              std::string(parent) + "'");
      }
      if (m == Mark::kNone) {
        m = Mark::kActive;
        stack.emplace_back(parent, 0);
      }
    }
  }
  return ont;
}

Ontology Ontology::Parse(std::string_view text, std::string_view source) {
  std::vector<OntologyNode> nodes;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;

    std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) {
      SyntaxAt(source, line_no, "expected 'name: parents'");
    }
    OntologyNode node;
    node.name = std::string(Trim(line.substr(0, colon)));
    if (!ValidName(node.name)) {
      SyntaxAt(source, line_no, "invalid node name '" + node.name + "'");
    }

    std::string_view rest = line.substr(colon + 1);
    std::string_view props;
    if (std::size_t open = rest.find('['); open != std::string_view::npos) {
      std::size_t close = rest.find(']', open);
      if (close == std::string_view::npos || !Trim(rest.substr(close + 1)).empty()) {
        SyntaxAt(source, line_no, "property list must be '[...]' at line end");
      }
      props = rest.substr(open + 1, close - open - 1);
      rest = rest.substr(0, open);
    }

    rest = Trim(rest);
    while (!rest.empty()) {
      std::size_t comma = rest.find(',');
      std::string_view parent = Trim(rest.substr(0, comma));
      if (!ValidName(parent)) {
        SyntaxAt(source, line_no, "invalid parent name '" + std::string(parent) + "'");
      }
      node.parents.emplace_back(parent);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
      if (Trim(rest).empty()) SyntaxAt(source, line_no, "dangling ','");
    }

    std::istringstream pin{std::string(props)};
    std::string kv;
    while (pin >> kv) {
      std::size_t eq = kv.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == kv.size()) {
        SyntaxAt(source, line_no, "expected key=value, got '" + kv + "'");
      }
      std::string key = kv.substr(0, eq);
      if (!node.properties.emplace(key, kv.substr(eq + 1)).second) {
        SyntaxAt(source, line_no, "duplicate property '" + key + "'");
      }
    }
    nodes.push_back(std::move(node));
  }
  return FromNodes(std::move(nodes));
}

Ontology Ontology::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LookupError("cannot open ontology file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return Parse(buf.str(), path.string());
}

bool Ontology::Contains(std::string_view name) const {
  return nodes_.contains(name);
}

const OntologyNode& Ontology::Require(std::string_view name) const {
  auto it = nodes_.find(name);
  if (it == nodes_.end()) {
    throw LookupError("ontology has no node '" + std::string(name) + "'");
  }
  return it->second;
}

const OntologyNode& Ontology::Node(std::string_view name) const {
  return Require(name);
}

bool Ontology::Subsumes(std::string_view ancestor, std::string_view node) const {
  Require(ancestor);
  const OntologyNode& start = Require(node);
  if (ancestor == node) return true;
  std::set<std::string_view> seen{start.name};
  std::vector<const OntologyNode*> pending{&start};
  while (!pending.empty()) {
    const OntologyNode* n = pending.back();
    pending.pop_back();
    for (const std::string& p : n->parents) {
      if (p == ancestor) return true;
      if (seen.insert(p).second) pending.push_back(&nodes_.find(p)->second);
    }
  }
  return false;
}

bool Ontology::TypeConsistent(std::string_view a, std::string_view b) const {
  return Subsumes(a, b) || Subsumes(b, a);
}

std::optional<std::string> Ontology::InheritedProperty(
    std::string_view node, std::string_view property) const {
  std::vector<const OntologyNode*> level{&Require(node)};
  std::set<std::string_view> seen{level.front()->name};
  while (!level.empty()) {
    std::sort(level.begin(), level.end(),
              [](const OntologyNode* a, const OntologyNode* b) {
                return a->name < b->name;
              });
    for (const OntologyNode* n : level) {
      auto it = n->properties.find(std::string(property));
      if (it != n->properties.end()) return it->second;
    }
    std::vector<const OntologyNode*> next;
    for (const OntologyNode* n : level) {
      for (const std::string& p : n->parents) {
        if (seen.insert(p).second) next.push_back(&nodes_.find(p)->second);
      }
    }
    level = std::move(next);
  }
  return std::nullopt;
}

}  // namespace focusres
