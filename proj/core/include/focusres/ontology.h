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

// A small multi-parent ISA hierarchy of semantic types with inheritable
// property values. The graph has a single root named "entity".
//
// File format, one node per line, order-independent:
//
//   # comment
//   entity:
//   animate-entity: entity [animate=true]
//   crew: person, group

#ifndef FOCUSRES_ONTOLOGY_H_
#define FOCUSRES_ONTOLOGY_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace focusres {

inline constexpr std::string_view kOntologyRoot = "entity";

struct OntologyNode {
  std::string name;
  std::vector<std::string> parents;
  std::map<std::string, std::string> properties;

  friend bool operator==(const OntologyNode&, const OntologyNode&) = default;
};

class Ontology {
 public:
  // Builds and validates an ontology. Throws ValidationError on dangling
  // parents, cycles, duplicate names, or a root other than "entity".
  static Ontology FromNodes(std::vector<OntologyNode> nodes);

  // Parses the text format. `source` names the input in diagnostics.
  // Throws SyntaxError (with line numbers) or ValidationError.
  static Ontology Parse(std::string_view text,
                        std::string_view source = "<ontology>");
  static Ontology Load(const std::filesystem::path& path);

  bool Contains(std::string_view name) const;
  const OntologyNode& Node(std::string_view name) const;
  const std::map<std::string, OntologyNode, std::less<>>& nodes() const {
    return nodes_;
  }

  // True iff `ancestor` == `node` or `ancestor` is reachable from `node` by
  // parent edges. Throws LookupError for unknown names.
  bool Subsumes(std::string_view ancestor, std::string_view node) const;

  // Either type subsumes the other.
  bool TypeConsistent(std::string_view a, std::string_view b) const;

  // The value of `property` on `node` or its nearest ancestor (breadth-first
  // over parents; at equal depth the lexicographically smallest ancestor
  // name wins).
  std::optional<std::string> InheritedProperty(std::string_view node,
                                               std::string_view property) const;

 private:
  Ontology() = default;
  const OntologyNode& Require(std::string_view name) const;

  std::map<std::string, OntologyNode, std::less<>> nodes_;
};

}  // namespace focusres

#endif  // FOCUSRES_ONTOLOGY_H_
