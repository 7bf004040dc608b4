#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include "weyl/family.hpp"

namespace weyl {

struct GraphFile {
  std::variant<BiGraph, SimpleGraph> graph;
  std::optional<FamilySpec> spec;

  bool bipartite() const { return std::holds_alternative<BiGraph>(graph); }
};

void write_graph(std::ostream& os, const BiGraph& G, const std::optional<FamilySpec>& spec = {});
void write_graph(std::ostream& os, const SimpleGraph& G, const std::optional<FamilySpec>& spec = {});

/// Parses WBG1 or WSG1 text; throws ParseError on malformed input.
GraphFile read_graph(std::istream& is);
GraphFile read_graph_file(const std::string& path);

}  // namespace weyl
