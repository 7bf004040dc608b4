#include "weyl/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "weyl/error.hpp"

namespace weyl {

namespace {

void write_rows(std::ostream& os, const std::vector<Bitset>& rows, std::size_t width) {
  std::string line(width, '0');
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < width; ++c) line[c] = r.test(c) ? '1' : '0';
    os << line << '\n';
  }
}

Bitset parse_row(const std::string& line, std::size_t width, std::size_t lineno) {
  if (line.size() != width)
    throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": expected " +
                                           std::to_string(width) + " characters");
  Bitset r(width);
  for (std::size_t c = 0; c < width; ++c) {
    if (line[c] == '1')
      r.set(c);
    else if (line[c] != '0')
      throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": bad character");
  }
  return r;
}

}  // namespace

void write_graph(std::ostream& os, const BiGraph& G, const std::optional<FamilySpec>& spec) {
  os << "WBG1 " << G.size_a() << ' ' << G.size_b() << '\n';
  write_rows(os, G.rows(Side::A), G.size_b());
  if (spec) os << "# " << spec->metadata() << '\n';
}

void write_graph(std::ostream& os, const SimpleGraph& G, const std::optional<FamilySpec>& spec) {
  os << "WSG1 " << G.size() << '\n';
  std::vector<Bitset> rows;
  for (std::size_t u = 0; u < G.size(); ++u) rows.push_back(G.nbrs(u));
  write_rows(os, rows, G.size());
  if (spec) os << "# " << spec->metadata() << '\n';
}

GraphFile read_graph(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw Error(ErrorKind::ParseError, "empty input");
  if (!header.empty() && header.back() == '\r') header.pop_back();
  std::istringstream hs(header);
  std::string magic;
  long long na = -1, nb = -1;
  hs >> magic;
  const bool bip = magic == "WBG1";
  if (!bip && magic != "WSG1") throw Error(ErrorKind::ParseError, "unknown header '" + header + "'");
  hs >> na;
  if (bip) hs >> nb;
  std::string rest;
  if (!hs || na < 0 || (bip && nb < 0) || (hs >> rest))
    throw Error(ErrorKind::ParseError, "bad header '" + header + "'");
  const std::size_t width = bip ? nb : na;

  std::vector<Bitset> rows;
  GraphFile out;
  std::string line;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line[0] == '#') {
      if (rows.size() != static_cast<std::size_t>(na))
        throw Error(ErrorKind::ParseError, "metadata before end of adjacency rows");
      auto body = line.substr(1);
      if (body.find("geometry=") != std::string::npos) out.spec = FamilySpec::from_metadata(body);
      continue;
    }
    if (rows.size() == static_cast<std::size_t>(na)) {
      if (line.empty()) continue;
      throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": extra row");
    }
    rows.push_back(parse_row(line, width, lineno));
  }
  if (rows.size() != static_cast<std::size_t>(na))
    throw Error(ErrorKind::ParseError, "expected " + std::to_string(na) + " rows, got " +
                                           std::to_string(rows.size()));

  if (bip) {
    out.graph = BiGraph(std::move(rows), width);
  } else {
    SimpleGraph G(width);
    for (std::size_t u = 0; u < width; ++u) {
      if (rows[u].test(u)) throw Error(ErrorKind::ParseError, "loop at vertex " + std::to_string(u));
      for (std::size_t v = 0; v < width; ++v)
        if (rows[u].test(v) != rows[v].test(u)) throw Error(ErrorKind::ParseError, "asymmetric adjacency");
      rows[u].for_each([&](std::size_t v) { G.add_edge(u, v); });
    }
    out.graph = std::move(G);
  }
  return out;
}

GraphFile read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  return read_graph(in);
}

}  // namespace weyl
