#include "equicycle/certificate.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace equicycle {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c); });
}

long parse_long(const std::string& s, long line, const char* what) {
  if (!all_digits(s)) throw ParseError(line, std::string(what) + " '" + s + "' is not a number");
  try {
    return std::stol(s);
  } catch (const std::exception&) {
    throw ParseError(line, std::string(what) + " '" + s + "' out of range");
  }
}

LabelledVertex parse_vertex(const std::string& tok, const GraphSpec& graph,
                            long line) {
  using Kind = GraphSpec::Kind;
  if (tok == "inf") {
    if (!graph.with_infinity())
      throw ParseError(line, "host " + graph.str() + " has no inf vertex");
    return LabelledVertex::infinity();
  }
  if (!tok.empty() && tok.front() == '(') {
    if (tok.back() != ')')
      throw ParseError(line, "unterminated vertex token '" + tok + "'");
    std::string body = tok.substr(1, tok.size() - 2);
    auto comma = body.find(',');
    if (comma == std::string::npos)
      throw ParseError(line, "vertex token '" + tok + "' needs (g,h)");
    long g = parse_long(body.substr(0, comma), line, "part index");
    long h = parse_long(body.substr(comma + 1), line, "label");
    if (graph.s() <= 0 || graph.ell() <= 0)
      throw ParseError(line, "host " + graph.str() + " has no blown vertices");
    if (g >= graph.s() || h >= graph.ell())
      throw ParseError(line, "vertex " + tok + " outside " + graph.str());
    return LabelledVertex::blown(g, h, graph.s(), graph.ell());
  }
  auto underscore = tok.find('_');
  if (underscore != std::string::npos) {
    if (graph.kind() != Kind::CompleteRotational)
      throw ParseError(line, "host " + graph.str() + " has no rotational vertices");
    long a = parse_long(tok.substr(0, underscore), line, "residue");
    long part = parse_long(tok.substr(underscore + 1), line, "part");
    if (a >= graph.modulus() || part > 1)
      throw ParseError(line, "vertex " + tok + " outside " + graph.str());
    return LabelledVertex::rotational(a, static_cast<int>(part), graph.modulus());
  }
  if (graph.kind() != Kind::CompletePlain &&
      graph.kind() != Kind::CompleteMinusFactor &&
      graph.kind() != Kind::CayleyCirculant)
    throw ParseError(line, "host " + graph.str() + " has no plain vertices");
  long x = parse_long(tok, line, "vertex");
  if (x >= graph.vertex_count())
    throw ParseError(line, "vertex " + tok + " outside " + graph.str());
  return LabelledVertex::plain(x);
}

std::vector<LabelledVertex> parse_vertex_list(const std::string& body,
                                              const GraphSpec& graph,
                                              long line) {
  if (body.size() < 2 || body.front() != '(' || body.back() != ')')
    throw ParseError(line, "expected a parenthesised vertex list");
  std::vector<LabelledVertex> out;
  std::istringstream tokens(body.substr(1, body.size() - 2));
  std::string tok;
  while (tokens >> tok) out.push_back(parse_vertex(tok, graph, line));
  return out;
}

Cycle parse_cycle(const std::string& body, const GraphSpec& graph, long line) {
  try {
    return Cycle(parse_vertex_list(body, graph, line));
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

std::string vertex_list_str(const Cycle& c) { return c.str(); }

std::vector<Cycle> canonical_cycles(const CycleSystem& system) {
  std::vector<Cycle> cycles;
  cycles.reserve(system.cycles.size());
  for (const Cycle& c : system.cycles) cycles.push_back(c.canonical_form());
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

struct ParsedHeader {
  std::optional<long> ell;
  std::optional<long> v;
  long v_line = 0;
  std::optional<GraphSpec> graph;
  std::string route;
  std::uint64_t seed = 0;
};

CycleSystem finish(ParsedHeader& header,
                   std::vector<std::pair<std::string, Cycle>> bases,
                   Colouring phi, std::vector<Cycle> cycles, long last_line) {
  if (!header.ell) throw ParseError(last_line, "missing ell= header");
  if (!header.v) throw ParseError(last_line, "missing v= header");
  if (!header.graph) throw ParseError(last_line, "missing graph= header");
  if (*header.v != header.graph->vertex_count())
    throw ParseError(header.v_line ? header.v_line : last_line,
                     "v=" + std::to_string(*header.v) + " but " +
                         header.graph->str() + " has " +
                         std::to_string(header.graph->vertex_count()) +
                         " vertices");
  return CycleSystem{*header.graph, *header.ell, std::move(cycles),
                     std::move(phi),
                     Provenance{header.route, *header.ell, *header.v,
                                header.seed, std::move(bases)}};
}

}  // namespace

std::string to_text(const CycleSystem& system) {
  std::ostringstream os;
  os << "ell=" << system.ell << "\n";
  os << "v=" << system.graph.vertex_count() << "\n";
  os << "graph=" << system.graph.str() << "\n";
  os << "route=" << system.provenance.route << "\n";
  os << "seed=" << system.provenance.seed << "\n";
  for (const auto& [name, base] : system.provenance.base_cycles)
    os << "base " << name << " " << vertex_list_str(base) << "\n";
  for (const auto& [vertex, colour] : system.colouring.entries())
    os << "colour " << vertex.str() << " " << colour_name(colour) << "\n";
  for (const Cycle& c : canonical_cycles(system))
    os << "cycle " << vertex_list_str(c) << "\n";
  return os.str();
}

CycleSystem from_text(const std::string& text) {
  ParsedHeader header;
  std::vector<std::pair<std::string, Cycle>> bases;
  Colouring phi;
  std::vector<Cycle> cycles;

  std::istringstream in(text);
  std::string line;
  long line_no = 0;
  auto body_graph = [&](long at) -> const GraphSpec& {
    if (!header.graph)
      throw ParseError(at, "graph= must come before vertex lines");
    return *header.graph;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line.rfind("ell=", 0) == 0) {
      header.ell = parse_long(line.substr(4), line_no, "ell");
    } else if (line.rfind("v=", 0) == 0) {
      header.v = parse_long(line.substr(2), line_no, "v");
      header.v_line = line_no;
    } else if (line.rfind("graph=", 0) == 0) {
      try {
        header.graph = GraphSpec::parse(line.substr(6));
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
    } else if (line.rfind("route=", 0) == 0) {
      header.route = line.substr(6);
    } else if (line.rfind("seed=", 0) == 0) {
      header.seed = static_cast<std::uint64_t>(
          parse_long(line.substr(5), line_no, "seed"));
    } else if (line.rfind("base ", 0) == 0) {
      auto space = line.find(' ', 5);
      if (space == std::string::npos)
        throw ParseError(line_no, "base line needs a name and a vertex list");
      bases.emplace_back(line.substr(5, space - 5),
                         parse_cycle(line.substr(space + 1),
                                     body_graph(line_no), line_no));
    } else if (line.rfind("colour ", 0) == 0) {
      auto space = line.rfind(' ');
      if (space == std::string::npos || space <= 7)
        throw ParseError(line_no, "colour line needs a vertex and a colour");
      LabelledVertex vertex =
          parse_vertex(line.substr(7, space - 7), body_graph(line_no), line_no);
      std::string name = line.substr(space + 1);
      Colour colour;
      if (name == "red") colour = Colour::Red;
      else if (name == "blue") colour = Colour::Blue;
      else throw ParseError(line_no, "unknown colour '" + name + "'");
      if (phi.defined(vertex))
        throw ParseError(line_no, "vertex " + vertex.str() + " coloured twice");
      phi.set(vertex, colour);
    } else if (line.rfind("cycle ", 0) == 0) {
      cycles.push_back(parse_cycle(line.substr(6), body_graph(line_no), line_no));
    } else {
      throw ParseError(line_no, "unrecognised line '" + line + "'");
    }
  }
  return finish(header, std::move(bases), std::move(phi), std::move(cycles),
                line_no);
}

std::string to_json(const CycleSystem& system) {
  nlohmann::json j;
  j["ell"] = system.ell;
  j["v"] = system.graph.vertex_count();
  j["graph"] = system.graph.str();
  j["route"] = system.provenance.route;
  j["seed"] = system.provenance.seed;
  j["bases"] = nlohmann::json::array();
  for (const auto& [name, base] : system.provenance.base_cycles) {
    nlohmann::json entry;
    entry["name"] = name;
    entry["vertices"] = nlohmann::json::array();
    for (const LabelledVertex& v : base.vertices())
      entry["vertices"].push_back(v.str());
    j["bases"].push_back(entry);
  }
  j["colouring"] = nlohmann::json::array();
  for (const auto& [vertex, colour] : system.colouring.entries())
    j["colouring"].push_back({vertex.str(), colour_name(colour)});
  j["cycles"] = nlohmann::json::array();
  for (const Cycle& c : canonical_cycles(system)) {
    nlohmann::json cyc = nlohmann::json::array();
    for (const LabelledVertex& v : c.vertices()) cyc.push_back(v.str());
    j["cycles"].push_back(cyc);
  }
  return j.dump(2) + "\n";
}

CycleSystem from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, e.what());
  }
  auto fail = [](const std::string& msg) -> ParseError {
    return ParseError(0, msg);
  };
  try {
    ParsedHeader header;
    header.ell = j.at("ell").get<long>();
    header.v = j.at("v").get<long>();
    header.graph = GraphSpec::parse(j.at("graph").get<std::string>());
    if (j.contains("route")) header.route = j.at("route").get<std::string>();
    if (j.contains("seed")) header.seed = j.at("seed").get<std::uint64_t>();

    auto read_cycle = [&](const nlohmann::json& tokens) {
      std::vector<LabelledVertex> vs;
      for (const auto& tok : tokens)
        vs.push_back(parse_vertex(tok.get<std::string>(), *header.graph, 0));
      return Cycle(std::move(vs));
    };

    std::vector<std::pair<std::string, Cycle>> bases;
    if (j.contains("bases"))
      for (const auto& entry : j.at("bases"))
        bases.emplace_back(entry.at("name").get<std::string>(),
                           read_cycle(entry.at("vertices")));
    Colouring phi;
    for (const auto& pair : j.at("colouring")) {
      LabelledVertex vertex =
          parse_vertex(pair.at(0).get<std::string>(), *header.graph, 0);
      std::string name = pair.at(1).get<std::string>();
      if (name != "red" && name != "blue")
        throw fail("unknown colour '" + name + "'");
      if (phi.defined(vertex))
        throw fail("vertex " + vertex.str() + " coloured twice");
      phi.set(vertex, name == "red" ? Colour::Red : Colour::Blue);
    }
    std::vector<Cycle> cycles;
    for (const auto& cyc : j.at("cycles")) cycles.push_back(read_cycle(cyc));
    return finish(header, std::move(bases), std::move(phi), std::move(cycles),
                  0);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

}  // namespace equicycle
