#include "srdg/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "srdg/errors.hpp"

namespace srdg {

using nlohmann::json;

namespace {

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed document: ") + e.what());
  }
}

const json& field(const json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name)) throw InvalidInput(std::string("missing field '") + name + "'");
  return obj.at(name);
}

int int_field(const json& obj, const char* name) {
  const json& v = field(obj, name);
  if (!v.is_number_integer()) throw InvalidInput(std::string("field '") + name + "' must be an integer");
  return v.get<int>();
}

std::string string_field(const json& obj, const char* name) {
  const json& v = field(obj, name);
  if (!v.is_string()) throw InvalidInput(std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const json doc = parse_document(text);
  const Time tau = int_field(doc, "tau");

  std::vector<std::string> ids;
  std::vector<int> caps;
  const json& vertices = field(doc, "vertices");
  if (!vertices.is_array()) throw InvalidInput("'vertices' must be a list");
  for (const json& v : vertices) {
    ids.push_back(string_field(v, "id"));
    caps.push_back(int_field(v, "capacity"));
  }
  std::unordered_map<std::string, VertexIndex> index;
  for (VertexIndex v = 0; v < ids.size(); ++v) index.emplace(ids[v], v);
  auto lookup = [&](const std::string& id) {
    auto it = index.find(id);
    if (it == index.end()) throw InvalidInput("unknown vertex '" + id + "'");
    return it->second;
  };

  std::vector<Connection> connections;
  const json& cons = field(doc, "connections");
  if (!cons.is_array()) throw InvalidInput("'connections' must be a list");
  for (const json& c : cons) {
    Connection con;
    con.tail = lookup(string_field(c, "tail"));
    con.head = lookup(string_field(c, "head"));
    const std::string kind = string_field(c, "kind");
    if (kind == "edge") {
      con.kind = ConnectionKind::edge;
    } else if (kind == "arc") {
      con.kind = ConnectionKind::arc;
    } else {
      throw InvalidInput("unknown connection kind '" + kind + "'");
    }
    con.traversal_time = int_field(c, "theta");
    con.deadline = int_field(c, "deadline");
    connections.push_back(con);
  }
  DecayingGraph graph(std::move(ids), std::move(caps), std::move(connections), tau);

  std::vector<std::vector<VertexIndex>> paths;
  if (doc.contains("paths")) {
    const json& ps = doc.at("paths");
    if (!ps.is_array()) throw InvalidInput("'paths' must be a list");
    for (const json& p : ps) {
      if (!p.is_array()) throw InvalidInput("each path must be a list of vertex ids");
      std::vector<VertexIndex> seq;
      for (const json& v : p) {
        if (!v.is_string()) throw InvalidInput("path entries must be vertex ids");
        seq.push_back(lookup(v.get<std::string>()));
      }
      paths.push_back(std::move(seq));
    }
  }
  return Instance(std::move(graph), paths);
}

std::string instance_to_json(const Instance& instance) {
  const auto& g = instance.graph();
  json doc;
  doc["tau"] = g.lifetime();
  json vertices = json::array();
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) vertices.push_back({{"id", g.id(v)}, {"capacity", g.capacity(v)}});
  doc["vertices"] = std::move(vertices);
  json cons = json::array();
  for (const Connection& c : g.connections()) {
    cons.push_back({{"tail", g.id(c.tail)},
                    {"head", g.id(c.head)},
                    {"kind", c.kind == ConnectionKind::edge ? "edge" : "arc"},
                    {"theta", c.traversal_time},
                    {"deadline", c.deadline}});
  }
  doc["connections"] = std::move(cons);
  json paths = json::array();
  for (const RoutePath& p : instance.paths()) {
    json seq = json::array();
    for (VertexIndex v : p.vertices()) seq.push_back(g.id(v));
    paths.push_back(std::move(seq));
  }
  doc["paths"] = std::move(paths);
  return doc.dump(1) + "\n";
}

Temporalization parse_schedule(std::string_view text) {
  const json doc = parse_document(text);
  Temporalization schedule;
  schedule.horizon = int_field(doc, "horizon");
  const json& deps = field(doc, "departures");
  if (!deps.is_array()) throw InvalidInput("'departures' must be a list");
  for (const json& p : deps) {
    if (!p.is_array()) throw InvalidInput("each departure entry must be a list");
    std::vector<Time> times;
    for (const json& t : p) {
      if (!t.is_number_integer()) throw InvalidInput("departure times must be integers");
      times.push_back(t.get<Time>());
    }
    schedule.departures.push_back(std::move(times));
  }
  return schedule;
}

std::string schedule_to_json(const Temporalization& schedule) {
  json doc;
  doc["horizon"] = schedule.horizon;
  doc["departures"] = schedule.departures;
  return doc.dump() + "\n";
}

std::string describe(const Instance& instance, const Violation& violation) {
  const auto& g = instance.graph();
  std::ostringstream out;
  out << to_string(violation.kind) << ":";
  out << (violation.paths.size() == 1 ? " path" : " paths");
  for (PathIndex p : violation.paths) out << ' ' << p;
  if (violation.vertex) out << " vertex " << g.id(*violation.vertex);
  if (violation.connection) {
    const Connection& c = g.connection(*violation.connection);
    out << (c.kind == ConnectionKind::edge ? " edge {" : " arc (") << g.id(c.tail) << ','
        << g.id(c.head) << (c.kind == ConnectionKind::edge ? '}' : ')');
  }
  if (violation.times.first == violation.times.last) {
    out << " at t=" << violation.times.first;
  } else {
    out << " at t=" << violation.times.first << ".." << violation.times.last;
  }
  if (!violation.departures.empty()) {
    out << " departures";
    for (Time t : violation.departures) out << ' ' << t;
  }
  return out.str();
}

std::string diagnosis_to_json(const Instance& instance, const Diagnosis& diagnosis) {
  const auto& g = instance.graph();
  json doc;
  doc["valid"] = diagnosis.valid();
  json list = json::array();
  for (const Violation& v : diagnosis.violations) {
    json item;
    item["kind"] = to_string(v.kind);
    item["paths"] = v.paths;
    if (v.vertex) item["vertex"] = g.id(*v.vertex);
    if (v.connection) {
      const Connection& c = g.connection(*v.connection);
      item["connection"] = {{"tail", g.id(c.tail)},
                            {"head", g.id(c.head)},
                            {"kind", c.kind == ConnectionKind::edge ? "edge" : "arc"}};
    }
    item["times"] = {v.times.first, v.times.last};
    if (!v.departures.empty()) item["departures"] = v.departures;
    list.push_back(std::move(item));
  }
  doc["violations"] = std::move(list);
  return doc.dump(1) + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << text;
}

}  // namespace srdg
