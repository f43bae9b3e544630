#include "polya/json_io.hpp"

#include "polya/error.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace polya {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const Json& field(const Json& doc, const char* key, const std::string& where) {
  if (!doc.is_object() || !doc.contains(key)) parse_error(where + ": missing field '" + key + "'");
  return doc.at(key);
}

Rational rational_from(const Json& value, const std::string& where) {
  if (value.is_string()) return parse_rational(value.get<std::string>(), where);
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  parse_error(where + ": expected a rational string \"p/q\"");
}

std::int64_t integer_from(const Json& value, const std::string& where) {
  if (value.is_number_integer()) return value.get<std::int64_t>();
  if (value.is_string()) {
    const Rational r = parse_rational(value.get<std::string>(), where);
    if (denominator(r) == 1) return numerator(r).convert_to<std::int64_t>();
  }
  parse_error(where + ": expected an integer");
}

bool default_labels(const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] != std::to_string(i)) return false;
  return true;
}

}  // namespace

Json urn_to_json(const PolyaUrn& urn) {
  const std::size_t q = urn.colour_count();
  Json doc;
  doc["colours"] = Json::array();
  doc["activities"] = Json::array();
  doc["initial"] = Json::array();
  doc["replacements"] = Json::array();
  for (std::size_t i = 0; i < q; ++i) {
    doc["colours"].push_back(urn.label(i));
    doc["activities"].push_back(to_string(urn.activity(i)));
    doc["initial"].push_back(urn.initial()[i]);
    Json atoms = Json::array();
    for (const auto& atom : urn.measure(i).atoms()) {
      Json delta = Json::object();
      for (const auto& [j, x] : atom.delta.entries()) delta[urn.label(j)] = x;
      atoms.push_back(Json{{"prob", to_string(atom.prob)}, {"delta", delta}});
    }
    doc["replacements"].push_back(std::move(atoms));
  }
  return doc;
}

PolyaUrn urn_from_json(const Json& doc) {
  if (!doc.is_object()) parse_error("urn document must be a JSON object");
  const Json& colours = field(doc, "colours", "urn");
  const Json& activities = field(doc, "activities", "urn");
  const Json& initial = field(doc, "initial", "urn");
  const Json& replacements = field(doc, "replacements", "urn");
  if (!colours.is_array() || !activities.is_array() || !initial.is_array() || !replacements.is_array())
    parse_error("urn: colours, activities, initial and replacements must be arrays");
  const std::size_t q = colours.size();
  if (activities.size() != q || initial.size() != q || replacements.size() != q)
    throw Error(ErrorKind::LengthMismatch,
                "urn: activities, initial and replacements must each list " + std::to_string(q) +
                    " colours");

  std::vector<std::string> names;
  std::map<std::string, ColourId> by_name;
  for (std::size_t i = 0; i < q; ++i) {
    if (!colours[i].is_string()) parse_error("colours[" + std::to_string(i) + "] must be a string");
    names.push_back(colours[i].get<std::string>());
    if (!by_name.emplace(names.back(), i).second)
      parse_error("colours[" + std::to_string(i) + "]: duplicate colour '" + names.back() + "'");
  }
  auto colour_index = [&](const std::string& key, const std::string& where) -> ColourId {
    if (auto it = by_name.find(key); it != by_name.end()) return it->second;
    parse_error(where + ": unknown colour '" + key + "'");
  };

  std::vector<ReplacementMeasure> measures;
  std::vector<Rational> acts;
  std::vector<std::int64_t> init;
  for (std::size_t i = 0; i < q; ++i) {
    const std::string colour = "colour " + std::to_string(i) + " ('" + names[i] + "')";
    acts.push_back(rational_from(activities[i], "activities[" + std::to_string(i) + "]"));
    init.push_back(integer_from(initial[i], "initial[" + std::to_string(i) + "]"));
    if (!replacements[i].is_array()) parse_error("replacements[" + std::to_string(i) + "] must be an array");
    std::vector<Atom> atoms;
    for (std::size_t k = 0; k < replacements[i].size(); ++k) {
      const std::string where = "replacements[" + std::to_string(i) + "][" + std::to_string(k) + "]";
      const Json& atom = replacements[i][k];
      const Rational prob = rational_from(field(atom, "prob", where), where + ".prob");
      const Json& delta = field(atom, "delta", where);
      if (!delta.is_object()) parse_error(where + ".delta must be an object");
      std::vector<IncrementVector::Entry> entries;
      for (const auto& [key, value] : delta.items())
        entries.emplace_back(colour_index(key, where + ".delta"),
                             integer_from(value, where + ".delta." + key));
      atoms.push_back(Atom{IncrementVector(std::move(entries)), prob});
    }
    try {
      measures.push_back(atoms.empty() ? ReplacementMeasure::dirac()
                                       : ReplacementMeasure::from_atoms(std::move(atoms)));
    } catch (const Error& e) {
      throw Error(e.kind(), colour + ": " + e.what());
    }
  }
  return make_urn(q, std::move(measures), std::move(acts), std::move(init),
                  default_labels(names) ? std::vector<std::string>{} : names);
}

Json document_to_json(const UrnDocument& doc) {
  Json out = urn_to_json(doc.urn);
  if (doc.factors)
    out["factors"] = Json::array({urn_to_json(doc.factors->first), urn_to_json(doc.factors->second)});
  return out;
}

UrnDocument document_from_json(const Json& doc) {
  UrnDocument out{urn_from_json(doc), std::nullopt};
  if (doc.contains("factors")) {
    const Json& f = doc.at("factors");
    if (!f.is_array() || f.size() != 2) parse_error("factors must be an array of two urns");
    out.factors.emplace(urn_from_json(f[0]), urn_from_json(f[1]));
  }
  return out;
}

UrnDocument read_urn_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open urn file " + path.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    parse_error(path.string() + ": " + e.what());
  }
  return document_from_json(doc);
}

void write_json_file(const std::filesystem::path& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
  out << doc.dump(2) << '\n';
}

std::string urn_hash(const PolyaUrn& urn) {
  const std::string text = urn_to_json(urn).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json matrix_to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RationalMatrix matrix_from_json(const Json& doc) {
  if (!doc.is_array()) parse_error("matrix must be an array of rows");
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    if (!doc[i].is_array()) parse_error("matrix row " + std::to_string(i) + " must be an array");
    rows.emplace_back();
    for (std::size_t j = 0; j < doc[i].size(); ++j)
      rows.back().push_back(
          rational_from(doc[i][j], "matrix[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
  }
  return RationalMatrix::from_rows(rows);
}

Json witness_to_json(const PermutationWitness& w) { return Json(w.perm); }
Json bijection_to_json(const ColourBijection& b) { return Json(b.forward); }

Json spectrum_to_json(const SpectrumMultiset& m) {
  Json out = Json::array();
  for (const auto& e : m.elements())
    out.push_back(Json{{"re", e.value.real()}, {"im", e.value.imag()}, {"mult", e.multiplicity}});
  return out;
}

SpectrumMultiset spectrum_from_json(const Json& doc, double tol) {
  if (!doc.is_array()) parse_error("spectrum must be an array");
  std::vector<SpectrumElement> elements;
  for (const auto& e : doc) {
    elements.push_back({{field(e, "re", "spectrum").get<double>(), field(e, "im", "spectrum").get<double>()},
                        field(e, "mult", "spectrum").get<std::size_t>()});
  }
  return SpectrumMultiset::from_elements(elements, tol);
}

Json partition_to_json(const DominancePartition& p) {
  Json order = Json::array();
  for (std::size_t s = 0; s < p.classes.size(); ++s)
    for (std::size_t t = 0; t < p.classes.size(); ++t)
      if (s != t && p.dominates[s][t]) order.push_back(Json::array({s, t}));
  return Json{{"classes", p.classes},
              {"dominates", order},
              {"dominating_class", p.dominating_class ? Json(*p.dominating_class) : Json(nullptr)},
              {"irreducible", p.irreducible()}};
}

Json assumptions_to_json(const AssumptionReport& r) {
  Json out;
  for (int k = 1; k <= 6; ++k)
    out["A" + std::to_string(k)] = Json{{"holds", r[k].holds}, {"detail", r[k].detail}};
  out["lambda1"] = r.lambda1;
  out["lambda2_real"] = r.lambda2_real ? Json(*r.lambda2_real) : Json(nullptr);
  out["multiplicity_lambda1"] = r.multiplicity_lambda1;
  Json moments = Json::array();
  for (const auto& m : r.second_moments) moments.push_back(matrix_to_json(m));
  out["second_moments"] = std::move(moments);
  return out;
}

Json limit_to_json(const LimitPrediction& p) {
  return Json{{"lambda1_sum", p.lambda1_sum}, {"v1", p.v1},       {"v1_prime", p.v1_prime},
              {"v", p.v},                     {"S", p.S},         {"limit", p.limit}};
}

Json law_report_to_json(const LawReport& r) {
  Json out = Json::object();
  for (const auto& law : r.laws) {
    Json counterexample = nullptr;
    if (!law.pass) {
      counterexample = Json::array();
      for (const auto& u : law.urn_counterexample) counterexample.push_back(urn_to_json(u));
      for (const auto& m : law.matrix_counterexample) counterexample.push_back(matrix_to_json(m));
    }
    out[law.name] = Json{{"pass", law.pass}, {"trials", law.trials}, {"counterexample", counterexample}};
    if (!law.detail.empty()) out[law.name]["detail"] = law.detail;
  }
  return out;
}

Json graph_to_json(const SimpleGraph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
  return Json{{"vertices", g.vertex_count()}, {"edges", edges}};
}

SimpleGraph graph_from_json(const Json& doc) {
  const Json& vertices = field(doc, "vertices", "graph");
  if (!vertices.is_number_unsigned()) parse_error("graph.vertices must be a nonnegative integer");
  const Json& edges = field(doc, "edges", "graph");
  if (!edges.is_array()) parse_error("graph.edges must be an array");
  std::vector<SimpleGraph::Edge> list;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const Json& e = edges[k];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
      parse_error("graph.edges[" + std::to_string(k) + "] must be a pair of vertex indices");
    list.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
  }
  return SimpleGraph(vertices.get<std::size_t>(), list);
}

std::string trace_to_jsonl(const SimulationTrace& trace, const std::string& hash) {
  std::ostringstream out;
  out << Json{{"seed", trace.seed},  {"stream", trace.stream}, {"rng", trace.rng_name},
              {"urn_hash", hash},    {"stride", trace.stride}}
             .dump()
      << '\n';
  for (const auto& s : trace.states) out << Json{{"step", s.step}, {"counts", s.counts}}.dump() << '\n';
  return out.str();
}

}  // namespace polya
