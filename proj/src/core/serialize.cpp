#include "serialize.hpp"

#include <fstream>
#include <sstream>

#include "error.hpp"

namespace lierep {

Json weight_json(const Weight& w) { return Json(w.coords()); }

Weight weight_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorCode::invalid_argument, "weight must be a JSON array of integers");
  std::vector<Int> v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) fail(ErrorCode::invalid_argument, "weight must be a JSON array of integers");
    v.push_back(x.get<Int>());
  }
  return Weight(std::move(v));
}

Json rational_vector_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

RationalVector rational_vector_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorCode::invalid_argument, "expected an array of rationals");
  RationalVector v;
  for (const auto& x : j) {
    if (x.is_number_integer())
      v.emplace_back(x.get<long>());
    else if (x.is_string())
      v.push_back(parse_rational(x.get<std::string>()));
    else
      fail(ErrorCode::invalid_argument, "expected an integer or a \"p/q\" string");
  }
  return v;
}

Json character_json(const FormalCharacter& ch) {
  Json support = Json::array();
  for (const auto& [w, m] : ch.sorted()) support.push_back(Json::array({weight_json(w), m}));
  return Json{{"rs", ch.rs().spec().str()}, {"support", support}};
}

FormalCharacter character_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rs") || !j.contains("support"))
    fail(ErrorCode::invalid_argument, "character JSON needs \"rs\" and \"support\"");
  FormalCharacter ch(build_root_system(j.at("rs").get<std::string>()));
  for (const auto& e : j.at("support")) {
    if (!e.is_array() || e.size() != 2) fail(ErrorCode::invalid_argument, "support entries are [weight, mult]");
    Weight w = weight_from_json(e[0]);
    if (w.size() != ch.rs().rank()) fail(ErrorCode::invalid_argument, "support weight has wrong length");
    ch.add(w, e[1].get<Int>());
  }
  return ch;
}

Json decomposition_json(const DecompositionMap& d) {
  Json out = Json::object();
  for (const auto& [w, m] : d) out[w.str()] = m;
  return out;
}

Json embedding_json(const Embedding& emb) {
  return Json{{"label", emb.label()},
              {"big", emb.big()->spec().str()},
              {"small", emb.small()->spec().str()},
              {"matrix", emb.restriction()}};
}

Embedding embedding_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("big") || !j.contains("small") || !j.contains("matrix"))
    fail(ErrorCode::invalid_embedding, "embedding JSON needs \"big\", \"small\" and \"matrix\"");
  IntMatrix m;
  for (const auto& row : j.at("matrix")) m.push_back(weight_from_json(row).coords());
  return build_embedding(build_root_system(j.at("big").get<std::string>()),
                         build_root_system(j.at("small").get<std::string>()), std::move(m),
                         j.value("label", std::string("custom")));
}

Embedding load_embedding(const std::string& name) {
  const auto colon = name.find(':');
  if (colon != std::string::npos) {
    const std::string kind = name.substr(0, colon);
    if (kind == "diagonal" || kind == "torus" || kind == "maximal_torus" || kind == "levi")
      return builtin_embedding(name);
  }
  std::ifstream in(name);
  if (!in) fail(ErrorCode::io_error, "cannot open embedding file '" + name + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::invalid_argument, "bad embedding JSON in '" + name + "': " + e.what());
  }
  return embedding_from_json(j);
}

Json table_json(const BranchingTable& t) {
  Json entries = Json::array();
  for (const auto& [key, m] : t.entries)
    entries.push_back(Json::array({weight_json(key.first), weight_json(key.second), m}));
  return Json{{"embedding", {{"label", t.label}, {"matrix", t.matrix}}}, {"bound", t.bound}, {"entries", entries}};
}

std::string table_csv(const BranchingTable& t) {
  auto coords = [](const Weight& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + std::to_string(w[i]);
    return s;
  };
  std::string out = "big,small,multiplicity\n";
  for (const auto& [key, m] : t.entries) out += coords(key.first) + "," + coords(key.second) + "," + std::to_string(m) + "\n";
  return out;
}

Json cone_json(const Cone& c) {
  return Json{{"ambient_dim", c.ambient_dim}, {"dimension", cone_dimension(c)}, {"facets", c.facets},
              {"equations", c.equations},     {"rays", c.rays},                    {"lineality", c.lineality},
              {"lattice", c.lattice}};
}

Json quasi_polynomial_json(const QuasiPolynomial& qp) {
  Json pieces = Json::array();
  for (const auto& p : qp.pieces) pieces.push_back(rational_vector_json(p));
  return Json{{"period", qp.period}, {"degree", qp.degree}, {"pieces", pieces}};
}

namespace {

bool is_flat(const Json& j) {
  if (!j.is_structured()) return true;
  for (const auto& x : j)
    if (x.is_object()) return false;
  return j.dump().size() <= 100;
}

void write(std::ostringstream& os, const Json& j, int indent) {
  if (is_flat(j)) {
    os << j.dump();
    return;
  }
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const bool obj = j.is_object();
  os << (obj ? "{" : "[");
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    os << (first ? "\n" : ",\n") << pad;
    first = false;
    if (obj) os << Json(it.key()).dump() << ": ";
    write(os, it.value(), indent + 2);
  }
  if (!first) os << "\n" << std::string(static_cast<std::size_t>(indent), ' ');
  os << (obj ? "}" : "]");
}

}  // namespace

std::string dump(const Json& j) {
  std::ostringstream os;
  write(os, j, 0);
  return os.str();
}

}  // namespace lierep
