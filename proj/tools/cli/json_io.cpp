#include "json_io.hpp"

#include "motive_forge/error.hpp"

namespace motive_forge::io {

namespace {

template <class Terms>
json terms_json(const Terms& terms) {
  json out = json::array();
  for (const auto& [key, mult] : terms)
    out.push_back({{"atom", key.atom.is_unit() ? "UNIT" : key.atom.name}, {"p", key.twist}, {"q", key.shift}, {"mult", mult}});
  return out;
}

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::kParseError, what); }

}  // namespace

json to_json(const TateExpr& e) { return terms_json(e.terms()); }
json to_json(const TateLedger& e) { return terms_json(e.terms()); }

json to_json(const K0Class& c) {
  json out = json::object();
  for (const auto& [mono, coeff] : c.terms()) out[mono.to_string()] = coeff;
  return out;
}

json to_json(const CellularVariety& x) {
  return {{"name", x.name}, {"cells", x.cells.dims()}, {"dim", x.dim}, {"proper", x.proper},
          {"functor", std::string(functor_name(x.functor))}};
}

json subset_json(std::uint32_t mask) {
  json out = json::array();
  for (int i = 0; i < 32; ++i)
    if ((mask >> i) & 1u) out.push_back(i + 1);
  return out;
}

namespace {

json term_json(const MotiveTerm& m) {
  return {{"label", m.label}, {"class", to_json(m.cls)}, {"text", m.cls.to_string()},
          {"functor", std::string(functor_name(m.functor))}};
}

}  // namespace

json to_json(const TriangleRecord& t) {
  return {{"left", term_json(t.left)}, {"middle", term_json(t.middle)}, {"right", term_json(t.right)},
          {"provenance", t.provenance}, {"splitVerified", t.split_verified}};
}

json to_json(const FiltrationTree& tree) {
  json nodes = json::array();
  for (const FiltrationNode& n : tree.nodes) {
    json children = json::array();
    for (std::uint32_t c : n.children) children.push_back(subset_json(c));
    nodes.push_back({{"face", subset_json(n.face)}, {"level", n.level}, {"triangle", to_json(n.triangle)},
                     {"splitVerified", n.triangle.split_verified}, {"children", children}});
  }
  json levels = json::array();
  for (const TriangleRecord& t : tree.levels) levels.push_back(to_json(t));
  json negative = json::array();
  for (std::uint32_t f : tree.negative_faces) negative.push_back(subset_json(f));
  return {{"nodes", nodes}, {"levels", levels}, {"rootOpenClass", to_json(tree.root_open_class)},
          {"rootOpenText", tree.root_open_class.to_string()}, {"negativeFaces", negative}};
}

json to_json(const MixedTateCertificate& cert) {
  json levels = json::array();
  for (const auto& level : cert.levels) {
    json members = json::array();
    for (std::uint32_t m : level) members.push_back(subset_json(m));
    levels.push_back(members);
  }
  return {{"certified", true}, {"depth", cert.depth()}, {"checkedNodes", cert.checked_nodes}, {"levels", levels}};
}

TateExpr tate_from_json(const json& j) {
  if (!j.is_array()) bad("a Tate expression must be a list of {atom, p, q, mult}");
  TateExpr out;
  for (const json& t : j) {
    if (!t.is_object() || !t.contains("p") || !t.contains("q")) bad("Tate term needs p and q");
    const std::string atom = t.value("atom", std::string("UNIT"));
    const int p = t.at("p").get<int>();
    const int q = t.at("q").get<int>();
    const std::int64_t mult = t.value("mult", std::int64_t{1});
    if (mult < 0) bad("Tate multiplicities must be non-negative");
    if (mult == 0) continue;
    out = sum(out, atom == "UNIT" ? TateExpr::tate(p, q, mult) : TateExpr::opaque(atom, p, q, mult));
  }
  return out;
}

TateExpr class_from_json(const json& j) {
  if (j.is_array()) return tate_from_json(j);
  if (!j.is_string()) bad("a class must be a string or a list of Tate terms");
  const K0Class k = parse_k0(j.get<std::string>());
  TateExpr out;
  for (const auto& [mono, coeff] : k.terms()) {
    if (coeff < 0) bad("class '" + j.get<std::string>() + "' has a negative coefficient");
    if (mono.symbols.empty()) {
      out = sum(out, TateExpr::tate(mono.lefschetz, 2 * mono.lefschetz, coeff));
    } else if (mono.symbols.size() == 1 && mono.symbols[0].second == 1) {
      out = sum(out, TateExpr::opaque(mono.symbols[0].first, mono.lefschetz, 2 * mono.lefschetz, coeff));
    } else {
      bad("class '" + j.get<std::string>() + "' multiplies opaque symbols");
    }
  }
  return out;
}

namespace {

ConfigNode node_from_json(const json& j, const std::string& fallback_name) {
  if (!j.is_object() || !j.contains("class") || !j.contains("dim")) bad("configuration node needs class and dim");
  ConfigNode n;
  n.name = j.value("name", fallback_name);
  n.cls = class_from_json(j.at("class"));
  n.dim = j.at("dim").get<int>();
  return n;
}

}  // namespace

Configuration config_from_json(const json& j) {
  if (!j.is_object() || !j.contains("components")) bad("configuration needs a components list");
  Configuration c;
  int idx = 0;
  for (const json& comp : j.at("components")) c.components.push_back(node_from_json(comp, "X" + std::to_string(++idx)));
  if (c.size() > kMaxComponents) bad("configuration has more than " + std::to_string(kMaxComponents) + " components");
  for (const json& inter : j.value("intersections", json::array())) {
    if (!inter.contains("subset") || !inter.at("subset").is_array()) bad("intersection needs a subset list");
    std::uint32_t mask = 0;
    for (const json& i : inter.at("subset")) {
      const int k = i.get<int>();
      if (k < 1 || k > c.size()) bad("intersection index " + std::to_string(k) + " is out of range");
      mask |= 1u << (k - 1);
    }
    if (c.intersections.count(mask)) bad("intersection listed twice");
    if (inter.contains("class") && inter.at("class") == "empty") {
      c.intersections.emplace(mask, std::nullopt);
    } else {
      c.intersections.emplace(mask, node_from_json(inter, "D" + subset_json(mask).dump()));
    }
  }
  return c;
}

json to_json(const Configuration& c) {
  json comps = json::array();
  for (const ConfigNode& n : c.components) comps.push_back({{"name", n.name}, {"class", to_json(n.cls)}, {"dim", n.dim}});
  json inters = json::array();
  for (const auto& [mask, node] : c.intersections) {
    if (node)
      inters.push_back({{"subset", subset_json(mask)}, {"name", node->name}, {"class", to_json(node->cls)}, {"dim", node->dim}});
    else
      inters.push_back({{"subset", subset_json(mask)}, {"class", "empty"}});
  }
  return {{"components", comps}, {"intersections", inters}};
}

}  // namespace motive_forge::io
