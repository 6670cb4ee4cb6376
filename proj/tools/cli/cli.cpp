#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "json_io.hpp"
#include "motive_forge/error.hpp"

namespace motive_forge::cli {

namespace {

using io::json;

struct Options {
  std::string type;
  std::string parabolic;
  std::string face = "full";
  int central_rank = 0;
  bool central_rank_given = false;
  std::string base = "point";
  std::string char_mode = "zero";
  std::uint64_t weyl_cap = 0;
  std::string format = "text";
  bool verbose_cells = false;
  std::string config_path;
};

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::kParseError, what); }

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::logic_error&) {
      parse_fail("bad " + what + " entry '" + item + "'");
    }
  }
  return out;
}

std::uint64_t resolve_cap(const Options& o) {
  if (o.weyl_cap != 0) return o.weyl_cap;
  if (const char* env = std::getenv("MOTIVE_FORGE_WEYL_CAP")) {
    try {
      std::size_t used = 0;
      unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::logic_error&) {
    }
    parse_fail(std::string("MOTIVE_FORGE_WEYL_CAP is not a positive integer: '") + env + "'");
  }
  return kDefaultWeylCap;
}

CharMode char_mode(const Options& o) { return o.char_mode == "p" ? CharMode::kPositive : CharMode::kZero; }

RootSystem root_system(const Options& o) {
  if (o.type.empty()) parse_fail("--type is required");
  return build_root_system(o.type, resolve_cap(o));
}

ParabolicSubset face_of(const Options& o, const RootSystem& rs) {
  if (o.face == "full") return rs.simples();
  if (o.face == "empty") return ParabolicSubset();
  return ParabolicSubset::from_indices(parse_int_list(o.face, "--face"), rs.rank);
}

std::string base_atom(const std::string& name) { return "M(" + name + ")"; }

CellMultiset base_cells(const Options& o) {
  std::vector<int> dims = parse_int_list(o.base.substr(6), "--base cells");
  if (dims.empty()) parse_fail("--base cells: needs at least one cell");
  for (int d : dims)
    if (d < 0) parse_fail("--base cells: dimensions must be non-negative");
  return CellMultiset(std::move(dims));
}

TateExpr base_expr(const Options& o) {
  if (o.base == "point") return TateExpr::unit();
  if (o.base.rfind("symbol:", 0) == 0 && o.base.size() > 7) return TateExpr::opaque(base_atom(o.base.substr(7)));
  if (o.base.rfind("cells:", 0) == 0) return TateExpr::from_cells(base_cells(o));
  parse_fail("--base must be point, symbol:NAME or cells:d1,d2,...");
}

FibrationBase fibration_base(const Options& o) {
  if (o.base == "point") return FibrationBase::point();
  if (o.base.rfind("symbol:", 0) == 0 && o.base.size() > 7) return FibrationBase::opaque(base_atom(o.base.substr(7)));
  if (o.base.rfind("cells:", 0) == 0) {
    CellMultiset cells = base_cells(o);
    const bool smooth = TateExpr::from_cells(cells).is_palindromic(cells.top_dimension());
    return FibrationBase::from_variety(CellularVariety::make("base", std::move(cells), true, smooth));
  }
  parse_fail("--base must be point, symbol:NAME or cells:d1,d2,...");
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open configuration file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    parse_fail("configuration file '" + path + "' is not valid JSON: " + e.what());
  }
}

std::string join(const std::vector<int>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

void print_triangle(std::ostream& out, const TriangleRecord& t, const std::string& indent = "  ") {
  out << indent << t.left.label << " = " << t.left.cls.to_string() << "\n"
      << indent << "-> " << t.middle.label << " = " << t.middle.cls.to_string() << "\n"
      << indent << "-> " << t.right.label << " = " << t.right.cls.to_string() << "\n"
      << indent << "[" << t.provenance << "; split-verified: " << (t.split_verified ? "yes" : "no") << "]\n";
}

// Each command fills `result` for JSON mode and writes text directly.
struct Report {
  json result = json::object();
  std::ostringstream text;
};

void cmd_flag(const Options& o, Report& r) {
  const RootSystem rs = root_system(o);
  const WeylGroup group(rs, resolve_cap(o));
  const ParabolicSubset I = ParabolicSubset::from_indices(parse_int_list(o.parabolic, "--parabolic"), rs.rank);
  const CellularVariety x = flag_motive(group, I);
  const FlaggedMotive m = cellular_motive(x);
  r.text << m.motive.to_string() << "\n"
         << "variety: " << x.name << "\n"
         << "cells: " << join(x.cells.dims()) << "\n"
         << "dim: " << x.dim << "\n"
         << "functor: " << functor_name(m.functor) << "\n";
  r.result = {{"variety", io::to_json(x)}, {"motive", io::to_json(m.motive)}, {"text", m.motive.to_string()}};
}

void cmd_weyl(const Options& o, Report& r) {
  const RootSystem rs = root_system(o);
  const WeylGroup group(rs, resolve_cap(o));
  const UPoly poincare = weyl_poincare(group);
  const WeylElement& w0 = group[group.longest_index()];
  r.text << poincare.to_string("t") << "\n"
         << "type: " << rs.label << "\n"
         << "order: " << group.size() << "\n"
         << "positive roots: " << rs.num_positive() << "\n"
         << "degrees: " << join(rs.degrees) << "\n"
         << "longest element: " << w0.word_string() << " (length " << w0.length << ")\n";
  json elements = json::array();
  if (o.verbose_cells) {
    for (const WeylElement& w : group.elements()) {
      r.text << "  " << w.word_string() << " " << w.length << "\n";
      elements.push_back({{"word", w.word_indices()}, {"length", w.length}});
    }
  }
  r.result = {{"type", rs.label}, {"order", group.size()}, {"poincare", poincare.coeffs()},
              {"degrees", rs.degrees}, {"positiveRoots", rs.num_positive()},
              {"longest", {{"word", w0.word_indices()}, {"length", w0.length}}}};
  if (o.verbose_cells) r.result["elements"] = elements;
}

void cmd_wonderful_orbit(const Options& o, Report& r) {
  const RootSystem rs = root_system(o);
  auto group = std::make_shared<const WeylGroup>(rs, resolve_cap(o));
  const ParabolicSubset I = face_of(o, rs);
  const FlaggedMotive m = orbit_closure_motive(*group, I, char_mode(o));
  const UPoly poly = orbit_closure_polynomial(*group, I);
  r.text << m.motive.to_string() << "\n"
         << "orbit closure: " << orbit_closure_name(I) << " of the wonderful compactification of the adjoint " << rs.label << "\n"
         << "top dim: " << poly.degree() << "\n"
         << "cells: " << group->size() * group->size() << "\n"
         << "functor: " << functor_name(m.functor) << "\n";
  for (const std::string& a : m.assumptions) r.text << "assumption: " << a << "\n";
  r.result = {{"I", I.indices()}, {"cellPolynomial", poly.coeffs()}, {"topDim", poly.degree()},
              {"motive", io::to_json(m.motive)}, {"text", m.motive.to_string()},
              {"functor", std::string(functor_name(m.functor))}, {"assumptions", m.assumptions}};
  if (o.verbose_cells) {
    const OrbitClosure oc = orbit_closure_cells(group, I);
    json cells = json::array();
    for (const OrbitCell& c : oc.cells) {
      const std::string u = (*group)[c.u].word_string(), v = (*group)[c.v].word_string();
      r.text << "  (" << u << ", " << v << ") " << c.dim << "\n";
      cells.push_back({{"u", u}, {"v", v}, {"dim", c.dim}});
    }
    r.result["cells"] = cells;
  }
}

void cmd_wonderful_boundary(const Options& o, Report& r) {
  const RootSystem rs = root_system(o);
  const WeylGroup group(rs, resolve_cap(o));
  const Configuration c = boundary_configuration(group, char_mode(o));
  if (c.size() == 0) throw Error(ErrorCode::kInvalidLattice, "rank-0 type has an empty boundary");
  const MixedTateCertificate cert = check_mixed_tate_config(c);
  const UnionClass u = union_class(c);
  r.text << u.ledger.to_string() << "\n"
         << "components: " << c.size() << "\n";
  for (const ConfigNode& n : c.components) r.text << "  " << n.name << " dim " << n.dim << ": " << n.cls.to_string() << "\n";
  for (const auto& [mask, node] : c.intersections)
    r.text << "  D^{" << join(io::subset_json(mask).get<std::vector<int>>(), ",") << "} = " << node->name << "\n";
  r.text << "certified mixed Tate configuration, depth " << cert.depth() << "\n";
  r.result = {{"configuration", io::to_json(c)}, {"certificate", io::to_json(cert)}, {"unionClass", io::to_json(u.ledger)},
              {"text", u.ledger.to_string()}};
}

void cmd_group_class(const Options& o, Report& r) {
  const RootSystem rs = root_system(o);
  const K0Class g = group_class(rs, o.central_rank);
  r.text << g.to_string() << "\n";
  r.result = {{"type", rs.label}, {"centralRank", o.central_rank}, {"class", io::to_json(g)}, {"text", g.to_string()}};
}

void cmd_bundle_curve(const Options& o, Report& r) {
  const RootSystem rs = root_system(o);
  const K0Class bundle = bundle_over_curve_class(group_class(rs, o.central_rank), "[C]");
  const CurveBundleReport rep = curve_bundle_triangles(rs, o.central_rank, "C");
  const bool agrees = rep.k0_shadow == bundle;
  r.text << bundle.to_string() << "\n"
         << "M(G^s) = " << rep.group_motive.to_string() << "\n"
         << "Gysin twist at the removed point: (" << rep.gysin_twist << ")[" << 2 * rep.gysin_twist << "]\n";
  json triangles = json::array();
  for (std::size_t i = 0; i < rep.triangles.size(); ++i) {
    r.text << "triangle " << i + 1 << ":\n";
    print_triangle(r.text, rep.triangles[i]);
    triangles.push_back(io::to_json(rep.triangles[i]));
  }
  r.text << "K0 shadow of the filtration: " << rep.k0_shadow.to_string() << (agrees ? " (agrees)" : " (DISAGREES)") << "\n";
  for (const std::string& a : rep.assumptions) r.text << "assumption: " << a << "\n";
  r.result = {{"class", io::to_json(bundle)}, {"text", bundle.to_string()}, {"groupMotive", io::to_json(rep.group_motive)},
              {"gysinTwist", rep.gysin_twist}, {"triangles", triangles}, {"k0Shadow", io::to_json(rep.k0_shadow)},
              {"shadowAgrees", agrees}, {"assumptions", rep.assumptions}};
}

void cmd_slice_torus(const Options& o, Report& r) {
  if (!o.central_rank_given) parse_fail("slice-torus needs --central-rank");
  const TateExpr base = base_expr(o);
  const auto triangles = slice_filtration_torus(o.central_rank, base);
  r.text << triangles.front().middle.cls.to_string() << "\n";
  json out = json::array();
  for (std::size_t p = 0; p < triangles.size(); ++p) {
    r.text << "p = " << p << ":\n";
    print_triangle(r.text, triangles[p]);
    out.push_back(io::to_json(triangles[p]));
  }
  r.result = {{"rank", o.central_rank}, {"base", io::to_json(base)}, {"triangles", out}};
}

void cmd_nested_filtration(const Options& o, Report& r) {
  std::optional<FaceModel> model;
  std::string model_name;
  if (!o.type.empty()) {
    const RootSystem rs = root_system(o);
    const WeylGroup group(rs, resolve_cap(o));
    model = wonderful_model(group, char_mode(o));
    model_name = "wonderful compactification of the adjoint " + rs.label;
  } else if (o.central_rank_given) {
    model = simplex_lattice(o.central_rank);
    model_name = "split torus of rank " + std::to_string(o.central_rank) + " in the standard simplex";
  } else {
    parse_fail("nested-filtration needs --type (wonderful model) or --central-rank (simplex model)");
  }
  const FiltrationTree tree = nested_filtration(*model, fibration_base(o));
  r.text << tree.root_open_class.to_string() << "\n"
         << "model: " << model_name << "\n";
  for (std::size_t i = 0; i < tree.levels.size(); ++i) {
    r.text << "level " << i << ":\n";
    print_triangle(r.text, tree.levels[i]);
  }
  for (const FiltrationNode& n : tree.nodes) {
    r.text << "face {" << join(io::subset_json(n.face).get<std::vector<int>>(), ",") << "} (codim " << n.level << "):\n";
    print_triangle(r.text, n.triangle);
  }
  if (!tree.negative_faces.empty()) r.text << "negative graded pieces at " << tree.negative_faces.size() << " face(s)\n";
  r.result = io::to_json(tree);
  r.result["model"] = model_name;
}

Configuration load_config(const Options& o) { return io::config_from_json(read_json_file(o.config_path)); }

void cmd_check_config(const Options& o, Report& r) {
  const MixedTateCertificate cert = check_mixed_tate_config(load_config(o));
  r.text << "certified, depth " << cert.depth() << "\n";
  for (std::size_t i = 0; i < cert.levels.size(); ++i) {
    r.text << "level " << i << ":";
    for (std::uint32_t m : cert.levels[i]) r.text << " {" << join(io::subset_json(m).get<std::vector<int>>(), ",") << "}";
    r.text << "\n";
  }
  r.result = io::to_json(cert);
}

void cmd_union_class(const Options& o, Report& r) {
  const UnionClass u = union_class(load_config(o));
  r.text << u.ledger.to_string() << "\n"
         << "effective: " << (u.effective() ? "yes" : "no") << "\n"
         << "functor: Mc\n";
  r.result = {{"class", io::to_json(u.ledger)}, {"k0", io::to_json(u.k0())}, {"text", u.ledger.to_string()},
              {"effective", u.effective()}, {"functor", "Mc"}};
}

json envelope(const std::string& command) { return {{"tool", kToolName}, {"version", kVersion}, {"command", command}}; }

void emit_error(std::ostream& out, std::ostream& err, bool as_json, std::string_view name, const std::string& message) {
  if (as_json) {
    json e = envelope("");
    e.erase("command");
    e["error"] = {{"name", std::string(name)}, {"message", message}};
    out << e.dump(2) << "\n";
  } else {
    err << "error: " << name << ": " << message << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Symbolic motives, Grothendieck classes and filtrations from root-system data", kToolName};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  using Handler = void (*)(const Options&, Report&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](const char* name, const char* help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--type", o.type, "root-system label, e.g. A2, G2, A1xB2");
    sub->add_option("--parabolic", o.parabolic, "parabolic subset, 1-based simple-root indices i,j,...");
    sub->add_option("--face", o.face, "face of the Weyl chamber: full | empty | i,j,...");
    sub->add_option("--central-rank", o.central_rank, "rank of the central torus (or of the torus)")
        ->check(CLI::NonNegativeNumber)
        ->each([&](const std::string&) { o.central_rank_given = true; });
    sub->add_option("--base", o.base, "point | symbol:NAME | cells:d1,d2,...");
    sub->add_option("--char-mode", o.char_mode, "zero | p")->check(CLI::IsMember({"zero", "p"}));
    sub->add_option("--weyl-cap", o.weyl_cap, "maximum Weyl group order")->check(CLI::PositiveNumber);
    sub->add_option("--format", o.format, "text | json")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--verbose-cells", o.verbose_cells, "list individual cells / group elements");
    commands.emplace_back(sub, h);
    return sub;
  };
  add("flag", "motive of the flag variety G/P_I", cmd_flag);
  add("weyl", "Weyl group summary", cmd_weyl);
  add("wonderful-orbit", "cell decomposition of an orbit closure D_I", cmd_wonderful_orbit);
  add("wonderful-boundary", "boundary divisor configuration of the wonderful compactification", cmd_wonderful_boundary);
  add("group-class", "class of the split group in K0(Var)", cmd_group_class);
  add("bundle-curve", "G-bundle over a smooth projective curve", cmd_bundle_curve);
  add("slice-torus", "slice filtration of a split torus bundle", cmd_slice_torus);
  add("nested-filtration", "nested filtration over a face lattice", cmd_nested_filtration);
  add("check-config", "certify a mixed Tate configuration", cmd_check_config)
      ->add_option("config", o.config_path, "configuration JSON file")->required();
  add("union-class", "class of the union of a configuration", cmd_union_class)
      ->add_option("config", o.config_path, "configuration JSON file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  // Parse failures happen before --format is bound; look for it directly.
  bool wants_json = std::find(args.begin(), args.end(), "--format=json") != args.end();
  for (std::size_t i = 0; i + 1 < args.size(); ++i)
    if (args[i] == "--format" && args[i + 1] == "json") wants_json = true;
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    emit_error(out, err, wants_json, "ParseError", e.what());
    return 2;
  }

  const bool as_json = o.format == "json";
  for (const auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    try {
      Report r;
      handler(o, r);
      if (as_json) {
        json j = envelope(sub->get_name());
        j["result"] = std::move(r.result);
        out << j.dump(2) << "\n";
      } else {
        out << r.text.str();
      }
      return 0;
    } catch (const NegativeMultiplicityError& e) {
      emit_error(out, err, as_json, e.name(), std::string(e.what()) + " (signed ledger " + e.ledger().to_string() + ")");
      return 1;
    } catch (const Error& e) {
      emit_error(out, err, as_json, e.name(), e.what());
      return e.code() == ErrorCode::kParseError ? 2 : 1;
    } catch (const io::json::exception& e) {
      emit_error(out, err, as_json, "ParseError", e.what());
      return 2;
    }
  }
  return 2;
}

}  // namespace motive_forge::cli
