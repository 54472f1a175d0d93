// Command-line front end: validate, classify, structure, construct,
// enumerate and verify-paper.
//
// Exit codes: 0 ok, 1 usage or I/O, 2 violations or failed claims,
// 3 malformed input, 4 precondition or domain error, 5 limit reached.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "trellis/dot.hpp"
#include "trellis/document.hpp"
#include "trellis/report.hpp"
#include "trellis/trellis.hpp"
#include "trellis/verify/acceptance.hpp"

namespace {

using namespace trellis;
using nlohmann::ordered_json;

enum Exit : int { kOk = 0, kUsage = 1, kViolations = 2, kInput = 3, kDomain = 4, kLimit = 5 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool json = false;
  std::string dot;
  std::optional<std::uint64_t> seed;
};

struct Input {
  PsosetDocument doc;
  Psoset p;
};

std::string read_source(const std::string& path) {
  if (path.rfind("fixture:", 0) == 0) return serialize(document_of(fixtures::get(path.substr(8))));
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

Input load(const std::string& path) {
  auto doc = parse_document(read_source(path));
  auto p = doc.psoset();
  return {std::move(doc), std::move(p)};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write " + path);
}

void emit(const Globals& g, const ordered_json& j, const std::string& text) {
  if (g.json)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

std::string join_names(const Psoset& p, ElementSet s, const char* sep = " ") {
  std::string out;
  for (auto e : s) out += (out.empty() ? "" : sep) + p.name(e);
  return out.empty() ? "-" : out;
}

std::string join_names(const Psoset& p, const std::vector<Element>& v) {
  std::string out;
  for (auto e : v) out += (out.empty() ? "" : ",") + p.name(e);
  return "(" + out + ")";
}

std::string grid(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w(header.size(), 0);
  for (std::size_t i = 0; i < header.size(); ++i) w[i] = header[i].size();
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      out << r[i];
      if (i + 1 < r.size()) out << std::string(w[i] - r[i].size() + 1, ' ');
    }
    out << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out.str();
}

std::string table_text(const Psoset& p, const BinaryOpTable& T) {
  std::vector<std::string> header{"."};
  for (auto n : p.names()) header.push_back(n);
  std::vector<std::vector<std::string>> rows;
  for (Element x = 0; x < T.size(); ++x) {
    std::vector<std::string> r{p.name(x)};
    for (Element y = 0; y < T.size(); ++y) r.push_back(p.name(T(x, y)));
    rows.push_back(std::move(r));
  }
  return grid(header, rows);
}

std::string property_text(const Psoset& p, const char* label, const Property& prop) {
  std::string s = std::string("  ") + label + ": ";
  if (!prop.applicable) return s + "n/a\n";
  if (prop.holds) return s + "yes\n";
  return s + "no " + join_names(p, prop.witness) + "\n";
}

std::string report_text(const Psoset& p, const TnormReport& r) {
  std::string s = std::string("t-norm: ") + (r.is_tnorm() ? "yes" : "no") + "\n";
  s += property_text(p, "commutative", r.commutative);
  s += property_text(p, "associative", r.associative);
  s += property_text(p, "increasing", r.increasing);
  s += property_text(p, "left-increasing", r.left_increasing);
  s += property_text(p, "right-increasing", r.right_increasing);
  s += property_text(p, "neutral top", r.neutral_top);
  s += property_text(p, "conjunctive", r.conjunctive);
  s += property_text(p, "disjunctive", r.disjunctive);
  s += property_text(p, "idempotent", r.idempotent);
  s += property_text(p, "meet-preserving", r.meet_preserving);
  return s;
}

// validate

int cmd_validate(const Globals& g, const std::string& path) {
  PsosetDocument doc = parse_document(read_source(path));
  auto j = report::envelope("validate");
  std::ostringstream text;
  std::optional<Psoset> p;
  try {
    p = doc.psoset();
  } catch (const ValidationError& e) {
    auto list = ordered_json::array();
    text << "psoset: invalid\n";
    for (const auto& v : e.violations()) {
      auto names = ordered_json::array();
      std::string shown;
      for (auto x : v.elements) {
        const std::string n = x < doc.names.size() ? doc.names[x] : std::to_string(x);
        names.push_back(n);
        shown += (shown.empty() ? "" : ",") + n;
      }
      list.push_back({{"kind", to_string(v.kind)}, {"elements", names}});
      text << "  " << to_string(v.kind) << " (" << shown << ")\n";
    }
    j["psoset"] = {{"valid", false}, {"violations", list}};
    emit(g, j, text.str());
    return kViolations;
  }
  bool failed = false;
  j["psoset"] = {{"valid", true}, {"size", p->size()}};
  text << "psoset: valid, " << p->size() << " elements\n";
  const auto kind = structure_kind(*p);
  j["structure"] = report::structure(kind);
  text << "trellis: " << (kind.trellis ? "yes" : "no") << ", lattice: " << (kind.lattice ? "yes" : "no") << '\n';
  if (kind.trellis) {
    const Trellis t = Trellis::build(*p);
    auto check_tables = [&](const char* label, const BinaryOpTable& meet, const BinaryOpTable& join) {
      auto r = check_skala_axioms(meet, join);
      auto list = ordered_json::array();
      for (const auto& v : r.violations) list.push_back({{"axiom", v.axiom}, {"tuple", report::names_of(*p, v.tuple)}});
      j[label] = {{"ok", r.ok()}, {"violations", list}};
      text << label << ": " << (r.ok() ? "ok" : "violated") << '\n';
      for (const auto& v : r.violations) text << "  " << v.axiom << ' ' << join_names(*p, v.tuple) << '\n';
      failed |= !r.ok();
      return r.ok();
    };
    check_tables("axioms", t.meet_table(), t.join_table());
    if (doc.meet || doc.join) {
      // Stored tables must agree with the relation.
      const auto meet = doc.meet ? resolve_table(*p, *doc.meet) : t.meet_table();
      const auto join = doc.join ? resolve_table(*p, *doc.join) : t.join_table();
      const bool agree = meet == t.meet_table() && join == t.join_table();
      j["stored_tables_agree"] = agree;
      text << "stored meet/join: " << (agree ? "agree" : "disagree") << " with the relation\n";
      failed |= !agree;
      if (check_tables("stored_axioms", meet, join)) {
        const bool round_trip = induced_order(meet, join) == p->matrix();
        j["round_trip"] = round_trip;
        text << "induced order round trip: " << (round_trip ? "ok" : "differs") << '\n';
        failed |= !round_trip;
      }
    }
  } else if (doc.meet || doc.join) {
    j["stored_tables_agree"] = false;
    text << "stored meet/join: present but the relation is not a trellis\n";
    failed = true;
  }
  emit(g, j, text.str());
  return failed ? kViolations : kOk;
}

// classify

int cmd_classify(const Globals& g, const std::string& path) {
  auto in = load(path);
  const Trellis t = Trellis::build(in.p);
  const auto c = classify(t);
  auto j = report::envelope("classify");
  auto body = report::classification(in.p, c);
  j["elements"] = body["elements"];
  j["subsets"] = body["subsets"];
  std::vector<std::string> header{"element"};
  for (auto cls : kElementClasses) header.push_back(to_string(cls));
  std::vector<std::vector<std::string>> rows;
  for (Element e = 0; e < in.p.size(); ++e) {
    std::vector<std::string> r{in.p.name(e)};
    for (auto cls : kElementClasses) r.push_back(c.has(e, cls) ? "x" : ".");
    rows.push_back(std::move(r));
  }
  std::string text = grid(header, rows) + "\n";
  for (auto cls : kElementClasses)
    text += std::string("X^") + to_string(cls) + " = {" + join_names(in.p, subset(c, cls), ",") + "}\n";
  emit(g, j, text);
  return kOk;
}

// structure

int cmd_structure(const Globals& g, const std::string& path) {
  auto in = load(path);
  const Psoset& p = in.p;
  const auto kind = structure_kind(p);
  const auto h = hasse(p);
  auto j = report::envelope("structure");
  std::ostringstream text;
  j["structure"] = report::structure(kind);
  text << "meet-semi-trellis " << kind.meet_semi_trellis << ", join-semi-trellis " << kind.join_semi_trellis
       << ", trellis " << kind.trellis << ", lattice " << kind.lattice << ", modular " << kind.modular
       << ", bounded " << kind.bounded << '\n';
  j["bottom"] = p.bottom() ? ordered_json(p.name(*p.bottom())) : ordered_json(nullptr);
  j["top"] = p.top() ? ordered_json(p.name(*p.top())) : ordered_json(nullptr);
  text << "bottom: " << (p.bottom() ? p.name(*p.bottom()) : "-") << ", top: " << (p.top() ? p.name(*p.top()) : "-")
       << '\n';
  j["transitive"] = report::verdict(p, is_transitive(p));
  auto cycles = ordered_json::array();
  text << "maximal cycles:";
  for (auto c : maximal_cycles(p)) {
    cycles.push_back(report::names_of(p, c));
    text << " {" << join_names(p, c, ",") << '}';
  }
  text << (cycles.empty() ? " none\n" : "\n");
  j["maximal_cycles"] = cycles;
  j["pseudo_chain"] = is_pseudo_chain(p, p.elements());
  if (p.top()) {
    j["co_atoms"] = report::names_of(p, co_atoms(p));
    text << "co-atoms: " << join_names(p, co_atoms(p), ",") << '\n';
  }
  if (kind.trellis) {
    const Trellis t = Trellis::build(p);
    auto mod = is_modular(t);
    j["modular"] = report::verdict(p, mod);
    if (!mod) text << "modularity fails at " << join_names(p, mod.witness) << '\n';
    if (kind.bounded) {
      auto c4 = condition4(t);
      j["condition4"] = report::verdict(p, c4);
      text << "T_Z condition: " << (c4 ? "holds" : "fails at " + join_names(p, c4.witness)) << '\n';
    }
  }
  j["hasse"] = report::hasse(p.names(), h);
  text << "cover edges:";
  for (auto [x, y] : h.cover_edges) text << ' ' << p.name(x) << '-' << p.name(y);
  text << "\ndashed pairs:";
  for (auto [x, y] : h.dashed_pairs) text << ' ' << p.name(x) << '~' << p.name(y);
  text << "\nback edges:";
  for (auto [y, x] : h.back_edges) text << ' ' << p.name(y) << "->" << p.name(x);
  text << '\n';
  if (!g.dot.empty()) write_file(g.dot, export_dot(h, p.names()));
  emit(g, j, text.str());
  return kOk;
}

// construct

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

[[noreturn]] void bad_method(const std::string& msg) { throw CLI::ValidationError("--method", msg); }

ElementSet resolve_subset(const Trellis& t, const PsosetDocument& doc, const std::string& spec) {
  const Psoset& p = t.order();
  if (auto members = doc.find_subset(spec)) return subset_of_names(p, *members);
  if (auto cls = parse_element_class(spec)) return subset(classify(t), *cls);
  return subset_of_names(p, split(spec, ','));
}

UnaryMap resolve_interior(const Psoset& p, const PsosetDocument& doc, const std::string& spec) {
  if (auto values = doc.find_map(spec)) return resolve_map(p, *values);
  auto values = split(spec, ',');
  if (values.size() != p.size()) bad_method("map '" + spec + "' is neither a stored map nor " +
                                            std::to_string(p.size()) + " comma-separated images");
  return resolve_map(p, values);
}

/// V on the set a: "meet", a stored operation restricted to a, or an
/// element b of a for x ∧ y ∧ b.
SubOperation resolve_v(const Trellis& t, const PsosetDocument& doc, ElementSet a, const std::string& name) {
  const Psoset& p = t.order();
  if (name == "meet") return restricted_meet(t, a);
  if (auto op = doc.find_op(name)) {
    const auto T = resolve_table(p, *op);
    return SubOperation::from(p, a, [&](Element x, Element y) { return T(x, y); });
  }
  if (auto e = p.index_of(name)) return v_scaled(t, a, *e);
  bad_method("V=" + name + " is neither 'meet', a stored operation nor an element");
}

int cmd_construct(const Globals& g, const std::string& path, const std::string& method, bool unchecked) {
  auto in = load(path);
  const Psoset& p = in.p;
  auto parts = split(method, ':');
  std::optional<std::string> v_name;
  if (parts.size() == 3) {
    if (parts[2].rfind("V=", 0) != 0) bad_method("expected V=<name> after the second ':'");
    v_name = parts[2].substr(2);
    parts.pop_back();
  }
  const std::string& kind = parts[0];
  BinaryOpTable T;
  std::optional<Trellis> t;
  auto need_trellis = [&]() -> const Trellis& {
    if (!t) t = Trellis::build(p);
    return *t;
  };
  if (kind == "drastic" && parts.size() == 1) {
    T = t_drastic(p);
  } else if (kind == "z" && parts.size() == 1) {
    T = t_z(need_trellis());
  } else if (kind == "coatom" && parts.size() == 2) {
    T = t_coatom(p, p.at(parts[1]));
  } else if (kind == "lambda" && parts.size() == 2) {
    const auto& tr = need_trellis();
    const ElementSet a = resolve_subset(tr, in.doc, parts[1]);
    if (v_name)
      T = t_lambda(tr, a, resolve_v(tr, in.doc, a, *v_name));
    else
      T = unchecked ? t_lambda_meet_unchecked(tr, a) : t_lambda_meet(tr, a);
  } else if (kind == "interior" && parts.size() == 2) {
    const auto& tr = need_trellis();
    const UnaryMap I = resolve_interior(p, in.doc, parts[1]);
    T = v_name ? t_interior(tr, I, resolve_v(tr, in.doc, range(tr, I), *v_name)) : t_interior_meet(tr, I);
  } else {
    bad_method("unknown method '" + method + "'");
  }
  const TnormReport r = structure_kind(p).trellis ? check(need_trellis(), T) : check(p, T);
  auto j = report::envelope("construct");
  j["method"] = method;
  j["table"] = report::table(p, T);
  j["report"] = report::tnorm_report(p, r);
  emit(g, j, table_text(p, T) + "\n" + report_text(p, r));
  return r.is_tnorm() ? kOk : kViolations;
}

// enumerate

int cmd_enumerate(const Globals& g, const std::string& path, std::optional<std::size_t> limit, std::size_t cap) {
  auto in = load(path);
  const Psoset& p = in.p;
  EnumerationOptions opts;
  opts.limit = limit;
  opts.cap = cap;
  EnumerationResult r;
  try {
    r = enumerate(p, opts);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CarrierTooLarge) throw;
    std::cerr << "error: " << e.what() << '\n';
    return kLimit;
  }
  auto j = report::envelope("enumerate");
  j["enumeration"] = report::enumeration(p, r);
  std::ostringstream text;
  text << r.count << " t-norm(s)" << (r.limit_reached ? " (limit reached)" : "") << "\n\n";
  for (std::size_t i = 0; i < r.tnorms.size(); ++i) text << 'T' << i + 1 << '\n' << table_text(p, r.tnorms[i]) << '\n';
  auto label = [](std::size_t i) { return "T" + std::to_string(i + 1); };
  text << "maximal:";
  for (auto i : r.maximal) text << ' ' << label(i);
  text << "\ngreatest: " << (r.greatest ? label(*r.greatest) : "none") << '\n';
  if (r.count > kMaxElements) {
    text << "order covers: omitted, more than " << kMaxElements << " t-norms\n";
    if (!g.dot.empty()) std::cerr << "warning: no DOT written, more than " << kMaxElements << " t-norms\n";
  } else if (!r.tnorms.empty()) {
    const auto d = order_diagram(p, r);
    j["order_diagram"] = report::hasse(d.order.names(), d.diagram);
    text << "order covers:";
    for (auto [x, y] : d.diagram.cover_edges) text << ' ' << label(x) << '<' << label(y);
    text << '\n';
    if (!g.dot.empty()) write_file(g.dot, export_dot(d.diagram, d.order.names(), "tnorms"));
  }
  text << "search: " << r.stats.nodes << " nodes, " << r.stats.monotonicity_prunes << " monotonicity prunes, "
       << r.stats.associativity_prunes << " associativity prunes, " << r.stats.leaf_rejections << " leaf rejections\n";
  emit(g, j, text.str());
  return r.limit_reached ? kLimit : kOk;
}

// verify-paper

int cmd_verify(const Globals& g) {
  verify::AcceptanceOptions o;
  if (g.seed) {
    o.property_seed = *g.seed;
    o.oracle_seed = *g.seed ^ 0x9e3779b97f4a7c15ULL;
  }
  auto results = verify::run_acceptance(o, [&](const verify::CriterionResult& r) {
    if (!g.json) std::cout << verify::format_line(r) << std::endl;
  });
  bool all = true;
  auto list = ordered_json::array();
  for (const auto& r : results) {
    all &= r.passed;
    list.push_back({{"id", r.id},
                    {"title", r.title},
                    {"passed", r.passed},
                    {"summary", r.summary},
                    {"failures", r.failures},
                    {"seconds", r.seconds}});
  }
  if (g.json) {
    auto j = report::envelope("verify-paper");
    j["property_seed"] = o.property_seed;
    j["oracle_seed"] = o.oracle_seed;
    j["criteria"] = list;
    j["passed"] = all;
    std::cout << j.dump(2) << '\n';
  }
  return all ? kOk : kViolations;
}

int cmd_fixture(const std::string& id) {
  if (id.empty()) {
    for (const auto& f : fixtures::all()) std::cout << f.id << "  " << f.title << '\n';
    return kOk;
  }
  std::cout << serialize(document_of(fixtures::get(id)));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pseudo-ordered sets, trellises and t-norms"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable report on stdout");
  app.add_option("--dot", g.dot, "Write the relevant diagram as DOT to this path");
  app.add_option("--seed", g.seed, "Seed for the random suites of verify-paper");
  app.fallthrough();

  std::string file, method, fixture_id;
  bool unchecked = false;
  std::optional<std::size_t> limit;
  std::size_t cap = EnumerationOptions{}.cap;
  const char* file_help = "Document path, '-' for stdin, or fixture:<id>";

  auto* validate = app.add_subcommand("validate", "Check the relation and any stored meet/join tables");
  validate->add_option("file", file, file_help)->required();
  auto* classify_cmd = app.add_subcommand("classify", "Per-element classes and the subsets X^a");
  classify_cmd->add_option("file", file, file_help)->required();
  auto* structure = app.add_subcommand("structure", "Structure flags, cycles, co-atoms and the Hasse diagram");
  structure->add_option("file", file, file_help)->required();
  auto* construct = app.add_subcommand("construct", "Build a t-norm and report its properties");
  construct->add_option("file", file, file_help)->required();
  construct
      ->add_option("--method", method,
                   "drastic | z | coatom:<e> | lambda:<subset>[:V=<name>] | interior:<map>[:V=<name>]")
      ->required();
  construct->add_flag("--unchecked", unchecked, "lambda without V: skip the sub-trellis precondition");
  auto* enumerate_cmd = app.add_subcommand("enumerate", "All t-norms with maximal and greatest ones");
  enumerate_cmd->add_option("file", file, file_help)->required();
  enumerate_cmd->add_option("--limit", limit, "Stop after this many t-norms");
  enumerate_cmd->add_option("--cap", cap, "Largest carrier accepted")->capture_default_str();
  auto* verify_cmd = app.add_subcommand("verify-paper", "Run the acceptance criteria");
  auto* fixture = app.add_subcommand("fixture", "List built-in fixtures or print one as a document");
  fixture->add_option("id", fixture_id, "Fixture id");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(g, file);
    if (*classify_cmd) return cmd_classify(g, file);
    if (*structure) return cmd_structure(g, file);
    if (*construct) return cmd_construct(g, file, method, unchecked);
    if (*enumerate_cmd) return cmd_enumerate(g, file, limit, cap);
    if (*verify_cmd) return cmd_verify(g);
    if (*fixture) return cmd_fixture(fixture_id);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    const bool input = e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::UnknownName ||
                       e.kind() == ErrorKind::ShapeMismatch || e.kind() == ErrorKind::CarrierTooLarge;
    return input ? kInput : kDomain;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kUsage;
}
