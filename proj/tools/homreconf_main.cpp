// Command-line surface over the homreconf library. Thin by design: parse
// files, call one library entry point, print a "format: 1" document.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "homreconf/builders.hpp"
#include "homreconf/dismantle.hpp"
#include "homreconf/errors.hpp"
#include "homreconf/extsolver.hpp"
#include "homreconf/graph.hpp"
#include "homreconf/hom.hpp"
#include "homreconf/nu.hpp"
#include "homreconf/reconfig.hpp"
#include "homreconf/resultdoc.hpp"
#include "homreconf/spr.hpp"

namespace hr = homreconf;
using hr::ordered_json;

namespace {

int g_exit = 0;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw hr::ParseError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const ordered_json& body) { std::cout << hr::render_document(body); }

std::string status_name(hr::ReconfigStatus s) {
  switch (s) {
    case hr::ReconfigStatus::kPath: return "path";
    case hr::ReconfigStatus::kDisconnected: return "disconnected";
    default: return "undecided";
  }
}

long long hom_edges(const hr::HomGraph& hg) {
  long long e = 0;
  for (size_t i = 0; i < hg.adj.size(); ++i)
    e += hg.adj[i].count() - (hg.adj[i].test((int)i) ? 1 : 0);
  return e / 2;
}

void cmd_check_nu(const std::string& graph_file, bool majority, int max_n) {
  hr::Graph h = hr::parse_graph(slurp(graph_file));
  auto ds = hr::square_with_diagonal(h);
  auto verdict = hr::is_nu(h, ds);

  ordered_json body;
  body["command"] = "check-nu";
  body["input"] = {{"h", h.to_text()}};
  body["nu"] = verdict.nu;
  if (verdict.nu) {
    body["dismantling"] = hr::serialize_dismantling(ds.component, verdict.certificate);
  } else {
    ordered_json stuck = ordered_json::array();
    for (int v : verdict.stuck) stuck.push_back(ds.component.vertex_name(v));
    body["stuck"] = stuck;
  }
  if (majority) {
    auto f = hr::find_majority(h, max_n);
    body["majority_found"] = f.has_value();
    if (f) body["majority"] = hr::serialize_majority(h, *f);
  }
  emit(body);
}

void cmd_reconfigure(const std::string& g_file, const std::string& h_file,
                     const std::string& pins_file, const std::string& phi_file,
                     const std::string& psi_file, bool oracle, bool want_walk,
                     long long cap) {
  hr::Graph g = hr::parse_graph(slurp(g_file));
  hr::Graph h = hr::parse_graph(slurp(h_file));
  auto p = hr::parse_mapping(slurp(pins_file), g, h);
  auto phi = hr::parse_total_mapping(slurp(phi_file), g, h);
  auto psi = hr::parse_total_mapping(slurp(psi_file), g, h);

  hr::ReconfigureOptions opts;
  opts.with_oracle = oracle;
  opts.cap = cap;
  auto rr = hr::reconfigure(g, h, p, phi, psi, opts);

  ordered_json body;
  body["command"] = "reconfigure";
  body["input"] = {{"g", g.to_text()},
                   {"h", h.to_text()},
                   {"pins", hr::pins_json(g, h, p)},
                   {"phi", hr::mapping_json(g, h, phi)},
                   {"psi", hr::mapping_json(g, h, psi)}};
  body["status"] = status_name(rr.status);
  if (h.is_connected())
    body["delta"] = {{"total", rr.delta.total}, {"odd", rr.delta.odd_count}};
  if (rr.status == hr::ReconfigStatus::kPath) {
    body["certificate"] = {{"name", rr.certificate.name},
                           {"value", rr.certificate.value},
                           {"skip_fired", rr.certificate.skip_fired},
                           {"efficient", rr.certificate.efficient}};
    body["used_greedy"] = rr.used_greedy;
    body["path"] = hr::path_json(g, h, rr.path);
    if (want_walk) body["walk"] = hr::walk_json(g, h, rr.walk);
    if (!rr.dismantling.target.empty()) {
      auto ds = hr::square_with_diagonal(h);
      body["dismantling"] = hr::serialize_dismantling(ds.component, rr.dismantling);
    }
  }
  if (rr.oracle_distance) body["oracle_distance"] = *rr.oracle_distance;
  if (!rr.note.empty()) body["note"] = rr.note;
  emit(body);
}

void cmd_homgraph(const std::string& g_file, const std::string& h_file,
                  const std::string& pins_file, const std::string& mode,
                  bool black_restricted, const std::string& dot_file,
                  long long cap) {
  hr::Graph g = hr::parse_graph(slurp(g_file));
  hr::Graph h = hr::parse_graph(slurp(h_file));
  auto p = hr::parse_mapping(slurp(pins_file), g, h);
  auto m = mode == "reconfig" ? hr::HomEdgeMode::kReconfig : hr::HomEdgeMode::kWalk;
  auto hg = hr::hom_graph(g, h, p, m, black_restricted, cap);

  ordered_json body;
  body["command"] = "homgraph";
  body["input"] = {{"g", g.to_text()},
                   {"h", h.to_text()},
                   {"pins", hr::pins_json(g, h, p)},
                   {"mode", mode},
                   {"black_restricted", black_restricted},
                   {"cap", cap}};
  body["nodes"] = (long long)hg.nodes.size();
  body["edges"] = hom_edges(hg);
  body["components"] = hg.component_count;
  body["diameter"] = hg.diameter;
  body["black_restricted_applied"] = hg.black_restricted_applied;
  if (!hg.warning.empty()) body["warning"] = hg.warning;
  if (!dot_file.empty()) {
    std::ofstream out(dot_file);
    if (!out) throw hr::ParseError("cannot write file: " + dot_file);
    out << hr::hom_graph_dot(hg, g, h);
    body["dot"] = dot_file;
  }
  emit(body);
}

hr::Assignment parse_path_file(const std::string& text, const hr::SprInstance& inst,
                               const char* what) {
  std::istringstream in(text);
  std::string tok;
  hr::Assignment a;
  while (in >> tok) {
    if (tok[0] == '#') {  // drop comment to end of line
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    auto v = inst.host.find_vertex(tok);
    if (!v)
      throw hr::InvalidEndpoints(std::string(what) + ": unknown host vertex '" + tok + "'");
    a.push_back(*v);
  }
  if ((int)a.size() != inst.d + 1)
    throw hr::InvalidEndpoints(std::string(what) + ": expected " +
                               std::to_string(inst.d + 1) + " vertices, got " +
                               std::to_string(a.size()));
  return a;
}

std::vector<int> parse_loop_set(const std::string& spec, const hr::Graph& h) {
  std::vector<int> loops;
  if (spec == "none") return loops;
  if (spec == "all") {
    for (int v = 0; v < h.vertex_count(); ++v) loops.push_back(v);
    return loops;
  }
  std::string cur;
  std::istringstream in(spec);
  while (std::getline(in, cur, ',')) {
    auto v = h.find_vertex(cur);
    if (!v) throw hr::ParseError("--loops: unknown vertex '" + cur + "'");
    loops.push_back(*v);
  }
  return loops;
}

void cmd_spr(const std::string& h_file, const std::string& u_name,
             const std::string& v_name, const std::string& phi_file,
             const std::string& psi_file, bool trivial_check,
             const std::string& loops_spec, bool no_exact, long long cap, int k) {
  hr::Graph h = hr::parse_graph(slurp(h_file));

  if (trivial_check) {
    auto loops = parse_loop_set(loops_spec, h);
    auto verdict = hr::sp_trivial_check(h, loops, cap, !no_exact);
    ordered_json body;
    body["command"] = "spr-trivial";
    ordered_json lj = ordered_json::array();
    for (int v : loops) lj.push_back(h.vertex_name(v));
    body["input"] = {{"h", h.to_text()}, {"loops", lj}, {"cap", cap},
                     {"run_exact", !no_exact}};
    body["nu_sufficient"] = verdict.nu_sufficient;
    body["exact_ran"] = verdict.exact_ran;
    if (verdict.exact_ran) body["exact_trivial"] = verdict.exact_trivial;
    if (verdict.witness)
      body["witness"] = {h.vertex_name(verdict.witness->first),
                         h.vertex_name(verdict.witness->second)};
    emit(body);
    return;
  }

  auto u = h.find_vertex(u_name), v = h.find_vertex(v_name);
  if (!u || !v) throw hr::InvalidEndpoints("spr: unknown endpoint vertex");
  auto inst = hr::spr_instance(h, *u, *v);
  auto phi = parse_path_file(slurp(phi_file), inst, "phi");
  auto psi = parse_path_file(slurp(psi_file), inst, "psi");

  hr::SprOptions opts;
  opts.cap = cap;
  opts.k = k;
  if (!loops_spec.empty() && loops_spec != "default")
    opts.loop_sets = {parse_loop_set(loops_spec, h)};
  auto sr = hr::spr_reconfigure(inst, phi, psi, opts);

  ordered_json body;
  body["command"] = "spr";
  ordered_json phn = ordered_json::array(), psn = ordered_json::array();
  for (int x : phi) phn.push_back(inst.host.vertex_name(x));
  for (int x : psi) psn.push_back(inst.host.vertex_name(x));
  body["input"] = {{"h", h.to_text()}, {"u", h.vertex_name(*u)},
                   {"v", h.vertex_name(*v)}, {"phi", phn}, {"psi", psn},
                   {"cap", cap}};
  body["d"] = inst.d;
  body["stripped_loops"] = inst.stripped_loops;
  body["route"] = sr.route;
  ordered_json lu = ordered_json::array();
  for (int x : sr.loops_used) lu.push_back(inst.host.vertex_name(x));
  body["loops_used"] = lu;
  body["k3_verified"] = sr.k3_verified;
  body["bound"] = sr.bound;
  body["bound_asserted"] = sr.bound_asserted;
  if (sr.general_bound) body["general_bound"] = *sr.general_bound;
  body["status"] = status_name(sr.inner.status);
  if (sr.inner.status == hr::ReconfigStatus::kPath) {
    body["path"] = hr::path_json(inst.path, inst.host, sr.inner.path);
    body["certificate"] = {{"name", sr.inner.certificate.name},
                           {"value", sr.inner.certificate.value}};
  }
  if (sr.inner.oracle_distance) body["oracle_distance"] = *sr.inner.oracle_distance;
  if (!sr.inner.note.empty()) body["note"] = sr.inner.note;
  emit(body);
}

void cmd_verify_bounds(const std::string& dir, uint64_t seed, long long cap) {
  namespace fs = std::filesystem;
  std::vector<std::pair<std::string, std::string>> corpus;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".graph")
      files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) corpus.emplace_back(f.filename().string(), slurp(f.string()));

  auto outcome = hr::verify_bounds_campaign(corpus, seed, cap);

  ordered_json body;
  body["command"] = "verify-bounds";
  ordered_json cj = ordered_json::array();
  for (const auto& [name, text] : corpus)
    cj.push_back({{"name", name}, {"text", text}});
  body["input"] = {{"seed", seed}, {"cap", cap}, {"corpus", cj}};
  body["instances"] = outcome.instances;
  body["violations"] = outcome.violations;
  body["skipped"] = outcome.skipped;
  emit(body);
  g_exit = outcome.violations > 0 ? 1 : (outcome.skipped > 0 ? 3 : 0);
}

void cmd_replay(const std::string& doc_file) {
  auto rep = hr::replay_result_document(slurp(doc_file));
  ordered_json body;
  body["command"] = "replay";
  body["ok"] = rep.ok;
  body["checks"] = rep.checks;
  ordered_json errs = ordered_json::array();
  for (const auto& e : rep.errors) errs.push_back(e);
  body["errors"] = errs;
  emit(body);
  g_exit = rep.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"homomorphism reconfiguration toolkit"};
  app.require_subcommand(1);

  // check-nu
  std::string cn_graph;
  bool cn_majority = false;
  int cn_max_n = 8;
  auto* cn = app.add_subcommand("check-nu",
                                "test a host graph for near-unanimity structure");
  cn->add_option("graph", cn_graph, "host graph file")->required();
  cn->add_flag("--majority", cn_majority, "also search for a ternary majority table");
  cn->add_option("--max-n", cn_max_n, "vertex cap for the majority search");
  cn->callback([&] { cmd_check_nu(cn_graph, cn_majority, cn_max_n); });

  // reconfigure
  std::string rc_g, rc_h, rc_pins, rc_phi, rc_psi;
  bool rc_oracle = false, rc_walk = false;
  long long rc_cap = 1'000'000;
  auto* rc = app.add_subcommand("reconfigure",
                                "build a bound-certified path between two maps");
  rc->add_option("pattern", rc_g, "pattern graph file")->required();
  rc->add_option("host", rc_h, "host graph file")->required();
  rc->add_option("pins", rc_pins, "pin mapping file (may be empty)")->required();
  rc->add_option("phi", rc_phi, "start mapping file")->required();
  rc->add_option("psi", rc_psi, "end mapping file")->required();
  rc->add_flag("--oracle", rc_oracle, "also run the brute-force oracle");
  rc->add_flag("--walk", rc_walk, "embed the unresolved walk");
  rc->add_option("--cap", rc_cap, "oracle state cap");
  rc->callback([&] { cmd_reconfigure(rc_g, rc_h, rc_pins, rc_phi, rc_psi, rc_oracle,
                                     rc_walk, rc_cap); });

  // homgraph
  std::string hg_g, hg_h, hg_pins, hg_mode = "walk", hg_dot;
  bool hg_black = false;
  long long hg_cap = 1'000'000;
  auto* hg = app.add_subcommand("homgraph", "explicit graph on the pinned maps");
  hg->add_option("pattern", hg_g, "pattern graph file")->required();
  hg->add_option("host", hg_h, "host graph file")->required();
  hg->add_option("pins", hg_pins, "pin mapping file")->required();
  hg->add_option("--mode", hg_mode, "edge mode: walk or reconfig")
      ->check(CLI::IsMember({"walk", "reconfig"}));
  hg->add_flag("--black-restricted", hg_black,
               "restrict to maps sending black vertices to black vertices");
  hg->add_option("--dot", hg_dot, "write a DOT rendering to this path");
  hg->add_option("--cap", hg_cap, "state cap");
  hg->callback([&] { cmd_homgraph(hg_g, hg_h, hg_pins, hg_mode, hg_black, hg_dot,
                                  hg_cap); });

  // spr
  std::string sp_h, sp_u, sp_v, sp_phi, sp_psi, sp_loops;
  bool sp_trivial = false, sp_no_exact = false;
  long long sp_cap = 1'000'000;
  int sp_k = 0;
  auto* sp = app.add_subcommand("spr", "shortest-path reconfiguration");
  sp->add_option("host", sp_h, "host graph file")->required();
  sp->add_option("u", sp_u, "start vertex");
  sp->add_option("v", sp_v, "end vertex");
  sp->add_option("--phi", sp_phi, "file with the first path (vertex sequence)");
  sp->add_option("--psi", sp_psi, "file with the second path (vertex sequence)");
  sp->add_flag("--trivial-check", sp_trivial, "run the SP-triviality verdict instead");
  sp->add_option("--loops", sp_loops,
                 "loop set: 'all', 'none', or comma-separated vertex names");
  sp->add_flag("--no-exact", sp_no_exact, "skip the exhaustive part of --trivial-check");
  sp->add_option("--cap", sp_cap, "oracle state cap");
  sp->add_option("--k", sp_k, "caller-claimed near-unanimity arity (reported only)");
  sp->callback([&] {
    if (sp_trivial) {
      cmd_spr(sp_h, "", "", "", "", true, sp_loops.empty() ? "all" : sp_loops,
              sp_no_exact, sp_cap, sp_k);
      return;
    }
    if (sp_u.empty() || sp_v.empty() || sp_phi.empty() || sp_psi.empty())
      throw CLI::ValidationError("spr", "u, v, --phi and --psi are required");
    cmd_spr(sp_h, sp_u, sp_v, sp_phi, sp_psi, false, sp_loops, sp_no_exact, sp_cap,
            sp_k);
  });

  // verify-bounds
  std::string vb_dir;
  uint64_t vb_seed = 20250816ULL;
  long long vb_cap = 1'000'000;
  auto* vb = app.add_subcommand("verify-bounds",
                                "oracle campaign checking every applicable bound");
  vb->add_option("corpus", vb_dir, "directory of .graph host files")->required();
  vb->add_option("--seed", vb_seed, "campaign seed");
  vb->add_option("--cap", vb_cap, "per-instance state cap");
  vb->callback([&] { cmd_verify_bounds(vb_dir, vb_seed, vb_cap); });

  // replay
  std::string rp_file;
  auto* rp = app.add_subcommand("replay", "re-validate a result document");
  rp->add_option("document", rp_file, "result document file")->required();
  rp->callback([&] { cmd_replay(rp_file); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const homreconf::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const homreconf::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const homreconf::InvalidEndpoints& e) {
    std::cerr << "invalid endpoints: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return g_exit;
}
