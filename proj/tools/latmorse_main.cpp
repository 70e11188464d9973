// Command-line front end: load JSON inputs, run the order-theoretic and
// combinatorial-dynamics computations, emit JSON/DOT artifacts and
// certificates.

#include "latmorse/acceptance.hpp"
#include "latmorse/attractors.hpp"
#include "latmorse/dot.hpp"
#include "latmorse/json_io.hpp"
#include "latmorse/pipeline.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <map>
#include <optional>

namespace {

using namespace latmorse;

constexpr int kExitUnverified = 2;
constexpr int kExitCertificateFailure = 3;
constexpr int kExitParse = 64;
constexpr int kExitValidation = 65;
constexpr int kExitCompute = 70;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::ParseError:
      return kExitParse;
    case Errc::ComputeError:
    case Errc::NotWellDefined:
    case Errc::ThetaIllDefined:
    case Errc::EmbeddingFailure:
      return kExitCompute;
    default:
      return kExitValidation;
  }
}

void emit(const std::string& out_dir, const std::string& name, const std::string& content) {
  if (out_dir.empty()) {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << "\n";
  } else {
    std::filesystem::create_directories(out_dir);
    write_text_file(out_dir + "/" + name, content);
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Bitset atom_mask(const Relation& f, const Json& labels) {
  Bitset mask(f.atom_count());
  for (const auto& l : labels) {
    bool found = false;
    for (std::size_t i = 0; i < f.atom_count(); ++i)
      if (f.atoms()[i] == l.get<std::string>()) {
        mask.set(i);
        found = true;
      }
    require(found, Errc::ValidationError, "unknown atom '" + l.get<std::string>() + "'");
  }
  return mask;
}

int run_lattice_birkhoff(const std::string& poset_path, const std::string& out_dir,
                         const std::string& format) {
  auto lattice = downset_lattice(poset_from_json(load_json_file(poset_path)));
  if (format == "dot") {
    // Hasse diagram of the element order.
    std::vector<Bitset> below(lattice.size(), Bitset(lattice.size()));
    std::vector<std::string> labels;
    for (std::size_t e = 0; e < lattice.size(); ++e) {
      labels.push_back(lattice.label(e));
      for (std::size_t d = 0; d < lattice.size(); ++d)
        if (lattice.leq(d, e)) below[e].set(d);
    }
    emit(out_dir, "lattice.dot", dot_hasse(FinitePoset(labels, below), "lattice"));
  } else {
    emit(out_dir, "lattice.json", dump(lattice_to_json(lattice)));
  }
  return 0;
}

int run_forms_check(const std::string& lattice_path, const std::string& form_path,
                    const std::string& out_dir) {
  auto lattice = lattice_from_json(load_json_file(lattice_path));
  auto form = form_from_json(lattice, load_json_file(form_path));
  auto axioms = check_form_axioms(form);
  emit(out_dir, "axioms.json", dump(axioms_to_json(axioms)));
  return 0;
}

int run_dynamics(const std::string& what, const std::string& relation_path,
                 const std::string& out_dir, const std::string& format) {
  auto f = relation_from_json(load_json_file(relation_path));
  if (what == "attractors") {
    emit(out_dir, "attractors.json", dump(lattice_to_json(attractor_lattice(f).lattice)));
    return 0;
  }
  if (what == "repellers") {
    emit(out_dir, "repellers.json", dump(lattice_to_json(repeller_lattice(f).lattice)));
    return 0;
  }
  auto att = attractor_lattice(f);
  auto m = morse_representation(f, att.sets);
  if (format == "json")
    emit(out_dir, "morse.json", dump(morse_representation_to_json(m, f.atoms())));
  else
    emit(out_dir, "morse.dot", dot_hasse(m.order, "morse_graph"));
  return 0;
}

int run_tessellate(const std::string& relation_path, const std::string& sets_path,
                   const std::string& out_dir, const std::string& format) {
  auto f = relation_from_json(load_json_file(relation_path));
  std::vector<Bitset> family;
  if (!sets_path.empty()) {
    auto j = load_json_file(sets_path);
    require(j.contains("sets") && j["sets"].is_array(), Errc::ParseError,
            "sets file needs a 'sets' array");
    for (const auto& s : j["sets"]) family.push_back(atom_mask(f, s));
  } else {
    family = attractor_lattice(f).sets;
  }
  family.push_back(f.full_set());
  family.push_back(f.empty_set());
  auto tmd = tessellated_morse_decomposition(f, family);
  if (format == "json") {
    Json j;
    j["tessellation"] = tessellation_to_json(tmd.tessellation, f.atoms());
    j["morse"] = morse_representation_to_json(tmd.morse, f.atoms());
    Json pi = Json::array();
    for (std::size_t m = 0; m < tmd.pi.size(); ++m)
      pi.push_back({tmd.morse.order.label(m), tmd.tessellation.order.label(tmd.pi[m])});
    j["embedding"] = std::move(pi);
    Json empties = Json::array();
    for (auto t : tmd.empty_tiles) empties.push_back(tmd.tessellation.order.label(t));
    j["tiles_with_empty_invariant_part"] = std::move(empties);
    emit(out_dir, "tessellation.json", dump(j));
  } else {
    emit(out_dir, "tessellation.dot", dot_hasse(tmd.tessellation.order, "tessellation"));
  }
  return 0;
}

std::optional<AnalyticOracle> load_oracle(const Relation& f, const std::string& path) {
  if (path.empty()) return std::nullopt;
  auto j = load_json_file(path);
  AnalyticOracle oracle;
  if (j.contains("per_cell")) {
    for (const auto& cell : j["per_cell"]) oracle.per_cell.push_back(interval_set_from_json(cell));
    require(oracle.per_cell.size() == f.atom_count(), Errc::ValidationError,
            "per_cell oracle must list every cell");
  }
  if (j.contains("per_set")) {
    for (const auto& entry : j["per_set"]) {
      require(entry.contains("cells") && entry.contains("limit"), Errc::ParseError,
              "per_set entries need 'cells' and 'limit'");
      oracle.per_set[atom_mask(f, entry["cells"])] = interval_set_from_json(entry["limit"]);
    }
  }
  return oracle;
}

int run_pipeline(const std::string& map_path, const std::string& grid_path, bool closure,
                 const std::string& oracle_path, const std::string& out_dir) {
  auto map = map_from_json(load_json_file(map_path));
  auto grid = grid_from_json(load_json_file(grid_path));
  auto oa = build_outer_approximation(map, grid);
  if (closure) oa = close_outer_approximation(oa);

  auto oracle = load_oracle(oa.relation, oracle_path);
  std::vector<Bitset> test_sets;
  if (oracle)
    for (const auto& [mask, limit] : oracle->per_set)
      if (oa.relation.forward_invariant(mask)) test_sets.push_back(mask);
  auto report = verify_commutative_model(oa, oracle, test_sets);

  emit(out_dir, "relation.json", dump(relation_to_json(oa.relation)));
  auto att = attractor_lattice(oa.relation);
  std::vector<Bitset> blocks = att.sets;
  blocks.push_back(oa.relation.full_set());
  auto tmd = tessellated_morse_decomposition(oa.relation, blocks);
  emit(out_dir, "morse_graph.dot", dot_hasse(tmd.morse.order, "morse_graph"));
  emit(out_dir, "tessellation.dot", dot_hasse(tmd.tessellation.order, "tessellation"));
  emit(out_dir, "certificates.json", dump(model_report_to_json(report, oa.relation.atoms())));

  if (!report.w.pass || report.l.status == LStatus::Fail) return kExitCertificateFailure;
  for (const auto& sq : report.squares)
    if (sq.verified && !sq.pass) return kExitCertificateFailure;
  if (report.any_unverified()) return kExitUnverified;
  return 0;
}

int run_selftest(std::uint64_t seed, const std::string& out_dir) {
  latmorse::acceptance::Options opts;
  opts.seed = seed;
  opts.artifact_dir = out_dir;
  auto results = latmorse::acceptance::run_all(opts, std::cout);
  for (const auto& r : results)
    if (!r.pass) return kExitCertificateFailure;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite order-theoretic machinery for combinatorial dynamics"};
  app.require_subcommand(1);

  std::string poset_path, lattice_path, form_path, relation_path, sets_path;
  std::string map_path, grid_path, oracle_path, out_dir;
  std::string format;
  bool closure = false;
  std::uint64_t seed = 7;

  auto* lattice = app.add_subcommand("lattice", "finite distributive lattices");
  auto* birkhoff = lattice->add_subcommand("birkhoff", "down-set lattice of a poset");
  birkhoff->add_option("--poset", poset_path, "poset JSON")->required();
  birkhoff->add_option("--out", out_dir, "output directory (stdout if omitted)");
  birkhoff->add_option("--format", format, "json|dot")->check(CLI::IsMember({"json", "dot"}));

  auto* forms = app.add_subcommand("forms", "lattice forms");
  auto* forms_check = forms->add_subcommand("check", "evaluate the form axioms");
  forms_check->add_option("--lattice", lattice_path, "lattice JSON")->required();
  forms_check->add_option("--form", form_path, "form JSON (target + table)")->required();
  forms_check->add_option("--out", out_dir, "output directory (stdout if omitted)");

  auto* dynamics = app.add_subcommand("dynamics", "dynamics of a finite relation");
  auto* dyn_morse = dynamics->add_subcommand("morse", "Morse representation of the attractors");
  auto* dyn_att = dynamics->add_subcommand("attractors", "attractor lattice");
  auto* dyn_rep = dynamics->add_subcommand("repellers", "repeller lattice");
  for (auto* sub : {dyn_morse, dyn_att, dyn_rep}) {
    sub->add_option("--relation", relation_path, "relation JSON")->required();
    sub->add_option("--out", out_dir, "output directory (stdout if omitted)");
  }
  dyn_morse->add_option("--format", format, "json|dot")->check(CLI::IsMember({"json", "dot"}));

  auto* tessellate = app.add_subcommand("tessellate", "Morse tessellation of invariant sets");
  tessellate->add_option("--relation", relation_path, "relation JSON")->required();
  tessellate->add_option("--sets", sets_path, "forward-invariant cell sets JSON");
  tessellate->add_option("--out", out_dir, "output directory (stdout if omitted)");
  tessellate->add_option("--format", format, "json|dot")->check(CLI::IsMember({"json", "dot"}));

  auto* pipeline = app.add_subcommand("pipeline", "grid model of a sampled map");
  auto* pipeline_run = pipeline->add_subcommand("run", "build and certify the model");
  pipeline_run->add_option("--map", map_path, "piecewise affine map JSON")->required();
  pipeline_run->add_option("--grid", grid_path, "grid JSON")->required();
  pipeline_run->add_flag("--closure", closure, "take the reflexive-transitive closure");
  pipeline_run->add_option("--omega-oracle", oracle_path, "analytic limit oracle JSON");
  pipeline_run->add_option("--out", out_dir, "output directory (stdout if omitted)");

  auto* selftest = app.add_subcommand("selftest", "run the full verification suite");
  selftest->add_option("--seed", seed, "seed for the randomized corpora");
  selftest->add_option("--out", out_dir, "artifact directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (birkhoff->parsed())
      return run_lattice_birkhoff(poset_path, out_dir, format.empty() ? "json" : format);
    if (forms_check->parsed()) return run_forms_check(lattice_path, form_path, out_dir);
    if (dyn_morse->parsed())
      return run_dynamics("morse", relation_path, out_dir, format.empty() ? "dot" : format);
    if (dyn_att->parsed()) return run_dynamics("attractors", relation_path, out_dir, "json");
    if (dyn_rep->parsed()) return run_dynamics("repellers", relation_path, out_dir, "json");
    if (tessellate->parsed())
      return run_tessellate(relation_path, sets_path, out_dir, format.empty() ? "dot" : format);
    if (pipeline_run->parsed())
      return run_pipeline(map_path, grid_path, closure, oracle_path, out_dir);
    if (selftest->parsed()) return run_selftest(seed, out_dir);
    std::cerr << "no subcommand selected\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitCompute;
  }
}
