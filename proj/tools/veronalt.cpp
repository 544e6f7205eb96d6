// veronalt: command-line front end for the relatively free algebra engine.
//
// Exit codes: 0 success, 1 a check-style verdict came out false, 2 usage or
// input errors (including a degree beyond the cap).

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "json.hpp"
#include "veronalt/error.hpp"
#include "veronalt/identity_set.hpp"
#include "veronalt/relatively_free.hpp"
#include "veronalt/split_backend.hpp"
#include "veronalt/structure_ops.hpp"
#include "veronalt/term_parser.hpp"
#include "veronalt/veronese_invariants.hpp"

using json = nlohmann::ordered_json;
using namespace veronalt;

namespace {

struct Options {
  std::string variety = "alt";
  std::size_t rank = 2;
  std::optional<std::size_t> cap;
  std::optional<std::size_t> max_degree;
  std::string format = "table";
  std::uint64_t seed = 1;
  int threads = 0;
  bool timings = false;
  bool quiet = false;

  std::string expr;
  std::size_t n = 2;
  std::optional<std::size_t> cutoff;
  std::optional<std::size_t> degree;
  std::size_t chain = 2;
  std::string group_file;
  std::optional<std::size_t> scalar;
  bool swap = false;
  bool show_basis = false;
  std::vector<std::size_t> residues;
};

struct Output {
  json config = json::object();
  json results;
  int exit_code = 0;
};

void progress(const Options& o, const std::string& msg) {
  if (!o.quiet) std::cerr << "[veronalt] " << msg << std::endl;
}

json rational_json(const Rational& q) { return q.get_str(); }

json coords_json(const SparseVec& v) {
  json out = json::array();
  for (const auto& [c, x] : v) out.push_back(json::array({c, rational_json(x)}));
  return out;
}

json base_config(const Options& o, const RelativelyFreeAlgebra& alg) {
  json c;
  c["variety"] = o.variety;
  c["identities"] = alg.identities().name();
  c["rank"] = alg.rank();
  c["cap"] = alg.cap();
  c["seed"] = o.seed;
  return c;
}

std::unique_ptr<RelativelyFreeAlgebra> make_algebra(const Options& o, std::size_t rank) {
  auto alg = std::make_unique<RelativelyFreeAlgebra>(IdentitySet::by_selector(o.variety), rank, o.cap);
  int threads = o.threads;
#ifdef _OPENMP
  if (threads <= 0) threads = omp_get_max_threads();
#endif
  alg->set_threads(threads);
  return alg;
}

std::size_t max_degree_or_cap(const Options& o, const RelativelyFreeAlgebra& alg) {
  const std::size_t d = o.max_degree.value_or(alg.cap());
  alg.check_cap(d);
  return d;
}

json report_json(const GeneratorReport& r, RelativelyFreeAlgebra& alg, bool show_basis) {
  json rows = json::array();
  for (const auto& d : r.degrees) {
    json row;
    row["degree"] = d.degree;
    row["target_dim"] = d.target_dim;
    row["generated_dim"] = d.generated_dim;
    row["new_count"] = d.new_count;
    if (show_basis) {
      const DegreeLayout layout(alg, d.degree);
      const auto names = generator_names(alg.rank());
      json basis = json::array();
      for (const auto& v : d.new_generators) basis.push_back(format(layout.to_poly(alg, v), names));
      row["new_generators"] = basis;
    }
    rows.push_back(row);
  }
  return rows;
}

Output cmd_dims(const Options& o) {
  auto alg = make_algebra(o, o.rank);
  const std::size_t max = max_degree_or_cap(o, *alg);
  Output out;
  out.config = base_config(o, *alg);
  out.config["max_degree"] = max;
  out.results = json::array();
  for (std::size_t d = 1; d <= max; ++d) {
    alg->build_up_to(d);
    std::uint64_t monomials = 0, dim = 0;
    for (const auto& m : multidegrees_of_total(alg->rank(), d)) {
      monomials += alg->component(m).monomial_count();
      dim += alg->quotient_dim(m);
    }
    out.results.push_back({{"degree", d}, {"dimension", dim}, {"monomials", monomials}});
    progress(o, "degree " + std::to_string(d) + " built");
  }
  return out;
}

Output cmd_check(const Options& o) {
  const ParsedIdentity parsed = parse_identity(o.expr);
  const std::size_t rank = std::max<std::size_t>(parsed.variables.size(), 1);
  auto alg = make_algebra(o, rank);
  alg->check_cap(parsed.poly.max_degree());
  Output out;
  out.config = base_config(o, *alg);
  json failing = json::array();
  for (const auto& [m, v] : alg->normal_form(parsed.poly))
    if (!v.empty()) failing.push_back(m.to_string());
  const bool holds = failing.empty();
  out.results = {{"expression", o.expr},
                 {"variables", parsed.variables},
                 {"verdict", holds},
                 {"failing_multidegrees", failing}};
  out.exit_code = holds ? 0 : 1;
  return out;
}

Output cmd_nf(const Options& o) {
  const ParsedIdentity parsed = parse_identity(o.expr);
  const std::size_t rank = std::max(parsed.variables.size(), o.rank);
  auto alg = make_algebra(o, rank);
  alg->check_cap(parsed.poly.max_degree());
  Output out;
  out.config = base_config(o, *alg);
  std::vector<std::string> names = parsed.variables;
  const auto defaults = generator_names(rank);
  for (std::size_t i = names.size(); i < rank; ++i) names.push_back(defaults[i]);
  json comps = json::array();
  for (const auto& [m, v] : alg->normal_form(parsed.poly)) {
    comps.push_back({{"multidegree", m.to_string()},
                     {"quotient_dim", alg->quotient_dim(m)},
                     {"normal_form", format(alg->to_poly(m, v), names)},
                     {"coordinates", coords_json(v)}});
  }
  out.results = {{"expression", o.expr}, {"variables", names}, {"components", comps}};
  return out;
}

Output cmd_veronese(const Options& o) {
  auto alg = make_algebra(o, o.rank);
  const std::size_t max = max_degree_or_cap(o, *alg);
  Output out;
  out.config = base_config(o, *alg);
  out.config["n"] = o.n;
  out.config["max_degree"] = max;
  alg->build_up_to(max);
  progress(o, "components built through degree " + std::to_string(max));
  out.results = report_json(new_generators(*alg, {o.n, max}), *alg, o.show_basis);
  return out;
}

Output cmd_invariants(const Options& o) {
  auto alg = make_algebra(o, o.rank);
  const std::size_t max = max_degree_or_cap(o, *alg);
  std::optional<LinearGroupAction> group;
  std::string source;
  if (!o.group_file.empty()) {
    group = LinearGroupAction::from_file(alg->rank(), o.group_file);
    source = o.group_file;
  } else if (o.scalar) {
    group = LinearGroupAction::scalar(alg->rank(), *o.scalar);
    source = "scalar " + std::to_string(*o.scalar);
  } else if (o.swap) {
    if (alg->rank() < 2) throw Error("--swap needs rank >= 2");
    group = LinearGroupAction::swap(alg->rank(), 0, 1);
    source = "swap";
  } else {
    throw Error("invariants needs --group, --scalar or --swap");
  }
  Output out;
  out.config = base_config(o, *alg);
  out.config["group"] = source;
  out.config["group_order"] = group->order();
  out.config["max_degree"] = max;
  alg->build_up_to(max);
  progress(o, "components built through degree " + std::to_string(max));
  QuotientAction qa(*alg, *group);
  out.results = report_json(invariant_generators(qa, max), *alg, o.show_basis);
  return out;
}

// nucleus, center, or associative nucleus by degree.
Output cmd_truncated(const Options& o, const std::string& which) {
  auto alg = make_algebra(o, o.rank);
  const std::size_t cutoff = o.cutoff.value_or(alg->cap());
  alg->check_cap(cutoff);
  StructureOps ops(*alg);
  Output out;
  out.config = base_config(o, *alg);
  out.config["cutoff"] = cutoff;
  out.results = json::array();
  std::size_t lo = 1, hi = cutoff - 1;
  if (o.degree) lo = hi = *o.degree;
  for (std::size_t d = lo; d <= hi; ++d) {
    const GradedSubspace nuc = ops.nucleus_component(d, cutoff);
    json row;
    row["degree"] = d;
    std::size_t total = 0;
    for (const auto& m : multidegrees_of_total(alg->rank(), d)) total += alg->quotient_dim(m);
    row["component_dim"] = total;
    row["nucleus_dim"] = nuc.dim();
    if (which == "center") row["center_dim"] = ops.center_component(d, cutoff).dim();
    if (which == "nucleus") row["assoc_nucleus_dim"] = ops.assoc_nucleus_component(d, cutoff).dim();
    out.results.push_back(row);
    progress(o, which + " degree " + std::to_string(d) + " done");
  }
  if (which == "nucleus" && !o.degree) {
    const auto closure = ops.commutator_closure(cutoff);
    out.config["commutator_closure_checked"] = closure.checked;
    out.config["commutator_closure_failures"] = closure.failures.size();
  }
  return out;
}

Output cmd_dchain(const Options& o) {
  if (o.chain == 0) throw Error("-i must be at least 1");
  auto alg = make_algebra(o, o.rank);
  const std::size_t max = max_degree_or_cap(o, *alg);
  StructureOps ops(*alg);
  Output out;
  out.config = base_config(o, *alg);
  out.config["i"] = o.chain;
  out.config["max_degree"] = max;
  out.results = json::array();
  for (std::size_t d = 1; d <= max; ++d) {
    std::size_t cur = 0, prev = 0;
    bool contained = true;
    for (const auto& m : multidegrees_of_total(alg->rank(), d)) {
      const auto& di = ops.d_chain(o.chain, m);
      const auto& dp = ops.d_chain(o.chain - 1, m);
      Echelon e(alg->quotient_dim(m));
      for (const auto& v : dp) e.insert(v);
      for (const auto& v : di) contained = contained && e.contains(v);
      cur += di.size();
      prev += dp.size();
    }
    out.results.push_back({{"degree", d}, {"dim", cur}, {"previous_dim", prev}, {"contained", contained}});
    progress(o, "D_" + std::to_string(o.chain) + " degree " + std::to_string(d) + " done");
  }
  return out;
}

Output cmd_split_check(const Options& o) {
  const ParsedIdentity parsed = parse_identity(o.expr);
  SplitBackend backend;
  const SplitRep rep = backend.eval(parsed.poly);
  Output out;
  out.config["rank"] = SplitBackend::kMaxRank;
  out.config["variables"] = parsed.variables;
  const bool zero = rep.is_zero();
  out.results = {{"expression", o.expr},
                 {"assoc_part_zero", rep.assoc_part.empty()},
                 {"octonion_part_zero", rep.oct_part.is_zero()},
                 {"verdict", zero}};
  out.exit_code = zero ? 0 : 1;
  return out;
}

Output cmd_pigeonhole(const Options& o) {
  const auto witness = pigeonhole_witness(o.n, o.residues);
  Output out;
  out.config["n"] = o.n;
  const std::size_t bound = (o.n - 1) * (o.n - 1) + 1;
  out.results = {{"size", o.residues.size()},
                 {"bound", bound},
                 {"guaranteed", o.residues.size() >= bound},
                 {"witness", witness ? json(*witness) : json("none")}};
  return out;
}

std::string cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void print_table(const json& results, bool csv) {
  if (results.is_array()) {
    if (results.empty()) return;
    std::vector<std::string> keys;
    for (const auto& [k, v] : results.front().items()) keys.push_back(k);
    std::vector<std::size_t> width(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) {
      width[i] = keys[i].size();
      for (const auto& row : results) width[i] = std::max(width[i], cell(row[keys[i]]).size());
    }
    auto line = [&](auto get) {
      for (std::size_t i = 0; i < keys.size(); ++i) {
        const std::string s = get(i);
        if (csv)
          std::cout << (i ? "," : "") << (s.find(',') != std::string::npos ? "\"" + s + "\"" : s);
        else
          std::cout << (i ? "  " : "") << std::string(width[i] - s.size(), ' ') << s;
      }
      std::cout << '\n';
    };
    line([&](std::size_t i) { return keys[i]; });
    for (const auto& row : results) line([&](std::size_t i) { return cell(row[keys[i]]); });
    return;
  }
  for (const auto& [k, v] : results.items()) {
    if (csv)
      std::cout << k << ',' << (cell(v).find(',') != std::string::npos ? "\"" + cell(v) + "\"" : cell(v)) << '\n';
    else
      std::cout << k << ": " << cell(v) << '\n';
  }
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--variety", o.variety, "alt | assoc | ralt | nonassoc | custom:<path>");
  sub->add_option("--rank", o.rank, "number of generators")->check(CLI::PositiveNumber);
  sub->add_option("--cap", o.cap, "degree cap (default 8 for rank <= 2, 6 for rank 3, 5 above)");
  sub->add_option("--format", o.format, "table | json | csv")->check(CLI::IsMember({"table", "json", "csv"}));
  sub->add_option("--seed", o.seed, "seed for randomized checks");
  sub->add_option("--threads", o.threads, "worker threads (0 = all)");
  sub->add_flag("--timings", o.timings, "include wall-clock timings in the output");
  sub->add_flag("--quiet", o.quiet, "no progress on standard error");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in relatively free nonassociative algebras"};
  app.require_subcommand(1);
  Options o;

  auto* dims = app.add_subcommand("dims", "graded dimensions of the relatively free algebra");
  auto* check = app.add_subcommand("check", "decide whether an expression is an identity of the variety");
  auto* nf = app.add_subcommand("nf", "normal form of an expression");
  auto* veronese = app.add_subcommand("veronese", "new generators of the Veronese subalgebra by degree");
  auto* invariants = app.add_subcommand("invariants", "new generators of an invariant subalgebra by degree");
  auto* nucleus = app.add_subcommand("nucleus", "truncated nucleus and associative nucleus dimensions");
  auto* center = app.add_subcommand("center", "truncated center dimensions");
  auto* dchain = app.add_subcommand("dchain", "dimensions of D_i and containment in D_{i-1}");
  auto* split = app.add_subcommand("split-check", "zero test in the associative (+) octonion representation");
  auto* pigeon = app.add_subcommand("pigeonhole", "residue class with at least n members");

  for (auto* sub : {dims, check, nf, veronese, invariants, nucleus, center, dchain, split, pigeon}) add_common(sub, o);
  for (auto* sub : {dims, veronese, invariants, dchain}) sub->add_option("--max-degree", o.max_degree, "largest degree");
  for (auto* sub : {check, nf, split}) sub->add_option("expr", o.expr, "expression in the term language")->required();
  for (auto* sub : {nucleus, center}) {
    sub->add_option("--cutoff", o.cutoff, "truncation degree D (default: the cap)");
    sub->add_option("--degree", o.degree, "single degree d < D");
  }
  veronese->add_option("-n", o.n, "Veronese index")->check(CLI::Range(2, 64));
  veronese->add_flag("--basis", o.show_basis, "list the new generators");
  invariants->add_option("--group", o.group_file, "group file: matrices separated by blank lines, or 'scalar k'");
  invariants->add_option("--scalar", o.scalar, "cyclic scalar group of this order")->check(CLI::PositiveNumber);
  invariants->add_flag("--swap", o.swap, "the group swapping the first two generators");
  invariants->add_flag("--basis", o.show_basis, "list the new generators");
  dchain->add_option("-i", o.chain, "chain index (D_0 = A)");
  pigeon->add_option("-n", o.n, "modulus n >= 2")->required();
  pigeon->add_option("residues", o.residues, "residues in 1..n-1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  Output out;
  std::string command;
  try {
    if (*dims) command = "dims", out = cmd_dims(o);
    else if (*check) command = "check", out = cmd_check(o);
    else if (*nf) command = "nf", out = cmd_nf(o);
    else if (*veronese) command = "veronese", out = cmd_veronese(o);
    else if (*invariants) command = "invariants", out = cmd_invariants(o);
    else if (*nucleus) command = "nucleus", out = cmd_truncated(o, "nucleus");
    else if (*center) command = "center", out = cmd_truncated(o, "center");
    else if (*dchain) command = "dchain", out = cmd_dchain(o);
    else if (*split) command = "split-check", out = cmd_split_check(o);
    else if (*pigeon) command = "pigeonhole", out = cmd_pigeonhole(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (o.format == "json") {
    json doc;
    doc["command"] = command;
    doc["config"] = out.config;
    doc["results"] = out.results;
    doc["timings"] = o.timings ? json{{"total_seconds", seconds}} : json::object();
    std::cout << doc.dump(2) << '\n';
  } else {
    print_table(out.results, o.format == "csv");
    if (o.timings) std::cerr << "total_seconds: " << seconds << '\n';
  }
  return out.exit_code;
}
