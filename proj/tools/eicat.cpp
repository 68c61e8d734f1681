#include "eicat/report.hpp"
#include "eicat/resolution.hpp"
#include "eicat/verify.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace eicat;

namespace {

struct JobOptions {
  std::string species;
  std::string group;
  std::string group_file;
  int d = 1;
  std::uint64_t q = 2;
  int n = 0;
  std::uint64_t field_char = 0;
  int bound = -1;     // -1: default n+4
  int headroom = -1;  // -1: default n+2
  std::string format = "md";
  unsigned long long seed = 1;

  int bound_or_default() const { return bound >= 0 ? bound : n + 4; }
  int headroom_or_default() const { return headroom >= 0 ? headroom : n + 2; }
};

void add_job_options(CLI::App* cmd, JobOptions& j, bool need_species = true) {
  auto* s = cmd->add_option("--species", j.species, "fi|fi_g|fi_d|oi|oi_g|oi_d|vi");
  if (need_species) s->required();
  cmd->add_option("--group", j.group, "built-in group name (c1..c6, s3, klein)");
  cmd->add_option("--group-file", j.group_file, "JSON multiplication-table file");
  cmd->add_option("--d", j.d, "color count for fi_d/oi_d");
  cmd->add_option("--q", j.q, "prime field size for vi");
  cmd->add_option("--n", j.n, "truncation level")->required();
  cmd->add_option("--char", j.field_char, "field characteristic: 0 or a prime");
  cmd->add_option("--bound", j.bound, "pd search bound B (default n+4)");
  cmd->add_option("--headroom", j.headroom, "verification headroom N (default n+2)");
  cmd->add_option("--format", j.format, "md|json|csv");
  cmd->add_option("--seed", j.seed, "seed for randomized suites");
}

Species species_from(const JobOptions& j) {
  std::optional<FiniteGroup> g;
  if (!j.group_file.empty())
    g = load_group_file(j.group_file);
  else if (!j.group.empty())
    g = builtin_group(j.group);
  return make_species(j.species, g, j.d, j.q);
}

Format format_from(const JobOptions& j) {
  auto f = parse_format(j.format);
  if (!f) throw std::invalid_argument("unknown format: " + j.format);
  return *f;
}

/// Runs fn with the field object matching the characteristic.
template <class Fn>
int with_field(std::uint64_t c, Fn&& fn) {
  if (c == 0) return fn(RationalField{});
  return fn(PrimeField{c});
}

int run_enumerate(const JobOptions& j, bool dump) {
  FiniteCategory cat = build_category(species_from(j), j.n);
  if (dump)
    std::cout << category_to_json(cat) << "\n";
  else
    std::cout << enumerate_report(cat, format_from(j));
  return 0;
}

template <class K>
GlobalDimReport gldim_for(const Species& sp, int n, const K& f, int bound) {
  FiniteCategory cat = build_category(sp, n);
  MonomialAlgebra alg = category_algebra_structure(cat).algebra;
  return global_dimension(cat, f, bound, alg);
}

std::string predicted_string(const GlDimValue& v) {
  return v.infinite ? "inf" : std::to_string(v.value);
}

int run_gldim(const JobOptions& j) {
  Species sp = species_from(j);
  Format fmt = format_from(j);
  return with_field(j.field_char, [&](auto f) {
    GlobalDimReport r = gldim_for(sp, j.n, f, j.bound_or_default());
    if (fmt == Format::Json) {
      std::cout << global_dim_report_json(r) << "\n";
    } else {
      TableRow row{r.species, r.n, r.field, predicted_string(r.predicted),
                   gldim_value_string(r), r.agree};
      std::cout << render_table({row}, fmt);
    }
    return r.agree ? 0 : 3;
  });
}

int run_table(const JobOptions& j, std::vector<std::string> species_list, int nmax,
              std::vector<std::uint64_t> chars) {
  if (species_list.empty())
    species_list = {"fi", "fi_g", "fi_d", "oi", "oi_g", "oi_d", "vi"};
  if (chars.empty()) chars = {0, 2, 3, 5};
  // expand each species name into its grid variants
  std::vector<Species> variants;
  for (const auto& name : species_list) {
    if (name == "fi_g" || name == "oi_g") {
      for (const char* g : {"c2", "c3"})
        variants.push_back(make_species(name, builtin_group(g), 1, 2));
    } else if (name == "fi_d" || name == "oi_d") {
      for (int d : {1, 2}) variants.push_back(make_species(name, std::nullopt, d, 2));
    } else if (name == "vi") {
      variants.push_back(make_species(name, std::nullopt, 1, 2));
    } else {
      variants.push_back(make_species(name, std::nullopt, 1, 2));
    }
  }
  std::vector<TableRow> rows;
  bool all_agree = true;
  for (const auto& sp : variants)
    for (int n = 0; n <= nmax; ++n)
      for (std::uint64_t c : chars)
        with_field(c, [&](auto f) {
          GlobalDimReport r = gldim_for(sp, n, f, j.bound >= 0 ? j.bound : n + 4);
          rows.push_back({r.species, r.n, r.field, predicted_string(r.predicted),
                          gldim_value_string(r), r.agree});
          all_agree = all_agree && r.agree;
          return 0;
        });
  std::cout << render_table(rows, format_from(j));
  return all_agree ? 0 : 3;
}

std::string betti_render(const BettiTable& bt, Format fmt) {
  if (fmt == Format::Csv) return bt.to_csv();
  std::string out;
  if (fmt == Format::Json) {
    out = "{\"betti\":[";
    for (size_t s = 0; s < bt.entry.size(); ++s) {
      out += s ? ",[" : "[";
      for (size_t x = 0; x < bt.entry[s].size(); ++x)
        out += (x ? "," : "") + std::to_string(bt.entry[s][x]);
      out += "]";
    }
    out += "]}\n";
    return out;
  }
  size_t cols = bt.entry.empty() ? 0 : bt.entry[0].size();
  out = "| s |";
  for (size_t x = 0; x < cols; ++x) out += " " + std::to_string(x) + " |";
  out += "\n|---|";
  for (size_t x = 0; x < cols; ++x) out += "---|";
  out += "\n";
  for (size_t s = 0; s < bt.entry.size(); ++s) {
    out += "| " + std::to_string(s) + " |";
    for (int v : bt.entry[s]) out += " " + std::to_string(v) + " |";
    out += "\n";
  }
  return out;
}

int run_resolve(const JobOptions& j, const std::string& selector, const std::string& engine) {
  Species sp = species_from(j);
  return with_field(j.field_char, [&](auto f) {
    using K = decltype(f);
    FiniteCategory cat = build_category(sp, j.n);
    CModule<K> v = zero_module<K>(cat, f);
    bool is_simple = false;
    int simple_x = 0;
    if (selector == "amodj") {
      v = a_mod_j_module(cat, f);
    } else {
      auto colon = selector.find(':');
      if (colon == std::string::npos)
        throw std::invalid_argument("module selector: simple:X[:sign] | rep:X | amodj");
      std::string kind = selector.substr(0, colon);
      std::string rest = selector.substr(colon + 1);
      bool sign = false;
      auto colon2 = rest.find(':');
      if (colon2 != std::string::npos) {
        sign = rest.substr(colon2 + 1) == "sign";
        rest = rest.substr(0, colon2);
      }
      int x = std::stoi(rest);
      if (x < 0 || x > cat.n) throw std::invalid_argument("module selector: object out of range");
      if (kind == "simple") {
        AutModule<K> w =
            sign ? sign_character(cat, f, x) : trivial_character(cat, f, x);
        v = simple_module(cat, f, x, w);
        is_simple = true;
        simple_x = x;
      } else if (kind == "rep") {
        v = representable_projective(cat, f, x);
      } else {
        throw std::invalid_argument("module selector: unknown kind " + kind);
      }
    }
    if (engine == "minimal") {
      MinimalResolution<K> res;
      try {
        res = minimal_resolution(v, j.bound_or_default());
      } catch (const RegimeViolation& e) {
        std::cerr << e.what() << "\nHint: rerun with --engine free.\n";
        return 2;
      }
      std::cout << betti_render(res.betti, format_from(j));
      if (is_simple && !res.betti.linear_for(simple_x)) {
        std::cerr << "linearity assertion failed for the simple module\n";
        return 4;
      }
      return 0;
    }
    if (engine != "free") throw std::invalid_argument("engine must be minimal or free");
    MonomialAlgebra alg = category_algebra_structure(cat).algebra;
    FreeResolution<K> res = free_resolution(v, j.bound_or_default(), alg);
    // representable-summand counts per stage and generator object
    BettiTable bt;
    for (const auto& stage : res.gen_objs) {
      std::vector<int> row(cat.n + 1, 0);
      for (int x : stage) row[x]++;
      bt.entry.push_back(row);
    }
    std::cout << betti_render(bt, format_from(j));
    return 0;
  });
}

int run_verify(const JobOptions& j) {
  Species sp = species_from(j);
  return with_field(j.field_char, [&](auto f) {
    auto results = run_verify_suite(sp, j.n, f, j.headroom_or_default(), 20, j.seed);
    std::cout << check_results_json(results) << "\n";
    return checks_all_passed(results) ? 0 : 4;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eicat: finite EI-category algebra workbench"};
  app.require_subcommand(1);

  JobOptions je, jg, jt, jr, jv;
  auto* enumerate = app.add_subcommand("enumerate", "category and algebra report");
  add_job_options(enumerate, je);
  bool dump = false;
  enumerate->add_flag("--dump", dump, "full category dump with morphism payloads (JSON)");
  auto* gldim = app.add_subcommand("gldim", "predicted vs computed global dimension");
  add_job_options(gldim, jg);
  auto* table = app.add_subcommand("table", "global-dimension grid");
  std::vector<std::string> table_species;
  std::vector<std::uint64_t> table_chars;
  int nmax = 3;
  table->add_option("--species", table_species, "species names (default: all)");
  table->add_option("--nmax", nmax, "maximum truncation level");
  table->add_option("--chars", table_chars, "characteristics (default: 0 2 3 5)");
  table->add_option("--bound", jt.bound, "pd search bound B (default n+4)");
  table->add_option("--format", jt.format, "md|json|csv");
  auto* resolve = app.add_subcommand("resolve", "Betti table of a module");
  add_job_options(resolve, jr);
  std::string selector = "simple:0";
  std::string engine = "minimal";
  resolve->add_option("--module", selector, "simple:X[:sign] | rep:X | amodj");
  resolve->add_option("--engine", engine, "minimal|free");
  auto* verify = app.add_subcommand("verify", "lemma property suite");
  add_job_options(verify, jv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (enumerate->parsed()) return run_enumerate(je, dump);
    if (gldim->parsed()) return run_gldim(jg);
    if (table->parsed()) return run_table(jt, table_species, nmax, table_chars);
    if (resolve->parsed()) return run_resolve(jr, selector, engine);
    if (verify->parsed()) return run_verify(jv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}
