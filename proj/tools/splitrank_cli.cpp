// Command-line front end: catalog browsing, single-space queries, golden-table
// verification sweeps, product composition, and Hall checks.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "splitrank/tables.hpp"

using json = nlohmann::ordered_json;
using namespace splitrank;

namespace {

struct RunConfig {
  int max_rank = 10;
  int max_param_k = 6;
  int oracle_rank_bound = 5;
  std::string format = "text";
};

std::string default_format() {
  const char* env = std::getenv("SPLITRANK_FORMAT");
  if (env == nullptr) return "text";
  std::string f = env;
  return (f == "text" || f == "csv" || f == "json") ? f : "text";
}

json json_header() { return json{{"schema_version", 1}}; }

[[noreturn]] void die_unknown_space(const std::vector<SymmetricSpaceEntry>& catalog,
                                    const std::string& name) {
  std::cerr << "unknown space '" << name << "'; did you mean '"
            << nearest_name(catalog, name) << "'?\n";
  std::exit(2);
}

const SymmetricSpaceEntry& resolve_space(const std::vector<SymmetricSpaceEntry>& catalog,
                                         const std::string& name) {
  const SymmetricSpaceEntry* entry = find_entry(catalog, name);
  if (entry == nullptr) die_unknown_space(catalog, name);
  return *entry;
}

std::string mults_str(const SymmetricSpaceEntry& e) {
  std::ostringstream os;
  switch (e.family.tag) {
    case FamilyTag::B:
    case FamilyTag::C:
    case FamilyTag::F4:
    case FamilyTag::G2:
      os << "long=" << e.mults.of(OrbitClass::Long) << ",short=" << e.mults.of(OrbitClass::Short);
      break;
    case FamilyTag::BC:
      if (e.family.rank >= 2) os << "middle=" << e.mults.of(OrbitClass::Middle) << ",";
      os << "short=" << e.mults.of(OrbitClass::Short)
         << ",double=" << e.mults.of(OrbitClass::Double);
      break;
    default:
      os << "middle=" << e.mults.of(OrbitClass::Middle);
      break;
  }
  return os.str();
}

json mults_json(const SymmetricSpaceEntry& e) {
  json m = json::object();
  switch (e.family.tag) {
    case FamilyTag::B:
    case FamilyTag::C:
    case FamilyTag::F4:
    case FamilyTag::G2:
      m["long"] = e.mults.of(OrbitClass::Long);
      m["short"] = e.mults.of(OrbitClass::Short);
      break;
    case FamilyTag::BC:
      if (e.family.rank >= 2) m["middle"] = e.mults.of(OrbitClass::Middle);
      m["short"] = e.mults.of(OrbitClass::Short);
      m["double"] = e.mults.of(OrbitClass::Double);
      break;
    default:
      m["middle"] = e.mults.of(OrbitClass::Middle);
      break;
  }
  return m;
}

json truncation_json(const TruncationResult& t, bool single_removed) {
  json out = json::object();
  if (single_removed) {
    out["removed"] = t.removed_nodes.front() + 1;
  } else {
    json removed = json::array();
    for (int i : t.removed_nodes) removed.push_back(i + 1);
    out["removed"] = removed;
  }
  json comps = json::array();
  for (const auto& c : t.components) comps.push_back(c.name);
  out["components"] = comps;
  out["dim"] = t.dim_total;
  return out;
}

std::string truncation_text(const TruncationResult& t) {
  std::ostringstream os;
  os << "remove {";
  for (std::size_t i = 0; i < t.removed_nodes.size(); ++i)
    os << (i ? "," : "") << "alpha_" << t.removed_nodes[i] + 1;
  os << "} -> " << truncation_name(t) << " (dim " << t.dim_total << ")";
  return os.str();
}

MultiplicityMap parse_mults(FamilyTag tag, const std::string& text, int rank) {
  std::vector<int> values;
  std::stringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ',')) values.push_back(std::stoi(field));
  bool two_class = tag == FamilyTag::B || tag == FamilyTag::C || tag == FamilyTag::F4 ||
                   tag == FamilyTag::G2;
  if (two_class) {
    if (values.size() != 2)
      throw CLI::ValidationError("--mult", "family " + to_string(tag) +
                                               " needs two multiplicities: long,short");
    return MultiplicityMap::long_short(values[0], values[1]);
  }
  if (tag == FamilyTag::BC) {
    if (rank >= 2 && values.size() == 3)
      return MultiplicityMap::bc(values[0], values[1], values[2]);
    if (rank == 1 && values.size() == 2) return MultiplicityMap::bc(0, values[0], values[1]);
    throw CLI::ValidationError("--mult",
                               "family BC needs middle,short,double (short,double at rank 1)");
  }
  if (values.size() != 1)
    throw CLI::ValidationError("--mult", "family " + to_string(tag) +
                                             " needs a single multiplicity");
  return MultiplicityMap::middle(values[0]);
}

int emit_sweep(const SweepReport& report, const std::string& format) {
  if (format == "json") {
    json out = json_header();
    out["sweep"] = report.title;
    json rows = json::array();
    for (const auto& r : report.rows) {
      json row{{"space", r.space}, {"ok", r.ok}, {"detail", r.detail}};
      if (!r.note.empty()) row["note"] = r.note;
      rows.push_back(row);
    }
    out["rows"] = rows;
    out["failures"] = report.failures();
    std::cout << out.dump() << "\n";
  } else if (format == "csv") {
    std::cout << "space,ok,detail,note\n";
    for (const auto& r : report.rows)
      std::cout << '"' << r.space << "\"," << (r.ok ? "1" : "0") << ",\"" << r.detail << "\",\""
                << r.note << "\"\n";
  } else {
    for (const auto& r : report.rows) {
      std::cout << (r.ok ? "ok   " : "FAIL ") << r.space << ": " << r.detail;
      if (!r.note.empty()) std::cout << "  [note: " << r.note << "]";
      std::cout << "\n";
    }
    std::cout << report.failures() << " rows failed (of " << report.rows.size() << ")\n";
  }
  return report.ok() ? 0 : 1;
}

std::vector<Covector> parse_frame(const std::string& text, int rank) {
  std::vector<Covector> frame;
  std::stringstream ss(text);
  std::string vec;
  while (std::getline(ss, vec, ';')) {
    std::vector<Rational> values;
    std::stringstream vs(vec);
    std::string field;
    while (std::getline(vs, field, ',')) values.push_back(Rational::parse(field));
    if (static_cast<int>(values.size()) != rank)
      throw CLI::ValidationError("--frame", "covector has " + std::to_string(values.size()) +
                                                " entries, expected " + std::to_string(rank));
    Covector v;
    v.values.resize(rank);
    for (int i = 0; i < rank; ++i) v.values[i] = values[static_cast<std::size_t>(i)];
    frame.push_back(std::move(v));
  }
  if (frame.empty()) throw CLI::ValidationError("--frame", "no covectors given");
  return frame;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"splitting ranks of non-compact type symmetric spaces"};
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.format = default_format();
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--max-rank", cfg.max_rank, "catalog rank bound")->capture_default_str();
  app.add_option("--max-k", cfg.max_param_k, "catalog family-parameter bound")
      ->capture_default_str();

  std::string space_name, family_str, mult_str, frame_str;
  int rank_opt = 0, k_opt = 0;
  bool use_oracle = false, allow_excluded = false, legacy_demands = false;
  int frames = 100, sweep = 200, max_factors = 3, factor_rank = 6;
  std::uint64_t seed = 0;
  std::vector<std::string> factors;

  auto* cmd_catalog = app.add_subcommand("catalog", "list catalog entries");

  auto* cmd_dim = app.add_subcommand("dim", "dimension of a space");
  cmd_dim->add_option("--space", space_name, "canonical space name");
  cmd_dim->add_option("--family", family_str, "Dynkin family tag");
  cmd_dim->add_option("--rank", rank_opt, "rank");
  cmd_dim->add_option("--mult", mult_str, "multiplicities (comma separated by class)");

  auto* cmd_roots =
      app.add_subcommand("dump-roots", "positive roots of a restricted root system");
  cmd_roots->add_option("--family", family_str, "Dynkin family tag")->required();
  cmd_roots->add_option("--rank", rank_opt, "rank")->required();

  auto* cmd_srk = app.add_subcommand("srk", "splitting rank and maximizers");
  cmd_srk->add_option("--space", space_name)->required();

  auto* cmd_srkk = app.add_subcommand("srk-k", "k-th splitting rank");
  cmd_srkk->add_option("--space", space_name)->required();
  cmd_srkk->add_option("--k", k_opt, "number of split-off flat directions")->required();
  cmd_srkk->add_flag("--oracle", use_oracle, "use the brute-force oracle");
  cmd_srkk->add_option("--oracle-bound", cfg.oracle_rank_bound, "oracle rank refusal bound")
      ->capture_default_str();

  auto* cmd_gap = app.add_subcommand("gap", "dimension gap after the splitting rank");
  cmd_gap->add_option("--space", space_name)->required();

  auto* cmd_profile = app.add_subcommand("profile", "full splitting-rank profile");
  cmd_profile->add_option("--space", space_name)->required();

  auto* cmd_product = app.add_subcommand("product", "min-plus profile of a product space");
  cmd_product->add_option("--factor", factors, "factor name (repeatable)")->required();

  auto* cmd_vt1 = app.add_subcommand("verify-table1", "splitting-rank golden sweep");
  auto* cmd_vt2 = app.add_subcommand("verify-table2", "dimension-gap golden sweep");
  auto* cmd_vksrk = app.add_subcommand("verify-ksrk", "k-th splitting rank inequality sweep");

  auto* cmd_brain = app.add_subcommand("verify-brain", "random product inequality sweep");
  cmd_brain->add_option("--sweep", sweep, "number of random products")->capture_default_str();
  cmd_brain->add_option("--seed", seed, "sweep seed")->capture_default_str();
  cmd_brain->add_option("--max-factors", max_factors)->capture_default_str();
  cmd_brain->add_option("--factor-rank", factor_rank, "max factor rank")->capture_default_str();
  cmd_brain->add_flag("--allow-excluded", allow_excluded,
                      "include excluded factors, report-only");

  auto* cmd_hall = app.add_subcommand("hall-check", "cardinality bound and matching per frame");
  cmd_hall->add_option("--space", space_name)->required();
  cmd_hall->add_option("--frames", frames, "random frames")->capture_default_str();
  cmd_hall->add_option("--seed", seed)->capture_default_str();

  auto* cmd_match = app.add_subcommand("match", "demand matching for an explicit frame");
  cmd_match->add_option("--space", space_name)->required();
  cmd_match
      ->add_option("--frame", frame_str,
                   "semicolon-separated covectors, comma-separated rational entries")
      ->required();
  cmd_match->add_flag("--legacy-demands", legacy_demands,
                      "first covector demands r instead of n-srk");

  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    auto catalog = catalog_entries(cfg.max_rank, cfg.max_param_k);

    if (cmd_catalog->parsed()) {
      if (cfg.format == "json") {
        json out = json_header();
        json entries = json::array();
        for (const auto& e : catalog) {
          json row{{"name", e.name},
                   {"family", to_string(e.family.tag)},
                   {"rank", e.family.rank}};
          row["k"] = e.param_k.has_value() ? json(*e.param_k) : json(nullptr);
          row["multiplicities"] = mults_json(e);
          row["dim"] = dimension(e);
          entries.push_back(row);
        }
        out["entries"] = entries;
        std::cout << out.dump() << "\n";
      } else if (cfg.format == "csv") {
        std::cout << "name,family,rank,k,multiplicities,dim\n";
        for (const auto& e : catalog)
          std::cout << '"' << e.name << "\"," << to_string(e.family.tag) << ',' << e.family.rank
                    << ',' << (e.param_k ? std::to_string(*e.param_k) : "") << ",\""
                    << mults_str(e) << "\"," << dimension(e) << "\n";
      } else {
        for (const auto& e : catalog)
          std::cout << e.name << "  [" << e.family.str() << ", " << mults_str(e)
                    << "]  dim=" << dimension(e) << "\n";
      }
      return 0;
    }

    if (cmd_dim->parsed()) {
      long n = 0;
      if (!space_name.empty()) {
        n = dimension(resolve_space(catalog, space_name));
      } else {
        FamilyTag tag = family_tag_from_string(family_str);
        auto entry =
            SymmetricSpaceEntry::make(tag, rank_opt, parse_mults(tag, mult_str, rank_opt));
        n = dimension(entry);
      }
      if (cfg.format == "json") {
        json out = json_header();
        out["dim"] = n;
        std::cout << out.dump() << "\n";
      } else {
        std::cout << n << "\n";
      }
      return 0;
    }

    if (cmd_roots->parsed()) {
      const auto& sys = shared_root_system({family_tag_from_string(family_str), rank_opt});
      if (cfg.format == "json") {
        json out = json_header();
        out["family"] = to_string(sys.family().tag);
        out["rank"] = sys.rank();
        json roots = json::array(), classes = json::array();
        for (const Root& r : sys.positive_roots()) {
          json coeffs = json::array();
          for (Eigen::Index i = 0; i < r.coeffs.size(); ++i) coeffs.push_back(r.coeffs[i]);
          roots.push_back(coeffs);
          classes.push_back(to_string(r.cls));
        }
        out["roots"] = roots;
        out["classes"] = classes;
        std::cout << out.dump() << "\n";
      } else if (cfg.format == "csv") {
        std::cout << "coefficients,class\n";
        for (const Root& r : sys.positive_roots()) {
          std::cout << '"';
          for (Eigen::Index i = 0; i < r.coeffs.size(); ++i)
            std::cout << (i ? " " : "") << r.coeffs[i];
          std::cout << "\"," << to_string(r.cls) << "\n";
        }
      } else {
        for (const Root& r : sys.positive_roots()) {
          for (Eigen::Index i = 0; i < r.coeffs.size(); ++i)
            std::cout << (i ? " " : "") << r.coeffs[i];
          std::cout << "  [" << to_string(r.cls) << "]\n";
        }
      }
      return 0;
    }

    if (cmd_srk->parsed()) {
      const auto& entry = resolve_space(catalog, space_name);
      auto res = splitting_rank(entry);
      if (cfg.format == "json") {
        json out = json_header();
        out["space"] = entry.name;
        out["r"] = entry.rank();
        out["srk"] = res.srk;
        json maxs = json::array();
        for (const auto& t : res.maximizers) maxs.push_back(truncation_json(t, true));
        out["maximizers"] = maxs;
        std::cout << out.dump() << "\n";
      } else if (cfg.format == "csv") {
        std::cout << "space,r,srk,removed,components,dim\n";
        for (const auto& t : res.maximizers)
          std::cout << '"' << entry.name << "\"," << entry.rank() << ',' << res.srk << ','
                    << t.removed_nodes.front() + 1 << ",\"" << truncation_name(t) << "\","
                    << t.dim_total << "\n";
      } else {
        std::cout << "space: " << entry.name << "\nrank: " << entry.rank()
                  << "  dim: " << dimension(entry) << "\nsrk: " << res.srk << "\n";
        for (const auto& t : res.maximizers)
          std::cout << "maximizer: " << truncation_text(t) << "\n";
      }
      return 0;
    }

    if (cmd_srkk->parsed()) {
      const auto& entry = resolve_space(catalog, space_name);
      if (use_oracle) {
        long v = oracle_splitting_rank_k(entry, k_opt, cfg.oracle_rank_bound);
        if (cfg.format == "json") {
          json out = json_header();
          out["space"] = entry.name;
          out["r"] = entry.rank();
          out["k"] = k_opt;
          out["srk"] = v;
          out["oracle"] = true;
          std::cout << out.dump() << "\n";
        } else {
          std::cout << v << "\n";
        }
        return 0;
      }
      auto res = splitting_rank_k(entry, k_opt);
      if (cfg.format == "json") {
        json out = json_header();
        out["space"] = entry.name;
        out["r"] = entry.rank();
        out["k"] = k_opt;
        out["srk"] = res.srk;
        json maxs = json::array();
        for (const auto& t : res.maximizers) maxs.push_back(truncation_json(t, false));
        out["maximizers"] = maxs;
        std::cout << out.dump() << "\n";
      } else if (cfg.format == "csv") {
        std::cout << "space,r,k,srk,removed,components,dim\n";
        for (const auto& t : res.maximizers) {
          std::cout << '"' << entry.name << "\"," << entry.rank() << ',' << k_opt << ','
                    << res.srk << ",\"";
          for (std::size_t i = 0; i < t.removed_nodes.size(); ++i)
            std::cout << (i ? " " : "") << t.removed_nodes[i] + 1;
          std::cout << "\",\"" << truncation_name(t) << "\"," << t.dim_total << "\n";
        }
      } else {
        std::cout << "space: " << entry.name << "\nsrk^" << k_opt << ": " << res.srk << "\n";
        for (const auto& t : res.maximizers)
          std::cout << "maximizer: " << truncation_text(t) << "\n";
      }
      return 0;
    }

    if (cmd_gap->parsed()) {
      const auto& entry = resolve_space(catalog, space_name);
      auto res = splitting_rank(entry);
      auto gap = gap_table(entry);
      if (cfg.format == "json") {
        json out = json_header();
        out["space"] = entry.name;
        out["r"] = entry.rank();
        out["srk"] = res.srk;
        out["gap"] = gap.has_gap ? json(gap.gap) : json(nullptr);
        json second = json::array();
        for (const auto& t : gap.second_maximizers) second.push_back(truncation_json(t, true));
        out["second"] = second;
        std::cout << out.dump() << "\n";
      } else if (cfg.format == "csv") {
        std::cout << "space,r,srk,gap,removed,components,dim\n";
        for (const auto& t : gap.second_maximizers)
          std::cout << '"' << entry.name << "\"," << entry.rank() << ',' << res.srk << ','
                    << gap.gap << ',' << t.removed_nodes.front() + 1 << ",\""
                    << truncation_name(t) << "\"," << t.dim_total << "\n";
      } else {
        std::cout << "space: " << entry.name << "\nsrk: " << res.srk << "\n";
        if (!gap.has_gap) {
          std::cout << "no gap: all single-node truncations tie\n";
        } else {
          std::cout << "gap: " << gap.gap << "\n";
          for (const auto& t : gap.second_maximizers)
            std::cout << "second: " << truncation_text(t) << "\n";
        }
      }
      return 0;
    }

    if (cmd_profile->parsed()) {
      const auto& entry = resolve_space(catalog, space_name);
      auto p = profile(entry);
      if (cfg.format == "json") {
        json out = json_header();
        out["space"] = entry.name;
        out["r"] = entry.rank();
        out["srk"] = p.values;
        out["si"] = p.si;
        std::cout << out.dump() << "\n";
      } else if (cfg.format == "csv") {
        std::cout << "k,srk_k,si_k\n";
        for (std::size_t k = 0; k < p.values.size(); ++k)
          std::cout << k << ',' << p.values[k] << ',' << p.si[k] << "\n";
      } else {
        std::cout << "space: " << entry.name << "\n";
        for (std::size_t k = 0; k < p.values.size(); ++k)
          std::cout << "srk^" << k << " = " << p.values[k] << "   si^" << k << " = " << p.si[k]
                    << "\n";
      }
      return 0;
    }

    if (cmd_product->parsed()) {
      std::vector<SymmetricSpaceEntry> fs;
      for (const auto& name : factors) fs.push_back(resolve_space(catalog, name));
      ProductSpace p(std::move(fs));
      auto pp = si_profile(p);
      if (cfg.format == "json") {
        json out = json_header();
        json names = json::array();
        for (const auto& f : p.factors) names.push_back(f.name);
        out["factors"] = names;
        out["rank"] = p.rank();
        out["dim"] = p.dim();
        out["srk"] = pp.profile.values;
        out["si"] = pp.profile.si;
        out["witness"] = pp.witness;
        std::cout << out.dump() << "\n";
      } else if (cfg.format == "csv") {
        std::cout << "k,srk_k,si_k,witness\n";
        for (std::size_t k = 0; k < pp.profile.values.size(); ++k) {
          std::cout << k << ',' << pp.profile.values[k] << ',' << pp.profile.si[k] << ",\"";
          for (std::size_t f = 0; f < pp.witness[k].size(); ++f)
            std::cout << (f ? " " : "") << pp.witness[k][f];
          std::cout << "\"\n";
        }
      } else {
        std::cout << "product: " << p.name() << "\nrank: " << p.rank() << "  dim: " << p.dim()
                  << "\n";
        for (std::size_t k = 0; k < pp.profile.values.size(); ++k) {
          std::cout << "srk^" << k << " = " << pp.profile.values[k] << "   si^" << k << " = "
                    << pp.profile.si[k] << "   via (";
          for (std::size_t f = 0; f < pp.witness[k].size(); ++f)
            std::cout << (f ? "," : "") << pp.witness[k][f];
          std::cout << ")\n";
        }
      }
      return 0;
    }

    if (cmd_vt1->parsed())
      return emit_sweep(verify_table1(cfg.max_rank, cfg.max_param_k), cfg.format);
    if (cmd_vt2->parsed())
      return emit_sweep(verify_table2(cfg.max_rank, cfg.max_param_k), cfg.format);
    if (cmd_vksrk->parsed())
      return emit_sweep(verify_ksrk(cfg.max_rank, cfg.max_param_k), cfg.format);
    if (cmd_brain->parsed())
      return emit_sweep(product_bound_sweep(sweep, seed, max_factors, factor_rank, cfg.max_rank,
                                           cfg.max_param_k, allow_excluded),
                        cfg.format);

    if (cmd_hall->parsed()) {
      const auto& entry = resolve_space(catalog, space_name);
      long srk = splitting_rank(entry).srk;
      SweepReport report;
      report.title = "hall-check";
      for (int f = 0; f < frames; ++f) {
        Rng rng = Rng::derived(seed, static_cast<std::uint64_t>(f));
        auto frame = random_spanning_frame(entry.rank(), rng);
        auto card = verify_cardinality(entry, frame);
        auto inst = build_instance(entry, frame, srk);
        auto match = find_matching(inst);
        RowCheck check;
        check.space = entry.name + " frame#" + std::to_string(f);
        check.ok = card.ok && match.feasible && assignment_valid(inst, match);
        std::ostringstream os;
        os << "cardinality " << (card.ok ? "ok" : "VIOLATED") << ", matching "
           << (match.feasible ? "feasible" : "infeasible");
        if (!card.ok) {
          os << "; first violation at subset {";
          for (std::size_t i = 0; i < card.violations[0].subset.size(); ++i)
            os << (i ? "," : "") << card.violations[0].subset[i] + 1;
          os << "}: q=" << card.violations[0].q_dim << " < " << card.violations[0].bound;
        }
        if (!match.feasible) {
          os << "; deficient covectors {";
          for (std::size_t i = 0; i < match.deficient.size(); ++i)
            os << (i ? "," : "") << match.deficient[i] + 1;
          os << "}";
        }
        check.detail = os.str();
        report.rows.push_back(std::move(check));
      }
      return emit_sweep(report, cfg.format);
    }

    if (cmd_match->parsed()) {
      const auto& entry = resolve_space(catalog, space_name);
      auto frame = parse_frame(frame_str, entry.rank());
      long srk = splitting_rank(entry).srk;
      auto inst = build_instance(entry, frame, srk, legacy_demands);
      auto out = find_matching(inst);
      const auto& sys = shared_root_system(entry.family);
      if (cfg.format == "json") {
        json j = json_header();
        j["space"] = entry.name;
        j["srk"] = srk;
        j["slots"] = inst.slots.size();
        json demands = json::array();
        for (long d : inst.demands) demands.push_back(d);
        j["demands"] = demands;
        j["feasible"] = out.feasible;
        if (out.feasible) {
          json assignment = json::array();
          for (int v = 0; v < inst.left_count; ++v) {
            json slots = json::array();
            for (int s : out.assignment[static_cast<std::size_t>(v)]) {
              const auto& slot = inst.slots[static_cast<std::size_t>(s)];
              const Root& root =
                  sys.positive_roots()[static_cast<std::size_t>(slot.root_index)];
              json coeffs = json::array();
              for (Eigen::Index i = 0; i < root.coeffs.size(); ++i)
                coeffs.push_back(root.coeffs[i]);
              slots.push_back(json{{"root", coeffs}, {"copy", slot.copy}});
            }
            assignment.push_back(json{{"covector", v + 1}, {"slots", slots}});
          }
          j["assignment"] = assignment;
        } else {
          json deficient = json::array();
          for (int v : out.deficient) deficient.push_back(v + 1);
          j["deficient"] = deficient;
        }
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "space: " << entry.name << "  srk: " << srk
                  << "  slots: " << inst.slots.size() << "\n";
        if (out.feasible) {
          for (int v = 0; v < inst.left_count; ++v) {
            std::cout << "covector " << v + 1 << " <-";
            for (int s : out.assignment[static_cast<std::size_t>(v)]) {
              const auto& slot = inst.slots[static_cast<std::size_t>(s)];
              const Root& root =
                  sys.positive_roots()[static_cast<std::size_t>(slot.root_index)];
              std::cout << " (";
              for (Eigen::Index i = 0; i < root.coeffs.size(); ++i)
                std::cout << (i ? " " : "") << root.coeffs[i];
              std::cout << ")#" << slot.copy;
            }
            std::cout << "\n";
          }
        } else {
          std::cout << "infeasible; deficient covector set {";
          for (std::size_t i = 0; i < out.deficient.size(); ++i)
            std::cout << (i ? "," : "") << out.deficient[i] + 1;
          std::cout << "}\n";
        }
      }
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
