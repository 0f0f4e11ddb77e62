#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "jacobirep/duality.hpp"
#include "jacobirep/tables.hpp"

using namespace jacobirep;

namespace {

int max_rank() {
  const char* env = std::getenv("JACOBIREP_MAX_RANK");
  if (!env) return 8;
  return std::max(1, std::atoi(env));
}

void check_rank(int n) {
  if (n < 1 || n > max_rank())
    throw std::domain_error("rank " + std::to_string(n) + " outside 1.." +
                            std::to_string(max_rank()) + " (JACOBIREP_MAX_RANK)");
}

std::string format_multiset(const DecompositionMultiset& m, const std::string& format) {
  if (format == "json") return m.to_json();
  if (format == "markdown") return m.to_markdown();
  if (format == "csv") return m.to_csv();
  throw std::domain_error("unknown format: " + format);
}

nlohmann::json chart_to_json(const ChartTensor& t) { return nlohmann::json::parse(t.to_json()); }

nlohmann::json witness_json(const DetectionWitness& w) {
  nlohmann::json j;
  j["component"] = w.component.brackets();
  j["source"] = w.source;
  j["contraction"] = contraction_name_string(w.contraction);
  nlohmann::json moves = nlohmann::json::array();
  for (const auto& m : w.moves)
    moves.push_back({{"kind", m.kind == WitnessMove::Kind::ElementaryMinusId ? "E-id" : "P"},
                     {"k", m.k},
                     {"l", m.l}});
  j["moves"] = moves;
  j["witness"] = chart_to_json(w.witness);
  j["detected"] = w.detected;
  return j;
}

nlohmann::json pair_json(const PairCertificate& c) {
  nlohmann::json j;
  j["component"] = c.component.brackets();
  j["sources"] = {c.sources[0], c.sources[1]};
  j["contractions"] = {contraction_name_string(c.contractions[0]),
                       contraction_name_string(c.contractions[1])};
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < 2; ++r)
    rows.push_back(nlohmann::json::array({to_string(c.matrix(r, 0)), to_string(c.matrix(r, 1))}));
  j["matrix"] = rows;
  j["detected"] = c.detected;
  return j;
}

struct BoundaryRegistryEntry {
  std::string cycle;
  std::string coeff;
  int level;
  std::vector<int> ranks;
};

const std::vector<BoundaryRegistryEntry>& boundary_registry() {
  static const std::vector<BoundaryRegistryEntry> reg{
      {"alpha02", "v", 1, {3, 4, 5, 6}},    {"alpha012", "vprime", 1, {4, 5, 6}},
      {"alpha02", "u123", 2, {3, 4, 5, 6}}, {"alpha20", "u123", 2, {4, 5, 6}},
      {"alpha02", "w13", 2, {3, 4, 5, 6}},  {"beta1", "u123", 2, {3}},
      {"beta4", "u123", 2, {3}},            {"beta7", "u123", 2, {3}},
      {"beta9", "u123", 2, {3}},            {"gamma1", "v2", 0, {3}},
      {"gamma2", "v2", 0, {3}}};
  return reg;
}

DiagramVector coefficient_by_name(const std::string& name, int n) {
  if (name == "v" || name == "v2") return make_v(2, 1, 3, n);
  if (name == "vprime") return make_v(4, 3, 2, n);
  if (name == "u123" || name == "u") return make_u(1, 2, 3, n);
  if (name == "w13") return make_w(1, 3, n);
  throw std::domain_error("unknown coefficient class: " + name);
}

TwoCycle cycle_by_name(const std::string& cycle, const std::string& coeff, int n) {
  DiagramVector lift = coefficient_by_name(coeff, n);
  if (cycle == "alpha02") return abelian_two_cycle(AbelianCycleKind::Alpha02, coeff, lift, n);
  if (cycle == "alpha012") return abelian_two_cycle(AbelianCycleKind::Alpha012, coeff, lift, n);
  if (cycle == "alpha20") return abelian_two_cycle(AbelianCycleKind::Alpha20, coeff, lift, n);
  if (n != 3) throw std::domain_error("relator cycles are rank-3 objects");
  if (cycle == "beta1")
    return relator_two_cycle(RelatorShape::SingleCommutator,
                             {conj_gen(1, 2, n), conj_gen(3, 2, n)}, coeff, lift, "beta1");
  if (cycle == "beta4")
    return relator_two_cycle(RelatorShape::SingleCommutator,
                             {conj_gen(3, 2, n) * conj_gen(1, 2, n), conj_gen(3, 1, n)}, coeff,
                             lift, "beta4");
  if (cycle == "beta7")
    return relator_two_cycle(RelatorShape::DoubleCommutator,
                             {comm_gen(3, 1, 1, 1, 2, 1, n), conj_gen(1, 2, n),
                              conj_gen(3, 2, n).pow(-1), comm_gen(3, 1, 1, 1, 2, 1, n)},
                             coeff, lift, "beta7");
  if (cycle == "beta9")
    return relator_two_cycle(
        RelatorShape::DoubleCommutator,
        {conj_gen(1, 3, n) * conj_gen(2, 3, n), conj_gen(1, 2, n) * conj_gen(3, 2, n),
         comm_gen(1, 1, 2, 1, 3, 1, n), conj_gen(2, 1, n) * conj_gen(3, 1, n)},
        coeff, lift, "beta9");
  if (cycle == "gamma1")
    return relator_two_cycle(RelatorShape::SingleCommutator,
                             {conj_gen(1, 2, n), conj_gen(3, 2, n)}, coeff, lift, "gamma1");
  if (cycle == "gamma2")
    return relator_two_cycle(RelatorShape::SingleCommutator,
                             {comm_gen(1, 1, 2, 1, 3, 1, n), comm_gen(1, -1, 2, 1, 3, 1, n)},
                             coeff, lift, "gamma2");
  std::string known;
  for (const auto& e : boundary_registry()) known += e.cycle + "[" + e.coeff + "] ";
  throw std::domain_error("unknown cycle: " + cycle + "; registry: " + known);
}

int run_verify(const std::string& what) {
  bool all = what == "all";
  bool ok = true;
  if (all || what == "duality") {
    EquivarianceReport r = verify_phi_equivariance();
    std::cout << r.passed << "/" << r.checks << " equivariance checks passed"
              << (r.invertible ? ", map invertible" : ", MAP NOT INVERTIBLE") << "\n";
    ok = ok && r.ok();
  }
  if (all || what == "action-tables") {
    int good = 0, total = 0;
    for (const AutGenerator& g :
         {AutGenerator::U(), AutGenerator::P(), AutGenerator::Sigma(), AutGenerator::Q()}) {
      RatMatrix on_B = nielsen_matrix_on_B(g);
      RatMatrix on_Bstar = nielsen_matrix_on_Bstar(g);
      ++total;
      if (on_B.transpose() * on_Bstar == RatMatrix::Identity(13, 13)) ++good;
    }
    RatMatrix s = nielsen_matrix_on_B(AutGenerator::Sigma());
    RatMatrix p = nielsen_matrix_on_B(AutGenerator::P());
    RatMatrix q = nielsen_matrix_on_B(AutGenerator::Q());
    bool relations = s * s == RatMatrix::Identity(13, 13) &&
                     p * p == RatMatrix::Identity(13, 13) &&
                     q * q * q == RatMatrix::Identity(13, 13);
    std::cout << good << "/" << total << " contragredience checks passed; relations "
              << (relations ? "hold" : "FAIL") << "\n";
    ok = ok && good == total && relations;
  }
  if (all || what == "relators") {
    auto relators = day_putman_relators();
    std::cout << relators.size() << " relator instances verified in the free group\n";
    SpanCertificate span = relator_image_span();
    std::cout << "relator-cycle image: dim " << span.dimension << ", "
              << span.components.to_markdown() << "\n";
    ok = ok && span.dimension == 18;
  }
  if (all || what == "boundaries") {
    int good = 0, total = 0;
    for (const auto& e : boundary_registry()) {
      for (int n : e.ranks) {
        if (n > max_rank()) continue;
        ++total;
        try {
          TwoCycle c = cycle_by_name(e.cycle, e.coeff, n);
          if (e.level == 0)
            boundary_into_submodule(c);
          else
            connecting_boundary(c, e.level);
          ++good;
        } catch (const std::exception& ex) {
          std::cerr << e.cycle << "[" << e.coeff << "] n=" << n << ": " << ex.what() << "\n";
        }
      }
    }
    std::cout << good << "/" << total << " boundary computations completed\n";
    ok = ok && good == total;
  }
  return ok ? 0 : 1;
}

nlohmann::json table_fixture() {
  nlohmann::json rows = nlohmann::json::array();
  for (Pipeline p : {Pipeline::TopOverBottom, Pipeline::Middle, Pipeline::Top})
    for (GroupKind g : {GroupKind::IA, GroupKind::IO})
      for (int n : admissible_ranks(p, g)) {
        TableRow row = les_table(p, g, n);
        nlohmann::json r;
        r["pipeline"] = pipeline_name(p);
        r["group"] = group_name(g);
        r["rank"] = n;
        r["determinate"] = row.determinate;
        r["markdown"] = row.result.to_markdown();
        r["multiset"] = nlohmann::json::parse(row.result.to_json());
        rows.push_back(r);
      }
  nlohmann::json j;
  j["rows"] = rows;
  return j;
}

nlohmann::json trivial_fixture() {
  auto piece = [&](const char* name, std::initializer_list<int> plus,
                   std::initializer_list<int> minus) {
    nlohmann::json rows = nlohmann::json::array();
    for (GroupKind g : {GroupKind::IA, GroupKind::IO})
      for (int n = 3; n <= 6; ++n) {
        DecompositionMultiset m(n);
        m.add(Bipartition{Partition(std::vector<int>(plus)), Partition(std::vector<int>(minus))},
              1);
        DecompositionMultiset h = h1_trivial(m, g, n);
        rows.push_back({{"group", group_name(g)},
                        {"rank", n},
                        {"markdown", h.to_markdown()},
                        {"multiset", nlohmann::json::parse(h.to_json())}});
      }
    nlohmann::json j;
    j["coefficient"] = name;
    j["rows"] = rows;
    return j;
  };
  nlohmann::json j = nlohmann::json::array();
  j.push_back(piece("A2p", {}, {4}));
  j.push_back(piece("A2pp-over-A21", {}, {2, 2}));
  j.push_back(piece("A21-over-A22", {}, {1, 1, 1}));
  j.push_back(piece("A22", {}, {2}));
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in the degree-2 diagram module and its twisted homology tables"};
  app.require_subcommand(1);

  std::string format = "json";

  auto* dims = app.add_subcommand("dims", "dimension of an irreducible");
  std::string dims_bip;
  int dims_rank = 3;
  dims->add_option("bipartition", dims_bip, "e.g. \"[];[2,2]\"")->required();
  dims->add_option("-n,--rank", dims_rank)->required();

  auto* dec = app.add_subcommand("decompose", "tensor-product decomposition");
  std::string dec_a, dec_b;
  int dec_rank = 3;
  dec->add_option("left", dec_a)->required();
  dec->add_option("right", dec_b)->required();
  dec->add_option("-n,--rank", dec_rank)->required();
  dec->add_option("--format", format)->check(CLI::IsMember({"json", "markdown", "csv"}));

  auto* table = app.add_subcommand("h1-table", "first-homology table rows");
  std::string tab_pipeline = "A2pp", tab_group = "ia";
  int tab_rank = 0;
  bool tab_all = false;
  table->add_option("--pipeline", tab_pipeline, "A2pp | A21 | A2pp-over-A22");
  table->add_option("--group", tab_group, "ia | io");
  table->add_option("-n,--rank", tab_rank);
  table->add_flag("--all", tab_all, "all pipelines, groups and ranks");
  table->add_option("--format", format)->check(CLI::IsMember({"json", "markdown", "csv"}));

  auto* verify = app.add_subcommand("verify", "conformance checks");
  std::string verify_what = "all";
  verify->add_option("what", verify_what)
      ->check(CLI::IsMember({"duality", "action-tables", "relators", "boundaries", "all"}));

  auto* boundary = app.add_subcommand("boundary", "connecting-map boundary of a scripted cycle");
  std::string b_cycle, b_class;
  int b_level = 1, b_rank = 3;
  boundary->add_option("--cycle", b_cycle)->required();
  boundary->add_option("--class", b_class)->required();
  boundary->add_option("--level", b_level);
  boundary->add_option("-n,--rank", b_rank);

  auto* certify = app.add_subcommand("certify", "detection certificates for a pipeline");
  std::string c_pipeline = "A2pp-over-A22";
  int c_rank = 4;
  certify->add_option("--pipeline", c_pipeline);
  certify->add_option("-n,--rank", c_rank);

  auto* exportf = app.add_subcommand("export-fixtures", "regenerate the fixture files");
  std::string exp_dir = "fixtures";
  exportf->add_option("--dir", exp_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*dims) {
      check_rank(dims_rank);
      std::cout << weyl_dimension(Bipartition::parse(dims_bip), dims_rank).get_str() << "\n";
      return 0;
    }
    if (*dec) {
      check_rank(dec_rank);
      DecompositionMultiset a(dec_rank), b(dec_rank);
      a.add(Bipartition::parse(dec_a), 1);
      b.add(Bipartition::parse(dec_b), 1);
      std::cout << format_multiset(decompose_tensor(a, b, dec_rank), format) << "\n";
      return 0;
    }
    if (*table) {
      if (tab_all) {
        std::cout << table_fixture().dump(2) << "\n";
        return 0;
      }
      if (tab_rank == 0) throw std::domain_error("need -n or --all");
      check_rank(tab_rank);
      TableRow row = les_table(pipeline_parse(tab_pipeline), group_parse(tab_group), tab_rank);
      if (!row.determinate) {
        std::cerr << "indeterminate row; residual gap: " << row.residual_gap.to_markdown() << "\n";
        for (const auto& note : row.notes) std::cerr << "note: " << note << "\n";
        return 1;
      }
      if (format == "markdown") {
        std::cout << row.result.to_markdown() << "\n";
      } else {
        std::cout << format_multiset(row.result, format) << "\n";
      }
      return 0;
    }
    if (*verify) return run_verify(verify_what);
    if (*boundary) {
      check_rank(b_rank);
      TwoCycle cycle = cycle_by_name(b_cycle, b_class, b_rank);
      nlohmann::json out;
      out["cycle"] = cycle.name;
      if (!cycle.note.empty()) out["note"] = cycle.note;
      if (b_cycle == "gamma1" || b_cycle == "gamma2") {
        SubmoduleBoundaryValue v = boundary_into_submodule(cycle);
        out["section_coeff"] = to_string(v.section_coeff);
        out["sigma_index"] = v.sigma_index;
        out["level2_class"] = chart_to_json(v.level2_class);
        out["level2_pretty"] = vij_pretty(vij_coordinates(v.level2_class));
      } else {
        OneCycleClass v = connecting_boundary(cycle, b_level);
        out["level"] = v.level;
        out["value"] = chart_to_json(v.value);
        out["pretty"] = v.value.pretty();
        if (b_rank == 3 && b_level == 2)
          out["vij"] = vij_pretty(vij_coordinates(v.value));
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (*certify) {
      check_rank(c_rank);
      Pipeline p = pipeline_parse(c_pipeline);
      nlohmann::json out;
      CertifiedImage img = p == Pipeline::Middle ? certified_image_level2(c_rank)
                                                 : certified_image_level1(c_rank);
      out["pipeline"] = pipeline_name(p);
      out["rank"] = c_rank;
      out["certified"] = nlohmann::json::parse(img.components.to_json());
      nlohmann::json ws = nlohmann::json::array();
      for (const auto& w : img.witnesses) ws.push_back(witness_json(w));
      out["witnesses"] = ws;
      nlohmann::json ps = nlohmann::json::array();
      for (const auto& c : img.pairs) ps.push_back(pair_json(c));
      out["pair_certificates"] = ps;
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (*exportf) {
      {
        std::ofstream f(exp_dir + "/theorem_tables.json");
        f << table_fixture().dump(2) << "\n";
      }
      {
        std::ofstream f(exp_dir + "/trivial_tables.json");
        f << trivial_fixture().dump(2) << "\n";
      }
      std::cerr << "wrote " << exp_dir << "/theorem_tables.json and " << exp_dir
                << "/trivial_tables.json\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
