#include <doctest.h>

#include <fstream>
#include <json.hpp>

#include "jacobirep/diagram.hpp"
#include "jacobirep/duality.hpp"

using namespace jacobirep;

namespace {

nlohmann::json load_conformance() {
  std::ifstream in(std::string(JACOBIREP_FIXTURE_DIR) + "/conformance.json");
  REQUIRE(in.good());
  nlohmann::json j;
  in >> j;
  return j;
}

int basis_index(const std::string& name) {
  const auto& names = basis_B_names();
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  FAIL("unknown basis name ", name);
  return -1;
}

DiagramVector from_table_entry(const nlohmann::json& entry) {
  DiagramVector v(3);
  for (auto it = entry.begin(); it != entry.end(); ++it) {
    const DiagramVector& b = basis_B()[basis_index(it.key())];
    v = v + b.scaled(rational_from_string(it.value().get<std::string>()));
  }
  return v;
}

AutGenerator nielsen(const std::string& name) {
  if (name == "U") return AutGenerator::U();
  if (name == "P") return AutGenerator::P();
  if (name == "sigma") return AutGenerator::Sigma();
  if (name == "Q") return AutGenerator::Q();
  FAIL("unknown generator ", name);
  return AutGenerator::U();
}

}  // namespace

TEST_CASE("worked action example: u123 under U") {
  const DiagramVector& u = basis_B()[6];
  DiagramVector got = act_aut(AutGenerator::U(), u);
  DiagramVector expect = u + make_w(1, 3, 3).scaled(Rational(-1, 2));
  CHECK(got == expect);
}

TEST_CASE("rule-driven action matches the frozen table on all 13 x 4 entries") {
  auto j = load_conformance();
  for (const auto& gen_name : {"U", "sigma", "P", "Q"}) {
    const auto& column = j["action_table_B"][gen_name];
    AutGenerator g = nielsen(gen_name);
    for (size_t i = 0; i < basis_B().size(); ++i) {
      DiagramVector got = act_aut(g, basis_B()[i]);
      DiagramVector expect = from_table_entry(column[basis_B_names()[i]]);
      INFO("entry ", basis_B_names()[i], " . ", gen_name);
      CHECK(got == expect);
    }
  }
}

TEST_CASE("basis elements have the expected filtration levels") {
  CHECK(filtration_level(basis_B()[0]) == 0);
  CHECK(filtration_level(basis_B()[6]) == 1);
  CHECK(filtration_level(basis_B()[10]) == 2);
  CHECK(basis_B().size() == 13);
}

TEST_CASE("quoted bracket values") {
  const DiagramVector& u123 = basis_B()[6];
  SUBCASE("[u123, g(2,1)] = w13") {
    DiagramVector b = bracket(u123, AutGenerator::magnus_g(2, 1).substitution(3));
    CHECK(b == make_w(1, 3, 3));
  }
  SUBCASE("[u123, f(1,2,3)] = -w3") {
    DiagramVector b = bracket(u123, AutGenerator::magnus_f(1, 2, 3).substitution(3));
    CHECK(b == make_w(3, 3, 3).scaled(-1));
  }
  SUBCASE("[v2, g(2,1)] has tripod part 3 u123") {
    DiagramVector b = bracket(basis_B()[1], AutGenerator::magnus_g(2, 1).substitution(3));
    CHECK(quotient_class(b, 1) == quotient_class(make_u(1, 2, 3, 3).scaled(3), 1));
  }
  SUBCASE("[w13, g(2,1)] = 0") {
    DiagramVector b = bracket(make_w(1, 3, 3), AutGenerator::magnus_g(2, 1).substitution(3));
    CHECK(b.is_zero());
  }
}

TEST_CASE("filtration and module laws") {
  // sigma^2 = P^2 = id and Q^3 = id as operators
  for (size_t i = 0; i < basis_B().size(); ++i) {
    const DiagramVector& b = basis_B()[i];
    CHECK(act_word({AutGenerator::Sigma(), AutGenerator::Sigma()}, b) == b);
    CHECK(act_word({AutGenerator::P(), AutGenerator::P()}, b) == b);
    CHECK(act_word({AutGenerator::Q(), AutGenerator::Q(), AutGenerator::Q()}, b) == b);
  }
  // right-module law against composed substitutions
  Substitution u = AutGenerator::U().substitution(3);
  Substitution q = AutGenerator::Q().substitution(3);
  Substitution uq = Substitution::compose(u, q);
  for (const DiagramVector& b : basis_B())
    CHECK(act_subst(uq, b) == act_subst(q, act_subst(u, b)));
  // filtration is preserved generator by generator
  for (const DiagramVector& b : basis_B()) {
    int lvl = filtration_level(b);
    for (const AutGenerator& g : {AutGenerator::U(), AutGenerator::P(), AutGenerator::Sigma(),
                                  AutGenerator::Q()}) {
      DiagramVector img = act_aut(g, b);
      CHECK(filtration_level(img) >= lvl);
    }
  }
}

TEST_CASE("bracket raises the filtration level") {
  std::vector<AutGenerator> magnus;
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b)
      if (a != b) magnus.push_back(AutGenerator::magnus_g(a, b));
  for (int a = 1; a <= 4; ++a)
    for (int b = a + 1; b <= 4; ++b)
      for (int c = 1; c <= 4; ++c)
        if (c != a && c != b) magnus.push_back(AutGenerator::magnus_f(a, b, c));
  int n = 4;
  std::vector<DiagramVector> elems;
  for (int d = 1; d <= 3; ++d) elems.push_back(make_v(d, d == 1 ? 2 : 1, d == 3 ? 2 : 3, n));
  elems.push_back(make_vpair(1, 2, n));
  elems.push_back(make_u(1, 2, 3, n));
  elems.push_back(make_u(2, 3, 4, n));
  elems.push_back(make_w(1, 3, n));
  elems.push_back(make_w(2, 2, n));
  for (const auto& e : elems) {
    int lvl = filtration_level(e);
    for (const auto& g : magnus) {
      DiagramVector br = bracket(e, g.substitution(n));
      if (!br.is_zero()) CHECK(filtration_level(br) >= lvl + 1);
    }
  }
}

TEST_CASE("quotient compatibility with the abelianized action") {
  // quotient_class(act(g, v), k) = act_gl(gbar, quotient_class(v, k)); IA
  // generators act as the identity on the quotients
  int n = 3;
  for (const AutGenerator& g : {AutGenerator::magnus_g(2, 1), AutGenerator::magnus_g(3, 2),
                                AutGenerator::magnus_f(1, 2, 3)}) {
    for (const DiagramVector& b : basis_B()) {
      if (filtration_level(b) >= 1)
        CHECK(quotient_class(act_aut(g, b), 1) == quotient_class(b, 1));
      if (filtration_level(b) >= 2)
        CHECK(quotient_class(act_aut(g, b), 2) == quotient_class(b, 2));
    }
  }
  // sigma abelianizes to its own inverse (diag(-1,1,1))
  for (const DiagramVector& b : basis_B()) {
    if (filtration_level(b) < 2) continue;
    CHECK(quotient_class(act_aut(AutGenerator::Sigma(), b), 2) ==
          act_gl(GLGenerator::negate_first(), quotient_class(b, 2)));
  }
  // U abelianizes to E_{2,1}; the right action matches act_gl of its inverse,
  // i.e. act_gl(E_{2,1}) applied to the image equals the original
  for (const DiagramVector& b : basis_B()) {
    if (filtration_level(b) < 2) continue;
    CHECK(act_gl(GLGenerator::elementary(2, 1), quotient_class(act_aut(AutGenerator::U(), b), 2)) ==
          quotient_class(b, 2));
  }
}

TEST_CASE("inner conjugations act trivially") {
  for (int i = 1; i <= 3; ++i)
    for (const DiagramVector& b : basis_B()) CHECK(inner_action_check(i, b));
  CHECK(inner_action_check(1, DiagramVector(3)));
  CHECK(inner_action_check(2, make_u(1, 2, 3, 4)));
}

TEST_CASE("dual action table and contragredience") {
  auto j = load_conformance();
  for (const auto& gen_name : {"U", "sigma", "P", "Q"}) {
    AutGenerator g = nielsen(gen_name);
    RatMatrix on_B = nielsen_matrix_on_B(g);
    RatMatrix on_Bstar = nielsen_matrix_on_Bstar(g);
    CHECK((on_B.transpose() * on_Bstar) == RatMatrix::Identity(13, 13));
    const auto& column = j["action_table_Bstar"][gen_name];
    for (int i = 0; i < 13; ++i) {
      DualVector f;
      f.coords(i) = 1;
      DualVector img = dual_action(g, f);
      RatVector expect = RatVector::Zero(13);
      const auto& entry = column[basis_B_names()[i]];
      for (auto it = entry.begin(); it != entry.end(); ++it) {
        int k = basis_index(it.key());
        expect(k) = rational_from_string(it.value().get<std::string>());
      }
      INFO("dual entry ", basis_B_names()[i], "* . ", gen_name);
      CHECK(img.coords == expect);
    }
  }
}

TEST_CASE("the duality map") {
  auto j = load_conformance();
  for (int i = 0; i < 13; ++i) {
    DualVector img = phi(basis_B()[i]);
    RatVector expect = RatVector::Zero(13);
    const auto& entry = j["phi"][basis_B_names()[i]];
    for (auto it = entry.begin(); it != entry.end(); ++it)
      expect(basis_index(it.key())) = rational_from_string(it.value().get<std::string>());
    CHECK(img.coords == expect);
  }
  EquivarianceReport report = verify_phi_equivariance();
  CHECK(report.checks == 52);
  CHECK(report.passed == 52);
  CHECK(report.invertible);
  CHECK(report.ok());
}

TEST_CASE("duality exchanges the bottom filtration with the annihilator of the middle") {
  // phi(span{w}) = annihilator of span{u123, w} = span{v*}
  RatMatrix img(13, 6);
  for (int k = 0; k < 6; ++k) img.col(k) = phi(basis_B()[7 + k]).coords;
  // annihilator of indices 6..12 is coordinates 0..5 only
  for (int k = 0; k < 6; ++k)
    for (int r = 6; r < 13; ++r) CHECK(img(r, k) == 0);
  CHECK(rank_of(img) == 6);
}

TEST_CASE("diagram error paths") {
  CHECK_THROWS(bracket(basis_B()[0], AutGenerator::U().substitution(3)));  // not an IA element
  CHECK_THROWS(filtration_level(DiagramVector(3)));
  CHECK_THROWS(quotient_class(basis_B()[0], 1));  // level-0 element
  CHECK_THROWS(AutGenerator::magnus_f(2, 1, 3).substitution(3));
  CHECK_THROWS(act_aut(AutGenerator::magnus_g(2, 4), basis_B()[0]));
}
