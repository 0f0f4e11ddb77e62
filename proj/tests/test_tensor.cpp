#include <doctest.h>

#include <random>

#include "jacobirep/charts.hpp"
#include "jacobirep/tensor.hpp"

using namespace jacobirep;

namespace {

Bipartition bp(std::vector<int> p, std::vector<int> m) {
  return Bipartition{Partition(std::move(p)), Partition(std::move(m))};
}

MixedTensor random_tensor(int q, int p, int n, std::mt19937& rng, int terms = 4) {
  MixedTensor t(q, p, n);
  std::uniform_int_distribution<int> idx(1, n), coeff(-3, 3);
  for (int k = 0; k < terms; ++k) {
    TensorWord w;
    for (int i = 0; i < q; ++i) w.co.push_back(idx(rng));
    for (int i = 0; i < p; ++i) w.contra.push_back(idx(rng));
    t.add(w, coeff(rng));
  }
  return t;
}

}  // namespace

TEST_CASE("generator actions on basis tensors") {
  int n = 3;
  MixedTensor e1 = MixedTensor::basis_vector(1, n);
  MixedTensor e3 = MixedTensor::basis_vector(3, n);
  CHECK(act_gl(GLGenerator::elementary(3, 1), e1) == e1 + e3);

  MixedTensor e3s = MixedTensor::basis_covector(3, n);
  MixedTensor e1s = MixedTensor::basis_covector(1, n);
  CHECK(act_gl(GLGenerator::elementary(3, 1), e3s) == e3s - e1s);

  MixedTensor mixed = MixedTensor::basis_vector(1, n).tensor(MixedTensor::basis_covector(2, n));
  MixedTensor swapped = MixedTensor::basis_vector(2, n).tensor(MixedTensor::basis_covector(1, n));
  CHECK(act_gl(GLGenerator::permutation(1, 2), mixed) == swapped);
}

TEST_CASE("contractions and traceless part") {
  int n = 3;
  // (co = e1*, contra = e1): single term words
  MixedTensor t(1, 1, n);
  t.add({{1}, {1}}, 1);
  MixedTensor c = contraction(t, 1, 1);
  CHECK(c.terms.at({{}, {}}) == 1);

  MixedTensor t2(1, 1, n);
  t2.add({{2}, {1}}, 1);
  CHECK(contraction(t2, 1, 1).is_zero());

  // (e1 (x) e2) (x) (e2* (x) e3*): contracting slot 2 against slot 1
  MixedTensor t3(2, 2, n);
  t3.add({{2, 3}, {1, 2}}, 1);
  MixedTensor c3 = contraction(t3, 2, 1);
  CHECK(c3.terms.at({{3}, {1}}) == 1);

  CHECK(is_traceless(t2));
  MixedTensor trace(1, 1, n);
  for (int i = 1; i <= n; ++i) trace.add({{i}, {i}}, 1);
  CHECK(!is_traceless(trace));
  MixedTensor adjusted = t;
  adjusted = adjusted - trace.scaled(Rational(1, n));
  CHECK(is_traceless(adjusted));
}

TEST_CASE("contraction is GL-equivariant") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + trial % 3;
    int p = 1 + trial % 3, q = 1 + (trial / 3) % 3;
    MixedTensor t = random_tensor(q, p, n, rng);
    std::vector<GLGenerator> gens{GLGenerator::elementary(1, 2), GLGenerator::elementary(2, 1),
                                  GLGenerator::permutation(1, 2), GLGenerator::negate_first()};
    if (n >= 3) gens.push_back(GLGenerator::elementary(3, 1));
    for (const auto& g : gens)
      for (int k = 1; k <= p; ++k)
        for (int l = 1; l <= q; ++l)
          CHECK(contraction(act_gl(g, t), k, l) == act_gl(g, contraction(t, k, l)));
  }
}

TEST_CASE("canonical embeddings carry the stated normalizations") {
  int n = 4;
  ChartTensor wedge(n, {{FactorKind::Wedge, 2}});
  wedge.add({{1, 2}}, 1);
  MixedTensor e12 = embed(wedge);
  CHECK(e12.terms.at({{}, {1, 2}}) == Rational(1, 2));
  CHECK(e12.terms.at({{}, {2, 1}}) == Rational(-1, 2));

  ChartTensor sym(n, {{FactorKind::DualSym, 2}});
  sym.add({{1, 1}}, 1);
  MixedTensor s11 = embed(sym);
  CHECK(s11.terms.at({{1, 1}, {}}) == 1);

  ChartTensor w3(n, {{FactorKind::DualWedge, 3}});
  w3.add_raw({{1, 2, 1}}, 1);
  CHECK(w3.is_zero());  // repeated index dies

  // iota on a full level-1 chart element
  ChartTensor lvl1(n, level1_chart_factors());
  lvl1.add({{1, 2, 3}, {4}, {1, 2}}, 1);
  MixedTensor big = embed(lvl1);
  CHECK(big.terms.at({{1, 2, 3, 4}, {1, 2}}) == Rational(1, 12));
  CHECK(big.terms.at({{2, 1, 3, 4}, {1, 2}}) == Rational(-1, 12));
  CHECK(big.terms.at({{1, 2, 3, 4}, {2, 1}}) == Rational(-1, 12));
  CHECK(big.terms.size() == 12);

  // iota' collapses the symmetrization on equal indices
  ChartTensor lvl2(n, level2_chart_factors());
  lvl2.add({{1, 1}, {2}, {1, 2}}, 1);
  MixedTensor small = embed(lvl2);
  CHECK(small.terms.at({{1, 1, 2}, {1, 2}}) == Rational(1, 2));
  CHECK(small.terms.at({{1, 1, 2}, {2, 1}}) == Rational(-1, 2));
  CHECK(small.terms.size() == 2);
}

TEST_CASE("named contraction example values") {
  int n = 3;
  MixedTensor t(4, 2, n);
  t.add({{1, 2, 3, 1}, {1, 1}}, 1);
  ChartTensor out = named_contraction(ContractionName::c_0_12, t);
  ChartTensor expect(n, {{FactorKind::DualWedge, 2}});
  expect.add({{2, 3}}, 1);
  CHECK(out == expect);

  MixedTensor t2(3, 2, n);
  t2.add({{1, 2, 3}, {2, 3}}, 1);
  ChartTensor out2 = named_contraction(ContractionName::c_0_1, t2);
  ChartTensor expect2(n, {{FactorKind::DualVec, 1}});
  expect2.add({{1}}, 1);
  CHECK(out2 == expect2);

  // alternation kills repeated covariant indices
  MixedTensor t3(4, 2, n);
  t3.add({{1, 1, 2, 3}, {2, 3}}, 1);
  CHECK(named_contraction(ContractionName::c_12_14, t3).is_zero());
}

TEST_CASE("named contractions are equivariant for permutations") {
  std::mt19937 rng(7);
  for (int rep = 0; rep < 5; ++rep) {
    int n = 4;
    MixedTensor t4 = random_tensor(4, 2, n, rng, 6);
    MixedTensor t3 = random_tensor(3, 2, n, rng, 6);
    for (int name = 0; name <= static_cast<int>(ContractionName::c_0_1); ++name) {
      auto cn = static_cast<ContractionName>(name);
      bool four = name <= static_cast<int>(ContractionName::cp_0_12);
      const MixedTensor& t = four ? t4 : t3;
      for (auto [k, l] : {std::pair{1, 2}, std::pair{2, 3}, std::pair{1, 4}}) {
        GLGenerator g = GLGenerator::permutation(k, l);
        CHECK(named_contraction(cn, act_gl(g, t)) == act_gl(g, named_contraction(cn, t)));
      }
    }
  }
}

TEST_CASE("v^i_j basis") {
  ChartTensor v11 = vij_chart(1, 1);
  ChartTensor expect(3, level2_chart_factors());
  expect.add({{1, 1}, {1}, {1, 2}}, 1);
  CHECK(v11 == expect);

  ChartTensor v17 = vij_chart(1, 7);
  ChartTensor expect7(3, level2_chart_factors());
  expect7.add({{1, 1}, {1}, {1, 3}}, 1);
  CHECK(v17 == expect7);

  ChartTensor v36 = vij_chart(3, 6);
  ChartTensor expect36(3, level2_chart_factors());
  expect36.add({{3, 3}, {3}, {1, 2}}, 1);
  CHECK(v36 == expect36);

  CHECK(*weight_of(v36) == Weight{1, 1, -3});
  CHECK(weight_of(vij_basis(3, 6)) == weight_of(v36));
  CHECK_THROWS(vij_chart(1, 19));
}

TEST_CASE("weight_of flags inhomogeneous tensors") {
  MixedTensor t(0, 1, 3);
  t.add({{}, {1}}, 1);
  t.add({{}, {2}}, 1);
  CHECK(!weight_of(t).has_value());
  MixedTensor s = MixedTensor::basis_vector(1, 3).tensor(MixedTensor::basis_covector(2, 3));
  CHECK(*weight_of(s) == Weight{1, -1, 0});
}

TEST_CASE("the five listed highest weight vectors") {
  auto v = [](int i, int j) { return vij_basis(i, j); };
  CHECK(is_highest_weight_vector(v(3, 6), bp({1, 1}, {3})));
  CHECK(is_highest_weight_vector(v(2, 5) + v(2, 12) - v(3, 4) - v(3, 11), bp({1}, {1, 1})));
  CHECK(is_highest_weight_vector(v(2, 6) + v(3, 12), bp({1}, {2})));
  CHECK(is_highest_weight_vector(v(3, 5) + v(3, 12), bp({1}, {2})));
  CHECK(is_highest_weight_vector(
      v(1, 5) + v(1, 12) - v(2, 3) + v(2, 18) - v(3, 9) - v(3, 17), bp({}, {1})));
  // weights pairwise distinct except the two V_{1,2} entries
  CHECK(*weight_of(v(2, 6) + v(3, 12)) == *weight_of(v(3, 5) + v(3, 12)));
  CHECK(*weight_of(v(3, 6)) != *weight_of(v(2, 6) + v(3, 12)));
  // inhomogeneous input is rejected
  MixedTensor t(0, 1, 3);
  t.add({{}, {1}}, 1);
  t.add({{}, {2}}, 1);
  CHECK(!is_highest_weight_vector(t, bp({1}, {})));
}

TEST_CASE("iota embeddings are injective on chart bases") {
  int n = 3;
  std::vector<MixedTensor> images;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = 1; d <= n; ++d)
          for (int x = 1; x <= n; ++x)
            for (int y = x + 1; y <= n; ++y) {
              ChartTensor t(n, level1_chart_factors());
              t.add({{a, b, c}, {d}, {x, y}}, 1);
              images.push_back(embed(t));
            }
  // stack coordinates, check full rank
  std::map<TensorWord, int> index;
  for (const auto& img : images)
    for (const auto& [w, c] : img.terms)
      if (!index.count(w)) index.emplace(w, static_cast<int>(index.size()));
  RatMatrix m(images.size(), index.size());
  m.setZero();
  for (size_t i = 0; i < images.size(); ++i)
    for (const auto& [w, c] : images[i].terms) m(static_cast<int>(i), index.at(w)) = c;
  CHECK(rank_of(m) == static_cast<int>(images.size()));
}

TEST_CASE("realize_irrep matches the Weyl dimension") {
  CHECK(realize_irrep(bp({1}, {}), 3).size() == 3);
  CHECK(realize_irrep(bp({}, {2, 2}), 3).size() == 6);
  CHECK(realize_irrep(bp({1}, {1}), 2).size() == 3);
  // exhaustive small cases (sizes <= 3, ranks <= 4); realize_irrep throws on
  // a size mismatch so constructing is the check
  for (int total = 1; total <= 3; ++total)
    for (int ps = 0; ps <= total; ++ps)
      for (const Partition& plus : partitions_of(ps))
        for (const Partition& minus : partitions_of(total - ps))
          for (int n = 1; n <= 4; ++n) {
            Bipartition b{plus, minus};
            if (b.vanishes_at(n)) continue;
            realize_irrep(b, n);
          }
  // every realized vector is traceless and of the right weight family
  auto basis = realize_irrep(bp({1, 1}, {1}), 3);
  for (const auto& t : basis) CHECK(is_traceless(t));
}

TEST_CASE("mixed tensor JSON round trip") {
  std::mt19937 rng(99);
  MixedTensor t = random_tensor(2, 2, 3, rng, 5);
  t = t.scaled(Rational(1, 6));
  CHECK(MixedTensor::from_json(t.to_json()) == t);
}

TEST_CASE("tensor error paths") {
  MixedTensor t(1, 1, 3);
  t.add({{1}, {2}}, 1);
  CHECK_THROWS(contraction(t, 2, 1));
  CHECK_THROWS(act_gl(GLGenerator::elementary(4, 1), t));
  CHECK_THROWS(realize_irrep(Bipartition{Partition{1, 1}, Partition{3, 2}}, 3));
  ChartTensor c(3, level2_chart_factors());
  CHECK_THROWS(c.add_raw({{1}, {1}, {1, 2}}, 1));  // arity mismatch
  // chart JSON round trip
  ChartTensor v(3, level2_chart_factors());
  v.add_raw({{1, 3}, {2}, {3, 1}}, Rational(-3, 2));
  CHECK(ChartTensor::from_json(v.to_json()) == v);
}
