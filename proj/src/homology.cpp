#include "jacobirep/homology.hpp"

#include <stdexcept>

namespace jacobirep {

namespace {

ChartTensor chart_product(const ChartTensor& a, const ChartTensor& b) {
  if (a.rank != b.rank) throw std::invalid_argument("rank mismatch");
  std::vector<Factor> factors = a.factors;
  factors.insert(factors.end(), b.factors.begin(), b.factors.end());
  ChartTensor out(a.rank, factors);
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) {
      ChartKey key = ka;
      key.insert(key.end(), kb.begin(), kb.end());
      out.add(key, ca * cb);
    }
  return out;
}

IAWord product_word(std::initializer_list<IAWord> ws, int n) {
  IAWord out = IAWord::identity(n);
  for (const auto& w : ws) out = out * w;
  return out;
}

}  // namespace

TwoCycle abelian_two_cycle(AbelianCycleKind kind, const std::string& coeff_name,
                           const DiagramVector& lift, int n) {
  TwoCycle cycle;
  cycle.rank = n;
  cycle.lift = lift;
  IAWord A = IAWord::identity(n), B = IAWord::identity(n);
  switch (kind) {
    case AbelianCycleKind::Alpha02:
      if (n < 3) throw std::invalid_argument("alpha_{0,2} needs rank >= 3");
      A = magnus_g_word(2, 1, n);
      B = magnus_g_word(3, 1, n) * magnus_g_word(3, 2, n);
      cycle.name = "alpha02[" + coeff_name + "]";
      break;
    case AbelianCycleKind::Alpha012:
      if (n < 4) throw std::invalid_argument("alpha_{0,1^2} needs rank >= 4");
      A = magnus_g_word(2, 1, n);
      B = magnus_g_word(4, 3, n);
      cycle.name = "alpha012[" + coeff_name + "]";
      break;
    case AbelianCycleKind::Alpha20:
      if (n < 4) throw std::invalid_argument("alpha_{2,0} needs rank >= 4");
      A = magnus_f_word(1, 2, 3, n);
      B = product_word({magnus_g_word(4, 1, n), magnus_g_word(4, 2, n), magnus_g_word(4, 3, n)}, n);
      cycle.name = "alpha20[" + coeff_name + "]";
      cycle.note = "commuting pair inferred from its use with f(1,2,3)";
      break;
  }
  if (!same_element(A * B, B * A)) throw std::logic_error("abelian cycle pair does not commute");
  cycle.chain.emplace_back(1, A, B);
  cycle.chain.emplace_back(-1, B, A);
  return cycle;
}

TwoCycle relator_two_cycle(RelatorShape shape, const std::vector<IAWord>& words,
                           const std::string& coeff_name, const DiagramVector& lift,
                           const std::string& name) {
  size_t need = shape == RelatorShape::SingleCommutator  ? 2
                : shape == RelatorShape::DoubleCommutator ? 4
                                                          : 6;
  if (words.size() != need) throw std::invalid_argument("wrong number of relator words");
  int n = words[0].rank;
  auto comm = [&](const IAWord& x, const IAWord& y) { return x * y * x.inverse() * y.inverse(); };
  IAWord rel = comm(words[0], words[1]);
  if (need >= 4) rel = rel * comm(words[2], words[3]);
  if (need == 6) rel = rel * comm(words[4], words[5]);
  if (!rel.is_identity_element())
    throw std::domain_error("relator fails under free-group evaluation: " + name);

  TwoCycle cycle;
  cycle.rank = n;
  cycle.name = name.empty() ? ("relator[" + coeff_name + "]") : name;
  cycle.lift = lift;
  auto add = [&](const Rational& c, const IAWord& g, const IAWord& h) {
    cycle.chain.emplace_back(c, g, h);
  };
  const IAWord one = IAWord::identity(n);
  if (shape == RelatorShape::SingleCommutator) {
    add(1, words[0], words[1]);
    add(-1, words[1], words[0]);
    return cycle;
  }
  const IAWord &A = words[0], &B = words[1], &C = words[2], &D = words[3];
  add(1, A, B);
  add(1, A * B, A.inverse());
  add(1, A * B * A.inverse(), B.inverse());
  add(1, comm(A, B), C);
  add(1, comm(A, B) * C, D);
  add(1, comm(A, B) * C * D, C.inverse());
  if (shape == RelatorShape::DoubleCommutator) {
    add(-1, A, A.inverse());
    add(-1, B, B.inverse());
    add(-1, C, C.inverse());
    add(-3, one, one);
    return cycle;
  }
  const IAWord &E = words[4], &F = words[5];
  add(1, comm(A, B) * C * D * C.inverse(), D.inverse());
  add(1, comm(A, B) * comm(C, D), E);
  add(1, comm(A, B) * comm(C, D) * E, F);
  add(1, comm(A, B) * comm(C, D) * E * F, E.inverse());
  add(-1, A, A.inverse());
  add(-1, B, B.inverse());
  add(-1, C, C.inverse());
  add(-1, D, D.inverse());
  add(-1, E, E.inverse());
  add(-5, one, one);
  return cycle;
}

std::vector<std::pair<DiagramVector, IAWord>> bar_boundary(const TwoCycle& cycle) {
  std::map<std::vector<std::vector<std::pair<int, int>>>, std::pair<DiagramVector, IAWord>> acc;
  auto put = [&](const DiagramVector& coeff, const IAWord& g) {
    if (coeff.is_zero()) return;
    auto key = g.substitution().images;
    auto it = acc.find(key);
    if (it == acc.end())
      acc.emplace(key, std::make_pair(coeff, g));
    else
      it->second.first = it->second.first + coeff;
  };
  for (const auto& [c, g, h] : cycle.chain) {
    DiagramVector lift_c = cycle.lift.scaled(c);
    // d(m (x) g (x) h) = m.g (x) h - m (x) gh + m (x) g
    put(act_subst(g.substitution(), lift_c), h);
    put(lift_c.scaled(-1), g * h);
    put(lift_c, g);
  }
  std::vector<std::pair<DiagramVector, IAWord>> out;
  for (auto& [key, entry] : acc)
    if (!entry.first.is_zero()) out.push_back(entry);
  return out;
}

OneCycleClass connecting_boundary(const TwoCycle& cycle, int target_level) {
  if (target_level != 1 && target_level != 2)
    throw std::invalid_argument("target level must be 1 or 2");
  if (!cycle.lift.is_zero() && filtration_level(cycle.lift) < target_level - 1)
    throw std::invalid_argument("coefficient lift sits below the required filtration");
  auto grouped = bar_boundary(cycle);
  // the full chart is (quotient factor) (x) H* (x) wedge^2 H
  ChartTensor total(cycle.rank,
                    target_level == 2 ? level2_chart_factors() : level1_chart_factors());
  for (const auto& [coeff, g] : grouped) {
    if (filtration_level(coeff) < target_level)
      throw std::domain_error("boundary does not land in the target level");
    ChartTensor cls = quotient_class(coeff, target_level);
    if (cls.is_zero()) continue;
    total = total + chart_product(cls, johnson_class(g));
  }
  return {target_level, total};
}

SubmoduleBoundaryValue boundary_into_submodule(const TwoCycle& cycle) {
  int n = cycle.rank;
  if (n != 3) throw std::invalid_argument("submodule boundary normal form is a rank-3 computation");
  auto grouped = bar_boundary(cycle);
  for (const auto& [coeff, g] : grouped)
    if (filtration_level(coeff) < 1)
      throw std::domain_error("boundary does not land one step below the top");

  const DiagramKey u_key = DiagramKey::tripod(1, 2, 3);
  auto tripod_coeff = [&](const DiagramVector& v) {
    auto it = v.coeffs.find(u_key);
    return it == v.coeffs.end() ? Rational(0) : it->second;
  };

  // split the boundary chain into its tripod-coefficient part and its
  // bubble-coefficient part; both are cycles on their own, and the split is
  // canonical (no choice of bounding chains is involved)
  DiagramVector u_vec(n);
  u_vec.add(u_key, 1);
  DiagramVector tripod_boundary(n);
  ChartTensor J(n, johnson_factors());
  SubmoduleBoundaryValue out;
  ChartTensor level2(n, level2_chart_factors());
  for (const auto& [coeff, g] : grouped) {
    Rational d = tripod_coeff(coeff);
    if (d != 0) {
      tripod_boundary = tripod_boundary + bracket(u_vec, g.substitution()).scaled(d);
      J = J + johnson_class(g).scaled(d);
    }
    DiagramVector wpart = coeff;
    if (d != 0) wpart.add(u_key, -d);
    if (!wpart.is_zero())
      level2 = level2 + chart_product(quotient_class(wpart, 2), johnson_class(g));
  }
  if (!tripod_boundary.is_zero())
    throw std::domain_error("tripod part of the boundary is not a cycle");

  // label the tripod cycle: its projection to the top quotient matches
  // c . [u (x) sigma_{x_i}]
  if (!J.is_zero()) {
    bool matched = false;
    for (int i = 1; i <= n && !matched; ++i) {
      ChartTensor ref = johnson_class(inner_word(i, n));
      const auto& [k0, r0] = *ref.terms.begin();
      auto it = J.terms.find(k0);
      if (it == J.terms.end()) continue;
      Rational c = it->second / r0;
      if (J == ref.scaled(c)) {
        out.section_coeff = c;
        out.sigma_index = i;
        matched = true;
      }
    }
    if (!matched)
      throw std::domain_error("tripod part is not a multiple of an inner-conjugation class");
  }
  out.level2_class = level2;
  return out;
}

std::vector<RelatorInstance> day_putman_relators() {
  const int n = 3;
  std::vector<RelatorInstance> out;
  std::vector<std::array<int, 3>> triples;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c)
        if (a != b && b != c && a != c) triples.push_back({a, b, c});
  const int signs[2] = {1, -1};

  for (auto [a, b, c] : triples)
    out.push_back({"H1", RelatorShape::SingleCommutator, {conj_gen(a, b, n), conj_gen(c, b, n)}});
  for (auto [a, b, c] : triples)
    for (int alpha : signs)
      for (int beta : signs)
        for (int gamma : signs)
          for (int eps : signs)
            for (int zeta : signs)
              for (int xi : signs) {
                IAWord m1 = comm_gen(a, alpha, b, beta, c, gamma, n);
                IAWord m2 = xi == 1 ? comm_gen(a, -alpha, b, eps, c, zeta, n)
                                    : comm_gen(a, -alpha, c, zeta, b, eps, n);
                out.push_back({"H2", RelatorShape::SingleCommutator, {m1, m2}});
              }
  for (auto [a, b, c] : triples)
    for (int alpha : signs)
      for (int beta : signs) {
        IAWord left = conj_gen(c, b, n).pow(beta) * conj_gen(a, b, n).pow(beta);
        out.push_back({"H4", RelatorShape::SingleCommutator, {left, conj_gen(c, a, n).pow(alpha)}});
      }
  for (auto [a, b, c] : triples)
    for (int alpha : signs)
      for (int beta : signs)
        for (int gamma : signs)
          for (int delta : signs) {
            IAWord A = comm_gen(c, gamma, a, alpha, b, delta, n);
            IAWord B = conj_gen(a, b, n).pow(beta);
            IAWord C = conj_gen(c, b, n).pow(-delta);
            IAWord D = comm_gen(c, gamma, a, alpha, b, beta, n);
            if (beta == delta) {
              out.push_back({"H7", RelatorShape::DoubleCommutator, {A, B, C, D}});
            } else {
              out.push_back({"H7", RelatorShape::TripleCommutator, {A, B, C, D, D, A}});
            }
          }
  for (auto [a, b, c] : triples)
    for (int alpha : signs)
      for (int beta : signs)
        for (int gamma : signs) {
          IAWord A = conj_gen(a, c, n).pow(gamma) * conj_gen(b, c, n).pow(gamma);
          IAWord B = conj_gen(a, b, n).pow(beta) * conj_gen(c, b, n).pow(beta);
          IAWord C = comm_gen(a, alpha, b, beta, c, gamma, n);
          IAWord D = conj_gen(b, a, n).pow(alpha) * conj_gen(c, a, n).pow(alpha);
          out.push_back({"H9", RelatorShape::DoubleCommutator, {A, B, C, D}});
        }
  return out;
}

ChartTensor apply_witness_moves(const std::vector<WitnessMove>& moves, const ChartTensor& t) {
  ChartTensor out = t;
  for (const auto& m : moves) {
    if (m.kind == WitnessMove::Kind::ElementaryMinusId) {
      out = act_gl(GLGenerator::elementary(m.k, m.l), out) - out;
    } else {
      out = act_gl(GLGenerator::permutation(m.k, m.l), out);
    }
  }
  return out;
}

DetectionWitness run_witness(DetectionWitness w, const std::vector<OneCycleClass>& elements) {
  const OneCycleClass& e = elements.at(w.source);
  MixedTensor embedded = embed(e.value);
  ChartTensor contracted = named_contraction(w.contraction, embedded);
  w.witness = apply_witness_moves(w.moves, contracted);
  w.detected = !w.witness.is_zero();
  return w;
}

PairCertificate run_pair_certificate(PairCertificate c, const std::vector<OneCycleClass>& elements) {
  c.matrix = RatMatrix::Zero(2, 2);
  std::optional<ChartKey> ref_key;
  for (int row = 0; row < 2; ++row) {
    const OneCycleClass& e = elements.at(c.sources[row]);
    ChartTensor moved = apply_witness_moves(c.pre_moves_per_source[row], e.value);
    MixedTensor embedded = embed(moved);
    for (int col = 0; col < 2; ++col) {
      ChartTensor val = named_contraction(c.contractions[col], embedded);
      val = apply_witness_moves(c.normalizer[row], val);
      if (val.is_zero()) continue;
      if (!ref_key) ref_key = val.terms.begin()->first;
      if (val.terms.size() != 1 || val.terms.begin()->first != *ref_key)
        throw std::domain_error("pair certificate rows are not scalar multiples of one vector");
      c.matrix(row, col) = val.terms.begin()->second;
    }
  }
  c.detected = c.matrix(0, 0) * c.matrix(1, 1) - c.matrix(0, 1) * c.matrix(1, 0) != 0;
  return c;
}

RatVector vij_coordinate_vector(const ChartTensor& t) {
  RatVector out = RatVector::Zero(54);
  for (const auto& [ij, c] : vij_coordinates(t)) out((ij.first - 1) * 18 + (ij.second - 1)) = c;
  return out;
}

SpanCertificate gl_span_decomposition(const std::vector<ChartTensor>& vectors) {
  std::vector<ChartTensor> basis;
  RatMatrix rows(0, 54);
  auto try_insert = [&](const ChartTensor& t) -> bool {
    RatMatrix cand(rows.rows() + 1, 54);
    if (rows.rows() > 0) cand.topRows(rows.rows()) = rows;
    cand.row(rows.rows()) = vij_coordinate_vector(t).transpose();
    RatMatrix ech = row_space(cand);
    if (ech.rows() == rows.rows()) return false;
    rows = ech;
    basis.push_back(t);
    return true;
  };
  for (const auto& v : vectors)
    if (!v.is_zero()) try_insert(v);
  std::vector<GLGenerator> gens;
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; l <= 3; ++l)
      if (k != l) gens.push_back(GLGenerator::elementary(k, l));
  gens.push_back(GLGenerator::negate_first());
  gens.push_back(GLGenerator::permutation(1, 2));
  gens.push_back(GLGenerator::permutation(2, 3));
  for (size_t i = 0; i < basis.size(); ++i)
    for (const auto& g : gens) try_insert(act_gl(g, basis[i]));

  SpanCertificate cert;
  cert.dimension = static_cast<int>(rows.rows());
  cert.echelon_basis = rows;
  LaurentCharacter census(3);
  std::map<Weight, std::vector<int>> weight_cols;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 18; ++j) {
      auto w = weight_of(vij_chart(i, j));
      weight_cols[*w].push_back((i - 1) * 18 + (j - 1));
    }
  int total = 0;
  for (const auto& [w, cols] : weight_cols) {
    RatMatrix proj(rows.rows(), cols.size());
    for (int r = 0; r < rows.rows(); ++r)
      for (size_t cc = 0; cc < cols.size(); ++cc) proj(r, cc) = rows(r, cols[cc]);
    int d = rank_of(proj);
    if (d > 0) census.add(w, d);
    total += d;
  }
  if (total != cert.dimension)
    throw std::logic_error("span is not graded by weights; closure is incomplete");
  cert.components = peel_decompose(census, 3);
  return cert;
}

}  // namespace jacobirep
