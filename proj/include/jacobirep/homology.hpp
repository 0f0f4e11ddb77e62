#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jacobirep/charts.hpp"
#include "jacobirep/freegroup.hpp"
#include "jacobirep/multiset.hpp"

namespace jacobirep {

// Bar-complex 2-chain with a lifted coefficient vector. The chain is a
// rational combination of ordered pairs of group elements.
struct TwoCycle {
  int rank = 0;
  std::string name;
  DiagramVector lift;  // lift of the coefficient class
  std::vector<std::tuple<Rational, IAWord, IAWord>> chain;
  std::string note;
};

enum class AbelianCycleKind { Alpha02, Alpha012, Alpha20 };

// Antisymmetrized chains of the standard commuting pairs:
//   alpha_{0,2}   = g(2,1) (x) g(3,1)g(3,2) - sym            (n >= 3)
//   alpha_{0,1^2} = g(2,1) (x) g(4,3) - sym                  (n >= 4)
//   alpha_{2,0}   = f(1,2,3) (x) g(4,1)g(4,2)g(4,3) - sym    (n >= 4, inferred pairing)
TwoCycle abelian_two_cycle(AbelianCycleKind kind, const std::string& coeff_name,
                           const DiagramVector& lift, int n);

enum class RelatorShape { SingleCommutator, DoubleCommutator, TripleCommutator };

// The closed-form 2-cycle attached to a commutator relator
// [A,B] = 1, [A,B][C,D] = 1 or [A,B][C,D][E,F] = 1. The relator is verified
// by free-group substitution before the chain is built.
TwoCycle relator_two_cycle(RelatorShape shape, const std::vector<IAWord>& words,
                           const std::string& coeff_name, const DiagramVector& lift,
                           const std::string& name);

// Exact bar boundary of the chain with the lifted coefficients, grouped by
// group element.
std::vector<std::pair<DiagramVector, IAWord>> bar_boundary(const TwoCycle& cycle);

// Boundary landing in a filtration-quotient chart tensored with the Johnson
// target: level 2 gives sym^2 H* (x) H* (x) wedge^2 H, level 1 gives
// wedge^3 H* (x) H* (x) wedge^2 H.
struct OneCycleClass {
  int level = 0;
  ChartTensor value;
};

OneCycleClass connecting_boundary(const TwoCycle& cycle, int target_level);

// Boundary with coefficients one filtration step below the top at rank 3:
// normal form c.[u123 (x) sigma_{x_i}] + (class in the level-2 chart).
struct SubmoduleBoundaryValue {
  Rational section_coeff = 0;
  int sigma_index = 0;  // 0 when the section part vanishes
  ChartTensor level2_class;
};

SubmoduleBoundaryValue boundary_into_submodule(const TwoCycle& cycle);

// Day--Putman commutator relator instances at rank 3 (the five non-empty
// families), each verified against the free group.
struct RelatorInstance {
  std::string family;
  RelatorShape shape;
  std::vector<IAWord> words;
};
std::vector<RelatorInstance> day_putman_relators();

// ---------------------------------------------------------------------------
// Component detection
// ---------------------------------------------------------------------------

struct WitnessMove {
  enum class Kind { ElementaryMinusId, Permutation } kind;
  int k = 0, l = 0;
};

// One detection script: pre-moves (applied to the embedded value after the
// contraction), and the expected witness.
struct DetectionWitness {
  Bipartition component;
  int source = 0;  // index into the element list
  ContractionName contraction;
  std::vector<WitnessMove> moves;
  ChartTensor witness;  // the resulting exact value (filled by the run)
  bool detected = false;
};

// A multiplicity-two certificate: two functionals evaluated on two sources;
// certified when the 2x2 scalar matrix is nonsingular.
struct PairCertificate {
  Bipartition component;
  std::array<int, 2> sources;
  std::array<ContractionName, 2> contractions;
  std::vector<WitnessMove> pre_moves_per_source[2];
  std::vector<WitnessMove> normalizer[2];  // brings each row onto a common vector
  RatMatrix matrix;                        // filled by the run
  bool detected = false;
};

ChartTensor apply_witness_moves(const std::vector<WitnessMove>& moves, const ChartTensor& t);

// Runs a scripted witness: embed, contract, move; detected when nonzero.
DetectionWitness run_witness(DetectionWitness w, const std::vector<OneCycleClass>& elements);
PairCertificate run_pair_certificate(PairCertificate c, const std::vector<OneCycleClass>& elements);

// Exact span-based detection at rank 3: GL-closure of the given level-2
// chart vectors, decomposed by a weight census.
struct SpanCertificate {
  DecompositionMultiset components{3};
  int dimension = 0;
  RatMatrix echelon_basis;  // rows: 54 coordinates in v^i_j order
};
SpanCertificate gl_span_decomposition(const std::vector<ChartTensor>& vectors);

// 54-coordinate vector of a rank-3 level-2 chart element in v^i_j order,
// index = (i-1)*18 + (j-1).
RatVector vij_coordinate_vector(const ChartTensor& t);

}  // namespace jacobirep
