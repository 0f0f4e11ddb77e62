#pragma once

#include <string>
#include <vector>

#include "jacobirep/homology.hpp"
#include "jacobirep/multiset.hpp"

namespace jacobirep {

enum class GroupKind { IA, IO };
enum class Pipeline { TopOverBottom, Middle, Top };
// TopOverBottom: coefficients A''_2/A_{2,2}; Middle: A_{2,1}; Top: A''_2.

std::string pipeline_name(Pipeline p);
std::string group_name(GroupKind g);
Pipeline pipeline_parse(const std::string& s);
GroupKind group_parse(const std::string& s);

// First homology with a trivial coefficient multiset M: M (x) W where
// W = H* (x) wedge^2 H for IA and its top component V_{1^2,1} for IO.
DecompositionMultiset h1_trivial(const DecompositionMultiset& M, GroupKind g, int n);

DecompositionMultiset coefficient_multiset(Pipeline p, int n);  // the module itself, graded
DecompositionMultiset top_quotient_multiset(Pipeline p, int n);
DecompositionMultiset sub_multiset(Pipeline p, int n);

// The scripted boundary elements each pipeline feeds to detection.
struct BoundaryElement {
  std::string name;
  OneCycleClass value;
};

struct TableRow {
  bool determinate = false;
  DecompositionMultiset result;
  DecompositionMultiset residual_gap;
  std::vector<std::string> notes;
  std::vector<DetectionWitness> witnesses;
  std::vector<PairCertificate> pair_certificates;
};

TableRow les_table(Pipeline p, GroupKind g, int n);

// Admissible ranks per pipeline/group for table generation.
std::vector<int> admissible_ranks(Pipeline p, GroupKind g);

// Certified image of the connecting map into the level-1 chart homology for
// the IA TopOverBottom pipeline at rank n (the lower-bound multiset), with
// its witness set.
struct CertifiedImage {
  DecompositionMultiset components;
  std::vector<DetectionWitness> witnesses;
  std::vector<PairCertificate> pairs;
  std::vector<std::string> notes;
};
CertifiedImage certified_image_level1(int n);   // from the two scripted cycles
CertifiedImage certified_image_level2(int n);   // from the tripod-class cycles (n >= 4)

// Span of all Day--Putman relator-cycle boundary images at rank 3.
SpanCertificate relator_image_span();

// The scripted boundary values themselves (for the CLI registry and tests).
std::vector<BoundaryElement> scripted_level1_elements(int n);
std::vector<BoundaryElement> scripted_level2_elements(int n);

// Second Albanese homology input (cited data) and the quotient check:
// decompose V_{0,1^3} (x) that multiset at rank n, subtract the homology of
// the bottom coefficient; reproduces the displayed quotient.
DecompositionMultiset pettet_multiset(int n);
struct PettetCheck {
  DecompositionMultiset intermediate;
  DecompositionMultiset result;
};
PettetCheck pettet_quotient_check(int n);

}  // namespace jacobirep
