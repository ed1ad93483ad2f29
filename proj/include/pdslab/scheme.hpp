#pragma once

// Translation association schemes on an elementary abelian group: a partition
// of G \ {0} into symmetric classes S_1..S_d with relations x - y in S_i.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pdslab/bent.hpp"
#include "pdslab/pds.hpp"
#include "pdslab/qform.hpp"

namespace pdslab {

struct TranslationPartition {
  GroupPtr group;
  std::vector<GroupSubset> classes;
  std::vector<std::string> labels;   // one per class
  std::vector<std::string> dropped;  // labels of empty classes removed at construction

  std::uint32_t d() const { return static_cast<std::uint32_t>(classes.size()); }
};

// Validates symmetry, disjointness and the cover of G \ {0}; drops empty classes.
// Throws InvalidArgument on violation.
TranslationPartition make_partition(GroupPtr group, std::vector<std::vector<std::uint32_t>> classes,
                                    std::vector<std::string> labels = {});

struct FusionReport {
  std::vector<std::vector<std::uint32_t>> blocks;  // 1-based class numbers per fused class
  std::vector<PdsParams> params;                   // one per fused class
  bool pds_ok = false;
  bool scheme_ok = false;  // fused intersection numbers constant
  std::optional<std::uint32_t> failing_block;
};

struct SchemeCertificate {
  std::uint32_t d = 0;
  std::vector<std::int64_t> p_tensor;  // (d+1)^3, class 0 = {0}
  std::vector<std::uint64_t> class_sizes;
  std::vector<std::string> labels;
  std::vector<std::string> dropped;

  bool amorphic_checked = false;
  bool amorphic = false;
  std::vector<PdsParams> class_params;
  bool classes_pds = false;
  std::optional<int> common_epsilon;
  bool type_condition = false;  // all Latin or all negative Latin
  std::vector<FusionReport> fusion_reports;

  std::int64_t p(std::uint32_t i, std::uint32_t j, std::uint32_t k) const {
    const std::size_t n = d + 1;
    return p_tensor[(i * n + j) * n + k];
  }
  bool tensor_symmetric() const;  // p_ij^k = p_ji^k
  bool row_sums_hold() const;     // sum_j p_ij^k = |S_i|
};

struct SchemeWitness {
  std::uint32_t i, j, k;
  std::uint32_t x, y;  // two elements of S_k
  std::int64_t count_x, count_y;
};

struct SchemeCheck {
  bool ok = false;
  SchemeCertificate certificate;
  std::optional<SchemeWitness> witness;
};

SchemeCheck check_scheme(const TranslationPartition& part);

// {D_0 \ {0}, D_{C_0}, ..., D_{C_{e-1}}}.
TranslationPartition build_cyclotomic_scheme(std::uint32_t p, std::uint32_t e, std::uint32_t gamma, std::uint32_t m,
                                             FormKind kind);
// {D_0 \ {0}, D_R, D_N}.
TranslationPartition build_bent_scheme(const PAryFunction& f);

std::uint64_t bell_number(std::uint32_t d);

// Runs check_scheme, then the per-class PDS check, the type condition and every
// fusion. Throws InvalidArgument when d > 8.
SchemeCheck certify_amorphic(const TranslationPartition& part);

// Random partition of G \ {0} into `parts` nonempty symmetric classes.
TranslationPartition random_symmetric_partition(GroupPtr group, std::uint32_t parts, std::uint64_t seed);

}  // namespace pdslab
