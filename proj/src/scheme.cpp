#include "pdslab/scheme.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "pdslab/error.hpp"

namespace pdslab {

TranslationPartition make_partition(GroupPtr group, std::vector<std::vector<std::uint32_t>> classes,
                                    std::vector<std::string> labels) {
  if (!group) throw InvalidArgument("partition needs a group");
  if (labels.empty())
    for (std::size_t i = 0; i < classes.size(); ++i) labels.push_back("S" + std::to_string(i + 1));
  if (labels.size() != classes.size()) throw InvalidArgument("one label per class required");

  TranslationPartition part;
  part.group = group;
  std::vector<std::int32_t> owner(group->order(), -1);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    GroupSubset s(group, std::move(classes[i]));
    if (s.contains(0)) throw InvalidArgument("class " + labels[i] + " contains the identity");
    if (const auto w = s.asymmetry_witness())
      throw InvalidArgument("class " + labels[i] + " is not symmetric: contains " + std::to_string(*w) +
                            " but not its negative");
    for (auto x : s.members) {
      if (owner[x] >= 0)
        throw InvalidArgument("element " + std::to_string(x) + " lies in classes " + labels[owner[x]] + " and " +
                              labels[i]);
      owner[x] = static_cast<std::int32_t>(i);
    }
    if (s.size() == 0) {
      part.dropped.push_back(labels[i]);
      continue;
    }
    part.classes.push_back(std::move(s));
    part.labels.push_back(labels[i]);
  }
  for (std::uint32_t x = 1; x < group->order(); ++x)
    if (owner[x] < 0) throw InvalidArgument("element " + std::to_string(x) + " is in no class");
  return part;
}

bool SchemeCertificate::tensor_symmetric() const {
  for (std::uint32_t i = 0; i <= d; ++i)
    for (std::uint32_t j = 0; j <= d; ++j)
      for (std::uint32_t k = 0; k <= d; ++k)
        if (p(i, j, k) != p(j, i, k)) return false;
  return true;
}

bool SchemeCertificate::row_sums_hold() const {
  for (std::uint32_t i = 0; i <= d; ++i)
    for (std::uint32_t k = 0; k <= d; ++k) {
      std::int64_t sum = 0;
      for (std::uint32_t j = 0; j <= d; ++j) sum += p(i, j, k);
      if (sum != static_cast<std::int64_t>(class_sizes[i])) return false;
    }
  return true;
}

SchemeCheck check_scheme(const TranslationPartition& part) {
  const ElementaryAbelianGroup& G = *part.group;
  const std::uint32_t d = part.d();
  const std::uint32_t n = d + 1;
  const std::uint32_t v = G.order();

  // Class 0 is {0}.
  std::vector<std::vector<std::uint32_t>> cls{{0}};
  for (const auto& s : part.classes) cls.push_back(s.members);
  std::vector<std::uint32_t> owner(v, 0);
  for (std::uint32_t i = 1; i < n; ++i)
    for (auto x : cls[i]) owner[x] = i;

  SchemeCheck out;
  SchemeCertificate& cert = out.certificate;
  cert.d = d;
  cert.labels = part.labels;
  cert.dropped = part.dropped;
  for (const auto& c : cls) cert.class_sizes.push_back(c.size());
  cert.p_tensor.assign(static_cast<std::size_t>(n) * n * n, 0);

  std::vector<std::int64_t> counts(v);
  std::vector<std::uint32_t> sums;
  for (std::uint32_t i = 0; i < n; ++i) {
    const kernels::DigitPlanes planes = G.planes_of(cls[i]);
    sums.resize(cls[i].size());
    for (std::uint32_t j = 0; j < n; ++j) {
      // counts[z] = #{(a, b) in S_i x S_j : a + b = z}
      std::fill(counts.begin(), counts.end(), 0);
      for (auto b : cls[j]) {
        kernels::translate_indices(planes, G.digits(G.neg(b)), G.place(), sums);
        for (auto z : sums) ++counts[z];
      }
      std::vector<std::optional<std::uint32_t>> first(n);
      for (std::uint32_t z = 0; z < v; ++z) {
        const std::uint32_t k = owner[z];
        if (!first[k]) {
          first[k] = z;
          cert.p_tensor[(i * n + j) * n + k] = counts[z];
        } else if (counts[z] != counts[*first[k]]) {
          out.witness = SchemeWitness{i, j, k, *first[k], z, counts[*first[k]], counts[z]};
          return out;
        }
      }
    }
  }
  out.ok = true;
  return out;
}

TranslationPartition build_cyclotomic_scheme(std::uint32_t p, std::uint32_t e, std::uint32_t gamma, std::uint32_t m,
                                             FormKind kind) {
  const CyclotomicSetup setup(p, e, gamma, m, kind);
  std::vector<std::vector<std::uint32_t>> classes;
  std::vector<std::string> labels;
  auto zero = setup.zero_set().members;
  zero.erase(std::remove(zero.begin(), zero.end(), 0u), zero.end());
  classes.push_back(std::move(zero));
  labels.push_back("D0");
  for (std::uint32_t i = 0; i < e; ++i) {
    classes.push_back(setup.class_set(i).members);
    labels.push_back("C" + std::to_string(i));
  }
  return make_partition(setup.group(), std::move(classes), std::move(labels));
}

TranslationPartition build_bent_scheme(const PAryFunction& f) {
  const BentPds b = construct_bent_pds(f);
  return make_partition(f.group(), {b.d0_minus.members, b.d_r.members, b.d_n.members}, {"D0", "DR", "DN"});
}

std::uint64_t bell_number(std::uint32_t d) {
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (std::uint32_t i = 0; i < d; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

namespace {

// Calls fn(rgs, blocks) for every set partition of {0..d-1}, as restricted growth strings.
template <typename Fn>
void for_each_set_partition(std::uint32_t d, Fn&& fn) {
  std::vector<std::uint32_t> a(d, 0);
  auto rec = [&](auto&& self, std::uint32_t pos, std::uint32_t blocks) -> void {
    if (pos == d) {
      fn(a, blocks);
      return;
    }
    for (std::uint32_t b = 0; b <= blocks && b < d; ++b) {
      a[pos] = b;
      self(self, pos + 1, std::max(blocks, b + 1));
    }
  };
  if (d > 0) {
    a[0] = 0;
    rec(rec, 1, 1);
  }
}

}  // namespace

SchemeCheck certify_amorphic(const TranslationPartition& part) {
  const std::uint32_t d = part.d();
  if (d > 8) throw InvalidArgument("fusion enumeration is capped at d = 8 classes, got " + std::to_string(d));
  SchemeCheck out = check_scheme(part);
  if (!out.ok) return out;
  SchemeCertificate& cert = out.certificate;
  cert.amorphic_checked = true;

  // Brute-force results per union of classes, keyed by class bitmask.
  std::map<std::uint32_t, BruteForceResult> cache;
  auto union_result = [&](std::uint32_t mask) -> const BruteForceResult& {
    auto it = cache.find(mask);
    if (it != cache.end()) return it->second;
    std::vector<std::uint32_t> members;
    for (std::uint32_t i = 0; i < d; ++i)
      if (mask >> i & 1) members.insert(members.end(), part.classes[i].members.begin(), part.classes[i].members.end());
    return cache.emplace(mask, verify_pds_bruteforce(GroupSubset(part.group, std::move(members)))).first->second;
  };

  cert.classes_pds = true;
  for (std::uint32_t i = 0; i < d; ++i) {
    const auto& r = union_result(1u << i);
    cert.classes_pds = cert.classes_pds && r.ok;
    cert.class_params.push_back(r.params);
  }
  cert.type_condition = d > 0;
  for (const auto& prm : cert.class_params) {
    if (!prm.latin) {
      cert.type_condition = false;
      break;
    }
    if (!cert.common_epsilon) cert.common_epsilon = prm.latin->epsilon;
    if (*cert.common_epsilon != prm.latin->epsilon) cert.type_condition = false;
  }
  if (!cert.type_condition) cert.common_epsilon.reset();

  bool all_ok = cert.classes_pds;
  for_each_set_partition(d, [&](const std::vector<std::uint32_t>& rgs, std::uint32_t nblocks) {
    FusionReport rep;
    rep.blocks.assign(nblocks, {});
    std::vector<std::uint32_t> masks(nblocks, 0);
    for (std::uint32_t i = 0; i < d; ++i) {
      rep.blocks[rgs[i]].push_back(i + 1);
      masks[rgs[i]] |= 1u << i;
    }
    rep.pds_ok = true;
    for (std::uint32_t b = 0; b < nblocks; ++b) {
      const auto& r = union_result(masks[b]);
      rep.params.push_back(r.params);
      if (!r.ok && rep.pds_ok) {
        rep.pds_ok = false;
        rep.failing_block = b;
      }
    }
    // Fused intersection numbers: sum_{i in I, j in J} p_ij^k must not depend on k in K.
    std::vector<std::vector<std::uint32_t>> fused{{0}};
    for (const auto& blk : rep.blocks) fused.push_back(blk);
    rep.scheme_ok = true;
    for (const auto& I : fused)
      for (const auto& J : fused)
        for (const auto& K : fused) {
          std::optional<std::int64_t> value;
          for (auto k : K) {
            std::int64_t s = 0;
            for (auto i : I)
              for (auto j : J) s += cert.p(i, j, k);
            if (!value) value = s;
            else if (*value != s) rep.scheme_ok = false;
          }
        }
    all_ok = all_ok && rep.pds_ok && rep.scheme_ok;
    cert.fusion_reports.push_back(std::move(rep));
  });
  cert.amorphic = all_ok;
  return out;
}

TranslationPartition random_symmetric_partition(GroupPtr group, std::uint32_t parts, std::uint64_t seed) {
  const ElementaryAbelianGroup& G = *group;
  std::vector<std::vector<std::uint32_t>> orbits;
  for (std::uint32_t x = 1; x < G.order(); ++x) {
    const std::uint32_t y = G.neg(x);
    if (y < x) continue;
    orbits.push_back(y == x ? std::vector<std::uint32_t>{x} : std::vector<std::uint32_t>{x, y});
  }
  if (parts == 0 || parts > orbits.size())
    throw InvalidArgument("cannot split " + std::to_string(orbits.size()) + " orbits into " + std::to_string(parts) +
                          " classes");
  std::mt19937_64 rng(seed);
  std::shuffle(orbits.begin(), orbits.end(), rng);
  std::vector<std::vector<std::uint32_t>> classes(parts);
  std::uniform_int_distribution<std::uint32_t> pick(0, parts - 1);
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    auto& dst = classes[o < parts ? o : pick(rng)];
    dst.insert(dst.end(), orbits[o].begin(), orbits[o].end());
  }
  return make_partition(std::move(group), std::move(classes));
}

}  // namespace pdslab
