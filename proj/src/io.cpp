#include "pdslab/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pdslab/error.hpp"

namespace pdslab::io {

namespace fs = std::filesystem;

namespace {

template <typename T>
T get_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("missing JSON key \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("bad value for \"") + key + "\": " + e.what());
  }
}

json witness_or_null(const std::optional<std::uint32_t>& w) { return w ? json(*w) : json(nullptr); }

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("read error on " + path);
  return ss.str();
}

json read_json_file(const std::string& path) {
  const std::string text = read_text_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(path + ": malformed JSON: " + e.what());
  }
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const fs::path target(path);
  if (target.has_parent_path() && !fs::exists(target.parent_path()))
    throw IoError("directory does not exist: " + target.parent_path().string());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw IoError("write error on " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot rename into " + path);
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json field_to_json(const FiniteField& field) {
  return json{{"p", field.p()}, {"k", field.k()}, {"modulus", field.modulus()}};
}

FiniteField field_from_json(const json& j) {
  const auto p = get_field<std::uint32_t>(j, "p");
  const auto k = get_field<std::uint32_t>(j, "k");
  if (!j.contains("modulus")) return FiniteField(p, k);
  const auto modulus = get_field<std::vector<std::uint32_t>>(j, "modulus");
  if (modulus.size() != k + 1) throw InvalidArgument("modulus must have k + 1 coefficients");
  return FiniteField::from_modulus(p, modulus);
}

json cycint_to_json(const CycInt& c) { return json{{"p", c.p()}, {"coeffs", c.coeffs()}}; }

json params_to_json(const PdsParams& params) {
  json j{{"v", params.v}, {"k", params.k}, {"lambda", params.lambda}, {"mu", params.mu}};
  if (params.latin)
    j["latin"] = json{{"epsilon", params.latin->epsilon}, {"N", params.latin->N}, {"R", params.latin->R}};
  else
    j["latin"] = nullptr;
  return j;
}

json group_to_json(const GroupDescriptor& g) { return json{{"field", field_to_json(g.field)}, {"n", g.n}}; }

GroupDescriptor group_from_json(const json& j) {
  if (!j.is_object() || !j.contains("field")) throw InvalidArgument("missing JSON key \"field\"");
  GroupDescriptor g{field_from_json(j.at("field")), get_field<std::uint32_t>(j, "n")};
  if (g.n == 0) throw InvalidArgument("group dimension n must be positive");
  return g;
}

json set_to_json(const GroupDescriptor& g, const GroupSubset& set, const std::optional<PdsParams>& predicted) {
  json j{{"group", group_to_json(g)}, {"members", set.members}};
  if (predicted) j["predicted"] = params_to_json(*predicted);
  return j;
}

SetFile set_from_json(const json& j) {
  if (!j.is_object() || !j.contains("group")) throw InvalidArgument("missing JSON key \"group\"");
  GroupDescriptor g = group_from_json(j.at("group"));
  GroupSubset s(g.group(), get_field<std::vector<std::uint32_t>>(j, "members"));
  std::optional<PdsParams> predicted;
  if (j.contains("predicted") && j.at("predicted").is_object()) {
    const json& pj = j.at("predicted");
    PdsParams prm;
    prm.v = get_field<std::int64_t>(pj, "v");
    prm.k = get_field<std::int64_t>(pj, "k");
    prm.lambda = get_field<std::int64_t>(pj, "lambda");
    prm.mu = get_field<std::int64_t>(pj, "mu");
    prm.latin = classify_latin_type(prm);
    predicted = prm;
  }
  return {std::move(g), std::move(s), predicted};
}

json partition_to_json(const GroupDescriptor& g, const TranslationPartition& part) {
  json classes = json::array();
  for (const auto& c : part.classes) classes.push_back(c.members);
  return json{{"group", group_to_json(g)}, {"labels", part.labels}, {"dropped", part.dropped}, {"classes", classes}};
}

PartitionFile partition_from_json(const json& j) {
  if (!j.is_object() || !j.contains("group")) throw InvalidArgument("missing JSON key \"group\"");
  GroupDescriptor g = group_from_json(j.at("group"));
  auto classes = get_field<std::vector<std::vector<std::uint32_t>>>(j, "classes");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = get_field<std::vector<std::string>>(j, "labels");
  TranslationPartition part = make_partition(g.group(), std::move(classes), std::move(labels));
  return {std::move(g), std::move(part)};
}

json bruteforce_to_json(const BruteForceResult& r) {
  json j{{"method", "bruteforce"}, {"pass", r.ok}, {"degenerate", r.degenerate}};
  if (r.ok) {
    j["params"] = params_to_json(r.params);
  } else {
    j["failure"] = to_string(r.failure);
    json w{{"element", witness_or_null(r.witness)}};
    if (r.failure == PdsFailure::LambdaNotConstant || r.failure == PdsFailure::MuNotConstant) {
      w["count"] = r.witness_count;
      w["expected"] = r.expected_count;
    }
    j["witness"] = w;
  }
  return j;
}

json characters_to_json(const CharacterResult& r) {
  json j{{"method", "characters"}, {"pass", r.ok}, {"degenerate", r.degenerate}};
  if (r.ok) {
    j["params"] = params_to_json(r.params);
    j["eigenvalues"] = r.eigenvalues;
  } else {
    j["failure"] = to_string(r.failure);
    const bool set_defect = r.failure == PdsFailure::ContainsIdentity || r.failure == PdsFailure::Asymmetric;
    j["witness"] = json{{set_defect ? "element" : "character", witness_or_null(r.witness)}};
  }
  return j;
}

json scheme_to_json(const SchemeCheck& check) {
  const SchemeCertificate& c = check.certificate;
  json j{{"scheme", check.ok}, {"d", c.d}, {"labels", c.labels}, {"dropped_empty_classes", c.dropped},
         {"class_sizes", c.class_sizes}};
  if (!check.ok) {
    if (check.witness) {
      const auto& w = *check.witness;
      j["witness"] = json{{"i", w.i}, {"j", w.j}, {"k", w.k}, {"x", w.x}, {"y", w.y},
                          {"count_x", w.count_x}, {"count_y", w.count_y}};
    }
    return j;
  }
  json tensor = json::array();
  for (std::uint32_t i = 0; i <= c.d; ++i) {
    json plane = json::array();
    for (std::uint32_t jj = 0; jj <= c.d; ++jj) {
      json row = json::array();
      for (std::uint32_t k = 0; k <= c.d; ++k) row.push_back(c.p(i, jj, k));
      plane.push_back(row);
    }
    tensor.push_back(plane);
  }
  j["p_tensor"] = tensor;
  if (c.amorphic_checked) {
    json params = json::array();
    for (const auto& p : c.class_params) params.push_back(params_to_json(p));
    j["class_params"] = params;
    j["classes_pds"] = c.classes_pds;
    j["common_epsilon"] = c.common_epsilon ? json(*c.common_epsilon) : json(nullptr);
    j["type_condition"] = c.type_condition;
    json fusions = json::array();
    for (const auto& f : c.fusion_reports) {
      json fp = json::array();
      for (const auto& p : f.params) fp.push_back(params_to_json(p));
      fusions.push_back(json{{"blocks", f.blocks}, {"params", fp}, {"pds", f.pds_ok}, {"scheme", f.scheme_ok}});
    }
    j["fusions"] = fusions;
    j["amorphic"] = c.amorphic;
  }
  return j;
}

json bent_certificate_to_json(const BentPdsCertificate& cert) {
  return json{{"case", cert.proof_case},
              {"u", cert.u},
              {"k", cert.k},
              {"c", cert.c},
              {"lr_squared", cert.lr_squared},
              {"ln_squared", cert.ln_squared},
              {"lr_ln", cert.lr_ln},
              {"dr_identity", cert.dr_identity},
              {"dn_identity", cert.dn_identity},
              {"d0_identity", cert.d0_identity},
              {"predicted_eigenvalues", cert.predicted_eigenvalues},
              {"all_pass", cert.all_pass()}};
}

json function_to_json(const PAryFunction& f) {
  return json{{"field", field_to_json(f.field())}, {"values", f.to_dlog_order()}};
}

PAryFunction function_from_json(const json& j) {
  if (!j.is_object() || !j.contains("field")) throw InvalidArgument("missing JSON key \"field\"");
  FiniteField field = field_from_json(j.at("field"));
  return PAryFunction::from_dlog_order(std::move(field), get_field<std::vector<std::uint32_t>>(j, "values"));
}

json spectrum_to_json(const PAryFunction& f, const WalshSpectrum& s) {
  const FiniteField& F = f.field();
  json coeffs = json::array();
  // Same order as the function file: b = 0, g^0, g^1, ...
  coeffs.push_back(cycint_to_json(s.coefficients[0]));
  for (std::uint32_t t = 0; t + 1 < F.q(); ++t) coeffs.push_back(cycint_to_json(s.coefficients[F.exp_g(t).code]));
  json j{{"field", field_to_json(F)}, {"classification", to_string(s.classification)}};
  j["u"] = s.is_weakly_regular() ? json(s.u) : json(nullptr);
  j["regular"] = s.is_weakly_regular() ? json(s.regular) : json(nullptr);
  j["dual"] = s.dual ? json(s.dual->to_dlog_order()) : json(nullptr);
  j["walsh"] = coeffs;
  return j;
}

json periods_to_json(const UniformPeriods& closed, const std::vector<CycInt>& direct) {
  json d = json::array();
  bool match = direct.size() == closed.periods.size();
  for (std::size_t i = 0; i < direct.size(); ++i) {
    const auto v = direct[i].as_integer();
    d.push_back(v ? json(*v) : cycint_to_json(direct[i]));
    match = match && v && *v == closed.periods[i];
  }
  return json{{"case", closed.which == UniformCase::A ? "A" : "B"},
              {"j", closed.j},
              {"gamma", closed.gamma},
              {"q", closed.q},
              {"f", closed.f},
              {"closed_form", closed.periods},
              {"direct", d},
              {"match", match}};
}

json form_to_json(const QuadraticForm& form) {
  const FiniteField& F = form.field();
  json rows = json::array();
  for (const auto& r : form.matrix()) {
    json row = json::array();
    for (FieldElem e : r) row.push_back(e.code == 0 ? std::string("0") : "g^" + std::to_string(F.log(e)));
    rows.push_back(row);
  }
  return json{{"field", field_to_json(F)}, {"n", form.n()}, {"matrix", rows}};
}

}  // namespace pdslab::io
