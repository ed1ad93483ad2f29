#pragma once

// JSON formats for fields, sets, partitions, functions and certificates, and
// atomic file output.

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "pdslab/bent.hpp"
#include "pdslab/cyclo.hpp"
#include "pdslab/pds.hpp"
#include "pdslab/qform.hpp"
#include "pdslab/scheme.hpp"

namespace pdslab::io {

using json = nlohmann::ordered_json;

// Reads and parses a JSON file. IoError if unreadable, InvalidArgument if malformed.
json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);
// Writes via a temporary file in the same directory and a rename.
void write_file_atomic(const std::string& path, const std::string& content);
std::string dump(const json& j);  // 2-space indent, trailing newline

json field_to_json(const FiniteField& field);  // {p, k, modulus}
FiniteField field_from_json(const json& j);

json cycint_to_json(const CycInt& c);  // {p, coeffs}
json params_to_json(const PdsParams& params);

// The group F_q^n, q given by the field.
struct GroupDescriptor {
  FiniteField field;
  std::uint32_t n;
  GroupPtr group() const { return ElementaryAbelianGroup::vector_space(field, n); }
};

json group_to_json(const GroupDescriptor& g);  // {field, n}
GroupDescriptor group_from_json(const json& j);

struct SetFile {
  GroupDescriptor group;
  GroupSubset set;
  std::optional<PdsParams> predicted;
};

json set_to_json(const GroupDescriptor& g, const GroupSubset& set, const std::optional<PdsParams>& predicted);
SetFile set_from_json(const json& j);

struct PartitionFile {
  GroupDescriptor group;
  TranslationPartition partition;
};

json partition_to_json(const GroupDescriptor& g, const TranslationPartition& part);
PartitionFile partition_from_json(const json& j);

json bruteforce_to_json(const BruteForceResult& r);
json characters_to_json(const CharacterResult& r);
json scheme_to_json(const SchemeCheck& check);
json bent_certificate_to_json(const BentPdsCertificate& cert);

// Function file: values in the order (0, g^0, g^1, ...).
json function_to_json(const PAryFunction& f);
PAryFunction function_from_json(const json& j);
json spectrum_to_json(const PAryFunction& f, const WalshSpectrum& s);

json periods_to_json(const UniformPeriods& closed, const std::vector<CycInt>& direct);
json form_to_json(const QuadraticForm& form);  // entries "g^e" by discrete log, "0" for zero

}  // namespace pdslab::io
