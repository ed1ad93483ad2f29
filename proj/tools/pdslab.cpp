// pdslab: construct, certify and export partial difference sets and
// translation schemes.
//
// Exit codes: 0 success, 1 verification failed, 2 invalid input, 3 I/O error.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pdslab/bent.hpp"
#include "pdslab/cyclo.hpp"
#include "pdslab/error.hpp"
#include "pdslab/io.hpp"
#include "pdslab/kernels.hpp"
#include "pdslab/pds.hpp"
#include "pdslab/qform.hpp"
#include "pdslab/scheme.hpp"

using namespace pdslab;
using io::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitIo = 3;

// "p^k" or a prime power "q".
FiniteField parse_field(const std::string& s) {
  const auto caret = s.find('^');
  try {
    if (caret != std::string::npos) {
      const auto p = std::stoul(s.substr(0, caret));
      const auto k = std::stoul(s.substr(caret + 1));
      return FiniteField(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k));
    }
    const auto q = std::stoul(s);
    const auto primes = prime_factors(q);
    if (primes.size() != 1) throw InvalidArgument("field size " + s + " is not a prime power");
    std::uint32_t k = 0;
    for (auto r = q; r > 1; r /= primes[0]) ++k;
    return FiniteField(static_cast<std::uint32_t>(primes[0]), k);
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const InvalidArgument*>(&e)) throw;
    throw InvalidArgument("cannot parse field \"" + s + "\"; expected p^k or a prime power");
  }
}

FormKind parse_form(const std::string& s) {
  if (s == "hyperbolic" || s == "+") return FormKind::Hyperbolic;
  if (s == "elliptic" || s == "-") return FormKind::Elliptic;
  throw InvalidArgument("form must be hyperbolic or elliptic, got \"" + s + "\"");
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-")
    std::cout << content;
  else
    io::write_file_atomic(out_path, content);
}

std::string render_set(const io::GroupDescriptor& g, const GroupSubset& set, const std::optional<PdsParams>& predicted,
                       const std::string& format, const json& extra = json::object()) {
  if (format == "csv") return cayley_adjacency_csv(set);
  if (format == "edgelist") return cayley_edge_list(set);
  json j = io::set_to_json(g, set, predicted);
  for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
  return io::dump(j);
}

struct FunctionOptions {
  std::string field = "3^2";
  std::string kind = "quadratic";
  std::string file;
};

void add_function_options(CLI::App* cmd, FunctionOptions& o) {
  cmd->add_option("--field", o.field, "Field F_{p^n} as p^n");
  cmd->add_option("--function", o.kind, "quadratic: Tr(x^2), quadratic-nonsquare: Tr(g x^2), zero")
      ->check(CLI::IsMember({"quadratic", "quadratic-nonsquare", "zero"}));
  cmd->add_option("--function-file", o.file, "Function JSON {field, values} in (0, g^0, g^1, ...) order");
}

PAryFunction load_function(const FunctionOptions& o) {
  if (!o.file.empty()) return io::function_from_json(io::read_json_file(o.file));
  const FiniteField F = parse_field(o.field);
  if (o.kind == "zero") return PAryFunction(F, std::vector<std::uint32_t>(F.q(), 0));
  return PAryFunction::trace_quadratic(F, o.kind == "quadratic" ? F.one() : F.generator());
}

struct CycOptions {
  std::uint32_t p = 2, e = 3, gamma = 1, m = 1;
  std::string form = "hyperbolic";
};

void add_cyc_options(CLI::App* cmd, CycOptions& o) {
  cmd->add_option("--p", o.p, "Characteristic")->required();
  cmd->add_option("--e", o.e, "Number of cyclotomic classes")->required();
  cmd->add_option("--gamma", o.gamma, "q = p^{2 j gamma}");
  cmd->add_option("--m", o.m, "V = F_q^{2m}")->required();
  cmd->add_option("--form", o.form, "hyperbolic or elliptic");
}

int run_verify(const std::string& set_path, const std::string& out_path) {
  const io::SetFile sf = io::set_from_json(io::read_json_file(set_path));
  const BruteForceResult bf = verify_pds_bruteforce(sf.set);
  const CharacterResult ch = verify_pds_characters(sf.set);
  const bool agree = bf.ok == ch.ok && (!bf.ok || bf.params.same_parameters(ch.params));
  const bool pass = bf.ok && ch.ok && agree;
  json cert{{"pass", pass}, {"agree", agree}, {"degenerate", bf.degenerate || ch.degenerate}};
  if (pass) {
    cert["params"] = io::params_to_json(bf.params);
    cert["latin"] = cert["params"]["latin"];
    cert["eigenvalues"] = ch.eigenvalues;
  }
  if (sf.predicted) {
    cert["predicted"] = io::params_to_json(*sf.predicted);
    cert["matches_prediction"] = pass && bf.params.same_parameters(*sf.predicted);
  }
  cert["bruteforce"] = io::bruteforce_to_json(bf);
  cert["characters"] = io::characters_to_json(ch);
  emit(out_path, io::dump(cert));
  return pass ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial difference sets from cyclotomy, quadratic forms and bent functions"};
  app.require_subcommand(1);
  std::string kernel = "auto";
  app.add_option("--kernel", kernel, "Kernel backend: auto, scalar or avx2")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  std::string out_path;
  std::string format = "json";

  // construct
  auto* construct = app.add_subcommand("construct", "Build a set or partition");
  construct->require_subcommand(1);

  CycOptions cyc;
  std::uint32_t class_index = 0;
  auto* c_cyc = construct->add_subcommand("cyclotomic", "D_{C_i} = {x : Q(x) in C_i}");
  add_cyc_options(c_cyc, cyc);
  c_cyc->add_option("--class", class_index, "Class index i in [0, e)");

  std::string field_str;
  std::uint32_t m = 1;
  std::string form_str = "hyperbolic";
  auto* c_ap = construct->add_subcommand("affine-polar", "{x : Q(x) a nonzero square}, q odd");
  auto* c_rt2 = construct->add_subcommand("rt2", "{x != 0 : Q(x) = 0}");
  for (auto* cmd : {c_ap, c_rt2}) {
    cmd->add_option("--q,--field", field_str, "Field as p^k or q")->required();
    cmd->add_option("--m", m, "V = F_q^{2m}")->required();
    cmd->add_option("--form", form_str, "hyperbolic or elliptic");
  }

  FunctionOptions fopt;
  auto* c_bent = construct->add_subcommand("bent", "D_0 \\ {0}, D_R, D_N of a weakly regular bent function");
  add_function_options(c_bent, fopt);

  std::string set_path;
  std::uint64_t seed = 0;
  std::string perturb_kind = "swap";
  auto* c_perturb = construct->add_subcommand("perturb", "Seeded symmetric perturbation of a set file");
  c_perturb->add_option("--set", set_path, "Set JSON")->required();
  c_perturb->add_option("--seed", seed, "RNG seed");
  c_perturb->add_option("--kind", perturb_kind, "swap or random")->check(CLI::IsMember({"swap", "random"}));

  std::uint32_t parts = 3;
  std::uint32_t dim = 1;
  auto* c_rand = construct->add_subcommand("random-partition", "Seeded random symmetric partition of F_q^n \\ {0}");
  c_rand->add_option("--field", field_str, "Field as p^k or q")->required();
  c_rand->add_option("--n", dim, "Vector dimension");
  c_rand->add_option("--parts", parts, "Number of classes");
  c_rand->add_option("--seed", seed, "RNG seed");

  for (auto* cmd : {c_cyc, c_ap, c_rt2, c_bent, c_perturb, c_rand}) {
    cmd->add_option("-o,--output", out_path, "Output path (stdout if omitted; a directory for bent)");
    if (cmd != c_bent && cmd != c_rand)
      cmd->add_option("--format", format, "json, csv or edgelist")->check(CLI::IsMember({"json", "csv", "edgelist"}));
  }

  // verify
  auto* verify = app.add_subcommand("verify", "Certify a set by brute force and by characters");
  verify->add_option("--set", set_path, "Set JSON")->required();
  verify->add_option("-o,--output", out_path, "Certificate path");

  // scheme
  auto* scheme = app.add_subcommand("scheme", "Check a translation scheme");
  std::string partition_path;
  bool amorphic = false;
  std::string emit_partition;
  scheme->add_option("--partition", partition_path, "Partition JSON");
  scheme->add_flag("--amorphic", amorphic, "Also enumerate and certify every fusion");
  scheme->add_option("-o,--output", out_path, "Certificate path");
  scheme->add_option("--emit-partition", emit_partition, "Also write the partition JSON");
  scheme->require_subcommand(0, 1);
  CycOptions scyc;
  auto* s_cyc = scheme->add_subcommand("cyclotomic", "{D_0 \\ {0}, D_{C_0}, ..., D_{C_{e-1}}}");
  add_cyc_options(s_cyc, scyc);
  FunctionOptions sfopt;
  auto* s_bent = scheme->add_subcommand("bent", "{D_0 \\ {0}, D_R, D_N}");
  add_function_options(s_bent, sfopt);
  s_cyc->fallthrough();
  s_bent->fallthrough();

  // walsh
  auto* walsh = app.add_subcommand("walsh", "Walsh spectrum and weak-regularity classification");
  FunctionOptions wopt;
  add_function_options(walsh, wopt);
  walsh->add_option("-o,--output", out_path, "Spectrum path");

  // periods
  auto* periods = app.add_subcommand("periods", "Cyclotomic periods: closed form against direct sums");
  std::uint32_t pp = 2, pe = 3, pg = 1;
  periods->add_option("--p", pp, "Characteristic")->required();
  periods->add_option("--e", pe, "Number of classes")->required();
  periods->add_option("--gamma", pg, "q = p^{2 j gamma}");
  periods->add_option("-o,--output", out_path, "Report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (kernel == "scalar") kernels::set_backend(kernels::Backend::Scalar);
    else if (kernel == "avx2") kernels::set_backend(kernels::Backend::Avx2);
    else kernels::set_backend(kernels::best_backend());

    if (*c_cyc) {
      const FormKind kind = parse_form(cyc.form);
      const CyclotomicSetup setup(cyc.p, cyc.e, cyc.gamma, cyc.m, kind);
      const Construction c = construct_cyclotomic_pds(cyc.p, cyc.e, cyc.gamma, cyc.m, kind, class_index);
      const json extra{{"construction",
                        {{"type", "cyclotomic"}, {"p", cyc.p}, {"e", cyc.e}, {"gamma", cyc.gamma}, {"j", setup.j()},
                         {"m", cyc.m}, {"form", cyc.form}, {"class", class_index}, {"epsilon", setup.epsilon()}}}};
      emit(out_path, render_set({setup.field(), 2 * cyc.m}, c.set, c.predicted, format, extra));
      return kExitOk;
    }
    if (*c_ap || *c_rt2) {
      const FiniteField F = parse_field(field_str);
      const FormKind kind = parse_form(form_str);
      const Construction c = *c_ap ? construct_affine_polar(F, m, kind)
                                   : construct_rt2(QuadraticForm::standard(F, m, kind));
      const json extra{{"construction", {{"type", *c_ap ? "affine-polar" : "rt2"}, {"m", m}, {"form", form_str}}}};
      emit(out_path, render_set({F, 2 * m}, c.set, c.predicted, format, extra));
      return kExitOk;
    }
    if (*c_bent) {
      const PAryFunction f = load_function(fopt);
      const BentPds b = construct_bent_pds(f);
      const io::GroupDescriptor g{f.field(), 1};
      const json cert = io::bent_certificate_to_json(b.certificate);
      if (out_path.empty() || out_path == "-") {
        emit("", io::dump(json{{"d0_minus", io::set_to_json(g, b.d0_minus, std::nullopt)},
                               {"d_r", io::set_to_json(g, b.d_r, std::nullopt)},
                               {"d_n", io::set_to_json(g, b.d_n, std::nullopt)},
                               {"certificate", cert}}));
      } else {
        const std::string dir = out_path.back() == '/' ? out_path : out_path + "/";
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec) throw IoError("cannot create directory " + dir);
        io::write_file_atomic(dir + "d0_minus.json", io::dump(io::set_to_json(g, b.d0_minus, std::nullopt)));
        io::write_file_atomic(dir + "d_r.json", io::dump(io::set_to_json(g, b.d_r, std::nullopt)));
        io::write_file_atomic(dir + "d_n.json", io::dump(io::set_to_json(g, b.d_n, std::nullopt)));
        io::write_file_atomic(dir + "certificate.json", io::dump(cert));
      }
      return b.certificate.all_pass() ? kExitOk : kExitFailed;
    }
    if (*c_perturb) {
      const io::SetFile sf = io::set_from_json(io::read_json_file(set_path));
      const GroupSubset d = perturb_kind == "swap" ? swap_perturbation(sf.set, seed) : random_perturbation(sf.set, seed);
      emit(out_path, render_set(sf.group, d, std::nullopt, format));
      return kExitOk;
    }
    if (*c_rand) {
      const io::GroupDescriptor g{parse_field(field_str), dim};
      const TranslationPartition part = random_symmetric_partition(g.group(), parts, seed);
      emit(out_path, io::dump(io::partition_to_json(g, part)));
      return kExitOk;
    }
    if (*verify) return run_verify(set_path, out_path);
    if (*scheme) {
      std::optional<io::GroupDescriptor> g;
      std::optional<TranslationPartition> part;
      if (*s_cyc) {
        const FormKind kind = parse_form(scyc.form);
        const CyclotomicSetup setup(scyc.p, scyc.e, scyc.gamma, scyc.m, kind);
        g = io::GroupDescriptor{setup.field(), 2 * scyc.m};
        part = build_cyclotomic_scheme(scyc.p, scyc.e, scyc.gamma, scyc.m, kind);
      } else if (*s_bent) {
        const PAryFunction f = load_function(sfopt);
        g = io::GroupDescriptor{f.field(), 1};
        part = build_bent_scheme(f);
      } else if (!partition_path.empty()) {
        io::PartitionFile pf = io::partition_from_json(io::read_json_file(partition_path));
        g = pf.group;
        part = std::move(pf.partition);
      } else {
        throw InvalidArgument("scheme needs --partition FILE or a cyclotomic/bent subcommand");
      }
      if (!emit_partition.empty()) io::write_file_atomic(emit_partition, io::dump(io::partition_to_json(*g, *part)));
      const SchemeCheck check = amorphic ? certify_amorphic(*part) : check_scheme(*part);
      emit(out_path, io::dump(io::scheme_to_json(check)));
      const bool pass = check.ok && (!amorphic || check.certificate.amorphic);
      return pass ? kExitOk : kExitFailed;
    }
    if (*walsh) {
      const PAryFunction f = load_function(wopt);
      emit(out_path, io::dump(io::spectrum_to_json(f, walsh_spectrum(f))));
      return kExitOk;
    }
    if (*periods) {
      const UniformPeriods closed = uniform_periods_closed_form(pp, pe, pg);
      const FiniteField F(pp, 2 * closed.j * pg);
      const auto direct = cyclotomic_periods_direct(CyclotomicClasses(F, pe));
      const json report = io::periods_to_json(closed, direct);
      emit(out_path, io::dump(report));
      return report["match"].get<bool>() ? kExitOk : kExitFailed;
    }
  } catch (const InvalidArgument& e) {
    std::cerr << "pdslab: invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const IoError& e) {
    std::cerr << "pdslab: I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const InvariantViolation& e) {
    std::cerr << "pdslab: internal invariant violated: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitInvalid;
}
