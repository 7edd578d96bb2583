// zprmod command-line front end. Talks to the library exclusively through
// the public C API so it doubles as a consumer test of that surface.
//
// Module-producing commands print a re-parseable module file followed by a
// '#'-commented summary, so outputs pipe straight back into other commands.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zprmod.h"

namespace {

using nlohmann::json;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitGuard = 4;
constexpr int kExitInternal = 5;

struct Options {
  bool json_output = false;
  std::size_t max_states = 65536;
};

[[noreturn]] void die(zpr_status status) {
  std::cerr << "zprmod: " << zpr_status_name(status);
  const char* detail = zpr_last_error_message();
  if (detail && *detail) std::cerr << ": " << detail;
  std::cerr << "\n";
  switch (status) {
    case ZPR_ERR_PARSE:
    case ZPR_ERR_NOT_PRIME:
    case ZPR_ERR_BAD_EXPONENT:
    case ZPR_ERR_OVERFLOW:
    case ZPR_ERR_BAD_ARGUMENT:
      std::exit(kExitBadInput);
    case ZPR_ERR_DIMENSION_MISMATCH:
    case ZPR_ERR_NOT_A_SUBMODULE:
      std::exit(kExitPrecondition);
    case ZPR_ERR_TOO_LARGE:
      std::exit(kExitGuard);
    default:
      std::exit(kExitInternal);
  }
}

void check(zpr_status status) {
  if (status != ZPR_OK) die(status);
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "zprmod: cannot open " << path << "\n";
    std::exit(kExitBadInput);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

using ModulePtr = std::unique_ptr<zpr_module, decltype(&zpr_module_free)>;
using PBasisPtr = std::unique_ptr<zpr_pbasis, decltype(&zpr_pbasis_free)>;
using VecSetPtr = std::unique_ptr<zpr_vecset, decltype(&zpr_vecset_free)>;

ModulePtr load_module(const std::string& path) {
  std::string text = read_input(path);
  zpr_module* m = nullptr;
  check(zpr_module_parse(text.c_str(), &m));
  return {m, &zpr_module_free};
}

struct ModuleInfo {
  long long p = 0, r = 0;
  std::size_t n = 0, k = 0;
  long long pdim = 0;
  std::vector<long long> block_counts;
  std::vector<long long> permutation;
  std::vector<std::vector<long long>> rows;      // original column order
  std::vector<std::vector<long long>> rows_std;  // permuted columns
  bool cardinality_fits = false;
  unsigned long long cardinality = 0;
};

ModuleInfo inspect(const zpr_module* m) {
  ModuleInfo info;
  info.p = zpr_module_prime(m);
  info.r = zpr_module_exponent(m);
  info.n = zpr_module_length(m);
  info.k = zpr_module_row_count(m);
  info.pdim = zpr_module_pdim(m);
  info.block_counts.resize(static_cast<std::size_t>(info.r));
  check(zpr_module_block_counts(m, info.block_counts.data(),
                                info.block_counts.size()));
  info.permutation.resize(info.n);
  check(zpr_module_permutation(m, info.permutation.data(), info.n));

  std::vector<long long> flat(info.k * info.n);
  check(zpr_module_generator_rows(m, flat.data(), flat.size()));
  for (std::size_t i = 0; i < info.k; ++i)
    info.rows.emplace_back(flat.begin() + static_cast<long>(i * info.n),
                           flat.begin() + static_cast<long>((i + 1) * info.n));
  check(zpr_module_standard_rows(m, flat.data(), flat.size()));
  for (std::size_t i = 0; i < info.k; ++i)
    info.rows_std.emplace_back(flat.begin() + static_cast<long>(i * info.n),
                               flat.begin() + static_cast<long>((i + 1) * info.n));

  unsigned long long card = 0;
  if (zpr_module_cardinality(m, &card) == ZPR_OK) {
    info.cardinality_fits = true;
    info.cardinality = card;
  }
  return info;
}

std::string join(const std::vector<long long>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string cardinality_text(const ModuleInfo& info) {
  if (info.cardinality_fits) return std::to_string(info.cardinality);
  return std::to_string(info.p) + "^" + std::to_string(info.pdim);
}

void print_module_file(const ModuleInfo& info) {
  std::cout << info.p << ' ' << info.r << ' ' << info.n << '\n';
  for (const auto& row : info.rows) std::cout << join(row) << '\n';
}

void print_parameter_summary(const ModuleInfo& info) {
  std::cout << "# k: " << join(info.block_counts) << '\n';
  long long k_total = 0;
  for (long long x : info.block_counts) k_total += x;
  std::cout << "# k(M): " << k_total << '\n';
  std::cout << "# |M|: " << cardinality_text(info) << '\n';
  std::cout << "# p-dim: " << info.pdim << '\n';
}

json module_json(const ModuleInfo& info) {
  json j;
  j["p"] = info.p;
  j["r"] = info.r;
  j["n"] = info.n;
  j["generators"] = info.rows;
  j["k"] = info.block_counts;
  long long k_total = 0;
  for (long long x : info.block_counts) k_total += x;
  j["k_total"] = k_total;
  if (info.cardinality_fits)
    j["cardinality"] = info.cardinality;
  else
    j["cardinality"] = nullptr;
  j["p_dim"] = info.pdim;
  return j;
}

void emit_json(const json& j) { std::cout << j.dump(2) << '\n'; }

// module file + labelled summary, shared by dual/socle/sum/intersect
void emit_module_result(const Options& opt, const char* command,
                        const zpr_module* m, const char* label) {
  ModuleInfo info = inspect(m);
  if (opt.json_output) {
    json j = module_json(info);
    j["command"] = command;
    emit_json(j);
    return;
  }
  print_module_file(info);
  std::cout << "# " << label << '\n';
  print_parameter_summary(info);
}

std::vector<std::vector<long long>> basis_rows(const zpr_pbasis* basis) {
  const std::size_t dim = zpr_pbasis_dim(basis);
  const std::size_t n = zpr_pbasis_length(basis);
  std::vector<long long> flat(dim * n);
  check(zpr_pbasis_vectors(basis, flat.data(), flat.size()));
  std::vector<std::vector<long long>> rows;
  for (std::size_t i = 0; i < dim; ++i)
    rows.emplace_back(flat.begin() + static_cast<long>(i * n),
                      flat.begin() + static_cast<long>((i + 1) * n));
  return rows;
}

std::vector<long long> parse_vector_tokens(const std::string& literal,
                                           std::size_t n) {
  std::istringstream in(literal);
  std::vector<long long> out;
  long long value = 0;
  while (in >> value) out.push_back(value);
  if (!in.eof() || out.size() != n) {
    std::cerr << "zprmod: vector literal must be " << n
              << " space-separated integers\n";
    std::exit(kExitBadInput);
  }
  return out;
}

int cmd_standard_form(const Options& opt, const std::string& file) {
  ModulePtr m = load_module(file);
  ModuleInfo info = inspect(m.get());
  if (opt.json_output) {
    json j = module_json(info);
    j["command"] = "standard-form";
    j["standard_form"] = info.rows_std;
    j["permutation"] = info.permutation;
    emit_json(j);
    return 0;
  }
  print_module_file(info);
  std::cout << "# standard form (columns permuted):\n";
  for (const auto& row : info.rows_std) std::cout << "#   " << join(row) << '\n';
  std::cout << "# permutation: " << join(info.permutation) << '\n';
  print_parameter_summary(info);
  return 0;
}

int cmd_pbasis(const Options& opt, const std::string& file) {
  ModulePtr m = load_module(file);
  zpr_pbasis* basis = nullptr;
  check(zpr_pbasis_from_module(m.get(), &basis));
  PBasisPtr holder(basis, &zpr_pbasis_free);
  auto rows = basis_rows(basis);
  ModuleInfo info = inspect(m.get());
  if (opt.json_output) {
    json j;
    j["command"] = "pbasis";
    j["p"] = info.p;
    j["r"] = info.r;
    j["n"] = info.n;
    j["vectors"] = rows;
    j["p_dim"] = rows.size();
    emit_json(j);
    return 0;
  }
  std::cout << info.p << ' ' << info.r << ' ' << info.n << '\n';
  for (const auto& row : rows) std::cout << join(row) << '\n';
  std::cout << "# p-basis vectors in sequence order\n";
  std::cout << "# p-dim: " << rows.size() << '\n';
  return 0;
}

int cmd_member(const Options& opt, const std::string& file,
               const std::string& literal) {
  ModulePtr m = load_module(file);
  auto coords = parse_vector_tokens(literal, zpr_module_length(m.get()));
  zpr_pbasis* basis = nullptr;
  check(zpr_pbasis_from_module(m.get(), &basis));
  PBasisPtr holder(basis, &zpr_pbasis_free);
  std::vector<long long> digits(zpr_pbasis_dim(basis));
  int member = 0;
  check(zpr_pbasis_coordinates(basis, coords.data(), &member, digits.data()));
  if (opt.json_output) {
    json j;
    j["command"] = "member";
    j["member"] = member != 0;
    if (member)
      j["digits"] = digits;
    else
      j["digits"] = nullptr;
    emit_json(j);
    return 0;
  }
  if (member)
    std::cout << "digits: " << join(digits) << '\n';
  else
    std::cout << "not a member\n";
  return 0;
}

int cmd_extend(const Options& opt, const std::string& sub_file,
               const std::string& module_file) {
  ModulePtr sub_module = load_module(sub_file);
  ModulePtr target = load_module(module_file);
  zpr_pbasis* sub_basis = nullptr;
  check(zpr_pbasis_from_module(sub_module.get(), &sub_basis));
  PBasisPtr sub_holder(sub_basis, &zpr_pbasis_free);
  zpr_pbasis* extended = nullptr;
  check(zpr_pbasis_extend(sub_basis, target.get(), &extended));
  PBasisPtr ext_holder(extended, &zpr_pbasis_free);

  auto rows = basis_rows(extended);
  const std::size_t added = rows.size() - zpr_pbasis_dim(sub_basis);
  ModuleInfo info = inspect(target.get());
  if (opt.json_output) {
    json j;
    j["command"] = "extend";
    j["p"] = info.p;
    j["r"] = info.r;
    j["n"] = info.n;
    j["vectors"] = rows;
    j["p_dim"] = rows.size();
    j["new_vectors"] = added;
    emit_json(j);
    return 0;
  }
  std::cout << info.p << ' ' << info.r << ' ' << info.n << '\n';
  for (const auto& row : rows) std::cout << join(row) << '\n';
  std::cout << "# extended p-basis; " << added << " new vector(s) prepended\n";
  std::cout << "# p-dim: " << rows.size() << '\n';
  return 0;
}

int cmd_verify(const Options& opt, const std::string& file) {
  ModulePtr m = load_module(file);
  zpr_verify_report report{};
  check(zpr_module_verify_identities(m.get(), &report));
  zpr_module* d = nullptr;
  check(zpr_module_dual(m.get(), &d));
  ModulePtr dual_holder(d, &zpr_module_free);
  ModuleInfo info = inspect(m.get());
  ModuleInfo dual_info = inspect(dual_holder.get());

  long long k_total = 0, kd_total = 0;
  for (long long x : info.block_counts) k_total += x;
  for (long long x : dual_info.block_counts) kd_total += x;

  if (opt.json_output) {
    json j;
    j["command"] = "verify";
    j["p_dim"] = report.pdim;
    j["p_dim_dual"] = report.pdim_dual;
    j["ambient_p_dim"] = report.ambient_pdim;
    j["k"] = info.block_counts;
    j["k_dual"] = dual_info.block_counts;
    j["dim_identity_ok"] = report.dim_identity_ok != 0;
    j["cardinality_identity_ok"] = report.cardinality_identity_ok != 0;
    j["dual_parameters_ok"] = report.dual_parameters_ok != 0;
    j["all_ok"] = report.all_ok != 0;
    emit_json(j);
    return report.all_ok ? 0 : kExitVerifyFailed;
  }

  auto verdict = [](int ok) { return ok ? "ok" : "FAIL"; };
  std::cout << "p-dim(M) + p-dim(M^perp): " << report.pdim << " + "
            << report.pdim_dual << " = " << report.pdim + report.pdim_dual
            << "; expected r*n = " << report.ambient_pdim << ": "
            << verdict(report.dim_identity_ok) << '\n';
  std::cout << "|M| * |M^perp|: " << cardinality_text(info) << " * "
            << cardinality_text(dual_info) << "; expected p^(r*n): "
            << verdict(report.cardinality_identity_ok) << '\n';
  std::cout << "k(M^perp) = n - k_0(M): " << kd_total << " = "
            << static_cast<long long>(info.n) - info.block_counts[0] << ": "
            << verdict(report.dual_parameters_ok) << '\n';
  std::cout << "k_0(M^perp) = n - k(M): " << dual_info.block_counts[0] << " = "
            << static_cast<long long>(info.n) - k_total << ": "
            << verdict(report.dual_parameters_ok) << '\n';
  std::cout << "k_i(M^perp) = k_(r-i)(M), i = 1..r-1: "
            << verdict(report.dual_parameters_ok) << '\n';
  if (report.all_ok) {
    std::cout << "all identities hold\n";
    return 0;
  }
  std::cout << "IDENTITY FAILURE\n";
  return kExitVerifyFailed;
}

int cmd_enumerate(const Options& opt, const std::string& file) {
  ModulePtr m = load_module(file);
  zpr_vecset* set = nullptr;
  check(zpr_module_enumerate(m.get(), opt.max_states, &set));
  VecSetPtr holder(set, &zpr_vecset_free);
  const std::size_t n = zpr_vecset_length(set);
  const std::size_t size = zpr_vecset_size(set);
  std::vector<long long> row(n);
  ModuleInfo info = inspect(m.get());
  if (opt.json_output) {
    json j;
    j["command"] = "enumerate";
    j["p"] = info.p;
    j["r"] = info.r;
    j["n"] = info.n;
    json elements = json::array();
    for (std::size_t i = 0; i < size; ++i) {
      check(zpr_vecset_row(set, i, row.data()));
      elements.push_back(row);
    }
    j["elements"] = elements;
    j["count"] = size;
    emit_json(j);
    return 0;
  }
  std::cout << info.p << ' ' << info.r << ' ' << info.n << '\n';
  for (std::size_t i = 0; i < size; ++i) {
    check(zpr_vecset_row(set, i, row.data()));
    std::cout << join(row) << '\n';
  }
  std::cout << "# " << size << " element(s)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact linear algebra for submodules of Z_{p^r}^n"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.json_output, "emit one JSON document instead of text");
  app.add_option("--max-states", opt.max_states,
                 "state guard for enumeration (default 65536)");

  std::string file_a, file_b, vector_literal;

  auto* standard_form = app.add_subcommand(
      "standard-form", "canonical standard form, parameters and permutation");
  standard_form->add_option("file", file_a, "module file ('-' for stdin)")->required();

  auto* pbasis = app.add_subcommand("pbasis", "ordered p-basis of the module");
  pbasis->add_option("file", file_a, "module file ('-' for stdin)")->required();

  auto* dual = app.add_subcommand("dual", "dual module under the bilinear form");
  dual->add_option("file", file_a, "module file ('-' for stdin)")->required();

  auto* socle = app.add_subcommand("socle", "elements annihilated by p");
  socle->add_option("file", file_a, "module file ('-' for stdin)")->required();

  auto* member = app.add_subcommand(
      "member", "digit coordinates of a vector over the module's p-basis");
  member->add_option("file", file_a, "module file ('-' for stdin)")->required();
  member->add_option("vector", vector_literal, "vector literal, e.g. \"4 4 6\"")
      ->required();

  auto* sum = app.add_subcommand("sum", "sum of two modules");
  sum->add_option("file_a", file_a, "first module file")->required();
  sum->add_option("file_b", file_b, "second module file")->required();

  auto* intersect = app.add_subcommand("intersect", "intersection of two modules");
  intersect->add_option("file_a", file_a, "first module file")->required();
  intersect->add_option("file_b", file_b, "second module file")->required();

  auto* extend = app.add_subcommand(
      "extend", "extend the first module's p-basis to one of the second");
  extend->add_option("file_sub", file_a, "submodule file")->required();
  extend->add_option("file_m", file_b, "target module file")->required();

  auto* verify = app.add_subcommand("verify", "check the duality identities");
  verify->add_option("file", file_a, "module file ('-' for stdin)")->required();

  auto* enumerate = app.add_subcommand("enumerate", "list every element");
  enumerate->add_option("file", file_a, "module file ('-' for stdin)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitBadInput;
  }

  if (app.got_subcommand(standard_form)) return cmd_standard_form(opt, file_a);
  if (app.got_subcommand(pbasis)) return cmd_pbasis(opt, file_a);
  if (app.got_subcommand(member)) return cmd_member(opt, file_a, vector_literal);
  if (app.got_subcommand(extend)) return cmd_extend(opt, file_a, file_b);
  if (app.got_subcommand(verify)) return cmd_verify(opt, file_a);
  if (app.got_subcommand(enumerate)) return cmd_enumerate(opt, file_a);

  if (app.got_subcommand(dual)) {
    ModulePtr m = load_module(file_a);
    zpr_module* result = nullptr;
    check(zpr_module_dual(m.get(), &result));
    ModulePtr holder(result, &zpr_module_free);
    emit_module_result(opt, "dual", result, "dual module");
    return 0;
  }
  if (app.got_subcommand(socle)) {
    ModulePtr m = load_module(file_a);
    zpr_module* result = nullptr;
    check(zpr_module_socle(m.get(), &result));
    ModulePtr holder(result, &zpr_module_free);
    emit_module_result(opt, "socle", result, "socle");
    return 0;
  }
  if (app.got_subcommand(sum)) {
    ModulePtr a = load_module(file_a);
    ModulePtr b = load_module(file_b);
    zpr_module* result = nullptr;
    check(zpr_module_sum(a.get(), b.get(), &result));
    ModulePtr holder(result, &zpr_module_free);
    emit_module_result(opt, "sum", result, "sum of modules");
    return 0;
  }
  if (app.got_subcommand(intersect)) {
    ModulePtr a = load_module(file_a);
    ModulePtr b = load_module(file_b);
    zpr_module* result = nullptr;
    check(zpr_module_intersect(a.get(), b.get(), &result));
    ModulePtr holder(result, &zpr_module_free);
    emit_module_result(opt, "intersect", result, "intersection of modules");
    return 0;
  }
  return kExitBadInput;
}
