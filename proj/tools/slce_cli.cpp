// Copyright 2026 The SLCE Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end over the C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "slce/slce.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitMismatch = 3;
constexpr uint64_t kDefaultCap = 65536;

struct FieldDeleter {
  void operator()(slce_field* f) const { slce_field_destroy(f); }
};
struct SequenceDeleter {
  void operator()(slce_sequence* s) const { slce_sequence_destroy(s); }
};
struct StringDeleter {
  void operator()(char* s) const { slce_string_free(s); }
};
using FieldPtr = std::unique_ptr<slce_field, FieldDeleter>;
using SequencePtr = std::unique_ptr<slce_sequence, SequenceDeleter>;
using OwnedString = std::unique_ptr<char, StringDeleter>;

// Thrown after the error message is printed; carries the exit code.
struct ExitRequest {
  int code;
};

void Check(slce_status status) {
  if (status == SLCE_OK) return;
  std::cerr << "error: " << slce_last_error() << " (" << slce_status_string(status) << ")\n";
  throw ExitRequest{kExitBadInput};
}

void Emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    throw ExitRequest{kExitBadInput};
  }
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

struct FieldArgs {
  uint32_t p = 0;
  uint32_t m = 1;
};

void AddFieldOptions(CLI::App* cmd, FieldArgs& args) {
  cmd->add_option("--p", args.p, "odd prime characteristic")->required();
  cmd->add_option("--m", args.m, "extension degree")->capture_default_str();
}

struct SweepArgs {
  uint64_t q_max = 128;
  std::optional<uint64_t> q_max_hard;
  uint32_t p_filter = 0;
  std::string theorems = "all";
  std::string format = "json";
  std::string output;
  unsigned jobs = 1;
};

void AddSweepOptions(CLI::App* cmd, SweepArgs& args, bool with_theorems) {
  cmd->add_option("--qmax", args.q_max, "largest field size")->capture_default_str();
  cmd->add_option("--qmax-hard", args.q_max_hard, "raise the global field-size cap");
  cmd->add_option("--p", args.p_filter, "restrict to one characteristic");
  if (with_theorems) {
    cmd->add_option("--theorems", args.theorems, "comma list of checks")->capture_default_str();
  }
  cmd->add_option("--format", args.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--output", args.output, "write the report to a file");
  cmd->add_option("--jobs", args.jobs, "worker threads")->capture_default_str();
}

slce_sweep_config ToConfig(const SweepArgs& args) {
  slce_sweep_config config{};
  config.q_max = args.q_max;
  config.p_filter = args.p_filter;
  config.theorems = args.theorems.c_str();
  config.jobs = args.jobs;
  config.field_cap = kDefaultCap;
  if (args.q_max_hard) {
    std::cerr << "warning: field-size cap raised to " << *args.q_max_hard
              << "; tables and sums grow linearly in q\n";
    config.field_cap = *args.q_max_hard;
  }
  return config;
}

FieldPtr MakeField(const FieldArgs& args, uint64_t cap = kDefaultCap) {
  slce_field* raw = nullptr;
  Check(slce_field_create(args.p, args.m, cap, &raw));
  return FieldPtr(raw);
}

int RunGenerate(const FieldArgs& field_args, uint32_t d, const std::string& format,
                const std::string& output) {
  FieldPtr field = MakeField(field_args);
  slce_sequence* raw = nullptr;
  Check(slce_sequence_generate(field.get(), d, &raw));
  SequencePtr seq(raw);
  char* text = nullptr;
  if (format == "json") {
    Check(slce_sequence_json(seq.get(), &text));
  } else if (format == "bits") {
    Check(slce_sequence_bits(seq.get(), &text));
  } else {
    // CSV: index,term
    const uint64_t T = slce_sequence_period(seq.get());
    std::vector<uint32_t> terms(T);
    Check(slce_sequence_terms(seq.get(), terms.data(), terms.size()));
    std::string csv = "n,s\n";
    for (uint64_t n = 0; n < T; ++n) csv += std::to_string(n) + "," + std::to_string(terms[n]) + "\n";
    Emit(csv, output);
    return kExitOk;
  }
  OwnedString owned(text);
  Emit(owned.get(), output);
  return kExitOk;
}

int RunComplexity(const FieldArgs& field_args, const std::string& output) {
  FieldPtr field = MakeField(field_args);
  slce_sequence* raw = nullptr;
  Check(slce_sequence_generate(field.get(), 2, &raw));
  SequencePtr seq(raw);
  char* text = nullptr;
  int consistent = 0;
  Check(slce_complexity_json(seq.get(), &text, &consistent));
  OwnedString owned(text);
  Emit(owned.get(), output);
  if (!consistent) {
    std::cerr << "error: linear complexity routes disagree\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int RunVerify(const SweepArgs& args) {
  const slce_sweep_config config = ToConfig(args);
  char* text = nullptr;
  slce_verify_summary summary{};
  Check(slce_verify(&config, args.format == "csv" ? SLCE_FORMAT_CSV : SLCE_FORMAT_JSON, &text,
                    &summary));
  OwnedString owned(text);
  Emit(owned.get(), args.output);
  std::cerr << "{\"contexts\":" << summary.contexts << ",\"checks\":" << summary.checks
            << ",\"mismatches\":" << summary.mismatches << "}\n";
  return summary.mismatches == 0 ? kExitOk : kExitMismatch;
}

int RunSweep(const SweepArgs& args) {
  const slce_sweep_config config = ToConfig(args);
  char* text = nullptr;
  uint64_t inconsistent = 0;
  Check(slce_complexity_sweep(&config, args.format == "csv" ? SLCE_FORMAT_CSV : SLCE_FORMAT_JSON,
                              &text, &inconsistent));
  OwnedString owned(text);
  Emit(owned.get(), args.output);
  if (inconsistent) {
    std::cerr << "error: " << inconsistent << " field(s) with inconsistent complexity\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int RunGauss(const FieldArgs& field_args, std::optional<uint64_t> index, bool quadratic,
             std::optional<uint64_t> semiprimitive) {
  const int modes = (index ? 1 : 0) + (quadratic ? 1 : 0) + (semiprimitive ? 1 : 0);
  if (modes != 1) {
    std::cerr << "error: choose exactly one of --index, --quadratic, --semiprimitive\n";
    return kExitBadInput;
  }
  FieldPtr field = MakeField(field_args);
  slce_field_info info{};
  Check(slce_field_info_get(field.get(), &info));
  char* text = nullptr;
  int agree = 1;
  if (index) {
    Check(slce_gauss_index_json(field.get(), *index, info.q - 1, &text));
  } else if (quadratic) {
    Check(slce_gauss_quadratic_json(field.get(), &text, &agree));
  } else {
    Check(slce_gauss_semiprimitive_json(field.get(), *semiprimitive, &text, &agree));
  }
  OwnedString owned(text);
  Emit(owned.get(), "");
  return agree ? kExitOk : kExitMismatch;
}

int RunJacobi(const FieldArgs& field_args, uint64_t a1, uint64_t a2) {
  FieldPtr field = MakeField(field_args);
  char* text = nullptr;
  Check(slce_jacobi_json(field.get(), a1, a2, &text));
  OwnedString owned(text);
  Emit(owned.get(), "");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binary SLCE sequences: generation, linear complexity and criteria checks"};
  app.require_subcommand(1);

  FieldArgs field_args;
  uint32_t d = 2;
  std::string format = "bits";
  std::string output;
  auto* generate = app.add_subcommand("generate", "emit one period of the sequence");
  AddFieldOptions(generate, field_args);
  generate->add_option("--d", d, "alphabet size")->capture_default_str();
  generate->add_option("--format", format, "bits, json or csv")
      ->check(CLI::IsMember({"bits", "json", "csv"}))
      ->capture_default_str();
  generate->add_option("--output", output, "write to a file");

  auto* complexity = app.add_subcommand("complexity", "linear complexity report");
  AddFieldOptions(complexity, field_args);
  complexity->add_option("--output", output, "write to a file");

  SweepArgs sweep_args;
  auto* verify = app.add_subcommand("verify", "criteria against direct evaluation");
  AddSweepOptions(verify, sweep_args, true);

  auto* sweep = app.add_subcommand("sweep", "linear complexity table over all fields");
  AddSweepOptions(sweep, sweep_args, false);

  std::optional<uint64_t> index;
  bool quadratic = false;
  std::optional<uint64_t> semiprimitive;
  auto* gauss = app.add_subcommand("gauss", "Gauss sums, numeric and closed form");
  AddFieldOptions(gauss, field_args);
  gauss->add_option("--index", index, "character eta_{a/(q-1)}");
  gauss->add_flag("--quadratic", quadratic, "quadratic character");
  gauss->add_option("--semiprimitive", semiprimitive, "character order N");

  uint64_t a1 = 0;
  uint64_t a2 = 0;
  auto* jacobi = app.add_subcommand("jacobi", "exact Jacobi sum");
  AddFieldOptions(jacobi, field_args);
  jacobi->add_option("--a1", a1, "first character index")->required();
  jacobi->add_option("--a2", a2, "second character index")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (*generate) return RunGenerate(field_args, d, format, output);
    if (*complexity) return RunComplexity(field_args, output);
    if (*verify) return RunVerify(sweep_args);
    if (*sweep) return RunSweep(sweep_args);
    if (*gauss) return RunGauss(field_args, index, quadratic, semiprimitive);
    if (*jacobi) return RunJacobi(field_args, a1, a2);
  } catch (const ExitRequest& request) {
    return request.code;
  }
  return kExitBadInput;
}
