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

#include "slce/slce.h"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include <json.hpp>

#include "slce/criteria/profile.hpp"
#include "slce/criteria/sweep.hpp"
#include "slce/cyclo/character.hpp"
#include "slce/cyclo/gauss.hpp"
#include "slce/error.hpp"
#include "slce/ff/ext_field.hpp"
#include "slce/polybin/linear_complexity.hpp"
#include "slce/seq/slce_sequence.hpp"

struct slce_field {
  std::shared_ptr<const slce::ff::ExtField> impl;
};

struct slce_sequence {
  std::shared_ptr<const slce::seq::SlceSequence> impl;
};

namespace {

using nlohmann::ordered_json;

constexpr double kRelTol = 1e-6;

thread_local std::string g_last_error;

slce_status Record(slce_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Wraps a body so that no exception crosses the C boundary.
template <typename Fn>
slce_status Guard(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return SLCE_OK;
  } catch (const slce::Error& e) {
    return Record(static_cast<slce_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Record(SLCE_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Record(SLCE_ERR_INTERNAL, e.what());
  }
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

void Require(const void* ptr, const char* what) {
  if (!ptr) slce::Fail(slce::ErrorCode::kBadArgument, std::string(what) + " is null");
}

ordered_json ComplexJson(std::complex<double> z) {
  return ordered_json{{"re", z.real()}, {"im", z.imag()}};
}

bool Close(std::complex<double> a, std::complex<double> b) {
  return std::abs(a - b) <= kRelTol * std::max(1.0, std::abs(b));
}

slce::criteria::SweepConfig ToConfig(const slce_sweep_config* config) {
  Require(config, "config");
  slce::criteria::SweepConfig out;
  out.q_max = config->q_max;
  if (config->p_filter != 0) out.p_filter = config->p_filter;
  out.checks = slce::criteria::ParseChecks(config->theorems ? config->theorems : "all");
  out.jobs = config->jobs == 0 ? 1 : config->jobs;
  if (config->field_cap != 0) out.field_cap = config->field_cap;
  return out;
}

ordered_json FieldHeader(const slce::ff::ExtField& f) {
  return ordered_json{{"p", f.p()}, {"m", f.m()}, {"q", f.q()}};
}

}  // namespace

extern "C" {

const char* slce_version(void) { return "1.0.0"; }

const char* slce_status_string(slce_status status) {
  switch (status) {
    case SLCE_OK: return "ok";
    case SLCE_ERR_NULL_POINTER: return "null pointer";
    case SLCE_ERR_INTERNAL: return "internal error";
    default:
      if (status >= SLCE_ERR_COMPOSITE_P && status <= SLCE_ERR_BAD_ARGUMENT) {
        return slce::ErrorCodeName(static_cast<slce::ErrorCode>(status));
      }
      return "unknown status";
  }
}

const char* slce_last_error(void) { return g_last_error.c_str(); }

void slce_string_free(char* str) { std::free(str); }

slce_status slce_field_create(uint32_t p, uint32_t m, uint64_t field_cap, slce_field** out) {
  if (!out) return Record(SLCE_ERR_NULL_POINTER, "out is null");
  *out = nullptr;
  return Guard([&] {
    auto field = slce::ff::ExtField::Build(p, m, field_cap ? field_cap : slce::ff::kDefaultFieldCap);
    *out = new slce_field{std::move(field)};
  });
}

void slce_field_destroy(slce_field* field) { delete field; }

slce_status slce_field_info_get(const slce_field* field, slce_field_info* out) {
  if (!field || !out) return Record(SLCE_ERR_NULL_POINTER, "argument is null");
  return Guard([&] {
    out->p = field->impl->p();
    out->m = field->impl->m();
    out->q = field->impl->q();
    out->alpha_code = field->impl->alpha().code;
  });
}

slce_status slce_field_dlog(const slce_field* field, uint32_t element_code, uint64_t* out) {
  if (!field || !out) return Record(SLCE_ERR_NULL_POINTER, "argument is null");
  return Guard([&] {
    if (element_code >= field->impl->q()) {
      slce::Fail(slce::ErrorCode::kBadArgument, "element code outside the field");
    }
    *out = field->impl->Dlog(slce::ff::FieldElement{element_code});
  });
}

slce_status slce_sequence_generate(const slce_field* field, uint32_t d, slce_sequence** out) {
  if (!field || !out) return Record(SLCE_ERR_NULL_POINTER, "argument is null");
  *out = nullptr;
  return Guard([&] {
    auto seq = std::make_shared<const slce::seq::SlceSequence>(
        slce::seq::SlceSequence::Generate(field->impl, d));
    *out = new slce_sequence{std::move(seq)};
  });
}

void slce_sequence_destroy(slce_sequence* seq) { delete seq; }

uint64_t slce_sequence_period(const slce_sequence* seq) {
  return seq ? seq->impl->period() : 0;
}

slce_status slce_sequence_terms(const slce_sequence* seq, uint32_t* buf, size_t len) {
  if (!seq || (!buf && len)) return Record(SLCE_ERR_NULL_POINTER, "argument is null");
  return Guard([&] {
    const auto& terms = seq->impl->terms();
    const size_t n = std::min<size_t>(len, terms.size());
    std::copy(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(n), buf);
  });
}

slce_status slce_sequence_json(const slce_sequence* seq, char** out) {
  if (!seq || !out) return Record(SLCE_ERR_NULL_POINTER, "argument is null");
  return Guard([&] { *out = CopyString(slce::seq::ToJson(*seq->impl)); });
}

slce_status slce_sequence_bits(const slce_sequence* seq, char** out) {
  if (!seq || !out) return Record(SLCE_ERR_NULL_POINTER, "argument is null");
  return Guard([&] { *out = CopyString(slce::seq::ToBitString(*seq->impl)); });
}

slce_status slce_sequence_autocorrelation(const slce_sequence* seq, uint64_t tau,
                                          int64_t* out) {
  if (!seq || !out) return Record(SLCE_ERR_NULL_POINTER, "argument is null");
  return Guard([&] { *out = slce::seq::Autocorrelation(*seq->impl, tau); });
}

slce_status slce_sequence_balance(const slce_sequence* seq, slce_balance* out) {
  if (!seq || !out) return Record(SLCE_ERR_NULL_POINTER, "argument is null");
  return Guard([&] {
    const slce::seq::SlceSequence& s = *seq->impl;
    const auto report = slce::seq::Balance(s);
    out->period = s.period();
    out->ones = report.ones;
    out->middle_term_zero = s.terms()[s.period() / 2] == 0;
  });
}

slce_status slce_complexity_json(const slce_sequence* seq, char** out, int* consistent) {
  if (!seq || !out) return Record(SLCE_ERR_NULL_POINTER, "argument is null");
  return Guard([&] {
    const slce::seq::SlceSequence& s = *seq->impl;
    const std::vector<uint8_t> bits = s.Bits();
    const auto bm = slce::polybin::BerlekampMassey(bits);
    const auto gcd =
        slce::polybin::LinearComplexityViaGcd(slce::seq::CharacteristicPoly(s), s.period());
    const auto profile = slce::criteria::ComputeMultiplicityProfile(s);
    const bool ok = bm.L == gcd.L && gcd.L == profile.L && bm.minimal_poly == gcd.minimal_poly;

    ordered_json j = FieldHeader(*s.field());
    j["T"] = s.period();
    j["u"] = s.u();
    j["L"] = gcd.L;
    j["L_bm"] = bm.L;
    j["L_gcd"] = gcd.L;
    j["L_profile"] = profile.L;
    j["minimal_poly_hex"] = gcd.minimal_poly.ToHex();
    j["minimal_poly"] = gcd.minimal_poly.ToString();
    ordered_json rows = ordered_json::array();
    uint64_t capped_sum = 0;
    const uint64_t cap = uint64_t{1} << s.u();
    for (const auto& [key, mult] : profile.multiplicity) {
      rows.push_back({{"k", key.first}, {"e", key.second}, {"multiplicity", mult}});
    }
    // The profile lists one beta per cyclotomic coset; weight by coset size.
    for (const auto& [key, mult] : profile.multiplicity) {
      uint64_t orbit = 1;
      if (key.first > 1) {
        for (uint64_t x = (2 * key.second) % key.first; x != key.second; x = (2 * x) % key.first) {
          ++orbit;
        }
      }
      capped_sum += orbit * std::min(mult, cap);
    }
    j["profile"] = std::move(rows);
    j["root_degree"] = capped_sum;
    j["consistent"] = ok;
    if (consistent) *consistent = ok ? 1 : 0;
    *out = CopyString(j.dump());
  });
}

slce_status slce_gauss_index_json(const slce_field* field, uint64_t num, uint64_t den,
                                  char** out) {
  if (!field || !out) return Record(SLCE_ERR_NULL_POINTER, "argument is null");
  return Guard([&] {
    const auto chi = slce::cyclo::Character::Eta(field->impl, num, den);
    const std::complex<double> g = slce::cyclo::GaussSumNumeric(chi);
    const double expected = chi.IsTrivial() ? 1.0 : std::sqrt(static_cast<double>(field->impl->q()));
    ordered_json j = FieldHeader(*field->impl);
    j["character"] = {{"num", num}, {"den", den}, {"order", chi.order()}};
    j["numeric"] = ComplexJson(g);
    j["abs"] = std::abs(g);
    j["abs_expected"] = expected;
    j["agree"] = std::abs(std::abs(g) - expected) <= kRelTol * expected;
    *out = CopyString(j.dump());
  });
}

slce_status slce_gauss_quadratic_json(const slce_field* field, char** out, int* agree) {
  if (!field || !out) return Record(SLCE_ERR_NULL_POINTER, "argument is null");
  return Guard([&] {
    const auto& f = *field->impl;
    const std::complex<double> g =
        slce::cyclo::GaussSumNumeric(slce::cyclo::Character::Quadratic(field->impl));
    const auto closed = slce::cyclo::QuadraticGaussClosed(f.p(), f.m());
    const bool ok = Close(g, closed.Value());
    ordered_json j = FieldHeader(f);
    j["numeric"] = ComplexJson(g);
    j["closed"] = closed.ToString();
    j["closed_value"] = ComplexJson(closed.Value());
    j["agree"] = ok;
    if (agree) *agree = ok ? 1 : 0;
    *out = CopyString(j.dump());
  });
}

slce_status slce_gauss_semiprimitive_json(const slce_field* field, uint64_t order, char** out,
                                          int* agree) {
  if (!field || !out) return Record(SLCE_ERR_NULL_POINTER, "argument is null");
  return Guard([&] {
    const auto& f = *field->impl;
    const auto r = slce::cyclo::SemiprimitiveGaussClosed(f.p(), f.m(), order, f.q());
    ordered_json j = FieldHeader(f);
    j["order"] = order;
    j["v"] = r.v;
    j["w"] = r.w;
    j["numeric"] = ComplexJson(r.numeric);
    j["value"] = r.value.str();
    j["formula_sign"] = r.formula_sign;
    j["numeric_sign"] = r.numeric_sign;
    j["agree"] = !r.formula_mismatch;
    if (agree) *agree = r.formula_mismatch ? 0 : 1;
    *out = CopyString(j.dump());
  });
}

slce_status slce_jacobi_json(const slce_field* field, uint64_t a1, uint64_t a2, char** out) {
  if (!field || !out) return Record(SLCE_ERR_NULL_POINTER, "argument is null");
  return Guard([&] {
    const slce::cyclo::Character chi1(field->impl, a1);
    const slce::cyclo::Character chi2(field->impl, a2);
    const slce::cyclo::CycInt j_sum = slce::cyclo::JacobiSum(chi1, chi2);
    const std::complex<double> z = j_sum.ToComplex();
    ordered_json j = FieldHeader(*field->impl);
    j["a1"] = a1;
    j["a2"] = a2;
    j["value"] = ordered_json::parse(j_sum.ToJson());
    slce::cyclo::BigInt integer;
    if (j_sum.IsInteger(&integer)) j["integer"] = integer.str();
    j["numeric"] = ComplexJson(z);
    j["norm"] = std::norm(z);
    *out = CopyString(j.dump());
  });
}

slce_status slce_verify(const slce_sweep_config* config, slce_format format, char** report,
                        slce_verify_summary* summary) {
  if (!config || !report) return Record(SLCE_ERR_NULL_POINTER, "argument is null");
  *report = nullptr;
  return Guard([&] {
    const auto result = slce::criteria::RunVerification(ToConfig(config));
    *report = CopyString(format == SLCE_FORMAT_CSV ? slce::criteria::ToCsv(result.records)
                                                   : slce::criteria::ToJsonLines(result.records));
    if (summary) {
      summary->contexts = result.contexts;
      summary->checks = result.checks;
      summary->mismatches = result.mismatches;
    }
  });
}

slce_status slce_complexity_sweep(const slce_sweep_config* config, slce_format format,
                                  char** report, uint64_t* inconsistent) {
  if (!config || !report) return Record(SLCE_ERR_NULL_POINTER, "argument is null");
  *report = nullptr;
  return Guard([&] {
    const auto rows = slce::criteria::RunComplexitySweep(ToConfig(config));
    *report = CopyString(format == SLCE_FORMAT_CSV ? slce::criteria::ToCsv(rows)
                                                   : slce::criteria::ToJsonLines(rows));
    if (inconsistent) {
      *inconsistent = 0;
      for (const auto& row : rows) *inconsistent += row.consistent ? 0 : 1;
    }
  });
}

}  // extern "C"
