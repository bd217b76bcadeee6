#include "unicircle/unicircle.h"

#include <cstring>
#include <string>

#include <nlohmann/json.hpp>

#include "unicircle/criteria.hpp"
#include "unicircle/families.hpp"
#include "unicircle/special.hpp"

using namespace unicircle;

struct uc_poly {
  Polynomial value;
};

namespace {

thread_local std::string last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Precision prec_or_default(long precision_bits) {
  return precision_bits > 0 ? static_cast<Precision>(precision_bits) : kDefaultPrecision;
}

long samples_or_default(long samples) {
  return samples > 0 ? samples : kCertificateSamples;
}

Complex parse_complex(const char* re, const char* im, Precision prec) {
  Real r = Real::from_decimal(re ? re : "0", prec);
  Real i = Real::from_decimal(im ? im : "0", prec);
  return Complex(std::move(r), std::move(i));
}

template <typename Fn>
uc_status guarded(Fn&& fn) {
  try {
    fn();
    return UC_OK;
  } catch (const ConvergenceError& ex) {
    last_error = ex.what();
    return UC_ERR_NO_CONVERGENCE;
  } catch (const std::domain_error& ex) {
    last_error = ex.what();
    return UC_ERR_DOMAIN;
  } catch (const std::invalid_argument& ex) {
    last_error = ex.what();
    return UC_ERR_INVALID_ARGUMENT;
  } catch (const nlohmann::json::exception& ex) {
    last_error = ex.what();
    return UC_ERR_PARSE;
  } catch (const std::exception& ex) {
    last_error = ex.what();
    return UC_ERR_INTERNAL;
  }
}

uc_status need(bool ok, const char* message) {
  if (!ok) {
    last_error = message;
    return UC_ERR_INVALID_ARGUMENT;
  }
  return UC_OK;
}

}  // namespace

extern "C" {

const char* uc_version(void) { return "1.0.0"; }

const char* uc_last_error(void) { return last_error.c_str(); }

void uc_string_free(char* s) { std::free(s); }

uc_status uc_poly_from_json(const char* json, uc_poly** out) {
  if (uc_status st = need(json && out, "null argument")) return st;
  return guarded([&] {
    nlohmann::json j = nlohmann::json::parse(json);
    *out = new uc_poly{Polynomial::from_json(j)};
  });
}

uc_status uc_poly_to_json(const uc_poly* p, char** out) {
  if (uc_status st = need(p && out, "null argument")) return st;
  return guarded([&] { *out = dup_string(p->value.to_json().dump(2)); });
}

uc_status uc_poly_degree(const uc_poly* p, int* out) {
  if (uc_status st = need(p && out, "null argument")) return st;
  *out = p->value.degree();
  return UC_OK;
}

void uc_poly_free(uc_poly* p) { delete p; }

uc_status uc_poly_detect_self_inversive(const uc_poly* p, char** json_out) {
  if (uc_status st = need(p && json_out, "null argument")) return st;
  return guarded([&] {
    DetectResult res = detect_self_inversive(p->value);
    nlohmann::json j;
    j["schema"] = "unicircle/1";
    j["self_inversive"] = res.ok();
    if (res.ok()) {
      j["epsilon"] = {res.form->epsilon.real().to_decimal(),
                      res.form->epsilon.imag().to_decimal()};
      j["tol"] = res.form->tol.to_decimal();
    } else {
      j["failing_index"] = res.rejection->failing_index;
      j["reason"] = res.rejection->reason;
    }
    *json_out = dup_string(j.dump(2));
  });
}

uc_status uc_poly_construct_theorem1(const uc_poly* h, long d, const char* lambda_re,
                                     const char* lambda_im, uc_poly** out) {
  if (uc_status st = need(h && out, "null argument")) return st;
  return guarded([&] {
    Complex lambda = parse_complex(lambda_re, lambda_im, h->value.precision());
    *out = new uc_poly{construct_theorem1(h->value, static_cast<int>(d), lambda)};
  });
}

uc_status uc_roots(const uc_poly* p, long precision_bits, long max_iter, char** json_out) {
  if (uc_status st = need(p && json_out, "null argument")) return st;
  return guarded([&] {
    RootReport rep = all_roots(p->value, prec_or_default(precision_bits),
                               max_iter > 0 ? static_cast<int>(max_iter) : 400);
    *json_out = dup_string(rep.to_json().dump(2));
  });
}

uc_status uc_criteria(const uc_poly* p, const char* ids, long grid_size, long precision_bits,
                      char** json_out) {
  if (uc_status st = need(p && json_out, "null argument")) return st;
  return guarded([&] {
    const Precision prec = prec_or_default(precision_bits);
    std::vector<CriterionId> wanted;
    std::string spec = ids ? ids : "all";
    if (spec == "all" || spec.empty()) {
      wanted = {CriterionId::cohn,          CriterionId::lakatos,
                CriterionId::lakatos_losonczi_half, CriterionId::lakatos_losonczi_alpha,
                CriterionId::smyth_inf_mu,  CriterionId::schinzel};
    } else {
      size_t pos = 0;
      while (pos != std::string::npos) {
        size_t comma = spec.find(',', pos);
        std::string token = spec.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (!token.empty()) wanted.push_back(criterion_from_name(token));
        pos = comma == std::string::npos ? comma : comma + 1;
      }
    }
    DetectResult det = detect_self_inversive(p->value);
    nlohmann::json arr = nlohmann::json::array();
    if (!det.ok()) {
      throw std::invalid_argument("polynomial is not self-inversive: " + det.rejection->reason);
    }
    const SelfInversiveForm& form = *det.form;
    int grid = grid_size > 0 ? static_cast<int>(grid_size) : 4096;
    for (CriterionId id : wanted) {
      switch (id) {
        case CriterionId::cohn:
          arr.push_back(cohn(form, default_unimodularity_tol(prec), prec).to_json());
          break;
        case CriterionId::lakatos:
          arr.push_back(lakatos(form).to_json());
          break;
        case CriterionId::lakatos_losonczi_half:
          arr.push_back(lakatos_losonczi_half(form).to_json());
          break;
        case CriterionId::lakatos_losonczi_alpha:
          arr.push_back(best_alpha(form, std::min(grid, 1024)).to_json());
          break;
        case CriterionId::smyth_inf_mu:
          arr.push_back(smyth_inf_mu(form, grid).to_json());
          break;
        case CriterionId::schinzel:
          arr.push_back(schinzel(form, std::min(grid, 256)).to_json());
          break;
      }
    }
    *json_out = dup_string(arr.dump(2));
  });
}

uc_status uc_observation_scan(const uc_poly* h, const char* lambda_re, const char* lambda_im,
                              long d_max, long precision_bits, char** json_out) {
  if (uc_status st = need(h && json_out, "null argument")) return st;
  return guarded([&] {
    const Precision prec = prec_or_default(precision_bits);
    Complex lambda = parse_complex(lambda_re, lambda_im, prec);
    ObservationScan scan = observation_scan(h->value, lambda, static_cast<int>(d_max),
                                            default_unimodularity_tol(prec), prec);
    *json_out = dup_string(scan.to_json().dump(2));
  });
}

uc_status uc_certify(const uc_poly* h, const uc_poly* e, const char* lambda_re,
                     const char* lambda_im, long k, const char* c, long samples,
                     long verify_cap_degree, int* valid_out, char** json_out) {
  if (uc_status st = need(h && c && valid_out && json_out, "null argument")) return st;
  return guarded([&] {
    const Precision prec = h->value.precision();
    Complex lambda = parse_complex(lambda_re, lambda_im, prec);
    Polynomial ev = e ? e->value : Polynomial(prec);
    Lemma2Certificate cert =
        lemma2_certificate(h->value, ev, lambda, k, Real::from_decimal(c, prec),
                           samples_or_default(samples), std::nullopt, verify_cap_degree);
    *valid_out = cert.valid ? 1 : 0;
    *json_out = dup_string(cert.to_json().dump(2));
  });
}

uc_status uc_certify_family(const char* family, long k, long r, const char* c, long samples,
                            long precision_bits, long verify_cap_degree, int* valid_out,
                            char** json_out) {
  if (uc_status st = need(family && valid_out && json_out, "null argument")) return st;
  return guarded([&] {
    const Precision prec = prec_or_default(precision_bits);
    FamilyId f = family_from_name(family);
    FamilyCertParams params = default_cert_params(f);
    int use_r = r > 0 ? static_cast<int>(r) : params.r;
    Real use_c = Real::from_decimal(c ? c : params.c, prec);
    Lemma2Certificate cert = family_certificate(f, static_cast<int>(k), use_r, use_c,
                                                samples_or_default(samples), prec,
                                                verify_cap_degree);
    *valid_out = cert.valid ? 1 : 0;
    *json_out = dup_string(cert.to_json().dump(2));
  });
}

uc_status uc_family_build(const char* family, long k, long precision_bits, uc_poly** out) {
  if (uc_status st = need(family && out, "null argument")) return st;
  return guarded([&] {
    *out = new uc_poly{build_family(family_from_name(family), static_cast<int>(k),
                                    prec_or_default(precision_bits))};
  });
}

uc_status uc_family_monic_base(const char* family, long k, long precision_bits, uc_poly** out) {
  if (uc_status st = need(family && out, "null argument")) return st;
  return guarded([&] {
    *out = new uc_poly{monic_base_of(family_from_name(family), static_cast<int>(k),
                                     prec_or_default(precision_bits))};
  });
}

uc_status uc_family_decompose(const char* family, long k, long r, long precision_bits,
                              char** json_out) {
  if (uc_status st = need(family && json_out, "null argument")) return st;
  return guarded([&] {
    FamilyDecomposition dec = decompose(family_from_name(family), static_cast<int>(k),
                                        static_cast<int>(r), prec_or_default(precision_bits));
    *json_out = dup_string(dec.to_json().dump(2));
  });
}

uc_status uc_family_sequences(const char* family, long k, long precision_bits, char** json_out) {
  if (uc_status st = need(family && json_out, "null argument")) return st;
  return guarded([&] {
    FamilySequences seq = sequences(family_from_name(family), static_cast<int>(k),
                                    prec_or_default(precision_bits));
    nlohmann::json j;
    j["schema"] = "unicircle/1";
    j["family"] = family_name(seq.family);
    j["k"] = seq.k;
    nlohmann::json qs = nlohmann::json::array();
    nlohmann::json ds = nlohmann::json::array();
    for (const auto& v : seq.q) qs.push_back(v.to_decimal());
    for (const auto& v : seq.delta) ds.push_back(v.to_decimal());
    j["q"] = std::move(qs);
    j["delta"] = std::move(ds);
    *json_out = dup_string(j.dump(2));
  });
}

namespace {

uc_status scan_out(const ScanReport& rep, const char* format, int* violations_out, char** out) {
  if (violations_out) *violations_out = rep.violations;
  std::string fmt = format ? format : "json";
  if (fmt == "csv") {
    *out = dup_string(rep.to_csv());
  } else {
    *out = dup_string(rep.to_json().dump(2));
  }
  return UC_OK;
}

}  // namespace

uc_status uc_scan_lemma3(long k_min, long k_max, long precision_bits, const char* format,
                         int* violations_out, char** out) {
  if (uc_status st = need(out != nullptr, "null argument")) return st;
  return guarded([&] {
    ScanReport rep = lemma3_scan(static_cast<int>(k_min), static_cast<int>(k_max),
                                 prec_or_default(precision_bits));
    scan_out(rep, format, violations_out, out);
  });
}

uc_status uc_scan_lemma5(long k_min, long k_max, long precision_bits, const char* format,
                         int* violations_out, char** out) {
  if (uc_status st = need(out != nullptr, "null argument")) return st;
  return guarded([&] {
    ScanReport rep = lemma5_scan(static_cast<int>(k_min), static_cast<int>(k_max),
                                 prec_or_default(precision_bits));
    scan_out(rep, format, violations_out, out);
  });
}

uc_status uc_scan_lemma6(long k_min, long k_max, long samples, long precision_bits,
                         const char* format, int* violations_out, char** out) {
  if (uc_status st = need(out != nullptr, "null argument")) return st;
  return guarded([&] {
    ScanReport rep = lemma6_scan(static_cast<int>(k_min), static_cast<int>(k_max),
                                 samples_or_default(samples), prec_or_default(precision_bits));
    scan_out(rep, format, violations_out, out);
  });
}

uc_status uc_ramanujan_residual(long k, const char* z_re, const char* z_im, long terms,
                                long precision_bits, char** json_out) {
  if (uc_status st = need(json_out != nullptr, "null argument")) return st;
  return guarded([&] {
    const Precision prec = prec_or_default(precision_bits);
    Complex z = parse_complex(z_re, z_im, prec);
    RamanujanResult res = ramanujan_residual(static_cast<int>(k), z,
                                             terms > 0 ? static_cast<int>(terms) : 64, prec);
    nlohmann::json j;
    j["schema"] = "unicircle/1";
    j["k"] = k;
    j["z"] = {z.real().to_decimal(), z.imag().to_decimal()};
    j["terms"] = terms > 0 ? terms : 64;
    j["precision_bits"] = static_cast<long>(prec);
    j["residual"] = res.residual.to_decimal();
    j["tail_bound"] = res.tail_bound.to_decimal();
    *json_out = dup_string(j.dump(2));
  });
}

uc_status uc_counterexample(long k, long precision_bits, uc_poly** out) {
  if (uc_status st = need(out != nullptr, "null argument")) return st;
  return guarded([&] {
    *out = new uc_poly{counterexample_poly(static_cast<int>(k), prec_or_default(precision_bits))};
  });
}

uc_status uc_verify_family_k(const char* family, long k, long precision_bits, long tol_exponent,
                             long samples, long verify_cap_degree, int* pass_out,
                             char** json_out) {
  if (uc_status st = need(family && pass_out && json_out, "null argument")) return st;
  return guarded([&] {
    const Precision prec = prec_or_default(precision_bits);
    Real tol = tol_exponent > 0 ? Real::pow2(-tol_exponent, 64) : default_unimodularity_tol(prec);
    FamilyVerifyRow row = verify_family_k(family_from_name(family), static_cast<int>(k), prec,
                                          tol, samples_or_default(samples), verify_cap_degree);
    *pass_out = row.pass ? 1 : 0;
    *json_out = dup_string(row.to_json().dump(2));
  });
}

uc_status uc_special(const char* name, const char* arg, long precision_bits, char** json_out) {
  if (uc_status st = need(name && arg && json_out, "null argument")) return st;
  return guarded([&] {
    const Precision prec = prec_or_default(precision_bits);
    std::string fn = name;
    nlohmann::json j;
    j["schema"] = "unicircle/1";
    j["function"] = fn;
    j["arg"] = arg;
    j["precision_bits"] = static_cast<long>(prec);
    if (fn == "bernoulli" || fn == "euler") {
      long n = std::stol(arg);
      if (n < 0) throw std::invalid_argument("index must be >= 0");
      if (fn == "bernoulli") {
        mpq_class b = special::bernoulli(static_cast<unsigned>(n));
        j["numerator"] = b.get_num().get_str();
        j["denominator"] = b.get_den().get_str();
        j["value"] = Real::from_rational(b, prec).to_decimal();
      } else {
        mpz_class e = special::euler_number(static_cast<unsigned>(n));
        j["numerator"] = e.get_str();
        j["denominator"] = "1";
        j["value"] = Real::from_integer(e, prec).to_decimal();
      }
    } else {
      RealValue v{Real(prec), Real(prec)};
      if (fn == "zeta-even") {
        long n = std::stol(arg);
        if (n < 0 || n % 2 != 0) throw std::invalid_argument("zeta-even needs an even n >= 0");
        v = special::zeta_even(static_cast<unsigned>(n), prec);
      } else if (fn == "l-chi4") {
        long n = std::stol(arg);
        if (n < 1 || n % 2 != 1) throw std::invalid_argument("l-chi4 needs an odd n >= 1");
        v = special::l_chi4(static_cast<unsigned>(n), prec);
      } else if (fn == "zeta" || fn == "eta" || fn == "eta0") {
        Real s = Real::from_decimal(arg, prec);
        v = fn == "zeta" ? special::zeta(s, prec)
                         : fn == "eta" ? special::eta(s, prec) : special::eta0(s, prec);
      } else {
        throw std::invalid_argument(
            "unknown function (expected bernoulli, euler, zeta, zeta-even, eta, eta0, l-chi4)");
      }
      j["value"] = v.value.to_decimal();
      j["error_bound"] = v.error_bound.to_decimal();
    }
    *json_out = dup_string(j.dump(2));
  });
}

}  // extern "C"
