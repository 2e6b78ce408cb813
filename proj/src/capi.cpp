#include "hurwitz/hurwitz.h"

#include <algorithm>
#include <cstring>
#include <functional>
#include <random>

#include "hurwitz/acceptance.hpp"
#include "hurwitz/bgw.hpp"
#include "hurwitz/monotone.hpp"
#include "hurwitz/ortho.hpp"
#include "hurwitz/pfaffian.hpp"
#include "hurwitz/tau.hpp"

struct hz_context {
  std::string message;
  hz_status status = HZ_OK;
};

namespace {

using namespace hurwitz;

using Reports = std::vector<CheckReport>;
using CheckFn = std::function<Reports(const json&)>;
using QueryFn = std::function<json(const json&)>;

int get_int(const json& p, const char* key, int fallback) {
  if (!p.contains(key)) return fallback;
  if (!p[key].is_number_integer()) throw Error(ErrorCode::ConfigError, std::string(key) + " must be an integer");
  return p[key].get<int>();
}

bool get_bool(const json& p, const char* key) {
  if (!p.contains(key)) return false;
  if (!p[key].is_boolean()) throw Error(ErrorCode::ConfigError, std::string(key) + " must be a boolean");
  return p[key].get<bool>();
}

BigRat to_rat(const json& v) {
  if (v.is_number_integer()) return BigRat(v.get<long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw Error(ErrorCode::ConfigError, "expected a rational, got " + v.dump());
}

std::vector<BigRat> get_rats(const json& p, const char* key) {
  std::vector<BigRat> out;
  if (!p.contains(key)) return out;
  if (!p[key].is_array()) throw Error(ErrorCode::ConfigError, std::string(key) + " must be an array");
  for (const auto& v : p[key]) out.push_back(to_rat(v));
  return out;
}

bool sampled(const json& p) {
  const std::string mode = p.value("mode", std::string("symbolic"));
  if (mode == "symbolic") return false;
  if (mode == "sample") return true;
  throw Error(ErrorCode::ConfigError, "mode must be symbolic or sample, got " + mode);
}

// Explicit "n" values, or "count" seeded draws above every pole at degree nmax.
std::vector<BigRat> sample_points(const json& p, int nmax, int min_count) {
  std::vector<BigRat> pts = get_rats(p, "n");
  if (pts.empty()) {
    const int count = get_int(p, "count", min_count);
    std::mt19937 rng(static_cast<unsigned>(get_int(p, "seed", 1)));
    while (static_cast<int>(pts.size()) < count) {
      const long den = 2 + static_cast<long>(rng() % 7);
      const long num = static_cast<long>(rng() % (8 * den));
      BigRat v = BigRat(nmax + 3) + rat(num, den);
      if (std::find(pts.begin(), pts.end(), v) == pts.end()) pts.push_back(v);
    }
  }
  if (static_cast<int>(pts.size()) < min_count)
    throw Error(ErrorCode::ConfigError, "need at least " + std::to_string(min_count) + " sample points");
  return pts;
}

// Expansions the tau checks run on: one symbolic, or one per sample point.
std::vector<TauSeries> tau_inputs(const json& p, int nmax) {
  if (!sampled(p)) return {expand_tau(nmax, TauMode::SymbolicBU)};
  const Scalar b(to_rat(p.value("b", json("2/7"))));
  std::vector<TauSeries> out;
  for (const auto& n : sample_points(p, nmax, 1)) out.push_back(expand_tau(nmax, TauMode::Sampled, b, n));
  return out;
}

std::vector<BigRat> get_spectrum(const json& p) {
  std::vector<BigRat> x = get_rats(p, "x");
  if (x.empty()) throw Error(ErrorCode::ConfigError, "x must list at least one eigenvalue");
  return x;
}

const std::map<std::string, CheckFn>& checks() {
  static const std::map<std::string, CheckFn> m = {
      {"jack-core", [](const json& p) { return Reports{check_jack_core(get_int(p, "nmax", 6))}; }},
      {"tau-evolution",
       [](const json& p) {
         Reports r;
         for (const auto& tau : tau_inputs(p, get_int(p, "nmax", 5))) r.push_back(check_evolution(tau));
         return r;
       }},
      {"tau-evolution-uniqueness",
       [](const json& p) {
         Reports r;
         for (const auto& tau : tau_inputs(p, get_int(p, "nmax", 5))) r.push_back(check_evolution_uniqueness(tau));
         return r;
       }},
      {"tau-virasoro",
       [](const json& p) {
         Reports r;
         const int imax = get_int(p, "imax", 5);
         for (const auto& tau : tau_inputs(p, get_int(p, "nmax", 5))) r.push_back(check_virasoro(tau, imax));
         return r;
       }},
      {"virasoro-commutators",
       [](const json& p) {
         return Reports{check_virasoro_commutators(get_int(p, "imax", 3), get_int(p, "trials", 20),
                                                   get_int(p, "degree", 4),
                                                   static_cast<unsigned>(get_int(p, "seed", 2024)))};
       }},
      {"virasoro-sum",
       [](const json& p) {
         return Reports{check_virasoro_sum(get_int(p, "degree", 5), static_cast<unsigned>(get_int(p, "seed", 7)))};
       }},
      {"feray",
       [](const json& p) {
         const FerayTable t(get_int(p, "size", 6), get_int(p, "kmax", 4));
         return Reports{check_feray_recursion(t),
                        check_feray_hk(t, std::min(t.max_size(), 5), std::min(t.max_k(), 3)),
                        check_feray_polynomial(t)};
       }},
      {"character-orthogonality",
       [](const json& p) { return Reports{check_character_orthogonality(get_int(p, "n", 5))}; }},
      {"positivity",
       [](const json& p) { return Reports{check_positivity(get_int(p, "nmax", 5), get_int(p, "uorder", 6))}; }},
      {"oracle",
       [](const json& p) {
         const int n = get_int(p, "n", 5), r = get_int(p, "r", 4);
         return Reports{compare_with_tau(n, r), check_monotone_totals(n, r)};
       }},
      {"ortho-dims", [](const json& p) { return Reports{check_ortho_dims(get_int(p, "size", 6))}; }},
      {"a-coeff",
       [](const json& p) {
         const int size = get_int(p, "size", 5);
         return Reports{check_a_coeff(size), check_a_antisymmetry(size)};
       }},
      {"schur-b1",
       [](const json& p) {
         const int size = get_int(p, "size", 4), r = get_int(p, "r", 3);
         return Reports{schur_expansion_check(get_int(p, "nmax", 5)), check_key_identity(size, r),
                        check_virasoro_on_schur(size, r)};
       }},
      {"symplectic",
       [](const json& p) {
         return Reports{symplectic_dual_check(get_int(p, "nmax", 4), get_int(p, "omega", 5), get_bool(p, "as_printed"))};
       }},
      {"onc",
       [](const json& p) {
         Reports r;
         for (int m = 1; m <= get_int(p, "m", 4); ++m) r.push_back(oliveira_novaes_check(m, get_bool(p, "as_printed")));
         return r;
       }},
      {"pfaffian",
       [](const json& p) {
         const unsigned seed = static_cast<unsigned>(get_int(p, "seed", 11));
         return Reports{check_pfaffian_basics(20, seed), check_pfaffian_det(get_int(p, "trials", 50), get_int(p, "size", 8), seed),
                        check_schur_pfaffian_random(get_int(p, "tuples", 20), seed + 1),
                        check_minor_summation_random(seed + 2)};
       }},
      {"a-pfaffian",
       [](const json& p) { return Reports{check_a_pfaffian_all(get_int(p, "size", 6), get_int(p, "n", 6))}; }},
      {"beta-ratios",
       [](const json& p) {
         return Reports{check_beta_ratios(get_int(p, "lo", 2), get_int(p, "hi", 8), get_int(p, "kmax", 4))};
       }},
      {"trunc", [](const json& p) { return Reports{check_trunc(get_int(p, "nmax", 5))}; }},
      {"bkp",
       [](const json& p) {
         const int nmax = get_int(p, "nmax", 5);
         if (!sampled(p)) return Reports{bkp_equation_check(nmax, BkpMode::Symbolic)};
         return Reports{bkp_equation_check(nmax, BkpMode::Sampled, sample_points(p, nmax, 5))};
       }},
      {"bgw-kernel", [](const json& p) { return Reports{check_bgw_kernel(get_int(p, "tmax", 6))}; }},
      {"bgw-orthogonal",
       [](const json& p) {
         const auto x = get_spectrum(p);
         const int tmax = get_int(p, "tmax", 4);
         if (get_bool(p, "as_printed")) return Reports{bgw_as_printed_check(x, tmax)};
         return Reports{bgw_orthogonal_check(x, tmax)};
       }},
      {"bgw-unitary",
       [](const json& p) { return Reports{bgw_unitary_det_check(get_spectrum(p), get_int(p, "tmax", 4))}; }},
      {"criterion", [](const json& p) { return run_criterion(get_int(p, "k", 1)); }},
  };
  return m;
}

json series_doc(const TSeries& s) { return {{"series", series_json(s)}, {"text", s.to_string()}}; }

const std::map<std::string, QueryFn>& queries() {
  static const std::map<std::string, QueryFn> m = {
      {"tau-expand",
       [](const json& p) {
         const int nmax = get_int(p, "nmax", 3);
         const std::string mode = p.value("mode", std::string("symbolic"));
         TauSeries tau;
         if (mode == "symbolic")
           tau = expand_tau(nmax, TauMode::SymbolicBU);
         else if (mode == "symbolic-n")
           tau = expand_tau(nmax, TauMode::SymbolicBN);
         else if (mode == "sample")
           tau = expand_tau(nmax, TauMode::Sampled, Scalar(to_rat(p.value("b", json("2/7")))),
                            to_rat(p.value("n", json("13/3"))));
         else
           throw Error(ErrorCode::ConfigError, "mode must be symbolic, symbolic-n or sample");
         json slices = json::array();
         for (int d = 0; d <= nmax; ++d) slices.push_back({{"degree", d}, {"terms", symfun_json(tau.series[d])}});
         return json{{"mode", tau_mode_name(tau.mode)}, {"slices", slices}};
       }},
      {"feray-table",
       [](const json& p) {
         const FerayTable t(get_int(p, "size", 4), get_int(p, "kmax", 3));
         json rows = json::array();
         for (int n = 1; n <= t.max_size(); ++n)
           for (const auto& rho : partitions_of(n))
             for (int k = 0; k <= t.max_k(); ++k)
               rows.push_back({{"rho", partition_json(rho)}, {"k", k}, {"coefficient", t.a(k, rho).to_string()}});
         return json{{"rows", rows}};
       }},
      {"ortho-dim",
       [](const json& p) {
         json rows = json::array();
         const Scalar n = Scalar::variable(Var::N);
         for (int size = 0; size <= get_int(p, "size", 3); ++size)
           for (const auto& lambda : partitions_of(size)) {
             const OrthoDim d = ortho_dim(lambda);
             rows.push_back({{"lambda", partition_json(lambda)},
                             {"o_lambda(1^N)", d.at(n).to_string()},
                             {"a_lambda(n)", a_coeff_def(lambda).to_string()}});
           }
         return json{{"rows", rows}};
       }},
      {"bgw-orthogonal",
       [](const json& p) {
         return series_doc(bgw_orthogonal(get_spectrum(p), get_int(p, "tmax", 4), get_bool(p, "as_printed")));
       }},
      {"bgw-unitary",
       [](const json& p) { return series_doc(bgw_unitary_det(get_spectrum(p), get_int(p, "tmax", 4))); }},
      {"oracle-counts",
       [](const json& p) {
         json rows = json::array();
         for (const auto& [lambda, count] : enumerate_monotone(get_int(p, "n", 4), get_int(p, "r", 3)))
           rows.push_back({{"lambda", partition_json(lambda)}, {"count", count.get_str()}});
         return json{{"rows", rows}};
       }},
  };
  return m;
}

hz_status status_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::DivisionByZero: return HZ_DIVISION_BY_ZERO;
    case ErrorCode::VariableMismatch: return HZ_VARIABLE_MISMATCH;
    case ErrorCode::PoleAtAssignment: return HZ_POLE_AT_ASSIGNMENT;
    case ErrorCode::LogOfNonUnit: return HZ_LOG_OF_NON_UNIT;
    case ErrorCode::SingularSystem: return HZ_SINGULAR_SYSTEM;
    case ErrorCode::InvalidPadding: return HZ_INVALID_PADDING;
    case ErrorCode::OddSize: return HZ_ODD_SIZE;
    case ErrorCode::NotSkew: return HZ_NOT_SKEW;
    case ErrorCode::DegenerateSpectrum: return HZ_DEGENERATE_SPECTRUM;
    case ErrorCode::NonCancellingPole: return HZ_NON_CANCELLING_POLE;
    case ErrorCode::BudgetExceeded: return HZ_BUDGET_EXCEEDED;
    case ErrorCode::ConfigError: return HZ_CONFIG_ERROR;
    case ErrorCode::ParseError: return HZ_PARSE_ERROR;
    case ErrorCode::InvalidArgument: return HZ_INVALID_ARGUMENT;
  }
  return HZ_INTERNAL;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

struct UnknownName : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
hz_status guarded(hz_context* ctx, F&& f) {
  if (!ctx) return HZ_INVALID_ARGUMENT;
  ctx->message.clear();
  ctx->status = HZ_OK;
  try {
    f();
  } catch (const Error& e) {
    ctx->status = status_of(e.code());
    ctx->message = e.what();
  } catch (const UnknownName& e) {
    ctx->status = HZ_UNKNOWN_NAME;
    ctx->message = e.what();
  } catch (const json::exception& e) {
    ctx->status = HZ_CONFIG_ERROR;
    ctx->message = e.what();
  } catch (const std::exception& e) {
    ctx->status = HZ_INTERNAL;
    ctx->message = e.what();
  }
  return ctx->status;
}

json parse_params(const char* params_json) {
  if (!params_json || !*params_json) return json::object();
  json p = json::parse(params_json);
  if (p.is_null()) return json::object();
  if (!p.is_object()) throw Error(ErrorCode::ConfigError, "parameters must be a JSON object");
  return p;
}

template <class M>
std::string names_of(const M& m) {
  std::string s;
  for (const auto& [name, fn] : m) s += name + "\n";
  return s;
}

}  // namespace

extern "C" {

hz_context* hz_context_new(void) { return new (std::nothrow) hz_context; }
void hz_context_free(hz_context* ctx) { delete ctx; }

const char* hz_last_error(const hz_context* ctx) { return ctx ? ctx->message.c_str() : "null context"; }
hz_status hz_last_status(const hz_context* ctx) { return ctx ? ctx->status : HZ_INVALID_ARGUMENT; }

const char* hz_check_names(void) {
  static const std::string s = names_of(checks());
  return s.c_str();
}

const char* hz_query_names(void) {
  static const std::string s = names_of(queries());
  return s.c_str();
}

hz_status hz_check(hz_context* ctx, const char* name, const char* params_json, char** jsonl, int* passed) {
  return guarded(ctx, [&] {
    if (!name || !jsonl || !passed) throw Error(ErrorCode::InvalidArgument, "null argument");
    auto it = checks().find(name);
    if (it == checks().end()) throw UnknownName(std::string("unknown check ") + name);
    Reports reports;
    try {
      reports = it->second(parse_params(params_json));
    } catch (const Error& e) {
      // Configuration problems are the caller's; anything else is a failing report.
      if (e.code() == ErrorCode::ConfigError) throw;
      Check c(name, "", parse_params(params_json));
      c.error(e, json::object());
      reports.push_back(c.report());
    }
    std::stable_sort(reports.begin(), reports.end(), [](const CheckReport& a, const CheckReport& b) {
      if (a.identity != b.identity) return a.identity < b.identity;
      return a.params.dump() < b.params.dump();
    });
    std::string out;
    bool ok = true;
    for (const auto& r : reports) {
      out += r.to_jsonl() + "\n";
      ok = ok && r.passed;
    }
    *passed = ok ? 1 : 0;
    *jsonl = dup_string(out);
  });
}

hz_status hz_query(hz_context* ctx, const char* name, const char* params_json, char** json_out) {
  return guarded(ctx, [&] {
    if (!name || !json_out) throw Error(ErrorCode::InvalidArgument, "null argument");
    auto it = queries().find(name);
    if (it == queries().end()) throw UnknownName(std::string("unknown query ") + name);
    *json_out = dup_string(it->second(parse_params(params_json)).dump());
  });
}

int hz_criteria_count(void) { return kCriteria; }

const char* hz_criterion_title(int k) {
  try {
    return criterion_title(k);
  } catch (const Error&) {
    return nullptr;
  }
}

void hz_string_free(char* s) { std::free(s); }

}  // extern "C"
