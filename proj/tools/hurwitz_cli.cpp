// Command-line front end over the C interface.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hurwitz/hurwitz.h"

namespace {

using json = nlohmann::ordered_json;

enum class Format { Json, Csv, Human };

struct Context {
  Format format() const {
    return *format_name == "csv" ? Format::Csv : *format_name == "human" ? Format::Human : Format::Json;
  }
  std::unique_ptr<hz_context, decltype(&hz_context_free)> ctx{hz_context_new(), hz_context_free};
  const std::string* format_name = nullptr;
  bool all_passed = true;
  int status = 0;  // nonzero once a configuration or library error was seen
};

std::string take(char* s) {
  std::string out = s ? s : "";
  hz_string_free(s);
  return out;
}

void fail_call(Context& c, const std::string& what) {
  std::cerr << "error: " << what << ": " << hz_last_error(c.ctx.get()) << "\n";
  c.status = hz_last_status(c.ctx.get()) == HZ_CONFIG_ERROR ? 2 : 3;
}

// RFC 4180 quoting when the field needs it.
std::string csv_field(const std::string& v) {
  if (v.find_first_of(",\"\n") == std::string::npos) return v;
  std::string out = "\"";
  for (char ch : v) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

void print_reports(Context& c, const std::string& jsonl) {
  std::size_t start = 0;
  while (start < jsonl.size()) {
    std::size_t end = jsonl.find('\n', start);
    const std::string line = jsonl.substr(start, end - start);
    start = end == std::string::npos ? jsonl.size() : end + 1;
    if (line.empty()) continue;
    if (c.format() == Format::Json) {
      std::cout << line << "\n";
      continue;
    }
    const json r = json::parse(line);
    const std::string status = r["status"].get<std::string>();
    if (c.format() == Format::Csv) {
      std::cout << csv_field(r["identity"].get<std::string>()) << "," << status << "," << csv_field(r["params"].dump())
                << "\n";
    } else {
      std::cout << (status == "pass" ? "PASS " : "FAIL ") << r["identity"].get<std::string>() << " "
                << r["params"].dump() << "\n";
      if (!r["witness"].is_null()) std::cout << "  witness: " << r["witness"].dump() << "\n";
    }
  }
}

bool run_check(Context& c, const std::string& name, const json& params) {
  char* out = nullptr;
  int passed = 0;
  if (hz_check(c.ctx.get(), name.c_str(), params.dump().c_str(), &out, &passed) != HZ_OK) {
    fail_call(c, name);
    return false;
  }
  print_reports(c, take(out));
  c.all_passed = c.all_passed && passed;
  return passed;
}

void print_rows(Context& c, const json& doc, const std::vector<std::string>& columns) {
  if (c.format() == Format::Json) {
    std::cout << doc.dump() << "\n";
    return;
  }
  const json& rows = doc.contains("rows") ? doc["rows"] : doc["series"];
  if (c.format() == Format::Human && doc.contains("text")) {
    std::cout << doc["text"].get<std::string>() << "\n";
    return;
  }
  for (std::size_t i = 0; i < columns.size(); ++i) std::cout << (i ? "," : "") << columns[i];
  std::cout << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      const json& v = row[columns[i]];
      std::cout << (i ? "," : "") << csv_field(v.is_string() ? v.get<std::string>() : v.dump());
    }
    std::cout << "\n";
  }
}

bool run_query(Context& c, const std::string& name, const json& params, const std::vector<std::string>& columns) {
  char* out = nullptr;
  if (hz_query(c.ctx.get(), name.c_str(), params.dump().c_str(), &out) != HZ_OK) {
    fail_call(c, name);
    return false;
  }
  print_rows(c, json::parse(take(out)), columns);
  return true;
}

int thread_count() {
  const char* env = std::getenv("HURWITZ_THREADS");
  if (!env) return 1;
  const int n = std::atoi(env);
  return n > 0 ? n : 1;
}

// Runs every criterion; output stays in criterion order whatever the thread count.
void run_all(Context& c) {
  const int n = hz_criteria_count();
  std::vector<std::string> out(n);
  std::vector<int> passed(n, 0), status(n, HZ_OK);
  std::vector<std::string> errors(n);
  auto work = [&](int k) {
    std::unique_ptr<hz_context, decltype(&hz_context_free)> ctx(hz_context_new(), hz_context_free);
    const std::string params = json{{"k", k + 1}}.dump();
    char* s = nullptr;
    status[k] = hz_check(ctx.get(), "criterion", params.c_str(), &s, &passed[k]);
    if (status[k] == HZ_OK)
      out[k] = take(s);
    else
      errors[k] = hz_last_error(ctx.get());
  };
  const int threads = std::min(thread_count(), n);
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (int k = t; k < n; k += threads) work(k);
    });
  for (auto& th : pool) th.join();
  for (int k = 0; k < n; ++k) {
    if (status[k] != HZ_OK) {
      std::cerr << "error: criterion " << k + 1 << ": " << errors[k] << "\n";
      c.status = 3;
      continue;
    }
    if (c.format() == Format::Human)
      std::cout << "criterion " << k + 1 << " (" << hz_criterion_title(k + 1) << "): " << (passed[k] ? "PASS" : "FAIL")
                << "\n";
    print_reports(c, out[k]);
    c.all_passed = c.all_passed && passed[k];
  }
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(',', start);
    if (end == std::string::npos) end = s.size();
    if (end > start) out.push_back(s.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

// Options shared by the commands with a symbolic and a sampled mode.
struct ModeOptions {
  std::string mode = "symbolic";
  std::string b = "2/7";
  std::vector<std::string> n_values;
  int seed = 1;
  int count = 0;

  void add(CLI::App* app) {
    app->add_option("--mode", mode, "symbolic or sample")->check(CLI::IsMember({"symbolic", "sample"}));
    app->add_option("--b", b, "rational b for sampled mode");
    app->add_option("--N", n_values, "rational N = 1/u values for sampled mode")->delimiter(',');
    app->add_option("--seed", seed, "seed for drawing sample points");
    app->add_option("--count", count, "number of drawn sample points");
  }

  void fill(json& p) const {
    p["mode"] = mode;
    if (mode != "sample") return;
    p["b"] = b;
    p["seed"] = seed;
    if (!n_values.empty()) p["n"] = n_values;
    if (count > 0) p["count"] = count;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for b-deformed monotone Hurwitz generating functions"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML or INI file mirroring the flags");
  app.fallthrough();
  Context c;
  std::string format = "json";
  c.format_name = &format;
  app.add_option("--format", format, "json, csv or human")->check(CLI::IsMember({"json", "csv", "human"}));

  int nmax = -1, tmax = -1, size = -1, kmax = -1, imax = -1, m = 4, n = 5, r = 4, seed = -1, trials = -1;
  bool as_printed = false;
  std::string x;
  ModeOptions mode;

  auto opt = [](json& p, const char* key, int v) {
    if (v >= 0) p[key] = v;
  };

  // tau
  auto* tau = app.add_subcommand("tau", "tau-function expansion, evolution and Virasoro checks");
  tau->require_subcommand(1);
  auto* tau_expand = tau->add_subcommand("expand", "print the coefficients of tau");
  std::string expand_mode = "symbolic";
  tau_expand->add_option("--nmax", nmax, "top t-degree");
  tau_expand->add_option("--mode", expand_mode, "symbolic, symbolic-n or sample")
      ->check(CLI::IsMember({"symbolic", "symbolic-n", "sample"}));
  tau_expand->add_option("--b", mode.b, "rational b for sampled mode");
  std::string n_value = "13/3";
  tau_expand->add_option("--N", n_value, "rational N = 1/u for sampled mode");
  tau_expand->callback([&] {
    json p = {{"mode", expand_mode}, {"b", mode.b}, {"n", n_value}};
    opt(p, "nmax", nmax);
    run_query(c, "tau-expand", p, {"degree", "terms"});
  });
  for (const auto& [sub, check, help] :
       std::vector<std::tuple<std::string, std::string, std::string>>{
           {"check-evolution", "tau-evolution", "(t d/dt - E_b) tau = 0 and uniqueness"},
           {"check-virasoro", "tau-virasoro", "L_i tau = 0"}}) {
    auto* s = tau->add_subcommand(sub, help);
    s->add_option("--nmax", nmax, "top t-degree");
    s->add_option("--imax", imax, "largest Virasoro index");
    mode.add(s);
    const std::string name = check;
    s->callback([&, name] {
      json p = json::object();
      opt(p, "nmax", nmax);
      opt(p, "imax", imax);
      mode.fill(p);
      run_check(c, name, p);
      if (name == "tau-evolution") run_check(c, "tau-evolution-uniqueness", p);
    });
  }
  auto* commutators = tau->add_subcommand("check-commutators", "[L_i, L_j] = (i-j) L_{i+j} on random series");
  commutators->add_option("--imax", imax, "largest index");
  commutators->add_option("--trials", trials, "number of random test functions");
  commutators->add_option("--seed", seed, "seed");
  commutators->callback([&] {
    json p = json::object();
    opt(p, "imax", imax);
    opt(p, "trials", trials);
    opt(p, "seed", seed);
    run_check(c, "virasoro-commutators", p);
    run_check(c, "virasoro-sum", json::object());
  });
  auto* jack = tau->add_subcommand("check-jack", "Jack orthogonality, norms and eigenvalues");
  jack->add_option("--nmax", nmax, "largest |lambda|");
  jack->callback([&] {
    json p = json::object();
    opt(p, "nmax", nmax);
    run_check(c, "jack-core", p);
  });
  auto* positivity = tau->add_subcommand("check-positivity", "(1+b) t d/dt log tilde-tau in N[b]");
  positivity->add_option("--nmax", nmax, "top t-degree");
  positivity->callback([&] {
    json p = json::object();
    opt(p, "nmax", nmax);
    run_check(c, "positivity", p);
  });

  // feray
  auto* feray = app.add_subcommand("feray", "coefficients a^k_rho and their recursion");
  feray->require_subcommand(1);
  for (const std::string sub : {"table", "check"}) {
    auto* s = feray->add_subcommand(sub, sub == "table" ? "print a^k_rho and check the recursion" : "check the recursion");
    s->add_option("--size", size, "largest |rho|");
    s->add_option("--kmax", kmax, "largest k");
    s->callback([&, sub] {
      json p = json::object();
      opt(p, "size", size);
      opt(p, "kmax", kmax);
      if (sub == "table") run_query(c, "feray-table", p, {"rho", "k", "coefficient"});
      run_check(c, "feray", p);
      run_check(c, "character-orthogonality", json::object());
    });
  }

  // ortho
  auto* ortho = app.add_subcommand("ortho", "orthogonal dimensions and a_lambda(n)");
  ortho->require_subcommand(1);
  auto* dim = ortho->add_subcommand("dim", "print o_lambda(1^N) and a_lambda(n)");
  dim->add_option("--size", size, "largest |lambda|");
  dim->callback([&] {
    json p = json::object();
    opt(p, "size", size);
    run_query(c, "ortho-dim", p, {"lambda", "o_lambda(1^N)", "a_lambda(n)"});
    run_check(c, "ortho-dims", p);
    run_check(c, "a-coeff", p);
  });

  // schur-b1
  auto* schur = app.add_subcommand("schur-b1", "b = 1 Schur expansion and the key identity");
  schur->require_subcommand(1);
  auto* schur_check = schur->add_subcommand("check", "run the checks");
  schur_check->add_option("--nmax", nmax, "top t-degree");
  schur_check->add_option("--size", size, "largest |lambda| for the key identity");
  schur_check->callback([&] {
    json p = json::object();
    opt(p, "nmax", nmax);
    opt(p, "size", size);
    run_check(c, "schur-b1", p);
  });

  // symplectic
  auto* symp = app.add_subcommand("symplectic", "b = -1/2 expansion over symplectic dimensions");
  symp->require_subcommand(1);
  auto* symp_check = symp->add_subcommand("check", "run the checks");
  symp_check->add_option("--nmax", nmax, "top t-degree");
  symp_check->add_flag("--as-printed", as_printed, "use o_{lambda^t}(1^{2N}) in place of sp_lambda(1^{2N})");
  symp_check->callback([&] {
    json p = {{"as_printed", as_printed}};
    opt(p, "nmax", nmax);
    run_check(c, "symplectic", p);
  });

  // onc
  auto* onc = app.add_subcommand("onc", "Oliveira-Novaes identity");
  onc->require_subcommand(1);
  auto* onc_check = onc->add_subcommand("check", "check m = 1..M");
  onc_check->add_option("--m", m, "largest m");
  onc_check->add_flag("--as-printed", as_printed, "keep the extra 1/m! on the right-hand side");
  onc_check->callback([&] { run_check(c, "onc", {{"m", m}, {"as_printed", as_printed}}); });

  // pfaffian
  auto* pf = app.add_subcommand("pfaffian", "Pfaffian identities, a_lambda(n) as a Pfaffian, beta_N, Trunc");
  pf->require_subcommand(1);
  auto* pf_check = pf->add_subcommand("check", "run the checks");
  pf_check->add_option("--size", size, "largest |lambda| for a_lambda(n)");
  pf_check->add_option("--seed", seed, "seed for random matrices");
  pf_check->add_option("--trials", trials, "random skew matrices for Pf^2 = det");
  pf_check->callback([&] {
    json p = json::object();
    opt(p, "seed", seed);
    opt(p, "trials", trials);
    run_check(c, "pfaffian", p);
    json q = json::object();
    opt(q, "size", size);
    run_check(c, "a-pfaffian", q);
    run_check(c, "beta-ratios", json::object());
    run_check(c, "trunc", json::object());
  });

  // bkp
  auto* bkp = app.add_subcommand("bkp", "first BKP equation for tau_{b=1}(t; 2p, 1/(2N))");
  bkp->require_subcommand(1);
  auto* bkp_check = bkp->add_subcommand("check", "residual in each p-degree");
  bkp_check->add_option("--nmax", nmax, "top p-degree");
  mode.add(bkp_check);
  bkp_check->callback([&] {
    json p = json::object();
    opt(p, "nmax", nmax);
    mode.fill(p);
    run_check(c, "bkp", p);
  });

  // bgw
  auto* bgw = app.add_subcommand("bgw", "BGW integrals over O(2n) and U(n)");
  bgw->require_subcommand(1);
  auto spectrum = [&]() {
    json a = json::array();
    for (const auto& v : split_list(x)) a.push_back(v);
    return a;
  };
  auto* bgw_o = bgw->add_subcommand("orthogonal", "Pfaffian series against the tau side");
  bgw_o->add_option("--x", x, "comma-separated rational eigenvalues")->required();
  bgw_o->add_option("--tmax", tmax, "top t-degree");
  bgw_o->add_flag("--as-printed", as_printed, "use the border entry I_0/2");
  bgw_o->callback([&] {
    json p = {{"x", spectrum()}, {"as_printed", as_printed}};
    opt(p, "tmax", tmax);
    run_query(c, "bgw-orthogonal", p, {"power", "coefficient"});
    run_check(c, "bgw-orthogonal", p);
  });
  auto* bgw_u = bgw->add_subcommand("unitary", "determinant series against Trunc(tau_{b=0}, n)");
  bgw_u->add_option("--x", x, "comma-separated rational eigenvalues")->required();
  bgw_u->add_option("--tmax", tmax, "top t-degree");
  bgw_u->callback([&] {
    json p = {{"x", spectrum()}};
    opt(p, "tmax", tmax);
    run_query(c, "bgw-unitary", p, {"power", "coefficient"});
    run_check(c, "bgw-unitary", p);
  });
  auto* bgw_k = bgw->add_subcommand("kernel", "kernel antisymmetry and its Bessel form");
  bgw_k->add_option("--tmax", tmax, "top t-degree");
  bgw_k->callback([&] {
    json p = json::object();
    opt(p, "tmax", tmax);
    run_check(c, "bgw-kernel", p);
  });

  // oracle
  auto* oracle = app.add_subcommand("oracle", "brute-force monotone factorizations at b = 0");
  oracle->require_subcommand(1);
  auto* compare = oracle->add_subcommand("compare", "counts against n! [t^n u^r p_lambda] tilde-tau");
  compare->add_option("--n", n, "largest n");
  compare->add_option("--r", r, "largest number of transpositions");
  compare->callback([&] { run_check(c, "oracle", {{"n", n}, {"r", r}}); });
  auto* counts = oracle->add_subcommand("counts", "cycle-type histogram for one n and r");
  counts->add_option("--n", n, "number of points");
  counts->add_option("--r", r, "number of transpositions");
  counts->callback([&] { run_query(c, "oracle-counts", {{"n", n}, {"r", r}}, {"lambda", "count"}); });

  // all
  auto* all = app.add_subcommand("all", "run the acceptance suite");
  all->callback([&] { run_all(c); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  if (c.status != 0) return c.status;
  return c.all_passed ? 0 : 1;
}
