#include "gk/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "gk/invariants.hpp"
#include "gk/io.hpp"
#include "gk/random.hpp"
#include "gk/selftest.hpp"

namespace gk {

namespace {

constexpr int kOk = 0, kInvalid = 1, kInternal = 2;

json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path);
    if (!in) throw InvalidInput("io", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput("bad_json", path + ": " + e.what());
  }
}

void write_json(const std::string& path, const json& j) {
  std::ofstream o(path);
  if (!o) throw InvalidInput("io", "cannot write " + path);
  o << j.dump() << "\n";
}

json error_json(const std::string& reason, const std::string& detail) {
  return json{{"error", reason}, {"detail", detail}};
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* s = std::getenv("GK_SEED");
  if (!s || !*s) return fallback;
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw InvalidInput("bad_seed", std::string("GK_SEED is not an integer: ") + s);
  }
}

json compute_one(const json& item, const std::string& what) {
  HalfIntegralForm b = parse_form(item);
  if (b.degenerate()) throw InvalidInput("degenerate", "det B = 0");
  if (what == "gk") return json{{"gk", gk(b).values()}};
  if (what == "delta") return json{{"delta", delta(b)}};
  if (what == "xi") {
    json r{{"xi", xi(b)}};
    if (!xi_defined_for(b.size())) r["odd_rank"] = true;
    return r;
  }
  if (what == "eta") return json{{"eta", eta(b)}};
  return egk_json(egk_of(b));
}

struct Outcome {
  json value;
  int code = kOk;
};

Outcome guarded(const std::function<json()>& f) {
  try {
    return {f(), kOk};
  } catch (const InvalidInput& e) {
    return {error_json(e.reason(), e.what()), kInvalid};
  } catch (const InternalFailure& e) {
    return {error_json("internal", e.what()), kInternal};
  } catch (const json::exception& e) {
    return {error_json("bad_input", e.what()), kInvalid};
  }
}

// Runs each item on a worker pool; results keep input order.
std::vector<Outcome> run_batch(const json& items, const std::string& what) {
  std::vector<Outcome> res(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < items.size();)
      res[i] = guarded([&] { return compute_one(items[i], what); });
  };
  std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  std::size_t nthreads = std::min(hw, items.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return res;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gross-Keating invariants of half-integral symmetric matrices over Q_p", "gk"};
  app.require_subcommand(1);

  std::string what = "gk", input, cert_out, cert_in, egk_in, sigma_in, suite = "all";
  int rn = 2, rcount = 1, trials = 40;
  long rp = 2;
  std::uint64_t seed = 1;

  auto* compute = app.add_subcommand("compute", "Compute an invariant of one form or a JSON array of forms");
  compute->add_option("--what", what)->check(CLI::IsMember({"gk", "xi", "eta", "delta", "egk"}));
  compute->add_option("--input", input, "form file, - for stdin")->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a form and print its certificate");
  reduce_cmd->add_option("--input", input)->required();
  reduce_cmd->add_option("--emit-certificate", cert_out, "also write the certificate here");

  auto* verify = app.add_subcommand("verify", "Check a reduction certificate");
  verify->add_option("--input", input)->required();
  verify->add_option("--certificate", cert_in)->required();

  auto* synth = app.add_subcommand("synth", "Build a form with a given EGK datum");
  synth->add_option("--egk", egk_in, "EGK datum; optional \"p\" field, default 2")->required();
  synth->add_option("--sigma", sigma_in, "standard involution, 1-indexed images (p = 2 only)");

  auto* rand_cmd = app.add_subcommand("rand", "Print random non-degenerate forms");
  rand_cmd->add_option("--n", rn)->check(CLI::Range(1, 12));
  rand_cmd->add_option("--p", rp);
  rand_cmd->add_option("--count", rcount)->check(CLI::Range(1, 1000000));
  rand_cmd->add_option("--seed", seed);

  auto* self = app.add_subcommand("selftest", "Run the property checks");
  self->add_option("--suite", suite)->check(CLI::IsMember({"padic", "reducer", "egk", "all"}));
  self->add_option("--trials", trials)->check(CLI::Range(1, 1000000));
  self->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kInvalid;
  }

  auto body = [&]() -> Outcome {
    if (*compute) {
      json doc = read_json(input);
      if (!doc.is_array()) return {compute_one(doc, what)};
      Outcome all{json::array()};
      for (Outcome& r : run_batch(doc, what)) {
        all.value.push_back(std::move(r.value));
        all.code = std::max(all.code, r.code);
      }
      return all;
    }
    if (*reduce_cmd) {
      HalfIntegralForm b = parse_form(read_json(input));
      if (b.degenerate()) throw InvalidInput("degenerate", "det B = 0");
      json j = certificate_json(reduce(b));
      if (!cert_out.empty()) write_json(cert_out, j);
      return {j};
    }
    if (*verify) {
      HalfIntegralForm b = parse_form(read_json(input));
      ReductionCertificate c = parse_certificate(read_json(cert_in), b.ctx());
      Verification v = verify_certificate(b, c);
      json j{{"valid", v.valid()}, {"reason", to_string(v.reason)}};
      if (v.valid()) j["gk"] = c.type.ua.values();
      return {j, v.valid() ? kOk : kInternal};
    }
    if (*synth) {
      json doc = read_json(egk_in);
      long p = doc.contains("p") ? doc["p"].get<long>() : 2;
      PrimeContext ctx(p);
      EGKDatum g = parse_egk(doc);
      if (ctx.dyadic()) {
        std::optional<Involution> s;
        if (!sigma_in.empty()) s = parse_sigma(read_json(sigma_in));
        return {form_json(synthesize_reduced(g, s, ctx))};
      }
      if (!sigma_in.empty()) throw InvalidInput("sigma_not_applicable", "--sigma is only used for p = 2");
      Validation v = validate_egk(g);
      if (!v.ok()) throw InvalidInput("invalid_egk", v.violations.front());
      return {form_json(synthesize_nondyadic(lift(g), ctx))};
    }
    if (*rand_cmd) {
      PrimeContext ctx(rp);
      Rng rng(seed_from_env(seed));
      json arr = json::array();
      for (int i = 0; i < rcount; ++i) arr.push_back(form_json(random_form(static_cast<std::size_t>(rn), ctx, rng)));
      return {arr};
    }
    std::uint64_t s = seed_from_env(seed);
    bool ok = true;
    for (const CheckResult& r : run_selftest(suite, trials, s)) {
      out << (r.ok() ? "PASS " : "FAIL ") << r.suite << "/" << r.name << " cases=" << r.cases;
      if (!r.ok()) out << " failures=" << r.failures << " first: " << r.first_failure;
      out << "\n";
      ok = ok && r.ok();
    }
    return {json(), ok ? kOk : kInternal};
  };

  Outcome o;
  try {
    o = body();
  } catch (const InvalidInput& e) {
    err << error_json(e.reason(), e.what()).dump() << "\n";
    return kInvalid;
  } catch (const InternalFailure& e) {
    err << error_json("internal", e.what()).dump() << "\n";
    return kInternal;
  } catch (const json::exception& e) {
    err << error_json("bad_input", e.what()).dump() << "\n";
    return kInvalid;
  }
  if (!o.value.is_null()) out << o.value.dump() << "\n";
  return o.code;
}

}  // namespace gk
