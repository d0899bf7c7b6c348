// fssp: command-line front end for the square-with-holes firing squad tools.
//
// Exit codes: 0 success, 2 invalid input, 3 not found, 4 budget exceeded.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "fssp/fssp.hpp"
#include "fssp/io.hpp"

using namespace fssp;
using io::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitNotFound = 3;
constexpr int kExitBudget = 4;

struct Globals {
  std::uint64_t seed = 20240601;
  int jobs = 0;
  bool report = false;
  std::string command;
  std::string digest_input;
};

Globals g;

std::string fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

int jobs() {
  if (g.jobs > 0) return g.jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

Configuration load(const std::string& path) {
  g.digest_input += io::read_file(path);
  return io::load_config(path);
}

void emit(const json& result, std::chrono::steady_clock::time_point t0) {
  if (!g.report) {
    std::cout << result.dump() << "\n";
    return;
  }
  json r;
  r["command"] = g.command;
  r["seed"] = g.seed;
  r["inputs_digest"] = fnv1a(g.digest_input);
  r["result"] = result;
  std::cout << r.dump() << "\n";
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
  std::cerr << "elapsed_ms " << ms.count() << "\n";  // kept off stdout so reports stay deterministic
}

json chain_json(const CertificateChain& ch) {
  json j;
  j["initial"] = io::config_json(ch.initial);
  j["steps"] = json::array();
  for (const auto& s : ch.steps)
    j["steps"].push_back({{"half_plane", to_string(s.half_plane)}, {"from", io::to_json(s.from)}, {"to", io::to_json(s.to)}});
  j["final"] = io::config_json(ch.final);
  return j;
}

json ck_json(const CkResult& r, bool list) {
  json j;
  j["k"] = r.k;
  j["c_k"] = r.c_k;
  j["shapes"] = r.shapes;
  j["pairs"] = r.pairs;
  if (!list) {
    j["argmax_pairs"] = r.argmax_pairs;
    return j;
  }
  j["argmax_pairs"] = json::array();
  for (const auto& a : r.argmax) {
    json holes = json::array();
    for (auto h : a.shape.hole_list()) holes.push_back(io::to_json(h));
    j["argmax_pairs"].push_back({{"W", a.shape.W}, {"H", a.shape.H}, {"holes", holes}, {"p", io::to_json(a.p)}});
  }
  return j;
}

Position parse_pos(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw Error(ErrorCode::InvalidInput, "position must be x,y: " + s);
  try {
    return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidInput, "position must be x,y: " + s);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Firing squad synchronization on squares with holes"};
  app.require_subcommand(1);
  app.add_option("--seed", g.seed, "seed for randomized sweeps");
  app.add_option("--jobs", g.jobs, "worker threads (default: hardware concurrency)");
  app.add_flag("--report", g.report, "wrap output with command echo and input digest");

  std::string cfg, cfg2, plan_path, out_format = "json";
  bool as_json = false, trace = false, certificate = false, list_argmax = false, allow_k7 = false;
  int n = 0, k = 0, t = -1;
  std::string vpos;
  std::vector<int> ks;

  auto* validate_cmd = app.add_subcommand("validate", "check a configuration file and print it canonically");
  validate_cmd->add_option("config", cfg)->required();
  validate_cmd->add_option("--format", out_format, "json or ascii")->check(CLI::IsMember({"json", "ascii"}));

  auto* sim = app.add_subcommand("simulate", "run one of the simulators");
  sim->require_subcommand(1);
  auto* sim_line = sim->add_subcommand("line", "line firing squad of n cells");
  sim_line->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  auto* sim_sh1 = sim->add_subcommand("sh1", "one-hole square automaton");
  sim_sh1->add_option("config", cfg)->required();
  sim_sh1->add_flag("--trace", trace, "print every step as an ASCII grid");
  auto* sim_plan = sim->add_subcommand("plan", "message-plan timing simulation");
  sim_plan->add_option("config", cfg)->required();
  sim_plan->add_option("plan", plan_path)->required();

  auto* barriers_cmd = app.add_subcommand("barriers", "maximal barriers");
  barriers_cmd->add_option("config", cfg)->required();
  barriers_cmd->add_flag("--json", as_json);

  auto* ck_cmd = app.add_subcommand("ck", "compute c_k");
  ck_cmd->add_option("--k", k)->required();
  ck_cmd->add_flag("--list-argmax", list_argmax);
  ck_cmd->add_flag("--allow-k7", allow_k7, "lift the default cap to k = 7");

  auto* tvc_cmd = app.add_subcommand("tvc", "T(v,C) for every node");
  tvc_cmd->add_option("config", cfg)->required();
  tvc_cmd->add_flag("--json", as_json);

  auto* classify_cmd = app.add_subcommand("classify", "minimum firing time for two holes");
  classify_cmd->add_option("config", cfg)->required();
  classify_cmd->add_flag("--certificate", certificate, "include the chain or the plan");

  auto* certify_cmd = app.add_subcommand("certify", "lower-bound chain for two holes");
  certify_cmd->add_option("config", cfg)->required();

  auto* equiv_cmd = app.add_subcommand("equiv", "evaluate the primed equivalence");
  equiv_cmd->add_option("a", cfg)->required();
  equiv_cmd->add_option("b", cfg2)->required();
  equiv_cmd->add_option("--t", t)->required();
  equiv_cmd->add_option("--v", vpos, "node as x,y")->required();

  auto* repro_cmd = app.add_subcommand("repro-tables", "recompute the c_k table next to the published rows");
  repro_cmd->add_option("--k", ks)->delimiter(',')->default_val(std::vector<int>{2, 3, 4, 5});
  repro_cmd->add_flag("--allow-k7", allow_k7);
  repro_cmd->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInvalid;
  }
  for (int i = 1; i < argc; ++i) g.command += (i > 1 ? " " : "") + std::string(argv[i]);
  const auto t0 = std::chrono::steady_clock::now();

  try {
    if (*validate_cmd) {
      const auto raw = io::parse_config(io::read_file(cfg));
      auto v = validate(raw.w, raw.holes);
      if (!v) {
        std::cerr << "invalid: " << to_string(v.rejection->kind) << ": " << v.rejection->message << "\n";
        return kExitInvalid;
      }
      std::cout << (out_format == "ascii" ? io::write_ascii(*v.config) : io::write_json(*v.config));
      return kExitOk;
    }

    if (*sim_line) {
      auto r = run_line_fssp_detail(n);
      json j{{"n", n}, {"fire_time", r.fire_time ? json(*r.fire_time) : json(nullptr)},
             {"simultaneous", r.simultaneous}, {"quiescence_ok", r.quiescence_ok}};
      emit(j, t0);
      return kExitOk;
    }

    if (*sim_sh1) {
      const auto c = load(cfg);
      Sh1Observer obs;
      if (trace)
        obs = [](int step, const Configuration& cc, const std::vector<Sh1Cell>& grid) {
          std::cerr << "t=" << step << "\n" << render_sh1(cc, grid);
        };
      auto r = run_sh1(c, obs);
      json j = io::transcript_json(r.transcript);
      j["quiescence_ok"] = r.diag.quiescence_ok;
      json diag = json::array();
      for (const auto& [p, ts] : r.diag.a_times) diag.push_back({{"node", io::to_json(p)}, {"times", ts}});
      j["diagonal"] = diag;
      j["corner_patch"] = r.diag.corner_patch ? io::to_json(*r.diag.corner_patch) : json(nullptr);
      emit(j, t0);
      return kExitOk;
    }

    if (*sim_plan) {
      const auto c = load(cfg);
      g.digest_input += io::read_file(plan_path);
      const auto plan = io::load_plan(plan_path);
      auto tr = run_message_plan(c, plan);
      json j = io::transcript_json(tr);
      if (c.size() == plan.target_size) {
        auto rep = check_c_conditions(plan, c);
        j["c1"] = rep.c1;
        j["c2"] = rep.c2;
        j["c5"] = rep.c5;
        j["completions"] = rep.completions;
        json fails = json::array();
        for (auto p : rep.c5_failures) fails.push_back(io::to_json(p));
        j["c5_failures"] = fails;
      }
      emit(j, t0);
      return kExitOk;
    }

    if (*barriers_cmd) {
      const auto c = load(cfg);
      const auto bars = maximal_barriers(c);
      if (as_json) {
        json arr = json::array();
        for (const auto& r : bars) arr.push_back({r.x0, r.y0, r.x1, r.y1});
        emit(json{{"maximal_barriers", arr}}, t0);
      } else {
        for (const auto& r : bars) std::cout << r.x0 << " " << r.y0 << " " << r.x1 << " " << r.y1 << "\n";
        std::cout << "count " << bars.size() << "\n";
      }
      return kExitOk;
    }

    if (*ck_cmd) {
      CkOptions opt;
      opt.jobs = jobs();
      opt.list_argmax = list_argmax;
      opt.allow_k7 = allow_k7;
      emit(ck_json(compute_ck(k, opt), list_argmax), t0);
      return kExitOk;
    }

    if (*tvc_cmd) {
      const auto c = load(cfg);
      TField tf(c);
      if (as_json) {
        json grid = json::array();
        for (int y = c.size(); y >= 0; --y) {
          json row = json::array();
          for (int x = 0; x <= c.size(); ++x) row.push_back(c.is_node({x, y}) ? json(tf({x, y})) : json(nullptr));
          grid.push_back(row);
        }
        emit(json{{"w", c.size()}, {"max_t", tf.max()}, {"grid", grid}}, t0);
      } else {
        std::cout << "max_t " << tf.max() << "\n";
        for (int y = c.size(); y >= 0; --y) {
          for (int x = 0; x <= c.size(); ++x) {
            char buf[8];
            if (c.is_node({x, y})) std::snprintf(buf, sizeof buf, "%4d", tf({x, y}));
            else std::snprintf(buf, sizeof buf, "%4s", "#");
            std::cout << buf;
          }
          std::cout << "\n";
        }
      }
      return kExitOk;
    }

    if (*classify_cmd) {
      const auto c = load(cfg);
      if (c.size() < 11) {
        std::cout << json{{"w", c.size()}, {"status", "UNSUPPORTED_SIZE"}}.dump() << "\n";
        return kExitInvalid;
      }
      auto v = classify(c);
      json j{{"w", c.size()}, {"mft", v.value}, {"kind", v.chain ? "lower_chain" : "witness_plan"}};
      if (v.value == 2 * c.size() + 1 && !v.chain) {
        j["kind"] = "lower_chain";
        j["search"] = to_string(v.search);
      }
      if (v.witness) {
        j["case"] = v.witness->case_label;
        j["checks_pass"] = v.report->ok();
      }
      if (certificate) {
        if (v.chain) j["certificate"] = chain_json(*v.chain);
        if (v.witness) j["certificate"] = io::plan_json(v.witness->plan);
      }
      emit(j, t0);
      return kExitOk;
    }

    if (*certify_cmd) {
      const auto c = load(cfg);
      auto r = lower_bound_certificate(c);
      if (!r.chain) {
        std::cout << "NOT_FOUND " << to_string(r.outcome) << "\n";
        return kExitNotFound;
      }
      auto check = verify_certificate(*r.chain, true);
      json j = chain_json(*r.chain);
      j["verified"] = check.ok;
      emit(j, t0);
      return kExitOk;
    }

    if (*equiv_cmd) {
      const auto a = load(cfg);
      const auto b = load(cfg2);
      const Position v = parse_pos(vpos);
      emit(json{{"t", t}, {"v", io::to_json(v)}, {"equiv", equiv_prime(a, b, t, v)}}, t0);
      return kExitOk;
    }

    if (*repro_cmd) {
      json rows = json::array();
      std::string md = "| k | c_k | shapes | pairs | argmax | published | match |\n|---|---|---|---|---|---|---|\n";
      for (int kk : ks) {
        CkOptions opt;
        opt.jobs = jobs();
        opt.allow_k7 = allow_k7;
        const auto r = compute_ck(kk, opt);
        const CkTableRow* pub = nullptr;
        for (const auto& row : kPublishedCk)
          if (row.k == kk) pub = &row;
        const bool match = pub && pub->c_k == r.c_k && pub->shapes == r.shapes && pub->pairs == r.pairs &&
                           pub->argmax_pairs == r.argmax_pairs;
        json row = ck_json(r, false);
        if (pub) row["published"] = {pub->c_k, pub->shapes, pub->pairs, pub->argmax_pairs};
        row["match"] = match;
        rows.push_back(row);
        md += "| " + std::to_string(kk) + " | " + std::to_string(r.c_k) + " | " + std::to_string(r.shapes) + " | " +
              std::to_string(r.pairs) + " | " + std::to_string(r.argmax_pairs) + " | " +
              (pub ? std::to_string(pub->c_k) + "/" + std::to_string(pub->shapes) + "/" + std::to_string(pub->pairs) +
                         "/" + std::to_string(pub->argmax_pairs)
                   : std::string("-")) +
              " | " + (match ? "yes" : "no") + " |\n";
      }
      if (as_json) emit(json{{"rows", rows}}, t0);
      else std::cout << md;
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::BudgetExceeded: return kExitBudget;
      case ErrorCode::Unreachable: return kExitNotFound;
      default: return kExitInvalid;
    }
  }
  return kExitOk;
}
