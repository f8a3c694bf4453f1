// Copyright 2026 The cycloprime Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Talks to the library only through cycloprime.h.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "cycloprime/cycloprime.h"

namespace {

constexpr int kExitError = 3;
constexpr int kDeskLimit = 16;

struct ResultDeleter {
  void operator()(cyp_result* r) const noexcept { cyp_result_free(r); }
};
using ResultPtr = std::unique_ptr<cyp_result, ResultDeleter>;

struct Failure {
  std::string message;
};

int exit_code_for(cyp_outcome o) {
  switch (o) {
    case CYP_PRIME: return 0;
    case CYP_COMPOSITE: return 1;
    case CYP_INAPPLICABLE: return 2;
  }
  return kExitError;
}

const char* primality_label(cyp_outcome o) {
  switch (o) {
    case CYP_PRIME: return "yes";
    case CYP_COMPOSITE: return "no";
    case CYP_INAPPLICABLE: return "n/a";
  }
  return "n/a";
}

cyp_mode parse_mode(const std::string& s) {
  if (s == "general") return CYP_MODE_GENERAL;
  if (s == "recurrence") return CYP_MODE_RECURRENCE;
  return CYP_MODE_AUTO;
}

void check(cyp_status status) {
  if (status != CYP_OK) throw Failure{cyp_last_error()};
}

ResultPtr run_one(int p, int n, cyp_mode mode) {
  cyp_result* raw = nullptr;
  check(cyp_test(p, n, mode, &raw));
  return ResultPtr(raw);
}

void guard_desk_scale(int n_max, bool force) {
  if (n_max > kDeskLimit && !force) {
    throw Failure{"n > " + std::to_string(kDeskLimit) + " needs --force"};
  }
}

std::string format_seconds(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << s;
  return os.str();
}

std::string csv_row(int n, const cyp_result* r) {
  return std::to_string(n) + "," + primality_label(cyp_result_outcome(r)) + "," +
         format_seconds(cyp_result_elapsed(r));
}

// Runs job(i) for i in [0, count) on up to `workers` threads.
template <typename Job>
void fan_out(std::size_t count, unsigned workers, Job&& job) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(count)));
  std::atomic<std::size_t> next{0};
  std::mutex error_mu;
  std::string first_error;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        job(i);
      } catch (const Failure& f) {
        std::lock_guard lock(error_mu);
        if (first_error.empty()) first_error = f.message;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (!first_error.empty()) throw Failure{first_error};
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Failure{"cannot open " + path + " for writing"};
  out << text;
  if (!out) throw Failure{"write to " + path + " failed"};
}

struct TestArgs {
  int p = 0;
  int n = 0;
  std::string mode = "auto";
  std::string report;
  std::string format = "json";
  bool force = false;
};

int cmd_test(const TestArgs& a) {
  guard_desk_scale(a.n, a.force);
  const ResultPtr r = run_one(a.p, a.n, parse_mode(a.mode));
  std::cout << cyp_result_summary(r.get()) << "\n";
  if (!a.report.empty()) {
    const std::string body = a.format == "csv"
                                 ? "n,primality,time_s\n" + csv_row(a.n, r.get()) + "\n"
                                 : std::string(cyp_result_json(r.get())) + "\n";
    write_text(a.report, body);
  }
  return exit_code_for(cyp_result_outcome(r.get()));
}

struct RangeArgs {
  int p = 0;
  int n_min = 1;
  int n_max = 1;
  std::string mode = "auto";
  std::string report;
  std::string format = "csv";
  unsigned workers = 1;
  bool force = false;
  std::uint64_t seed = 0x5eed;
  unsigned rounds = 20;
};

void check_range(const RangeArgs& a) {
  if (a.n_min < 1 || a.n_min > a.n_max) throw Failure{"need 1 <= n-min <= n-max"};
  guard_desk_scale(a.n_max, a.force);
}

int cmd_search(const RangeArgs& a) {
  check_range(a);
  const std::size_t count = static_cast<std::size_t>(a.n_max - a.n_min + 1);
  std::vector<ResultPtr> results(count);
  fan_out(count, a.workers, [&](std::size_t i) {
    results[i] = run_one(a.p, a.n_min + static_cast<int>(i), parse_mode(a.mode));
  });

  std::string body;
  if (a.format == "json") {
    for (const auto& r : results) body += std::string(cyp_result_json(r.get())) + "\n";
  } else {
    body = "n,primality,time_s\n";
    for (std::size_t i = 0; i < count; ++i) {
      body += csv_row(a.n_min + static_cast<int>(i), results[i].get()) + "\n";
    }
  }

  if (a.report.empty()) {
    std::cout << body;
    return 0;
  }
  write_text(a.report, body);
  std::cout << std::left << std::setw(4) << "n" << std::setw(22) << "M" << std::setw(11)
            << "primality" << "time(s)\n";
  for (std::size_t i = 0; i < count; ++i) {
    const int n = a.n_min + static_cast<int>(i);
    const cyp_result* r = results[i].get();
    std::string m = "-";
    if (cyp_result_outcome(r) == CYP_PRIME) {
      // The summary holds "= <M>" for small numbers and "[k digits]" otherwise.
      const std::string s = cyp_result_summary(r);
      const auto eq = s.find(" = ");
      m = eq == std::string::npos ? "-" : s.substr(eq + 3, s.find(':', eq) - eq - 3);
    }
    std::cout << std::left << std::setw(4) << n << std::setw(22) << m << std::setw(11)
              << primality_label(cyp_result_outcome(r))
              << format_seconds(cyp_result_elapsed(r)) << "\n";
  }
  return 0;
}

struct VerifyRow {
  int n = 0;
  cyp_outcome engine = CYP_INAPPLICABLE;
  std::string engine_mode;
  bool oracle_prime = false;
  bool has_alternate = false;
  cyp_outcome alternate = CYP_INAPPLICABLE;
  bool sequences_agree = true;
  bool agree = true;
};

std::vector<std::string> sequence_of(const cyp_result* r) {
  std::vector<std::string> out;
  for (size_t i = 0; i < cyp_result_sequence_size(r); ++i) out.emplace_back(cyp_result_sequence_value(r, i));
  return out;
}

int cmd_verify(const RangeArgs& a) {
  check_range(a);
  const std::size_t count = static_cast<std::size_t>(a.n_max - a.n_min + 1);
  const bool two_modes = a.p == 3 || a.p == 5;
  std::vector<VerifyRow> rows(count);
  fan_out(count, a.workers, [&](std::size_t i) {
    VerifyRow row;
    row.n = a.n_min + static_cast<int>(i);
    const ResultPtr main = run_one(a.p, row.n, CYP_MODE_AUTO);
    row.engine = cyp_result_outcome(main.get());
    row.engine_mode = cyp_result_mode(main.get());
    int prime = 0;
    check(cyp_oracle(a.p, row.n, a.rounds, a.seed, &prime));
    row.oracle_prime = prime != 0;
    if (row.engine == CYP_PRIME) {
      row.agree = row.oracle_prime;
    } else if (row.engine == CYP_COMPOSITE) {
      row.agree = !row.oracle_prime;
    }
    if (two_modes) {
      const ResultPtr alt = run_one(a.p, row.n, CYP_MODE_GENERAL);
      row.has_alternate = true;
      row.alternate = cyp_result_outcome(alt.get());
      row.sequences_agree = sequence_of(main.get()) == sequence_of(alt.get());
      row.agree = row.agree && row.alternate == row.engine && row.sequences_agree;
    }
    rows[i] = row;
  });

  int mismatches = 0;
  for (const auto& row : rows) {
    std::cout << "n=" << row.n << " engine=" << primality_label(row.engine) << " ("
              << row.engine_mode << ")";
    if (row.has_alternate) {
      std::cout << " general=" << primality_label(row.alternate)
                << " sequences=" << (row.sequences_agree ? "equal" : "differ");
    }
    std::cout << " oracle=" << (row.oracle_prime ? "yes" : "no") << " "
              << (row.agree ? "agree" : "MISMATCH") << "\n";
    if (!row.agree) ++mismatches;
  }
  std::cout << (mismatches == 0 ? "all agree" : std::to_string(mismatches) + " mismatch(es)")
            << " for p=" << a.p << ", n=" << a.n_min << ".." << a.n_max << "\n";

  if (!a.report.empty()) {
    std::string body = "n,engine,oracle,agree\n";
    for (const auto& row : rows) {
      body += std::to_string(row.n) + "," + primality_label(row.engine) + "," +
              (row.oracle_prime ? "yes" : "no") + "," + (row.agree ? "yes" : "no") + "\n";
    }
    write_text(a.report, body);
  }
  return mismatches == 0 ? 0 : 1;
}

struct BaselineArgs {
  std::string kind;
  int index = 0;
  std::string report;
};

int cmd_baseline(const BaselineArgs& a) {
  const cyp_baseline kind =
      a.kind == "pepin" ? CYP_BASELINE_PEPIN : CYP_BASELINE_LUCAS_LEHMER;
  cyp_result* raw = nullptr;
  check(cyp_baseline_run(kind, a.index, &raw));
  const ResultPtr r(raw);
  std::cout << cyp_result_summary(r.get()) << "\n";
  if (!a.report.empty()) write_text(a.report, std::string(cyp_result_json(r.get())) + "\n");
  return exit_code_for(cyp_result_outcome(r.get()));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Primality tests for (2p)^(2^n) + 1, p in {3, 5, 7, 11, 13, 17, 19}"};
  app.set_version_flag("--version", std::string(cyp_version()));
  app.require_subcommand(1);

  const std::vector<std::string> modes{"auto", "general", "recurrence"};
  const std::vector<std::string> formats{"json", "csv"};

  TestArgs ta;
  auto* test = app.add_subcommand("test", "Test a single M");
  test->add_option("--p", ta.p, "Base prime")->required();
  test->add_option("--n", ta.n, "Exponent n, M = (2p)^(2^n) + 1")->required();
  test->add_option("--mode", ta.mode)->check(CLI::IsMember(modes))->capture_default_str();
  test->add_option("--report", ta.report, "Write the report here ('-' for stdout)");
  test->add_option("--format", ta.format)->check(CLI::IsMember(formats))->capture_default_str();
  test->add_flag("--force", ta.force, "Allow n > 16");

  RangeArgs sa;
  auto* search = app.add_subcommand("search", "Test every n in a range");
  search->add_option("--p", sa.p)->required();
  search->add_option("--n-min", sa.n_min)->required();
  search->add_option("--n-max", sa.n_max)->required();
  search->add_option("--mode", sa.mode)->check(CLI::IsMember(modes))->capture_default_str();
  search->add_option("--report", sa.report);
  search->add_option("--format", sa.format)->check(CLI::IsMember(formats))->capture_default_str();
  search->add_option("--workers", sa.workers)->check(CLI::Range(1u, 256u))->capture_default_str();
  search->add_flag("--force", sa.force);

  RangeArgs va;
  auto* verify = app.add_subcommand("verify", "Cross-check the engine against Miller-Rabin");
  verify->add_option("--p", va.p)->required();
  verify->add_option("--n-min", va.n_min)->required();
  verify->add_option("--n-max", va.n_max)->required();
  verify->add_option("--report", va.report);
  verify->add_option("--workers", va.workers)->check(CLI::Range(1u, 256u))->capture_default_str();
  verify->add_option("--seed", va.seed, "Oracle random seed")->capture_default_str();
  verify->add_option("--rounds", va.rounds, "Random oracle rounds")->capture_default_str();
  verify->add_flag("--force", va.force);

  BaselineArgs ba;
  auto* baseline = app.add_subcommand("baseline", "Lucas-Lehmer or Pepin");
  baseline->add_option("kind", ba.kind)
      ->required()
      ->check(CLI::IsMember({"lucas-lehmer", "pepin"}));
  baseline->add_option("index", ba.index, "Mersenne exponent or Fermat index")->required();
  baseline->add_option("--report", ba.report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*test) return cmd_test(ta);
    if (*search) return cmd_search(sa);
    if (*verify) return cmd_verify(va);
    if (*baseline) return cmd_baseline(ba);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
