// Copyright 2026 the qinsim authors
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

// Command line front end. Talks to the simulator exclusively through the
// shared-library C interface in qinsim.h.

#include <qinsim.h>

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

namespace {

struct Options {
  std::string command;
  std::string scenario_path;
  std::string out_dir = "out";
  std::string seed;
  std::string trials = "100000";
  std::string straylight;
  std::string perturb;
};

void usage(std::FILE* stream) {
  std::fprintf(stream,
               "usage: qinsim <command> [options]\n"
               "\n"
               "commands:\n"
               "  pass        satellite pass geometry only; writes pass.csv\n"
               "  simulate    full run; writes per-straylight series CSVs and summary.txt\n"
               "  verify      analytic self-checks of the model\n"
               "  mc          Monte Carlo vs closed form per elementary link\n"
               "  schema      list every scenario config key\n"
               "\n"
               "options:\n"
               "  --scenario <path>    scenario config file (defaults built in)\n"
               "  --out <dir>          output directory (default: out)\n"
               "  --seed <u64>         override sim.seed\n"
               "  --trials <n>         Monte Carlo trials (default: 100000)\n"
               "  --straylight <list>  override straylight.levels_hz, comma separated\n"
               "  --perturb <name>     verify only: force a failure (bell-sign)\n"
               "\n"
               "exit codes: 0 success, 1 verification/statistical failure,\n"
               "            2 scenario/geometry failure\n");
}

int exit_code(qinsim_status status) {
  switch (status) {
    case QINSIM_OK: return 0;
    case QINSIM_ERROR_VERIFY: return 1;
    default: return 2;
  }
}

void print_error(qinsim_status status) {
  std::fprintf(stderr, "qinsim: error (%d): %s\n", static_cast<int>(status),
               qinsim_last_error());
}

bool parse_options(int argc, char** argv, Options& opt) {
  opt.command = argv[1];
  for (int i = 2; i < argc; ++i) {
    const std::string arg = argv[i];
    auto value = [&](std::string& target) {
      if (i + 1 >= argc) {
        std::fprintf(stderr, "qinsim: missing value for %s\n", arg.c_str());
        return false;
      }
      target = argv[++i];
      return true;
    };
    if (arg == "--scenario") {
      if (!value(opt.scenario_path)) return false;
    } else if (arg == "--out") {
      if (!value(opt.out_dir)) return false;
    } else if (arg == "--seed") {
      if (!value(opt.seed)) return false;
    } else if (arg == "--trials") {
      if (!value(opt.trials)) return false;
    } else if (arg == "--straylight") {
      if (!value(opt.straylight)) return false;
    } else if (arg == "--perturb") {
      if (!value(opt.perturb)) return false;
    } else if (arg == "--help" || arg == "-h") {
      usage(stdout);
      std::exit(0);
    } else {
      std::fprintf(stderr, "qinsim: unknown option '%s'\n", arg.c_str());
      return false;
    }
  }
  return true;
}

qinsim_status make_scenario(const Options& opt, qinsim_scenario** out) {
  qinsim_status status = opt.scenario_path.empty()
                             ? qinsim_scenario_create(out)
                             : qinsim_scenario_load(opt.scenario_path.c_str(), out);
  if (status != QINSIM_OK) return status;
  if (!opt.seed.empty()) {
    status = qinsim_scenario_set(*out, "sim.seed", opt.seed.c_str());
    if (status != QINSIM_OK) return status;
  }
  if (!opt.straylight.empty()) {
    status = qinsim_scenario_set(*out, "straylight.levels_hz", opt.straylight.c_str());
    if (status != QINSIM_OK) return status;
  }
  return QINSIM_OK;
}

void print_and_free(char* text) {
  if (text != nullptr) {
    std::fputs(text, stdout);
    qinsim_string_free(text);
  }
}

} // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    usage(stderr);
    return 2;
  }
  if (std::strcmp(argv[1], "--help") == 0 || std::strcmp(argv[1], "-h") == 0) {
    usage(stdout);
    return 0;
  }

  Options opt;
  if (!parse_options(argc, argv, opt)) return 2;

  if (opt.command == "schema") {
    char* text = nullptr;
    const qinsim_status status = qinsim_schema(&text);
    if (status != QINSIM_OK) {
      print_error(status);
      return exit_code(status);
    }
    print_and_free(text);
    return 0;
  }

  if (opt.command == "verify") {
    char* report = nullptr;
    const qinsim_status status =
        qinsim_verify(opt.perturb.empty() ? nullptr : opt.perturb.c_str(), &report);
    print_and_free(report);
    if (status != QINSIM_OK) print_error(status);
    return exit_code(status);
  }

  if (opt.command != "pass" && opt.command != "simulate" && opt.command != "mc") {
    std::fprintf(stderr, "qinsim: unknown command '%s'\n", opt.command.c_str());
    usage(stderr);
    return 2;
  }

  qinsim_scenario* scenario = nullptr;
  qinsim_status status = make_scenario(opt, &scenario);
  if (status != QINSIM_OK) {
    print_error(status);
    return exit_code(status);
  }

  if (opt.command == "pass") {
    char* report = nullptr;
    status = qinsim_pass(scenario, opt.out_dir.c_str(), &report);
    print_and_free(report);
  } else if (opt.command == "simulate") {
    char* summary = nullptr;
    status = qinsim_simulate(scenario, opt.out_dir.c_str(), &summary);
    print_and_free(summary);
  } else {
    char* seed_value = nullptr;
    status = qinsim_scenario_get(scenario, "sim.seed", &seed_value);
    if (status == QINSIM_OK) {
      char* table = nullptr;
      status = qinsim_mc(scenario, std::strtoull(opt.trials.c_str(), nullptr, 10),
                         std::strtoull(seed_value, nullptr, 10), &table);
      print_and_free(table);
      qinsim_string_free(seed_value);
    }
  }

  if (status != QINSIM_OK) print_error(status);
  qinsim_scenario_free(scenario);
  return exit_code(status);
}
