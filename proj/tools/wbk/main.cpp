#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "wbk/app/campaign.hpp"
#include "wbk/app/check.hpp"
#include "wbk/app/render.hpp"
#include "wbk/error.hpp"

namespace {

// Exit codes: the relation holds, it fails, or the input/usage was bad.
constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;

bool timestamps_disabled() {
  const char* v = std::getenv("WBK_NO_TIMESTAMP");
  return v != nullptr && std::string(v) == "1";
}

int cmd_check(const std::string& sub, const std::string& input) {
  const auto rel = wbk::app::parse_relation(sub);
  if (!rel) throw wbk::app::UsageError("unknown relation '" + sub + "'");
  const auto inst = wbk::app::decode_instance(wbk::app::read_json_file(input));
  const wbk::app::CheckResult r = wbk::app::run_check(*rel, inst);
  std::cout << (r.holds ? "true" : "false") << "\n" << r.certificate.dump(2) << "\n";
  return r.holds ? kHolds : kFails;
}

int cmd_verify(const std::string& name, std::size_t count, std::uint64_t seed, unsigned jobs) {
  const auto theorem = wbk::app::parse_theorem(name);
  if (!theorem) throw wbk::app::UsageError("unknown theorem '" + name + "'");
  const auto report = wbk::app::run_campaign(*theorem, count, seed, jobs, !timestamps_disabled());
  std::cout << wbk::app::to_json(report).dump(2) << "\n";
  return report.failed == 0 ? kHolds : kFails;
}

int cmd_render(const std::string& input, const std::string& output, const std::string& format) {
  const auto fmt = wbk::app::parse_format(format);
  if (!fmt) throw wbk::app::UsageError("unknown format '" + format + "'");
  const auto inst = wbk::app::decode_instance(wbk::app::read_json_file(input));
  const std::string text = wbk::app::render(inst, *fmt);
  std::ofstream out(output, std::ios::binary);
  if (!out) throw wbk::app::UsageError("cannot write '" + output + "'");
  out << text;
  return out.good() ? kHolds : kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact way-below decisions and theorem campaigns"};
  app.require_subcommand(1);

  std::string relation, input, output, format = "svg", theorem;
  std::size_t count = 100;
  std::uint64_t seed = 1;
  unsigned jobs = 1;

  auto* check = app.add_subcommand("check", "Decide a relation on an instance file");
  check->add_option("relation", relation, "region-ll | cuntz-ll | poset-ll | ideal-ll")->required();
  check->add_option("-i,--input", input, "Instance JSON")->required();

  auto* verify = app.add_subcommand("verify", "Run a seeded verification campaign");
  verify->add_option("theorem", theorem, "prop32 | thm41 | thm42 | appendixA | exhaustion | agreement")->required();
  verify->add_option("--count", count, "Number of instances")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "Campaign seed");
  verify->add_option("--jobs", jobs, "Worker threads (0 = hardware concurrency)");

  auto* render = app.add_subcommand("render", "Draw an instance as SVG or CSV");
  render->add_option("-i,--input", input, "Instance JSON")->required();
  render->add_option("-o,--output", output, "Output file")->required();
  render->add_option("--format", format, "svg | csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*check) return cmd_check(relation, input);
    if (*verify) {
      if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
      return cmd_verify(theorem, count, seed, jobs);
    }
    if (*render) return cmd_render(input, output, format);
  } catch (const wbk::app::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const wbk::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const wbk::PreconditionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const wbk::DimensionMismatch& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    // Internal consistency failures: the relation could not be certified.
    std::cerr << "error: " << e.what() << "\n";
    return kFails;
  }
  return kUsage;
}
