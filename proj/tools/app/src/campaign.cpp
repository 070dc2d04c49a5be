#include "wbk/app/campaign.hpp"

#include <atomic>
#include <chrono>
#include <thread>
#include <vector>

#include "runners.hpp"
#include "wbk/app/generators.hpp"
#include "wbk/error.hpp"

namespace wbk::app {

std::optional<Theorem> parse_theorem(std::string_view name) {
  if (name == "prop32") return Theorem::prop32;
  if (name == "thm41") return Theorem::thm41;
  if (name == "thm42") return Theorem::thm42;
  if (name == "appendixA") return Theorem::appendix_a;
  if (name == "exhaustion") return Theorem::exhaustion;
  if (name == "agreement") return Theorem::agreement;
  return std::nullopt;
}

std::string_view theorem_name(Theorem t) {
  switch (t) {
    case Theorem::prop32: return "prop32";
    case Theorem::thm41: return "thm41";
    case Theorem::thm42: return "thm42";
    case Theorem::appendix_a: return "appendixA";
    case Theorem::exhaustion: return "exhaustion";
    case Theorem::agreement: return "agreement";
  }
  return "?";
}

Outcome run_instance(Theorem t, std::uint64_t seed, std::size_t index, std::size_t count) {
  const std::uint64_t s = mix_seed(seed + index);
  Gen g(s);
  try {
    switch (t) {
      case Theorem::prop32: return run_prop32(g);
      // First half positive, second half negative.
      case Theorem::thm41: return run_thm41(g, index < (count + 1) / 2);
      case Theorem::thm42: return run_thm42(g, mix_seed(s));
      case Theorem::appendix_a: return run_appendix_a(g);
      case Theorem::exhaustion: return run_exhaustion(g);
      // Every fifth pair is boundary-touching.
      case Theorem::agreement: return run_agreement(g, index % 5 == 0);
    }
  } catch (const std::exception& e) {
    Outcome o;
    o.pass = false;
    o.message = std::string("exception: ") + e.what();
    o.instance = io::Json{{"seed", s}};
    return o;
  }
  throw Error("unknown theorem");
}

CampaignReport run_campaign(Theorem t, std::size_t count, std::uint64_t seed, unsigned jobs, bool timed) {
  if (count == 0) throw PreconditionError("campaign count must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  std::vector<Outcome> outcomes(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) outcomes[i] = run_instance(t, seed, i, count);
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  CampaignReport r;
  r.theorem = t;
  r.seed = seed;
  r.count = count;
  for (std::size_t i = 0; i < count; ++i) {
    Outcome& o = outcomes[i];
    if (o.pass) {
      ++r.passed;
    } else {
      ++r.failed;
      if (!r.first_failure) r.first_failure = Counterexample{i, o.message, std::move(o.instance)};
    }
    for (const auto& [key, v] : o.tallies) r.tallies[key] += v;
  }
  if (timed) r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

io::Json to_json(const CampaignReport& r) {
  io::Json j = {{"theorem", theorem_name(r.theorem)},
                {"seed", r.seed},
                {"count", r.count},
                {"passed", r.passed},
                {"failed", r.failed},
                {"tallies", r.tallies}};
  if (r.first_failure) {
    j["first_counterexample"] = {{"index", r.first_failure->index},
                                 {"message", r.first_failure->message},
                                 {"instance", r.first_failure->instance}};
  } else {
    j["first_counterexample"] = nullptr;
  }
  if (r.wall_seconds) j["wall_seconds"] = *r.wall_seconds;
  return j;
}

}  // namespace wbk::app
