#pragma once

#include "wbk/app/campaign.hpp"
#include "wbk/app/generators.hpp"

// One generated instance per call; each runner draws only from `g`.
namespace wbk::app {

Outcome run_prop32(Gen& g);
Outcome run_thm41(Gen& g, bool positive);
Outcome run_thm42(Gen& g, std::uint64_t audit_seed);
Outcome run_appendix_a(Gen& g);
Outcome run_exhaustion(Gen& g);
Outcome run_agreement(Gen& g, bool adversarial);

}  // namespace wbk::app
