#pragma once

#include <optional>
#include <string_view>

#include "wbk/app/instance.hpp"

namespace wbk::app {

enum class Relation { region, cuntz, poset, ideal };

std::optional<Relation> parse_relation(std::string_view name);

struct CheckResult {
  bool holds = false;
  io::Json certificate;
};

/// Decides the relation named by the subcommand on a parsed instance. The
/// instance's kind must match; otherwise UsageError.
CheckResult run_check(Relation rel, const Instance& inst);

}  // namespace wbk::app
