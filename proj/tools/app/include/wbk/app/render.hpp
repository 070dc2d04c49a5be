#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "wbk/app/instance.hpp"

namespace wbk::app {

enum class RenderFormat { svg, csv };

std::optional<RenderFormat> parse_format(std::string_view name);

/// Draws region, ideal, Cuntz and function instances in one or two
/// dimensions. Output is a pure function of the instance. Throws
/// UsageError for higher dimensions or instances with no picture.
std::string render(const Instance& inst, RenderFormat format);

}  // namespace wbk::app
