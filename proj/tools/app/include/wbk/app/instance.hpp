#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "wbk/cuntz.hpp"
#include "wbk/error.hpp"
#include "wbk/ideal.hpp"
#include "wbk/json.hpp"
#include "wbk/poset.hpp"

namespace wbk::app {

/// Bad command-line usage or an input the command cannot handle.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct RegionInstance {
  Region u, v;
  Space k;
};

struct CuntzInstance {
  PositiveElement a, b;
};

struct PosetInstance {
  FinitePoset poset;
  std::size_t x = 0, y = 0;
};

struct IdealInstance {
  Ideal i, j;
};

/// A function with cutdown levels to draw.
struct FunctionInstance {
  PLFunction f;
  std::vector<Rational> levels;
};

using Instance = std::variant<RegionInstance, CuntzInstance, PosetInstance, IdealInstance, FunctionInstance>;

/// Kind tags: region-ll, cuntz-ll, poset-ll, ideal-ll, function.
Instance decode_instance(const io::Json& j);
io::Json encode_instance(const Instance& inst);
std::string_view kind_of(const Instance& inst);

/// Reads and parses a JSON file; ParseError on I/O or syntax problems.
io::Json read_json_file(const std::string& path);

}  // namespace wbk::app
