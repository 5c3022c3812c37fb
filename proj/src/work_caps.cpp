#include "guinand/work_caps.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

namespace guinand {

WorkCaps WorkCaps::from_environment() {
  WorkCaps caps;
  const char* raw = std::getenv("GUINAND_WORKCAP");
  if (raw == nullptr || *raw == '\0') return caps;

  std::int64_t value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc{} || ptr != end || value <= 0) {
    throw std::invalid_argument("GUINAND_WORKCAP must be a positive integer, got '" +
                                std::string(raw) + "'");
  }
  caps.max_oracle_points = value;
  caps.max_lattice_points = value;
  return caps;
}

}  // namespace guinand
