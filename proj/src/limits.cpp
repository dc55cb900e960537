#include "stableset/limits.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>

namespace stableset {

std::size_t default_max_n() {
    const char* env = std::getenv("STABLESET_MAX_N");
    if (env == nullptr) return kDefaultMaxN;
    std::size_t value = 0;
    const char* end = env + std::strlen(env);
    const auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc{} || ptr != end || value == 0) return kDefaultMaxN;
    return std::min(value, kHardMaxN);
}

std::size_t resolve_max_n(std::size_t requested) {
    return std::min(requested == 0 ? default_max_n() : requested, kHardMaxN);
}

}  // namespace stableset
