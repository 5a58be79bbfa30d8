#pragma once

#include <optional>
#include <string>

#include "ring.hpp"

namespace ringlab {

// On-disk table cache format version; a bump invalidates existing files.
constexpr uint32_t kCacheFormatVersion = 1;

// File name (without directory) for a canonical expression.
std::string cache_file_name(const std::string& canonical_expr);

// Loads a cached table ring. Returns nullopt on any miss: absent file,
// version mismatch, or corruption (the latter sets *warning).
std::optional<FiniteRing> cache_load(const std::string& dir,
                                     const std::string& canonical_expr,
                                     std::string* warning = nullptr);

// Stores a table-backed ring, atomically (temp file + rename).
void cache_store(const std::string& dir, const std::string& canonical_expr,
                 const FiniteRing& ring);

}  // namespace ringlab
