#pragma once

#include <string>

#include "counit/presented_algebra.hpp"

namespace counit {

// Gröbner cache files: the algebra dump plus a trailing checksum line, written
// atomically (temp + rename). Cache keys combine field, relations hash and D.

std::string default_cache_dir();  // $COUNIT_RESOLVE_CACHE, else empty (disabled)

void cache_save(const PresentedAlgebra& A, const std::string& path);
PresentedAlgebra cache_load(const std::string& path);  // CorruptCache / CacheVersionMismatch

struct CacheOutcome {
  bool used_cache = false;
  bool wrote_cache = false;
  std::string path;
  std::string warning;
};

// Completion with a read-through cache; an unreadable or stale entry is
// recomputed (and rewritten) with a warning in the outcome.
PresentedAlgebra cached_complete(const Alphabet& alphabet, const std::vector<NCPoly>& relations,
                                 int D, const std::string& cache_dir, CacheOutcome* outcome);

}  // namespace counit
