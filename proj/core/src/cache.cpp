#include "counit/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace counit {

namespace {

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

std::string default_cache_dir() {
  const char* env = std::getenv("COUNIT_RESOLVE_CACHE");
  return env ? env : "";
}

void cache_save(const PresentedAlgebra& A, const std::string& path) {
  std::string body = A.serialize();
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(errc::validation_error, "cannot write cache file " + tmp);
    out << body << "checksum " << hex64(fnv1a(body)) << "\n";
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    fail(errc::validation_error, "cannot move cache file into place: " + path);
}

PresentedAlgebra cache_load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::corrupt_cache, "cannot open cache file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  auto pos = text.rfind("checksum ");
  if (pos == std::string::npos || pos == 0) fail(errc::corrupt_cache, "missing checksum");
  std::string body = text.substr(0, pos);
  std::string sumline = text.substr(pos);
  std::istringstream ls(sumline);
  std::string key, value, extra;
  ls >> key >> value;
  if (ls >> extra) fail(errc::corrupt_cache, "trailing data after checksum in " + path);
  if (key != "checksum" || value != hex64(fnv1a(body)))
    fail(errc::corrupt_cache, "checksum mismatch in " + path);
  return PresentedAlgebra::deserialize(body);
}

PresentedAlgebra cached_complete(const Alphabet& alphabet, const std::vector<NCPoly>& relations,
                                 int D, const std::string& cache_dir, CacheOutcome* outcome) {
  if (cache_dir.empty()) {
    return PresentedAlgebra::complete(alphabet, relations, D);
  }
  // Key = hash of (field, alphabet, relations, D) as computed on a throwaway
  // shell algebra; completion determinism makes hits bit-identical.
  FieldKind kind = relations.empty() ? FieldKind::rationals : relations.front().kind();
  std::ostringstream keysrc;
  keysrc << field_kind_name(kind) << "|D" << D << "|";
  for (const auto& n : alphabet.names) keysrc << n << ",";
  for (const auto& r : relations) {
    for (const auto& [w, c] : r.terms()) {
      keysrc << c.str() << ":";
      for (Letter g : w.l) keysrc << g << ".";
      keysrc << ";";
    }
    keysrc << "/";
  }
  std::string path = cache_dir + "/" + hex64(fnv1a(keysrc.str())) + ".gb";
  if (outcome) outcome->path = path;
  std::ifstream probe(path);
  if (probe.good()) {
    probe.close();
    try {
      PresentedAlgebra A = cache_load(path);
      if (A.truncation_degree() == D && A.alphabet().names == alphabet.names &&
          A.relations().size() == relations.size()) {
        if (outcome) outcome->used_cache = true;
        return A;
      }
      if (outcome) outcome->warning = "cache key collision; recomputing";
    } catch (const Error& e) {
      if (outcome) outcome->warning = std::string("cache unusable (") + e.what() + "); recomputing";
    }
  }
  PresentedAlgebra A = PresentedAlgebra::complete(alphabet, relations, D);
  cache_save(A, path);
  if (outcome) outcome->wrote_cache = true;
  return A;
}

}  // namespace counit
