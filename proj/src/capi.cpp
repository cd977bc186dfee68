#include "commring/commring.h"

#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "commring/document.hpp"
#include "commring/ring_gen.hpp"
#include "commring/theorems.hpp"

struct commring_ring {
  commring::FiniteRing ring;
  std::string digest;
};

struct commring_catalog {
  commring::BilinearRingEnumerator enumerator;
};

namespace {

thread_local std::string last_error;
thread_local std::array<std::int64_t, 3> last_witness{-1, -1, -1};

commring_status status_for(commring::ErrorCode code) {
  using commring::ErrorCode;
  switch (code) {
    case ErrorCode::Parse: return COMMRING_ERR_PARSE;
    case ErrorCode::AxiomViolation: return COMMRING_ERR_AXIOM;
    case ErrorCode::Io: return COMMRING_ERR_IO;
    case ErrorCode::SearchSpaceTooLarge: return COMMRING_ERR_SEARCH_SPACE;
    case ErrorCode::CapExceeded: return COMMRING_ERR_CAP_EXCEEDED;
    case ErrorCode::UnsupportedTopology: return COMMRING_ERR_UNSUPPORTED;
    default: return COMMRING_ERR_INVALID_ARGUMENT;
  }
}

/// Runs fn, translating exceptions into status codes and the thread-local message.
template <typename Fn>
commring_status guarded(Fn&& fn) {
  last_error.clear();
  last_witness = {-1, -1, -1};
  try {
    fn();
    return COMMRING_OK;
  } catch (const commring::AxiomError& e) {
    last_error = e.what();
    last_witness = e.violation().witness;
    return COMMRING_ERR_AXIOM;
  } catch (const commring::Error& e) {
    last_error = e.what();
    return status_for(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return COMMRING_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return COMMRING_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

commring_ring* wrap(commring::FiniteRing ring, std::string digest = {}) {
  if (digest.empty()) digest = commring::content_digest(commring::write_ring_document(ring));
  return new commring_ring{std::move(ring), std::move(digest)};
}

void require(bool cond, const char* what) {
  if (!cond) throw commring::Error(commring::ErrorCode::InvalidArgument, what);
}

}  // namespace

extern "C" {

const char* commring_version(void) { return commring::kToolVersion; }

const char* commring_status_name(commring_status status) {
  switch (status) {
    case COMMRING_OK: return "ok";
    case COMMRING_ERR_PARSE: return "parse-error";
    case COMMRING_ERR_AXIOM: return "axiom-violation";
    case COMMRING_ERR_IO: return "io-error";
    case COMMRING_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case COMMRING_ERR_SEARCH_SPACE: return "search-space-too-large";
    case COMMRING_ERR_CAP_EXCEEDED: return "cap-exceeded";
    case COMMRING_ERR_UNSUPPORTED: return "unsupported-topology";
    case COMMRING_ERR_INTERNAL: return "internal-error";
    case COMMRING_DONE: return "done";
  }
  return "unknown";
}

const char* commring_last_error(void) { return last_error.c_str(); }

void commring_last_axiom_witness(int64_t witness[3]) {
  for (int i = 0; i < 3; ++i) witness[i] = last_witness[i];
}

void commring_string_free(char* s) { delete[] s; }

commring_status commring_ring_from_tables(size_t order, const uint32_t* add, const uint32_t* mul,
                                          const char* label, commring_ring** out) {
  return guarded([&] {
    require(out && add && mul && order > 0, "null argument or zero order");
    std::vector<commring::Element> a(add, add + order * order), m(mul, mul + order * order);
    auto ring = commring::FiniteRing::validate(commring::Table(order, std::move(a)),
                                               commring::Table(order, std::move(m)),
                                               label ? label : "");
    *out = wrap(std::move(ring));
  });
}

commring_status commring_ring_family(const char* family, uint32_t parameter, commring_ring** out) {
  return guarded([&] {
    require(out && family, "null argument");
    *out = wrap(commring::family_ring(family, parameter));
  });
}

commring_status commring_ring_parse(const char* text, size_t length, commring_ring** out) {
  return guarded([&] {
    require(out && text, "null argument");
    std::string_view bytes(text, length);
    auto ring = commring::ring_from_document(commring::parse_ring_document(bytes));
    *out = wrap(std::move(ring), commring::content_digest(bytes));
  });
}

commring_status commring_ring_load(const char* path, commring_ring** out) {
  return guarded([&] {
    require(out && path, "null argument");
    const std::string bytes = commring::read_file(path);
    auto ring = commring::ring_from_document(commring::parse_ring_document(bytes));
    *out = wrap(std::move(ring), commring::content_digest(bytes));
  });
}

commring_status commring_ring_to_text(const commring_ring* ring, char** out) {
  return guarded([&] {
    require(ring && out, "null argument");
    *out = dup_string(commring::write_ring_document(ring->ring));
  });
}

commring_status commring_ring_save(const commring_ring* ring, const char* path) {
  return guarded([&] {
    require(ring && path, "null argument");
    commring::write_file_atomic(path, commring::write_ring_document(ring->ring));
  });
}

size_t commring_ring_order(const commring_ring* ring) { return ring ? ring->ring.order() : 0; }

const char* commring_ring_label(const commring_ring* ring) {
  return ring ? ring->ring.label().c_str() : "";
}

const char* commring_ring_digest(const commring_ring* ring) { return ring ? ring->digest.c_str() : ""; }

int commring_ring_is_commutative(const commring_ring* ring) {
  return ring && ring->ring.is_commutative() ? 1 : 0;
}

void commring_ring_free(commring_ring* ring) { delete ring; }

commring_status commring_verify(const commring_ring* ring, size_t char_poly_cap, char** report_json,
                                char** summary_lines, size_t* fail_count) {
  return guarded([&] {
    require(ring != nullptr, "null ring");
    commring::CheckOptions options;
    options.char_poly_cap = char_poly_cap;
    const auto analysis = commring::analyze_ring(ring->ring, options);
    const auto reports = commring::run_all(analysis, options);
    if (fail_count) *fail_count = commring::count_verdicts(reports, commring::Verdict::Fail);
    if (report_json) *report_json = dup_string(commring::render_run_report(analysis, reports, ring->digest));
    if (summary_lines) {
      std::ostringstream lines;
      for (const auto& r : reports)
        lines << r.ring_label << "\t" << commring::to_string(r.claim) << "\t"
              << commring::to_string(r.verdict) << "\n";
      *summary_lines = dup_string(lines.str());
    }
  });
}

commring_status commring_analyze(const commring_ring* ring, size_t char_poly_cap, char** report_json,
                                 size_t* fail_count) {
  return commring_verify(ring, char_poly_cap, report_json, nullptr, fail_count);
}

commring_status commring_catalog_open(uint32_t p, uint32_t k, int noncommutative_only,
                                      int allow_large, commring_catalog** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    const auto filter =
        noncommutative_only ? commring::CatalogFilter::NonCommutative : commring::CatalogFilter::All;
    *out = new commring_catalog{commring::BilinearRingEnumerator(p, k, filter, allow_large != 0)};
  });
}

commring_status commring_catalog_next(commring_catalog* catalog, commring_ring** out) {
  bool done = false;
  const commring_status st = guarded([&] {
    require(catalog && out, "null argument");
    auto entry = catalog->enumerator.next();
    if (!entry) {
      done = true;
      *out = nullptr;
      return;
    }
    *out = wrap(std::move(entry->ring));
  });
  return st == COMMRING_OK && done ? COMMRING_DONE : st;
}

void commring_catalog_stats(const commring_catalog* catalog, uint64_t* scanned, uint64_t* associative,
                            uint64_t* kept) {
  const commring::EnumerationStats empty;
  const auto& s = catalog ? catalog->enumerator.stats() : empty;
  if (scanned) *scanned = s.scanned;
  if (associative) *associative = s.associative;
  if (kept) *kept = s.kept;
}

void commring_catalog_free(commring_catalog* catalog) { delete catalog; }

}  // extern "C"
