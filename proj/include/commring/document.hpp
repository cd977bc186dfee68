#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "commring/ring.hpp"
#include "commring/theorems.hpp"

namespace commring {

inline constexpr int kRingFormatVersion = 1;
inline constexpr const char* kToolVersion = "commring 1.0.0";

/// Plain-text ring document:
///
///   format_version 1
///   label <text>
///   order <n>
///   add
///   <n rows of n space-separated indices>
///   mul
///   <n rows>
///
/// Blank lines and '#' comments are ignored.
struct RingDocument {
  int format_version = kRingFormatVersion;
  std::string label;
  Table add;
  Table mul;
};

/// Throws Error(Parse) on malformed text. Tables are not validated.
RingDocument parse_ring_document(std::string_view text);

/// Relabels elements so the additive identity is index 0 (when one exists),
/// then validates. Throws AxiomError.
FiniteRing ring_from_document(RingDocument doc);

std::string write_ring_document(const FiniteRing& ring);

/// 64-bit FNV-1a over the bytes, rendered as "fnv1a64:<16 hex digits>".
std::string content_digest(std::string_view bytes);

std::string read_file(const std::string& path);
/// Writes via a temporary file and rename.
void write_file_atomic(const std::string& path, std::string_view contents);

/// Canonical JSON run report (sorted keys, no timestamps), newline terminated.
std::string render_run_report(const RingAnalysis& analysis, const std::vector<TheoremReport>& reports,
                              const std::string& input_digest);

/// Single theorem report as canonical JSON.
std::string render_theorem_report(const TheoremReport& report);

}  // namespace commring
