// Command-line front end over the commring C API.
//
// Exit codes: 0 success, 1 parse or I/O error, 2 ring axiom violation,
// 3 at least one theorem check failed (verify).

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "commring/commring.h"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitAxiom = 2;
constexpr int kExitFail = 3;

struct RingDeleter {
  void operator()(commring_ring* r) const { commring_ring_free(r); }
};
using RingPtr = std::unique_ptr<commring_ring, RingDeleter>;

struct StringDeleter {
  void operator()(char* s) const { commring_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct CatalogDeleter {
  void operator()(commring_catalog* c) const { commring_catalog_free(c); }
};

int exit_code_for(commring_status st) {
  switch (st) {
    case COMMRING_OK: return kExitOk;
    case COMMRING_ERR_AXIOM: return kExitAxiom;
    default: return kExitIo;
  }
}

std::string witness_text() {
  int64_t w[3];
  commring_last_axiom_witness(w);
  std::string out;
  for (int64_t v : w) {
    if (v < 0) continue;
    out += (out.empty() ? "" : ",") + std::to_string(v);
  }
  return "(" + out + ")";
}

/// Loads a ring, reporting failures on stderr. Returns the exit code.
int load_ring(const std::string& path, RingPtr& out) {
  commring_ring* raw = nullptr;
  const commring_status st = commring_ring_load(path.c_str(), &raw);
  if (st != COMMRING_OK) {
    std::cerr << path << ": " << commring_status_name(st) << ": " << commring_last_error() << "\n";
    if (st == COMMRING_ERR_AXIOM) std::cerr << path << ": witness " << witness_text() << "\n";
    return exit_code_for(st);
  }
  out.reset(raw);
  return kExitOk;
}

bool write_text(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out << text;
    if (!out) return false;
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  return !ec;
}

int cmd_validate(const std::string& path) {
  RingPtr ring;
  if (int rc = load_ring(path, ring)) return rc;
  std::cout << path << ": valid ring of order " << commring_ring_order(ring.get())
            << (commring_ring_is_commutative(ring.get()) ? " (commutative)" : " (non-commutative)")
            << "\n";
  return kExitOk;
}

int cmd_analyze(const std::string& path, const std::string& output, std::size_t cap) {
  RingPtr ring;
  if (int rc = load_ring(path, ring)) return rc;
  char* raw = nullptr;
  size_t fails = 0;
  const commring_status st = commring_analyze(ring.get(), cap, &raw, &fails);
  if (st != COMMRING_OK) {
    std::cerr << path << ": " << commring_status_name(st) << ": " << commring_last_error() << "\n";
    return exit_code_for(st);
  }
  CString report(raw);
  if (output.empty()) {
    std::cout << report.get();
  } else if (!write_text(output, report.get())) {
    std::cerr << "cannot write " << output << "\n";
    return kExitIo;
  } else {
    std::cout << path << ": report written to " << output << " (" << fails << " failed checks)\n";
  }
  return kExitOk;
}

int cmd_catalog(unsigned p, unsigned k, const std::string& filter, const std::string& output,
                bool allow_large) {
  commring_catalog* raw = nullptr;
  commring_status st = commring_catalog_open(p, k, filter == "noncommutative", allow_large, &raw);
  if (st != COMMRING_OK) {
    std::cerr << "catalog: " << commring_status_name(st) << ": " << commring_last_error() << "\n";
    return kExitIo;
  }
  std::unique_ptr<commring_catalog, CatalogDeleter> catalog(raw);
  std::error_code ec;
  fs::create_directories(output, ec);
  if (ec) {
    std::cerr << "cannot create " << output << ": " << ec.message() << "\n";
    return kExitIo;
  }
  for (;;) {
    commring_ring* next = nullptr;
    st = commring_catalog_next(catalog.get(), &next);
    if (st == COMMRING_DONE) break;
    if (st != COMMRING_OK) {
      std::cerr << "catalog: " << commring_last_error() << "\n";
      return kExitIo;
    }
    RingPtr ring(next);
    const fs::path file = fs::path(output) / (std::string(commring_ring_label(ring.get())) + ".ring");
    if (commring_ring_save(ring.get(), file.string().c_str()) != COMMRING_OK) {
      std::cerr << "catalog: " << commring_last_error() << "\n";
      return kExitIo;
    }
  }
  uint64_t scanned = 0, associative = 0, kept = 0;
  commring_catalog_stats(catalog.get(), &scanned, &associative, &kept);
  std::cout << "scanned " << scanned << " associative " << associative << " kept " << kept << "\n";
  return kExitOk;
}

int cmd_family(const std::string& name, unsigned parameter, const std::string& output) {
  commring_ring* raw = nullptr;
  commring_status st = commring_ring_family(name.c_str(), parameter, &raw);
  if (st != COMMRING_OK) {
    std::cerr << "family: " << commring_last_error() << "\n";
    return kExitIo;
  }
  RingPtr ring(raw);
  if (output.empty()) {
    char* text = nullptr;
    commring_ring_to_text(ring.get(), &text);
    CString owned(text);
    std::cout << owned.get();
    return kExitOk;
  }
  st = commring_ring_save(ring.get(), output.c_str());
  if (st != COMMRING_OK) {
    std::cerr << "family: " << commring_last_error() << "\n";
    return kExitIo;
  }
  return kExitOk;
}

std::vector<std::string> expand_inputs(const std::vector<std::string>& inputs, bool& ok) {
  std::vector<std::string> files;
  ok = true;
  for (const auto& in : inputs) {
    std::error_code ec;
    if (fs::is_directory(in, ec)) {
      std::vector<std::string> found;
      for (const auto& entry : fs::directory_iterator(in, ec))
        if (entry.is_regular_file() && entry.path().extension() == ".ring")
          found.push_back(entry.path().string());
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else if (fs::exists(in, ec)) {
      files.push_back(in);
    } else {
      std::cerr << in << ": no such file or directory\n";
      ok = false;
    }
  }
  return files;
}

struct VerifyResult {
  int exit_code = kExitOk;
  size_t fails = 0;
  std::string summary;
  std::string diagnostics;
};

VerifyResult verify_one(const std::string& path, const std::string& output_dir, std::size_t cap) {
  VerifyResult result;
  commring_ring* raw = nullptr;
  commring_status st = commring_ring_load(path.c_str(), &raw);
  if (st != COMMRING_OK) {
    result.exit_code = exit_code_for(st);
    result.diagnostics = path + ": " + commring_status_name(st) + ": " + commring_last_error() + "\n";
    if (st == COMMRING_ERR_AXIOM) result.diagnostics += path + ": witness " + witness_text() + "\n";
    return result;
  }
  RingPtr ring(raw);
  char* report = nullptr;
  char* lines = nullptr;
  st = commring_verify(ring.get(), cap, &report, &lines, &result.fails);
  if (st != COMMRING_OK) {
    result.exit_code = exit_code_for(st);
    result.diagnostics = path + ": " + commring_status_name(st) + ": " + commring_last_error() + "\n";
    return result;
  }
  CString owned_report(report), owned_lines(lines);
  result.summary = owned_lines.get();
  if (!output_dir.empty()) {
    const fs::path target = fs::path(output_dir) / (fs::path(path).stem().string() + ".report.json");
    if (!write_text(target.string(), owned_report.get())) {
      result.exit_code = kExitIo;
      result.diagnostics = "cannot write " + target.string() + "\n";
    }
  }
  return result;
}

int cmd_verify(const std::vector<std::string>& inputs, const std::string& output, std::size_t cap,
               unsigned jobs) {
  bool ok = true;
  const auto files = expand_inputs(inputs, ok);
  if (!ok) return kExitIo;
  if (!output.empty()) {
    std::error_code ec;
    fs::create_directories(output, ec);
    if (ec) {
      std::cerr << "cannot create " << output << ": " << ec.message() << "\n";
      return kExitIo;
    }
  }

  std::vector<VerifyResult> results(files.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t i = cursor++; i < files.size(); i = cursor++)
      results[i] = verify_one(files[i], output, cap);
  };
  const unsigned n_threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(files.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int exit_code = kExitOk;
  size_t total_fails = 0, rings = 0;
  for (const auto& r : results) {
    std::cerr << r.diagnostics;
    std::cout << r.summary;
    total_fails += r.fails;
    if (r.exit_code == kExitOk) ++rings;
    // I/O and parse errors take precedence over axiom violations, which take
    // precedence over failed checks.
    if (r.exit_code == kExitIo || (r.exit_code == kExitAxiom && exit_code != kExitIo))
      exit_code = r.exit_code;
  }
  if (exit_code == kExitOk && total_fails > 0) exit_code = kExitFail;
  std::cout << "verified " << rings << " of " << files.size() << " rings, " << total_fails
            << " failed checks\n";
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite ring commuting-graph analysis and theorem verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", commring_version());

  std::size_t cap = 256;
  unsigned jobs = 1;

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Check that a ring document defines a ring");
  validate->add_option("path", validate_path, "Ring document")->required();

  std::string analyze_path, analyze_output;
  auto* analyze = app.add_subcommand("analyze", "Compute invariants, spectrum, genus and theorem checks");
  analyze->add_option("path", analyze_path, "Ring document")->required();
  analyze->add_option("--output,-o", analyze_output, "Report file (default: standard output)");
  analyze->add_option("--char-poly-cap", cap, "Largest graph for the exact characteristic polynomial");

  unsigned cat_p = 2, cat_k = 2;
  std::string cat_filter = "noncommutative", cat_output;
  bool allow_large = false;
  auto* catalog = app.add_subcommand("catalog", "Enumerate structure-constant rings on (Z_p)^k");
  catalog->add_option("--p", cat_p, "Prime")->required();
  catalog->add_option("--k", cat_k, "Rank")->required();
  catalog->add_option("--filter", cat_filter, "noncommutative or all")
      ->check(CLI::IsMember({"noncommutative", "all"}));
  catalog->add_option("--output,-o", cat_output, "Output directory")->required();
  catalog->add_flag("--allow-large", allow_large, "Permit search spaces up to 2^30 tensors (p=2, k=3)");

  std::vector<std::string> verify_inputs;
  std::string verify_output;
  auto* verify = app.add_subcommand("verify", "Run every theorem check over ring documents");
  verify->add_option("inputs", verify_inputs, "Ring documents or catalog directories")->required();
  verify->add_option("--output,-o", verify_output, "Directory for full reports");
  verify->add_option("--char-poly-cap", cap, "Largest graph for the exact characteristic polynomial");
  verify->add_option("--jobs,-j", jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::string family_name, family_output;
  unsigned family_param = 2;
  auto* family = app.add_subcommand("family", "Write a named ring family member as a document");
  family->add_option("name", family_name, "cyclic | zero | row_matrix | upper_triangular | full_matrix")
      ->required();
  family->add_option("parameter", family_param, "Family parameter")->required();
  family->add_option("--output,-o", family_output, "Document path (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitIo;
  }

  if (*validate) return cmd_validate(validate_path);
  if (*analyze) return cmd_analyze(analyze_path, analyze_output, cap);
  if (*catalog) return cmd_catalog(cat_p, cat_k, cat_filter, cat_output, allow_large);
  if (*verify) return cmd_verify(verify_inputs, verify_output, cap, jobs);
  if (*family) return cmd_family(family_name, family_param, family_output);
  return kExitIo;
}
