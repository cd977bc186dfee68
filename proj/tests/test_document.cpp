#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>

#include "commring/document.hpp"
#include "commring/ring_gen.hpp"
#include "json.hpp"

using namespace commring;
namespace fs = std::filesystem;

namespace {

const char* kZ2 =
    "# two-element field\n"
    "format_version 1\n"
    "label z2\n"
    "order 2\n"
    "\n"
    "add\n"
    "0 1\n"
    "1 0\n"
    "mul\n"
    "0 0\n"
    "0 1\n";

ErrorCode parse_error_code(const std::string& text) {
  try {
    (void)parse_ring_document(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("parse a small document") {
  const auto doc = parse_ring_document(kZ2);
  CHECK(doc.label == "z2");
  CHECK(doc.add.order() == 2);
  const auto ring = ring_from_document(doc);
  CHECK(ring.label() == "z2");
  CHECK(ring.mul(1, 1) == 1);
}

TEST_CASE("malformed documents are parse errors") {
  CHECK(parse_error_code("") == ErrorCode::Parse);
  CHECK(parse_error_code("format_version 2\nlabel x\norder 1\nadd\n0\nmul\n0\n") == ErrorCode::Parse);
  CHECK(parse_error_code("format_version 1\nlabel x\norder 2\nadd\n0 1\nmul\n0 0\n0 0\n") ==
        ErrorCode::Parse);
  CHECK(parse_error_code("format_version 1\nlabel x\norder 2\nadd\n0 1\n1 zero\nmul\n0 0\n0 0\n") ==
        ErrorCode::Parse);
  CHECK(parse_error_code("format_version 1\nlabel x\norder 1\nadd\n0\nmul\n0\ntrailing\n") ==
        ErrorCode::Parse);
}

TEST_CASE("additive identity is moved to index 0") {
  // Z_2 written with the zero element as index 1.
  const auto doc = parse_ring_document(
      "format_version 1\nlabel swapped\norder 2\nadd\n1 0\n0 1\nmul\n0 1\n1 1\n");
  const auto ring = ring_from_document(doc);
  CHECK(ring.add(0, 1) == 1);
  CHECK(ring.mul(1, 1) == 1);
  CHECK(ring.mul(0, 1) == 0);
}

TEST_CASE("axiom violations surface from documents") {
  auto doc = parse_ring_document(
      "format_version 1\nlabel bad\norder 3\nadd\n0 1 2\n1 2 0\n2 0 1\nmul\n0 0 0\n0 2 1\n0 0 0\n");
  try {
    (void)ring_from_document(doc);
    FAIL("expected an axiom violation");
  } catch (const AxiomError& e) {
    CHECK(e.violation().witness == std::array<std::int64_t, 3>{1, 1, 1});
    CHECK(std::string(e.what()).find("mul-not-associative") != std::string::npos);
  }
}

TEST_CASE("write and parse round trip") {
  for (const auto& ring : {row_matrix_ring(3), upper_triangular_ring(2), full_matrix_ring(2)}) {
    const auto text = write_ring_document(ring);
    const auto back = ring_from_document(parse_ring_document(text));
    CHECK(back.label() == ring.label());
    CHECK(back.add_table() == ring.add_table());
    CHECK(back.mul_table() == ring.mul_table());
    CHECK(write_ring_document(back) == text);
  }
}

TEST_CASE("content digest") {
  CHECK(content_digest("") == "fnv1a64:cbf29ce484222325");
  CHECK(content_digest("a") == "fnv1a64:af63dc4c8601ec8c");
  CHECK(content_digest(kZ2) != content_digest(std::string(kZ2) + " "));
}

TEST_CASE("files are written atomically and read back") {
  const auto dir = fs::temp_directory_path() / "commring_document_test";
  fs::create_directories(dir);
  const auto path = (dir / "z2.ring").string();
  write_file_atomic(path, kZ2);
  CHECK(read_file(path) == kZ2);
  CHECK_THROWS_AS((void)read_file((dir / "missing.ring").string()), Error);
  fs::remove_all(dir);
}

TEST_CASE("run report is canonical JSON") {
  const auto ring = row_matrix_ring(2);
  const auto a = analyze_ring(ring);
  const auto reports = run_all(a);
  const auto text = render_run_report(a, reports, content_digest(write_ring_document(ring)));
  CHECK(text.back() == '\n');
  CHECK(text == render_run_report(a, reports, content_digest(write_ring_document(ring))));

  const auto j = nlohmann::json::parse(text);
  CHECK(j["ring_label"] == "row_matrix_2");
  CHECK(j["invariants"]["commuting_probability"] == "5/8");
  CHECK(j["invariants"]["centralizer_count"] == 4);
  CHECK(j["spectrum"]["text"] == "{0^3}");
  CHECK(j["genus"]["genus"] == 0);
  CHECK(j["theorems"].size() == 12);
  CHECK(j["summary"]["fail"] == 0);
  // Keys are emitted sorted so the dump is reproducible byte for byte.
  CHECK(j.dump(2) + "\n" == text);
}

TEST_CASE("run report for a commutative ring") {
  const auto a = analyze_ring(cyclic_ring(5));
  const auto j = nlohmann::json::parse(render_run_report(a, run_all(a), "fnv1a64:0"));
  CHECK(j["graph"]["vertices"] == 0);
  CHECK(j["spectrum"]["eigenvalues"].empty());
  CHECK(j["summary"]["pass"] == 0);
  CHECK(j["summary"]["fail"] == 0);
}
