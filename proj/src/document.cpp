#include "commring/document.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace commring {

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  /// Next non-blank line with comments stripped; false at end of input.
  bool next(std::string& line) {
    while (pos_ <= text_.size() && pos_ != std::string_view::npos) {
      const std::size_t end = text_.find('\n', pos_);
      std::string_view raw = text_.substr(pos_, end == std::string_view::npos ? end : end - pos_);
      pos_ = end == std::string_view::npos ? std::string_view::npos : end + 1;
      ++line_no_;
      if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
      const auto first = raw.find_first_not_of(" \t\r");
      if (first == std::string_view::npos) continue;
      const auto last = raw.find_last_not_of(" \t\r");
      line = std::string(raw.substr(first, last - first + 1));
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::Parse, "line " + std::to_string(line_no_) + ": " + msg);
  }

  std::string expect_line(const char* what) {
    std::string line;
    if (!next(line)) fail(std::string("unexpected end of document, expected ") + what);
    return line;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

std::pair<std::string, std::string> split_key(const std::string& line) {
  const auto space = line.find_first_of(" \t");
  if (space == std::string::npos) return {line, ""};
  const auto rest = line.find_first_not_of(" \t", space);
  return {line.substr(0, space), rest == std::string::npos ? "" : line.substr(rest)};
}

long parse_integer(LineReader& reader, const std::string& token) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(token, &used);
  } catch (const std::exception&) {
    reader.fail("expected an integer, got '" + token + "'");
  }
  if (used != token.size()) reader.fail("expected an integer, got '" + token + "'");
  return value;
}

Table read_matrix(LineReader& reader, std::size_t n, const char* name) {
  std::vector<Element> cells;
  cells.reserve(n * n);
  for (std::size_t row = 0; row < n; ++row) {
    std::istringstream in(reader.expect_line(name));
    std::string token;
    std::size_t count = 0;
    while (in >> token) {
      const long v = parse_integer(reader, token);
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        reader.fail(std::string(name) + " entry " + token + " outside 0.." + std::to_string(n - 1));
      cells.push_back(static_cast<Element>(v));
      ++count;
    }
    if (count != n)
      reader.fail(std::string(name) + " row has " + std::to_string(count) + " entries, expected " +
                  std::to_string(n));
  }
  return Table(n, std::move(cells));
}

}  // namespace

RingDocument parse_ring_document(std::string_view text) {
  LineReader reader(text);
  RingDocument doc;
  bool have_version = false, have_order = false;
  std::size_t order = 0;
  bool have_add = false, have_mul = false;

  std::string line;
  while (reader.next(line)) {
    auto [key, value] = split_key(line);
    if (key == "format_version") {
      doc.format_version = static_cast<int>(parse_integer(reader, value));
      if (doc.format_version != kRingFormatVersion)
        reader.fail("unsupported format_version " + value);
      have_version = true;
    } else if (key == "label") {
      doc.label = value;
    } else if (key == "order") {
      const long n = parse_integer(reader, value);
      if (n < 1 || n > 100000) reader.fail("order out of range");
      order = static_cast<std::size_t>(n);
      have_order = true;
    } else if (key == "add" || key == "mul") {
      if (!have_order) reader.fail("'order' must precede the tables");
      if (!value.empty()) reader.fail("unexpected text after '" + key + "'");
      if (key == "add") {
        doc.add = read_matrix(reader, order, "add");
        have_add = true;
      } else {
        doc.mul = read_matrix(reader, order, "mul");
        have_mul = true;
      }
    } else {
      reader.fail("unknown key '" + key + "'");
    }
  }
  if (!have_version) reader.fail("missing format_version");
  if (!have_add || !have_mul) reader.fail("document needs both add and mul tables");
  return doc;
}

FiniteRing ring_from_document(RingDocument doc) {
  const std::size_t n = doc.add.order();
  std::optional<Element> identity;
  for (Element e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a) ok = doc.add(e, a) == a && doc.add(a, e) == a;
    if (ok) identity = e;
  }
  if (identity && *identity != 0) {
    // swap labels 0 <-> identity
    const Element z = *identity;
    auto relabel = [z](Element x) { return x == z ? 0 : x == 0 ? z : x; };
    Table add(n), mul(n);
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        add.at(relabel(a), relabel(b)) = relabel(doc.add(a, b));
        mul.at(relabel(a), relabel(b)) = relabel(doc.mul(a, b));
      }
    doc.add = std::move(add);
    doc.mul = std::move(mul);
  }
  return FiniteRing::validate(std::move(doc.add), std::move(doc.mul), std::move(doc.label));
}

std::string write_ring_document(const FiniteRing& ring) {
  std::ostringstream out;
  const std::size_t n = ring.order();
  out << "format_version " << kRingFormatVersion << "\n";
  out << "label " << ring.label() << "\n";
  out << "order " << n << "\n";
  auto table = [&](const char* name, const Table& t) {
    out << name << "\n";
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) out << (b ? " " : "") << t(a, b);
      out << "\n";
    }
  };
  table("add", ring.add_table());
  table("mul", ring.mul_table());
  return out.str();
}

std::string content_digest(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::Io, "error reading '" + path + "'");
  return buf.str();
}

void write_file_atomic(const std::string& path, std::string_view contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot write '" + tmp + "'");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error(ErrorCode::Io, "error writing '" + tmp + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot rename '" + tmp + "' to '" + path + "': " + ec.message());
}

namespace {

using nlohmann::json;

json theorem_json(const TheoremReport& r) {
  return json{{"claim_id", to_string(r.claim)},
              {"ring_label", r.ring_label},
              {"hypothesis_satisfied", r.hypothesis_satisfied},
              {"predicted", r.predicted},
              {"observed", r.observed},
              {"verdict", to_string(r.verdict)},
              {"notes", r.notes}};
}

json spectrum_json(const SpectrumResult& s) {
  json eigen = json::array();
  for (const auto& e : s.eigenvalues) eigen.push_back({{"value", e.value}, {"multiplicity", e.multiplicity}});
  return json{{"eigenvalues", eigen},
              {"is_integral", s.is_integral},
              {"residual", s.residual.str()},
              {"text", s.str()}};
}

}  // namespace

std::string render_theorem_report(const TheoremReport& report) {
  return theorem_json(report).dump(2) + "\n";
}

std::string render_run_report(const RingAnalysis& a, const std::vector<TheoremReport>& reports,
                              const std::string& input_digest) {
  json inv{{"order", a.ring.order()},
           {"commutative", a.commutative},
           {"center_size", a.center.size()},
           {"centralizer_count", a.family.count()},
           {"commuting_probability", a.probability.str()},
           {"quotient", a.quotient.invariant_factors}};
  inv["cc_ring"] = a.cc ? json(a.cc->is_cc) : json(nullptr);

  json graph{{"vertices", a.graph.vertex_count()}, {"edges", a.graph.edge_count()}};
  if (const auto* d = std::get_if<CliqueDecomposition>(&a.decomposition)) {
    graph["clique_union"] = d->sizes;
  } else {
    graph["clique_union"] = nullptr;
    graph["not_clique_union_witness"] = std::get<NotCliqueUnion>(a.decomposition).witness;
  }

  json spectrum;
  if (a.char_poly_spectrum) {
    spectrum = spectrum_json(*a.char_poly_spectrum);
    spectrum["path"] = "char_poly";
  } else if (a.decomposition_spectrum) {
    spectrum = spectrum_json(*a.decomposition_spectrum);
    spectrum["path"] = "clique_union";
  } else {
    spectrum = json{{"path", "none"}, {"error", "cap-exceeded"}};
  }

  json genus;
  if (a.genus)
    genus = json{{"genus", a.genus->genus}, {"classification", to_string(a.genus->classification)}};
  else
    genus = json{{"error", "unsupported-topology"}};

  json theorems = json::array();
  for (const auto& r : reports) theorems.push_back(theorem_json(r));

  json doc{{"tool_version", kToolVersion},
           {"input_digest", input_digest},
           {"ring_label", a.ring.label()},
           {"invariants", inv},
           {"graph", graph},
           {"spectrum", spectrum},
           {"genus", genus},
           {"theorems", theorems},
           {"summary",
            {{"pass", count_verdicts(reports, Verdict::Pass)},
             {"fail", count_verdicts(reports, Verdict::Fail)},
             {"vacuous", count_verdicts(reports, Verdict::Vacuous)}}}};
  return doc.dump(2) + "\n";
}

}  // namespace commring
