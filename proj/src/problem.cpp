#include "twistcent/problem.hpp"

#include <cctype>
#include <charconv>
#include <utility>

namespace twistcent {

namespace {

struct Entry {
  unsigned line = 0;
  std::string key;
  std::string value;
  unsigned value_col = 0;  // 1-based column of the value start
};

std::string_view trim(std::string_view s, unsigned* col_shift = nullptr) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  if (col_shift) *col_shift += static_cast<unsigned>(b);
  return s.substr(b, e - b);
}

std::vector<Entry> tokenize(std::string_view text) {
  std::vector<Entry> entries;
  unsigned line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    ++line_no;
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;

    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    unsigned key_col = 1;
    std::string_view stripped = trim(line, &key_col);
    if (stripped.empty()) continue;

    const std::size_t eq = stripped.find('=');
    if (eq == std::string_view::npos)
      throw ProblemParseError("expected 'key = value'", line_no, key_col);
    unsigned dummy = 0;
    std::string_view key = trim(stripped.substr(0, eq), &dummy);
    unsigned value_col = key_col + static_cast<unsigned>(eq) + 1;
    std::string_view value = trim(stripped.substr(eq + 1), &value_col);
    if (key.empty())
      throw ProblemParseError("empty key", line_no, key_col);
    if (value.empty())
      throw ProblemParseError("empty value for key '" + std::string(key) + "'",
                              line_no, value_col);
    entries.push_back(Entry{line_no, std::string(key), std::string(value),
                            value_col});
  }
  return entries;
}

unsigned parse_uint(const Entry& e) {
  unsigned value = 0;
  const char* begin = e.value.data();
  const char* end = begin + e.value.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end)
    throw ProblemParseError("expected a nonnegative integer for '" + e.key + "'",
                            e.line, e.value_col);
  return value;
}

std::uint64_t parse_u64(const Entry& e) {
  std::uint64_t value = 0;
  const char* begin = e.value.data();
  const char* end = begin + e.value.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end)
    throw ProblemParseError("expected a nonnegative integer for '" + e.key + "'",
                            e.line, e.value_col);
  return value;
}

Cyclotomic parse_entry_expr(std::string_view expr, unsigned order,
                            unsigned line, unsigned col) {
  try {
    return parse_cyclotomic(expr, order);
  } catch (const ExprParseError& err) {
    throw ProblemParseError(err.what(), line,
                            col + static_cast<unsigned>(err.offset));
  }
}

Matrix parse_matrix_at(std::string_view text, unsigned order, unsigned line,
                       unsigned col) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw ProblemParseError(std::string("expected '") + c + "' in matrix literal",
                              line, col + static_cast<unsigned>(pos));
    ++pos;
  };

  std::vector<std::vector<Cyclotomic>> rows;
  expect('[');
  while (true) {
    expect('[');
    std::vector<Cyclotomic> row;
    while (true) {
      skip_ws();
      const std::size_t start = pos;
      while (pos < text.size() && text[pos] != ',' && text[pos] != ']') ++pos;
      if (pos >= text.size())
        throw ProblemParseError("unterminated matrix row", line,
                                col + static_cast<unsigned>(start));
      row.push_back(parse_entry_expr(text.substr(start, pos - start), order,
                                     line, col + static_cast<unsigned>(start)));
      if (text[pos] == ']') {
        ++pos;
        break;
      }
      ++pos;  // consume ','
    }
    rows.push_back(std::move(row));
    skip_ws();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  expect(']');
  skip_ws();
  if (pos != text.size())
    throw ProblemParseError("unexpected trailing input after matrix literal",
                            line, col + static_cast<unsigned>(pos));
  for (const auto& r : rows)
    if (r.size() != rows[0].size())
      throw std::invalid_argument("matrix literal has ragged rows");
  return Matrix::from_rows(std::move(rows));
}

}  // namespace

Matrix parse_matrix_literal(std::string_view text, unsigned order) {
  return parse_matrix_at(text, order, 1, 1);
}

ProblemFile parse_problem(std::string_view text) {
  const std::vector<Entry> entries = tokenize(text);

  ProblemFile out;
  bool have_order = false, have_dim = false, have_family = false;
  std::string family_value;

  auto reject_duplicate = [&](bool seen, const Entry& e) {
    if (seen)
      throw ProblemParseError("duplicate key '" + e.key + "'", e.line, 1);
  };

  // Pass 1: scalar keys; generator and param lines need `order` first.
  for (const Entry& e : entries) {
    if (e.key == "order") {
      reject_duplicate(have_order, e);
      out.order = parse_uint(e);
      if (out.order == 0)
        throw std::invalid_argument("order must be positive");
      have_order = true;
    } else if (e.key == "dim") {
      reject_duplicate(have_dim, e);
      out.dim = parse_uint(e);
      if (out.dim == 0)
        throw std::invalid_argument("dim must be positive");
      have_dim = true;
    } else if (e.key == "family") {
      reject_duplicate(have_family, e);
      family_value = e.value;
      have_family = true;
    } else if (e.key == "expected") {
      reject_duplicate(out.expected.has_value(), e);
      out.expected = e.value;
    } else if (e.key == "seed") {
      reject_duplicate(out.seed.has_value(), e);
      out.seed = parse_u64(e);
    } else if (e.key == "gen" || e.key.rfind("param.", 0) == 0) {
      // handled in pass 2
    } else {
      throw ProblemParseError("unknown key '" + e.key + "'", e.line, 1);
    }
  }

  if (have_family) {
    auto id = family_from_name(family_value);
    if (!id)
      throw std::invalid_argument("unknown family id '" + family_value + "'");
    FamilySpec spec;
    spec.id = *id;
    spec.order = out.order;
    spec.expected = out.expected;
    for (const Entry& e : entries) {
      if (e.key.rfind("param.", 0) != 0) continue;
      const std::string name = e.key.substr(6);
      if (name.empty())
        throw ProblemParseError("empty param name", e.line, 1);
      if (spec.params.count(name))
        throw ProblemParseError("duplicate key '" + e.key + "'", e.line, 1);
      spec.params.emplace(name,
                          parse_entry_expr(e.value, out.order, e.line, e.value_col));
    }
    out.family = std::move(spec);
    out.case_label = family_case_label(*out.family);
  }

  for (const Entry& e : entries) {
    if (e.key == "gen") {
      out.gens.push_back(parse_matrix_at(e.value, out.order, e.line, e.value_col));
    } else if (e.key.rfind("param.", 0) == 0 && !have_family) {
      throw std::invalid_argument("param lines require a family invocation");
    }
  }

  if (out.gens.empty() == !out.family.has_value())
    throw std::invalid_argument(
        "exactly one of a generator list or a family invocation must be present");
  for (const Matrix& g : out.gens)
    if (g.rows() != out.dim || g.cols() != out.dim)
      throw std::invalid_argument("generator dimension mismatch: expected " +
                                  std::to_string(out.dim) + "x" +
                                  std::to_string(out.dim) + ", got " +
                                  std::to_string(g.rows()) + "x" +
                                  std::to_string(g.cols()));
  if (out.family && out.dim != 3)
    throw std::invalid_argument("family invocations are 3x3; dim must be 3");
  return out;
}

GeneratorSet problem_generator_set(const ProblemFile& problem) {
  if (problem.family) return build_family(*problem.family);
  return GeneratorSet(problem.gens);
}

}  // namespace twistcent
