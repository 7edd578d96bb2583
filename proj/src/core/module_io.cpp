#include "core/module_io.hpp"

#include <charconv>
#include <utility>

#include "core/error.hpp"

namespace zprmod {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::int64_t> parse_integers(std::string_view line, std::size_t lineno) {
  std::vector<std::int64_t> out;
  const char* p = line.data();
  const char* end = line.data() + line.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
    if (p == end) break;
    std::int64_t value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc() || (next < end && *next != ' ' && *next != '\t'))
      fail(errc::parse_error,
           "line " + std::to_string(lineno) + ": expected a base-10 integer");
    out.push_back(value);
    p = next;
  }
  return out;
}

struct Line {
  std::string_view text;
  std::size_t number;
};

std::vector<Line> data_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t lineno = 0;
  while (!text.empty()) {
    ++lineno;
    std::size_t nl = text.find('\n');
    std::string_view raw =
        nl == std::string_view::npos ? text : text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    out.push_back({line, lineno});
  }
  return out;
}

}  // namespace

ParsedModule parse_module_text(std::string_view text) {
  auto lines = data_lines(text);
  if (lines.empty())
    fail(errc::parse_error, "line 1: missing \"p r n\" header");

  auto header = parse_integers(lines[0].text, lines[0].number);
  if (header.size() != 3)
    fail(errc::parse_error, "line " + std::to_string(lines[0].number) +
                                ": header must be three integers \"p r n\"");
  Ring ring(header[0], header[1]);
  if (header[2] < 1)
    fail(errc::parse_error, "line " + std::to_string(lines[0].number) +
                                ": ambient length n must be at least 1");
  const std::size_t n = static_cast<std::size_t>(header[2]);

  ParsedModule parsed{ring, n, {}};
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto values = parse_integers(lines[i].text, lines[i].number);
    if (values.size() != n)
      fail(errc::parse_error, "line " + std::to_string(lines[i].number) +
                                  ": expected " + std::to_string(n) +
                                  " entries, got " + std::to_string(values.size()));
    parsed.generators.emplace_back(ring, std::move(values));
  }
  return parsed;
}

Vec parse_vector_literal(const Ring& ring, std::size_t n, std::string_view text) {
  auto values = parse_integers(trim(text), 1);
  if (values.size() != n)
    fail(errc::parse_error, "vector literal must have exactly " +
                                std::to_string(n) + " entries");
  return Vec(ring, std::move(values));
}

std::string format_vector(const Vec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string format_vectors_file(const Ring& ring, std::size_t n,
                                const std::vector<Vec>& rows) {
  std::string out = std::to_string(ring.prime());
  out += ' ';
  out += std::to_string(ring.exponent());
  out += ' ';
  out += std::to_string(n);
  out += '\n';
  for (const Vec& row : rows) {
    out += format_vector(row);
    out += '\n';
  }
  return out;
}

std::string format_module_file(const Module& m) {
  return format_vectors_file(m.ring(), m.length(), m.standard_form().rows());
}

}  // namespace zprmod
