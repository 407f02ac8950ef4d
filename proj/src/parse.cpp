#include "oddwedge/parse.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace oddwedge {

namespace {

[[noreturn]] void fail(const std::string& text) {
  throw std::invalid_argument("malformed complex literal: '" + text + "'");
}

// Reads a signed decimal number at pos; a bare sign followed by 'i' counts
// as +-1 (for "i", "+i", "-i").
double read_number(const std::string& s, size_t& pos, const std::string& orig) {
  size_t start = pos;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
  if (pos < s.size() && s[pos] == 'i')
    return (start < pos && s[start] == '-') ? -1.0 : 1.0;
  const char* begin = s.c_str() + start;
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || !std::isfinite(v)) fail(orig);
  pos = start + static_cast<size_t>(end - begin);
  return v;
}

}  // namespace

std::complex<double> parse_complex(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) fail(text);

  size_t pos = 0;
  const double first = read_number(s, pos, text);
  if (pos < s.size() && s[pos] == 'i') {
    ++pos;
    if (pos != s.size()) fail(text);
    return {0.0, first};  // pure imaginary
  }
  if (pos == s.size()) return {first, 0.0};
  if (s[pos] != '+' && s[pos] != '-') fail(text);
  const double second = read_number(s, pos, text);
  if (pos >= s.size() || s[pos] != 'i') fail(text);
  ++pos;
  if (pos != s.size()) fail(text);
  return {first, second};
}

std::vector<std::complex<double>> parse_complex_list(const std::string& text) {
  std::vector<std::complex<double>> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    const std::string item =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(parse_complex(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace oddwedge
