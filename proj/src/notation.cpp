#include <cctype>
#include <charconv>
#include <cstdlib>

#include "tanglekit/io.hpp"

namespace tanglekit {

namespace {

[[noreturn]] void parse_error(std::size_t pos, const std::string& what) {
  throw Error("parse error at column " + std::to_string(pos + 1) + ": " + what);
}

}  // namespace

RationalTangle parse_tangle_notation(const std::string& s) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip_ws();
  if (i >= s.size() || s[i] != '[') parse_error(i, "expected '['");
  ++i;
  std::vector<std::int64_t> entries;
  bool infinity = false;
  while (true) {
    skip_ws();
    if (i >= s.size()) parse_error(i, "expected ']'");
    if (s[i] == ']') {
      ++i;
      break;
    }
    if (s.compare(i, 3, "inf") == 0) {
      if (!entries.empty() || infinity) parse_error(i, "'inf' must be the only entry");
      infinity = true;
      i += 3;
      continue;
    }
    if (infinity) parse_error(i, "'inf' must be the only entry");
    const std::size_t start = i;
    if (s[i] == '+' || s[i] == '-') ++i;
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) parse_error(start, "expected an integer");
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) && s[i] != ']')
      parse_error(i, "unexpected character");
    std::int64_t v = 0;
    const char* first = s.data() + start + (s[start] == '+' ? 1 : 0);
    const auto [ptr, ec] = std::from_chars(first, s.data() + i, v);
    if (ec != std::errc() || ptr != s.data() + i) parse_error(start, "integer out of range");
    entries.push_back(v);
  }
  skip_ws();
  if (i != s.size()) parse_error(i, "trailing characters");
  if (infinity) return RationalTangle::infinity();
  if (entries.empty()) parse_error(i - 1, "empty twist vector");
  for (std::size_t k = 1; k + 1 < entries.size(); ++k)
    if (entries[k] == 0) throw Error("interior zero");
  return RationalTangle(TwistVector(std::move(entries)));
}

std::string render_ascii(const RationalTangle& t) {
  std::string out = t.to_string() + "\n";
  const TwistWord w = to_twist_word(t);
  out += std::string("start ") + (w.start == StartTangle::Zero ? "[0]  =" : "[inf]  )(") + "\n";
  if (t.is_infinity()) return out;
  const auto& e = t.twist_vector().entries();
  const std::size_t m = e.size();
  for (std::size_t k = 0; k < m; ++k) {
    const bool horizontal = (m - 1 - k) % 2 == 0;
    out += "a" + std::to_string(k + 1) + " = " + std::to_string(e[k]) + (horizontal ? "  horizontal  " : "  vertical    ");
    const char glyph = e[k] > 0 ? '/' : '\\';
    const std::int64_t reps = std::llabs(e[k]);
    if (horizontal) {
      for (std::int64_t r = 0; r < reps; ++r) out += std::string(1, glyph) + " ";
      out += "\n";
    } else {
      out += "\n";
      for (std::int64_t r = 0; r < reps; ++r) out += std::string(16, ' ') + glyph + "\n";
    }
  }
  return out;
}

}  // namespace tanglekit
