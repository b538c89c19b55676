#include "blockpos/fraction.hpp"

#include <cctype>
#include <charconv>

namespace blockpos {

namespace {

std::int64_t parse_int(std::string_view s, const std::string& text) {
  std::int64_t v = 0;
  const char* first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw Error(ErrorCode::ParseError, "not a rational: \"" + text + "\"");
  return v;
}

}  // namespace

Fraction Fraction::parse(const std::string& text) {
  std::string_view s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);

  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const std::int64_t den = parse_int(s.substr(slash + 1), text);
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in \"" + text + "\"");
    return {parse_int(s.substr(0, slash), text), den};
  }
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = s.substr(0, dot);
    const std::string_view frac = s.substr(dot + 1);
    if (frac.empty() || frac.size() > 15 || frac.front() == '-' || frac.front() == '+')
      throw Error(ErrorCode::ParseError, "not a rational: \"" + text + "\"");
    const bool negative = !whole.empty() && whole.front() == '-';
    const std::string_view digits = negative ? whole.substr(1) : whole;
    const std::int64_t ip = digits.empty() ? 0 : parse_int(digits, text);
    const std::int64_t fp = parse_int(frac, text);
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const std::int64_t num = ip * den + fp;
    return {negative ? -num : num, den};
  }
  return {parse_int(s, text)};
}

}  // namespace blockpos
