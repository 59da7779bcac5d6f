#include "bwm/word.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace bwm {

GenTok GenTok::parse(std::string_view text) {
  if (text.size() < 2 || (text[0] != 'g' && text[0] != 'e')) {
    throw std::invalid_argument("bad generator token '" + std::string(text) + "'");
  }
  int index = 0;
  auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), index);
  if (ec != std::errc() || ptr != text.data() + text.size() || index < 1 || index > 60) {
    throw std::invalid_argument("bad generator token '" + std::string(text) + "'");
  }
  return {text[0] == 'g' ? GenKind::G : GenKind::E, index};
}

Word::Word(std::initializer_list<GenTok> toks) {
  for (const auto& t : toks) codes_.push_back(t.code());
}

Word Word::from_tokens(const std::vector<GenTok>& toks) {
  Word w;
  for (const auto& t : toks) w.append(t);
  return w;
}

std::vector<GenTok> Word::tokens() const {
  std::vector<GenTok> out;
  out.reserve(codes_.size());
  for (char c : codes_) out.push_back(GenTok::from_code(c));
  return out;
}

int Word::max_index() const {
  int m = 0;
  for (char c : codes_) m = std::max(m, GenTok::from_code(c).index);
  return m;
}

int Word::min_index() const {
  int m = 0;
  for (char c : codes_) {
    const int i = GenTok::from_code(c).index;
    m = (m == 0) ? i : std::min(m, i);
  }
  return m;
}

bool Word::has_e() const {
  return std::any_of(codes_.begin(), codes_.end(), [](char c) { return (c & 1) != 0; });
}

std::string Word::to_string() const {
  if (codes_.empty()) return "1";
  std::string out;
  for (char c : codes_) {
    if (!out.empty()) out += ' ';
    out += GenTok::from_code(c).to_string();
  }
  return out;
}

std::vector<std::string> Word::token_strings() const {
  std::vector<std::string> out;
  for (char c : codes_) out.push_back(GenTok::from_code(c).to_string());
  return out;
}

}  // namespace bwm
