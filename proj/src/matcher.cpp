#include "bwm/matcher.hpp"

#include <stdexcept>

namespace bwm {

void Matcher::insert(const Word& lhs, std::int32_t payload) {
  std::int32_t node = 0;
  for (char c : lhs.codes()) {
    const int letter = static_cast<unsigned char>(c);
    if (letter >= kMaxLetters) throw std::out_of_range("generator index too large for matcher");
    if (nodes_[node].child[letter] < 0) {
      nodes_[node].child[letter] = static_cast<std::int32_t>(nodes_.size());
      nodes_.emplace_back();
    }
    node = nodes_[node].child[letter];
  }
  nodes_[node].payload = payload;
}

void Matcher::erase(const Word& lhs) {
  std::int32_t node = 0;
  for (char c : lhs.codes()) {
    node = nodes_[node].child[static_cast<unsigned char>(c)];
    if (node < 0) return;
  }
  nodes_[node].payload = kNone;
}

std::optional<Matcher::Match> Matcher::match_at(const Word& w, std::size_t pos) const {
  const std::string& s = w.codes();
  std::int32_t node = 0;
  for (std::size_t i = pos; i < s.size(); ++i) {
    const int letter = static_cast<unsigned char>(s[i]);
    if (letter >= kMaxLetters) return std::nullopt;
    node = nodes_[node].child[letter];
    if (node < 0) return std::nullopt;
    if (nodes_[node].payload != kNone) return Match{pos, i - pos + 1, nodes_[node].payload};
  }
  return std::nullopt;
}

std::optional<Matcher::Match> Matcher::find(const Word& w, Strategy s) const {
  const std::size_t n = w.size();
  if (s == Strategy::Leftmost) {
    for (std::size_t pos = 0; pos < n; ++pos) {
      if (auto m = match_at(w, pos)) return m;
    }
  } else {
    for (std::size_t pos = n; pos-- > 0;) {
      if (auto m = match_at(w, pos)) return m;
    }
  }
  return std::nullopt;
}

}  // namespace bwm
