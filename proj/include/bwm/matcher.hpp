#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "bwm/word.hpp"

namespace bwm {

enum class Strategy {
  Leftmost,   ///< match with the smallest start position, shortest first
  Rightmost,  ///< match with the largest start position, shortest first
};

/// Trie over rule left-hand sides. Payload is an opaque index chosen by the caller.
class Matcher {
 public:
  static constexpr int kMaxLetters = 16;  // ranks up to 9
  static constexpr std::int32_t kNone = -1;

  struct Match {
    std::size_t pos;
    std::size_t len;
    std::int32_t payload;
  };

  Matcher() { nodes_.emplace_back(); }

  void insert(const Word& lhs, std::int32_t payload);
  void erase(const Word& lhs);

  std::optional<Match> find(const Word& w, Strategy s = Strategy::Leftmost) const;
  /// Longest-first is irrelevant for a reduced system; this returns the
  /// shortest left-hand side starting exactly at pos, if any.
  std::optional<Match> match_at(const Word& w, std::size_t pos) const;
  bool matches_anywhere(const Word& w) const { return find(w).has_value(); }

 private:
  struct Node {
    Node() { child.fill(-1); }
    std::array<std::int32_t, kMaxLetters> child;
    std::int32_t payload = kNone;
  };
  std::vector<Node> nodes_;
};

}  // namespace bwm
