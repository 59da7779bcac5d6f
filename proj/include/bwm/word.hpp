#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace bwm {

enum class GenKind : std::uint8_t { G = 0, E = 1 };

/// A generator g_i or e_i, i >= 1.
struct GenTok {
  GenKind kind = GenKind::G;
  int index = 1;

  static GenTok g(int i) { return {GenKind::G, i}; }
  static GenTok e(int i) { return {GenKind::E, i}; }

  /// Letter code; the alphabet order is g_1 < e_1 < g_2 < e_2 < ...
  char code() const { return static_cast<char>(2 * (index - 1) + static_cast<int>(kind)); }
  static GenTok from_code(char c) {
    const int v = static_cast<unsigned char>(c);
    return {static_cast<GenKind>(v & 1), v / 2 + 1};
  }
  /// "g3" / "e1"; throws std::invalid_argument on anything else.
  static GenTok parse(std::string_view text);
  std::string to_string() const { return (kind == GenKind::G ? "g" : "e") + std::to_string(index); }

  friend bool operator==(const GenTok&, const GenTok&) = default;
};

/// Monomial in the generators; the empty word is the identity.
///
/// Stored as a byte string of letter codes so that hashing, concatenation and
/// factor search are plain string operations.
class Word {
 public:
  Word() = default;
  explicit Word(std::string codes) : codes_(std::move(codes)) {}
  Word(std::initializer_list<GenTok> toks);
  static Word from_tokens(const std::vector<GenTok>& toks);

  std::size_t size() const { return codes_.size(); }
  bool empty() const { return codes_.empty(); }
  GenTok operator[](std::size_t i) const { return GenTok::from_code(codes_[i]); }
  const std::string& codes() const { return codes_; }
  std::vector<GenTok> tokens() const;

  Word& append(GenTok t) {
    codes_.push_back(t.code());
    return *this;
  }
  Word substr(std::size_t pos, std::size_t len = std::string::npos) const { return Word(codes_.substr(pos, len)); }
  friend Word operator+(const Word& a, const Word& b) { return Word(a.codes_ + b.codes_); }
  Word reversed() const { return Word(std::string(codes_.rbegin(), codes_.rend())); }

  /// Largest generator index, 0 for the identity.
  int max_index() const;
  int min_index() const;
  bool has_e() const;

  /// "g1 e2 g1"; "1" for the identity.
  std::string to_string() const;
  std::vector<std::string> token_strings() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::string codes_;
};

/// Degree-lexicographic order: shorter words first, then letter by letter.
/// Compatible with concatenation, so every rewrite step strictly decreases.
struct ShortLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.codes() < b.codes();
  }
};

}  // namespace bwm

template <>
struct std::hash<bwm::Word> {
  std::size_t operator()(const bwm::Word& w) const noexcept { return std::hash<std::string>{}(w.codes()); }
};
