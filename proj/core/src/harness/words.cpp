#include "selberg/harness/words.hpp"

#include <cctype>

#include "selberg/error.hpp"

namespace selberg {

namespace {

class WordParser {
 public:
  WordParser(const std::string& text, const std::map<std::string, Isometry>& alphabet)
      : s_(text), alphabet_(alphabet) {}

  IsometryWord parse() {
    IsometryWord w = sequence();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::Parse, "word \"" + s_ + "\": " + what + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '*')) ++pos_;
  }

  bool at_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return c == '(' || c == '[' || std::isalpha(static_cast<unsigned char>(c));
  }

  IsometryWord sequence() {
    IsometryWord w;
    while (at_factor()) w = w.then(factor());
    return w;
  }

  IsometryWord factor() {
    IsometryWord base = atom();
    skip();
    while (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      base = base.power(exponent());
      skip();
    }
    return base;
  }

  int exponent() {
    skip();
    const bool braced = pos_ < s_.size() && s_[pos_] == '{';
    if (braced) ++pos_;
    skip();
    int sign = 1;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      if (s_[pos_] == '-') sign = -1;
      ++pos_;
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an exponent");
    const int value = std::stoi(s_.substr(start, pos_ - start));
    skip();
    if (braced) {
      if (pos_ >= s_.size() || s_[pos_] != '}') fail("expected '}'");
      ++pos_;
    }
    return sign * value;
  }

  IsometryWord atom() {
    skip();
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      IsometryWord w = sequence();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      IsometryWord x = sequence();
      expect(',');
      IsometryWord y = sequence();
      expect(']');
      return x.then(y).then(x.inverse()).then(y.inverse());
    }
    std::size_t best = 0;
    const Isometry* letter = nullptr;
    std::string label;
    for (const auto& [key, g] : alphabet_) {
      if (key.size() > best && s_.compare(pos_, key.size(), key) == 0) {
        best = key.size();
        letter = &g;
        label = key;
      }
    }
    if (!letter) fail("unknown letter");
    pos_ += best;
    return IsometryWord({*letter}, {label});
  }

  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  const std::string& s_;
  const std::map<std::string, Isometry>& alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

IsometryWord parse_word(const std::string& text, const std::map<std::string, Isometry>& alphabet) {
  return WordParser(text, alphabet).parse();
}

bool relator_check(const IsometryWord& word) {
  if (word.length() == 0) return true;
  return word.product().is_identity();
}

bool is_unipotent(const Isometry& g) {
  const std::size_t n = g.dim();
  const Matrix d = g.matrix() - Matrix::identity(n);
  Matrix p = d;
  for (std::size_t i = 1; i < n; ++i) p = p * d;
  return p.is_zero();
}

}  // namespace selberg
