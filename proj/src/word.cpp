#include "honeycomb/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "honeycomb/errors.hpp"

namespace honeycomb {
namespace {

// Guards against words like "(P)^999999999".
constexpr std::size_t kMaxLetters = 1u << 20;

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  std::vector<Generator> parse() {
    auto letters = parse_sequence();
    if (pos_ != text_.size()) fail("unexpected ')'");
    return letters;
  }

 private:
  std::vector<Generator> parse_sequence() {
    std::vector<Generator> out;
    while (pos_ < text_.size() && text_[pos_] != ')') {
      const char c = text_[pos_];
      if (c == '(') {
        ++pos_;
        auto inner = parse_sequence();
        expect(')');
        expect('^');
        const std::size_t k = parse_integer();
        if (!inner.empty() && k > kMaxLetters / inner.size()) {
          fail("power too large");
        }
        for (std::size_t i = 0; i < k; ++i) {
          out.insert(out.end(), inner.begin(), inner.end());
        }
      } else {
        out.push_back(parse_letter(c));
        ++pos_;
      }
      if (out.size() > kMaxLetters) fail("word too long");
    }
    return out;
  }

  Generator parse_letter(char c) {
    switch (c) {
      case 'P': return Generator::P;
      case 'Q': return Generator::Q;
      case 'R': return Generator::R;
      case 'S': return Generator::S;
      default: fail(std::string("unexpected character '") + c + "'");
    }
  }

  std::size_t parse_integer() {
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > kMaxLetters) fail("exponent too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected exponent after '^'");
    return value;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream os;
    os << "invalid generator word \"" << text_ << "\" at position " << pos_
       << ": " << what;
    throw ParseError(os.str());
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

char to_char(Generator g) {
  static constexpr char kChars[] = {'P', 'Q', 'R', 'S'};
  return kChars[static_cast<int>(g)];
}

GeneratorWord GeneratorWord::parse(std::string_view text) {
  return GeneratorWord(WordParser(text).parse());
}

GeneratorWord GeneratorWord::reversed() const {
  return GeneratorWord({letters_.rbegin(), letters_.rend()});
}

GeneratorWord GeneratorWord::power(std::size_t k) const {
  std::vector<Generator> out;
  out.reserve(letters_.size() * k);
  for (std::size_t i = 0; i < k; ++i) {
    out.insert(out.end(), letters_.begin(), letters_.end());
  }
  return GeneratorWord(std::move(out));
}

GeneratorWord GeneratorWord::operator*(const GeneratorWord& rhs) const {
  std::vector<Generator> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return GeneratorWord(std::move(out));
}

std::string GeneratorWord::str() const {
  std::string out;
  out.reserve(letters_.size());
  for (Generator g : letters_) out.push_back(to_char(g));
  return out;
}

std::vector<GeneratorWord> parse_word_list(std::string_view text) {
  std::vector<GeneratorWord> out;
  std::istringstream is{std::string(text)};
  std::string token;
  while (is >> token) out.push_back(GeneratorWord::parse(token));
  return out;
}

std::vector<GeneratorWord> parse_words(const std::vector<std::string>& texts) {
  std::vector<GeneratorWord> out;
  for (const auto& t : texts) {
    auto part = parse_word_list(t);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::string describe_generated(std::span<const GeneratorWord> words) {
  std::string out = "<";
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += ", ";
    out += words[i].str();
  }
  return out + ">";
}

}  // namespace honeycomb
