#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace honeycomb {

enum class Generator : std::uint8_t { P, Q, R, S };

char to_char(Generator g);

/*!
 * Finite word over the generator alphabet {P, Q, R, S}; the empty word is
 * the identity.
 *
 * Text syntax (no whitespace):
 *
 *   word := term*
 *   term := letter | "(" word ")" "^" integer
 *
 * so "PQP" and "(SRQPQR)^2" are words. Powers are expanded on parsing;
 * str() always prints the expanded letters.
 */
class GeneratorWord {
 public:
  GeneratorWord() = default;
  explicit GeneratorWord(std::vector<Generator> letters)
      : letters_(std::move(letters)) {}

  // Throws ParseError on any character outside the grammar.
  static GeneratorWord parse(std::string_view text);

  std::span<const Generator> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  GeneratorWord reversed() const;
  GeneratorWord power(std::size_t k) const;
  GeneratorWord operator*(const GeneratorWord& rhs) const;

  std::string str() const;

  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;

 private:
  std::vector<Generator> letters_;
};

// Parses a whitespace-separated list of words, e.g. "Q R S PQP".
std::vector<GeneratorWord> parse_word_list(std::string_view text);
std::vector<GeneratorWord> parse_words(const std::vector<std::string>& texts);

// "<Q, R, S, PQP>"
std::string describe_generated(std::span<const GeneratorWord> words);

}  // namespace honeycomb
