#ifndef STALLINGS_WORDS_HPP
#define STALLINGS_WORDS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "stallings/errors.hpp"

namespace stallings {

/// One signed basis letter x_j^{±1} of the ambient free group.
struct Letter {
  int generator;  // 1-based index into the fixed basis
  int sign;       // +1 or -1

  Letter inverted() const { return Letter{generator, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A freely reduced word over a fixed basis of F_k. Immutable value type:
/// every operation returns a new word, so words can be shared freely
/// between threads and cached alongside derived graphs.
class Word {
 public:
  static Word identity(int ambient_rank);

  /// Grammar: word := "1" | term (sep term)* ; term := atom power? ;
  /// atom := /[a-zA-Z]/ | /[xX][0-9]+/ ; power := "^" /-?[0-9]+/ ;
  /// sep := whitespace+ | "*".  Lowercase a..z map to x1..x26, uppercase
  /// to their inverses.
  static Word parse(const std::string& text, int ambient_rank);

  /// Builds a word from raw letters, applying free reduction.
  static Word from_letters(int ambient_rank, std::vector<Letter> letters);

  int ambient_rank() const { return ambient_rank_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  Word multiply(const Word& rhs) const;
  Word inverse() const;
  Word power(int exponent) const;  // exponent >= 0

  /// True iff the two words use disjoint sets of generator indices.
  bool disjoint_from(const Word& rhs) const;

  /// Canonical text form, re-parsable: "1" for the identity, otherwise
  /// run-length tokens like "x1^2 X2".
  std::string render() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  Word(int ambient_rank, std::vector<Letter> reduced)
      : ambient_rank_(ambient_rank), letters_(std::move(reduced)) {}

  int ambient_rank_;
  std::vector<Letter> letters_;
};

/// A finite (possibly redundant) list of subgroup generators.
struct GeneratingSet {
  int ambient_rank = 1;
  std::vector<Word> generators;

  /// Comma-separated word list, e.g. "a b A B, b a a".
  static GeneratingSet parse(const std::string& text, int ambient_rank);
};

}  // namespace stallings

#endif
