#include "stallings/words.hpp"

#include <cctype>
#include <cstdlib>

namespace stallings {

namespace {

std::vector<Letter> reduce(std::vector<Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (const Letter& l : raw) {
    if (!out.empty() && out.back() == l.inverted()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

void check_rank(int ambient_rank) {
  if (ambient_rank < 1) {
    throw PreconditionError("ambient rank must be >= 1");
  }
}

bool is_sep(char c) { return c == '*' || std::isspace(static_cast<unsigned char>(c)); }

}  // namespace

Word Word::identity(int ambient_rank) {
  check_rank(ambient_rank);
  return Word(ambient_rank, {});
}

Word Word::from_letters(int ambient_rank, std::vector<Letter> letters) {
  check_rank(ambient_rank);
  for (const Letter& l : letters) {
    if (l.sign != 1 && l.sign != -1) {
      throw PreconditionError("letter sign must be +1 or -1");
    }
    if (l.generator < 1 || l.generator > ambient_rank) {
      throw ParseError("generator index " + std::to_string(l.generator) +
                       " outside 1.." + std::to_string(ambient_rank));
    }
  }
  return Word(ambient_rank, reduce(std::move(letters)));
}

Word Word::parse(const std::string& text, int ambient_rank) {
  check_rank(ambient_rank);
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip_seps = [&] {
    std::size_t start = i;
    while (i < n && is_sep(text[i])) ++i;
    return i > start;
  };

  skip_seps();
  if (i >= n) throw ParseError("empty word (use \"1\" for the identity)");

  // Bare "1" denotes the identity.
  if (text[i] == '1') {
    ++i;
    skip_seps();
    if (i != n) throw ParseError("unexpected input after \"1\"");
    return identity(ambient_rank);
  }

  std::vector<Letter> letters;
  bool first = true;
  while (i < n) {
    if (!first) {
      if (!skip_seps()) {
        throw ParseError("missing separator before position " + std::to_string(i));
      }
      if (i >= n) break;
    }
    first = false;

    char c = text[i];
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      throw ParseError(std::string("unexpected character '") + c + "'");
    }
    ++i;

    int index;
    int sign;
    if ((c == 'x' || c == 'X') && i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::size_t start = i;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i - start > 7) throw ParseError("generator index out of range");
      index = std::atoi(text.substr(start, i - start).c_str());
      sign = (c == 'x') ? 1 : -1;
    } else if (std::islower(static_cast<unsigned char>(c))) {
      index = c - 'a' + 1;
      sign = 1;
    } else {
      index = c - 'A' + 1;
      sign = -1;
    }
    if (index < 1 || index > ambient_rank) {
      throw ParseError("generator index " + std::to_string(index) + " outside 1.." +
                       std::to_string(ambient_rank));
    }

    long exponent = 1;
    if (i < n && text[i] == '^') {
      ++i;
      std::size_t start = i;
      if (i < n && text[i] == '-') ++i;
      if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError("expected integer after '^'");
      }
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i - start > 7) throw ParseError("exponent out of range");
      exponent = std::atol(text.substr(start, i - start).c_str());
    }

    const Letter base{index, exponent >= 0 ? sign : -sign};
    for (long r = 0; r < std::labs(exponent); ++r) letters.push_back(base);
  }

  return Word(ambient_rank, reduce(std::move(letters)));
}

Word Word::multiply(const Word& rhs) const {
  if (rhs.ambient_rank_ != ambient_rank_) {
    throw PreconditionError("multiply: ambient ranks differ");
  }
  std::vector<Letter> cat = letters_;
  cat.insert(cat.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(ambient_rank_, reduce(std::move(cat)));
}

Word Word::inverse() const {
  std::vector<Letter> rev(letters_.rbegin(), letters_.rend());
  for (Letter& l : rev) l = l.inverted();
  return Word(ambient_rank_, std::move(rev));  // reversal of reduced is reduced
}

Word Word::power(int exponent) const {
  if (exponent < 0) throw PreconditionError("power: exponent must be >= 0");
  Word acc = identity(ambient_rank_);
  for (int r = 0; r < exponent; ++r) acc = acc.multiply(*this);
  return acc;
}

bool Word::disjoint_from(const Word& rhs) const {
  if (rhs.ambient_rank_ != ambient_rank_) {
    throw PreconditionError("disjoint: ambient ranks differ");
  }
  std::vector<bool> used(static_cast<std::size_t>(ambient_rank_) + 1, false);
  for (const Letter& l : letters_) used[static_cast<std::size_t>(l.generator)] = true;
  for (const Letter& l : rhs.letters_) {
    if (used[static_cast<std::size_t>(l.generator)]) return false;
  }
  return true;
}

std::string Word::render() const {
  if (letters_.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < letters_.size()) {
    std::size_t run = i + 1;
    while (run < letters_.size() && letters_[run] == letters_[i]) ++run;
    if (!out.empty()) out += ' ';
    out += (letters_[i].sign > 0 ? 'x' : 'X');
    out += std::to_string(letters_[i].generator);
    if (run - i > 1) out += "^" + std::to_string(run - i);
    i = run;
  }
  return out;
}

GeneratingSet GeneratingSet::parse(const std::string& text, int ambient_rank) {
  check_rank(ambient_rank);
  GeneratingSet set;
  set.ambient_rank = ambient_rank;

  std::size_t begin = 0;
  bool any_piece = false;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      std::string piece = text.substr(begin, i - begin);
      std::size_t a = piece.find_first_not_of(" \t\n\r");
      if (a != std::string::npos) {
        any_piece = true;
        set.generators.push_back(Word::parse(piece, ambient_rank));
      } else if (i != text.size() || any_piece) {
        throw ParseError("empty generator in list");
      }
      begin = i + 1;
    }
  }
  return set;
}

}  // namespace stallings
