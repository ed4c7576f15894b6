#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace curv {

/// A generator or its inverse. Generators are numbered from zero inside a
/// presentation; the text format maps generator k to the k-th lowercase
/// letter and its inverse to the uppercase letter.
struct Letter {
  std::uint32_t gen = 0;
  bool inverse = false;

  constexpr Letter() = default;
  constexpr Letter(std::uint32_t g, bool inv) : gen(g), inverse(inv) {}

  constexpr Letter inv() const { return Letter{gen, !inverse}; }
  constexpr int sign() const { return inverse ? -1 : 1; }
  // Shortlex order on letters: a < A < b < B < ...
  constexpr std::uint32_t key() const { return 2 * gen + (inverse ? 1 : 0); }
  static constexpr Letter from_key(std::uint32_t k) { return Letter{k / 2, (k % 2) == 1}; }

  constexpr bool operator==(const Letter&) const = default;
  constexpr auto operator<=>(const Letter& o) const { return key() <=> o.key(); }
};

constexpr bool mutually_inverse(Letter x, Letter y) { return x.gen == y.gen && x.inverse != y.inverse; }

/// Finite sequence of letters. Value type; the empty word is the identity.
class Word {
 public:
  using value_type = Letter;
  using const_iterator = std::vector<Letter>::const_iterator;

  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  const_iterator begin() const { return letters_.begin(); }
  const_iterator end() const { return letters_.end(); }
  std::span<const Letter> letters() const { return letters_; }

  void push_back(Letter x) { letters_.push_back(x); }
  void pop_back() { letters_.pop_back(); }
  void append(const Word& w) { letters_.insert(letters_.end(), w.begin(), w.end()); }

  Word subword(std::size_t pos, std::size_t len) const;

  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// Shortlex: shorter words first, then lexicographic on letter keys.
bool shortlex_less(const Word& u, const Word& v);

struct ShortlexLess {
  bool operator()(const Word& u, const Word& v) const { return shortlex_less(u, v); }
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

Word concat(const Word& u, const Word& v);

/// Reverse the word and flip every letter.
Word invert(const Word& w);

/// Delete adjacent inverse pairs until none remain. `cancellations`, when
/// given, receives the number of pairs removed.
Word free_reduce(const Word& w, std::size_t* cancellations = nullptr);

bool is_freely_reduced(const Word& w);

/// Strip a conjugating prefix/suffix from a freely reduced word so that its
/// first and last letters are not mutually inverse.
Word cyclic_reduce(const Word& w);

/// Left rotation by k letters.
Word rotate(const Word& w, std::size_t k);

/// Exponent sum of every generator, indexed by generator.
std::vector<std::int64_t> exponent_sums(const Word& w, std::size_t generator_count);

enum class Family { generic, free, zz, surface };

std::string_view family_name(Family f);

/// Generators plus cyclically reduced relators. Relators are reduced on
/// construction; relators that reduce to the empty word are dropped.
/// `family` is set only by the standard builders.
class Presentation {
 public:
  Presentation(std::vector<std::string> generator_names, std::vector<Word> relators,
               Family family = Family::generic, unsigned param = 0);

  std::size_t generator_count() const { return names_.size(); }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::vector<Word>& relators() const { return relators_; }
  Family family() const { return family_; }
  unsigned param() const { return param_; }
  std::size_t max_relator_length() const;

  /// Copy with the family tag dropped, so every query takes the generic route.
  Presentation as_generic() const;

  /// Throws std::invalid_argument if `w` uses a generator outside the alphabet.
  void check_alphabet(const Word& w) const;

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
  Family family_;
  unsigned param_;
};

/// All cyclic permutations of each relator and of its inverse, deduplicated,
/// in enumeration order (rotations of r, then rotations of r^-1, per relator).
struct SymmetrizedRelatorSet {
  std::vector<Word> relators;
  std::size_t max_relator_length = 0;

  std::size_t size() const { return relators.size(); }
  bool empty() const { return relators.empty(); }
};

SymmetrizedRelatorSet symmetrize(const Presentation& p);

/// free(n): n generators, no relators. zz: <a,b | abAB>. surface(g), g >= 2:
/// [a1,b1]...[ag,bg] over 2g generators.
Presentation standard_presentation(Family family, unsigned param = 0);

// Text format: lowercase letter = generator, uppercase = inverse.

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parse a word over the first `generator_count` letters. "1" and "" give the
/// empty word. Throws ParseError on other characters.
Word parse_word(std::string_view text, std::size_t generator_count);

/// Format with the lowercase/uppercase convention; the empty word prints as "1".
std::string to_string(const Word& w);

/// Like to_string but prints the empty word as "".
std::string spell(const Word& w);

/// Presentation file: `gens: a b c` on the first line, then one `rels: abAB`
/// line per relator. Generators must be the letters a, b, c, ... in order.
/// Blank lines are ignored.
Presentation parse_presentation(std::string_view text);
Presentation load_presentation(const std::string& path);
std::string format_presentation(const Presentation& p);

}  // namespace curv
