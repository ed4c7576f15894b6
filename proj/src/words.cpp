#include "curvature/words.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace curv {

Word Word::subword(std::size_t pos, std::size_t len) const {
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                  letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

bool shortlex_less(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() < v.size();
  return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Letter x : w) {
    h ^= x.key() + 1;
    h *= 1099511628211ull;
  }
  return h;
}

Word concat(const Word& u, const Word& v) {
  Word w = u;
  w.append(v);
  return w;
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->inv());
  return Word(std::move(out));
}

Word free_reduce(const Word& w, std::size_t* cancellations) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  std::size_t cancelled = 0;
  for (Letter x : w) {
    if (!stack.empty() && mutually_inverse(stack.back(), x)) {
      stack.pop_back();
      ++cancelled;
    } else {
      stack.push_back(x);
    }
  }
  if (cancellations) *cancellations = cancelled;
  return Word(std::move(stack));
}

bool is_freely_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (mutually_inverse(w[i - 1], w[i])) return false;
  return true;
}

Word cyclic_reduce(const Word& w) {
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && mutually_inverse(w[lo], w[hi - 1])) {
    ++lo;
    --hi;
  }
  return w.subword(lo, hi - lo);
}

Word rotate(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  k %= w.size();
  std::vector<Letter> out(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
  return Word(std::move(out));
}

std::vector<std::int64_t> exponent_sums(const Word& w, std::size_t generator_count) {
  std::vector<std::int64_t> v(generator_count, 0);
  for (Letter x : w) v.at(x.gen) += x.sign();
  return v;
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::free: return "free";
    case Family::zz: return "zz";
    case Family::surface: return "surface";
    case Family::generic: break;
  }
  return "generic";
}

Presentation::Presentation(std::vector<std::string> generator_names, std::vector<Word> relators,
                           Family family, unsigned param)
    : names_(std::move(generator_names)), family_(family), param_(param) {
  if (names_.empty()) throw std::invalid_argument("presentation needs at least one generator");
  std::unordered_set<std::string> seen;
  for (const auto& n : names_)
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate generator name '" + n + "'");
  for (const Word& r : relators) {
    check_alphabet(r);
    Word reduced = cyclic_reduce(free_reduce(r));
    if (!reduced.empty()) relators_.push_back(std::move(reduced));
  }
}

std::size_t Presentation::max_relator_length() const {
  std::size_t m = 0;
  for (const Word& r : relators_) m = std::max(m, r.size());
  return m;
}

Presentation Presentation::as_generic() const {
  return Presentation(names_, relators_, Family::generic, 0);
}

void Presentation::check_alphabet(const Word& w) const {
  for (Letter x : w)
    if (x.gen >= names_.size())
      throw std::invalid_argument("generator index " + std::to_string(x.gen) + " outside alphabet of size " +
                                  std::to_string(names_.size()));
}

SymmetrizedRelatorSet symmetrize(const Presentation& p) {
  SymmetrizedRelatorSet s;
  std::unordered_set<Word, WordHash> seen;
  auto add_rotations = [&](const Word& r) {
    for (std::size_t k = 0; k < r.size(); ++k) {
      Word c = rotate(r, k);
      if (seen.insert(c).second) s.relators.push_back(std::move(c));
    }
  };
  for (const Word& r : p.relators()) {
    add_rotations(r);
    add_rotations(invert(r));
    s.max_relator_length = std::max(s.max_relator_length, r.size());
  }
  return s;
}

namespace {

std::vector<std::string> letter_names(std::size_t n) {
  if (n > 26) throw std::invalid_argument("the letter alphabet has only 26 generators");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  return names;
}

}  // namespace

Presentation standard_presentation(Family family, unsigned param) {
  switch (family) {
    case Family::free:
      if (param < 1) throw std::invalid_argument("free presentation needs rank >= 1");
      return Presentation(letter_names(param), {}, Family::free, param);
    case Family::zz: {
      Word r{{0, false}, {1, false}, {0, true}, {1, true}};
      return Presentation(letter_names(2), {r}, Family::zz, 0);
    }
    case Family::surface: {
      if (param < 2) throw std::invalid_argument("surface presentation needs genus >= 2");
      Word r;
      for (std::uint32_t i = 0; i < param; ++i) {
        const std::uint32_t a = 2 * i, b = 2 * i + 1;
        r.push_back({a, false});
        r.push_back({b, false});
        r.push_back({a, true});
        r.push_back({b, true});
      }
      return Presentation(letter_names(2 * param), {r}, Family::surface, param);
    }
    case Family::generic: break;
  }
  throw std::invalid_argument("generic presentations have no standard builder");
}

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
      line_(line),
      column_(column) {}

namespace {

Word parse_word_at(std::string_view text, std::size_t generator_count, std::size_t line, std::size_t col0) {
  Word w;
  if (text == "1") return w;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    const bool lower = c >= 'a' && c <= 'z';
    const bool upper = c >= 'A' && c <= 'Z';
    if (!lower && !upper) throw ParseError(std::string("invalid word character '") + c + "'", line, col0 + i);
    const auto gen = static_cast<std::uint32_t>(lower ? c - 'a' : c - 'A');
    if (gen >= generator_count)
      throw ParseError(std::string("letter '") + c + "' is not a generator", line, col0 + i);
    w.push_back({gen, upper});
  }
  return w;
}

}  // namespace

Word parse_word(std::string_view text, std::size_t generator_count) {
  return parse_word_at(text, generator_count, 1, 1);
}

std::string spell(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Letter x : w) {
    if (x.gen >= 26) throw std::invalid_argument("generator index beyond the letter alphabet");
    s.push_back(static_cast<char>((x.inverse ? 'A' : 'a') + x.gen));
  }
  return s;
}

std::string to_string(const Word& w) { return w.empty() ? std::string("1") : spell(w); }

Presentation parse_presentation(std::string_view text) {
  std::vector<std::string> gens;
  std::vector<std::pair<std::string, std::pair<std::size_t, std::size_t>>> rel_texts;
  bool have_gens = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) {
      if (end == text.size()) break;
      continue;
    }
    if (line.starts_with("gens:")) {
      if (have_gens) throw ParseError("duplicate gens line", line_no, 1);
      have_gens = true;
      std::size_t i = 5;
      while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t') {
          ++i;
          continue;
        }
        const char c = line[i];
        const std::size_t expected = gens.size();
        if (c < 'a' || c > 'z') throw ParseError(std::string("invalid generator '") + c + "'", line_no, i + 1);
        if (static_cast<std::size_t>(c - 'a') != expected)
          throw ParseError(std::string("generators must be a, b, c, ... in order; got '") + c + "'", line_no, i + 1);
        if (i + 1 < line.size() && line[i + 1] != ' ' && line[i + 1] != '\t')
          throw ParseError("generator names are single letters", line_no, i + 2);
        gens.emplace_back(1, c);
        ++i;
      }
      if (gens.empty()) throw ParseError("gens line lists no generators", line_no, 6);
    } else if (line.starts_with("rels:")) {
      if (!have_gens) throw ParseError("rels line before gens line", line_no, 1);
      std::size_t i = 5;
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      std::size_t j = line.size();
      while (j > i && (line[j - 1] == ' ' || line[j - 1] == '\t')) --j;
      if (i == j) throw ParseError("empty relator", line_no, i + 1);
      rel_texts.push_back({std::string(line.substr(i, j - i)), {line_no, i + 1}});
    } else {
      throw ParseError("expected 'gens:' or 'rels:'", line_no, 1);
    }
    if (end == text.size()) break;
  }
  if (!have_gens) throw ParseError("missing gens line", 1, 1);
  std::vector<Word> rels;
  for (const auto& [t, where] : rel_texts) rels.push_back(parse_word_at(t, gens.size(), where.first, where.second));
  return Presentation(std::move(gens), std::move(rels));
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read presentation file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

std::string format_presentation(const Presentation& p) {
  std::string out = "gens:";
  for (std::size_t i = 0; i < p.generator_count(); ++i) {
    out += ' ';
    out += static_cast<char>('a' + i);
  }
  out += '\n';
  for (const Word& r : p.relators()) out += "rels: " + spell(r) + "\n";
  return out;
}

}  // namespace curv
