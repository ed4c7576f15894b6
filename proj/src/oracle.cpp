#include "curvature/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <unordered_set>

#include "curvature/dehn.hpp"
#include "curvature/isoperimetry.hpp"

namespace curv {

std::string_view to_string(Tristate t) {
  switch (t) {
    case Tristate::equal: return "EQUAL";
    case Tristate::not_equal: return "NOT-EQUAL";
    case Tristate::unknown: break;
  }
  return "UNKNOWN";
}

AbelianInvariant::AbelianInvariant(const Presentation& p) : generator_count_(p.generator_count()) {
  std::vector<std::vector<std::int64_t>> m;
  for (const Word& r : p.relators()) m.push_back(exponent_sums(r, generator_count_));

  // Integer row reduction to echelon form.
  std::size_t top = 0;
  for (std::size_t col = 0; col < generator_count_ && top < m.size(); ++col) {
    while (true) {
      std::size_t best = m.size();
      for (std::size_t i = top; i < m.size(); ++i)
        if (m[i][col] != 0 && (best == m.size() || std::llabs(m[i][col]) < std::llabs(m[best][col]))) best = i;
      if (best == m.size()) break;
      std::swap(m[top], m[best]);
      bool cleared = true;
      for (std::size_t i = top + 1; i < m.size(); ++i) {
        if (m[i][col] == 0) continue;
        const std::int64_t q = m[i][col] / m[top][col];
        for (std::size_t j = col; j < generator_count_; ++j) m[i][j] -= q * m[top][j];
        if (m[i][col] != 0) cleared = false;
      }
      if (cleared) {
        if (m[top][col] < 0)
          for (auto& x : m[top]) x = -x;
        rows_.push_back(m[top]);
        pivots_.push_back(col);
        ++top;
        break;
      }
    }
  }
}

std::vector<std::int64_t> AbelianInvariant::residue(std::vector<std::int64_t> v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t c = pivots_[k];
    const std::int64_t piv = rows_[k][c];
    std::int64_t q = v[c] / piv;
    if (v[c] - q * piv < 0) --q;
    if (q == 0) continue;
    for (std::size_t j = c; j < generator_count_; ++j) v[j] -= q * rows_[k][j];
  }
  return v;
}

std::vector<std::int64_t> AbelianInvariant::residue(const Word& w) const {
  return residue(exponent_sums(w, generator_count_));
}

namespace {

Tristate from_bool(bool b) { return b ? Tristate::equal : Tristate::not_equal; }

}  // namespace

Tristate words_equal(const Presentation& p, const Word& u, const Word& v, const OracleBudget& budget) {
  p.check_alphabet(u);
  p.check_alphabet(v);
  const Word quotient = free_reduce(concat(u, invert(v)));
  switch (p.family()) {
    case Family::free:
      return from_bool(quotient.empty());
    case Family::zz: {
      const ZZNormalForm a = zz_normal_form(u), b = zz_normal_form(v);
      return from_bool(a.a_exponent == b.a_exponent && a.b_exponent == b.b_exponent);
    }
    case Family::surface:
      return from_bool(dehn_reduce(p, quotient).word.empty());
    case Family::generic:
      break;
  }
  if (quotient.empty()) return Tristate::equal;
  const AbelianInvariant ab(p);
  const auto r = ab.residue(quotient);
  if (std::any_of(r.begin(), r.end(), [](std::int64_t x) { return x != 0; })) return Tristate::not_equal;
  const std::size_t max_len = budget.max_search_length ? budget.max_search_length
                                                       : 2 * quotient.size() + p.max_relator_length();
  if (find_filling(symmetrize(p), quotient, budget.max_area, max_len)) return Tristate::equal;
  return Tristate::unknown;
}

bool for_each_reduced_word(std::size_t generator_count, std::size_t length,
                           const std::function<bool(const Word&)>& fn) {
  const auto letters = static_cast<std::uint32_t>(2 * generator_count);
  std::vector<Letter> buf;
  buf.reserve(length);
  // Iterative DFS in letter-key order yields shortlex order at fixed length.
  std::vector<std::uint32_t> next(length + 1, 0);
  std::size_t depth = 0;
  while (true) {
    if (depth == length) {
      if (!fn(Word(buf))) return false;
      if (depth == 0) return true;
      --depth;
      buf.pop_back();
      continue;
    }
    std::uint32_t& k = next[depth];
    while (k < letters && depth > 0 && mutually_inverse(buf.back(), Letter::from_key(k))) ++k;
    if (k >= letters) {
      k = 0;
      if (depth == 0) return true;
      --depth;
      buf.pop_back();
      continue;
    }
    buf.push_back(Letter::from_key(k));
    ++k;
    ++depth;
  }
}

Word canonical_form(const Presentation& p, const Word& w, std::size_t max_radius, const OracleBudget& budget) {
  p.check_alphabet(w);
  const Word reduced = free_reduce(w);
  switch (p.family()) {
    case Family::free:
      return reduced;
    case Family::zz: {
      const ZZNormalForm nf = zz_normal_form(reduced);
      return zz_spelling(nf.a_exponent, nf.b_exponent);
    }
    case Family::surface:
    case Family::generic:
      break;
  }
  const Word known = p.family() == Family::surface ? dehn_reduce(p, reduced).word : reduced;
  const std::size_t bound = std::min(known.size(), max_radius);
  std::optional<Word> found;
  bool blocked = false;
  for (std::size_t len = 0; len <= bound && !found && !blocked; ++len) {
    for_each_reduced_word(p.generator_count(), len, [&](const Word& c) {
      switch (words_equal(p, c, reduced, budget)) {
        case Tristate::equal: found = c; return false;
        case Tristate::unknown: blocked = true; return false;
        case Tristate::not_equal: return true;
      }
      return true;
    });
  }
  if (found) return *found;
  if (blocked) throw InsufficientBudget("canonical form: equality undecided within budget");
  throw InsufficientBudget("canonical form: no representative within radius " + std::to_string(max_radius));
}

std::vector<Word> generate_null_homotopic(const Presentation& p, std::size_t max_insertions, std::size_t max_length) {
  const SymmetrizedRelatorSet s = symmetrize(p);
  std::unordered_set<Word, WordHash> seen{Word{}};
  std::vector<Word> frontier{Word{}};
  for (std::size_t round = 0; round < max_insertions && !frontier.empty(); ++round) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (std::size_t pos = 0; pos <= w.size(); ++pos) {
        for (const Word& r : s.relators) {
          Word c = w.subword(0, pos);
          c.append(r);
          c.append(w.subword(pos, w.size() - pos));
          c = free_reduce(c);
          if (c.size() > max_length) continue;
          if (seen.insert(c).second) next.push_back(std::move(c));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Word> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), ShortlexLess{});
  return out;
}

}  // namespace curv
