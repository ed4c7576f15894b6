#include "curvature/dehn.hpp"

#include <algorithm>
#include <stdexcept>

#include "curvature/oracle.hpp"

namespace curv {

std::optional<DehnStep> find_majority_subword(const Word& w, const SymmetrizedRelatorSet& s, std::size_t start) {
  for (std::size_t pos = start; pos < w.size(); ++pos) {
    std::optional<DehnStep> best;
    for (std::size_t k = 0; k < s.relators.size(); ++k) {
      const Word& r = s.relators[k];
      std::size_t len = 0;
      while (len < r.size() && pos + len < w.size() && w[pos + len] == r[len]) ++len;
      if (2 * len <= r.size()) continue;
      if (!best || len > best->matched_length) {
        best = DehnStep{pos, k, r, len, {}};
      }
    }
    if (best) {
      best->replacement = invert(best->relator.subword(best->matched_length, best->relator.size() - best->matched_length));
      return best;
    }
  }
  return std::nullopt;
}

DehnResult dehn_reduce(const SymmetrizedRelatorSet& s, const Word& w) {
  DehnResult out;
  std::size_t cancelled = 0;
  Word cur = free_reduce(w, &cancelled);
  out.trace.free_cancellations += cancelled;
  std::size_t scan_from = 0;
  while (auto step = find_majority_subword(cur, s, scan_from)) {
    Word next = cur.subword(0, step->position);
    next.append(step->replacement);
    next.append(cur.subword(step->position + step->matched_length,
                            cur.size() - step->position - step->matched_length));
    next = free_reduce(next, &cancelled);
    out.trace.free_cancellations += cancelled;

    // Everything before the first changed letter was already scanned; a new
    // match can start at most one relator length earlier.
    std::size_t unchanged = 0;
    while (unchanged < next.size() && unchanged < cur.size() && next[unchanged] == cur[unchanged]) ++unchanged;
    scan_from = unchanged > s.max_relator_length ? unchanged - s.max_relator_length : 0;

    out.trace.steps.push_back(std::move(*step));
    cur = std::move(next);
  }
  out.word = std::move(cur);
  return out;
}

DehnResult dehn_reduce(const Presentation& p, const Word& w) {
  p.check_alphabet(w);
  return dehn_reduce(symmetrize(p), w);
}

ZZNormalForm zz_normal_form(const Word& w) {
  ZZNormalForm nf;
  for (Letter x : w) {
    if (x.gen == 0) {
      nf.swaps += static_cast<std::uint64_t>(nf.b_exponent < 0 ? -nf.b_exponent : nf.b_exponent);
      nf.a_exponent += x.sign();
    } else if (x.gen == 1) {
      nf.b_exponent += x.sign();
    } else {
      throw std::invalid_argument("zz normal form: letter outside {a, b}");
    }
  }
  return nf;
}

Word zz_spelling(std::int64_t a_exponent, std::int64_t b_exponent) {
  Word w;
  for (std::int64_t i = 0; i < (a_exponent < 0 ? -a_exponent : a_exponent); ++i) w.push_back({0, a_exponent < 0});
  for (std::int64_t j = 0; j < (b_exponent < 0 ? -b_exponent : b_exponent); ++j) w.push_back({1, b_exponent < 0});
  return w;
}

DehnVerdict verify_dehn_presentation(const Presentation& p, std::size_t max_insertions, std::size_t max_length) {
  if (max_insertions < 1) throw std::invalid_argument("verify_dehn_presentation needs max_insertions >= 1");
  DehnVerdict v;
  v.max_insertions = max_insertions;
  v.max_length = max_length;
  const SymmetrizedRelatorSet s = symmetrize(p);
  // Sorted shortlex, so the first failure is the least counterexample.
  for (const Word& w : generate_null_homotopic(p, max_insertions, max_length)) {
    if (w.empty()) continue;
    ++v.words_checked;
    if (!dehn_reduce(s, w).word.empty()) {
      v.holds = false;
      v.counterexample = w;
      break;
    }
  }
  return v;
}

}  // namespace curv
