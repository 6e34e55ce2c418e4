#pragma once

#include <stdexcept>
#include <vector>

#include "weylkit/qpoly.hpp"
#include "weylkit/schur.hpp"
#include "weylkit/weight.hpp"

namespace wk {

/* Charge of a standard word (one occurrence of each letter 1..K, in any
 * order): the letter 1 gets index 0, and letter r+1 gets the index of r,
 * plus one exactly when r+1 sits to the right of r. */
inline long standard_charge(const std::vector<int>& word) {
  const int K = static_cast<int>(word.size());
  std::vector<int> pos(K + 1, -1);
  for (int i = 0; i < K; ++i) pos[word[i]] = i;
  long total = 0, idx = 0;
  for (int r = 1; r < K; ++r) {
    if (pos[r + 1] > pos[r]) ++idx;
    total += idx;
  }
  return total;
}

/* Charge of a word with partition content: repeatedly extract a standard
 * subword (rightmost 1, then scanning cyclically leftward for 2, 3, ...) and
 * sum the charges of the extracted subwords read in word order. */
inline long charge(const std::vector<int>& word) {
  const int L = static_cast<int>(word.size());
  std::vector<bool> active(L, true);
  int remaining = L;
  long total = 0;
  while (remaining > 0) {
    int maxletter = 0;
    for (int i = 0; i < L; ++i)
      if (active[i]) maxletter = std::max(maxletter, word[i]);
    std::vector<int> sel;
    int cur = -1;
    for (int i = L - 1; i >= 0; --i)
      if (active[i] && word[i] == 1) {
        cur = i;
        break;
      }
    if (cur < 0) throw std::invalid_argument("word content is not a partition");
    sel.push_back(cur);
    for (int r = 2; r <= maxletter; ++r) {
      int found = -1;
      for (int step = 1; step < L && found < 0; ++step) {
        int i = cur - step;
        if (i < 0) i += L;
        if (active[i] && word[i] == r) found = i;
      }
      if (found < 0) throw std::invalid_argument("word content is not a partition");
      sel.push_back(found);
      cur = found;
    }
    std::sort(sel.begin(), sel.end());
    std::vector<int> sub;
    for (int i : sel) {
      sub.push_back(word[i]);
      active[i] = false;
      --remaining;
    }
    total += standard_charge(sub);
  }
  return total;
}

// reading word: rows bottom to top, each row left to right
inline std::vector<int> reading_word(const std::vector<std::vector<int>>& rows) {
  std::vector<int> w;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it)
    w.insert(w.end(), it->begin(), it->end());
  return w;
}

/* Kostka-Foulkes polynomial K_{shape,content}(q): charge generating function
 * over semistandard tableaux of the given shape and content. */
inline QPoly kostka_foulkes(const Partition& shape, const Partition& content) {
  if (!is_partition(shape) || !is_partition(content))
    throw std::invalid_argument("kostka_foulkes arguments must be partitions");
  if (part_size(shape) != part_size(content))
    throw std::invalid_argument("kostka_foulkes size mismatch");
  Partition sh = shape, ct = content;
  while (!sh.empty() && sh.back() == 0) sh.pop_back();
  while (!ct.empty() && ct.back() == 0) ct.pop_back();
  if (sh.empty()) return QPoly::one();
  if (!dominates(sh, ct)) return QPoly();
  QPoly out;
  for_each_ssyt(sh, static_cast<int>(ct.size()), &ct,
                [&](const std::vector<Partition>& chain) {
                  out.add_term(charge(reading_word(chain_rows(chain))), 1);
                });
  return out;
}

}  // namespace wk
