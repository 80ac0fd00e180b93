#ifndef WEYL_WORDS_HPP
#define WEYL_WORDS_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "weyl/coxeter.hpp"

namespace weyl {

// A word in the generators, as a sequence of generator indices. The empty
// word is the identity.
using Word = std::vector<int>;

std::string word_to_string(const CoxeterSystem& sys, const Word& w);

// Word problem solver. Elements are represented by their ShortLex normal
// form: the lexicographically least reduced word (comparing generator
// indices). Correctness rests on the fact that any two reduced words for
// the same element are connected by braid moves alone, and a non-reduced
// word admits a braid rewriting exposing a factor ss.
class WordEngine {
 public:
  explicit WordEngine(CoxeterSystem sys, std::size_t braid_cap = 200000);

  const CoxeterSystem& system() const { return sys_; }

  // ShortLex normal form of an arbitrary word.
  Word normal_form(const Word& w) const;

  // normal_form(nf * s); `nf` must already be a normal form.
  Word multiply(const Word& nf, int s) const;

  bool is_reduced(const Word& w) const;

  // Length of the element the word spells.
  int length(const Word& w) const;

  // Generators s with l(ws) < l(w), resp. l(sw) < l(w).
  GenSet right_descents(const Word& nf) const;
  GenSet left_descents(const Word& nf) const;

 private:
  // All words reachable from `w` by braid moves. Stops early (returning
  // what it has plus `shorter`) when a free cancellation is found.
  std::vector<Word> braid_class(const Word& w, Word* shorter) const;

  CoxeterSystem sys_;
  std::size_t braid_cap_;
};

struct Ball {
  int radius;
  std::vector<Word> elements;          // normal forms, (length, lex) order
  std::map<Word, int> index;           // element -> position in `elements`
  std::vector<std::uint64_t> counts;   // counts[k] = #elements of length k
};

// All elements of length <= radius, by breadth-first search from the
// identity. Throws LimitExceeded past `cap` elements.
Ball enumerate_ball(const WordEngine& eng, int radius,
                    std::size_t cap = 1000000);

// Weighted count of elements: q_w = product of q over any reduced word
// for w. Requires every q_s >= 2 and q_s == q_t whenever m_st is finite
// and odd (otherwise q_w would be ill-defined).
// Returns {n -> #{w : q_w = n}} for all n <= bound with a nonzero count.
std::map<std::uint64_t, std::uint64_t> weighted_element_counts(
    const WordEngine& eng, const std::vector<std::uint64_t>& thickness,
    std::uint64_t bound, std::size_t cap = 1000000);

}  // namespace weyl

#endif
