#include "weyl/words.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace weyl {

std::string word_to_string(const CoxeterSystem& sys, const Word& w) {
  if (w.empty()) return "e";
  std::ostringstream out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out << ".";
    out << sys.name(w[i]);
  }
  return out.str();
}

WordEngine::WordEngine(CoxeterSystem sys, std::size_t braid_cap)
    : sys_(std::move(sys)), braid_cap_(braid_cap) {}

std::vector<Word> WordEngine::braid_class(const Word& w, Word* shorter) const {
  std::set<Word> seen{w};
  std::vector<Word> queue{w};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    Word cur = queue[qi];
    for (size_t i = 0; i + 1 < cur.size(); ++i) {
      if (cur[i] == cur[i + 1]) {
        if (shorter) {
          shorter->assign(cur.begin(), cur.begin() + i);
          shorter->insert(shorter->end(), cur.begin() + i + 2, cur.end());
        }
        return {};
      }
    }
    for (size_t i = 0; i < cur.size(); ++i) {
      for (size_t j = i + 1; j < cur.size(); ++j) {
        // alternating run s,t,s,... of length j-i+1 starting at i?
        if (cur[j] != cur[(j - i) % 2 == 0 ? i : i + 1]) break;
        int s = cur[i], t = cur[i + 1];
        int m = sys_.label(s, t);
        if (m == kInfLabel) break;
        if (static_cast<int>(j - i + 1) != m) continue;
        Word next = cur;
        for (size_t k = i; k <= j; ++k)
          next[k] = ((k - i) % 2 == 0) ? t : s;
        if (seen.insert(next).second) {
          if (seen.size() > braid_cap_)
            throw Error(ErrorCode::LimitExceeded, "braid class cap exceeded");
          queue.push_back(next);
        }
      }
    }
  }
  return queue;
}

Word WordEngine::normal_form(const Word& w) const {
  for (int s : w)
    if (s < 0 || s >= sys_.rank())
      throw Error(ErrorCode::UnknownGenerator, "generator index out of range");
  Word cur = w;
  for (;;) {
    Word shorter;
    auto cls = braid_class(cur, &shorter);
    if (cls.empty()) {
      cur = std::move(shorter);
      continue;
    }
    return *std::min_element(cls.begin(), cls.end());
  }
}

Word WordEngine::multiply(const Word& nf, int s) const {
  Word w = nf;
  w.push_back(s);
  return normal_form(w);
}

bool WordEngine::is_reduced(const Word& w) const {
  return static_cast<int>(w.size()) == length(w);
}

int WordEngine::length(const Word& w) const {
  return static_cast<int>(normal_form(w).size());
}

GenSet WordEngine::right_descents(const Word& nf) const {
  GenSet d = 0;
  for (int s = 0; s < sys_.rank(); ++s)
    if (multiply(nf, s).size() < nf.size()) d |= GenSet{1} << s;
  return d;
}

GenSet WordEngine::left_descents(const Word& nf) const {
  GenSet d = 0;
  for (int s = 0; s < sys_.rank(); ++s) {
    Word w{s};
    w.insert(w.end(), nf.begin(), nf.end());
    if (normal_form(w).size() < nf.size()) d |= GenSet{1} << s;
  }
  return d;
}

Ball enumerate_ball(const WordEngine& eng, int radius, std::size_t cap) {
  if (radius < 0) throw Error(ErrorCode::Invalid, "radius must be >= 0");
  Ball ball;
  ball.radius = radius;
  ball.counts.assign(radius + 1, 0);
  ball.elements.push_back({});
  ball.index[{}] = 0;
  ball.counts[0] = 1;
  size_t qi = 0;
  while (qi < ball.elements.size()) {
    Word cur = ball.elements[qi++];
    if (static_cast<int>(cur.size()) == radius) continue;
    for (int s = 0; s < eng.system().rank(); ++s) {
      Word next = eng.multiply(cur, s);
      if (next.size() != cur.size() + 1) continue;
      if (ball.index.count(next)) continue;
      if (ball.elements.size() >= cap)
        throw Error(ErrorCode::LimitExceeded, "ball cap exceeded");
      ball.index[next] = static_cast<int>(ball.elements.size());
      ball.elements.push_back(next);
      ++ball.counts[next.size()];
    }
  }
  // BFS from the identity already yields (length, lex) order except that
  // ties within a length follow discovery order; make it explicit.
  std::sort(ball.elements.begin(), ball.elements.end(),
            [](const Word& a, const Word& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  ball.index.clear();
  for (size_t i = 0; i < ball.elements.size(); ++i)
    ball.index[ball.elements[i]] = static_cast<int>(i);
  return ball;
}

std::map<std::uint64_t, std::uint64_t> weighted_element_counts(
    const WordEngine& eng, const std::vector<std::uint64_t>& thickness,
    std::uint64_t bound, std::size_t cap) {
  const CoxeterSystem& sys = eng.system();
  if (static_cast<int>(thickness.size()) != sys.rank())
    throw Error(ErrorCode::InvalidThickness,
                "need one thickness per generator");
  for (auto q : thickness)
    if (q < 2)
      throw Error(ErrorCode::InvalidThickness, "thickness must be >= 2");
  for (int i = 0; i < sys.rank(); ++i)
    for (int j = i + 1; j < sys.rank(); ++j) {
      int m = sys.label(i, j);
      if (m != kInfLabel && m % 2 == 1 && thickness[i] != thickness[j])
        throw Error(ErrorCode::InvalidThickness,
                    "generators joined by a finite odd label must have "
                    "equal thickness");
    }
  if (bound < 1) throw Error(ErrorCode::Invalid, "bound must be >= 1");
  // q_w >= 2^l(w), so radius log2(bound) suffices.
  int radius = 0;
  while ((std::uint64_t{1} << (radius + 1)) <= bound) ++radius;
  Ball ball = enumerate_ball(eng, radius, cap);
  std::map<std::uint64_t, std::uint64_t> counts;
  for (const Word& w : ball.elements) {
    std::uint64_t q = 1;
    bool over = false;
    for (int s : w) {
      q *= thickness[s];
      if (q > bound) {
        over = true;
        break;
      }
    }
    if (!over) ++counts[q];
  }
  return counts;
}

}  // namespace weyl
