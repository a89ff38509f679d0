#include "hypsurf/cosets.hpp"

#include <numeric>

#include "hypsurf/errors.hpp"

namespace hypsurf {

namespace {

constexpr int kUndefined = -1;

class Enumerator {
 public:
  Enumerator(int columns, int max_cosets) : columns_(columns), max_cosets_(max_cosets) { new_coset(); }

  // Returns false once the coset budget is exhausted.
  bool run(const std::vector<Word>& relators, const std::vector<Word>& subgens) {
    for (const Word& w : subgens) {
      if (!scan_and_fill(0, w)) return false;
    }
    for (int c = 0; c < static_cast<int>(table_.size()); ++c) {
      for (const Word& r : relators) {
        if (!alive(c)) break;
        if (!scan_and_fill(c, r)) return false;
      }
      for (int x = 0; x < columns_ && alive(c); ++x) {
        if (table_[c][x] == kUndefined && !define(c, x)) return false;
      }
    }
    return true;
  }

  int live() const { return live_; }

  std::vector<std::vector<int>> compact() const {
    std::vector<int> renumber(table_.size(), kUndefined);
    int next = 0;
    for (std::size_t c = 0; c < table_.size(); ++c)
      if (parent_[c] == static_cast<int>(c)) renumber[c] = next++;
    std::vector<std::vector<int>> rows;
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (renumber[c] == kUndefined) continue;
      std::vector<int> row(columns_);
      for (int x = 0; x < columns_; ++x) row[x] = table_[c][x] == kUndefined ? kUndefined : renumber[table_[c][x]];
      rows.push_back(std::move(row));
    }
    return rows;
  }

 private:
  bool alive(int c) const { return parent_[c] == c; }

  int new_coset() {
    int c = static_cast<int>(table_.size());
    table_.emplace_back(columns_, kUndefined);
    parent_.push_back(c);
    ++live_;
    return c;
  }

  bool define(int c, int x) {
    if (live_ >= max_cosets_) return false;
    int d = new_coset();
    table_[c][x] = d;
    table_[d][inverse_letter(x)] = c;
    return true;
  }

  bool scan_and_fill(int c, const Word& w) {
    if (w.empty()) return true;
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    for (;;) {
      while (i <= j && table_[f][w[i]] != kUndefined) f = table_[f][w[i++]];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j >= i && table_[b][inverse_letter(w[j])] != kUndefined) b = table_[b][inverse_letter(w[j--])];
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (i == j) {
        table_[f][w[i]] = b;
        table_[b][inverse_letter(w[i])] = f;
        return true;
      }
      if (!define(f, w[i])) return false;
    }
  }

  int rep(int c) {
    int r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      int next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(int k, int l, std::vector<int>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[l] = k;
    --live_;
    queue.push_back(l);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      int e = queue[q];
      for (int x = 0; x < columns_; ++x) {
        int f = table_[e][x];
        if (f == kUndefined) continue;
        if (table_[f][inverse_letter(x)] == e) table_[f][inverse_letter(x)] = kUndefined;
        int e1 = rep(e);
        int f1 = rep(f);
        if (table_[e1][x] != kUndefined) {
          merge(f1, table_[e1][x], queue);
        } else if (table_[f1][inverse_letter(x)] != kUndefined) {
          merge(e1, table_[f1][inverse_letter(x)], queue);
        } else {
          table_[e1][x] = f1;
          table_[f1][inverse_letter(x)] = e1;
        }
      }
    }
  }

  int columns_;
  int max_cosets_;
  int live_ = 0;
  std::vector<std::vector<int>> table_;
  std::vector<int> parent_;
};

}  // namespace

CosetTable coset_enumerate(const SurfacePresentation& p, const std::vector<Word>& subgens, int max_cosets) {
  for (const Word& w : subgens) {
    if (!is_freely_reduced(w)) throw DomainError(ErrorKind::BadWord, "subgroup generator '" + format_word(w) + "' is not freely reduced");
    for (Letter l : w)
      if (l < 0 || l >= p.letter_count()) throw DomainError(ErrorKind::BadWord, "letter outside the presentation");
  }
  Enumerator e(p.letter_count(), max_cosets);
  CosetTable out;
  out.columns = p.letter_count();
  bool done = e.run({p.relator()}, subgens);
  out.live_cosets = e.live();
  if (done) {
    out.status = CosetTable::Status::Closed;
    out.rows = e.compact();
  }
  return out;
}

std::vector<std::vector<int>> letter_permutations(const CosetTable& t) {
  std::vector<std::vector<int>> out(t.columns, std::vector<int>(t.rows.size()));
  for (std::size_t c = 0; c < t.rows.size(); ++c)
    for (int x = 0; x < t.columns; ++x) out[x][c] = t.rows[c][x];
  return out;
}

int trace_word(const CosetTable& t, int start, const Word& w) {
  int c = start;
  for (Letter l : w) c = t.rows.at(c).at(l);
  return c;
}

int quotient_genus(int base_genus, int index) { return 1 + index * (base_genus - 1); }

}  // namespace hypsurf
