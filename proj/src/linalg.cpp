#include "kconj/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace kconj {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const mpz_class& x) { return x == 0; });
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && (*this)(r, c) != 0) return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const mpz_class& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const mpz_class& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
    }
  return r;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

mpz_class determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t rank_bareiss(IntMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    m.swap_rows(rank, p);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = m(rank, c) * m(i, j) - m(i, c) * m(rank, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
      m(i, c) = 0;
    }
    prev = m(rank, c);
    ++rank;
  }
  return rank;
}

std::size_t SmithForm::rank() const { return invariant_factors().size(); }

std::vector<mpz_class> SmithForm::invariant_factors() const {
  std::vector<mpz_class> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
    if (d(i, i) != 0) out.push_back(d(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm f{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  IntMatrix& d = f.d;
  const std::size_t rows = d.rows(), cols = d.cols();

  auto row_op = [&](std::size_t dst, std::size_t src, const mpz_class& k) {
    d.add_row_multiple(dst, src, k);
    f.u.add_row_multiple(dst, src, k);
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const mpz_class& k) {
    d.add_col_multiple(dst, src, k);
    f.v.add_col_multiple(dst, src, k);
  };
  auto swap_r = [&](std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    f.u.swap_rows(a, b);
  };
  auto swap_c = [&](std::size_t a, std::size_t b) {
    d.swap_cols(a, b);
    f.v.swap_cols(a, b);
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    auto bring_min_to_pivot = [&]() {
      std::size_t br = rows, bc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (d(i, j) != 0 && (br == rows || abs(d(i, j)) < abs(d(br, bc)))) {
            br = i;
            bc = j;
          }
      if (br == rows) return false;
      swap_r(t, br);
      swap_c(t, bc);
      return true;
    };
    if (!bring_min_to_pivot()) break;

    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        row_op(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        col_op(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder is smaller than the pivot: move it into place.
        std::size_t br = t, bc = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (d(i, t) != 0 && abs(d(i, t)) < abs(d(br, bc))) br = i, bc = t;
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(t, j) != 0 && abs(d(t, j)) < abs(d(br, bc))) br = t, bc = j;
        swap_r(t, br);
        swap_c(t, bc);
        continue;
      }
      // Row and column are clear; enforce divisibility of the trailing block.
      std::size_t bad_row = rows;
      for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (bad_row == rows) break;
      row_op(t, bad_row, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      f.u.negate_row(t);
    }
  }
  return f;
}

namespace {

struct DisjointSets {
  std::vector<std::uint32_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0U); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

struct Overflow {};

struct CheckedInt {
  using Value = std::int64_t;
  static Value combine(Value a, Value x, Value b, Value y) {
    __int128 r = static_cast<__int128>(a) * x - static_cast<__int128>(b) * y;
    if (r > INT64_MAX || r < -INT64_MAX) throw Overflow{};
    return static_cast<Value>(r);
  }
  static Value from(std::int64_t x) { return x; }
  static bool is_zero(Value v) { return v == 0; }
  static Value gcd(Value a, Value b) { return std::gcd(a, b); }
  static Value div(Value a, Value b) { return a / b; }
};

struct BigInt {
  using Value = mpz_class;
  static Value combine(const Value& a, const Value& x, const Value& b, const Value& y) { return a * x - b * y; }
  static Value from(std::int64_t x) { return mpz_class(static_cast<long>(x)); }
  static bool is_zero(const Value& v) { return v == 0; }
  static Value gcd(const Value& a, const Value& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }
  static Value div(const Value& a, const Value& b) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
};

// Row-echelon insertion: each stored vector owns the pivot at its leading
// row. A new column is reduced on its leading entry until it either finds a
// free pivot row or vanishes.
template <class Arith>
std::size_t eliminate_block(const std::vector<SparseColumn>& columns, const SparseBlock& block) {
  using V = typename Arith::Value;
  using Vec = std::vector<std::pair<std::uint32_t, V>>;
  const auto& codes = block.row_codes;
  std::vector<std::int64_t> pivot_of(codes.size(), -1);
  std::vector<Vec> pivots;
  Vec v, w;
  for (std::size_t cid : block.column_ids) {
    v.clear();
    for (const auto& [code, x] : columns[cid].entries) {
      auto row = static_cast<std::uint32_t>(std::lower_bound(codes.begin(), codes.end(), code) - codes.begin());
      v.emplace_back(row, Arith::from(x));
    }
    while (!v.empty()) {
      const std::uint32_t lead = v.front().first;
      if (pivot_of[lead] < 0) {
        pivot_of[lead] = static_cast<std::int64_t>(pivots.size());
        pivots.push_back(v);
        break;
      }
      const Vec& p = pivots[static_cast<std::size_t>(pivot_of[lead])];
      V g = Arith::gcd(p.front().second, v.front().second);
      V a = Arith::div(p.front().second, g), b = Arith::div(v.front().second, g);
      // w = a*v - b*p, merged by row.
      w.clear();
      std::size_t i = 0, j = 0;
      V content = 0;
      while (i < v.size() || j < p.size()) {
        std::uint32_t r;
        V val;
        if (j == p.size() || (i < v.size() && v[i].first < p[j].first)) {
          r = v[i].first;
          val = Arith::combine(a, v[i].second, 0, 0);
          ++i;
        } else if (i == v.size() || p[j].first < v[i].first) {
          r = p[j].first;
          val = Arith::combine(0, 0, b, p[j].second);
          ++j;
        } else {
          r = v[i].first;
          val = Arith::combine(a, v[i].second, b, p[j].second);
          ++i;
          ++j;
        }
        if (!Arith::is_zero(val)) {
          content = Arith::gcd(content, val);
          w.emplace_back(r, std::move(val));
        }
      }
      if (!Arith::is_zero(content) && content != 1)
        for (auto& [r, val] : w) val = Arith::div(val, content);
      std::swap(v, w);
    }
  }
  return pivots.size();
}

}  // namespace

std::vector<SparseBlock> connected_blocks(const std::vector<SparseColumn>& columns) {
  std::vector<std::uint64_t> codes;
  for (const auto& c : columns)
    for (const auto& [code, x] : c.entries) codes.push_back(code);
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  if (codes.size() > UINT32_MAX) throw std::length_error("too many rows for sparse elimination");
  auto index = [&](std::uint64_t code) {
    return static_cast<std::uint32_t>(std::lower_bound(codes.begin(), codes.end(), code) - codes.begin());
  };
  DisjointSets sets(codes.size());
  for (const auto& c : columns)
    for (std::size_t k = 1; k < c.entries.size(); ++k) sets.unite(index(c.entries[0].first), index(c.entries[k].first));

  std::vector<std::int64_t> block_of_root(codes.size(), -1);
  std::vector<SparseBlock> blocks;
  for (std::size_t cid = 0; cid < columns.size(); ++cid) {
    const auto& c = columns[cid];
    if (c.entries.empty()) continue;
    std::uint32_t root = sets.find(index(c.entries.front().first));
    if (block_of_root[root] < 0) {
      block_of_root[root] = static_cast<std::int64_t>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(block_of_root[root])].column_ids.push_back(cid);
  }
  for (std::size_t r = 0; r < codes.size(); ++r) {
    std::int64_t b = block_of_root[sets.find(static_cast<std::uint32_t>(r))];
    if (b >= 0) blocks[static_cast<std::size_t>(b)].row_codes.push_back(codes[r]);
  }
  return blocks;
}

std::size_t sparse_rank(const std::vector<SparseColumn>& columns, SparseRankStats* stats, unsigned threads) {
  std::vector<SparseBlock> blocks = connected_blocks(columns);
  std::atomic<std::size_t> total{0}, fallbacks{0}, next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t b = next.fetch_add(1);
      if (b >= blocks.size()) break;
      std::size_t r;
      try {
        r = eliminate_block<CheckedInt>(columns, blocks[b]);
      } catch (const Overflow&) {
        ++fallbacks;
        r = eliminate_block<BigInt>(columns, blocks[b]);
      }
      total += r;
    }
  };
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(blocks.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (stats) {
    stats->components = blocks.size();
    stats->largest_component = 0;
    for (const auto& b : blocks) stats->largest_component = std::max(stats->largest_component, b.column_ids.size());
    stats->gmp_fallbacks = fallbacks;
  }
  return total;
}

}  // namespace kconj
