#include <doctest.h>

#include <random>

#include "kconj/linalg.hpp"
#include "kconj/random.hpp"
#include "snf_oracle.hpp"

using namespace kconj;

namespace {

oracle::Dense dense(const IntMatrix& m) {
  oracle::Dense out(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

void check_valid(const IntMatrix& m, const SmithForm& s) {
  CHECK(s.u * m * s.v == s.d);
  CHECK(s.d.is_diagonal());
  CHECK(abs(determinant(s.u)) == 1);
  CHECK(abs(determinant(s.v)) == 1);
  auto f = s.invariant_factors();
  for (std::size_t k = 0; k + 1 < f.size(); ++k) CHECK(f[k + 1] % f[k] == 0);
}

}  // namespace

TEST_CASE("Smith form of [[2,4],[6,8]]") {
  IntMatrix m{{2, 4}, {6, 8}};
  SmithForm s = smith_normal_form(m);
  check_valid(m, s);
  CHECK(s.d == IntMatrix({{2, 0}, {0, 4}}));
  CHECK(abs(determinant(m)) == 8);
}

TEST_CASE("Smith form of identity and zero") {
  IntMatrix id = IntMatrix::identity(3);
  CHECK(smith_normal_form(id).d == id);
  IntMatrix z(2, 3);
  SmithForm s = smith_normal_form(z);
  CHECK(s.d.is_zero());
  CHECK(s.rank() == 0);
  check_valid(z, s);
}

TEST_CASE("Smith form agrees with the reference reduction") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  for (int i = 0; i < 60; ++i) {
    IntMatrix m = random_int_matrix(dim(rng), dim(rng), 50, rng);
    SmithForm s = smith_normal_form(m);
    check_valid(m, s);
    CHECK(s.invariant_factors() == oracle::invariant_factors(dense(m)));
  }
}

TEST_CASE("reference reduction agrees with determinantal divisors") {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int i = 0; i < 40; ++i) {
    IntMatrix m = random_int_matrix(dim(rng), dim(rng), 6, rng);
    // Force some rank deficiency and shared factors.
    if (i % 3 == 0 && m.rows() > 1)
      for (std::size_t c = 0; c < m.cols(); ++c) m(m.rows() - 1, c) = 2 * m(0, c);
    CHECK(oracle::invariant_factors(dense(m)) == oracle::determinantal_factors(dense(m)));
    CHECK(smith_normal_form(m).invariant_factors() == oracle::determinantal_factors(dense(m)));
  }
}

TEST_CASE("torsion example") {
  IntMatrix m{{2, 0, 0}, {0, 3, 0}, {0, 0, 0}};
  auto f = smith_normal_form(m).invariant_factors();
  CHECK(f == std::vector<mpz_class>{1, 6});
}

TEST_CASE("sparse rank matches Bareiss") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::size_t> dim(1, 12);
  std::uniform_int_distribution<int> keep(0, 3);
  for (int i = 0; i < 80; ++i) {
    IntMatrix m = random_int_matrix(dim(rng), dim(rng), 9, rng);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (keep(rng) != 0) m(r, c) = 0;
    std::vector<SparseColumn> cols(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
      for (std::size_t r = 0; r < m.rows(); ++r)
        if (m(r, c) != 0) cols[c].entries.emplace_back(r * 1000 + 17, m(r, c).get_si());
    SparseRankStats stats;
    CHECK(sparse_rank(cols, &stats) == rank_bareiss(m));
    CHECK(sparse_rank(cols, nullptr, 3) == rank_bareiss(m));
  }
}

TEST_CASE("sparse rank survives 64-bit overflow") {
  // Entries near 2^40 force the checked path to give up.
  std::vector<SparseColumn> cols(6);
  IntMatrix m(6, 6);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> big(-(std::int64_t{1} << 40), std::int64_t{1} << 40);
  for (std::size_t c = 0; c < 6; ++c)
    for (std::size_t r = 0; r < 6; ++r) {
      std::int64_t x = big(rng);
      if (r == 5) x = 0;
      m(r, c) = static_cast<long>(x);
      if (x) cols[c].entries.emplace_back(r, x);
    }
  SparseRankStats stats;
  CHECK(sparse_rank(cols, &stats) == rank_bareiss(m));
  CHECK(stats.gmp_fallbacks > 0);
}

TEST_CASE("connected blocks split independent pieces") {
  std::vector<SparseColumn> cols(3);
  cols[0].entries = {{1, 1}, {2, 1}};
  cols[1].entries = {{5, 2}};
  cols[2].entries = {{2, -1}};
  auto blocks = connected_blocks(cols);
  CHECK(blocks.size() == 2);
}
