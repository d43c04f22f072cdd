#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "codim3/field.hpp"
#include "codim3/linalg.hpp"

using namespace codim3;

namespace {

Matrix<PrimeField> make(const PrimeField& k, int rows, int cols,
                        std::initializer_list<int> vals) {
  Matrix<PrimeField> m(rows, cols);
  auto it = vals.begin();
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = k.from_int(*it++);
  return m;
}

}  // namespace

TEST_CASE("rref ranks and kernels over GF(3)", "[linalg]") {
  PrimeField k(3);
  auto m = make(k, 3, 3, {1, 2, 0, 2, 1, 0, 0, 0, 1});
  CHECK(rank(k, m) == 2);  // second row is twice the first mod 3
  auto ker = kernel_basis(k, m);
  REQUIRE(ker.size() == 1);
  // kernel vector satisfies M v = 0
  for (int r = 0; r < 3; ++r) {
    PrimeField::Elem s = 0;
    for (int c = 0; c < 3; ++c) s = k.add(s, k.mul(m.at(r, c), ker[0][c]));
    CHECK(s == 0);
  }
}

TEST_CASE("kernel dimension + rank = columns on random matrices", "[linalg]") {
  std::mt19937_64 rng(5);
  PrimeField k(5);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = 1 + static_cast<int>(uniform_below(rng, 8));
    int cols = 1 + static_cast<int>(uniform_below(rng, 8));
    Matrix<PrimeField> m(rows, cols);
    for (auto& e : m.a) e = k.random_element(rng);
    auto copy = m;
    int rk = rank(k, std::move(copy));
    auto ker = kernel_basis(k, m);
    CHECK(rk + static_cast<int>(ker.size()) == cols);
    for (const auto& v : ker)
      for (int r = 0; r < rows; ++r) {
        PrimeField::Elem s = 0;
        for (int c = 0; c < cols; ++c) s = k.add(s, k.mul(m.at(r, c), v[c]));
        CHECK(s == 0);
      }
  }
}

TEST_CASE("rational elimination stays exact", "[linalg]") {
  RationalField k;
  Matrix<RationalField> m(2, 3);
  m.at(0, 0) = k.from_int(2);
  m.at(0, 1) = k.from_int(4);
  m.at(0, 2) = k.from_int(1);
  m.at(1, 0) = k.from_int(1);
  m.at(1, 1) = k.from_int(2);
  m.at(1, 2) = k.from_int(3);
  auto copy = m;
  auto pivots = rref(k, copy);
  REQUIRE(pivots == std::vector<int>{0, 2});
  CHECK(copy.at(0, 1) == k.from_int(2));  // reduced row 1/2 of original
}

TEST_CASE("echelon projection recovers exact coefficients", "[linalg]") {
  PrimeField k(7);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    int dim = 4 + static_cast<int>(uniform_below(rng, 6));
    Echelon<PrimeField> ech(k, dim);
    std::vector<std::vector<PrimeField::Elem>> tagged;
    int tag = 0;
    for (int i = 0; i < dim; ++i) {
      std::vector<PrimeField::Elem> v(dim);
      for (auto& e : v) e = k.random_element(rng);
      bool is_tagged = uniform_below(rng, 2) == 0;
      if (ech.insert(v, is_tagged ? tag : -1) && is_tagged) {
        tagged.push_back(ech.back_row());
        ++tag;
      }
    }
    if (tagged.empty()) continue;
    // random combination of the tagged representatives
    std::vector<PrimeField::Elem> combo(dim, 0);
    std::vector<PrimeField::Elem> coeffs;
    for (const auto& row : tagged) {
      auto c = k.random_element(rng);
      coeffs.push_back(c);
      for (int j = 0; j < dim; ++j) combo[j] = k.add(combo[j], k.mul(c, row[j]));
    }
    auto proj = ech.project(combo);
    REQUIRE(proj.has_value());
    std::vector<PrimeField::Elem> recovered(tagged.size(), 0);
    for (auto& [t, c] : *proj) recovered[t] = c;
    CHECK(recovered == coeffs);
  }

  // a vector outside the span is rejected
  Echelon<PrimeField> ech(k, 3);
  ech.insert({1, 0, 0}, 0);
  CHECK_FALSE(ech.project({0, 1, 0}).has_value());
  CHECK(ech.project({3, 0, 0}).has_value());
}
