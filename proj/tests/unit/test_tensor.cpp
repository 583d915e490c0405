#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "qcr/random.hpp"
#include "qcr/tensor.hpp"

using namespace qcr;
using test::plain_layout;

namespace {

std::vector<long> as_long(const std::vector<Index>& d) { return {d.begin(), d.end()}; }

}  // namespace

TEST_CASE("index permutation reorders digits") {
  const std::vector<Index> dims{2, 3, 4};
  const std::vector<std::size_t> order{2, 0, 1};
  const auto map = index_permutation(dims, order);
  const std::vector<Index> new_dims{4, 2, 3};
  for (Index f = 0; f < 24; ++f) {
    const auto d = digits_of(f, dims);
    const Digits nd{d[2], d[0], d[1]};
    CHECK(map[static_cast<std::size_t>(f)] == flat_index(nd, new_dims));
  }
}

TEST_CASE("permute then inverse restores the state") {
  Rng rng(11);
  const Layout l = plain_layout({2, 3, 2});
  const auto s = QuantumState::density(l, random_density(12, 3, rng));
  const std::vector<std::size_t> order{1, 2, 0};
  const auto p = permute(s, order);
  CHECK(p.layout()[0].label == "R1");
  const auto back = permute(p, inverse_order(order));
  CHECK(oracle::max_abs(back.matrix() - s.matrix()) == 0.0);
}

TEST_CASE("partial trace agrees with brute-force enumeration") {
  Rng rng(3);
  const std::vector<Index> dims{2, 3, 2, 2};
  const Layout l = plain_layout(dims);
  const auto rho = random_density(24, rng);
  const auto s = QuantumState::density(l, rho);
  for (unsigned mask = 1; mask < 15; ++mask) {
    std::vector<std::string> over;
    std::vector<bool> traced(4, false);
    for (int k = 0; k < 4; ++k) {
      if (mask & (1u << k)) {
        over.push_back("R" + std::to_string(k));
        traced[static_cast<std::size_t>(k)] = true;
      }
    }
    const auto got = partial_trace(s, std::span<const std::string>(over));
    const auto want = oracle::partial_trace(rho, as_long(dims), traced);
    CHECK(oracle::max_abs(got.matrix() - want) < 1e-14);
  }
}

TEST_CASE("pure partial trace matches density partial trace") {
  Rng rng(5);
  const Layout l = plain_layout({3, 2, 2});
  const auto v = random_pure(12, rng);
  const auto pure = QuantumState::pure(l, v);
  const auto mixed = pure.as_density();
  const auto a = partial_trace(pure, {"R1"});
  const auto b = partial_trace(mixed, {"R1"});
  CHECK(oracle::max_abs(a.matrix() - b.matrix()) < 1e-14);
}

TEST_CASE("partial trace commutes with permutation") {
  Rng rng(8);
  const Layout l = plain_layout({2, 3, 2});
  const auto s = QuantumState::density(l, random_density(12, rng));
  const std::vector<std::size_t> order{2, 1, 0};
  const auto a = partial_trace(permute(s, order), {"R1"});
  const auto b = partial_trace(s, {"R1"});
  const std::vector<std::size_t> swap{1, 0};
  CHECK(oracle::max_abs(a.matrix() - permute(b, swap).matrix()) < 1e-14);
}

TEST_CASE("tensor product is the Kronecker product") {
  Rng rng(2);
  const auto ra = random_density(2, rng);
  const auto rb = random_density(3, rng);
  const auto a = QuantumState::density(plain_layout({2}), ra);
  const auto b = QuantumState::density(
      Layout({{"S0", Role::PlayerShield, 2, 3}}), rb);
  const auto ab = tensor_product(a, b);
  CHECK(ab.layout().size() == 2);
  CHECK(oracle::max_abs(ab.matrix() - oracle::kron(ra, rb)) < 1e-15);
  CHECK_THROWS_AS(tensor_product(a, b, 5), DimensionError);
  CHECK_THROWS_AS(tensor_product(a, a), LabelError);
}

TEST_CASE("partial transpose of the maximally entangled qubit pair") {
  ComplexVector v = ComplexVector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  const auto s = QuantumState::pure(plain_layout({2, 2}), v).as_density();
  const std::vector<std::string> over{"R1"};
  const ComplexMatrix pt = partial_transpose(s, std::span<const std::string>(over));
  // Oracle: the partial transpose is SWAP / 2.
  ComplexMatrix swap = ComplexMatrix::Zero(4, 4);
  swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1.0;
  CHECK(oracle::max_abs(pt - swap / 2.0) < 1e-15);
  CHECK(oracle::min_eigenvalue(pt) == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(hermitian_eigenvalues(pt).minCoeff() == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK_THROWS_AS(partial_transpose(QuantumState::pure(plain_layout({2, 2}), v), std::span<const std::string>(over)),
                  NotDensityError);
}

TEST_CASE("partial transpose agrees with element formula") {
  Rng rng(21);
  const std::vector<Index> dims{2, 3, 2};
  const auto rho = random_density(12, rng);
  const auto s = QuantumState::density(plain_layout(dims), rho);
  const std::vector<std::string> over{"R0", "R2"};
  const ComplexMatrix pt = partial_transpose(s, std::span<const std::string>(over));
  for (Index i = 0; i < 12; ++i) {
    for (Index j = 0; j < 12; ++j) {
      auto di = digits_of(i, dims), dj = digits_of(j, dims);
      std::swap(di[0], dj[0]);
      std::swap(di[2], dj[2]);
      CHECK(std::abs(pt(i, j) - rho(flat_index(di, dims), flat_index(dj, dims))) == 0.0);
    }
  }
}

TEST_CASE("trace norm matches eigenvalue oracle on Hermitian matrices") {
  Rng rng(99);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix h = random_density(6, rng) - random_density(6, rng);
    CHECK(trace_norm(h) == doctest::Approx(oracle::hermitian_trace_norm(h)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(trace_norm(ComplexMatrix::Zero(2, 3)), DimensionError);
}

TEST_CASE("trace norm of tensor product differences telescopes") {
  Rng rng(1234);
  for (int t = 0; t < 200; ++t) {
    const ComplexMatrix s1 = random_density(4, rng), s2 = random_density(4, rng);
    const ComplexMatrix t1 = random_density(4, rng), t2 = random_density(4, rng);
    const double lhs = trace_norm(oracle::kron(s1, s2) - oracle::kron(t1, t2));
    const double rhs = trace_norm(s1 - t1) + trace_norm(s2 - t2);
    CHECK(lhs <= rhs + 1e-10);
  }
}

TEST_CASE("purification round trip and environment rank") {
  Rng rng(77);
  for (int t = 0; t < 50; ++t) {
    const Index n = 2 + static_cast<Index>(t % 15);
    const Index r = 1 + static_cast<Index>(t % n);
    const auto rho = random_density(n, r, rng);
    const auto s = QuantumState::density(plain_layout({n}), rho);
    const auto p = purify(s);
    REQUIRE(p.is_pure());
    const auto env = p.layout().environment();
    REQUIRE(env);
    CHECK(p.layout()[*env].dim == oracle::rank(rho, 1e-12));
    const auto back = partial_trace(p, {"E"});
    CHECK(oracle::max_abs(back.matrix() - rho) <= 1e-12);
  }
}

TEST_CASE("purify rejects invalid inputs") {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  m(0, 0) = -0.5;
  m(1, 1) = 1.5;
  CHECK_THROWS_AS(purify(QuantumState::density(plain_layout({2}), m)), NotDensityError);
  ComplexMatrix nh = ComplexMatrix::Identity(2, 2) / 2.0;
  nh(0, 1) = 0.3;
  CHECK_THROWS_AS(purify(QuantumState::density(plain_layout({2}), nh)), NotDensityError);
  const auto pure = QuantumState::pure(plain_layout({2}), ComplexVector::Unit(2, 0));
  const auto p = purify(pure);
  CHECK(p.layout()[*p.layout().environment()].dim == 1);
  CHECK_THROWS_AS(purify(p), LabelError);
}

TEST_CASE("computational measurement") {
  ComplexVector v = ComplexVector::Zero(4);
  v(1) = std::sqrt(0.25);
  v(2) = std::sqrt(0.75);
  const auto s = QuantumState::pure(plain_layout({2, 2}), v);
  const std::vector<std::string> on{"R0"};
  const auto dist = outcome_distribution(s, std::span<const std::string>(on));
  CHECK(dist[0] == doctest::Approx(0.25));
  CHECK(dist[1] == doctest::Approx(0.75));
  const auto outs = measure_computational(s, std::span<const std::string>(on));
  REQUIRE(outs.size() == 2);
  CHECK(outs[1].outcome == Digits{1});
  CHECK(outs[1].post.layout().size() == 2);
  CHECK(std::abs(outs[1].post.vector()(2)) == doctest::Approx(1.0));
}

TEST_CASE("apply_local on pure and density states agree") {
  Rng rng(4);
  const Layout l = plain_layout({2, 3, 2});
  const auto v = random_pure(12, rng);
  const ComplexMatrix u = haar_unitary(6, rng);
  const std::vector<std::string> on{"R2", "R1"};
  const auto a = apply_unitary(QuantumState::pure(l, v), u, std::span<const std::string>(on));
  const auto b = apply_unitary(QuantumState::pure(l, v).as_density(), u, std::span<const std::string>(on));
  CHECK(oracle::max_abs(a.density_matrix() - b.matrix()) < 1e-13);
  // Oracle: on the reordered space (R2, R1, R0) the action is u (x) I.
  const std::vector<std::size_t> order{2, 1, 0};
  const auto pv = permute(QuantumState::pure(l, v), order).vector();
  const ComplexVector want = oracle::kron(u, ComplexMatrix::Identity(2, 2)) * pv;
  CHECK((permute(a, order).vector() - want).cwiseAbs().maxCoeff() < 1e-13);
  CHECK_THROWS_AS(apply_unitary(QuantumState::pure(l, v), ComplexMatrix::Ones(2, 2), std::span<const std::string>(on)),
                  NotUnitaryError);
}

TEST_CASE("Haar unitaries are unitary") {
  Rng rng(6);
  for (Index n : {1, 2, 5, 9}) CHECK(is_unitary(haar_unitary(n, rng)));
}

TEST_CASE("tensor core instantiates with long double") {
  using LState = BasicQuantumState<long double>;
  using LMat = LState::Matrix;
  LMat rho = LMat::Zero(4, 4);
  rho(0, 0) = rho(3, 3) = rho(0, 3) = rho(3, 0) = 0.5L;
  const LState s = LState::density(plain_layout({2, 2}), rho);
  const auto reduced = partial_trace(s, {"R1"});
  CHECK(std::abs(reduced.matrix()(0, 0) - 0.5L) < 1e-18L);
  const std::vector<std::string> over{"R1"};
  const LMat pt = partial_transpose(s, std::span<const std::string>(over));
  CHECK(std::abs(hermitian_eigenvalues(pt).minCoeff() + 0.5L) < 1e-15L);
  const auto p = purify(s);
  CHECK(p.layout()[*p.layout().environment()].dim == 1);
}
