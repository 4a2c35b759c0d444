// Copyright 2026 The qcorr developers.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "qcorr/states.hpp"

using namespace qcorr;

TEST_CASE("PureState validates shape and norm", "[states]") {
  const DimensionProfile two = DimensionProfile::qubits(2);
  REQUIRE_THROWS_AS(PureState({1.0, 0.0, 0.0}, two), std::invalid_argument);
  REQUIRE_THROWS_AS(PureState({1.0, 1.0, 0.0, 0.0}, two), std::invalid_argument);
  REQUIRE_NOTHROW(PureState({1.0, 0.0, 0.0, 0.0}, two));

  const double r = 1.0 / std::sqrt(2.0);
  const PureState psi({r, 0.0, 0.0, r}, two);
  const ComplexMatrix p = psi.projector();
  REQUIRE(std::abs(p(0, 0) - Complex{0.5}) < 1e-15);
  REQUIRE(std::abs(p(0, 3) - Complex{0.5}) < 1e-15);
  REQUIRE(p(1, 1) == Complex{0.0});
  REQUIRE(is_projection(p));
}

TEST_CASE("named states have the advertised amplitudes", "[states]") {
  SECTION("GHZ = (|000> - |111>)/sqrt(2)") {
    const PureState ghz = make_ghz();
    const double r = 1.0 / std::sqrt(2.0);
    REQUIRE(ghz.dim() == 8);
    REQUIRE(ghz.amplitudes()[0] == Complex{r});
    REQUIRE(ghz.amplitudes()[7] == Complex{-r});
    for (const std::size_t j : {1, 2, 3, 4, 5, 6})
      REQUIRE(ghz.amplitudes()[j] == Complex{0.0});
  }
  SECTION("W = (|011> + |101> + |110>)/sqrt(3)") {
    const PureState w = make_w();
    const double r = 1.0 / std::sqrt(3.0);
    for (const std::size_t j : {3, 5, 6})
      REQUIRE(w.amplitudes()[j] == Complex{r});
    for (const std::size_t j : {0, 1, 2, 4, 7})
      REQUIRE(w.amplitudes()[j] == Complex{0.0});
  }
  SECTION("Bell basis is orthonormal") {
    for (int k = 1; k <= 4; ++k)
      for (int l = 1; l <= 4; ++l) {
        Complex overlap = 0.0;
        const std::vector<Complex> a = make_bell(k).amplitudes();
        const std::vector<Complex> b = make_bell(l).amplitudes();
        for (std::size_t j = 0; j < 4; ++j) overlap += std::conj(a[j]) * b[j];
        REQUIRE(std::abs(overlap - (k == l ? 1.0 : 0.0)) < 1e-12);
      }
    REQUIRE_THROWS_AS(make_bell(0), std::out_of_range);
    REQUIRE_THROWS_AS(make_bell(5), std::out_of_range);
  }
  SECTION("basis_state places a single amplitude") {
    const DimensionProfile two = DimensionProfile::qubits(2);
    const PureState s = basis_state(two, {1, 0});
    REQUIRE(s.amplitudes()[2] == Complex{1.0});
    REQUIRE_THROWS_AS(basis_state(two, {2, 0}), std::out_of_range);
    REQUIRE_THROWS_AS(basis_state(two, {0}), std::invalid_argument);
  }
}

TEST_CASE("StateDecomposition validates weights and profiles", "[states]") {
  const DimensionProfile two = DimensionProfile::qubits(2);
  const PureState s00 = basis_state(two, {0, 0});
  const PureState s11 = basis_state(two, {1, 1});

  REQUIRE_NOTHROW(StateDecomposition({{0.5, s00}, {0.5, s11}}));
  REQUIRE_THROWS_AS(StateDecomposition({{0.6, s00}, {0.6, s11}}),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(StateDecomposition({{1.5, s00}, {-0.5, s11}}),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(StateDecomposition(std::vector<StateDecomposition::Term>{}),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(StateDecomposition({{0.5, s00}, {0.5, make_ghz()}}),
                    std::invalid_argument);

  const StateDecomposition trivial = StateDecomposition::pure(s00);
  REQUIRE(trivial.size() == 1);
  REQUIRE(trivial.terms()[0].weight == 1.0);
}

TEST_CASE("DensityOperator construction checks", "[states]") {
  const DimensionProfile one({2});
  SECTION("valid density matrices pass") {
    REQUIRE_NOTHROW(DensityOperator(ComplexMatrix(2, 2, {0.5, 0, 0, 0.5}), one));
  }
  SECTION("non-Hermitian rejected") {
    REQUIRE_THROWS_AS(DensityOperator(ComplexMatrix(2, 2, {0.5, 0.1, 0, 0.5}), one),
                      std::invalid_argument);
  }
  SECTION("trace must be one") {
    REQUIRE_THROWS_AS(DensityOperator(ComplexMatrix(2, 2, {0.5, 0, 0, 0.4}), one),
                      std::invalid_argument);
  }
  SECTION("probe vectors catch negative operators") {
    REQUIRE_THROWS_AS(DensityOperator(ComplexMatrix(2, 2, {1.5, 0, 0, -0.5}), one),
                      std::invalid_argument);
    const ComplexMatrix excess(2, 2, {0.5, 0.9, 0.9, 0.5});
    REQUIRE_THROWS_AS(DensityOperator(excess, one), std::invalid_argument);
  }
}

TEST_CASE("density_of mixes projectors by weight", "[states]") {
  const DimensionProfile two = DimensionProfile::qubits(2);

  SECTION("two different statistical contents, one density matrix") {
    const StateDecomposition computational({{0.5, basis_state(two, {0, 0})},
                                            {0.5, basis_state(two, {1, 1})}});
    const StateDecomposition bell({{0.5, make_bell(1)}, {0.5, make_bell(2)}});
    REQUIRE(max_abs_diff(density_of(computational).matrix(),
                         density_of(bell).matrix()) < 1e-15);
    const DensityOperator rho = density_of(computational);
    REQUIRE(rho.matrix()(0, 0) == Complex{0.5});
    REQUIRE(rho.matrix()(3, 3) == Complex{0.5});
    REQUIRE(rho.matrix()(0, 3) == Complex{0.0});
  }
  SECTION("global phase does not change the density matrix") {
    testutil::Rng rng(testutil::kSeed);
    const PureState psi = testutil::random_pure(rng, 2);
    const Complex phase = std::polar(1.0, 0.77);
    std::vector<Complex> rotated = psi.amplitudes();
    for (Complex& a : rotated) a *= phase;
    const PureState psi2(std::move(rotated), psi.profile());
    REQUIRE(max_abs_diff(density_of(psi).matrix(), density_of(psi2).matrix()) <
            1e-15);
  }
}

TEST_CASE("reduce traces out chosen factors", "[states]") {
  SECTION("reduced GHZ over the third qubit is the even-parity mixture") {
    const DensityOperator rho = reduce(make_ghz(), {3});
    REQUIRE(rho.profile() == DimensionProfile::qubits(2));
    ComplexMatrix expected(4, 4);
    expected(0, 0) = 0.5;
    expected(3, 3) = 0.5;
    REQUIRE(max_abs_diff(rho.matrix(), expected) < 1e-15);
  }
  SECTION("reduced GHZ over two qubits is maximally mixed") {
    const DensityOperator rho = reduce(make_ghz(), {1, 2});
    REQUIRE(max_abs_diff(rho.matrix(),
                         Complex{0.5, 0.0} * ComplexMatrix::identity(2)) < 1e-15);
  }
  SECTION("reduced W over the third qubit mixes a Bell state with |11>") {
    const DensityOperator rho = reduce(make_w(), {3});
    // 2/3 |B3><B3| + 1/3 |11><11| expanded in the computational basis.
    ComplexMatrix expected(4, 4);
    const Complex third{1.0 / 3.0, 0.0};
    expected(1, 1) = third;
    expected(1, 2) = third;
    expected(2, 1) = third;
    expected(2, 2) = third;
    expected(3, 3) = third;
    REQUIRE(max_abs_diff(rho.matrix(), expected) < 1e-15);

    const StateDecomposition mix({{2.0 / 3.0, make_bell(3)},
                                  {1.0 / 3.0,
                                   basis_state(DimensionProfile::qubits(2), {1, 1})}});
    REQUIRE(max_abs_diff(rho.matrix(), density_of(mix).matrix()) < 1e-15);
  }
  SECTION("reducing a decomposition reduces its density matrix") {
    testutil::Rng rng(testutil::kSeed + 3);
    const StateDecomposition d = testutil::random_decomposition(rng, 3);
    REQUIRE(max_abs_diff(reduce(d, {2}).matrix(),
                         reduce(density_of(d), {2}).matrix()) == 0.0);
  }
  SECTION("tracing every factor is rejected") {
    REQUIRE_THROWS_AS(reduce(make_ghz(), {1, 2, 3}), std::invalid_argument);
  }
}
