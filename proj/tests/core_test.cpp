// Copyright 2026 The framefree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <numbers>
#include <vector>

#include "gtest/gtest.h"

#include "framefree/quantum_core.hpp"
#include "test_util.hpp"

using namespace framefree;
using framefree::testing::max_abs;
using framefree::testing::random_density;
using framefree::testing::random_pure_state;

namespace {

StateVector singlet() {
    Vector v = Vector::Zero(4);
    v[1] = 1.0 / std::sqrt(2.0);
    v[2] = -1.0 / std::sqrt(2.0);
    return StateVector(v);
}

Matrix pauli_x() {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

// ∫ cos²(β/2) sin β dβ / ∫ sin β dβ over [0, π] by composite Simpson. The
// Haar measure in Euler angles is ∝ sin β dα dβ dγ and |R₀₀|² = cos²(β/2),
// so the α and γ integrals cancel.
double euler_quadrature_mean_r00_squared(int intervals) {
    const double h = std::numbers::pi / intervals;
    double num = 0.0;
    double den = 0.0;
    for (int i = 0; i <= intervals; ++i) {
        const double beta = i * h;
        const double w = (i == 0 || i == intervals) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        const double c = std::cos(beta / 2);
        num += w * c * c * std::sin(beta);
        den += w * std::sin(beta);
    }
    return num / den;
}

}  // namespace

TEST(random_source, same_seed_same_stream) {
    RandomSource a(7);
    RandomSource b(7);
    for (int i = 0; i < 100; ++i) ASSERT_EQ(a(), b());
    RandomSource c(8);
    EXPECT_NE(RandomSource(7)(), c());
}

TEST(random_source, split_is_deterministic_and_independent_of_parent_progress) {
    RandomSource parent(11);
    RandomSource child_before = parent.split(3);
    for (int i = 0; i < 10; ++i) parent();
    RandomSource child_after = parent.split(3);
    for (int i = 0; i < 20; ++i) ASSERT_EQ(child_before(), child_after());
    EXPECT_NE(parent.split(3)(), parent.split(4)());
}

TEST(random_source, uniform_in_unit_interval) {
    RandomSource rng(1);
    double sum = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double u = rng.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
    }
    EXPECT_NEAR(sum / 10000, 0.5, 0.01);
}

TEST(states, state_vector_rejects_unnormalized_and_non_finite) {
    Vector v = Vector::Zero(2);
    v[0] = 2.0;
    EXPECT_THROW(StateVector{v}, std::invalid_argument);
    v[0] = std::nan("");
    EXPECT_THROW(StateVector{v}, std::invalid_argument);
    EXPECT_THROW(StateVector::normalized(Vector::Zero(2)), std::invalid_argument);
    EXPECT_NO_THROW(StateVector::basis(4, 3));
}

TEST(states, density_operator_validation) {
    Matrix m = Matrix::Identity(2, 2);
    EXPECT_THROW(DensityOperator{m}, std::invalid_argument);  // trace 2
    Matrix neg(2, 2);
    neg << 1.5, 0.0, 0.0, -0.5;
    EXPECT_THROW(DensityOperator{neg}, std::invalid_argument);
    Matrix nonherm(2, 2);
    nonherm << 0.5, 0.3, 0.0, 0.5;
    EXPECT_THROW(DensityOperator{nonherm}, std::invalid_argument);
    EXPECT_NO_THROW(DensityOperator::maximally_mixed(8));
}

TEST(haar_random_su2, group_membership) {
    RandomSource rng(5);
    for (int i = 0; i < 1000; ++i) {
        const GroupElement g = haar_random_su2(rng);
        ASSERT_LT(unitarity_residual(g.matrix()), 1e-10);
        ASSERT_LT(std::abs(g.matrix().determinant() - 1.0), 1e-10);
    }
}

TEST(haar_random_su2, first_and_second_moments) {
    const double oracle = euler_quadrature_mean_r00_squared(2000);
    ASSERT_NEAR(oracle, 0.5, 1e-9);

    RandomSource rng(2024);
    const int samples = 100000;
    Matrix mean = Matrix::Zero(2, 2);
    double r00_sq = 0.0;
    for (int i = 0; i < samples; ++i) {
        const GroupElement g = haar_random_su2(rng);
        mean += g.matrix();
        r00_sq += std::norm(g(0, 0));
    }
    mean /= samples;
    EXPECT_LT(max_abs(mean), 0.02);
    EXPECT_NEAR(r00_sq / samples, oracle, 0.01);
}

TEST(haar_random_su2, reproducible_from_seed) {
    RandomSource a(99);
    RandomSource b(99);
    EXPECT_EQ(haar_random_su2(a).matrix(), haar_random_su2(b).matrix());
}

TEST(group_element, rejects_non_special_unitary) {
    Matrix m = Matrix::Identity(2, 2);
    m(1, 1) = -1.0;  // det −1
    EXPECT_THROW(GroupElement{m}, std::invalid_argument);
    EXPECT_THROW(GroupElement{Matrix::Identity(2, 2) * 2.0}, std::invalid_argument);
    EXPECT_THROW(GroupElement{Matrix::Identity(3, 3)}, std::invalid_argument);
}

TEST(collective_rotation, identity_and_single_factor) {
    EXPECT_LT(max_abs(collective_rotation(GroupElement::identity(), 3) - Matrix::Identity(8, 8)), 1e-15);
    RandomSource rng(3);
    const GroupElement g = haar_random_su2(rng);
    EXPECT_LT(max_abs(collective_rotation(g, 1) - g.matrix()), 1e-15);
    EXPECT_THROW(collective_rotation(g, 0), std::invalid_argument);
}

TEST(collective_rotation, singlet_invariant_up_to_phase) {
    RandomSource rng(17);
    const StateVector s = singlet();
    for (int i = 0; i < 100; ++i) {
        const StateVector out = s.evolved(collective_rotation(haar_random_su2(rng), 2));
        ASSERT_NEAR(std::abs(out.inner(s)), 1.0, 1e-12);
    }
}

TEST(collective_rotation, unitary_up_to_ten_qubits) {
    RandomSource rng(23);
    for (std::size_t n = 1; n <= 10; ++n) {
        const Matrix u = collective_rotation(haar_random_su2(rng), n);
        ASSERT_LT(unitarity_residual(u), 1e-10) << "n = " << n;
    }
}

TEST(collective_rotation, in_place_application_matches_matrix) {
    RandomSource rng(29);
    for (std::size_t n = 1; n <= 6; ++n) {
        const GroupElement g = haar_random_su2(rng);
        const StateVector psi = random_pure_state(std::size_t{1} << n, rng);
        const StateVector a = psi.evolved(collective_rotation(g, n));
        const StateVector b = apply_collective_rotation(g, n, psi);
        ASSERT_LT((a.amplitudes() - b.amplitudes()).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(tensor, basic_cases) {
    Matrix one(1, 1);
    one(0, 0) = 1.0;
    RandomSource rng(31);
    const Matrix m = framefree::testing::random_vector(6, rng).reshaped(2, 3);
    EXPECT_EQ(tensor(one, m), m);
    EXPECT_EQ(tensor(Matrix(Matrix::Identity(2, 2)), Matrix(Matrix::Identity(2, 2))), Matrix(Matrix::Identity(4, 4)));

    const Vector flipped = tensor(pauli_x(), pauli_x()) * StateVector::basis(4, 0).amplitudes();
    EXPECT_EQ(flipped, StateVector::basis(4, 3).amplitudes());
}

TEST(tensor, index_convention_and_associativity) {
    RandomSource rng(37);
    // Small-integer entries keep every product exact.
    auto integer_matrix = [&](Eigen::Index r, Eigen::Index c) {
        Matrix m(r, c);
        for (Eigen::Index i = 0; i < m.size(); ++i)
            m(i) = cplx(static_cast<double>(rng() % 7) - 3, static_cast<double>(rng() % 7) - 3);
        return m;
    };
    const Matrix a = integer_matrix(2, 3);
    const Matrix b = integer_matrix(4, 1);
    const Matrix c = integer_matrix(3, 2);
    const Matrix ab = tensor(a, b);
    for (Eigen::Index ia = 0; ia < a.rows(); ++ia)
        for (Eigen::Index ja = 0; ja < a.cols(); ++ja)
            for (Eigen::Index ib = 0; ib < b.rows(); ++ib)
                for (Eigen::Index jb = 0; jb < b.cols(); ++jb)
                    ASSERT_EQ(ab(ia * b.rows() + ib, ja * b.cols() + jb), a(ia, ja) * b(ib, jb));
    EXPECT_EQ(tensor(tensor(a, b), c), tensor(a, tensor(b, c)));
}

TEST(partial_trace, singlet_marginals_are_maximally_mixed) {
    const DensityOperator rho = DensityOperator::pure(singlet());
    const DensityOperator left = partial_trace(rho, {0}, {2, 2});
    const DensityOperator right = partial_trace(rho, {1}, {2, 2});
    EXPECT_LT(max_abs(left.matrix() - Matrix::Identity(2, 2) / 2.0), 1e-15);
    EXPECT_LT(max_abs(right.matrix() - Matrix::Identity(2, 2) / 2.0), 1e-15);
}

TEST(partial_trace, keep_everything_and_product_states) {
    RandomSource rng(41);
    const DensityOperator rho = random_density(4, rng);
    EXPECT_EQ(partial_trace(rho, {0, 1}, {2, 2}).matrix(), rho.matrix());

    const DensityOperator zz = DensityOperator::pure(StateVector::basis(4, 0));
    Matrix expected = Matrix::Zero(2, 2);
    expected(0, 0) = 1.0;
    EXPECT_EQ(partial_trace(zz, {0}, {2, 2}).matrix(), expected);
}

TEST(partial_trace, product_of_random_states_and_trace_preservation) {
    RandomSource rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        const DensityOperator a = random_density(2, rng);
        const DensityOperator b = random_density(3, rng);
        const DensityOperator c = random_density(2, rng);
        const DensityOperator abc = DensityOperator::from_trusted(tensor(tensor(a.matrix(), b.matrix()), c.matrix()));
        EXPECT_LT(max_abs(partial_trace(abc, {1}, {2, 3, 2}).matrix() - b.matrix()), 1e-12);
        EXPECT_LT(max_abs(partial_trace(abc, {0, 2}, {2, 3, 2}).matrix() - tensor(a.matrix(), c.matrix())), 1e-12);
        const DensityOperator r = random_density(12, rng);
        EXPECT_NEAR(partial_trace(r, {2}, {2, 3, 2}).matrix().trace().real(), 1.0, 1e-12);
    }
}

TEST(partial_trace, rejects_inconsistent_dims) {
    const DensityOperator rho = DensityOperator::maximally_mixed(4);
    EXPECT_THROW(partial_trace(rho, {0}, {2, 3}), std::invalid_argument);
    EXPECT_THROW(partial_trace(rho, {2}, {2, 2}), std::invalid_argument);
}

TEST(metrics, fidelity_cases) {
    RandomSource rng(47);
    const DensityOperator rho = random_density(3, rng);
    EXPECT_NEAR(fidelity(rho, rho), 1.0, 1e-9);
    const DensityOperator zero = DensityOperator::pure(StateVector::basis(2, 0));
    const DensityOperator one = DensityOperator::pure(StateVector::basis(2, 1));
    EXPECT_NEAR(fidelity(zero, one), 0.0, 1e-12);
    EXPECT_NEAR(fidelity(zero, DensityOperator::maximally_mixed(2)), 0.5, 1e-12);
    EXPECT_THROW(fidelity(zero, DensityOperator::maximally_mixed(3)), std::invalid_argument);
}

TEST(metrics, fidelity_pure_reduction) {
    RandomSource rng(53);
    for (int i = 0; i < 20; ++i) {
        const DensityOperator rho = random_density(4, rng);
        const StateVector psi = random_pure_state(4, rng);
        EXPECT_NEAR(fidelity(rho, DensityOperator::pure(psi)), fidelity(rho, psi), 1e-9);
        EXPECT_NEAR(fidelity(DensityOperator::pure(psi), rho), fidelity(rho, psi), 1e-9);
    }
}

TEST(metrics, trace_distance_cases) {
    RandomSource rng(59);
    const DensityOperator rho = random_density(3, rng);
    EXPECT_NEAR(trace_distance(rho, rho), 0.0, 1e-12);
    const DensityOperator zero = DensityOperator::pure(StateVector::basis(2, 0));
    const DensityOperator one = DensityOperator::pure(StateVector::basis(2, 1));
    EXPECT_NEAR(trace_distance(zero, one), 1.0, 1e-12);
    EXPECT_THROW(trace_distance(zero, DensityOperator::maximally_mixed(3)), std::invalid_argument);
}

TEST(metrics, fuchs_van_de_graaf_sandwich) {
    RandomSource rng(61);
    for (int i = 0; i < 100; ++i) {
        const std::size_t dim = 2 + i % 4;
        const DensityOperator rho = random_density(dim, rng, 1 + i % dim);
        const DensityOperator sigma = random_density(dim, rng, 1 + (i / 2) % dim);
        const double f = fidelity(rho, sigma);
        const double d = trace_distance(rho, sigma);
        ASSERT_LE(1.0 - std::sqrt(f), d + 1e-9);
        ASSERT_LE(d, std::sqrt(1.0 - f) + 1e-9);
    }
}

TEST(metrics, hermitian_eigen_residual_contract) {
    RandomSource rng(67);
    const Matrix a = random_density(6, rng).matrix();
    const HermitianEigen eig = hermitian_eigen(a);
    for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
        ASSERT_LT((a * eig.vectors.col(k) - eig.values[k] * eig.vectors.col(k)).norm(), 1e-9);
    }
}
