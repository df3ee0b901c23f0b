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

#include <chrono>
#include <cmath>
#include <map>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gtest/gtest.h"

#include "framefree/irrep_decomposition.hpp"
#include "framefree/quantum_core.hpp"
#include "test_util.hpp"

using namespace framefree;
using framefree::testing::max_abs;

namespace {

using Rational = boost::multiprecision::cpp_rational;

Rational exact_factorial(int k) {
    Rational r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

struct ExactCG {
    Rational squared;
    int sign;
    double value() const { return sign * std::sqrt(static_cast<double>(squared)); }
};

// Racah's formula in exact rational arithmetic. All arguments are passed as
// twice their value.
ExactCG racah_exact(int tj1, int tm1, int tj2, int tm2, int tj, int tm) {
    if (tm != tm1 + tm2) return {0, 0};
    auto f = [](int twice_sum) { return exact_factorial(twice_sum / 2); };
    const Rational pre = Rational(tj + 1) * f(tj1 + tj2 - tj) * f(tj1 - tj2 + tj) * f(-tj1 + tj2 + tj) /
                         f(tj1 + tj2 + tj + 2) * f(tj + tm) * f(tj - tm) * f(tj1 - tm1) * f(tj1 + tm1) * f(tj2 - tm2) *
                         f(tj2 + tm2);
    Rational sum = 0;
    for (int k = 0; k <= 40; ++k) {
        const int args[] = {2 * k,           tj1 + tj2 - tj - 2 * k, tj1 - tm1 - 2 * k,
                            tj2 + tm2 - 2 * k, tj - tj2 + tm1 + 2 * k, tj - tj1 - tm2 + 2 * k};
        bool valid = true;
        Rational denom = 1;
        for (int a : args) {
            if (a < 0) {
                valid = false;
                break;
            }
            denom *= f(a);
        }
        if (!valid) continue;
        sum += Rational(k % 2 ? -1 : 1) / denom;
    }
    return {pre * sum * sum, sum > 0 ? 1 : (sum < 0 ? -1 : 0)};
}

// Count of ±½ step sequences from ½ that never go negative and end at 2j = tj,
// by exhaustive enumeration of all 2^(n−1) sequences.
std::uint64_t brute_force_path_count(std::size_t n, int tj) {
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
        int t = 1;
        bool ok = true;
        for (std::size_t k = 0; k + 1 < n && ok; ++k) {
            t += ((mask >> (n - 2 - k)) & 1) ? -1 : +1;
            ok = t >= 0;
        }
        if (ok && t == tj) ++count;
    }
    return count;
}

HalfInteger h(int twice) { return HalfInteger::from_twice(twice); }

}  // namespace

TEST(half_integer, exact_arithmetic) {
    EXPECT_EQ(h(1) + h(1), HalfInteger::whole(1));
    EXPECT_EQ((h(3) - h(5)).twice(), -2);
    EXPECT_TRUE(h(4).is_integer());
    EXPECT_FALSE(h(3).is_integer());
    EXPECT_EQ(h(3).irrep_dim(), 4);
    EXPECT_EQ(h(3).str(), "3/2");
    EXPECT_EQ(h(-4).str(), "-2");
    EXPECT_LT(h(1), h(2));
}

TEST(clebsch_gordan, spin_half_pairs) {
    EXPECT_NEAR(clebsch_gordan(h(1), h(1), h(1), h(1), h(2), h(2)), 1.0, 1e-15);
    EXPECT_NEAR(clebsch_gordan(h(1), h(1), h(1), h(-1), h(0), h(0)), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(clebsch_gordan(h(1), h(-1), h(1), h(1), h(0), h(0)), -1 / std::sqrt(2.0), 1e-15);
    EXPECT_EQ(clebsch_gordan(h(1), h(1), h(1), h(1), h(2), h(0)), 0.0);
}

TEST(clebsch_gordan, matches_exact_racah_oracle) {
    int checked = 0;
    for (int tj1 = 0; tj1 <= 6; ++tj1) {
        for (int tj2 = 0; tj2 <= 6; ++tj2) {
            for (int tj = std::abs(tj1 - tj2); tj <= tj1 + tj2; tj += 2) {
                for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2) {
                    for (int tm2 = -tj2; tm2 <= tj2; tm2 += 2) {
                        for (int tm = -tj; tm <= tj; tm += 2) {
                            const double got = clebsch_gordan(h(tj1), h(tm1), h(tj2), h(tm2), h(tj), h(tm));
                            const ExactCG want = racah_exact(tj1, tm1, tj2, tm2, tj, tm);
                            ASSERT_NEAR(got, want.value(), 1e-12)
                                << tj1 << " " << tm1 << " " << tj2 << " " << tm2 << " " << tj << " " << tm;
                            ++checked;
                        }
                    }
                }
            }
        }
    }
    EXPECT_GT(checked, 1000);
}

TEST(clebsch_gordan, orthonormality_for_spin_half_coupling) {
    // Σ_{m1,m2} ⟨j1 m1; ½ m2|j m⟩⟨j1 m1; ½ m2|j' m⟩ = δ_{jj'}.
    for (int tj1 = 0; tj1 <= 8; ++tj1) {
        for (int tj = std::abs(tj1 - 1); tj <= tj1 + 1; tj += 2) {
            for (int tjp = std::abs(tj1 - 1); tjp <= tj1 + 1; tjp += 2) {
                const int tm_max = std::min(tj, tjp);
                for (int tm = -tm_max; tm <= tm_max; tm += 2) {
                    double acc = 0.0;
                    for (int tm2 : {1, -1}) {
                        const int tm1 = tm - tm2;
                        if (std::abs(tm1) > tj1) continue;
                        acc += clebsch_gordan(h(tj1), h(tm1), h(1), h(tm2), h(tj), h(tm)) *
                               clebsch_gordan(h(tj1), h(tm1), h(1), h(tm2), h(tjp), h(tm));
                    }
                    ASSERT_NEAR(acc, tj == tjp ? 1.0 : 0.0, 1e-13);
                }
            }
        }
    }
}

TEST(clebsch_gordan, rejects_invalid_arguments) {
    EXPECT_THROW(clebsch_gordan(h(1), h(3), h(1), h(1), h(2), h(2)), std::invalid_argument);  // |m1| > j1
    EXPECT_THROW(clebsch_gordan(h(1), h(1), h(1), h(1), h(4), h(2)), std::invalid_argument);  // triangle
    EXPECT_THROW(clebsch_gordan(h(1), h(1), h(1), h(1), h(1), h(1)), std::invalid_argument);  // parity
    EXPECT_THROW(clebsch_gordan(h(2), h(1), h(1), h(1), h(1), h(1)), std::invalid_argument);  // m parity
}

TEST(multiplicity, named_values) {
    EXPECT_EQ(multiplicity(4, h(0)), 2u);
    EXPECT_EQ(multiplicity(4, h(4)), 1u);
    EXPECT_EQ(multiplicity(6, h(2)), brute_force_path_count(6, 2));
    EXPECT_EQ(multiplicity(6, h(2)), 9u);
    EXPECT_EQ(multiplicity(3, h(1)), 2u);
}

TEST(multiplicity, rejects_invalid_spin) {
    EXPECT_THROW(multiplicity(4, h(1)), std::invalid_argument);  // parity
    EXPECT_THROW(multiplicity(4, h(6)), std::invalid_argument);  // j > n/2
    EXPECT_THROW(multiplicity(0, h(0)), std::invalid_argument);
    EXPECT_THROW(multiplicity(65, h(1)), std::invalid_argument);
}

TEST(multiplicity, closed_form_matches_path_counting) {
    for (std::size_t n = 1; n <= 16; ++n) {
        for (HalfInteger j : allowed_spins(n)) {
            const std::uint64_t brute = brute_force_path_count(n, j.twice());
            ASSERT_EQ(multiplicity(n, j), brute) << "n = " << n << " j = " << j;
            if (n <= 10) ASSERT_EQ(enumerate_paths(n, j).size(), brute);
        }
    }
}

TEST(multiplicity, dimension_sum_rule) {
    for (std::size_t n = 1; n <= 62; ++n) {
        unsigned __int128 dim = 0;
        for (const auto& row : multiplicity_table(n)) dim += static_cast<unsigned __int128>(row.j.irrep_dim()) * row.multiplicity;
        ASSERT_TRUE(dim == (static_cast<unsigned __int128>(1) << n)) << "n = " << n;
    }
}

TEST(total_irrep_count, named_values) {
    EXPECT_EQ(total_irrep_count(2), 2u);
    EXPECT_EQ(total_irrep_count(4), 6u);
    EXPECT_EQ(total_irrep_count(6), 20u);
    EXPECT_EQ(total_irrep_count(6), 5u + 9u + 5u + 1u);
    for (std::size_t n = 1; n <= 64; ++n) ASSERT_EQ(total_irrep_count(n), binomial(n, n / 2)) << "n = " << n;
    EXPECT_THROW(total_irrep_count(0), std::invalid_argument);
}

TEST(enumerate_paths, small_cases) {
    const auto two = enumerate_paths(2, h(0));
    ASSERT_EQ(two.size(), 1u);
    EXPECT_EQ(two[0], CouplingPath({h(1), h(0)}));

    const auto three = enumerate_paths(3, h(3));
    ASSERT_EQ(three.size(), 1u);
    EXPECT_EQ(three[0], CouplingPath({h(1), h(2), h(3)}));
}

TEST(enumerate_paths, four_qubit_singlets_against_exhaustive_oracle) {
    // All 2³ step sequences, filtered to valid paths ending at 0.
    std::vector<CouplingPath> oracle;
    for (int mask = 0; mask < 8; ++mask) {
        std::vector<HalfInteger> p{h(1)};
        bool ok = true;
        for (int k = 0; k < 3 && ok; ++k) {
            p.push_back(h(p.back().twice() + (((mask >> (2 - k)) & 1) ? -1 : +1)));
            ok = !p.back().is_negative();
        }
        if (ok && p.back() == h(0)) oracle.emplace_back(p);
    }
    ASSERT_EQ(oracle.size(), 2u);
    const auto got = enumerate_paths(4, h(0));
    ASSERT_EQ(got.size(), 2u);
    // +½ steps first: [½,1,½,0] precedes [½,0,½,0].
    EXPECT_EQ(got[0], CouplingPath({h(1), h(2), h(1), h(0)}));
    EXPECT_EQ(got[1], CouplingPath({h(1), h(0), h(1), h(0)}));
    EXPECT_TRUE(std::find(oracle.begin(), oracle.end(), got[0]) != oracle.end());
    EXPECT_TRUE(std::find(oracle.begin(), oracle.end(), got[1]) != oracle.end());
}

TEST(coupling_path, rejects_malformed) {
    EXPECT_THROW(CouplingPath({h(0)}), std::invalid_argument);
    EXPECT_THROW(CouplingPath({h(1), h(5)}), std::invalid_argument);
    EXPECT_THROW(CouplingPath(std::vector<HalfInteger>{}), std::invalid_argument);
}

TEST(decompose, single_qubit) {
    const IrrepDecomposition d = decompose(1);
    ASSERT_EQ(d.block_count(), 1u);
    EXPECT_EQ(d.blocks()[0].j, h(1));
    EXPECT_LT(max_abs(d.blocks()[0].isometry - Matrix::Identity(2, 2)), 1e-15);
}

TEST(decompose, two_qubits_triplet_and_singlet) {
    const IrrepDecomposition d = decompose(2);
    ASSERT_EQ(d.block_count(), 2u);
    EXPECT_EQ(d.blocks()[0].j, h(2));
    EXPECT_EQ(d.blocks()[0].isometry.cols(), 3);
    EXPECT_EQ(d.blocks()[1].j, h(0));
    Vector singlet = Vector::Zero(4);
    singlet[1] = 1 / std::sqrt(2.0);
    singlet[2] = -1 / std::sqrt(2.0);
    EXPECT_LT((d.blocks()[1].isometry.col(0) - singlet).cwiseAbs().maxCoeff(), 1e-15);
    // Triplet in the standard basis |00⟩, (|01⟩+|10⟩)/√2, |11⟩.
    EXPECT_NEAR(d.blocks()[0].isometry(0, 0).real(), 1.0, 1e-15);
    EXPECT_NEAR(d.blocks()[0].isometry(1, 1).real(), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(d.blocks()[0].isometry(2, 1).real(), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(d.blocks()[0].isometry(3, 2).real(), 1.0, 1e-15);
}

TEST(decompose, four_qubit_table_and_order) {
    const IrrepDecomposition d = decompose(4);
    const auto& table = d.multiplicity_table();
    ASSERT_EQ(table.size(), 3u);
    EXPECT_EQ(table[0].j, h(4));
    EXPECT_EQ(table[0].multiplicity, 1u);
    EXPECT_EQ(table[1].multiplicity, 3u);
    EXPECT_EQ(table[2].multiplicity, 2u);
    EXPECT_EQ(d.block_count(), 6u);
    for (std::size_t i = 1; i < d.block_count(); ++i) {
        const auto& a = d.blocks()[i - 1];
        const auto& b = d.blocks()[i];
        ASSERT_TRUE(a.j > b.j || (a.j == b.j && a.path.precedes(b.path) && b.r == a.r + 1));
    }
    EXPECT_THROW(decompose(0), std::invalid_argument);
    EXPECT_THROW(decompose(13), std::invalid_argument);
}

TEST(decompose, coupling_matrix_unitary_up_to_ten_qubits) {
    for (std::size_t n = 1; n <= 10; ++n) {
        const IrrepDecomposition d = decompose(n);
        ASSERT_EQ(d.block_count(), total_irrep_count(n));
        for (const auto& b : d.blocks()) ASSERT_LT(isometry_residual(b.isometry), 1e-10);
        ASSERT_LT(unitarity_residual(d.coupling_matrix()), 1e-10) << "n = " << n;
    }
}

TEST(decompose, blocks_are_total_spin_eigenspaces) {
    // J² = Σ_{a,b} S_a·S_b has eigenvalue j(j+1) on each block, and J_z has m.
    for (std::size_t n = 2; n <= 6; ++n) {
        const std::size_t dim = std::size_t{1} << n;
        Matrix jz = Matrix::Zero(dim, dim);
        Matrix jx = Matrix::Zero(dim, dim);
        Matrix jy = Matrix::Zero(dim, dim);
        Matrix sx(2, 2), sy(2, 2), sz(2, 2);
        sx << 0, 0.5, 0.5, 0;
        sy << 0, cplx(0, -0.5), cplx(0, 0.5), 0;
        sz << 0.5, 0, 0, -0.5;
        for (std::size_t q = 0; q < n; ++q) {
            auto lift = [&](const Matrix& s) {
                const Matrix left = Matrix::Identity(1 << q, 1 << q);
                const Matrix right = Matrix::Identity(1 << (n - 1 - q), 1 << (n - 1 - q));
                return tensor(tensor(left, s), right);
            };
            jx += lift(sx);
            jy += lift(sy);
            jz += lift(sz);
        }
        const Matrix j2 = jx * jx + jy * jy + jz * jz;
        const IrrepDecomposition d = decompose(n);
        for (const auto& b : d.blocks()) {
            const double jj = b.j.value() * (b.j.value() + 1);
            ASSERT_LT(max_abs(j2 * b.isometry - jj * b.isometry), 1e-10);
            for (Eigen::Index c = 0; c < b.isometry.cols(); ++c) {
                const double m = b.j.value() - static_cast<double>(c);
                ASSERT_LT((jz * b.isometry.col(c) - m * b.isometry.col(c)).cwiseAbs().maxCoeff(), 1e-10);
            }
            // Condon–Shortley: J₋ lowers with positive coefficient √(j(j+1) − m(m−1)).
            const Matrix jminus = jx - cplx(0, 1) * jy;
            for (Eigen::Index c = 0; c + 1 < b.isometry.cols(); ++c) {
                const double m = b.j.value() - static_cast<double>(c);
                const double coef = std::sqrt(jj - m * (m - 1));
                ASSERT_LT((jminus * b.isometry.col(c) - coef * b.isometry.col(c + 1)).cwiseAbs().maxCoeff(), 1e-10);
            }
        }
    }
}

TEST(block_projector, two_qubit_singlet_and_completeness) {
    const IrrepDecomposition d2 = decompose(2);
    Vector singlet = Vector::Zero(4);
    singlet[1] = 1 / std::sqrt(2.0);
    singlet[2] = -1 / std::sqrt(2.0);
    EXPECT_LT(max_abs(block_projector(d2, h(0), 0) - singlet * singlet.adjoint()), 1e-15);
    EXPECT_THROW(block_projector(d2, h(0), 1), std::invalid_argument);
    EXPECT_THROW(block_projector(d2, h(4), 0), std::invalid_argument);

    for (std::size_t n = 1; n <= 8; ++n) {
        const IrrepDecomposition d = decompose(n);
        Matrix sum = Matrix::Zero(d.dim(), d.dim());
        for (const auto& b : d.blocks()) sum += block_projector(d, b.j, b.r);
        ASSERT_LT(max_abs(sum - Matrix::Identity(d.dim(), d.dim())), 1e-10);
    }
}

TEST(block_projector, four_qubit_triplet_ranks_by_eigenvalue_count) {
    const IrrepDecomposition d = decompose(4);
    for (std::size_t r = 0; r < 3; ++r) {
        const RealVector ev = hermitian_eigenvalues(block_projector(d, h(2), r));
        int ones = 0;
        for (Eigen::Index i = 0; i < ev.size(); ++i) {
            if (std::abs(ev[i] - 1.0) < 1e-9) ++ones;
            else ASSERT_LT(std::abs(ev[i]), 1e-9);
        }
        EXPECT_EQ(ones, 3);
    }
}

TEST(block_projector, pairwise_orthogonal) {
    for (std::size_t n = 2; n <= 6; ++n) {
        const IrrepDecomposition d = decompose(n);
        for (std::size_t a = 0; a < d.block_count(); ++a) {
            for (std::size_t b = a + 1; b < d.block_count(); ++b) {
                const auto& ba = d.blocks()[a];
                const auto& bb = d.blocks()[b];
                ASSERT_LT(max_abs(block_projector(d, ba.j, ba.r) * block_projector(d, bb.j, bb.r)), 1e-10);
            }
        }
    }
}

TEST(block_projector, commutes_with_collective_rotations) {
    RandomSource rng(101);
    for (std::size_t n : {2u, 3u, 4u, 5u, 6u, 8u}) {
        const IrrepDecomposition d = decompose(n);
        const int samples = n <= 6 ? 20 : 3;
        for (int s = 0; s < samples; ++s) {
            const Matrix u = collective_rotation(haar_random_su2(rng), n);
            for (const auto& b : d.blocks()) {
                const Matrix p = block_projector(d, b.j, b.r);
                ASSERT_LT(max_abs(p * u - u * p), 1e-9);
            }
        }
    }
}

TEST(block_projector, equal_j_blocks_carry_identical_representation) {
    // V_{j,r}† U V_{j,r} is the same D^j(g) for every r.
    RandomSource rng(103);
    const IrrepDecomposition d = decompose(6);
    for (int s = 0; s < 5; ++s) {
        const Matrix u = collective_rotation(haar_random_su2(rng), 6);
        for (const auto& row : d.multiplicity_table()) {
            const Matrix& v0 = d.block(row.j, 0).isometry;
            const Matrix d0 = v0.adjoint() * u * v0;
            for (std::size_t r = 1; r < row.multiplicity; ++r) {
                const Matrix& vr = d.block(row.j, r).isometry;
                ASSERT_LT(max_abs(vr.adjoint() * u * vr - d0), 1e-10);
                ASSERT_LT(max_abs(vr.adjoint() * u * v0), 1e-10);
            }
        }
    }
}

TEST(decompose, irreducibility_witness) {
    // Commutant of the sampled block representations is one-dimensional.
    RandomSource rng(107);
    for (std::size_t n = 1; n <= 8; ++n) {
        const IrrepDecomposition d = decompose(n);
        std::vector<Matrix> rotations;
        for (int s = 0; s < 20; ++s) rotations.push_back(collective_rotation(haar_random_su2(rng), n));
        for (const auto& b : d.blocks()) {
            if (b.r > 1) continue;
            const Eigen::Index k = b.isometry.cols();
            Matrix system(20 * k * k, k * k);
            for (int s = 0; s < 20; ++s) {
                const Matrix rep = b.isometry.adjoint() * rotations[s] * b.isometry;
                // vec(X D − D X) = (Dᵀ ⊗ I − I ⊗ D) vec(X), column-major vec.
                system.middleRows(s * k * k, k * k) =
                    tensor(Matrix(rep.transpose()), Matrix(Matrix::Identity(k, k))) - tensor(Matrix(Matrix::Identity(k, k)), rep);
            }
            Eigen::JacobiSVD<Matrix> svd(system);
            const RealVector sv = svd.singularValues();
            int null_dim = 0;
            for (Eigen::Index i = 0; i < sv.size(); ++i) null_dim += sv[i] < 1e-8 ? 1 : 0;
            ASSERT_EQ(null_dim, 1) << "n = " << n << " j = " << b.j;
        }
    }
}

TEST(decompose, sector_isometry_layout) {
    const IrrepDecomposition d = decompose(4);
    const Matrix v = d.sector_isometry(h(2));
    ASSERT_EQ(v.cols(), 9);
    EXPECT_LT(isometry_residual(v), 1e-12);
    for (std::size_t r = 0; r < 3; ++r)
        for (Eigen::Index m = 0; m < 3; ++m)
            ASSERT_EQ(v.col(m * 3 + static_cast<Eigen::Index>(r)), d.block(h(2), r).isometry.col(m));
}

TEST(decompose, odd_qubit_counts) {
    const IrrepDecomposition d = decompose(3);
    ASSERT_EQ(d.block_count(), 3u);
    EXPECT_EQ(d.multiplicity_of(h(1)), 2u);
    EXPECT_EQ(d.multiplicity_of(h(3)), 1u);
    EXPECT_EQ(d.multiplicity_of(h(0)), 0u);
}

TEST(decompose, twelve_qubits_within_resource_bound) {
    const auto start = std::chrono::steady_clock::now();
    const IrrepDecomposition d = decompose(12);
    EXPECT_EQ(d.block_count(), 924u);
    std::size_t columns = 0;
    for (const auto& b : d.blocks()) columns += b.irrep_dim();
    EXPECT_EQ(columns, 4096u);
    EXPECT_LT(isometry_residual(d.sector_isometry(h(0))), 1e-10);
    EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 60.0);
}
