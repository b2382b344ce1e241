#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "susyxxz/cohomology.hpp"
#include "susyxxz/spectra.hpp"

using namespace susyxxz;

namespace {

std::mt19937_64 rng(4242);

Eigen::VectorXcd random_vector(index_t n) {
    std::normal_distribution<double> g;
    Eigen::VectorXcd v(n);
    for (index_t i = 0; i < n; ++i) v(i) = cplx(g(rng), g(rng));
    return v;
}

LinearMap diagonal_map(std::vector<double> d) {
    std::vector<LinearMap::Triplet> t;
    for (index_t i = 0; i < index_t(d.size()); ++i) t.emplace_back(i, i, d[i]);
    return LinearMap::from_triplets(1, 1, 1, t);
}

}  // namespace

TEST_CASE("numerical rank counts singular values above the relative cutoff") {
    CHECK(numerical_rank(LinearMap::identity(1, 3)).rank == 8);
    CHECK(numerical_rank(diagonal_map({2.0, 0.0})).rank == 1);
    CHECK(numerical_rank(LinearMap::from_triplets(1, 1, 1, {})).rank == 0);

    // frozen supercharge ranks of the undecorated spin-1/2 chain
    const index_t want[] = {1, 2, 5, 10};
    for (int L = 1; L <= 4; ++L) {
        auto r = numerical_rank(global_supercharge(SuperchargeSpec::make(1, L, 0.0)));
        CHECK(r.rank == want[L - 1]);
        CHECK(!r.indeterminate);
    }
}

TEST_CASE("numerical rank flags values inside the indeterminacy band") {
    auto fuzzy = numerical_rank(diagonal_map({1.0, 1e-9}));
    CHECK(fuzzy.rank == 1);
    CHECK(fuzzy.indeterminate);
    auto clear_above = numerical_rank(diagonal_map({1.0, 1e-5}));
    CHECK(clear_above.rank == 2);
    CHECK(!clear_above.indeterminate);
    auto clear_below = numerical_rank(diagonal_map({1.0, 1e-12}));
    CHECK(clear_below.rank == 1);
    CHECK(!clear_below.indeterminate);
}

TEST_CASE("betti numbers: one class per length without deformation") {
    auto rep = betti_numbers(SuperchargeSpec::make(1, 1, 0.0), 8);
    REQUIRE(rep.table.size() == 8);
    const index_t kernels[] = {1, 2, 3, 6, 11, 22, 43, 86};
    for (int L = 1; L <= 8; ++L) {
        const auto& row = rep.table[L - 1];
        CHECK(row.length == L);
        CHECK(row.dim_kernel == kernels[L - 1]);
        CHECK(row.betti == 1);
        CHECK(!row.indeterminate);
        // rank-nullity bookkeeping against the next row's incoming rank
        if (L < 8) CHECK(row.dim_kernel + rep.table[L].incoming_rank == pow_dim(1, L));
    }
    CHECK(rep.euler == 0);

    auto rep2 = betti_numbers(SuperchargeSpec::make(2, 1, 0.0), 5);
    for (const auto& row : rep2.table) {
        CHECK(row.betti == 1);
        CHECK(!row.indeterminate);
    }
    CHECK_THROWS_AS(betti_numbers(SuperchargeSpec::make(1, 1, 0.0), 0), std::invalid_argument);
}

TEST_CASE("betti numbers vanish for a deformed chain") {
    auto rep = betti_numbers(SuperchargeSpec::make(1, 1, cplx(0.7, 0.0), 1, 2), 6);
    for (const auto& row : rep.table) {
        CHECK(row.betti == 0);
        CHECK(!row.indeterminate);
    }
}

TEST_CASE("representatives are the printed tensor products") {
    SpinParams p1(1);
    auto r2 = representative(p1, 2);
    CHECK(std::abs(r2.component(std::vector<int>{0, 1}) - 1.0) < 1e-14);
    CHECK(std::abs(r2.component(std::vector<int>{1, 0}) - 1.0) < 1e-14);
    CHECK(r2.component(std::vector<int>{0, 0}) == cplx(0.0, 0.0));

    auto r3 = representative(p1, 3);
    CHECK(std::abs(r3.component(std::vector<int>{0, 0, 1}) - 1.0) < 1e-14);
    CHECK(std::abs(r3.component(std::vector<int>{0, 1, 0}) - 1.0) < 1e-14);
    CHECK(std::abs(r3.amps.lpNorm<1>() - 2.0) < 1e-13);

    auto r1 = representative(p1, 1);
    CHECK(r1.amps(0) == cplx(1.0, 0.0));

    SpinParams p2(2);
    auto c2 = representative(p2, 2);
    CHECK(std::abs(c2.component(std::vector<int>{0, 2}) - 1.0) < 1e-14);
    CHECK(std::abs(c2.component(std::vector<int>{1, 1}) - 1.0 / std::sqrt(2.0)) < 1e-14);
    CHECK(std::abs(c2.component(std::vector<int>{2, 0}) - 1.0) < 1e-14);
}

TEST_CASE("representatives are cocycles with unit alternating component") {
    for (int ell = 1; ell <= 3; ++ell) {
        SpinParams p(ell);
        for (int L = 1; L <= 6; ++L) {
            auto rep = representative(p, L);
            auto Q = global_supercharge(SuperchargeSpec::make(ell, L, 0.0));
            CHECK(Q.apply(rep.amps).norm() < 1e-12 * rep.norm());
            CHECK(std::abs(rep.component(alternating_digits(ell, L)) - 1.0) < 1e-14);
        }
    }
}

TEST_CASE("appending chi commutes with the supercharge and shifts representatives") {
    for (int ell = 1; ell <= 2; ++ell) {
        SpinParams p(ell);
        for (int L = 1; L <= 4; ++L) {
            auto S_up = chi_append(p, L + 1);
            auto S = chi_append(p, L);
            auto Q = global_supercharge(SuperchargeSpec::make(ell, L, 0.0));
            auto Q_up = global_supercharge(SuperchargeSpec::make(ell, L + 2, 0.0));
            CHECK(max_abs_diff(S_up * Q, Q_up * S) < 1e-12);
            auto shifted = S.apply(representative(p, L).amps);
            CHECK((shifted - representative(p, L + 2).amps).norm() < 1e-14);
        }
    }
}

TEST_CASE("class decomposition: coefficient of the representative plus a coboundary") {
    SpinParams p(1);
    auto self = class_decomposition(representative(p, 4));
    CHECK(std::abs(self.coefficient - 1.0) < 1e-14);
    CHECK(self.residual < 1e-10);

    // shifting by a coboundary changes neither the coefficient nor the class
    auto Q3 = global_supercharge(SuperchargeSpec::make(1, 3, 0.0));
    StateVector shifted(1, 4,
                        representative(p, 4).amps + Q3.matrix() * random_vector(pow_dim(1, 3)));
    auto dec = class_decomposition(shifted);
    CHECK(std::abs(dec.coefficient - 1.0) < 1e-12);
    CHECK(dec.residual < 1e-9);

    for (auto [ell, L] : {std::pair{1, 4}, std::pair{1, 5}, std::pair{2, 4}}) {
        auto g = zero_energy_state(ell, L);
        auto d = class_decomposition(g.vec);
        CHECK(std::abs(d.coefficient - g.vec.component(alternating_digits(ell, L))) < 1e-14);
        CHECK(std::abs(d.coefficient) > 1e-8);
        CHECK(d.residual < 1e-9);
    }

    CHECK_THROWS_AS(class_decomposition(StateVector::basis(1, std::vector<int>{1, 1, 1, 1})),
                    std::invalid_argument);
}

TEST_CASE("homology decomposition: overlap coefficient plus an adjoint coboundary") {
    auto basis = StateVector::basis(1, std::vector<int>{0, 1, 0, 1});
    auto dec = homology_decomposition(basis);
    CHECK(std::abs(dec.coefficient - 1.0) < 1e-12);
    CHECK(dec.residual < 1e-9);

    auto g2 = zero_energy_state(1, 2);
    auto d2 = homology_decomposition(g2.vec);
    CHECK(std::abs(d2.coefficient - std::sqrt(2.0)) < 1e-12);
    CHECK(d2.residual < 1e-10);

    // adjoint coboundaries leave the coefficient alone
    auto g4 = zero_energy_state(1, 4);
    auto Q4 = global_supercharge(SuperchargeSpec::make(1, 4, 0.0));
    StateVector shifted(1, 4,
                        g4.vec.amps + Q4.adjoint().matrix() * random_vector(pow_dim(1, 5)));
    auto d4 = homology_decomposition(shifted);
    CHECK(std::abs(d4.coefficient - homology_decomposition(g4.vec).coefficient) < 1e-10);

    CHECK_THROWS_AS(homology_decomposition(StateVector::basis(1, std::vector<int>{0, 0, 0, 0})),
                    std::invalid_argument);
}

TEST_CASE("square norm factorizes through the two class coefficients") {
    for (int ell = 1; ell <= 2; ++ell) {
        const int l_max = (ell == 1) ? 8 : 5;
        for (int L = 2; L <= l_max; ++L) {
            SpinParams p(ell);
            auto g = zero_energy_state(ell, L);
            const cplx lambda = g.vec.component(alternating_digits(ell, L));
            const cplx mu = g.vec.amps.dot(representative(p, L).amps);
            CHECK(std::abs(lambda * mu - 1.0) < 1e-10);
            CHECK(std::abs(lambda) > 1e-8);
        }
    }
}

TEST_CASE("paired components of even ground states scale by deformed integers") {
    for (int ell = 1; ell <= 2; ++ell) {
        SpinParams p(ell);
        for (int n = 1; n <= 3; ++n) {
            auto g = zero_energy_state(ell, 2 * n);
            const cplx lambda = g.vec.component(alternating_digits(ell, 2 * n));
            // all weakly increasing digit sequences p_1 <= ... <= p_n
            std::vector<int> seq(n, 0);
            while (true) {
                std::vector<int> digits;
                double factor = 1.0;
                for (int i = 0; i < n; ++i) {
                    digits.push_back(seq[i]);
                    digits.push_back(ell - seq[i]);
                    factor *= qnum(p, seq[i] + 1);
                }
                const cplx lhs = g.vec.component(digits) * factor;
                CHECK(std::abs(lhs - lambda) < 1e-10 * std::abs(lambda));
                int i = n - 1;
                while (i >= 0 && seq[i] == ell) --i;
                if (i < 0) break;
                ++seq[i];
                for (int j = i + 1; j < n; ++j) seq[j] = seq[i];
            }
        }
    }
}
