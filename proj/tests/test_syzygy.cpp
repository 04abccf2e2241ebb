#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ponsyz/binform.hpp"
#include "ponsyz/syzygy.hpp"

using namespace ponsyz;

namespace {

LinearSystem sys(std::initializer_list<const char*> forms) {
  std::vector<BinForm> out;
  for (const char* f : forms) out.push_back(parse_form(f));
  return LinearSystem(std::move(out));
}

LinearSystem example_b() { return sys({"u^4", "u^3 v", "v^4"}); }
LinearSystem cayley() {
  return sys({"u^5 + v^5", "u^5 - u^4 v + u^3 v^2 - u^2 v^3 + u v^4", "u^5 - v^5"});
}

std::vector<Rational> ints(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

SplittingType parts(std::initializer_list<unsigned> ps) { return SplittingType{ps, 0}; }

}  // namespace

TEST(LinearSystem, RejectsDependentAndMixedDegrees) {
  EXPECT_THROW(sys({"u^2", "2 u^2"}), Error);
  EXPECT_THROW(sys({"u^2", "u v^2"}), Error);
  EXPECT_THROW(LinearSystem({}), Error);
}

TEST(LinearSystem, ComplementAndMembership) {
  const LinearSystem s = sys({"u^4", "u^2 v^2", "v^4"});
  EXPECT_EQ(s.complement_columns(), (std::vector<std::size_t>{1, 3}));
  EXPECT_TRUE(s.contains(parse_form("3 u^4 - v^4")));
  EXPECT_FALSE(s.contains(parse_form("u^3 v")));
}

TEST(Phi, RankAndKernelForExampleB) {
  const auto phi = build_phi(example_b(), 1);
  EXPECT_EQ(phi.rows(), 6u);
  EXPECT_EQ(phi.cols(), 6u);
  EXPECT_EQ(rank(phi), 5u);
  const auto kernel = kernel_basis(phi);
  ASSERT_EQ(kernel.size(), 1u);
  EXPECT_EQ(kernel[0], ints({-1, 0, 0, 1, 0, 0}));
}

TEST(Phi, SingleFormIsInjective) {
  const LinearSystem s = sys({"u^3"});
  for (std::size_t d = 0; d < 4; ++d) EXPECT_EQ(rank(build_phi(s, d)), d + 1);
}

TEST(Phi, ConstantDegreeIsBasisMatrix) { EXPECT_EQ(rank(build_phi(sys({"u^2", "u v", "v^2"}), 0)), 3u); }

TEST(Syzygy, CountsOnFixtures) {
  EXPECT_EQ(syzygy_count(sys({"u^2", "u v", "v^2"}), 0), 0u);
  EXPECT_EQ(syzygy_count(example_b(), 1), 1u);
  EXPECT_EQ(syzygy_count(cayley(), 1), 1u);
  EXPECT_EQ(syzygy_count(sys({"u^4", "u^2 v^2", "v^4"}), 1), 0u);
}

TEST(Syzygy, ExampleBWitness) {
  const auto basis = syzygy_basis(example_b(), 1);
  ASSERT_EQ(basis.size(), 1u);
  // (-v, u, 0), proportional to (v, -u, 0).
  EXPECT_EQ(basis[0].entries[0], parse_form("-v"));
  EXPECT_EQ(basis[0].entries[1], parse_form("u"));
  EXPECT_TRUE(basis[0].entries[2].is_zero());
}

TEST(Syzygy, CayleyWitness) {
  const auto basis = syzygy_basis(cayley(), 1);
  ASSERT_EQ(basis.size(), 1u);
  // Proportional to (u, -(u+v), 0).
  EXPECT_EQ(basis[0].entries[0], parse_form("-u"));
  EXPECT_EQ(basis[0].entries[1], parse_form("u + v"));
  EXPECT_TRUE(basis[0].entries[2].is_zero());
  EXPECT_TRUE(apply_syzygy(cayley(), basis[0]).is_zero());
}

TEST(Syzygy, QuadraticsHaveTwoLinearSyzygies) {
  // <u^2, uv, v^2> has the two relations (v, -u, 0) and (0, v, -u).
  const auto basis = syzygy_basis(sys({"u^2", "u v", "v^2"}), 1);
  ASSERT_EQ(basis.size(), 2u);
  EXPECT_EQ(kernel_basis(build_phi(sys({"u^2", "u v", "v^2"}), 1)),
            (std::vector<std::vector<Rational>>{ints({-1, 0, 0, 1, 0, 0}), ints({0, 0, -1, 0, 0, 1})}));
}

TEST(Splitting, Fixtures) {
  EXPECT_EQ(splitting_type(example_b()), parts({1, 3}));
  EXPECT_EQ(splitting_type(sys({"u^5", "u^4 v", "u^3 v^2", "v^5"})), parts({1, 1, 3}));
  for (std::size_t n = 1; n <= 6; ++n) {
    const LinearSystem s({BinForm::monomial(n, 0), BinForm::monomial(0, n)});
    EXPECT_EQ(splitting_type(s), parts({static_cast<unsigned>(n)}));
  }
  const SplittingType fixpt = splitting_type(sys({"u^3 v", "u v^3", "v^4"}));
  EXPECT_EQ(fixpt.base_degree, 1u);
  EXPECT_EQ(fixpt.sum(), 3u);
  EXPECT_EQ(to_string(parts({1, 3})), "(1,3)");
}

TEST(BaseDivisor, Fixtures) {
  EXPECT_EQ(to_string(base_divisor(sys({"u^3 v", "u v^3", "v^4"}))), "v");
  EXPECT_EQ(to_string(base_divisor(sys({"u^2", "u v", "v^2"}))), "1");
  EXPECT_EQ(to_string(base_divisor(sys({"u^4", "u^3 v", "u v^3"}))), "u");
}

TEST(Codimension, FormulaValues) {
  EXPECT_EQ(expected_codim(3, 5, 1, 1), 0);
  EXPECT_EQ(expected_codim(3, 5, 2, 1), 2);
  EXPECT_EQ(expected_codim(2, 4, 1, 1), 1);
}

TEST(Codimension, GenericSplitting) {
  EXPECT_EQ(generic_splitting(3, 5, 2, 1), parts({1, 1, 3}));
  EXPECT_EQ(generic_splitting(3, 5, 1, 1), parts({1, 2, 2}));
  EXPECT_EQ(generic_splitting(2, 5, 1, 1), parts({1, 4}));
  EXPECT_THROW((void)generic_splitting(2, 4, 1, 2), Error);
}

TEST(Codimension, H1End) {
  EXPECT_EQ(h1_end(parts({1, 2, 2})), 0);
  EXPECT_EQ(h1_end(parts({1, 1, 3})), 2);
  EXPECT_EQ(h1_end(parts({1, 3})), 1);
  for (unsigned n = 1; n < 8; ++n) EXPECT_EQ(h1_end(parts({n})), 0);
  EXPECT_THROW((void)h1_end(SplittingType{{1, 2}, 1}), Error);
}

TEST(Codimension, TangentFixtures) {
  EXPECT_EQ(tangent_codim(sys({"u^5", "u^4 v", "u^3 v^2", "v^5"}), 1), 2);
  EXPECT_EQ(tangent_codim(example_b(), 1), 1);
  const LinearSystem hb = hilbert_burch_sample(parts({2, 2}), 1);
  EXPECT_EQ(tangent_codim(hb, 2), 0);
  EXPECT_THROW((void)tangent_codim(sys({"u^3 v", "u v^3", "v^4"}), 1), Error);
  EXPECT_THROW((void)tangent_codim(sys({"u^4", "u^2 v^2", "v^4"}), 1), Error);
}

TEST(HilbertBurch, CountsFollowTheH0Formula) {
  struct Case {
    std::vector<unsigned> parts;
    std::uint64_t seed;
  };
  for (const Case& c : {Case{{1, 3}, 1}, Case{{2, 2}, 1}, Case{{1, 1, 3}, 7}, Case{{1, 2, 2}, 3}, Case{{2, 3}, 4}}) {
    const SplittingType target{c.parts, 0};
    const LinearSystem s = hilbert_burch_sample(target, c.seed);
    EXPECT_EQ(s.k(), c.parts.size());
    EXPECT_EQ(s.n(), target.sum());
    EXPECT_EQ(splitting_type(s), target);
    for (std::size_t d = 0; d <= s.n() + 1; ++d)
      EXPECT_EQ(syzygy_count(s, d), oracle::h0_split(c.parts, static_cast<long>(d))) << "d = " << d;
  }
  EXPECT_EQ(syzygy_counts(hilbert_burch_sample(parts({1, 3}), 1), 3), (std::vector<std::size_t>{0, 1, 2, 4}));
}

TEST(HilbertBurch, IsDeterministicPerSeed) {
  EXPECT_EQ(hilbert_burch_sample(parts({1, 2, 2}), 5).forms(), hilbert_burch_sample(parts({1, 2, 2}), 5).forms());
  EXPECT_NE(hilbert_burch_sample(parts({1, 2, 2}), 5).forms(), hilbert_burch_sample(parts({1, 2, 2}), 6).forms());
}

TEST(LinearSyzygy, Normalization) {
  const auto b = normalize_linear_syzygy(example_b());
  ASSERT_TRUE(b.has_value());
  EXPECT_EQ(to_string(b->f), "u^3");

  const LinearSystem cay = cayley();
  const auto c = normalize_linear_syzygy(cay);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(to_string(c->f), "u^4 - u^3 v + u^2 v^2 - u v^3 + v^4");
  ASSERT_EQ(c->basis.size(), 3u);
  const LinearSystem rebased(c->basis);
  for (const auto& g : cay.forms()) EXPECT_TRUE(rebased.contains(g));

  EXPECT_FALSE(normalize_linear_syzygy(sys({"u^4", "u^2 v^2", "v^4"})).has_value());
}

TEST(VerifyDime, TripleAgreement) {
  for (const auto& [k, n, r, d, value] :
       std::vector<std::tuple<long, long, long, long, long>>{{3, 5, 2, 1, 2}, {2, 4, 1, 1, 1}, {2, 5, 1, 1, 2}}) {
    for (const auto& rep : verify_dime(k, n, r, d, 5, 1)) {
      EXPECT_TRUE(rep.agree());
      EXPECT_EQ(rep.tangent_codim, value);
    }
  }
}

TEST(SyzygyProperty, SmallDegreeAlwaysHasLinearSyzygy) {
  // n < 2k forces dim Phi_1 domain 2(k+1) > n + 2.
  SeededRng rng(41);
  for (const auto& [k, n] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 5}, {4, 6}, {4, 7}, {2, 3}}) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<BinForm> forms;
      for (std::size_t i = 0; i <= k; ++i) forms.push_back(rng.form(n));
      LinearSystem s(std::move(forms));
      EXPECT_GE(syzygy_count(s, 1), 1u);
    }
  }
}

TEST(SyzygyProperty, BasisMultipliesBackToZero) {
  SeededRng rng(42);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 4 + static_cast<std::size_t>(trial % 3);
    std::vector<BinForm> forms;
    for (std::size_t i = 0; i < 3; ++i) forms.push_back(rng.form(n, 10));
    const LinearSystem s(std::move(forms));
    for (std::size_t d = 1; d <= n; ++d) {
      const auto basis = syzygy_basis(s, d);
      EXPECT_EQ(basis.size(), syzygy_count(s, d));
      for (const auto& z : basis) {
        EXPECT_EQ(z.degree, d);
        BinForm sum(n + d);
        for (std::size_t i = 0; i < 3; ++i) sum += z.entries[i] * s.forms()[i];
        EXPECT_TRUE(sum.is_zero());
      }
    }
  }
}

TEST(SyzygyProperty, InvariantUnderBasisChange) {
  SeededRng rng(43);
  for (const LinearSystem& s : {example_b(), cayley(), sys({"u^5", "u^4 v", "u^3 v^2", "v^5"}),
                                sys({"u^3 v", "u v^3", "v^4"})}) {
    const auto counts = syzygy_counts(s, s.n());
    for (int trial = 0; trial < 5; ++trial) {
      const LinearSystem t(oracle::recombine(rng, s.forms()));
      EXPECT_EQ(syzygy_counts(t, t.n()), counts);
      EXPECT_EQ(splitting_type(t), splitting_type(s));
      EXPECT_EQ(base_divisor(t), base_divisor(s));
    }
  }
}
