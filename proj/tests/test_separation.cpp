#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "reglab/error.hpp"
#include "reglab/normality.hpp"
#include "reglab/separation.hpp"
#include "support.hpp"

using namespace reglab;
using namespace testing_support;

namespace {

const Field Q = Field::rationals();

FormSpaceRecipe t1_powers(std::size_t m, unsigned from, unsigned to, bool standard) {
  FormSpaceRecipe r;
  r.t_count = m;
  r.standard = standard;
  for (unsigned j = from; j <= to; ++j) {
    Exponents e(m, 0);
    e[0] = j;
    r.spaces[j] = {Form::monomial(e)};
  }
  return r;
}

std::set<Exponents> support_of(const std::vector<Form>& forms) {
  std::set<Exponents> s;
  for (const auto& f : forms)
    for (const auto& [e, c] : f.terms()) s.insert(e);
  return s;
}

// Oracle: each separator evaluated at every point, by direct substitution.
void check_separators(const SeparatorConfig& cfg, const std::vector<Form>& forms) {
  const auto pts = cfg.points();
  REQUIRE(forms.size() == cfg.n + 3);
  const auto allowed = separating_monomials(cfg.n);
  const std::set<Exponents> allowed_set(allowed.begin(), allowed.end());
  CHECK(allowed.size() == cfg.n + 4);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    CHECK(forms[i].degree() == cfg.n);
    for (const auto& [e, c] : forms[i].terms()) CHECK(allowed_set.count(e) == 1);
    for (std::size_t j = 0; j < pts.size(); ++j) {
      mpq_class v = 0;
      for (const auto& [e, c] : forms[i].terms()) {
        mpq_class term = c.rational();
        for (std::size_t k = 0; k < 3; ++k)
          for (unsigned p = 0; p < e[k]; ++p) term *= pts[j][k].rational();
        v += term;
      }
      CHECK(v == (i == j ? 1 : 0));
    }
  }
  // rank certificate through the normality module
  std::vector<CurvilinearGerm> germs;
  for (const auto& p : pts) germs.push_back(CurvilinearGerm::reduced(ProjPoint(p)));
  std::vector<Form> monos;
  for (const auto& e : allowed) monos.push_back(Form::monomial(e));
  CHECK(rank(evaluation_matrix(FiniteScheme(2, germs), monos)) == cfg.n + 3);
  CHECK(separating_rank(cfg) == cfg.n + 3);
}

}  // namespace

TEST_CASE("separators for the case with three off-line points") {
  SeparatorConfig cfg;
  cfg.n = 3;
  cfg.which = 2;
  cfg.a = 1;
  cfg.b = 1;
  cfg.u = vec({1, 2, 3});
  cfg.off_line = {vec({1, 1, 2}), vec({1, 2, 1}), vec({1, 3, 1})};
  check_separators(cfg, lemma26_separators(cfg));
}

TEST_CASE("separators for the case with two off-line points") {
  SeparatorConfig cfg;
  cfg.n = 3;
  cfg.which = 1;
  cfg.u = vec({1, 2, 3, 4});
  cfg.off_line = {vec({1, 1, 2}), vec({1, 2, 1})};
  check_separators(cfg, lemma26_separators(cfg));
}

TEST_CASE("separator configuration validation") {
  SeparatorConfig cfg;
  cfg.n = 3;
  cfg.which = 2;
  cfg.u = vec({1, 2, 3});
  cfg.off_line = {vec({1, 1, 2}), vec({1, 2, 1}), vec({1, 3, 3})};  // last is on T2 = T1
  CHECK_THROWS_AS(lemma26_separators(cfg), InvalidInput);
  cfg.off_line[2] = vec({1, 3, 1});
  cfg.u = vec({1, 1, 3});
  CHECK_THROWS_AS(lemma26_separators(cfg), InvalidInput);
  cfg.u = vec({0, 2, 3});
  CHECK_THROWS_AS(lemma26_separators(cfg), InvalidInput);
  cfg.u = vec({1, 2, 3});
  cfg.a = 0;
  CHECK_THROWS_AS(lemma26_separators(cfg), InvalidInput);
}

TEST_CASE("collinear off-line points make the configuration degenerate") {
  // Three off-line points on T1 = 0. Either the solver succeeds or it reports
  // DegenerateConfiguration, never a wrong form.
  SeparatorConfig cfg;
  cfg.n = 3;
  cfg.which = 2;
  cfg.u = vec({1, 2, 3});
  cfg.off_line = {vec({1, 0, 1}), vec({1, 0, 2}), vec({1, 0, 3})};
  try {
    check_separators(cfg, lemma26_separators(cfg));
  } catch (const DegenerateConfiguration&) {
    CHECK(separating_rank(cfg) < cfg.n + 3);
  }
}

TEST_CASE("random admissible configurations") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> c(-9, 9);
  int solved = 0, total = 0;
  for (int trial = 0; trial < 80; ++trial) {
    SeparatorConfig cfg;
    cfg.n = 3 + trial % 4;
    cfg.which = 1 + trial % 2;
    do cfg.a = c(rng); while (cfg.a.is_zero());
    do cfg.b = c(rng); while (cfg.b.is_zero());
    std::set<long> us;
    const std::size_t aligned = cfg.which == 1 ? cfg.n + 1 : cfg.n;
    while (us.size() < aligned) {
      long v = c(rng);
      if (v != 0) us.insert(v);
    }
    for (long v : us) cfg.u.emplace_back(v);
    const std::size_t off = cfg.which == 1 ? 2 : 3;
    while (cfg.off_line.size() < off) {
      Vector p = vec({c(rng), c(rng), c(rng)});
      if ((cfg.a * p[2] - cfg.b * p[1]).is_zero() || is_zero_vector(p)) continue;
      cfg.off_line.push_back(p);
    }
    try {
      cfg.validate();
    } catch (const InvalidInput&) {
      continue;
    }
    ++total;
    try {
      check_separators(cfg, lemma26_separators(cfg));
      ++solved;
    } catch (const DegenerateConfiguration&) {
      CHECK(separating_rank(cfg) < cfg.n + 3);
    }
  }
  MESSAGE("separators found for " << solved << " of " << total << " configurations");
  CHECK(total > 40);
  CHECK(solved * 10 >= total * 9);
}

TEST_CASE("recipe_space examples") {
  FormSpaceRecipe lin;
  lin.t_count = 2;
  lin.standard = false;
  lin.spaces[1] = {Form::linear(vec({1, 0})), Form::linear(vec({0, 1}))};
  const Vector u = vec({1, 0, 0});
  auto s1 = recipe_space(lin, 1, u);
  CHECK(support_of(s1) == std::set<Exponents>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(s1.size() == 3);

  // quadric-case recipe at k = 5
  auto r = t1_powers(2, 3, 5, true);
  auto s5 = recipe_space(r, 5, u);
  std::set<Exponents> expected;
  for (unsigned j = 0; j <= 5; ++j) expected.insert({5 - j, j, 0});
  expected.insert({4, 0, 1});
  expected.insert({3, 0, 2});
  expected.insert({3, 1, 1});
  CHECK(support_of(s5) == expected);
  CHECK(s5.size() == 9);

  FormSpaceRecipe empty;
  empty.t_count = 2;
  auto s2 = recipe_space(empty, 2, u);
  REQUIRE(s2.size() == 1);
  CHECK(support_of(s2) == std::set<Exponents>{{2, 0, 0}});

  CHECK_THROWS_AS(recipe_space(lin, 1, vec({0, 1, 1})), InvalidInput);
  // degrees above k are ignored
  CHECK(recipe_space(r, 2, u).size() == 1 + 2 + 3);
}

TEST_CASE("recipe_separates examples") {
  const Vector u = vec({1, 0, 0});
  // five points on T2 = 0, monomials T1^i U^j
  auto five = points({{1, 1, 0}, {1, 2, 0}, {1, 3, 0}, {2, 1, 0}, {1, -1, 0}});
  CHECK(recipe_separates(five, t1_powers(2, 1, 4, false), 4, u));
  CHECK_FALSE(recipe_separates(five, t1_powers(2, 1, 3, false), 3, u));

  // six points, five on T2 = T1, quadric-case recipe at degree 5
  auto six = points({{1, 1, 1}, {2, 1, 1}, {3, 1, 1}, {4, 1, 1}, {5, 1, 1}, {1, 2, -1}});
  CHECK(recipe_separates(six, t1_powers(2, 3, 5, true), 5, u));

  auto four = points({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
  FormSpaceRecipe quad;
  quad.t_count = 2;
  quad.standard = true;
  CHECK(recipe_separates(four, quad, 2, u));
  CHECK(is_k_normal(four, 2));

  CHECK_THROWS_AS(recipe_separates(points({{1, 0, 0, 0}}), quad, 2, u), InvalidInput);
}

TEST_CASE("full recipe matches k-normality and enlarging never hurts") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> c(-3, 3);
  const Vector u = vec({1, 0, 0});
  for (int trial = 0; trial < 40; ++trial) {
    std::set<std::vector<long>> seen;
    std::vector<std::vector<long>> pts;
    const std::size_t d = 3 + rng() % 5;
    while (pts.size() < d) {
      std::vector<long> p = {1, c(rng), trial % 3 == 0 ? 0 : c(rng)};
      if (seen.insert(p).second) pts.push_back(p);
    }
    auto x = points(pts);
    const unsigned k = 1 + rng() % 4;
    FormSpaceRecipe full;
    full.t_count = 2;
    for (unsigned j = 1; j <= k; ++j)
      for (const auto& e : monomials(2, j)) full.spaces[j].push_back(Form::monomial(e));
    CHECK(recipe_separates(x, full, k, u) == is_k_normal(x, k));

    auto small = t1_powers(2, 1, k, false);
    auto big = small;
    big.standard = true;
    if (recipe_separates(x, small, k, u)) CHECK(recipe_separates(x, big, k, u));
    if (recipe_separates(x, big, k, u)) CHECK(recipe_separates(x, full, k, u));
  }
}
