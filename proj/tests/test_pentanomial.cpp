#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adisc/pentanomial.hpp"
#include "testutil.hpp"

using namespace adisc;
using namespace adisc::pentanomial;
using tu::qv;
using tu::qvs;
using tu::sup;

namespace {

using Verdict = Classification::Verdict;

int verdict_count(const Classification& c) {
  switch (c.verdict) {
    case Verdict::kEmptyDiscriminant: return 0;
    case Verdict::kZeroCritical: return 0;
    case Verdict::kOneCritical: return 1;
    case Verdict::kTwoCritical: return 2;
    case Verdict::kBoundaryCase: return -1;
  }
  return -1;
}

// independent oracle: generic expansion + Sturm isolation on the Gale dual
int sturm_count(const SignedSupport& input) {
  auto [s, flipped] = oriented_for_discriminant(input);
  GaleDual g = gale_dual(build_ahat(s));
  discriminant::CriticalPoints cp = discriminant::critical_points(g, s.signs);
  return cp.qb_is_zero ? 0 : static_cast<int>(cp.points.size());
}

SignedSupport std_pentanomial(const Rat& x1, const Rat& y1, const Rat& x2, const Rat& y2) {
  return sup({qv({0, 0}), qv({1, 0}), qv({0, 1}), QVec{x1, y1}, QVec{x2, y2}},
             {1, 1, 1, -1, -1});
}

}  // namespace

TEST_CASE("standardize the mirrored running support") {
  SignedSupport s = tu::pentagon_support({-1, 1, 1, -1, -1});
  StandardizedPentanomial std_form = standardize(s);
  CHECK(std_form.state == StandardizedPentanomial::State::kStandard);
  CHECK(std_form.flipped);
  CHECK(std_form.x1 == Rat(4, 15));
  CHECK(std_form.y1 == Rat(-1, 15));
  CHECK(std_form.x2 == Rat(-1, 15));
  CHECK(std_form.y2 == Rat(4, 15));
  CHECK(std_form.label1.kind == ChamberLabel::Kind::kPosChamber);
  CHECK(std_form.label1.index == 2);
  CHECK(std_form.label2.kind == ChamberLabel::Kind::kPosChamber);
  CHECK(std_form.label2.index == 1);
}

TEST_CASE("standardize a translated triangle") {
  SignedSupport s = sup({qv({1, 1}), qv({2, 1}), qv({1, 2}), qv({5, 2}), qv({2, 5})},
                        {1, 1, 1, -1, -1});
  StandardizedPentanomial f = standardize(s);
  CHECK(f.transform.m == QMat::identity(2));
  CHECK(f.transform.v == qv({-1, -1}));
  CHECK(f.x1 == Rat(4));
  CHECK(f.y1 == Rat(1));
}

TEST_CASE("collinear classes fall under the dimension clause") {
  // collinear positives crossed by a collinear negative pair
  SignedSupport s = sup({qv({0, 0}), qv({2, 0}), qv({4, 0}), qv({1, -1}), qv({1, 1})},
                        {1, 1, 1, -1, -1});
  StandardizedPentanomial f = standardize(s);
  CHECK(f.state == StandardizedPentanomial::State::kDimensionClause);
  Classification c = classify(s);
  CHECK(verdict_count(c) <= 1);
  CHECK(c.case_label == "dimension-clause");
  CHECK(c.exact_count == sturm_count(s));
}

TEST_CASE("qb coefficients of the running support") {
  SignedSupport s = tu::pentagon_support({1, 1, 1, -1, -1});
  StandardizedPentanomial f = standardize(s);
  QbCoefficients q = qb_coefficients(f);
  CHECK(q.a == Rat(16));
  CHECK(q.b == Rat(-112));
  CHECK(q.c == Rat(16));
}

TEST_CASE("qb degeneracies on the facet lines") {
  QbCoefficients q1 = qb_from_xy(Rat(0), Rat(-1, 2), Rat(2), Rat(2));
  CHECK(q1.a.is_zero());
  QbCoefficients q2 = qb_from_xy(Rat(-1), Rat(1, 2), Rat(1, 2), Rat(1, 2));
  CHECK(q2.c.is_zero());
}

TEST_CASE("qb coefficients agree with the generic expansion up to scale") {
  Rng rng(201);
  int done = 0;
  while (done < 120) {
    Rat x1(rng.next_int(-12, 12), 4), y1(rng.next_int(-12, 12), 4);
    Rat x2(rng.next_int(-12, 12), 4), y2(rng.next_int(-12, 12), 4);
    SignedSupport s;
    try {
      s = std_pentanomial(x1, y1, x2, y2);
    } catch (const Error&) {
      continue;
    }
    GaleDual g = gale_dual(build_ahat(s));
    discriminant::CriticalPolynomial cp = discriminant::critical_polynomial(g);
    QbCoefficients q = qb_from_xy(x1, y1, x2, y2);
    QPoly closed(QVec{q.c, q.b, q.a});
    if (closed.is_zero()) {
      CHECK(cp.qb.is_zero());
      ++done;
      continue;
    }
    REQUIRE_FALSE(cp.qb.is_zero());
    // proportionality: cross-multiply all coefficient pairs
    QVec lhs(3), rhs(3);
    for (int i = 0; i < 3; ++i) {
      lhs[i] = i < static_cast<int>(closed.c.size()) ? closed.c[i] : Rat(0);
      rhs[i] = i < static_cast<int>(cp.qb.c.size()) ? cp.qb.c[i] : Rat(0);
    }
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(lhs[i] * rhs[j] == lhs[j] * rhs[i]);
    ++done;
  }
}

TEST_CASE("classify: the mirrored running support has two critical points") {
  SignedSupport s = tu::pentagon_support({-1, 1, 1, -1, -1});
  Classification c = classify(s);
  CHECK(c.verdict == Verdict::kTwoCritical);
  CHECK(c.exact_count == 2);
  CHECK(c.inequalities_violated.empty());
  CHECK(c.case_label.find("poschamber-pair") == 0);
}

TEST_CASE("classify: separable support reports an empty discriminant") {
  SignedSupport s = tu::pentagon_support({1, 1, 1, -1, -1});
  Classification c = classify(s);
  CHECK(c.verdict == Verdict::kEmptyDiscriminant);
  CHECK(c.exact_count == 0);
}

TEST_CASE("classify: interior plus negative cone gives exactly one") {
  SignedSupport s = std_pentanomial(Rat(3, 10), Rat(3, 10), Rat(-1, 2), Rat(-1, 2));
  Classification c = classify(s);
  CHECK(c.verdict == Verdict::kOneCritical);
  CHECK(c.exact_count == 1);
  CHECK(c.case_label == "simplex-negcone");
}

TEST_CASE("classify: both interior gives zero") {
  SignedSupport s = std_pentanomial(Rat(3, 10), Rat(3, 10), Rat(1, 2), Rat(1, 5));
  Classification c = classify(s);
  CHECK(c.verdict == Verdict::kZeroCritical);
  CHECK(c.exact_count == 0);
  CHECK(c.case_label == "simplex-interior");
}

TEST_CASE("classify: sub-chamber wall is a boundary case") {
  SignedSupport s = std_pentanomial(Rat(-1, 2), Rat(1), Rat(1, 2), Rat(-1, 2));
  Classification c = classify(s);
  CHECK(c.verdict == Verdict::kBoundaryCase);
}

TEST_CASE("classifier soundness against the Sturm oracle") {
  Rng rng(211);
  int done = 0, boundary = 0;
  while (done < 300) {
    SignedSupport s = tu::random_full_dim(rng, 2, 2);
    Classification c;
    try {
      c = classify(s);
    } catch (const Error&) {
      continue;
    }
    if (c.verdict == Verdict::kBoundaryCase) {
      ++boundary;
      continue;
    }
    int want = sturm_count(s);
    CHECK(verdict_count(c) == want);
    CHECK(c.exact_count == want);
    ++done;
  }
  CHECK(boundary < 40);
}

TEST_CASE("classifier is invariant under the global sign flip") {
  Rng rng(223);
  int done = 0;
  while (done < 60) {
    SignedSupport s = tu::random_full_dim(rng, 2, 2);
    Classification c1, c2;
    try {
      c1 = classify(s);
      c2 = classify(s.flipped());
    } catch (const Error&) {
      continue;
    }
    CHECK(c1.verdict == c2.verdict);
    ++done;
  }
}

TEST_CASE("classifier is invariant under triangle rotation and affine maps") {
  Rng rng(227);
  auto rotate_support = [](const SignedSupport& s) {
    std::vector<QVec> pts;
    for (const QVec& p : s.points) pts.push_back(QVec{p[1], Rat(1) - p[0] - p[1]});
    return make_support(pts, s.signs);
  };
  int done = 0;
  while (done < 50) {
    SignedSupport s = tu::random_full_dim(rng, 2, 2);
    Classification base;
    try {
      base = classify(s);
    } catch (const Error&) {
      continue;
    }
    if (base.verdict == Verdict::kBoundaryCase) continue;
    Classification rot = classify(rotate_support(s));
    CHECK(rot.verdict == base.verdict);
    // a random affine map with positive determinant
    QMat m(2, 2);
    m.at(0, 0) = Rat(1 + static_cast<int64_t>(rng.next_below(3)));
    m.at(0, 1) = Rat(rng.next_int(-2, 2));
    m.at(1, 0) = Rat(rng.next_int(-2, 2));
    m.at(1, 1) = Rat(1 + static_cast<int64_t>(rng.next_below(3)));
    if (det(m).sign() <= 0) continue;
    QVec v{Rat(rng.next_int(-3, 3)), Rat(rng.next_int(-3, 3))};
    std::vector<QVec> pts;
    for (const QVec& p : s.points) pts.push_back(vec_add(m.apply(p), v));
    Classification aff = classify(make_support(pts, s.signs));
    CHECK(aff.verdict == base.verdict);
    ++done;
  }
}

TEST_CASE("cusp family reproduces the frozen four-parameter matrix") {
  CuspFamily fam = cusp_family({Rat(5), Rat(6), Rat(7), Rat(8)});
  const char* want[7][2] = {{"-143", "-715"}, {"2002/5", "12012/5"}, {"-390", "-2730"},
                            {"130", "1040"},  {"18/5", "18/5"},      {"-1", "0"},
                            {"0", "-1"}};
  REQUIRE(fam.gale.b.rows() == 7);
  for (size_t i = 0; i < 7; ++i)
    for (size_t j = 0; j < 2; ++j) CHECK(fam.gale.b.at(i, j) == Rat::parse(want[i][j]));
  CHECK(fam.eps == std::vector<int>{-1, 1, -1, 1, 1, -1, -1});
  discriminant::CriticalPoints cp = discriminant::critical_points(fam.gale, fam.eps);
  REQUIRE(cp.points.size() == 4);
  int64_t w = 5;
  for (const auto& p : cp.points) {
    REQUIRE(p.root.exact.has_value());
    CHECK(*p.root.exact == Rat(w++));
  }
}

TEST_CASE("cusp family with one parameter") {
  CuspFamily fam = cusp_family({Rat(2)});
  REQUIRE(fam.gale.b.rows() == 4);
  CHECK(fam.gale.b.at(0, 0) == Rat(2));
  CHECK(fam.gale.b.at(0, 1) == Rat(4));
  CHECK(fam.gale.b.at(1, 0) == Rat(-3));
  CHECK(fam.gale.b.at(1, 1) == Rat(-3));
  CHECK(fam.gale.b.at(2, 0) == Rat(1));
  CHECK(fam.gale.b.at(3, 1) == Rat(-1));
  discriminant::CriticalPoints cp = discriminant::critical_points(fam.gale, fam.eps);
  REQUIRE(cp.points.size() == 1);
  REQUIRE(cp.points[0].root.exact.has_value());
  CHECK(*cp.points[0].root.exact == Rat(2));
}

TEST_CASE("cusp family properties on random parameter sets") {
  Rng rng(229);
  int done = 0;
  while (done < 40) {
    size_t n = 1 + rng.next_below(4);
    std::vector<Rat> mus;
    std::set<std::pair<int64_t, int64_t>> used;
    for (size_t i = 0; i < n; ++i) {
      int64_t num = 2 + static_cast<int64_t>(rng.next_below(30));
      int64_t den = 1 + static_cast<int64_t>(rng.next_below(3));
      mus.push_back(Rat(num, den));
    }
    CuspFamily fam;
    try {
      fam = cusp_family(mus);
    } catch (const Error&) {
      continue;  // duplicates or a parameter collapsing to 1
    }
    // columns of B sum to zero
    for (size_t j = 0; j < 2; ++j) {
      Rat sum;
      for (size_t i = 0; i < fam.gale.b.rows(); ++i) sum += fam.gale.b.at(i, j);
      CHECK(sum.is_zero());
    }
    // exactly n critical points, equal to the parameters
    discriminant::CriticalPoints cp = discriminant::critical_points(fam.gale, fam.eps);
    REQUIRE(cp.points.size() == n);
    std::vector<Rat> sorted = mus;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < n; ++i) {
      REQUIRE(cp.points[i].root.exact.has_value());
      CHECK(*cp.points[i].root.exact == sorted[i]);
    }
    ++done;
  }
}

TEST_CASE("cusp family input validation") {
  CHECK_THROWS_AS(cusp_family({Rat(1)}), Error);
  CHECK_THROWS_AS(cusp_family({Rat(-2)}), Error);
  CHECK_THROWS_AS(cusp_family({Rat(3), Rat(3)}), Error);
  CHECK_THROWS_AS(cusp_family({}), Error);
}

TEST_CASE("region scan at the documented base point") {
  Rat x1(-1, 10), y1(3, 10);
  RegionScan scan = region_scan(x1, y1, 60);
  CHECK(scan.feasible_count > 0);
  // every sampled x2 strictly inside (0,1) admits a feasible y2 < 0
  for (int k = 1; k <= 19; ++k) {
    Rat x2(k, 20);
    auto y2 = find_feasible_y2(x1, y1, x2);
    REQUIRE(y2.has_value());
    CHECK(y2->sign() < 0);
    CHECK(two_critical_inequalities(x1, y1, x2, *y2));
    // feasible points classify as two critical points
    Classification c = classify(std_pentanomial(x1, y1, x2, *y2));
    CHECK(c.verdict == Verdict::kTwoCritical);
  }
}

TEST_CASE("region scan rejects a base point outside the sub-chamber") {
  CHECK_THROWS_AS(region_scan(Rat(1, 10), Rat(3, 10), 10), Error);
}

TEST_CASE("points outside the negative chamber are infeasible") {
  Rat x1(-1, 10), y1(3, 10);
  CHECK_FALSE(two_critical_inequalities(x1, y1, Rat(1, 2), Rat(1, 2)));
  CHECK_FALSE(two_critical_inequalities(x1, y1, Rat(3, 2), Rat(-1, 2)));
}

TEST_CASE("classifier input validation") {
  SignedSupport four = sup({qv({0, 0}), qv({1, 0}), qv({0, 1}), qv({2, 2})}, {1, 1, 1, -1});
  CHECK_THROWS_AS(classify(four), Error);
  SignedSupport flat = sup({qv({0, 0}), qv({1, 0}), qv({2, 0}), qv({3, 0}), qv({4, 0})},
                           {1, -1, 1, -1, 1});
  CHECK_THROWS_AS(classify(flat), Error);
}
