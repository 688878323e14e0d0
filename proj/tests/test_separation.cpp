#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adisc/separation.hpp"
#include "testutil.hpp"

using namespace adisc;
using namespace adisc::separation;
using tu::qv;
using tu::sup;

namespace {

// exact pointwise re-check of a separating hyperplane witness
void check_witness(const SignedSupport& s, const Hyperplane& h) {
  REQUIRE_FALSE(vec_is_zero(h.v));
  bool strict = false;
  for (size_t i = 0; i < s.count(); ++i) {
    int side = h.side(s.points[i]);
    if (s.signs[i] > 0) CHECK(side >= 0);
    if (s.signs[i] < 0) CHECK(side <= 0);
    if (side != 0) strict = true;
    if (h.kind == Hyperplane::Kind::kVeryStrict) CHECK(side != 0);
  }
  CHECK(strict);
}

SignedSupport fig3_config() {
  return sup({qv({1, 0, 0}), qv({2, 2, 0}), qv({0, 2, 0}), qv({1, 1, 1}), qv({0, 0, 0}),
              qv({2, 0, 0}), qv({1, 1, -1})},
             {1, 1, 1, 1, -1, -1, -1});
}

}  // namespace

TEST_CASE("running support with eps=(1,1,1,-1,-1) has a very strict separator") {
  SignedSupport s = tu::pentagon_support({1, 1, 1, -1, -1});
  auto h = has_nontrivial_separating_hyperplane(s);
  REQUIRE(h.has_value());
  check_witness(s, *h);
  auto vs = has_very_strict_separating_hyperplane(s);
  REQUIRE(vs.has_value());
  check_witness(s, *vs);
}

TEST_CASE("all-positive signs are trivially separable") {
  SignedSupport s = tu::pentagon_support({1, 1, 1, 1, 1});
  StiemkeResult r = stiemke(s);
  CHECK(r.trivially_separable);
  REQUIRE(r.hyperplane.has_value());
  check_witness(s, *r.hyperplane);
}

TEST_CASE("running support with eps=(-1,1,1,-1,-1) has a positive kernel witness") {
  SignedSupport s = tu::pentagon_support({-1, 1, 1, -1, -1});
  StiemkeResult r = stiemke(s);
  CHECK_FALSE(r.separable());
  REQUIRE_FALSE(r.kernel_witness.empty());
  for (const Rat& u : r.kernel_witness) CHECK(u.sign() > 0);
  QMat ae = ahat_signed(build_ahat(s), s.signs);
  QVec prod = ae.apply(r.kernel_witness);
  for (const Rat& x : prod) CHECK(x.is_zero());
}

TEST_CASE("non-trivial but not very strict separator (points on the plane)") {
  SignedSupport s = fig3_config();
  auto h = has_nontrivial_separating_hyperplane(s);
  REQUIRE(h.has_value());
  check_witness(s, *h);
  CHECK_FALSE(has_very_strict_separating_hyperplane(s).has_value());
}

TEST_CASE("interlaced collinear signs cannot be separated") {
  SignedSupport s = sup({qv({0}), qv({1}), qv({2})}, {-1, 1, -1});
  CHECK_FALSE(has_nontrivial_separating_hyperplane(s).has_value());
}

TEST_CASE("stiemke exclusivity, exhaustively over sign vectors") {
  Rng rng(31);
  for (int t = 0; t < 8; ++t) {
    size_t n = 1 + rng.next_below(2);
    size_t k = 1 + rng.next_below(2);
    SignedSupport s = tu::random_full_dim(rng, n, k);
    size_t m = s.count();
    std::vector<int> eps(m);
    for (uint64_t mask = 0; mask < (1ull << m); ++mask) {
      for (size_t i = 0; i < m; ++i) eps[i] = (mask >> i) & 1 ? -1 : 1;
      QMat ae = ahat_signed(build_ahat(s), eps);
      bool kernel = separation::detail::kernel_witness(ae).has_value();
      bool hyper = separation::detail::hyperplane_witness(ae).has_value();
      CHECK(kernel != hyper);
    }
  }
}

TEST_CASE("faces of the running pentagon: brute-force hull oracle agreement") {
  SignedSupport s = tu::pentagon_support({1, 1, 1, -1, -1});
  auto faces = enumerate_faces(s);
  // oracle: a point is a hull vertex iff it is not a convex combination of
  // the others; for this configuration every cross product test below shows
  // the five points in convex position (a pentagon): 5 vertices, 5 edges.
  size_t vertices = 0, edges = 0, improper = 0;
  for (const Face& f : faces) {
    if (!f.proper) {
      ++improper;
      continue;
    }
    if (f.dim == 0) ++vertices;
    if (f.dim == 1) ++edges;
  }
  CHECK(vertices == 5);
  CHECK(edges == 5);
  CHECK(improper == 1);
}

TEST_CASE("faces of a triangle and of a segment") {
  SignedSupport tri = sup({qv({0, 0}), qv({1, 0}), qv({0, 1})}, {1, 1, -1});
  size_t v = 0, e = 0;
  for (const Face& f : enumerate_faces(tri)) {
    if (!f.proper) continue;
    if (f.dim == 0) ++v;
    if (f.dim == 1) ++e;
  }
  CHECK(v == 3);
  CHECK(e == 3);

  SignedSupport seg = sup({qv({0}), qv({1}), qv({2})}, {1, -1, 1});
  size_t sv = 0, se = 0;
  for (const Face& f : enumerate_faces(seg)) {
    if (!f.proper) continue;
    if (f.dim == 0) ++sv;
    else ++se;
  }
  CHECK(sv == 2);
  CHECK(se == 0);
}

TEST_CASE("all faces separable for the very strict configuration") {
  SignedSupport s = tu::pentagon_support({1, 1, 1, -1, -1});
  FaceReport r = all_faces_separable(s);
  CHECK(r.all_separable);
  for (const FaceVerdict& fv : r.verdicts) CHECK(fv.separable);
}

TEST_CASE("all_faces_separable fails on the interlaced edge") {
  SignedSupport s = fig3_config();
  FaceReport r = all_faces_separable(s);
  CHECK_FALSE(r.all_separable);
  bool found = false;
  for (const FaceVerdict& fv : r.verdicts) {
    if (fv.separable) continue;
    // the failing face is the edge {alpha1, alpha5, alpha6} on the x-axis
    CHECK(fv.face.indices == std::vector<size_t>{0, 4, 5});
    found = true;
  }
  CHECK(found);
}

TEST_CASE("all-positive signs: every face trivially separable") {
  SignedSupport s = tu::pentagon_support({1, 1, 1, 1, 1});
  CHECK(all_faces_separable(s).all_separable);
}

TEST_CASE("zonotope bound value and enumeration on the running support") {
  SignedSupport s = tu::pentagon_support({1, 1, 1, -1, -1});
  SeparabilityReport rep = count_nonseparable_sign_vectors(s);
  CHECK(rep.codim == 2);
  CHECK(rep.bound == BigInt(10));  // 2*(C(4,0)+C(4,1))
  CHECK(BigInt(static_cast<int64_t>(rep.count)) <= rep.bound);
  CHECK(rep.count > 0);  // eps=(-1,1,1,-1,-1) is one of them
  bool has_running = false;
  for (const auto& eps : rep.nonseparable)
    if (eps == std::vector<int>{-1, 1, 1, -1, -1}) has_running = true;
  CHECK(has_running);
}

TEST_CASE("two points on a line: bound zero, everything separable") {
  SignedSupport s = sup({qv({0}), qv({1})}, {1, -1});
  SeparabilityReport rep = count_nonseparable_sign_vectors(s);
  CHECK(rep.codim == 0);
  CHECK(rep.bound.is_zero());
  CHECK(rep.count == 0);
}

TEST_CASE("zonotope bound holds on random configurations") {
  Rng rng(41);
  std::pair<size_t, size_t> shapes[] = {{1, 1}, {2, 1}, {2, 2}, {3, 2}};
  for (auto [n, k] : shapes) {
    for (int t = 0; t < 25; ++t) {
      SignedSupport s = tu::random_full_dim(rng, n, k);
      SeparabilityReport rep = count_nonseparable_sign_vectors(s);
      CHECK(BigInt(static_cast<int64_t>(rep.count)) <= rep.bound);
    }
  }
}

TEST_CASE("strict enclosing hyperplanes of the triangle-vs-two configuration") {
  SignedSupport s = sup({qv({0, 0}), qv({3, 0}), qv({0, 3}), qv({-1, 2}), qv({4, -2})},
                        {1, 1, 1, -1, -1});
  auto pos = strict_enclosing_hyperplanes(s, Side::kPositive);
  REQUIRE(pos.has_value());
  // exact witness validity: slab holds A+, a negative strictly beyond each wall
  bool above = false, below = false;
  for (size_t i = 0; i < s.count(); ++i) {
    Rat d = dot(pos->v, s.points[i]);
    if (s.signs[i] > 0) {
      CHECK(d <= pos->upper);
      CHECK(d >= pos->lower);
    } else {
      CHECK((d >= pos->upper || d <= pos->lower));
      if (d > pos->upper) above = true;
      if (d < pos->lower) below = true;
    }
  }
  CHECK(above);
  CHECK(below);

  auto neg = strict_enclosing_hyperplanes(s, Side::kNegative);
  REQUIRE(neg.has_value());
  bool pabove = false, pbelow = false;
  for (size_t i = 0; i < s.count(); ++i) {
    Rat d = dot(neg->v, s.points[i]);
    if (s.signs[i] < 0) {
      CHECK(d <= neg->upper);
      CHECK(d >= neg->lower);
    } else {
      if (d > neg->upper) pabove = true;
      if (d < neg->lower) pbelow = true;
    }
  }
  CHECK(pabove);
  CHECK(pbelow);
}

TEST_CASE("enclosing pair absent when a negative point is interior") {
  SignedSupport s = sup({qv({0, 0}), qv({3, 0}), qv({0, 3}), qv({1, 1}), qv({5, 5})},
                        {1, 1, 1, -1, -1});
  CHECK_FALSE(strict_enclosing_hyperplanes(s, Side::kPositive).has_value());
}

TEST_CASE("simplex separation on the four-negative configuration") {
  std::vector<QVec> simplex = {qv({0, 0}), qv({3, 0}), qv({0, 3})};
  SignedSupport s = sup({qv({0, 0}), qv({0, 3}), qv({1, 1}), qv({-1, 5}), qv({5, -1}),
                         qv({-1, -1}), qv({-2, 0})},
                        {1, 1, 1, -1, -1, -1, -1});
  SimplexSeparation r = simplex_separation(s, simplex);
  CHECK(r.verdict);
  CHECK(r.interior_witness);
  using K = SimplexSeparation::Membership::Kind;
  CHECK(r.membership[0].kind == K::kSimplex);
  CHECK(r.membership[1].kind == K::kSimplex);
  CHECK(r.membership[2].kind == K::kSimplex);
  for (size_t i = 3; i < 7; ++i) CHECK(r.membership[i].kind == K::kNegCone);
}

TEST_CASE("simplex separation rejects a point in a positive chamber") {
  std::vector<QVec> simplex = {qv({0, 0}), qv({3, 0}), qv({0, 3})};
  SignedSupport s = sup({qv({0, 0}), qv({0, 3}), qv({1, 1}), qv({10, 10}), qv({-1, -1})},
                        {1, 1, 1, -1, -1});
  SimplexSeparation r = simplex_separation(s, simplex);
  CHECK_FALSE(r.verdict);
  CHECK(r.membership[3].kind == SimplexSeparation::Membership::Kind::kNeither);
}

TEST_CASE("simplex separation needs an interior witness") {
  std::vector<QVec> simplex = {qv({0, 0}), qv({3, 0}), qv({0, 3})};
  SignedSupport s = sup({qv({0, 0}), qv({3, 0}), qv({0, 3})}, {1, 1, 1});
  SimplexSeparation r = simplex_separation(s, simplex);
  CHECK_FALSE(r.interior_witness);
  CHECK_FALSE(r.verdict);
}

TEST_CASE("degenerate simplex is rejected") {
  std::vector<QVec> simplex = {qv({0, 0}), qv({1, 1}), qv({2, 2})};
  SignedSupport s = tu::pentagon_support({1, 1, 1, -1, -1});
  CHECK_THROWS_AS(simplex_separation(s, simplex), Error);
}

TEST_CASE("dimension and size caps raise the documented errors") {
  // n = 4 faces
  std::vector<QVec> pts4;
  for (int i = 0; i < 6; ++i) {
    QVec p(4, Rat(0));
    if (i > 0 && i < 5) p[i - 1] = Rat(1);
    if (i == 5) p[0] = Rat(2);
    pts4.push_back(p);
  }
  SignedSupport s4 = sup(pts4, {1, 1, 1, 1, -1, -1});
  CHECK_THROWS_AS(enumerate_faces(s4), Error);

  // more than 20 points for the sign-vector enumeration
  std::vector<QVec> many;
  std::vector<int> signs;
  for (int i = 0; i < 21; ++i) {
    many.push_back(qv({i, i * i}));
    signs.push_back(i % 2 ? 1 : -1);
  }
  CHECK_THROWS_AS(count_nonseparable_sign_vectors(sup(many, signs)), Error);

  // more than 12 outside-class points for the enclosing search
  std::vector<QVec> pts;
  std::vector<int> sg;
  pts.push_back(qv({0, 0}));
  sg.push_back(1);
  for (int i = 1; i <= 13; ++i) {
    pts.push_back(qv({i, i * i + 1}));
    sg.push_back(-1);
  }
  CHECK_THROWS_AS(strict_enclosing_hyperplanes(sup(pts, sg), Side::kPositive), Error);
}
