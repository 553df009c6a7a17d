#include "doctest.h"

#include <random>

#include "genusforms/forms.hpp"
#include "genusforms/reduction.hpp"

using namespace genusforms;

TEST_SUITE_BEGIN("forms");

namespace {

PolyQ fix_f() { return to_rational(PolyZ(std::vector<Int>{9, -1, 0, 1})); }  // x^3 - x + 9

QuadFormP fixture_poly_form() {
  // [x, 6, -x^2 + 1], discriminant 4(x^3 - x + 9)
  return {PolyQ::variable(), PolyQ(6), PolyQ(std::vector<Rat>{Rat(1), Rat(0), Rat(-1)})};
}

Mat2Z random_unimodular(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kd(-9, 9);
  std::uniform_int_distribution<int> pick(0, 2);
  Mat2Z m = Mat2Z::identity();
  for (int i = 0; i < 4; ++i) {
    switch (pick(rng)) {
      case 0: m = m * Mat2Z{1, kd(rng), 0, 1}; break;
      case 1: m = m * Mat2Z{0, 1, -1, 0}; break;
      default: m = m * Mat2Z{1, 0, 0, -1}; break;
    }
  }
  return m;
}

bool same_class(const QuadFormZ& a, const QuadFormZ& b) {
  return equivalent_forms(a, b, /*want_witness=*/false).equivalent;
}

}  // namespace

TEST_CASE("discriminant") {
  CHECK(discriminant(QuadFormZ{1, 0, 14}) == -56);
  CHECK(discriminant(QuadFormZ{2, 6, -3}) == 60);  // [n,6,-n^2+1] at n=2
  CHECK(discriminant(QuadFormZ{1, 0, 0}) == 0);
  CHECK(discriminant(fixture_poly_form()) == PolyQ(4) * fix_f());
}

TEST_CASE("act fixed matrices") {
  QuadFormZ q{3, 2, 5};
  CHECK(act(Mat2Z::identity(), q) == q);
  CHECK(act(Mat2Z{1, 0, 0, -1}, q) == QuadFormZ{-3, 2, -5});
  CHECK(act(Mat2Z{0, 1, -1, 0}, q) == QuadFormZ{5, -2, 3});
  CHECK_THROWS_AS(act(Mat2Z{2, 0, 0, 1}, q), DomainError);
}

TEST_CASE("act preserves discriminant and primitivity") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> cd(-30, 30);
  int done = 0;
  while (done < 200) {
    QuadFormZ q{cd(rng), cd(rng), cd(rng)};
    if (!is_primitive(q)) continue;
    Mat2Z m = random_unimodular(rng);
    QuadFormZ r = act(m, q);
    CHECK(discriminant(r) == discriminant(q));
    CHECK(is_primitive(r));
    // inverse action recovers q
    CHECK(act(inverse_unimodular(m), r) == q);
    ++done;
  }
}

TEST_CASE("principal_form") {
  CHECK(principal_form_z(-56) == QuadFormZ{1, 0, 14});
  CHECK(principal_form(-7, 1) == QuadFormZ{1, 1, 2});
  CHECK((principal_form_poly(fix_f()) == QuadFormP{PolyQ(1), PolyQ(0), PolyQ(0) - fix_f()}));
  CHECK_THROWS_AS(principal_form(-7, 0), DomainError);
  CHECK_THROWS_AS(principal_form_z(-6), DomainError);
}

TEST_CASE("is_primitive") {
  CHECK(is_primitive(QuadFormZ{2, 0, 7}));
  CHECK(!is_primitive(QuadFormZ{2, 4, 6}));
  SRing s2({2});
  CHECK(is_primitive(QuadFormZ{2, 4, 6}, &s2));  // content 2 is an S-unit
  SRing s3({3});
  CHECK(!is_primitive(QuadFormZ{2, 4, 6}, &s3));
  CHECK(is_primitive(fixture_poly_form()));
  PolyQ x = PolyQ::variable();
  CHECK(!is_primitive(QuadFormP{x, PolyQ(2) * x, x * x}));
}

TEST_CASE("coprime_representative over Z") {
  QuadFormZ q{3, 2, 5};
  auto rep = coprime_representative(q, 3);
  CHECK(rep.form.a != 0);
  CHECK(gcd(rep.form.a, 3) == 1);
  CHECK(act(rep.m, q) == rep.form);
  CHECK(rep.m.det() == 1);
  CHECK(discriminant(rep.form) == discriminant(q));

  // first coefficient already fine: identity
  auto id = coprime_representative(QuadFormZ{1, 0, 14}, 56);
  CHECK(id.form == QuadFormZ{1, 0, 14});

  // a = 0 is repaired
  auto z = coprime_representative(QuadFormZ{0, 6, 1}, 36);
  CHECK(z.form.a != 0);
  CHECK(gcd(z.form.a, 36) == 1);
}

TEST_CASE("coprime_representative over Q[X]") {
  QuadFormP q = fixture_poly_form();
  auto rep = coprime_representative(q, fix_f());
  CHECK(rep.form == q);  // gcd(x, f) == 1 already

  auto pr = coprime_representative(principal_form_poly(fix_f()), fix_f());
  CHECK(pr.form == principal_form_poly(fix_f()));

  // force the search: first coefficient shares a factor with h
  PolyQ x = PolyQ::variable();
  auto moved = coprime_representative(q, x * fix_f());
  CHECK(poly_gcd(moved.form.a, x * fix_f()).degree() == 0);
  CHECK(act(moved.m, q) == moved.form);
}

TEST_CASE("compose spec examples") {
  // identity element
  QuadFormP q = fixture_poly_form();
  QuadFormP c = compose(principal_form_poly(fix_f()), q);
  CHECK(discriminant(c) == PolyQ(4) * fix_f());

  // [2,0,7] * [3,2,5] is the class of [3,-2,5] (disc -56)
  QuadFormZ r1 = compose(QuadFormZ{2, 0, 7}, QuadFormZ{3, 2, 5});
  CHECK(discriminant(r1) == -56);
  CHECK(reduce_posdef(r1).form == QuadFormZ{3, -2, 5});

  // [3,2,5]^2 is the class of [2,0,7]
  QuadFormZ r2 = compose(QuadFormZ{3, 2, 5}, QuadFormZ{3, 2, 5});
  CHECK(reduce_posdef(r2).form == QuadFormZ{2, 0, 7});

  CHECK_THROWS_AS(compose(QuadFormZ{1, 0, 14}, QuadFormZ{1, 0, 15}), DomainError);
}

TEST_CASE("direct Dirichlet composition of the -56 example") {
  // With coprime leading coefficients 2 and 3 and Bezout 2*2 + 3*(-1) == 1,
  // the composition formula gives [6, 8, 5] directly.
  Int a1 = 2, b1 = 0, a2 = 3, b2 = 2, disc = -56;
  Int r1v = 2, r2v = -1;
  Int B = a1 * r1v * b2 + a2 * r2v * b1;
  CHECK(B == 8);
  Int c = (B * B - disc) / (4 * a1 * a2);
  CHECK(c == 5);
  CHECK(reduce_posdef(QuadFormZ{a1 * a2, B, c}).form == QuadFormZ{3, -2, 5});
}

TEST_CASE("composition formula identity on random pairs") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> small(-20, 20);
  std::uniform_int_distribution<int> ad(1, 25);
  int done = 0;
  while (done < 500) {
    Int a1 = ad(rng), b1 = small(rng), c1 = small(rng);
    if (c1 == 0) continue;
    Int disc = b1 * b1 - 4 * a1 * c1;
    // find a second form of the same discriminant with coprime first coeff
    Int a2 = ad(rng);
    if (gcd(a1, a2) != 1) continue;
    Int found_b2 = 0;
    bool found = false;
    for (Int b2 = mod_pos(b1, 2); b2 <= 4 * a2; b2 += 2) {
      if ((b2 * b2 - disc) % (4 * a2) == 0) {
        found_b2 = b2;
        found = true;
        break;
      }
    }
    if (!found) continue;
    Int b2 = found_b2, c2 = (b2 * b2 - disc) / (4 * a2);

    ExtGcd e = ext_gcd(a1, a2);
    Int r1v = e.r1, r2v = e.r2;
    Int B = a1 * r1v * b2 + a2 * r2v * b1;
    REQUIRE((B * B - disc) % (4 * a1 * a2) == 0);
    Int C = (B * B - disc) / (4 * a1 * a2);

    Int x1 = small(rng), y1 = small(rng), x2 = small(rng), y2 = small(rng);
    Int X = x1 * x2 + r2v * ((b2 - b1) / 2) * x1 * y2 + r1v * ((b1 - b2) / 2) * x2 * y1 -
            (r2v * c1 + r1v * c2) * y1 * y2;
    Int Y = a1 * x1 * y2 + a2 * x2 * y1 + ((b1 + b2) / 2) * y1 * y2;

    QuadFormZ q1{a1, b1, c1}, q2{a2, b2, c2}, comp{a1 * a2, B, C};
    CHECK(evaluate(q1, x1, y1) * evaluate(q2, x2, y2) == evaluate(comp, X, Y));
    ++done;
  }
}

TEST_CASE("compose respects class structure") {
  for (Int disc : {Int(-56), Int(-84), Int(-215), Int(136)}) {
    // assemble a few primitive forms of this discriminant
    std::vector<QuadFormZ> forms;
    for (Int a = 1; a <= 12 && forms.size() < 4; ++a) {
      for (Int b = mod_pos(disc, 2); b <= 2 * a; b += 2) {
        if ((b * b - disc) % (4 * a) != 0) continue;
        QuadFormZ q{a, b, (b * b - disc) / (4 * a)};
        if (!is_primitive(q)) continue;
        forms.push_back(q);
        break;
      }
    }
    REQUIRE(forms.size() >= 2);
    QuadFormZ p = principal_form_z(disc);
    for (const auto& q : forms) {
      CHECK(same_class(compose(q, p), q));
      CHECK(same_class(compose(q, inverse(q)), p));
    }
    // commutativity and associativity at class level
    for (std::size_t i = 0; i < forms.size(); ++i) {
      for (std::size_t j = i; j < forms.size(); ++j) {
        CHECK(same_class(compose(forms[i], forms[j]), compose(forms[j], forms[i])));
      }
    }
    CHECK(same_class(compose(compose(forms[0], forms[1]), forms[1]),
                     compose(forms[0], compose(forms[1], forms[1]))));
  }
}

TEST_CASE("inverse") {
  CHECK(inverse(QuadFormZ{3, 2, 5}) == QuadFormZ{3, -2, 5});
  QuadFormP q = fixture_poly_form();
  QuadFormP qi = inverse(q);
  CHECK(qi.b == PolyQ(-6));
  CHECK(same_class(compose(QuadFormZ{3, 2, 5}, QuadFormZ{3, -2, 5}), principal_form_z(-56)));
}

TEST_CASE("power") {
  QuadFormZ g{3, 2, 5};
  CHECK(power(g, 0) == principal_form_z(-56));
  CHECK(reduce_posdef(power(g, 2)).form == QuadFormZ{2, 0, 7});
  CHECK(same_class(power(g, 4), principal_form_z(-56)));  // h(-56) == 4
  CHECK(same_class(power(g, -1), inverse(g)));
}

TEST_SUITE_END();
