#include "genusforms/reduction.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace genusforms {

namespace {

using Key = std::tuple<Int, Int, Int>;
Key key_of(const QuadFormZ& q) { return {q.a, q.b, q.c}; }

const Mat2Z kFlip{Int(1), Int(0), Int(0), Int(-1)};   // q -> [-a, b, -c]
const Mat2Z kSwap{Int(0), Int(1), Int(-1), Int(0)};   // q -> [c, -b, a]

Mat2Z translation(const Int& k) { return {Int(1), k, Int(0), Int(1)}; }

// Floor division.
Int fdiv(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

DiscClass classify_disc(const Int& disc) {
  if (disc == 0) return {DiscTag::Zero, 0};
  if (disc < 0) return {DiscTag::NegDef, 0};
  Int r;
  if (is_perfect_square(disc, &r)) return {DiscTag::PerfectSquare, r};
  return {DiscTag::PosNonsquare, 0};
}

ReducedForm reduce_posdef(const QuadFormZ& q_in) {
  if (discriminant(q_in) >= 0) raise("WrongDiscSign", "positive definite reduction needs disc < 0");
  QuadFormZ q = q_in;
  Mat2Z w = Mat2Z::identity();
  if (q.a < 0) {  // twisted move to the positive definite mirror
    q = act(kFlip, q);
    w = kFlip;
  }
  for (int guard = 0; guard < 1 << 20; ++guard) {
    // Translate b into (-a, a].
    Int k = fdiv(q.a - q.b, 2 * q.a);
    if (k != 0) {
      Mat2Z t = translation(k);
      q = act(t, q);
      w = w * t;
    }
    if (q.a > q.c) {
      q = act(kSwap, q);
      w = w * kSwap;
      continue;
    }
    break;
  }
  // Boundary normalization of the sign of b.
  if (q.b < 0 && -q.b == q.a) {
    Mat2Z t = translation(1);
    q = act(t, q);
    w = w * t;
  } else if (q.b < 0 && q.a == q.c) {
    q = act(kSwap, q);
    w = w * kSwap;
  }
  return {q, w};
}

bool is_reduced_indef(const QuadFormZ& q) {
  Int disc = discriminant(q);
  if (classify_disc(disc).tag != DiscTag::PosNonsquare) return false;
  Int s = isqrt(disc);
  Int aa = abs(q.a);
  // |sqrt(disc) - 2|a|| < b < sqrt(disc), via floor square root.
  return q.b > 0 && q.b <= s && 2 * aa - q.b <= s && 2 * aa + q.b > s;
}

ReducedForm rho_step(const QuadFormZ& q) {
  Int disc = discriminant(q);
  if (classify_disc(disc).tag != DiscTag::PosNonsquare)
    raise("WrongDiscSign", "rho needs positive nonsquare discriminant");
  Int s = isqrt(disc);
  Int c = q.c, ac = abs(c);
  // r == -b (mod 2|c|), placed in (-|c|, |c|] or (sqrt(disc) - 2|c|, sqrt(disc)].
  Int lo = (ac > s) ? Int(-ac) : Int(s - 2 * ac);  // interval (lo, lo + 2|c|]
  Int r = lo + 1 + mod_pos(-q.b - (lo + 1), 2 * ac);
  Int k = detail::ring_div_exact(r + q.b, 2 * c);
  Mat2Z m = kSwap * translation(k);
  QuadFormZ next{c, r, detail::ring_div_exact(r * r - disc, 4 * c)};
  return {next, m};
}

ReducedForm reduce_indef(const QuadFormZ& q_in) {
  Int disc = discriminant(q_in);
  if (classify_disc(disc).tag != DiscTag::PosNonsquare)
    raise("WrongDiscSign", "indefinite reduction needs positive nonsquare discriminant");
  QuadFormZ q = q_in;
  Mat2Z w = Mat2Z::identity();
  for (int guard = 0; guard < 1 << 20; ++guard) {
    if (is_reduced_indef(q)) return {q, w};
    ReducedForm step = rho_step(q);
    q = step.form;
    w = w * step.witness;
  }
  raise("SearchExhausted", "indefinite reduction did not converge");
}

std::vector<QuadFormZ> reduce_indef_cycle(const QuadFormZ& q) {
  QuadFormZ r0 = reduce_indef(q).form;
  std::vector<QuadFormZ> cycle{r0};
  QuadFormZ cur = rho_step(r0).form;
  while (!(cur == r0)) {
    cycle.push_back(cur);
    cur = rho_step(cur).form;
  }
  return cycle;
}

namespace {

// Walks the cycle of target accumulating witnesses until r is met.
// Returns w with act(w, target) == r, or nullopt when r is not in the cycle.
std::optional<Mat2Z> walk_to(const QuadFormZ& target, const QuadFormZ& r) {
  ReducedForm red = reduce_indef(target);
  QuadFormZ cur = red.form;
  Mat2Z w = red.witness;
  QuadFormZ first = cur;
  do {
    if (cur == r) return w;
    ReducedForm step = rho_step(cur);
    cur = step.form;
    w = w * step.witness;
  } while (!(cur == first));
  return std::nullopt;
}

}  // namespace

EquivalenceResult equivalent_forms(const QuadFormZ& q, const QuadFormZ& target,
                                   bool want_witness) {
  Int disc = discriminant(q);
  if (disc != discriminant(target)) raise("DiscMismatch", "equivalence requires equal discriminants");
  DiscClass dc = classify_disc(disc);
  if (dc.tag == DiscTag::Zero || dc.tag == DiscTag::PerfectSquare)
    raise("DegenerateDisc", "equivalence test refused for square or zero discriminant");

  if (dc.tag == DiscTag::NegDef) {
    ReducedForm rq = reduce_posdef(q);
    ReducedForm rt = reduce_posdef(target);
    if (!(rq.form == rt.form)) return {};
    EquivalenceResult res{true, std::nullopt};
    if (want_witness) res.witness = rq.witness * inverse_unimodular(rt.witness);
    return res;
  }

  // Positive nonsquare: the twisted class of q is the union of the SL2
  // cycles of q and of its mirror [-a, b, -c].
  std::vector<QuadFormZ> target_cycle = reduce_indef_cycle(target);
  std::map<Key, bool> members;
  for (const auto& f : target_cycle) members[key_of(f)] = true;

  auto try_one = [&](const QuadFormZ& start, const Mat2Z& pre) -> EquivalenceResult {
    ReducedForm red = reduce_indef(start);
    if (!members.count(key_of(red.form))) return {};
    EquivalenceResult res{true, std::nullopt};
    if (want_witness) {
      std::optional<Mat2Z> wt = walk_to(target, red.form);
      // act(pre * red.witness, q) == red.form == act(*wt, target)
      res.witness = pre * red.witness * inverse_unimodular(*wt);
    }
    return res;
  };

  EquivalenceResult direct = try_one(q, Mat2Z::identity());
  if (direct.equivalent) return direct;
  return try_one(act(kFlip, q), kFlip);
}

EquivalenceResult is_equivalent_to_principal(const QuadFormZ& q, bool want_witness) {
  return equivalent_forms(q, principal_form_z(discriminant(q)), want_witness);
}

QuadFormZ canonical_form(const QuadFormZ& q) {
  DiscClass dc = classify_disc(discriminant(q));
  if (dc.tag == DiscTag::NegDef) return reduce_posdef(q).form;
  if (dc.tag != DiscTag::PosNonsquare)
    raise("DegenerateDisc", "no canonical representative for square or zero discriminant");
  std::vector<QuadFormZ> all = reduce_indef_cycle(q);
  std::vector<QuadFormZ> mirror = reduce_indef_cycle(act(kFlip, q));
  all.insert(all.end(), mirror.begin(), mirror.end());
  return *std::min_element(all.begin(), all.end(), [](const QuadFormZ& x, const QuadFormZ& y) {
    return key_of(x) < key_of(y);
  });
}

std::vector<QuadFormZ> reduced_posdef_forms(const Int& disc) {
  if (disc >= 0) raise("WrongDiscSign", "enumeration needs disc < 0");
  if (mod_pos(disc, 4) > 1) return {};
  std::vector<QuadFormZ> out;
  Int amax = isqrt(-disc / 3);
  for (Int a = 1; a <= amax; ++a) {
    for (Int b = -a; b <= a; ++b) {
      Int t = b * b - disc;
      if (t % (4 * a) != 0) continue;
      Int c = t / (4 * a);
      if (c < a) continue;
      if (b < 0 && (-b == a || a == c)) continue;  // boundary duplicates
      QuadFormZ q{a, b, c};
      if (!is_primitive(q)) continue;
      out.push_back(q);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const QuadFormZ& x, const QuadFormZ& y) { return key_of(x) < key_of(y); });
  return out;
}

}  // namespace genusforms
