#include "genusforms/genus.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace genusforms {

namespace {

// Enumeration caps for the exhaustive H0 computation. Above these, genus
// membership is not decided exactly; callers fall back to certificates.
const Int kModulusCap = 4000000;
constexpr std::uint64_t kWorkCap = 1u << 28;

// Unit values of x^2 + pi*x*y + c0*y^2 over Z/w, w = p^e a prime power.
std::vector<std::uint64_t> unit_values_mod(std::uint64_t w, std::uint64_t p, std::uint64_t pi,
                                           std::uint64_t c0) {
  std::vector<bool> seen(w, false);
  for (std::uint64_t x = 0; x < w; ++x) {
    std::uint64_t x2 = (x * x) % w;
    for (std::uint64_t y = 0; y < w; ++y) {
      std::uint64_t v = (x2 + pi * x % w * y + c0 * y % w * y) % w;
      if (v % p != 0) seen[v] = true;
    }
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t v = 0; v < w; ++v) {
    if (seen[v]) out.push_back(v);
  }
  return out;
}

}  // namespace

GenusCoset value_subgroup_H0(const Int& disc, const SRing& s) {
  if (disc == 0) raise("ZeroDisc", "genus theory is undefined for discriminant 0");
  Int m_big = s.prime_to_s_part(disc);
  if (m_big == 1) return {Int(1), {Int(0)}, Int(0)};
  if (m_big > kModulusCap) raise("ModulusTooLarge", "H0 enumeration modulus above cap");
  std::uint64_t m = static_cast<std::uint64_t>(m_big);

  // Principal form coefficients reduced mod m.
  std::uint64_t pi, c0;
  Int dm4 = mod_pos(disc, 4);
  if (dm4 == 0 || dm4 == 1) {
    Int pz = parity_of_disc(disc);
    pi = static_cast<std::uint64_t>(pz);
    c0 = static_cast<std::uint64_t>(mod_pos(-(disc - pz * pz) / 4, m_big));
  } else if (s.contains(2)) {
    pi = 0;  // 4 is an S-unit, hence invertible mod the odd modulus m
    c0 = static_cast<std::uint64_t>(mod_pos(-disc * inv_mod(4, m_big), m_big));
  } else {
    raise("BadParity", "no principal form of this discriminant");
  }

  // Factor m and budget the per-prime-power enumeration.
  Int cofactor = 1;
  auto factors = trial_factor(m_big, m_big, &cofactor);
  std::uint64_t work = 0;
  for (const auto& [p, e] : factors) {
    Int w = 1;
    for (int i = 0; i < e; ++i) w *= p;
    std::uint64_t wu = static_cast<std::uint64_t>(w);
    if (wu > kWorkCap / wu) raise("ModulusTooLarge", "prime-power factor above enumeration cap");
    work += wu * wu;
    if (work > kWorkCap) raise("ModulusTooLarge", "H0 enumeration work above cap");
  }

  // Unit value sets per prime power, recombined by CRT.
  std::vector<std::uint64_t> acc{0};
  std::uint64_t macc = 1;
  for (const auto& [p_big, e] : factors) {
    Int w_big = 1;
    for (int i = 0; i < e; ++i) w_big *= p_big;
    std::uint64_t w = static_cast<std::uint64_t>(w_big);
    std::uint64_t p = static_cast<std::uint64_t>(p_big);
    auto vals = unit_values_mod(w, p, pi % w, c0 % w);
    std::uint64_t minv = static_cast<std::uint64_t>(inv_mod(Int(macc), Int(w)));
    std::vector<std::uint64_t> next;
    next.reserve(acc.size() * vals.size());
    for (std::uint64_t r : acc) {
      for (std::uint64_t v : vals) {
        std::uint64_t k = ((v + w - r % w) % w) * minv % w;
        next.push_back(r + macc * k);
      }
    }
    acc = std::move(next);
    macc *= w;
  }

  // Multiply by the image of the S-units, generated by -1 and the S-primes.
  std::vector<std::uint64_t> gens{m - 1};
  for (const auto& p : s.primes()) gens.push_back(static_cast<std::uint64_t>(mod_pos(p, m_big)));
  std::vector<bool> in_h0(m, false);
  for (std::uint64_t v : acc) in_h0[v] = true;
  std::vector<std::uint64_t> frontier = acc;
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t v : frontier) {
      for (std::uint64_t g : gens) {
        std::uint64_t u = v * g % m;
        if (!in_h0[u]) {
          in_h0[u] = true;
          next.push_back(u);
        }
      }
    }
    frontier = std::move(next);
  }

  GenusCoset out{m_big, {}, Int(1)};
  for (std::uint64_t v = 0; v < m; ++v) {
    if (in_h0[v]) out.h0.emplace_back(v);
  }
  return out;
}

GenusCoset psi(const QuadFormZ& q, const SRing& s) {
  Int disc = discriminant(q);
  GenusCoset coset = value_subgroup_H0(disc, s);
  if (coset.modulus == 1) return coset;
  CoprimeRep<Int> rep = coprime_representative(q, coset.modulus);
  coset.rep = inv_mod(rep.form.a, coset.modulus);
  return coset;
}

bool h0_contains(const GenusCoset& coset, const Int& u) {
  if (coset.modulus == 1) return true;
  Int v = mod_pos(u, coset.modulus);
  return std::binary_search(coset.h0.begin(), coset.h0.end(), v);
}

bool same_coset(const GenusCoset& a, const GenusCoset& b) {
  if (a.modulus != b.modulus) return false;
  if (a.modulus == 1) return true;
  return h0_contains(a, a.rep * inv_mod(b.rep, a.modulus));
}

bool in_principal_genus(const QuadFormZ& q, const SRing& s) {
  GenusCoset c = psi(q, s);
  return h0_contains(c, c.rep);
}

CertificateResult psi_poly_certificate(const QuadFormP& q, const Curve& curve, const SRing& s,
                                       const Int& prime_bound, const Int& prime_min) {
  PolyQ a = q.a;
  if (a.is_zero() || poly_gcd(a, curve.fq()).degree() != 0)
    a = coprime_representative(q, curve.fq()).form.a;
  if (a.is_zero() || poly_gcd(a, curve.fq()).degree() != 0)
    raise("NotCoprime", "no representative with A coprime to f was found");

  Int a_den = 1;
  PolyZ a_int = clear_denominators(a, &a_den);
  Int lc_num = a_int.lc();

  std::vector<Int> eps = s.s_unit_square_classes();
  // Candidate witnesses per square class, in scan order (p ascending, r ascending).
  std::map<Int, std::vector<std::pair<Int, Int>>> candidates;
  for (const auto& e : eps) candidates[e] = {};

  std::optional<std::pair<Int, Int>> shared;
  Int start = prime_min < 3 ? Int(3) : prime_min;
  for (Int p = is_prime(start) ? start : next_prime(start); p <= prime_bound && !shared;
       p = next_prime(p)) {
    if (p == 2 || s.contains(p)) continue;
    if (a_den % p == 0 || lc_num % p == 0) continue;
    Int den_inv = inv_mod(a_den, p);
    for (const Int& r : roots_mod_p(curve.f(), p)) {
      Int value = mod_pos(evaluate_mod(a_int, r, p) * den_inv, p);
      bool serves_all = true;
      for (const auto& e : eps) {
        if (jacobi(e * value, p) == -1) {
          candidates[e].emplace_back(p, r);
        } else {
          serves_all = false;
        }
      }
      if (serves_all && !shared) shared = std::make_pair(p, r);
    }
  }

  CertificateResult result;
  if (shared) {
    PsiCertificate cert;
    for (const auto& e : eps) cert.witnesses.push_back({e, shared->first, shared->second});
    result.certificate = std::move(cert);
    return result;
  }

  // Fall back to one witness per class; a prime may be shared only when the
  // root agrees, so the combined congruences stay consistent.
  std::map<Int, Int> root_for_prime;
  PsiCertificate cert;
  for (const auto& e : eps) {
    bool found = false;
    for (const auto& [p, r] : candidates[e]) {
      auto it = root_for_prime.find(p);
      if (it != root_for_prime.end() && it->second != r) continue;
      root_for_prime[p] = r;
      cert.witnesses.push_back({e, p, r});
      found = true;
      break;
    }
    if (!found) result.unserved.push_back(e);
  }
  if (result.unserved.empty()) result.certificate = std::move(cert);
  return result;
}

}  // namespace genusforms
