#include "genusforms/specialize.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace genusforms {

namespace {

// [a, b, c] -> [a*t, b, c/t] by diag(t, 1)-type unit moves, per S-prime.
// Returns false when the values cannot be made integral this way.
bool clear_s_denominators(Rat& a, const Rat& b, Rat& c, const SRing& s) {
  if (!is_integer(b)) return false;
  for (const auto& p : s.primes()) {
    auto val = [&](const Rat& x) {
      long v = 0;
      Int n = num(x), d = den(x);
      while (n != 0 && n % p == 0) {
        n /= p;
        ++v;
      }
      while (d % p == 0) {
        d /= p;
        --v;
      }
      return v;
    };
    long ea = val(a), ec = val(c);
    if (ea >= 0 && ec >= 0) continue;
    // Multiply a by p^k and divide c by p^k; need ea + k >= 0 and ec - k >= 0.
    if (-ea > ec) return false;
    long k = ea < 0 ? -ea : ec;
    Rat t(1);
    if (k >= 0)
      for (long i = 0; i < k; ++i) t *= p;
    else
      for (long i = 0; i < -k; ++i) t /= p;
    a *= t;
    c /= t;
  }
  return is_integer(a) && is_integer(c);
}

}  // namespace

QuadFormZ eval_form(const QuadFormP& q, const Int& n, const SRing& s) {
  Rat x(n);
  Rat av = evaluate_at(q.a, x), bv = evaluate_at(q.b, x), cv = evaluate_at(q.c, x);
  for (const Rat* v : {&av, &bv, &cv}) {
    if (!s.is_s_integral(*v)) raise("NotSIntegral", "specialized coefficient is not an S-integer");
  }
  if (!is_integer(av) || !is_integer(bv) || !is_integer(cv)) {
    if (!clear_s_denominators(av, bv, cv, s))
      raise("NotSIntegral", "S-integral specialization has no integral representative");
  }
  QuadFormZ out{num(av), num(bv), num(cv)};
  if (!is_primitive(out, &s))
    raise("ImprimitiveSpecialization", "specialized form is imprimitive over the S-integers");
  return out;
}

SieveCell classify_specialization(const QuadFormP& q, const Int& n, const SRing& s) {
  QuadFormZ qn = eval_form(q, n, s);
  Int disc = discriminant(qn);
  Int fn = detail::ring_div_exact(disc, Int(4));
  SieveCell cell{n, fn, CellClass::NonTrivial, CellMethod::Unknown, std::nullopt};

  if (disc == 0) {
    cell.cls = CellClass::RootOfF;
    cell.method = CellMethod::ExactReduction;
    return cell;
  }
  // f(n) = (S-unit) * square  <=>  the prime-to-S part of |4 f(n)| is a square.
  if (is_perfect_square(s.prime_to_s_part(disc))) {
    cell.cls = CellClass::DegenerateSquare;
    cell.method = CellMethod::ExactReduction;
    return cell;
  }

  if (s.empty()) {
    EquivalenceResult eq = is_equivalent_to_principal(qn, /*want_witness=*/true);
    cell.method = CellMethod::ExactReduction;
    if (eq.equivalent) {
      cell.cls = CellClass::Trivial;
      cell.witness = eq.witness;
    } else {
      cell.cls = CellClass::NonTrivial;
    }
    return cell;
  }

  // S nonempty: triviality over the S-integers is not decided exactly; the
  // genus map gives a sound one-sided test.
  try {
    if (!in_principal_genus(qn, s)) {
      cell.cls = CellClass::NonTrivial;
      cell.method = CellMethod::GenusCertificate;
    } else {
      cell.method = CellMethod::Unknown;
    }
  } catch (const DomainError& e) {
    if (e.name() != "ModulusTooLarge") throw;
    cell.method = CellMethod::Unknown;
  }
  return cell;
}

std::vector<SieveCell> sieve(const QuadFormP& q, const Int& lo, const Int& hi, const SRing& s) {
  if (lo > hi) raise("BadModulus", "sieve range is empty");
  std::size_t count = static_cast<std::size_t>(hi - lo + 1);
  std::vector<SieveCell> cells(count);

  unsigned threads = std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  if (const char* env = std::getenv("GENUSFORMS_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) threads = static_cast<unsigned>(v);
  }
  threads = std::min<unsigned>(threads, 8);
  if (count < 64) threads = 1;

  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      try {
        cells[i] = classify_specialization(q, lo + Int(static_cast<long long>(i)), s);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  if (threads <= 1) {
    worker(0, count);
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (count + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      std::size_t begin = t * chunk;
      if (begin >= count) break;
      pool.emplace_back(worker, begin, std::min(count, begin + chunk));
    }
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);
  return cells;
}

std::optional<CriterionResult> find_criterion(const QuadFormP& q, const Curve& curve,
                                              const SRing& s, const Int& prime_bound,
                                              const Int& prime_min) {
  if (!(discriminant(q) == PolyQ(4) * curve.fq()))
    raise("DiscMismatch", "form discriminant is not 4f");
  CertificateResult cert = psi_poly_certificate(q, curve, s, prime_bound, prime_min);
  if (!cert.certificate) return std::nullopt;

  // Combine the witness congruences n == r (mod p). Witnesses sharing a
  // prime share its root, so the system is consistent.
  std::vector<Congruence> congruences;
  std::map<Int, Int> seen;
  for (const auto& w : cert.certificate->witnesses) {
    auto it = seen.find(w.p);
    if (it != seen.end()) continue;
    seen[w.p] = w.r;
    congruences.push_back({w.r, w.p});
  }
  Congruence combined = crt(congruences);

  CriterionResult result;
  result.classes.push_back({combined.residue, combined.modulus, *cert.certificate});
  for (const Int& root : curve.integer_roots()) {
    if (mod_pos(root, combined.modulus) == combined.residue) result.excluded_roots.push_back(root);
  }
  return result;
}

DensityReport empirical_density(const QuadFormP& q, const Int& n_max, const SRing& s,
                                bool symmetric) {
  if (n_max < 1) raise("BadModulus", "density box must be nonempty");
  DensityReport report;
  report.n_max = n_max;
  report.symmetric = symmetric;
  report.counts = {{CellClass::Trivial, 0},
                   {CellClass::NonTrivial, 0},
                   {CellClass::DegenerateSquare, 0},
                   {CellClass::RootOfF, 0}};

  std::vector<SieveCell> pos = sieve(q, 1, n_max, s);
  std::vector<SieveCell> neg;
  if (symmetric) neg = sieve(q, -n_max, -1, s);

  auto is_unknown = [](const SieveCell& c) {
    return c.method == CellMethod::Unknown;
  };
  for (const auto& cells : {pos, neg}) {
    for (const auto& c : cells) {
      if (is_unknown(c))
        ++report.unknown;
      else
        ++report.counts[c.cls];
    }
  }

  auto trivial_count_upto = [&](const Int& bound) {
    Int cnt = 0;
    for (const auto& c : pos) {
      if (abs(c.n) <= bound && c.cls == CellClass::Trivial && !is_unknown(c)) ++cnt;
    }
    for (const auto& c : neg) {
      if (abs(c.n) <= bound && c.cls == CellClass::Trivial && !is_unknown(c)) ++cnt;
    }
    return cnt;
  };
  auto box_size = [&](const Int& bound) { return symmetric ? 2 * bound : bound; };

  report.trivial_fraction = Rat(trivial_count_upto(n_max), box_size(n_max));
  int steps = n_max >= 10 ? 10 : static_cast<int>(n_max);
  for (int k = 1; k <= steps; ++k) {
    Int bound = n_max * k / steps;
    report.prefix.emplace_back(bound, Rat(trivial_count_upto(bound), box_size(bound)));
  }
  for (std::size_t i = 1; i < report.prefix.size(); ++i) {
    if (report.prefix[i].second > report.prefix[i - 1].second)
      report.monotone_nonincreasing = false;
  }
  return report;
}

const char* to_string(CellClass c) {
  switch (c) {
    case CellClass::Trivial: return "Trivial";
    case CellClass::NonTrivial: return "NonTrivial";
    case CellClass::DegenerateSquare: return "DegenerateSquare";
    case CellClass::RootOfF: return "RootOfF";
  }
  return "?";
}

const char* to_string(CellMethod m) {
  switch (m) {
    case CellMethod::ExactReduction: return "ExactReduction";
    case CellMethod::GenusCertificate: return "GenusCertificate";
    case CellMethod::Unknown: return "Unknown";
  }
  return "?";
}

}  // namespace genusforms
