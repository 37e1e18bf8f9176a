#include "anosov/exact/numtheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace anosov {

namespace {

constexpr unsigned long kTrialLimit = 1000000;

// Prime factorization of |n| by trial division with the cofactor rules above.
std::vector<std::pair<BigInt, unsigned>> factor_integer(const BigInt& n) {
  std::vector<std::pair<BigInt, unsigned>> out;
  BigInt m = abs(n);
  if (m <= 1) return out;
  for (unsigned long p = 2; p <= kTrialLimit; p += (p == 2 ? 1 : 2)) {
    if (BigInt(p) * p > m) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p) == 0) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
      m /= p;
      ++e;
    }
    out.emplace_back(BigInt(p), e);
  }
  if (m == 1) return out;
  if (m <= BigInt(kTrialLimit) * kTrialLimit || mpz_probab_prime_p(m.get_mpz_t(), 40) > 0) {
    out.emplace_back(m, 1);
    return out;
  }
  if (mpz_perfect_square_p(m.get_mpz_t()) != 0) {
    BigInt r = sqrt(m);
    if (mpz_probab_prime_p(r.get_mpz_t(), 40) > 0) {
      out.emplace_back(r, 2);
      return out;
    }
  }
  // Composite cofactor with all prime factors > 10^6: below 10^18 it is p*q, p != q.
  if (m < BigInt(kTrialLimit) * kTrialLimit * kTrialLimit) {
    out.emplace_back(m, 1);  // treated as a square-free block
    return out;
  }
  throw std::domain_error("integer too large to factor by trial division: " + n.get_str());
}

}  // namespace

std::pair<BigInt, BigInt> square_free_part(const BigInt& n) {
  if (n == 0) return {BigInt(0), BigInt(1)};
  BigInt k = sgn(n) < 0 ? -1 : 1;
  BigInt q = 1;
  for (const auto& [p, e] : factor_integer(n)) {
    for (unsigned i = 0; i < e / 2; ++i) q *= p;
    if (e % 2 == 1) k *= p;
  }
  return {k, q};
}

BigInt square_free_class(const Rational& r) {
  if (r.is_zero()) return 0;
  return square_free_part(r.num() * r.den()).first;
}

bool is_square_free(const BigInt& n) {
  if (n == 0) return false;
  return square_free_part(n).second == 1;
}

std::pair<BigInt, BigInt> pell_fundamental(const BigInt& k) {
  if (k <= 1) throw std::invalid_argument("Pell equation needs k > 1");
  if (!is_square_free(k)) throw std::invalid_argument("Pell parameter must be square-free");
  const BigInt a0 = sqrt(k);
  BigInt m = 0;
  BigInt d = 1;
  BigInt a = a0;
  BigInt h_prev = 1;
  BigInt h = a0;
  BigInt q_prev = 0;
  BigInt q = 1;
  while (h * h - k * q * q != 1) {
    m = d * a - m;
    d = (k - m * m) / d;
    a = (a0 + m) / d;
    BigInt h_next = a * h + h_prev;
    BigInt q_next = a * q + q_prev;
    h_prev = h;
    h = h_next;
    q_prev = q;
    q = q_next;
  }
  return {h, q};
}

std::vector<BigInt> divisors(const BigInt& n) {
  if (n == 0) throw std::invalid_argument("divisors of zero");
  std::vector<BigInt> ds{BigInt(1)};
  for (const auto& [p, e] : factor_integer(n)) {
    if (mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
      throw std::domain_error("cannot enumerate divisors of " + n.get_str());
    std::size_t base = ds.size();
    BigInt pk = 1;
    for (unsigned i = 0; i < e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

}  // namespace anosov
