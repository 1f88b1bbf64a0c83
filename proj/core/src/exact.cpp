#include "qmzv/exact.hpp"

#include <cmath>
#include <deque>
#include <mutex>
#include <stdexcept>

namespace qmzv {

Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto slash = s.find('/');
  auto valid_int = [](const std::string& part) {
    if (part.empty()) return false;
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational: " + s);
  if (num[0] == '+') num.erase(0, 1);
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  Rational r(Integer(num), d);
  r.canonicalize();
  return r;
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

namespace {

std::mutex g_factorial_mutex;
std::deque<Integer> g_factorials{Integer(1)};

std::mutex g_bernoulli_mutex;
std::vector<Rational> g_bernoulli;

std::mutex g_eulerian_mutex;
std::deque<IntPoly> g_eulerian;  // index k - 1; deque keeps references stable

// Akiyama-Tanigawa; yields B_n with the B_1 = +1/2 convention.
Rational akiyama_tanigawa(long n) {
  std::vector<Rational> a(static_cast<std::size_t>(n) + 1);
  for (long m = 0; m <= n; ++m) {
    a[static_cast<std::size_t>(m)] = Rational(1, m + 1);
    for (long j = m; j >= 1; --j) {
      auto ju = static_cast<std::size_t>(j);
      a[ju - 1] = j * (a[ju - 1] - a[ju]);
    }
  }
  return a[0];
}

}  // namespace

const Integer& factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  std::lock_guard lock(g_factorial_mutex);
  while (static_cast<long>(g_factorials.size()) <= n) {
    long next = static_cast<long>(g_factorials.size());
    g_factorials.push_back(g_factorials.back() * next);
  }
  return g_factorials[static_cast<std::size_t>(n)];
}

Rational bernoulli(long n) {
  if (n < 0) throw std::domain_error("bernoulli index must be nonnegative");
  if (n == 1) return Rational(-1, 2);
  if (n > 1 && n % 2 == 1) return 0;
  std::lock_guard lock(g_bernoulli_mutex);
  while (static_cast<long>(g_bernoulli.size()) <= n) {
    long m = static_cast<long>(g_bernoulli.size());
    g_bernoulli.push_back((m > 1 && m % 2 == 1) ? Rational(0) : akiyama_tanigawa(m));
  }
  return g_bernoulli[static_cast<std::size_t>(n)];
}

IntPoly::IntPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational IntPoly::coefficient(long i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational IntPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

long double IntPoly::evaluate(long double x) const {
  long double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + static_cast<long double>(it->get_d());
  return acc;
}

const IntPoly& eulerian_poly(long k) {
  if (k < 1) throw std::domain_error("eulerian_poly requires k >= 1");
  std::lock_guard lock(g_eulerian_mutex);
  while (static_cast<long>(g_eulerian.size()) < k) {
    long kk = static_cast<long>(g_eulerian.size()) + 1;
    // [X^j] (1-X)^k * sum_{n>0} n^{k-1} X^n = sum_{i<j} (-1)^i C(k,i) (j-i)^{k-1}
    std::vector<Rational> c(static_cast<std::size_t>(kk) + 1);
    for (long j = 1; j <= kk; ++j) {
      Integer acc = 0;
      for (long i = 0; i < j; ++i) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(j - i), static_cast<unsigned long>(kk - 1));
        Integer term = binomial(kk, i) * p;
        if (i % 2 == 0)
          acc += term;
        else
          acc -= term;
      }
      Rational v(acc, 1);
      v /= Rational(factorial(kk - 1));
      c[static_cast<std::size_t>(j)] = v;
    }
    g_eulerian.emplace_back(std::move(c));
  }
  return g_eulerian[static_cast<std::size_t>(k - 1)];
}

}  // namespace qmzv
