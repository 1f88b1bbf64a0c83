#include "qmzv/brackets.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qmzv {

// ---------------------------------------------------------------- BiIndex

BiIndex::BiIndex(std::vector<int> k, std::vector<int> d) : k_(std::move(k)), d_(std::move(d)) {
  if (k_.empty()) throw std::invalid_argument("bi-index must have depth >= 1");
  if (k_.size() != d_.size()) throw std::invalid_argument("bi-index k and d tuples differ in length");
  for (int x : k_)
    if (x < 1) throw std::invalid_argument("bi-index entries k_i must be >= 1");
  for (int x : d_)
    if (x < 0) throw std::invalid_argument("bi-index entries d_i must be >= 0");
}

int BiIndex::weight() const {
  int w = 0;
  for (int x : k_) w += x;
  for (int x : d_) w += x;
  return w;
}

std::string BiIndex::to_string() const {
  std::ostringstream os;
  os << "g(";
  for (std::size_t i = 0; i < k_.size(); ++i) os << (i ? "," : "") << k_[i];
  os << ';';
  for (std::size_t i = 0; i < d_.size(); ++i) os << (i ? "," : "") << d_[i];
  os << ')';
  return os.str();
}

std::strong_ordering operator<=>(const BiIndex& a, const BiIndex& b) {
  if (auto c = a.k_ <=> b.k_; c != 0) return c;
  return a.d_ <=> b.d_;
}

// -------------------------------------------------------------- Partition

Partition::Partition(std::vector<long> parts, std::vector<long> mults)
    : parts_(std::move(parts)), mults_(std::move(mults)) {
  if (parts_.size() != mults_.size()) throw std::invalid_argument("partition parts/multiplicities differ in length");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || mults_[i] <= 0) throw std::invalid_argument("partition entries must be positive");
    if (i > 0 && parts_[i] >= parts_[i - 1]) throw std::invalid_argument("partition parts must strictly decrease");
  }
}

long Partition::size() const {
  long n = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) n += parts_[i] * mults_[i];
  return n;
}

Partition conjugate(const Partition& lambda) {
  const auto& m = lambda.parts();
  const auto& n = lambda.mults();
  const std::size_t r = m.size();
  // Part sizes n_1 + ... + n_{r-i}, multiplicities m_r, m_{r-1} - m_r, ..., m_1 - m_2.
  // Partial sums of positive n_i decrease strictly and consecutive differences of
  // strictly decreasing m_i are positive, so no merging of parts is ever needed.
  std::vector<long> parts(r);
  std::vector<long> mults(r);
  long prefix = 0;
  for (std::size_t i = 0; i < r; ++i) {
    prefix += n[i];
    parts[r - 1 - i] = prefix;
  }
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t src = r - 1 - i;
    mults[i] = src + 1 < r ? m[src] - m[src + 1] : m[src];
  }
  return Partition(std::move(parts), std::move(mults));
}

namespace {

void partition_rec(std::size_t remaining, long min_part, long budget, std::vector<long>& parts,
                   std::vector<long>& mults, const std::function<void(const Partition&)>& f) {
  if (remaining == 0) {
    // parts were chosen smallest first
    std::vector<long> p(parts.rbegin(), parts.rend());
    std::vector<long> n(mults.rbegin(), mults.rend());
    f(Partition(std::move(p), std::move(n)));
    return;
  }
  for (long m = min_part; m <= budget; ++m) {
    for (long n = 1; m * n <= budget; ++n) {
      parts.push_back(m);
      mults.push_back(n);
      partition_rec(remaining - 1, m + 1, budget - m * n, parts, mults, f);
      parts.pop_back();
      mults.pop_back();
    }
  }
}

}  // namespace

void for_each_partition(std::size_t r, long N, const std::function<void(const Partition&)>& f) {
  if (r == 0) return;
  std::vector<long> parts;
  std::vector<long> mults;
  partition_rec(r, 1, N, parts, mults, f);
}

Rational partition_weight(const BiIndex& idx, const Partition& lambda) {
  if (lambda.distinct_parts() != idx.depth())
    throw std::invalid_argument("partition depth does not match bi-index depth");
  Integer num = 1;
  Integer den = 1;
  Integer p;
  for (std::size_t i = 0; i < idx.depth(); ++i) {
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(lambda.parts()[i]), static_cast<unsigned long>(idx.d()[i]));
    num *= p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(lambda.mults()[i]), static_cast<unsigned long>(idx.k()[i] - 1));
    num *= p;
    den *= factorial(idx.k()[i] - 1);
  }
  return ratio(num, den);
}

// ----------------------------------------------------------- BracketCombo

BracketCombo::BracketCombo(std::initializer_list<std::pair<BiIndex, Rational>> terms) {
  for (const auto& [idx, c] : terms) add(idx, c);
}

void BracketCombo::add(const BiIndex& idx, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(idx, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BracketCombo& BracketCombo::operator+=(const BracketCombo& o) {
  for (const auto& [idx, c] : o.terms_) add(idx, c);
  return *this;
}

BracketCombo& BracketCombo::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [idx, v] : terms_) v *= c;
  return *this;
}

Rational BracketCombo::coefficient(const BiIndex& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? Rational(0) : it->second;
}

// ------------------------------------------------------------- evaluation

namespace {

// Enumerates m_r < m_{r-1} < ... < m_1 innermost first, with pruning on the
// smallest exponent the remaining (larger) parts can still contribute.
class BracketEnumerator {
public:
  BracketEnumerator(const BiIndex& idx, std::size_t N) : idx_(idx), N_(static_cast<long>(N)), acc_(N + 1, 0) {
    const std::size_t r = idx.depth();
    mpow_.resize(r);
    npow_.resize(r);
    for (std::size_t i = 0; i < r; ++i) {
      mpow_[i].resize(N + 1);
      npow_[i].resize(N + 1);
      for (std::size_t x = 1; x <= N; ++x) {
        mpz_ui_pow_ui(mpow_[i][x].get_mpz_t(), x, static_cast<unsigned long>(idx.d()[i]));
        mpz_ui_pow_ui(npow_[i][x].get_mpz_t(), x, static_cast<unsigned long>(idx.k()[i] - 1));
      }
    }
  }

  std::vector<Integer> run() {
    descend(idx_.depth() - 1, 1, 0, Integer(1));
    return std::move(acc_);
  }

private:
  // Smallest sum the positions 0..pos-1 can add when all parts exceed m.
  static long rest_min(std::size_t pos, long m) {
    auto p = static_cast<long>(pos);
    return p * m + p * (p + 1) / 2;
  }

  void descend(std::size_t pos, long min_m, long used, const Integer& w) {
    Integer wm;
    Integer wn;
    for (long m = min_m; used + m + rest_min(pos, m) <= N_; ++m) {
      mpz_mul(wm.get_mpz_t(), w.get_mpz_t(), mpow_[pos][static_cast<std::size_t>(m)].get_mpz_t());
      for (long n = 1; used + m * n + rest_min(pos, m) <= N_; ++n) {
        const auto& np = npow_[pos][static_cast<std::size_t>(n)];
        if (pos == 0) {
          mpz_addmul(acc_[static_cast<std::size_t>(used + m * n)].get_mpz_t(), wm.get_mpz_t(), np.get_mpz_t());
        } else {
          mpz_mul(wn.get_mpz_t(), wm.get_mpz_t(), np.get_mpz_t());
          descend(pos - 1, m + 1, used + m * n, wn);
        }
      }
    }
  }

  const BiIndex& idx_;
  long N_;
  std::vector<Integer> acc_;
  std::vector<std::vector<Integer>> mpow_;
  std::vector<std::vector<Integer>> npow_;
};

Integer factorial_product(const BiIndex& idx) {
  Integer den = 1;
  for (int k : idx.k()) den *= factorial(k - 1);
  return den;
}

}  // namespace

QSeries eval_bracket(const BiIndex& idx, std::size_t N) {
  auto acc = BracketEnumerator(idx, N).run();
  const Integer den = factorial_product(idx);
  QSeries out(N);
  for (std::size_t M = 1; M <= N; ++M) {
    if (acc[M] == 0) continue;
    out[M] = ratio(acc[M], den);
  }
  return out;
}

QSeries bracket_via_conjugation(const BiIndex& idx, std::size_t N) {
  QSeries out(N);
  for_each_partition(idx.depth(), static_cast<long>(N), [&](const Partition& lambda) {
    out[static_cast<std::size_t>(lambda.size())] += partition_weight(idx, conjugate(lambda));
  });
  return out;
}

QSeries eval_combo(const BracketCombo& combo, std::size_t N) {
  QSeries out(N);
  for (const auto& [idx, c] : combo.terms()) out += eval_bracket(idx, N) * c;
  return out;
}

// ------------------------------------------------------ algebraic structure

Rational lambda_coeff(int k1, int k2, int j) {
  if (k1 < 1 || k2 < 1) throw std::out_of_range("lambda_coeff requires k1, k2 >= 1");
  if (j < 1 || j > k1 + k2 - 1) throw std::out_of_range("lambda_coeff index j out of range");
  const long top = k1 + k2 - 1 - j;
  Integer a = binomial(top, k2 - j);
  Integer b = binomial(top, k1 - j);
  if ((k1 - 1) % 2) a = -a;
  if ((k2 - 1) % 2) b = -b;
  const long n = k1 + k2 - j;
  return Rational(a + b) * bernoulli(n) / Rational(factorial(n));
}

BracketCombo expand_stuffle(int k1, int d1, int k2, int d2) {
  BracketCombo out;
  out.add(bi(k1, k2, d1, d2), 1);
  out.add(bi(k2, k1, d2, d1), 1);
  out.add(bi(k1 + k2, d1 + d2), 1);
  for (int j = 1; j <= k1 + k2 - 1; ++j) out.add(bi(j, d1 + d2), lambda_coeff(k1, k2, j));
  return out;
}

BracketCombo expand_partition_relation(const BiIndex& idx) {
  BracketCombo out;
  if (idx.depth() == 1) {
    const int k = idx.k()[0];
    const int d = idx.d()[0];
    out.add(bi(d + 1, k - 1), ratio(factorial(d), factorial(k - 1)));
    return out;
  }
  if (idx.depth() != 2)
    throw std::invalid_argument("closed-form partition relation is only available for depth 1 and 2");
  const int k1 = idx.k()[0], k2 = idx.k()[1];
  const int d1 = idx.d()[0], d2 = idx.d()[1];
  const Rational outer = ratio(factorial(d1), factorial(k1 - 1));
  for (int a = 0; a <= d1; ++a) {
    for (int b = 0; b <= k2 - 1; ++b) {
      Rational c = ratio(factorial(d2 + a), factorial(a) * factorial(b) * factorial(k2 - 1 - b));
      c *= outer;
      if (b % 2) c = -c;
      out.add(bi(d2 + 1 + a, d1 + 1 - a, k2 - 1 - b, k1 - 1 + b), c);
    }
  }
  return out;
}

BracketCombo expand_partition_relation(const BracketCombo& combo) {
  BracketCombo out;
  for (const auto& [idx, c] : combo.terms()) out += c * expand_partition_relation(idx);
  return out;
}

BracketCombo expand_shuffle(int k1, int d1, int k2, int d2) {
  BracketCombo out;
  const int K = k1 + k2;
  const int D = d1 + d2;
  for (int l1 = 1; l1 <= K - 1; ++l1) {
    for (int e1 = 0; e1 <= D; ++e1) {
      Integer a = binomial(l1 - 1, k1 - 1) * binomial(d1, e1);
      if ((d1 - e1) % 2) a = -a;
      Integer b = binomial(l1 - 1, k2 - 1) * binomial(d2, e1);
      if ((d2 - e1) % 2) b = -b;
      out.add(bi(l1, K - l1, e1, D - e1), Rational(a + b));
    }
  }
  const Integer dd = factorial(d1) * factorial(d2);
  const Integer bin = binomial(K - 2, k1 - 1);
  out.add(bi(K - 1, D + 1), ratio(dd * bin, factorial(D + 1)));
  for (int j = 1; j <= D + 1; ++j) {
    Rational c = lambda_coeff(d1 + 1, d2 + 1, j) / Rational(factorial(j - 1));
    c *= Rational(dd * bin);
    out.add(bi(K - 1, j - 1), c);
  }
  return out;
}

BracketCombo qderiv_bracket(const BiIndex& idx) {
  BracketCombo out;
  for (std::size_t j = 0; j < idx.depth(); ++j) {
    auto k = idx.k();
    auto d = idx.d();
    const int kj = k[j];
    ++k[j];
    ++d[j];
    out.add(BiIndex(std::move(k), std::move(d)), kj);
  }
  return out;
}

QSeries eval_expr(const BracketExpr& expr, std::size_t N) {
  if (const auto* prod = std::get_if<BracketProduct>(&expr)) {
    QSeries acc = QSeries::constant(1, N);
    for (const auto& f : prod->factors) acc *= eval_bracket(f, N);
    return acc;
  }
  return eval_combo(std::get<BracketCombo>(expr), N);
}

SeriesComparison verify_bracket_identity(const BracketExpr& lhs, const BracketCombo& rhs, std::size_t N) {
  return compare_series(eval_expr(lhs, N), eval_combo(rhs, N));
}

}  // namespace qmzv
