#include <quotloc/bernoulli.hpp>
#include <quotloc/series.hpp>

#include <mutex>
#include <stdexcept>
#include <vector>

namespace quotloc {
namespace {

// One expanded generating function; values_[k] = B_k in the given convention.
// known_ is the current truncation order, grown by doubling.
class Table {
 public:
  explicit Table(BernoulliConvention convention) : convention_(convention) {}

  Rational get(long k) {
    if (k < 0) throw std::invalid_argument("bernoulli: negative index");
    if (convention_ == BernoulliConvention::Sinh && k == 1)
      throw std::domain_error(
          "bernoulli: B_1 is undetermined in the sinh convention (2^1 - 2 = 0)");
    std::lock_guard<std::mutex> lock(mutex_);
    if (k > known_) expand_to(grow(k));
    return values_[static_cast<std::size_t>(k)];
  }

 private:
  static long grow(long k) {
    long t = 16;
    while (t < k) t *= 2;
    return t;
  }

  void expand_to(long trunc) {
    const std::size_t T = static_cast<std::size_t>(trunc);
    UniSeries<Rational> denom(T, Rational(0));
    if (convention_ == BernoulliConvention::Sinh) {
      // sinh(u)/u = sum_j u^(2j) / (2j+1)!
      for (std::size_t j = 0; 2 * j <= T; ++j)
        denom.set_coeff(2 * j, Rational(1) / factorial(static_cast<long>(2 * j + 1)));
    } else {
      // (e^u - 1)/u = sum_j u^j / (j+1)!
      for (std::size_t j = 0; j <= T; ++j)
        denom.set_coeff(j, Rational(1) / factorial(static_cast<long>(j + 1)));
    }
    const UniSeries<Rational> f = denom.invert();
    values_.assign(T + 1, Rational(0));
    for (std::size_t k = 0; k <= T; ++k) {
      if (convention_ == BernoulliConvention::Sinh) {
        if (k == 1) continue;  // left zero; get() refuses the query anyway
        // -u/sinh u = -f, and [u^k](-f) = (2^k - 2)/k! B_k
        const Rational factor =
            pow_rational(Rational(2), static_cast<long>(k)) - Rational(2);
        values_[k] = -f.coeff(k) * factorial(static_cast<long>(k)) / factor;
      } else {
        values_[k] = f.coeff(k) * factorial(static_cast<long>(k));
      }
    }
    known_ = trunc;
  }

  BernoulliConvention convention_;
  std::mutex mutex_;
  long known_ = -1;
  std::vector<Rational> values_;
};

}  // namespace

Rational bernoulli(long k, BernoulliConvention convention) {
  static Table standard(BernoulliConvention::Standard);
  static Table sinh_table(BernoulliConvention::Sinh);
  return (convention == BernoulliConvention::Sinh ? sinh_table : standard).get(k);
}

}  // namespace quotloc
