#include "pmap/counting.hpp"

#include "pmap/rooted_map.hpp"

namespace pmap {

namespace {

BigCount factorial(int n) {
  BigCount r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

BigCount binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  return exact_div(factorial(n), factorial(k) * factorial(n - k));
}

}  // namespace

BigCount exact_div(const BigCount& num, const BigCount& den) {
  BigCount q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw Error(ErrorCode::NonIntegerResult, "inexact division in counting formula");
  return q;
}

std::optional<Formula> parse_formula(const std::string& name) {
  if (name == "theta_ni") return Formula::theta_ni;
  if (name == "theta_n") return Formula::theta_n;
  if (name == "lambda_ni") return Formula::lambda_ni;
  if (name == "lambda_n") return Formula::lambda_n;
  if (name == "a_n") return Formula::a_n;
  return std::nullopt;
}

static void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::OutOfRange, what);
}

BigCount theta(int n, int i) {
  require(n >= 1 && i >= 0 && i < n, "theta(n,i) needs n >= 1 and 0 <= i < n");
  BigCount num = 2 * binomial(n + 1, i) * binomial(n + 1, i + 1) * binomial(n + 1, i + 2);
  return exact_div(num, BigCount(n) * (n + 1) * (n + 1));
}

BigCount theta(int n) {
  require(n >= 1, "theta(n) needs n >= 1");
  BigCount sum = 0;
  for (int i = 0; i < n; ++i) sum += theta(n, i);
  return sum;
}

BigCount lambda(int n, int i) {
  require(n >= 1 && i >= 0 && i < n, "lambda(n,i) needs n >= 1 and 0 <= i < n");
  BigCount num = factorial(n + i) * factorial(2 * n - i - 1);
  BigCount den = factorial(i + 1) * factorial(n - i) * factorial(2 * i + 1) * factorial(2 * n - 2 * i - 1);
  return exact_div(num, den);
}

BigCount lambda(int n) {
  require(n >= 1, "lambda(n) needs n >= 1");
  return exact_div(2 * factorial(3 * n), factorial(n + 1) * factorial(2 * n + 1));
}

BigCount a(int n) {
  require(n >= 0, "a(n) needs n >= 0");
  return exact_div(2 * factorial(4 * n + 1), factorial(n + 1) * factorial(3 * n + 2));
}

BigCount count_formula(Formula f, int n, std::optional<int> i) {
  switch (f) {
    case Formula::theta_ni:
      require(i.has_value(), "theta_ni needs i");
      return theta(n, *i);
    case Formula::theta_n: return theta(n);
    case Formula::lambda_ni:
      require(i.has_value(), "lambda_ni needs i");
      return lambda(n, *i);
    case Formula::lambda_n: return lambda(n);
    case Formula::a_n: return a(n);
  }
  return 0;
}

}  // namespace pmap
