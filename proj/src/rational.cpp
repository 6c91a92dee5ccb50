#include "dgalab/rational.hpp"

#include <stdexcept>

namespace dgalab {

std::string to_string(const Q& value) {
  Q v = value;
  v.canonicalize();
  return v.get_str();
}

Q parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  auto slash = s.find('/');
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  bool ok = slash == std::string::npos ? digits(start, s.size())
                                       : digits(start, slash) && digits(slash + 1, s.size());
  if (!ok) throw std::invalid_argument("malformed rational '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  Q q(s, 10);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

Q pow(const Q& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("negative power of zero");
    Q inv = 1 / base;
    return pow(inv, -exponent);
  }
  Q result;
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  result.canonicalize();
  return result;
}

bool is_integer(const Q& value) { return value.get_den() == 1; }

std::optional<Q> exact_root(const Q& value, unsigned long k) {
  if (k == 0) return std::nullopt;
  if (k == 1) return value;
  bool negative = value < 0;
  if (negative && k % 2 == 0) return std::nullopt;
  Z num = abs(value.get_num());
  Z den = value.get_den();
  Z rn, rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k) == 0) return std::nullopt;
  Q r(rn, rd);
  r.canonicalize();
  return negative ? Q(-r) : r;
}

}  // namespace dgalab
