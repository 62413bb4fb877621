#include "vconc/exact.hpp"

#include "vconc/errors.hpp"

namespace vconc {

std::string to_string(Condition c) {
  switch (c) {
    case Condition::kNotSquare: return "square-shape";
    case Condition::kDimensionMismatch: return "dimension-mismatch";
    case Condition::kOddDimension: return "even-dimension";
    case Condition::kNonIntegral: return "integrality";
    case Condition::kSkewSymmetry: return "skew-symmetry";
    case Condition::kDeterminant: return "determinant";
    case Condition::kSymmetrization: return "symmetrization";
    case Condition::kAdmissibility: return "admissibility";
    case Condition::kIsometry: return "isometry";
    case Condition::kDiagram: return "diagram";
  }
  return "unknown";
}

Place Place::prime(Integer p) {
  if (p < 2 || !is_prime(p)) {
    throw InvalidArgument("place: " + p.get_str() + " is not a prime");
  }
  return Place(std::move(p));
}

std::string Place::to_string() const {
  return infinite_ ? std::string("inf") : p_.get_str();
}

SquareClass::SquareClass(const Rational& x) : rep_(squarefree_part(x).rep_) {}

SquareClass SquareClass::operator*(const SquareClass& o) const {
  return SquareClass(Rational(rep_ * o.rep_));
}

Rational parse_rational(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  // Normalize U+2212 MINUS SIGN (E2 88 92) to '-'.
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      s.push_back('-');
      i += 2;
    } else if (text[i] != ' ' && text[i] != '\t') {
      s.push_back(text[i]);
    }
  }
  auto bad = [&] { return InvalidArgument("malformed rational '" + std::string(text) + "'"); };
  std::size_t pos = 0;
  bool negative = false;
  if (pos < s.size() && s[pos] == '-') {
    negative = true;
    ++pos;
  }
  auto digits = [&](std::size_t& at) {
    std::size_t start = at;
    while (at < s.size() && s[at] >= '0' && s[at] <= '9') ++at;
    if (at == start) throw bad();
    return s.substr(start, at - start);
  };
  std::string num = digits(pos);
  std::string den = "1";
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    den = digits(pos);
  }
  if (pos != s.size()) throw bad();
  Integer d(den);
  if (d == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  Rational q(Integer(num), d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

int legendre(const Integer& a, const Integer& p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw InvalidArgument("legendre: " + p.get_str() + " is not an odd prime");
  }
  Integer r = a % p;
  if (r < 0) r += p;
  return mpz_legendre(r.get_mpz_t(), p.get_mpz_t());
}

namespace {

// Strips p from n (n != 0), returning the exponent.
long strip(Integer& n, const Integer& p) {
  long v = 0;
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

// Integer in the same square class as x (num * den).
Integer square_class_integer(const Rational& x) { return x.get_num() * x.get_den(); }

}  // namespace

long padic_val(const Rational& x, const Integer& p) {
  if (x == 0) throw InvalidArgument("padic_val: zero argument");
  if (p < 2) throw InvalidArgument("padic_val: modulus must be prime");
  Integer num = x.get_num();
  Integer den = x.get_den();
  return strip(num, p) - strip(den, p);
}

SquareClass squarefree_part(const Rational& x) {
  if (x == 0) throw InvalidArgument("squarefree_part: zero argument");
  Integer n = square_class_integer(x);
  Integer result = sgn(n) < 0 ? Integer(-1) : Integer(1);
  for (const auto& [prime, exponent] : factor_integer(n)) {
    if (exponent % 2 == 1) result *= prime;
  }
  return SquareClass(SquareClass::Squarefree{}, std::move(result));
}

bool is_square_qp(const Rational& x, const Place& place) {
  if (x == 0) throw InvalidArgument("is_square_qp: zero argument");
  if (place.is_infinite()) return x > 0;
  const Integer& p = place.p();
  Integer n = square_class_integer(x);
  long v = strip(n, p);
  if (v % 2 != 0) return false;
  if (p == 2) {
    Integer r = n % 8;
    if (r < 0) r += 8;
    return r == 1;
  }
  return legendre(n, p) == 1;
}

int hilbert_symbol(const Rational& a, const Rational& b, const Place& place) {
  if (a == 0 || b == 0) throw InvalidArgument("hilbert_symbol: zero argument");
  if (place.is_infinite()) return (a < 0 && b < 0) ? -1 : 1;
  const Integer& p = place.p();
  Integer u = square_class_integer(a);
  Integer w = square_class_integer(b);
  long alpha = strip(u, p);
  long beta = strip(w, p);
  if (p == 2) {
    auto mod8 = [](const Integer& z) {
      Integer r = z % 8;
      if (r < 0) r += 8;
      return r.get_si();
    };
    long u8 = mod8(u);
    long w8 = mod8(w);
    auto eps = [](long t) { return ((t - 1) / 2) % 2; };
    auto omega = [](long t) { return ((t * t - 1) / 8) % 2; };
    long e = eps(u8) * eps(w8) + (alpha % 2) * omega(w8) + (beta % 2) * omega(u8);
    return e % 2 == 0 ? 1 : -1;
  }
  int sign = 1;
  if ((alpha % 2 != 0) && (beta % 2 != 0)) {
    Integer half = (p - 1) / 2;
    if (half % 2 != 0) sign = -sign;
  }
  if (beta % 2 != 0) sign *= legendre(u, p);
  if (alpha % 2 != 0) sign *= legendre(w, p);
  return sign;
}

int hasse_symbol(std::span<const Rational> diag, const Place& place) {
  for (const auto& a : diag) {
    if (a == 0) throw InvalidArgument("hasse_symbol: zero diagonal entry");
  }
  int s = 1;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      s *= hilbert_symbol(diag[i], diag[j], place);
    }
  }
  return s;
}

}  // namespace vconc
