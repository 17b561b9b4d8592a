#include "lbforge/rational.hpp"

#include <cctype>

#include "lbforge/error.hpp"

namespace lbforge {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidRank: return "invalid-rank";
    case Errc::InvalidParameter: return "invalid-parameter";
    case Errc::PoleAtZero: return "pole-at-zero";
    case Errc::DegenerateSubstitution: return "degenerate-substitution";
    case Errc::MalformedElement: return "malformed-element";
    case Errc::InvalidInput: return "invalid-input";
    case Errc::InconclusiveWindow: return "inconclusive-window";
    case Errc::NotTransversal: return "not-transversal";
    case Errc::KindMismatch: return "kind-mismatch";
    case Errc::NotPolynomial: return "not-polynomial";
    case Errc::DegenerateChange: return "degenerate-change";
    case Errc::Parse: return "parse";
  }
  return "unknown";
}

std::string to_string(const Rational& q) { return q.get_str(10); }

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string strip_plus(std::string_view s) {
  return std::string(!s.empty() && s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den.find_first_of("+-") != std::string_view::npos)
    throw Error(Errc::Parse, "not an exact rational: '" + std::string(text) + "'");
  mpz_class n(strip_plus(num), 10), d(std::string(den), 10);
  if (d == 0) throw Error(Errc::Parse, "zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

}  // namespace lbforge
