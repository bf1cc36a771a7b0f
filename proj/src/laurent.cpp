#include "hflkit/laurent.hpp"

#include <cctype>
#include <stdexcept>

namespace hflkit {

LaurentPoly LaurentPoly::constant(const BigInt& c) { return monomial(c, HalfInt{}); }

LaurentPoly LaurentPoly::monomial(const BigInt& c, HalfInt exponent) {
  LaurentPoly p;
  p.accumulate(exponent, c);
  return p;
}

LaurentPoly LaurentPoly::from_terms(const Terms& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p.accumulate(e, c);
  return p;
}

void LaurentPoly::accumulate(HalfInt exponent, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

BigInt LaurentPoly::coefficient(HalfInt exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::optional<HalfInt> LaurentPoly::min_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<HalfInt> LaurentPoly::max_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

bool LaurentPoly::is_unit() const { return terms_.size() == 1 && abs(terms_.begin()->second) == 1; }

bool LaurentPoly::is_symmetric() const {
  for (const auto& [e, c] : terms_) {
    if (coefficient(-e) != c) return false;
  }
  return true;
}

BigInt LaurentPoly::value_at_one() const {
  BigInt sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

BigInt LaurentPoly::value_at_minus_one() const {
  BigInt sum = 0;
  for (const auto& [e, c] : terms_) {
    if (!e.is_integer()) throw std::domain_error("value at -1 needs integral exponents");
    if (e.floor() % 2 == 0) {
      sum += c;
    } else {
      sum -= c;
    }
  }
  return sum;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    const BigInt mag = abs(c);
    if (e == HalfInt{}) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str();
    out += 't';
    if (e != HalfInt::from_int(1)) out += '^' + e.to_string();
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) accumulate(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) accumulate(e, BigInt(-c));
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.accumulate(ea + eb, BigInt(ca * cb));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class PolyParser {
public:
  explicit PolyParser(std::string_view text) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) src_ += ch;
    }
  }

  LaurentPoly run() {
    if (src_.empty()) fail("empty polynomial");
    LaurentPoly out;
    bool first = true;
    while (pos_ < src_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = src_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      out += term(sign);
    }
    return out;
  }

private:
  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return src_.substr(start, pos_ - start);
  }

  LaurentPoly term(int sign) {
    BigInt coef = 1;
    bool has_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = BigInt(digits());
      has_coef = true;
      if (peek() == '*') {
        ++pos_;
        if (peek() != 't') fail("expected 't' after '*'");
      }
    }
    HalfInt exponent{};
    if (peek() == 't') {
      ++pos_;
      exponent = HalfInt::from_int(1);
      if (peek() == '^') {
        ++pos_;
        exponent = exponent_value();
      }
    } else if (!has_coef) {
      fail("expected a coefficient or 't'");
    }
    if (sign < 0) coef = -coef;
    return LaurentPoly::monomial(coef, exponent);
  }

  HalfInt exponent_value() {
    char close = '\0';
    if (peek() == '(') close = ')';
    if (peek() == '{') close = '}';
    if (close != '\0') ++pos_;

    const std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    if (digits().empty()) fail("expected exponent digits");
    if (peek() == '/') {
      ++pos_;
      if (digits().empty()) fail("expected exponent denominator");
    }
    HalfInt value;
    try {
      value = HalfInt::parse(std::string_view(src_).substr(start, pos_ - start));
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
    if (close != '\0') {
      if (peek() != close) fail(std::string("expected '") + close + "'");
      ++pos_;
    }
    return value;
  }

  std::string src_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) { return PolyParser(text).run(); }

// ---------------------------------------------------------------------------

LaurentPoly laurent_add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }

LaurentPoly laurent_mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

LaurentPoly laurent_substitute(const LaurentPoly& p, std::int64_t n) {
  LaurentPoly::Terms acc;
  for (const auto& [e, c] : p.terms()) acc[e * n] += c;
  return LaurentPoly::from_terms(acc);
}

LaurentPoly laurent_shift(const LaurentPoly& p, HalfInt shift) {
  LaurentPoly::Terms out;
  for (const auto& [e, c] : p.terms()) out.emplace(e + shift, c);
  return LaurentPoly::from_terms(out);
}

bool laurent_equal_up_to_unit(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  if (p.terms().size() != q.terms().size()) return false;
  const LaurentPoly aligned = laurent_shift(q, *p.min_exponent() - *q.min_exponent());
  return aligned == p || -aligned == p;
}

LaurentPoly laurent_symmetrize(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  const std::int64_t span = p.min_exponent()->twice() + p.max_exponent()->twice();
  if (span % 2 != 0) throw std::domain_error("polynomial cannot be centred: " + p.to_string());
  LaurentPoly centred = laurent_shift(p, HalfInt::from_twice(-span / 2));
  if (!centred.is_symmetric()) throw std::domain_error("polynomial is not symmetric up to a unit: " + p.to_string());
  if (centred.terms().rbegin()->second < 0) centred = -centred;
  return centred;
}

}  // namespace hflkit
