#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace operadix {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

// Exact rational scalar backed by an arbitrary-precision rational.
// Canonical string form is "p/q" in lowest terms with positive
// denominator, or just "p" when the denominator is 1.
class rat {
public:
  rat() = default;
  rat(long long v) : v_(v) {}
  rat(const bigint& num, const bigint& den) : v_(num) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    v_ /= den;
  }

  bool is_zero() const { return v_.is_zero(); }

  rat& operator+=(const rat& o) { v_ += o.v_; return *this; }
  rat& operator-=(const rat& o) { v_ -= o.v_; return *this; }
  rat& operator*=(const rat& o) { v_ *= o.v_; return *this; }
  rat& operator/=(const rat& o) {
    if (o.is_zero()) throw std::domain_error("rat: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend rat operator+(rat a, const rat& b) { return a += b; }
  friend rat operator-(rat a, const rat& b) { return a -= b; }
  friend rat operator*(rat a, const rat& b) { return a *= b; }
  friend rat operator/(rat a, const rat& b) { return a /= b; }
  rat operator-() const {
    rat r;
    r.v_ = -v_;
    return r;
  }

  friend bool operator==(const rat& a, const rat& b) = default;

  std::string str() const {
    if (denominator(v_) == 1) return numerator(v_).str();
    return numerator(v_).str() + "/" + denominator(v_).str();
  }

  static rat parse(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos)
      return rat(parse_int(s), bigint(1));
    bigint den = parse_int(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    return rat(parse_int(s.substr(0, slash)), std::move(den));
  }

private:
  static bigint parse_int(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("rat: empty integer");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("rat: bad integer");
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9')
        throw std::invalid_argument("rat: bad integer '" + std::string(s) + "'");
    return bigint(std::string(s));
  }

  bigrat v_;
};

// Prime field scalar. The modulus is fixed per computation via the
// thread-local active modulus (see scoped_modulus); every value carries
// its modulus so cross-field arithmetic is rejected rather than mangled.
class gf {
public:
  static bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

  static void set_modulus(std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("gf: modulus must be prime");
    active_ = p;
  }
  static std::uint64_t modulus() {
    if (active_ == 0) throw std::logic_error("gf: no active modulus");
    return active_;
  }

  struct scoped_modulus {
    explicit scoped_modulus(std::uint64_t p) : saved_(active_) { set_modulus(p); }
    ~scoped_modulus() { active_ = saved_; }
    scoped_modulus(const scoped_modulus&) = delete;
    scoped_modulus& operator=(const scoped_modulus&) = delete;

  private:
    std::uint64_t saved_;
  };

  gf() : p_(modulus()), v_(0) {}
  gf(long long v) : p_(modulus()) {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    v_ = static_cast<std::uint64_t>(r);
  }

  bool is_zero() const { return v_ == 0; }
  std::uint64_t value() const { return v_; }
  std::uint64_t field_modulus() const { return p_; }

  gf& operator+=(const gf& o) {
    check(o);
    v_ += o.v_;
    if (v_ >= p_) v_ -= p_;
    return *this;
  }
  gf& operator-=(const gf& o) {
    check(o);
    v_ = (v_ >= o.v_) ? v_ - o.v_ : v_ + p_ - o.v_;
    return *this;
  }
  gf& operator*=(const gf& o) {
    check(o);
    v_ = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(v_) * o.v_) % p_);
    return *this;
  }
  gf& operator/=(const gf& o) {
    check(o);
    if (o.v_ == 0) throw std::domain_error("gf: division by zero");
    return *this *= o.inverse();
  }

  friend gf operator+(gf a, const gf& b) { return a += b; }
  friend gf operator-(gf a, const gf& b) { return a -= b; }
  friend gf operator*(gf a, const gf& b) { return a *= b; }
  friend gf operator/(gf a, const gf& b) { return a /= b; }
  gf operator-() const {
    gf r(*this);
    if (r.v_ != 0) r.v_ = p_ - r.v_;
    return r;
  }

  friend bool operator==(const gf& a, const gf& b) {
    return a.p_ == b.p_ && a.v_ == b.v_;
  }

  gf inverse() const {
    if (v_ == 0) throw std::domain_error("gf: inverse of zero");
    // extended Euclid on (p, v)
    long long t = 0, nt = 1;
    long long r = static_cast<long long>(p_), nr = static_cast<long long>(v_);
    while (nr != 0) {
      long long q = r / nr;
      t -= q * nt;
      std::swap(t, nt);
      r -= q * nr;
      std::swap(r, nr);
    }
    if (t < 0) t += static_cast<long long>(p_);
    gf out;
    out.v_ = static_cast<std::uint64_t>(t);
    return out;
  }

  std::string str() const {
    return std::to_string(v_) + " mod " + std::to_string(p_);
  }

  // Accepts "k mod p" (p must match the active modulus), plain integers,
  // and "a/b"; integers and fractions reduce into the active field.
  static gf parse(std::string_view s) {
    auto mark = s.find(" mod ");
    if (mark != std::string_view::npos) {
      std::uint64_t p = std::stoull(std::string(s.substr(mark + 5)));
      if (p != modulus())
        throw std::invalid_argument("gf: modulus mismatch in '" + std::string(s) + "'");
      return gf(std::stoll(std::string(s.substr(0, mark))));
    }
    auto slash = s.find('/');
    if (slash != std::string_view::npos)
      return gf(std::stoll(std::string(s.substr(0, slash)))) /
             gf(std::stoll(std::string(s.substr(slash + 1))));
    return gf(std::stoll(std::string(s)));
  }

private:
  void check(const gf& o) const {
    if (p_ != o.p_) throw std::logic_error("gf: mixed moduli");
  }

  static thread_local std::uint64_t active_;

  std::uint64_t p_;
  std::uint64_t v_;
};

inline thread_local std::uint64_t gf::active_ = 0;

// Which exact field a computation runs over: the rationals, or a prime field.
struct field_spec {
  bool rational = true;
  std::uint64_t p = 0;

  static field_spec rationals() { return {}; }
  static field_spec prime(std::uint64_t p) {
    if (!gf::is_prime(p)) throw std::invalid_argument("field: modulus must be prime");
    return {false, p};
  }

  static field_spec parse(std::string_view s) {
    if (s == "q") return rationals();
    if (s.rfind("fp:", 0) == 0) {
      std::uint64_t p = 0;
      try {
        p = std::stoull(std::string(s.substr(3)));
      } catch (const std::exception&) {
        throw std::invalid_argument("field: bad modulus in '" + std::string(s) + "'");
      }
      return prime(p);
    }
    throw std::invalid_argument("field: expected 'q' or 'fp:<prime>', got '" +
                                std::string(s) + "'");
  }

  std::string str() const {
    return rational ? "q" : ("fp:" + std::to_string(p));
  }

  friend bool operator==(const field_spec&, const field_spec&) = default;
};

template <class S>
std::string field_name();
template <>
inline std::string field_name<rat>() { return "q"; }
template <>
inline std::string field_name<gf>() { return "fp:" + std::to_string(gf::modulus()); }

}  // namespace operadix
