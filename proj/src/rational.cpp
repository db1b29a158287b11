#include "hecke/rational.hpp"

#include <sstream>

namespace hecke {

Rat rat_from_string(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational");
  // mpq_class accepts "p/q" directly but tolerates whitespace and bases we
  // do not want; validate the shape first.
  std::size_t slash = text.find('/');
  auto check_int = [&](const std::string& part, bool sign_ok) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (sign_ok && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!check_int(text, true)) throw ParseError("bad rational: " + text);
    return Rat(text);
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (!check_int(num, true) || !check_int(den, false))
    throw ParseError("bad rational: " + text);
  Rat r(text);
  if (r.get_den() == 0) throw ParseError("zero denominator: " + text);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

RatVec vec_from_string(const std::string& text) {
  RatVec out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) out.push_back(rat_from_string(item));
  if (out.empty()) throw ParseError("empty vector");
  return out;
}

std::string vec_to_string(const RatVec& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += rat_to_string(values[i]);
  }
  return out;
}

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec add(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: size mismatch");
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: size mismatch");
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVec scale(const Rat& c, const RatVec& a) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

bool is_zero(const RatVec& a) {
  for (const Rat& x : a)
    if (x != 0) return false;
  return true;
}

Int common_denominator(const RatVec& a) {
  Int l = 1;
  for (const Rat& x : a) {
    Int d = x.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    l = l / g * d;
  }
  return l;
}

}  // namespace hecke
