#include "mixbraid/ring.hpp"

#include <stdexcept>

namespace mixbraid {

RingElement RingElement::zero(int g) {
  RingElement r;
  r.g = g;
  return r;
}

RingElement RingElement::one(int g) {
  return monomial(g, std::vector<int>(static_cast<size_t>(g), 0));
}

RingElement RingElement::monomial(int g, const std::vector<int>& t_exps, int x_exp, int lam_exp,
                                  long long coeff) {
  if (static_cast<int>(t_exps.size()) != g)
    throw std::invalid_argument("t exponent vector has wrong length");
  RingElement r;
  r.g = g;
  if (coeff == 0) return r;
  std::vector<int> key = t_exps;
  key.push_back(x_exp);
  key.push_back(lam_exp);
  r.terms[key] = coeff;
  return r;
}

bool RingElement::is_unit_monomial() const {
  return terms.size() == 1 &&
         (terms.begin()->second == 1 || terms.begin()->second == -1);
}

RingElement RingElement::operator+(const RingElement& o) const {
  if (g != o.g) throw std::invalid_argument("ring element variable mismatch");
  RingElement r = *this;
  for (const auto& [key, coeff] : o.terms) {
    long long c = (r.terms.count(key) ? r.terms[key] : 0) + coeff;
    if (c == 0)
      r.terms.erase(key);
    else
      r.terms[key] = c;
  }
  return r;
}

RingElement RingElement::operator-(const RingElement& o) const {
  if (g != o.g) throw std::invalid_argument("ring element variable mismatch");
  RingElement r = *this;
  for (const auto& [key, coeff] : o.terms) {
    long long c = (r.terms.count(key) ? r.terms[key] : 0) - coeff;
    if (c == 0)
      r.terms.erase(key);
    else
      r.terms[key] = c;
  }
  return r;
}

RingElement RingElement::operator*(const RingElement& o) const {
  if (g != o.g) throw std::invalid_argument("ring element variable mismatch");
  RingElement r = zero(g);
  for (const auto& [ka, ca] : terms) {
    for (const auto& [kb, cb] : o.terms) {
      std::vector<int> key(ka.size());
      for (size_t i = 0; i < ka.size(); ++i) key[i] = ka[i] + kb[i];
      long long c = (r.terms.count(key) ? r.terms[key] : 0) + ca * cb;
      if (c == 0)
        r.terms.erase(key);
      else
        r.terms[key] = c;
    }
  }
  return r;
}

RingElement RingElement::unit_inverse() const {
  if (!is_unit_monomial())
    throw std::invalid_argument("only single monomials with coefficient +-1 are invertible");
  RingElement r;
  r.g = g;
  std::vector<int> key = terms.begin()->first;
  for (int& e : key) e = -e;
  r.terms[key] = terms.begin()->second;
  return r;
}

RingElement RingElement::unit_pow(long long e) const {
  if (!is_unit_monomial())
    throw std::invalid_argument("only single monomials with coefficient +-1 have powers");
  RingElement r;
  r.g = g;
  std::vector<int> key = terms.begin()->first;
  for (int& v : key) v = static_cast<int>(v * e);
  long long coeff = terms.begin()->second;
  r.terms[key] = (coeff == -1 && (e % 2 != 0)) ? -1 : 1;
  return r;
}

std::string RingElement::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  // map iterates ascending; print largest exponent vector first.
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    long long coeff = it->second;
    if (first) {
      if (coeff < 0) out += "-";
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    long long mag = coeff < 0 ? -coeff : coeff;
    std::string vars;
    const std::vector<int>& key = it->first;
    for (size_t i = 0; i < key.size(); ++i) {
      if (key[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      if (i < static_cast<size_t>(g))
        vars += "t" + std::to_string(i + 1);
      else if (i == static_cast<size_t>(g))
        vars += "x";
      else
        vars += "lam";
      if (key[i] != 1) vars += "^" + std::to_string(key[i]);
    }
    if (vars.empty()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += vars;
    }
    first = false;
  }
  return out;
}

}  // namespace mixbraid
