#include "repvar2/zeta.hpp"

#include <algorithm>

namespace repvar2 {

const char* zeta_space_name(ZetaSpace s) {
  switch (s) {
    case ZetaSpace::RepAir: return "rep_air";
    case ZetaSpace::ChAir: return "ch_air";
    case ZetaSpace::ChTotal: return "ch_total";
  }
  return "?";
}

ZetaSpace zeta_space_from_name(const std::string& s) {
  for (ZetaSpace z : {ZetaSpace::RepAir, ZetaSpace::ChAir, ZetaSpace::ChTotal})
    if (s == zeta_space_name(z)) return z;
  throw std::invalid_argument("unknown zeta space: " + s);
}

ZetaFactorization ZetaFactorization::normalized() const {
  ZetaFactorization out;
  out.num = num;
  out.den = den;
  for (auto it = out.num.begin(); it != out.num.end();) {
    auto hit = std::find(out.den.begin(), out.den.end(), *it);
    if (hit != out.den.end()) {
      out.den.erase(hit);
      it = out.num.erase(it);
    } else {
      ++it;
    }
  }
  return out;
}

std::string ZetaFactorization::str() const {
  auto side = [](const std::vector<int>& exps) {
    if (exps.empty()) return std::string("1");
    std::string s;
    for (int a : exps) s += "(1-q^" + std::to_string(a) + "t)";
    return s;
  };
  return side(num) + " / " + side(den);
}

ZetaFactorization zeta_factorization(ZetaSpace space, int m) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  ZetaFactorization zf;
  switch (space) {
    case ZetaSpace::RepAir:
      zf.num = {3 * m, 3 * m + 1};
      zf.den = {2 * m + 1, 4 * m};
      break;
    case ZetaSpace::ChAir:
    case ZetaSpace::ChTotal:
      for (int i = 1; i <= m / 2; ++i) {
        zf.num.push_back(2 * m + 2 * i - 2);
        zf.den.push_back(4 * m - 2 * i - 1);
      }
      if (space == ZetaSpace::ChTotal) zf.den.push_back(2 * m);
      break;
  }
  std::sort(zf.num.begin(), zf.num.end());
  std::sort(zf.den.begin(), zf.den.end());
  return zf;
}

namespace {

LaurentPoly count_for(ZetaSpace space, int m) {
  switch (space) {
    case ZetaSpace::RepAir: return count_formula(Space::Rep, StratumKey::Air, m);
    case ZetaSpace::ChAir: return count_formula(Space::Ch, StratumKey::Air, m);
    case ZetaSpace::ChTotal: return count_formula(Space::Ch, StratumKey::Total, m);
  }
  throw std::logic_error("bad zeta space");
}

LaurentPoly exponent_sum(const ZetaFactorization& zf) {
  LaurentPoly s("q");
  for (int a : zf.den) s = s + LaurentPoly::monomial(a, "q");
  for (int a : zf.num) s = s - LaurentPoly::monomial(a, "q");
  return s;
}

}  // namespace

CheckResult zeta_count_check(ZetaSpace space, int m) {
  ZetaFactorization zf = zeta_factorization(space, m);
  LaurentPoly count = count_for(space, m);
  LaurentPoly sum = exponent_sum(zf);
  // Taking the logarithmic derivative of Z term by term shows the
  // coefficient of t^n is the same exponent sum with q -> q^n, so the
  // n = 1 identity settles every n symbolically.
  if (sum != count)
    return {false, std::string(zeta_space_name(space)) + ": exponent sum " + sum.str() +
                       " != count " + count.str()};
  for (BigInt q : {BigInt(2), BigInt(3)}) {
    for (int n = 1; n <= 5; ++n) {
      BigInt qn = 1;
      for (int i = 0; i < n; ++i) qn *= q;
      if (sum.substitute_power(n).evaluate(q) != count.evaluate(qn))
        return {false, std::string(zeta_space_name(space)) + ": numeric mismatch at q=" +
                           q.str() + ", n=" + std::to_string(n)};
    }
  }
  return {true, ""};
}

PairingResult exponent_pairing(const ZetaFactorization& zf, int shift, bool exchange) {
  PairingResult out;
  out.shift = shift;
  out.exchange = exchange;
  auto image = [&](const std::vector<int>& side) {
    std::vector<int> img;
    img.reserve(side.size());
    for (int a : side) img.push_back(shift - a);
    std::sort(img.begin(), img.end());
    return img;
  };
  std::vector<int> num_img = image(zf.num);
  std::vector<int> den_img = image(zf.den);
  bool ok = exchange ? (num_img == zf.den && den_img == zf.num)
                     : (num_img == zf.num && den_img == zf.den);
  out.pass = ok;
  for (int a : zf.num) out.pairing.emplace_back(a, shift - a);
  for (int a : zf.den) out.pairing.emplace_back(a, shift - a);
  if (!ok)
    out.detail = std::string("a -> ") + std::to_string(shift) + "-a does not " +
                 (exchange ? "exchange" : "fix") + " the exponent multisets";
  return out;
}

PairingResult functional_equation_check(ZetaSpace space, int m) {
  ZetaFactorization zf = zeta_factorization(space, m);
  switch (space) {
    case ZetaSpace::RepAir: return exponent_pairing(zf, 6 * m + 1, false);
    case ZetaSpace::ChAir: return exponent_pairing(zf, 6 * m - 3, true);
    case ZetaSpace::ChTotal: break;
  }
  throw std::invalid_argument("no functional equation for ch_total");
}

}  // namespace repvar2
