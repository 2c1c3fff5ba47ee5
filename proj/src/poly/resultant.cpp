#include "flopkit/poly/resultant.hpp"

#include <algorithm>
#include <map>

#include "flopkit/poly/linalg.hpp"

namespace flopkit {

MPoly resultant(const MPoly& f, const MPoly& g, int var) {
  if (f.nvars() != g.nvars()) throw PreconditionError("resultant: arity mismatch");
  const int m = f.degree_in(var), n = g.degree_in(var);
  if (f.is_zero() || g.is_zero()) return MPoly(f.nvars());
  if (m <= 0 && n <= 0) throw PreconditionError("resultant: both polynomials are constant in the variable");
  if (m == 0) return f.pow(n);
  if (n == 0) return g.pow(m);
  auto a = f.coefficients_in(var);
  auto b = g.coefficients_in(var);
  const int size = m + n;
  std::vector<std::vector<MPoly>> syl(size, std::vector<MPoly>(size, MPoly(f.nvars())));
  // Row r < n holds x^(n-1-r) * f, row n + r holds x^(m-1-r) * g, columns by descending power.
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) syl[r][r + (m - k)] = a[k];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) syl[n + r][r + (n - k)] = b[k];
  return poly_det(syl);
}

UPoly to_upoly(const MPoly& f, int keep) {
  std::vector<Rational> c(std::max(0, f.degree_in(keep) + 1));
  for (const auto& [mono, a] : f.terms()) {
    for (int i = 0; i < f.nvars(); ++i)
      if (i != keep && mono[i] != 0) throw PreconditionError("to_upoly: extra variable present");
    c[mono[keep]] = a;
  }
  return UPoly(std::move(c));
}

UPoly resultant_bivariate(const MPoly& f, const MPoly& g, int var) {
  if (f.nvars() != 2) throw PreconditionError("resultant_bivariate: expects two variables");
  return to_upoly(resultant(f, g, var), 1 - var);
}

namespace {

void enumerate_monomials(int nvars, int degree, Monomial& cur, int pos, std::vector<Monomial>& out) {
  if (pos == nvars - 1) {
    cur[pos] = degree;
    out.push_back(cur);
    return;
  }
  for (int e = degree; e >= 0; --e) {
    cur[pos] = e;
    enumerate_monomials(nvars, degree - e, cur, pos + 1, out);
  }
}

bool next_permutation_order(std::vector<int>& order) {
  return std::next_permutation(order.begin(), order.end());
}

/// Coefficients of det(a + t I) in t, by exact evaluation at t = 0..n and interpolation.
UPoly shifted_determinant(const std::vector<std::vector<Integer>>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<Rational> xs, ys;
  for (int t = 0; t <= n; ++t) {
    auto m = a;
    for (int i = 0; i < n; ++i) m[i][i] += t;
    xs.emplace_back(t);
    ys.emplace_back(bareiss_determinant(std::move(m)));
  }
  // Newton divided differences, then expansion into the monomial basis.
  std::vector<Rational> dd = ys;
  for (int k = 1; k <= n; ++k)
    for (int i = n; i >= k; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - k]);
  UPoly p = UPoly::constant(dd[n]);
  for (int k = n - 1; k >= 0; --k) p = p * UPoly({-xs[k], Rational(1)}) + UPoly::constant(dd[k]);
  return p;
}

int lowest_order(const UPoly& p) {
  for (int k = 0; k <= p.degree(); ++k)
    if (sgn(p.coefficient(k)) != 0) return k;
  return -1;
}

}  // namespace

MacaulayResult macaulay_resultant(const std::vector<MPoly>& forms) {
  const int n = static_cast<int>(forms.size());
  if (n == 0) throw PreconditionError("macaulay_resultant: no forms");
  std::vector<int> deg(n);
  std::vector<MPoly> scaled;
  Rational correction = 1;
  int critical = 1;
  long degree_product = 1;
  for (int i = 0; i < n; ++i) {
    if (forms[i].nvars() != n) throw PreconditionError("macaulay_resultant: need n forms in n variables");
    if (forms[i].is_zero()) return {Rational(0), true, 0};
    if (!forms[i].is_homogeneous()) throw PreconditionError("macaulay_resultant: form is not homogeneous");
    deg[i] = forms[i].degree();
    if (deg[i] < 1) throw PreconditionError("macaulay_resultant: forms must have positive degree");
    critical += deg[i] - 1;
    degree_product *= deg[i];
  }
  // Clear denominators: Res(c f_0, ...) = c^(prod_{j != i} d_j) Res(f_0, ...).
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> cs;
    for (const auto& [m, c] : forms[i].terms()) cs.push_back(c);
    std::vector<Integer> prim = primitive_integer_vector(cs);
    Rational factor = Rational(prim.front()) / cs.front();
    scaled.push_back(forms[i] * factor);
    Rational p = 1;
    for (long e = 0; e < degree_product / deg[i]; ++e) p *= factor;
    correction *= p;
  }

  std::vector<Monomial> monos;
  Monomial cur(n);
  enumerate_monomials(n, critical, cur, 0, monos);
  std::map<Monomial, int, GrlexLess> index;
  for (std::size_t k = 0; k < monos.size(); ++k) index[monos[k]] = static_cast<int>(k);

  std::vector<int> extraneous;  // monomials divisible by at least two x_i^d_i
  for (std::size_t k = 0; k < monos.size(); ++k) {
    int hits = 0;
    for (int i = 0; i < n; ++i) hits += monos[k][i] >= deg[i];
    if (hits >= 2) extraneous.push_back(static_cast<int>(k));
  }

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  MacaulayResult result;
  result.conclusive = false;
  do {
    ++result.attempts;
    const std::size_t size = monos.size();
    std::vector<std::vector<Integer>> mat(size, std::vector<Integer>(size));
    for (std::size_t k = 0; k < size; ++k) {
      int chosen = -1;
      for (int i : order)
        if (monos[k][i] >= deg[i]) {
          chosen = i;
          break;
        }
      Monomial shift = monos[k];
      shift[chosen] -= deg[chosen];
      for (const auto& [m, c] : scaled[chosen].terms()) {
        Monomial target = m;
        for (int v = 0; v < n; ++v) target[v] += shift[v];
        mat[k][index.at(target)] = c.get_num();
      }
    }
    std::vector<std::vector<Integer>> minor(extraneous.size(), std::vector<Integer>(extraneous.size()));
    for (std::size_t r = 0; r < extraneous.size(); ++r)
      for (std::size_t c = 0; c < extraneous.size(); ++c) minor[r][c] = mat[extraneous[r]][extraneous[c]];
    Integer den = bareiss_determinant(std::move(minor));
    if (den == 0) continue;
    Integer num = bareiss_determinant(std::move(mat));
    result.value = Rational(num) / Rational(den) / correction;
    result.conclusive = true;
    return result;
  } while (next_permutation_order(order));

  // Every extraneous minor vanished: perturb f_i by t x_i^d_i and take the value at t = 0 of
  // det(M + tI) / det(M' + tI), both of which are nonzero polynomials.
  ++result.attempts;
  const std::size_t size = monos.size();
  std::vector<std::vector<Integer>> mat(size, std::vector<Integer>(size));
  for (std::size_t k = 0; k < size; ++k) {
    int chosen = 0;
    while (monos[k][chosen] < deg[chosen]) ++chosen;
    Monomial shift = monos[k];
    shift[chosen] -= deg[chosen];
    for (const auto& [m, c] : scaled[chosen].terms()) {
      Monomial target = m;
      for (int v = 0; v < n; ++v) target[v] += shift[v];
      mat[k][index.at(target)] = c.get_num();
    }
  }
  std::vector<std::vector<Integer>> minor(extraneous.size(), std::vector<Integer>(extraneous.size()));
  for (std::size_t r = 0; r < extraneous.size(); ++r)
    for (std::size_t c = 0; c < extraneous.size(); ++c) minor[r][c] = mat[extraneous[r]][extraneous[c]];
  UPoly num = shifted_determinant(mat), den = shifted_determinant(minor);
  const int on = lowest_order(num), od = lowest_order(den);
  result.conclusive = true;
  if (on > od) result.value = 0;
  else if (on == od) result.value = num.coefficient(on) / den.coefficient(od) / correction;
  else result.conclusive = false;
  return result;
}

}  // namespace flopkit
