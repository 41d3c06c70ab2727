#include "commgraph/characters.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>
#include <random>

#include "commgraph/errors.hpp"

namespace commgraph {

namespace {

using ComplexMatrix = std::vector<std::vector<Complex>>;

Complex root_of_unity(long num, long den) {
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
  return {std::cos(theta), std::sin(theta)};
}

long rounded(double x) { return std::lround(x); }

}  // namespace

ClassData::ClassData(const FiniteGroup& h)
    : classes(conjugacy_classes(h)), class_of(commgraph::class_of(h, classes)), group_order(h.order()) {
  identity_class_ = class_of[h.identity()];
}

int ClassFunction::degree(const ClassData& cd) const {
  return static_cast<int>(rounded(values[cd.identity_class()].real()));
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  ClassFunction out;
  out.values.resize(a.values.size());
  for (std::size_t c = 0; c < a.values.size(); ++c) out.values[c] = a.values[c] * b.values[c];
  return out;
}

Complex inner_product(const ClassData& cd, const ClassFunction& a, const ClassFunction& b) {
  Complex s = 0;
  for (int c = 0; c < cd.count(); ++c) s += static_cast<double>(cd.size(c)) * a[c] * std::conj(b[c]);
  return s / static_cast<double>(cd.group_order);
}

std::vector<int> CharacterTable::dims() const {
  std::vector<int> d;
  for (const auto& chi : irreducibles) d.push_back(chi.degree(classes));
  return d;
}

ClassFunction natural_character(const FiniteGroup& h, const ClassData& cd) {
  const Family& f = h.family();
  auto value_at = [&](Element x) -> double {
    switch (f.kind) {
      case FamilyKind::Cyclic:
        return 2.0 * std::cos(2.0 * std::numbers::pi * x / f.n);
      case FamilyKind::BinaryDihedral: {
        const int m = 2 * f.n;
        if (x >= m) return 0.0;  // a^i b has trace 0
        return 2.0 * std::cos(std::numbers::pi * x / f.n);
      }
      default:
        return 2.0 * h.quaternions().at(x).w.to_double();
    }
  };
  ClassFunction chi;
  for (const auto& cls : cd.classes) {
    const double v = value_at(cls.front());
    for (Element x : cls)
      if (std::abs(value_at(x) - v) > 1e-12)
        throw InvalidArgument("natural_character: trace not constant on a class");
    chi.values.emplace_back(v, 0.0);
  }
  return chi;
}

// ---------------------------------------------------------------------------
// Closed forms

CharacterTable closed_form_character_table(const FiniteGroup& h) {
  const Family& f = h.family();
  CharacterTable t{ClassData(h), {}, 0};
  const ClassData& cd = t.classes;
  auto tabulate = [&](auto&& fn) {
    ClassFunction chi;
    for (const auto& cls : cd.classes) chi.values.push_back(fn(cls.front()));
    t.irreducibles.push_back(std::move(chi));
  };
  if (f.kind == FamilyKind::Cyclic) {
    for (int j = 0; j < f.n; ++j) tabulate([&](Element a) { return root_of_unity(long(j) * a, f.n); });
  } else if (f.kind == FamilyKind::BinaryDihedral) {
    const int n = f.n, m = 2 * n;
    // a -> ea, b -> eb with eb^2 = ea^n.
    const Complex i_unit(0, 1);
    const std::pair<Complex, Complex> linear[4] = {
        {1, 1}, {1, -1}, {-1, n % 2 == 0 ? Complex(1) : i_unit}, {-1, n % 2 == 0 ? Complex(-1) : -i_unit}};
    for (auto [ea, eb] : linear)
      tabulate([&](Element x) {
        const int a = x % m, b = x / m;
        return std::pow(ea, a) * (b ? eb : Complex(1));
      });
    for (int k = 1; k < n; ++k)
      tabulate([&](Element x) {
        if (x >= m) return Complex(0);
        return Complex(2.0 * std::cos(std::numbers::pi * k * x / n), 0);
      });
  } else {
    throw InvalidArgument("closed_form_character_table: no closed form for " + f.name());
  }
  return t;
}

// ---------------------------------------------------------------------------
// Burnside

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs) {
  const int deg = static_cast<int>(coeffs.size()) - 1;
  if (deg < 1) return {};
  std::vector<Complex> monic(coeffs.size());
  for (int k = 0; k <= deg; ++k) monic[k] = coeffs[k] / coeffs[deg];
  double bound = 0;
  for (int k = 0; k < deg; ++k) bound = std::max(bound, std::abs(monic[k]));
  bound += 1.0;
  auto eval = [&](Complex z) {
    Complex v = monic[deg];
    for (int k = deg - 1; k >= 0; --k) v = v * z + monic[k];
    return v;
  };
  std::vector<Complex> z(deg);
  const Complex seed(0.4, 0.9);
  for (int k = 0; k < deg; ++k) z[k] = bound * std::pow(seed, k) / std::abs(std::pow(seed, k));
  for (int iter = 0; iter < 5000; ++iter) {
    double change = 0;
    for (int k = 0; k < deg; ++k) {
      Complex denom = 1;
      for (int j = 0; j < deg; ++j)
        if (j != k) denom *= z[k] - z[j];
      if (std::abs(denom) == 0) denom = 1e-300;
      const Complex step = eval(z[k]) / denom;
      z[k] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change <= 1e-15 * bound) break;
  }
  // Newton polish.
  for (auto& r : z) {
    for (int it = 0; it < 3; ++it) {
      Complex p = monic[deg], dp = 0;
      for (int k = deg - 1; k >= 0; --k) {
        dp = dp * r + p;
        p = p * r + monic[k];
      }
      if (std::abs(dp) > 0) r -= p / dp;
    }
  }
  return z;
}

namespace {

// Characteristic polynomial det(xI - M) via Faddeev-LeVerrier; coefficient k of x^k.
std::vector<Complex> characteristic_polynomial(const ComplexMatrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<Complex> c(n + 1);
  c[n] = 1;
  ComplexMatrix mk(n, std::vector<Complex>(n, 0));  // M_0 = 0
  for (int k = 1; k <= n; ++k) {
    // M_k = M (M_{k-1} + c_{n-k+1} I)
    ComplexMatrix prev = mk;
    for (int i = 0; i < n; ++i) prev[i][i] += c[n - k + 1];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Complex s = 0;
        for (int l = 0; l < n; ++l) s += m[i][l] * prev[l][j];
        mk[i][j] = s;
      }
    Complex trace = 0;
    for (int i = 0; i < n; ++i) trace += mk[i][i];
    c[n - k] = -trace / static_cast<double>(k);
  }
  return c;
}

// Kernel vector of (M - lambda I) by Gaussian elimination with full pivoting;
// the last pivot is treated as zero.
std::vector<Complex> null_vector(const ComplexMatrix& m, Complex lambda) {
  const int n = static_cast<int>(m.size());
  ComplexMatrix a = m;
  for (int i = 0; i < n; ++i) a[i][i] -= lambda;
  std::vector<int> col(n);
  for (int i = 0; i < n; ++i) col[i] = i;
  for (int k = 0; k < n - 1; ++k) {
    int pr = k, pc = k;
    for (int i = k; i < n; ++i)
      for (int j = k; j < n; ++j)
        if (std::abs(a[i][col[j]]) > std::abs(a[pr][col[pc]])) {
          pr = i;
          pc = j;
        }
    std::swap(a[k], a[pr]);
    std::swap(col[k], col[pc]);
    const Complex piv = a[k][col[k]];
    if (std::abs(piv) == 0) throw DegenerateSpectrum("burnside: eigenspace has dimension > 1");
    for (int i = k + 1; i < n; ++i) {
      const Complex f = a[i][col[k]] / piv;
      for (int j = k; j < n; ++j) a[i][col[j]] -= f * a[k][col[j]];
    }
  }
  std::vector<Complex> x(n, 0);
  x[col[n - 1]] = 1;
  for (int k = n - 2; k >= 0; --k) {
    Complex s = 0;
    for (int j = k + 1; j < n; ++j) s += a[k][col[j]] * x[col[j]];
    x[col[k]] = -s / a[k][col[k]];
  }
  return x;
}

// One step of inverse iteration: solve (M - lambda I) y = x with partial pivoting.
std::vector<Complex> inverse_iteration_step(const ComplexMatrix& m, Complex lambda,
                                            const std::vector<Complex>& x) {
  const int n = static_cast<int>(m.size());
  ComplexMatrix a = m;
  for (int i = 0; i < n; ++i) a[i][i] -= lambda;
  std::vector<Complex> b = x;
  for (int k = 0; k < n; ++k) {
    int p = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(a[i][k]) > std::abs(a[p][k])) p = i;
    std::swap(a[k], a[p]);
    std::swap(b[k], b[p]);
    if (std::abs(a[k][k]) < 1e-300) a[k][k] = 1e-300;
    for (int i = k + 1; i < n; ++i) {
      const Complex f = a[i][k] / a[k][k];
      for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  std::vector<Complex> y(n);
  for (int k = n - 1; k >= 0; --k) {
    Complex s = b[k];
    for (int j = k + 1; j < n; ++j) s -= a[k][j] * y[j];
    y[k] = s / a[k][k];
  }
  double norm = 0;
  for (const auto& v : y) norm = std::max(norm, std::abs(v));
  for (auto& v : y) v /= norm;
  return y;
}

// Sort key: values rounded so that floating noise does not reorder characters.
bool character_less(const ClassFunction& a, const ClassFunction& b, int id_class) {
  auto key = [](double v) { return std::llround(v * 1e6); };
  const long da = key(a[id_class].real()), db = key(b[id_class].real());
  if (da != db) return da < db;
  for (std::size_t c = 0; c < a.values.size(); ++c) {
    if (key(a[c].real()) != key(b[c].real())) return key(a[c].real()) < key(b[c].real());
    if (key(a[c].imag()) != key(b[c].imag())) return key(a[c].imag()) < key(b[c].imag());
  }
  return false;
}

}  // namespace

CharacterTable burnside_character_table(const FiniteGroup& h, std::uint64_t seed, int max_retries) {
  CharacterTable t{ClassData(h), {}, seed};
  const ClassData& cd = t.classes;
  const int k = cd.count();

  // coef[i][j][l] = #{x in C_i : x^{-1} g_l in C_j}, g_l the first element of C_l.
  std::vector<std::vector<std::vector<int>>> coef(
      k, std::vector<std::vector<int>>(k, std::vector<int>(k, 0)));
  for (int l = 0; l < k; ++l) {
    const Element g = cd.classes[l].front();
    for (int i = 0; i < k; ++i)
      for (Element x : cd.classes[i]) ++coef[i][cd.class_of[h.mul(h.inv(x), g)]][l];
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(1, 9);
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    std::vector<int> weights(k);
    for (auto& w : weights) w = pick(rng);
    // Combination matrix: (sum_i w_i M_i)[j][l] with (M_i)[j][l] = coef[i][j][l].
    ComplexMatrix m(k, std::vector<Complex>(k, 0));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        for (int l = 0; l < k; ++l) m[j][l] += static_cast<double>(weights[i] * coef[i][j][l]);

    const std::vector<Complex> roots = polynomial_roots(characteristic_polynomial(m));
    double scale = 1;
    for (const auto& r : roots) scale = std::max(scale, std::abs(r));
    double gap = std::numeric_limits<double>::infinity();
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) gap = std::min(gap, std::abs(roots[a] - roots[b]));
    if (k > 1 && gap < 1e-6 * scale) continue;  // DegenerateSpectrum, retry

    std::vector<ClassFunction> irr;
    bool failed = false;
    for (const Complex& lambda : roots) {
      std::vector<Complex> w;
      try {
        w = null_vector(m, lambda);
      } catch (const DegenerateSpectrum&) {
        failed = true;
        break;
      }
      for (int it = 0; it < 2; ++it) w = inverse_iteration_step(m, lambda, w);
      const Complex w_id = w[cd.identity_class()];
      if (std::abs(w_id) < 1e-12) {
        failed = true;
        break;
      }
      for (auto& v : w) v /= w_id;  // omega values, omega(identity) = 1
      double denom = 0;
      for (int l = 0; l < k; ++l) denom += std::norm(w[l]) / cd.size(l);
      const double d_sq = cd.group_order / denom;
      const double d = std::round(std::sqrt(d_sq));
      if (std::abs(std::sqrt(d_sq) - d) > kIntegralityTolerance) {
        failed = true;
        break;
      }
      ClassFunction chi;
      for (int l = 0; l < k; ++l) chi.values.push_back(d * w[l] / static_cast<double>(cd.size(l)));
      irr.push_back(std::move(chi));
    }
    if (failed) continue;

    const int id = cd.identity_class();
    auto is_trivial = [&](const ClassFunction& chi) {
      for (const auto& v : chi.values)
        if (std::abs(v - Complex(1)) > 1e-6) return false;
      return true;
    };
    auto triv = std::find_if(irr.begin(), irr.end(), is_trivial);
    if (triv == irr.end()) continue;
    std::iter_swap(irr.begin(), triv);
    std::sort(irr.begin() + 1, irr.end(),
              [&](const ClassFunction& a, const ClassFunction& b) { return character_less(a, b, id); });
    t.irreducibles = std::move(irr);
    t.seed_used = seed;
    const TableCheck chk = check_character_table(t);
    if (!chk.ok(h.order()))
      throw OrthogonalityFailure("burnside: table for " + h.family().name() +
                                 " fails orthogonality (row error " + std::to_string(chk.max_row_error) +
                                 ", column error " + std::to_string(chk.max_column_error) + ")");
    return t;
  }
  throw DegenerateSpectrum("burnside: no separating combination for " + h.family().name() + " after " +
                           std::to_string(max_retries + 1) + " attempts");
}

CharacterTable character_table(const FiniteGroup& h, std::uint64_t seed) {
  if (h.family().is_polyhedral()) return burnside_character_table(h, seed);
  CharacterTable t = closed_form_character_table(h);
  const TableCheck chk = check_character_table(t);
  if (!chk.ok(h.order()))
    throw OrthogonalityFailure("closed-form table for " + h.family().name() + " fails orthogonality");
  return t;
}

TableCheck check_character_table(const CharacterTable& t) {
  TableCheck chk;
  const ClassData& cd = t.classes;
  const int k = t.count();
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const Complex ip = inner_product(cd, t.irreducibles[i], t.irreducibles[j]);
      chk.max_row_error = std::max(chk.max_row_error, std::abs(ip - Complex(i == j ? 1.0 : 0.0)));
    }
  // Column orthogonality: sum_chi chi(a) conj(chi(b)) = delta_ab |H| / |C_a|.
  for (int a = 0; a < cd.count(); ++a)
    for (int b = 0; b < cd.count(); ++b) {
      Complex s = 0;
      for (const auto& chi : t.irreducibles) s += chi[a] * std::conj(chi[b]);
      const double expect = a == b ? static_cast<double>(cd.group_order) / cd.size(a) : 0.0;
      chk.max_column_error = std::max(chk.max_column_error, std::abs(s - expect) / cd.group_order);
    }
  if (k != cd.count()) chk.max_column_error = std::numeric_limits<double>::infinity();
  for (int d : t.dims()) chk.sum_of_squares += static_cast<long>(d) * d;
  return chk;
}

// ---------------------------------------------------------------------------
// McKay graph

McKayData mckay_graph(const CharacterTable& table, const ClassFunction& natural) {
  for (const auto& v : natural.values)
    if (std::abs(v.imag()) > 1e-12) throw InvalidArgument("mckay_graph: natural character is not real");
  McKayData out;
  const int k = table.count();
  out.dims = table.dims();
  out.alpha.assign(k, std::vector<int>(k, 0));
  for (int i = 0; i < k; ++i) {
    const ClassFunction prod = natural * table.irreducibles[i];
    for (int j = 0; j < k; ++j) {
      const Complex ip = inner_product(table.classes, prod, table.irreducibles[j]);
      const long r = rounded(ip.real());
      const double err = std::abs(ip - Complex(static_cast<double>(r), 0));
      out.max_integrality_error = std::max(out.max_integrality_error, err);
      if (err > kIntegralityTolerance || r < 0)
        throw NonIntegerMultiplicity("mckay_graph: <V rho_" + std::to_string(i) + ", rho_" +
                                     std::to_string(j) + "> = " + std::to_string(ip.real()) +
                                     " is not a nonnegative integer");
      out.alpha[i][j] = static_cast<int>(r);
    }
  }
  for (int i = 0; i < k; ++i) {
    long s = 0;
    for (int j = 0; j < k; ++j) s += static_cast<long>(out.alpha[i][j]) * out.dims[j];
    if (s != 2L * out.dims[i])
      throw InvalidArgument("mckay_graph: dimension balance fails at rho_" + std::to_string(i));
  }
  return out;
}

McKayData mckay_graph(const FiniteGroup& h, std::uint64_t seed) {
  const CharacterTable t = character_table(h, seed);
  return mckay_graph(t, natural_character(h, t.classes));
}

std::vector<int> mckay_bfs_order(const McKayData& m) {
  std::vector<int> order;
  std::vector<char> seen(m.size(), 0);
  for (int start : {m.trivial_index}) {
    std::deque<int> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (int w = 0; w < m.size(); ++w)
        if (m.alpha[v][w] > 0 && !seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
    }
  }
  for (int v = 0; v < m.size(); ++v)
    if (!seen[v]) order.push_back(v);
  return order;
}

SimpleGraph dynkin_from_mckay(const McKayData& m) {
  const int k = m.size();
  std::vector<std::string> labels;
  for (int i = 1; i < k; ++i) labels.push_back("rho" + std::to_string(i));
  SimpleGraph g(std::max(0, k - 1), std::move(labels));
  for (int i = 1; i < k; ++i) {
    if (m.alpha[i][i] != 0)
      throw InvalidArgument("dynkin_from_mckay: loop at rho_" + std::to_string(i));
    for (int j = i + 1; j < k; ++j) {
      if (m.alpha[i][j] != m.alpha[j][i])
        throw InvalidArgument("dynkin_from_mckay: multiplicity matrix is not symmetric");
      if (m.alpha[i][j] > 1)
        throw InvalidArgument("dynkin_from_mckay: multiplicity " + std::to_string(m.alpha[i][j]) +
                              " between rho_" + std::to_string(i) + " and rho_" + std::to_string(j));
      if (m.alpha[i][j] == 1) g.add_edge(i - 1, j - 1);
    }
  }
  return g;
}

AdeType ade_type_for(const Family& family) {
  switch (family.kind) {
    case FamilyKind::Cyclic:
      if (family.n < 2) throw InvalidArgument("ade_type_for: C_1 has no Dynkin diagram");
      return AdeType::a(family.n - 1);
    case FamilyKind::BinaryDihedral: return AdeType::d(family.n + 2);
    case FamilyKind::BinaryTetrahedral: return AdeType::e6();
    case FamilyKind::BinaryOctahedral: return AdeType::e7();
    case FamilyKind::BinaryIcosahedral: return AdeType::e8();
  }
  throw InvalidArgument("ade_type_for: unknown family");
}

bool TensorRuleReport::pass() const {
  if (nodes.empty()) return false;
  for (const auto& n : nodes)
    if (!n.pass) return false;
  return true;
}

std::vector<int> match_irreducibles_to_coxeter(const McKayData& mckay, const CoxeterMatrix& m) {
  const auto iso = find_isomorphism(dynkin_from_mckay(mckay), commuting_graph_of_generators(m));
  return iso ? *iso : std::vector<int>{};
}

TensorRuleReport verify_tensor_rule(const McKayData& mckay, const CoxeterMatrix& m,
                                    const std::vector<int>& matching) {
  TensorRuleReport rep;
  rep.matching = matching;
  const int k = mckay.size();
  if (static_cast<int>(matching.size()) != k - 1 || m.rank() != k - 1) return rep;
  std::vector<int> irr_of_row(k - 1, -1);
  for (int v = 0; v < k - 1; ++v) irr_of_row.at(matching[v]) = v + 1;
  for (int i = 1; i < k; ++i) {
    TensorRuleNode node;
    node.irreducible = i;
    node.coxeter_row = matching[i - 1];
    for (int col = 0; col < m.rank(); ++col)
      if (col != node.coxeter_row && m.at(node.coxeter_row, col) == CoxeterLabel(2))
        node.expected.push_back(irr_of_row[col]);
    for (int j = 1; j < k; ++j)
      if (j != i && mckay.alpha[i][j] == 1) node.observed.push_back(j);
    std::sort(node.expected.begin(), node.expected.end());
    node.trivial_multiplicity = mckay.alpha[i][0];
    // Every j >= 1 term of V (x) rho_i must have multiplicity exactly one.
    bool clean = mckay.alpha[i][i] == 0;
    for (int j = 1; j < k; ++j)
      if (mckay.alpha[i][j] > 1) clean = false;
    node.pass = clean && node.expected == node.observed;
    rep.nodes.push_back(std::move(node));
  }
  return rep;
}

TensorRuleReport verify_tensor_rule(const McKayData& mckay, const CoxeterMatrix& m) {
  return verify_tensor_rule(mckay, m, match_irreducibles_to_coxeter(mckay, m));
}

IntMatrix cartan_matrix(const IntMatrix& adjacency) {
  const std::size_t n = adjacency.size();
  IntMatrix c(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (adjacency[i].size() != n) throw InvalidArgument("cartan_matrix: adjacency is not square");
    for (std::size_t j = 0; j < n; ++j) {
      const auto a = adjacency[i][j];
      if ((a != 0 && a != 1) || a != adjacency[j][i] || (i == j && a != 0))
        throw InvalidArgument("cartan_matrix: need symmetric 0/1 adjacency with zero diagonal");
      c[i][j] = (i == j ? 2 : 0) - a;
    }
  }
  return c;
}

IntMatrix cartan_matrix(const SimpleGraph& dynkin) {
  IntMatrix a(dynkin.size(), std::vector<std::int64_t>(dynkin.size(), 0));
  for (auto [u, v] : dynkin.edges()) a[u][v] = a[v][u] = 1;
  return cartan_matrix(a);
}

IntMatrix intersection_matrix(const IntMatrix& cartan) {
  IntMatrix out = cartan;
  for (auto& row : out)
    for (auto& v : row) v = -v;
  return out;
}

std::int64_t determinant(const IntMatrix& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
  int sign = 1;
  __int128 prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return static_cast<std::int64_t>(sign * a[n - 1][n - 1]);
}

}  // namespace commgraph
