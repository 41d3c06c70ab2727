#include "commgraph/algebra.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "commgraph/errors.hpp"

namespace commgraph {

std::string Family::name() const {
  switch (kind) {
    case FamilyKind::Cyclic: return "C" + std::to_string(n);
    case FamilyKind::BinaryDihedral: return "BD" + std::to_string(4 * n);
    case FamilyKind::BinaryTetrahedral: return "BT24";
    case FamilyKind::BinaryOctahedral: return "BO48";
    case FamilyKind::BinaryIcosahedral: return "BI120";
  }
  return "?";
}

std::string Family::token() const {
  switch (kind) {
    case FamilyKind::Cyclic: return "cyclic " + std::to_string(n);
    case FamilyKind::BinaryDihedral: return "bd " + std::to_string(n);
    case FamilyKind::BinaryTetrahedral: return "bt";
    case FamilyKind::BinaryOctahedral: return "bo";
    case FamilyKind::BinaryIcosahedral: return "bi";
  }
  return "?";
}

Family parse_family(const std::string& kind, std::optional<int> parameter) {
  auto needs = [&](const char* what) {
    if (!parameter) throw InvalidArgument(std::string("family '") + what + "' needs a parameter");
    return *parameter;
  };
  auto forbids = [&](const char* what) {
    if (parameter) throw InvalidArgument(std::string("family '") + what + "' takes no parameter");
  };
  if (kind == "cyclic") return Family::cyclic(needs("cyclic"));
  if (kind == "bd") return Family::binary_dihedral(needs("bd"));
  if (kind == "bt") { forbids("bt"); return Family::tetrahedral(); }
  if (kind == "bo") { forbids("bo"); return Family::octahedral(); }
  if (kind == "bi") { forbids("bi"); return Family::icosahedral(); }
  throw InvalidArgument("unknown family '" + kind + "' (expected cyclic N | bd N | bt | bo | bi)");
}

FiniteGroup::FiniteGroup(Family family, std::vector<std::vector<Element>> mul,
                         std::vector<std::string> descriptions,
                         std::vector<ExtQuaternion> quaternions)
    : family_(family),
      mul_(std::move(mul)),
      descriptions_(std::move(descriptions)),
      quaternions_(std::move(quaternions)) {
  const int n = order();
  if (n == 0) throw InvalidArgument("FiniteGroup: empty table");
  if (static_cast<int>(descriptions_.size()) != n)
    throw InvalidArgument("FiniteGroup: description count does not match order");
  identity_ = -1;
  for (Element e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (Element g = 0; g < n && ok; ++g) ok = mul_[e][g] == g && mul_[g][e] == g;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw InvalidArgument("FiniteGroup: no identity element");
  inv_.assign(n, -1);
  for (Element g = 0; g < n; ++g)
    for (Element h = 0; h < n; ++h)
      if (mul_[g][h] == identity_) inv_[g] = h;
  if (std::count(inv_.begin(), inv_.end(), -1) != 0)
    throw InvalidArgument("FiniteGroup: missing inverse");
}

Element FiniteGroup::element_order(Element a) const {
  int k = 1;
  for (Element p = a; p != identity_; p = mul(p, a)) ++k;
  return k;
}

namespace {

std::string power_word(const char* base, int k) {
  if (k == 0) return "e";
  if (k == 1) return base;
  return std::string(base) + "^" + std::to_string(k);
}

// Collapses runs: "rsst" -> "rs^2t".
std::string compress_word(const std::string& letters) {
  if (letters.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    out += letters[i];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace

FiniteGroup build_cyclic(int n) {
  if (n < 1) throw InvalidArgument("build_cyclic: n must be >= 1");
  std::vector<std::vector<Element>> mul(n, std::vector<Element>(n));
  std::vector<std::string> desc(n);
  for (int a = 0; a < n; ++a) {
    desc[a] = power_word("g", a);
    for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  }
  return FiniteGroup(Family::cyclic(n), std::move(mul), std::move(desc));
}

FiniteGroup build_binary_dihedral(int n) {
  if (n < 2) throw InvalidArgument("build_binary_dihedral: n must be >= 2");
  const int m = 2 * n;
  const int order = 2 * m;
  auto index = [m](int a, int b) { return ((a % m) + m) % m + m * b; };
  std::vector<std::vector<Element>> mul(order, std::vector<Element>(order));
  std::vector<std::string> desc(order);
  for (int b = 0; b < 2; ++b) {
    for (int a = 0; a < m; ++a) {
      const int x = index(a, b);
      desc[x] = b == 0 ? power_word("a", a) : (a == 0 ? "b" : power_word("a", a) + "b");
      for (int d = 0; d < 2; ++d) {
        for (int c = 0; c < m; ++c) {
          // b^j a^c = a^{(-1)^j c} b^j, and b^2 = a^n.
          int exp = b == 0 ? a + c : a - c;
          int beta = b + d;
          if (beta == 2) {
            exp += n;
            beta = 0;
          }
          mul[x][index(c, d)] = index(exp, beta);
        }
      }
    }
  }
  return FiniteGroup(Family::binary_dihedral(n), std::move(mul), std::move(desc));
}

PolyhedralGenerators polyhedral_generators(FamilyKind kind) {
  const FieldElem half(Rational(1, 2), 0, 0, 0);
  const ExtQuaternion s{half, half, half, half};
  switch (kind) {
    case FamilyKind::BinaryTetrahedral:
      return {ExtQuaternion{0, 1, 0, 0}, s, ExtQuaternion{half, half, -half, half}, 3};
    case FamilyKind::BinaryOctahedral: {
      const FieldElem inv_sqrt2 = FieldElem::sqrt2() / Rational(2);
      return {ExtQuaternion{0, inv_sqrt2, inv_sqrt2, 0}, s,
              ExtQuaternion{inv_sqrt2, inv_sqrt2, 0, 0}, 4};
    }
    case FamilyKind::BinaryIcosahedral: {
      const FieldElem phi = FieldElem::phi();
      const FieldElem phi_inv = phi - FieldElem(1);
      const ExtQuaternion t = ExtQuaternion{phi, phi_inv, 1, 0} / Rational(2);
      // r = -(st)^{-1}; st is a unit so its inverse is its conjugate.
      const ExtQuaternion r = -(s * t).conjugate();
      return {r, s, t, 5};
    }
    default:
      throw InvalidArgument("polyhedral_generators: not a binary polyhedral family");
  }
}

bool generator_relations_hold(const PolyhedralGenerators& g) {
  const ExtQuaternion minus_one = -ExtQuaternion::one();
  return power(g.r, 2) == minus_one && power(g.s, 3) == minus_one &&
         power(g.t, g.t_order) == minus_one && g.r * g.s * g.t == minus_one &&
         g.r.norm() == FieldElem(1) && g.s.norm() == FieldElem(1) && g.t.norm() == FieldElem(1);
}

FiniteGroup build_binary_polyhedral(FamilyKind kind) {
  const PolyhedralGenerators gens = polyhedral_generators(kind);
  if (!generator_relations_hold(gens))
    throw ClosureError("build_binary_polyhedral: generator relations fail");
  const int expected = kind == FamilyKind::BinaryTetrahedral  ? 24
                       : kind == FamilyKind::BinaryOctahedral ? 48
                                                              : 120;
  const ExtQuaternion generators[3] = {gens.r, gens.s, gens.t};
  const char letters[3] = {'r', 's', 't'};

  std::vector<ExtQuaternion> elems{ExtQuaternion::one()};
  std::vector<std::string> words{""};
  std::map<ExtQuaternion, Element> index{{elems[0], 0}};
  std::deque<Element> queue{0};
  while (!queue.empty()) {
    const Element cur = queue.front();
    queue.pop_front();
    for (int g = 0; g < 3; ++g) {
      ExtQuaternion next = elems[cur] * generators[g];
      if (index.contains(next)) continue;
      if (static_cast<int>(elems.size()) >= expected)
        throw ClosureError("build_binary_polyhedral: closure exceeds order " +
                           std::to_string(expected));
      index.emplace(next, static_cast<Element>(elems.size()));
      words.push_back(words[cur] + letters[g]);
      elems.push_back(std::move(next));
      queue.push_back(static_cast<Element>(elems.size() - 1));
    }
  }
  if (static_cast<int>(elems.size()) != expected)
    throw ClosureError("build_binary_polyhedral: closure stopped at order " +
                       std::to_string(elems.size()) + ", expected " + std::to_string(expected));

  const int n = expected;
  std::vector<std::vector<Element>> mul(n, std::vector<Element>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto it = index.find(elems[a] * elems[b]);
      if (it == index.end()) throw ClosureError("build_binary_polyhedral: product escapes set");
      mul[a][b] = it->second;
    }
  std::vector<std::string> desc;
  desc.reserve(n);
  for (const auto& w : words) desc.push_back(compress_word(w));
  Family family{kind, 0};
  return FiniteGroup(family, std::move(mul), std::move(desc), std::move(elems));
}

FiniteGroup build_group(const Family& family) {
  switch (family.kind) {
    case FamilyKind::Cyclic: return build_cyclic(family.n);
    case FamilyKind::BinaryDihedral: return build_binary_dihedral(family.n);
    default: return build_binary_polyhedral(family.kind);
  }
}

GroupAxiomReport check_group_axioms(const FiniteGroup& h, std::uint64_t seed, int random_triples) {
  GroupAxiomReport rep;
  const int n = h.order();
  rep.latin_square = true;
  for (int a = 0; a < n && rep.latin_square; ++a) {
    std::vector<char> row(n, 0), col(n, 0);
    for (int b = 0; b < n; ++b) {
      const Element r = h.mul(a, b), c = h.mul(b, a);
      if (r < 0 || r >= n || c < 0 || c >= n || row[r] || col[c]) {
        rep.latin_square = false;
        break;
      }
      row[r] = col[c] = 1;
    }
  }
  rep.identity_law = true;
  rep.inverse_law = true;
  for (int a = 0; a < n; ++a) {
    if (h.mul(h.identity(), a) != a || h.mul(a, h.identity()) != a) rep.identity_law = false;
    if (h.mul(a, h.inv(a)) != h.identity() || h.mul(h.inv(a), a) != h.identity())
      rep.inverse_law = false;
  }
  rep.associative = true;
  auto check = [&](int a, int b, int c) {
    ++rep.triples_checked;
    if (h.mul(h.mul(a, b), c) != h.mul(a, h.mul(b, c))) rep.associative = false;
  };
  if (n <= 48) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check(a, b, c);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < random_triples; ++i) check(pick(rng), pick(rng), pick(rng));
  }
  return rep;
}

bool commutes(const FiniteGroup& h, Element x, Element y) { return h.mul(x, y) == h.mul(y, x); }

std::vector<Element> centralizer(const FiniteGroup& h, Element x) {
  std::vector<Element> out;
  for (Element g = 0; g < h.order(); ++g)
    if (commutes(h, x, g)) out.push_back(g);
  return out;
}

std::vector<Element> center(const FiniteGroup& h) {
  std::vector<Element> out;
  for (Element z = 0; z < h.order(); ++z) {
    bool central = true;
    for (Element g = 0; g < h.order() && central; ++g) central = commutes(h, z, g);
    if (central) out.push_back(z);
  }
  return out;
}

std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& h) {
  const int n = h.order();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<Element>> classes;
  for (Element x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::set<Element> cls;
    for (Element g = 0; g < n; ++g) cls.insert(h.mul(h.mul(g, x), h.inv(g)));
    for (Element y : cls) seen[y] = 1;
    classes.emplace_back(cls.begin(), cls.end());
  }
  return classes;
}

std::vector<int> class_of(const FiniteGroup& h, const std::vector<std::vector<Element>>& classes) {
  std::vector<int> out(h.order(), -1);
  for (int c = 0; c < static_cast<int>(classes.size()); ++c)
    for (Element x : classes[c]) out[x] = c;
  return out;
}

std::vector<std::vector<Element>> maximal_abelian_classes(const FiniteGroup& h) {
  const std::vector<Element> z = center(h);
  if (static_cast<int>(z.size()) == h.order())
    throw InvalidArgument("maximal_abelian_classes: group is abelian");
  std::vector<char> central(h.order(), 0);
  for (Element e : z) central[e] = 1;

  std::vector<int> owner(h.order(), -1);
  std::vector<std::vector<Element>> sets;
  for (Element x = 0; x < h.order(); ++x) {
    if (central[x]) continue;
    std::vector<Element> part;
    for (Element g : centralizer(h, x))
      if (!central[g]) part.push_back(g);
    if (owner[x] >= 0) {
      if (sets[owner[x]] != part)
        throw PartitionError("maximal_abelian_classes: centralizers of " + h.description(x) +
                             " overlap without coinciding");
      continue;
    }
    for (Element g : part)
      if (owner[g] >= 0)
        throw PartitionError("maximal_abelian_classes: element " + h.description(g) +
                             " lies in two centralizer sets");
    const int id = static_cast<int>(sets.size());
    for (Element g : part) owner[g] = id;
    sets.push_back(std::move(part));
  }
  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  return sets;
}

}  // namespace commgraph
