#include "commgraph/commuting.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "commgraph/errors.hpp"

namespace commgraph {

SimpleGraph commuting_graph(const FiniteGroup& h, const std::vector<Element>& gamma) {
  if (gamma.empty()) throw InvalidArgument("commuting_graph: subset must be nonempty");
  std::vector<std::string> labels;
  labels.reserve(gamma.size());
  for (Element x : gamma) {
    if (x < 0 || x >= h.order()) throw InvalidArgument("commuting_graph: element out of range");
    labels.push_back(h.description(x));
  }
  SimpleGraph g(static_cast<int>(gamma.size()), std::move(labels));
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j)
      if (gamma[i] != gamma[j] && commutes(h, gamma[i], gamma[j])) g.add_edge(i, j);
  return g;
}

SimpleGraph commuting_graph(const FiniteGroup& h) {
  std::vector<Element> all(h.order());
  for (Element x = 0; x < h.order(); ++x) all[x] = x;
  return commuting_graph(h, all);
}

std::vector<NamedSubset> canonical_subsets(const FiniteGroup& h) {
  std::vector<NamedSubset> out;
  std::vector<Element> all(h.order());
  for (Element x = 0; x < h.order(); ++x) all[x] = x;
  const std::vector<Element> z = center(h);
  out.push_back({"Z", z});

  const Family& f = h.family();
  if (f.kind == FamilyKind::BinaryDihedral) {
    const int m = 2 * f.n;
    NamedSubset g1{"Gamma1", {}}, g2{"Gamma2", {}}, g3{"Gamma3", {}};
    for (int a = 0; a < m; ++a) {
      g1.elements.push_back(a);
      g2.elements.push_back(a + m);
      if (!std::binary_search(z.begin(), z.end(), a)) g3.elements.push_back(a);
    }
    out.push_back(std::move(g1));
    out.push_back(std::move(g2));
    out.push_back(std::move(g3));
  } else if (f.is_polyhedral()) {
    std::map<char, int> next{{'B', 2}, {'C', 1}, {'D', 1}};
    for (auto& cls : maximal_abelian_classes(h)) {
      const char letter = cls.size() == 2 ? 'B' : cls.size() == 4 ? 'C' : 'D';
      out.push_back({std::string(1, letter) + std::to_string(next[letter]++), std::move(cls)});
    }
  } else if (f.kind != FamilyKind::Cyclic) {
    throw InvalidArgument("canonical_subsets: unsupported family");
  }
  out.push_back({"full", std::move(all)});
  return out;
}

const NamedSubset& find_subset(const std::vector<NamedSubset>& subsets, const std::string& name) {
  for (const auto& s : subsets)
    if (s.name == name) return s;
  std::string names;
  for (const auto& s : subsets) names += (names.empty() ? "" : ", ") + s.name;
  throw InvalidArgument("unknown subset '" + name + "'; available: " + names);
}

StructureReport expected_structure(const Family& family) {
  StructureReport rep;
  auto repeat = [&](int count, int size) { rep.expected_sizes.insert(rep.expected_sizes.end(), count, size); };
  switch (family.kind) {
    case FamilyKind::Cyclic:
      rep.expected_universal = family.n;
      break;
    case FamilyKind::BinaryDihedral:
      rep.expected_universal = 2;
      repeat(family.n, 2);
      repeat(1, 2 * family.n - 2);
      break;
    case FamilyKind::BinaryTetrahedral:
      rep.expected_universal = 2;
      repeat(3, 2);
      repeat(4, 4);
      break;
    case FamilyKind::BinaryOctahedral:
      rep.expected_universal = 2;
      repeat(6, 2);
      repeat(4, 4);
      repeat(3, 6);
      break;
    case FamilyKind::BinaryIcosahedral:
      rep.expected_universal = 2;
      repeat(15, 2);
      repeat(10, 4);
      repeat(6, 8);
      break;
  }
  std::sort(rep.expected_sizes.begin(), rep.expected_sizes.end());
  return rep;
}

std::string format_multiset(int universal, const std::vector<int>& sizes) {
  std::map<int, int> count;
  for (int s : sizes) ++count[s];
  std::ostringstream os;
  os << "K" << universal << " v (";
  bool first = true;
  for (auto [size, c] : count) {
    os << (first ? "" : " u ") << c << "K" << size;
    first = false;
  }
  if (first) os << "empty";
  os << ")";
  return os.str();
}

StructureReport verify_structure(const FiniteGroup& h) {
  StructureReport rep = expected_structure(h.family());
  rep.observed = decompose_clique_join(commuting_graph(h));
  rep.matches = rep.observed.universal_count == rep.expected_universal &&
                rep.observed.size_multiset() == rep.expected_sizes;
  if (!rep.matches)
    throw StructureMismatch("verify_structure(" + h.family().name() + "): expected " +
                            format_multiset(rep.expected_universal, rep.expected_sizes) +
                            ", observed " +
                            format_multiset(rep.observed.universal_count,
                                            rep.observed.size_multiset()));
  return rep;
}

}  // namespace commgraph
