#include "commgraph/coxeter.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "commgraph/errors.hpp"

namespace commgraph {

CoxeterLabel CoxeterLabel::parse(const std::string& token) {
  if (token == "inf" || token == "infinity" || token == "oo") return infinity();
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(token, &used);
  } catch (const std::exception&) {
    throw ParseError("Coxeter label: '" + token + "' is not an integer or 'inf'");
  }
  if (used != token.size() || v < 1)
    throw ParseError("Coxeter label: '" + token + "' is not a positive integer or 'inf'");
  return CoxeterLabel(v);
}

CoxeterMatrix::CoxeterMatrix(int n, CoxeterLabel off) : n_(n) {
  if (n < 0) throw InvalidArgument("CoxeterMatrix: negative rank");
  if (!off.is_infinite() && off.value() < 2)
    throw InvalidArgument("CoxeterMatrix: off-diagonal entries must be >= 2");
  entries_.assign(n, std::vector<CoxeterLabel>(n, off));
  for (int i = 0; i < n; ++i) entries_[i][i] = CoxeterLabel(1);
}

CoxeterMatrix::CoxeterMatrix(std::vector<std::vector<CoxeterLabel>> entries)
    : n_(static_cast<int>(entries.size())), entries_(std::move(entries)) {
  for (int i = 0; i < n_; ++i) {
    if (static_cast<int>(entries_[i].size()) != n_)
      throw InvalidArgument("CoxeterMatrix: matrix is not square");
    if (entries_[i][i] != CoxeterLabel(1))
      throw InvalidArgument("CoxeterMatrix: diagonal entry m_" + std::to_string(i + 1) +
                            std::to_string(i + 1) + " must be 1");
    for (int j = 0; j < n_; ++j) {
      if (i == j) continue;
      const CoxeterLabel e = entries_[i][j];
      if (!e.is_infinite() && e.value() < 2)
        throw InvalidArgument("CoxeterMatrix: off-diagonal entry at (" + std::to_string(i + 1) +
                              "," + std::to_string(j + 1) + ") must be >= 2");
    }
  }
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < i; ++j)
      if (entries_[i][j] != entries_[j][i])
        throw InvalidArgument("CoxeterMatrix: matrix is not symmetric");
}

void CoxeterMatrix::set(int i, int j, CoxeterLabel label) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw InvalidArgument("CoxeterMatrix::set: index");
  if (i == j) {
    if (label != CoxeterLabel(1)) throw InvalidArgument("CoxeterMatrix::set: diagonal must be 1");
    return;
  }
  if (!label.is_infinite() && label.value() < 2)
    throw InvalidArgument("CoxeterMatrix::set: off-diagonal entries must be >= 2");
  entries_[i][j] = entries_[j][i] = label;
}

CoxeterMatrix realize(const SimpleGraph& g, CoxeterLabel off_label) {
  if (!off_label.is_infinite() && off_label.value() < 3)
    throw InvalidArgument("realize: label for non-adjacent pairs must be >= 3 or inf");
  CoxeterMatrix m(g.size(), off_label);
  for (auto [u, v] : g.edges()) m.set(u, v, CoxeterLabel(2));
  return m;
}

SimpleGraph commuting_graph_of_generators(const CoxeterMatrix& m) {
  SimpleGraph g(m.rank());
  for (int i = 0; i < m.rank(); ++i)
    for (int j = i + 1; j < m.rank(); ++j)
      if (m.at(i, j) == CoxeterLabel(2)) g.add_edge(i, j);
  std::vector<std::string> labels;
  for (int i = 0; i < m.rank(); ++i) labels.push_back("s" + std::to_string(i + 1));
  g.set_labels(std::move(labels));
  return g;
}

SimpleGraph coxeter_graph(const CoxeterMatrix& m) {
  SimpleGraph g(m.rank());
  for (int i = 0; i < m.rank(); ++i)
    for (int j = i + 1; j < m.rank(); ++j) {
      const CoxeterLabel e = m.at(i, j);
      if (e.is_infinite() || e.value() >= 3) g.add_edge(i, j);
    }
  std::vector<std::string> labels;
  for (int i = 0; i < m.rank(); ++i) labels.push_back("s" + std::to_string(i + 1));
  g.set_labels(std::move(labels));
  return g;
}

std::string AdeType::name() const {
  switch (kind) {
    case AdeKind::A: return "A" + std::to_string(rank);
    case AdeKind::D: return "D" + std::to_string(rank);
    case AdeKind::E6: return "E6";
    case AdeKind::E7: return "E7";
    case AdeKind::E8: return "E8";
  }
  return "?";
}

std::vector<std::pair<int, int>> ade_edges(const AdeType& type) {
  std::vector<std::pair<int, int>> edges;
  switch (type.kind) {
    case AdeKind::A:
      if (type.rank < 1) throw InvalidArgument("ade_edges: A_n needs n >= 1");
      for (int i = 0; i + 1 < type.rank; ++i) edges.emplace_back(i, i + 1);
      break;
    case AdeKind::D: {
      const int n = type.rank;
      if (n < 4) throw InvalidArgument("ade_edges: D_n needs n >= 4");
      for (int i = 0; i + 1 < n - 2; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(n - 3, n - 2);
      edges.emplace_back(n - 3, n - 1);
      break;
    }
    case AdeKind::E6:
    case AdeKind::E7:
    case AdeKind::E8: {
      const int n = type.kind == AdeKind::E6 ? 6 : type.kind == AdeKind::E7 ? 7 : 8;
      if (type.rank != n) throw InvalidArgument("ade_edges: E-type rank mismatch");
      edges = {{0, 1}, {1, 2}, {2, 3}, {2, 4}};
      for (int i = 4; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    }
  }
  return edges;
}

CoxeterMatrix ade_matrix(const AdeType& type, CoxeterLabel off_label) {
  SimpleGraph g(type.rank);
  for (auto [u, v] : ade_edges(type)) g.add_edge(u, v);
  return realize(g, off_label);
}

std::string presentation_text(const CoxeterMatrix& m) {
  std::ostringstream os;
  for (int i = 0; i < m.rank(); ++i)
    for (int j = i; j < m.rank(); ++j) {
      const CoxeterLabel e = m.at(i, j);
      if (e.is_infinite()) continue;
      if (i == j)
        os << "s" << i + 1 << "^2 = 1\n";
      else
        os << "(s" << i + 1 << " s" << j + 1 << ")^" << e.value() << " = 1\n";
    }
  return os.str();
}

CoxeterMatrix read_coxeter_matrix(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    for (std::string tok; ls >> tok;) tokens.push_back(tok);
  }
  if (tokens.empty()) throw ParseError("Coxeter matrix: empty input");
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(tokens[0], &used);
    if (used != tokens[0].size() || n < 0) throw ParseError("");
  } catch (const std::exception&) {
    throw ParseError("Coxeter matrix: first token must be the rank");
  }
  if (tokens.size() != 1 + static_cast<std::size_t>(n) * n)
    throw ParseError("Coxeter matrix: expected " + std::to_string(n * n) + " entries, got " +
                     std::to_string(tokens.size() - 1));
  std::vector<std::vector<CoxeterLabel>> entries(n, std::vector<CoxeterLabel>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) entries[i][j] = CoxeterLabel::parse(tokens[1 + i * n + j]);
  try {
    return CoxeterMatrix(std::move(entries));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

void write_coxeter_matrix(std::ostream& out, const CoxeterMatrix& m) {
  out << m.rank() << '\n';
  for (int i = 0; i < m.rank(); ++i) {
    for (int j = 0; j < m.rank(); ++j) out << (j ? " " : "") << m.at(i, j).to_string();
    out << '\n';
  }
}

}  // namespace commgraph
