#include "tsym/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace tsym {

SparseTensor::SparseTensor(int order, int dim) : m_(order), n_(dim) {
  if (m_ < 2) throw ParameterError("tensor order must be at least 2");
  if (n_ < 1) throw ParameterError("tensor dimension must be positive");
}

void SparseTensor::set(const Index& idx, const Rational& value) {
  if (static_cast<int>(idx.size()) != m_) throw DimensionError("index tuple has wrong length");
  for (int i : idx)
    if (i < 0 || i >= n_) throw DimensionError("index out of range");
  if (value == 0) {
    entries_.erase(idx);
  } else {
    Rational q = value;
    q.canonicalize();
    entries_[idx] = q;
  }
  symmetric_ = false;
}

Rational SparseTensor::get(const Index& idx) const {
  auto it = entries_.find(idx);
  return it == entries_.end() ? Rational(0) : it->second;
}

bool SparseTensor::is_nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const auto& e) { return e.second > 0; });
}

bool SparseTensor::has_zero_diagonal() const {
  for (int i = 0; i < n_; ++i)
    if (entries_.count(Index(m_, i))) return false;
  return true;
}

bool SparseTensor::is_symmetric() const {
  for (const auto& [idx, value] : entries_) {
    Index perm = idx;
    std::sort(perm.begin(), perm.end());
    do {
      if (get(perm) != value) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return true;
}

void SparseTensor::mark_symmetric() {
  if (!is_symmetric()) throw ParameterError("tensor is not symmetric");
  symmetric_ = true;
}

namespace {

SparseTensor hypergraph_tensor(const Hypergraph& g, int diagonal_sign, int adjacency_sign,
                               std::uint64_t entry_cap) {
  const int m = g.m();
  SparseTensor a(m, g.n());
  const Integer perms = factorial(m);
  if (Integer(static_cast<unsigned long>(g.edge_count())) * perms + g.n() >
      Integer(static_cast<unsigned long>(entry_cap)))
    throw CapExceeded("hypergraph tensor would exceed the entry cap", entry_cap, 0);
  const Rational value(adjacency_sign, factorial(m - 1));
  for (const auto& e : g.edges()) {
    Index idx = e;
    do {
      a.set(idx, value);
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
  if (diagonal_sign != 0) {
    auto deg = g.degrees();
    for (int v = 0; v < g.n(); ++v)
      if (deg[v] != 0) a.set(Index(m, v), Rational(diagonal_sign * deg[v]));
  }
  a.mark_symmetric();
  return a;
}

}  // namespace

SparseTensor adjacency_tensor(const Hypergraph& g, std::uint64_t entry_cap) {
  return hypergraph_tensor(g, 0, 1, entry_cap);
}

SparseTensor laplacian_tensor(const Hypergraph& g, std::uint64_t entry_cap) {
  return hypergraph_tensor(g, 1, -1, entry_cap);
}

SparseTensor signless_laplacian_tensor(const Hypergraph& g, std::uint64_t entry_cap) {
  return hypergraph_tensor(g, 1, 1, entry_cap);
}

UnimodularDiagonal::UnimodularDiagonal(std::vector<Rational> angles) : angles_(std::move(angles)) {
  if (angles_.empty()) throw ParameterError("diagonal must have positive dimension");
  for (auto& a : angles_) a = frac_part(a);
  if (angles_[0] != 0) throw ParameterError("diagonal must be normalized with angle_1 = 0");
}

UnimodularDiagonal UnimodularDiagonal::identity(int n) {
  return UnimodularDiagonal(std::vector<Rational>(n, Rational(0)));
}

Integer UnimodularDiagonal::order() const { return common_denominator(angles_); }

bool UnimodularDiagonal::is_identity() const {
  return std::all_of(angles_.begin(), angles_.end(), [](const Rational& a) { return a == 0; });
}

UnimodularDiagonal UnimodularDiagonal::operator*(const UnimodularDiagonal& other) const {
  if (other.dim() != dim()) throw DimensionError("diagonal dimensions differ");
  std::vector<Rational> sum(angles_.size());
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = angles_[i] + other.angles_[i];
  return UnimodularDiagonal(std::move(sum));
}

UnimodularDiagonal UnimodularDiagonal::inverse() const {
  std::vector<Rational> neg(angles_.size());
  for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -angles_[i];
  return UnimodularDiagonal(std::move(neg));
}

UnimodularDiagonal UnimodularDiagonal::pow(long k) const {
  std::vector<Rational> scaled(angles_.size());
  for (std::size_t i = 0; i < scaled.size(); ++i) scaled[i] = angles_[i] * k;
  return UnimodularDiagonal(std::move(scaled));
}

std::vector<std::complex<double>> UnimodularDiagonal::to_complex() const {
  std::vector<std::complex<double>> z;
  for (const auto& a : angles_) z.push_back(std::polar(1.0, 2 * std::numbers::pi * a.get_d()));
  return z;
}

PhasedValue PhasedValue::from_rational(const Rational& q) {
  if (q > 0) return {q, Rational(0)};
  return {Rational(-q), Rational(1, 2)};
}

std::complex<double> PhasedValue::to_complex() const {
  return std::polar(magnitude.get_d(), 2 * std::numbers::pi * angle.get_d());
}

bool PhasedTensor::equals(const SparseTensor& a) const {
  if (a.order() != order || a.dim() != dim || a.nnz() != entries.size()) return false;
  for (const auto& [idx, value] : a.entries()) {
    auto it = entries.find(idx);
    if (it == entries.end() || !(it->second == PhasedValue::from_rational(value))) return false;
  }
  return true;
}

PhasedTensor diagonal_similarity(const SparseTensor& a, const UnimodularDiagonal& d,
                                 const Rational& phase) {
  if (d.dim() != a.dim()) throw DimensionError("diagonal dimension does not match tensor");
  const int m = a.order();
  const auto& theta = d.angles();
  PhasedTensor out{m, a.dim(), {}};
  for (const auto& [idx, value] : a.entries()) {
    PhasedValue pv = PhasedValue::from_rational(value);
    Rational angle = pv.angle - phase - (m - 1) * theta[idx[0]];
    for (std::size_t k = 1; k < idx.size(); ++k) angle += theta[idx[k]];
    pv.angle = frac_part(angle);
    out.entries.emplace(idx, std::move(pv));
  }
  return out;
}

SparseTensor subtensor(const SparseTensor& a, const std::vector<std::vector<int>>& sets) {
  if (static_cast<int>(sets.size()) != a.order())
    throw DimensionError("subtensor needs one index set per mode");
  std::vector<std::vector<char>> member(sets.size(), std::vector<char>(a.dim(), 0));
  for (std::size_t k = 0; k < sets.size(); ++k)
    for (int i : sets[k]) {
      if (i < 0 || i >= a.dim()) throw DimensionError("subtensor index out of range");
      member[k][i] = 1;
    }
  SparseTensor out(a.order(), a.dim());
  for (const auto& [idx, value] : a.entries()) {
    bool inside = true;
    for (std::size_t k = 0; k < idx.size() && inside; ++k) inside = member[k][idx[k]];
    if (inside) out.set(idx, value);
  }
  return out;
}

namespace {

// Tarjan's algorithm over adjacency lists.
class Tarjan {
 public:
  explicit Tarjan(const std::vector<std::vector<int>>& graph)
      : graph_(graph), number_(graph.size(), -1), low_(graph.size(), 0), on_stack_(graph.size(), 0) {
    for (int v = 0; v < static_cast<int>(graph_.size()); ++v)
      if (number_[v] < 0) visit(v);
  }
  std::vector<std::vector<int>> take() { return std::move(components_); }

 private:
  void visit(int v) {
    number_[v] = low_[v] = counter_++;
    stack_.push_back(v);
    on_stack_[v] = 1;
    for (int w : graph_[v]) {
      if (number_[w] < 0) {
        visit(w);
        low_[v] = std::min(low_[v], low_[w]);
      } else if (on_stack_[w]) {
        low_[v] = std::min(low_[v], number_[w]);
      }
    }
    if (low_[v] == number_[v]) {
      std::vector<int> comp;
      int w;
      do {
        w = stack_.back();
        stack_.pop_back();
        on_stack_[w] = 0;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      components_.push_back(std::move(comp));
    }
  }

  const std::vector<std::vector<int>>& graph_;
  std::vector<int> number_, low_;
  std::vector<char> on_stack_;
  std::vector<int> stack_;
  int counter_ = 0;
  std::vector<std::vector<int>> components_;
};

}  // namespace

WeakIrreducibility is_weakly_irreducible(const SparseTensor& a) {
  std::vector<std::vector<int>> graph(a.dim());
  for (const auto& [idx, value] : a.entries())
    for (std::size_t k = 1; k < idx.size(); ++k) graph[idx[0]].push_back(idx[k]);
  for (auto& succ : graph) {
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
  }
  auto comps = Tarjan(graph).take();
  const bool strong = comps.size() == 1;
  return {strong, std::move(comps)};
}

bool is_irreducible(const SparseTensor& a) {
  const int n = a.dim();
  if (n < 2) throw ParameterError("irreducibility is defined for n >= 2");
  if (n > 20) throw DimensionError("exhaustive irreducibility check is limited to n <= 20");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> patterns;
  for (const auto& [idx, value] : a.entries()) {
    std::uint32_t rest = 0;
    for (std::size_t k = 1; k < idx.size(); ++k) rest |= 1u << idx[k];
    patterns.emplace_back(1u << idx[0], rest);
  }
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t subset = 1; subset < full; ++subset) {
    bool blocked = false;
    for (const auto& [primary, rest] : patterns)
      if ((primary & subset) && !(rest & subset)) {
        blocked = true;
        break;
      }
    if (!blocked) return false;
  }
  return true;
}

SparseTensor parse_tensor(std::istream& in) {
  std::string line;
  int lineno = 0;
  int m = -1, n = -1;
  std::map<Index, Rational> seen;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (m < 0) {
      if (!(ls >> m >> n)) throw ParseError("expected header 'm n'", lineno);
      std::string rest;
      if (ls >> rest) throw ParseError("trailing text after header", lineno);
      if (m < 2 || n < 1) throw ParseError("header needs m >= 2 and n >= 1", lineno);
      continue;
    }
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (static_cast<int>(tokens.size()) != m + 1)
      throw ParseError("expected " + std::to_string(m) + " indices and a value", lineno);
    Index idx;
    for (int k = 0; k < m; ++k) {
      try {
        std::size_t used = 0;
        int v = std::stoi(tokens[k], &used);
        if (used != tokens[k].size()) throw std::invalid_argument(tokens[k]);
        idx.push_back(v - 1);
      } catch (const std::exception&) {
        throw ParseError("bad index '" + tokens[k] + "'", lineno);
      }
      if (idx.back() < 0 || idx.back() >= n) throw ParseError("index out of range", lineno);
    }
    Rational value;
    try {
      value = parse_rational(tokens[m]);
    } catch (const std::exception& ex) {
      throw ParseError(ex.what(), lineno);
    }
    if (seen.count(idx)) throw ParseError("duplicate entry", lineno);
    seen.emplace(idx, value);
  }
  if (m < 0) throw ParseError("empty input: missing 'm n' header", lineno + 1);
  SparseTensor a(m, n);
  for (const auto& [idx, value] : seen) a.set(idx, value);
  return a;
}

SparseTensor parse_tensor(const std::string& text) {
  std::istringstream in(text);
  return parse_tensor(in);
}

SparseTensor load_tensor(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_tensor(in);
}

void write_tensor(std::ostream& out, const SparseTensor& a) {
  out << a.order() << ' ' << a.dim() << '\n';
  for (const auto& [idx, value] : a.entries()) {
    for (int i : idx) out << i + 1 << ' ';
    out << value.get_str() << '\n';
  }
}

}  // namespace tsym
