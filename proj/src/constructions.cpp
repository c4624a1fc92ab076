#include "wbalg/constructions.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>

namespace wbalg {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c == '.' || c == ',' || c == '[' || c == ']' || c == '(' || c == ')' || c == '#' || c == '=' ||
        std::isspace(static_cast<unsigned char>(c)))
      return false;
  return true;
}

}  // namespace

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::set<std::string> names;
  for (const auto& v : vertices_) {
    if (!valid_name(v)) throw InvalidQuiver("bad vertex name '" + v + "'");
    if (!names.insert(v).second) throw InvalidQuiver("duplicate name '" + v + "'");
  }
  for (const auto& a : arrows_) {
    if (!valid_name(a.name)) throw InvalidQuiver("bad arrow name '" + a.name + "'");
    if (!names.insert(a.name).second) throw InvalidQuiver("duplicate name '" + a.name + "'");
    if (a.source >= vertices_.size() || a.target >= vertices_.size())
      throw InvalidQuiver("arrow '" + a.name + "' has an endpoint outside the vertex list");
  }
}

bool Quiver::acyclic() const {
  // Kahn's algorithm.
  std::vector<std::size_t> indeg(vertices_.size(), 0);
  for (const auto& a : arrows_) ++indeg[a.target];
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < indeg.size(); ++v)
    if (!indeg[v]) ready.push_back(v);
  std::size_t seen = 0;
  while (!ready.empty()) {
    std::size_t v = ready.back();
    ready.pop_back();
    ++seen;
    for (const auto& a : arrows_)
      if (a.source == v && --indeg[a.target] == 0) ready.push_back(a.target);
  }
  return seen == vertices_.size();
}

std::vector<Path> paths_of_length(const Quiver& q, std::size_t length) {
  std::vector<Path> out;
  for (std::size_t v = 0; v < q.vertices().size(); ++v) out.push_back({v, v, {}});
  for (std::size_t l = 0; l < length; ++l) {
    std::vector<Path> next;
    for (const auto& p : out)
      for (std::size_t a = 0; a < q.arrows().size(); ++a)
        if (q.arrows()[a].source == p.target) {
          Path e = p;
          e.arrows.push_back(a);
          e.target = q.arrows()[a].target;
          next.push_back(std::move(e));
        }
    out = std::move(next);
  }
  // Trivial paths keep vertex order; longer ones are ordered by arrow sequence.
  std::sort(out.begin(), out.end(), [](const Path& x, const Path& y) {
    if (x.arrows != y.arrows) return x.arrows < y.arrows;
    return x.source < y.source;
  });
  return out;
}

std::vector<Path> all_paths(const Quiver& q, std::optional<std::size_t> max_length) {
  if (!max_length && !q.acyclic()) throw CyclicQuiver("the quiver has an oriented cycle, so it has infinitely many paths");
  std::vector<Path> out;
  for (std::size_t l = 0;; ++l) {
    if (max_length && l > *max_length) break;
    auto layer = paths_of_length(q, l);
    if (layer.empty()) break;
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::string path_label(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "e_" + q.vertices()[p.source];
  std::string s;
  for (std::size_t k = 0; k < p.arrows.size(); ++k) {
    if (k) s += ".";
    s += q.arrows()[p.arrows[k]].name;
  }
  return s;
}

std::optional<Path> concat(const Path& p, const Path& q) {
  if (p.target != q.source) return std::nullopt;
  Path r{p.source, q.target, p.arrows};
  r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
  return r;
}

Groupoid::Groupoid(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                   std::vector<std::vector<std::optional<std::size_t>>> compose, std::vector<std::size_t> identities,
                   std::vector<std::size_t> inverses)
    : objects_(std::move(objects)),
      morphisms_(std::move(morphisms)),
      compose_(std::move(compose)),
      identities_(std::move(identities)),
      inverses_(std::move(inverses)) {
  std::size_t n = morphisms_.size();
  std::set<std::string> names;
  for (const auto& m : morphisms_) {
    if (!names.insert(m.name).second) throw InvalidGroupoid("duplicate morphism '" + m.name + "'");
    if (m.source >= objects_.size() || m.target >= objects_.size())
      throw InvalidGroupoid("morphism '" + m.name + "' has an endpoint outside the object list");
  }
  if (compose_.size() != n || identities_.size() != objects_.size() || inverses_.size() != n)
    throw InvalidGroupoid("composition, identity or inverse table has the wrong size");
  for (std::size_t g = 0; g < n; ++g) {
    if (compose_[g].size() != n) throw InvalidGroupoid("composition table row has the wrong size");
    for (std::size_t h = 0; h < n; ++h) {
      bool composable = morphisms_[g].target == morphisms_[h].source;
      if (composable != compose_[g][h].has_value())
        throw InvalidGroupoid("composition of " + morphisms_[g].name + " and " + morphisms_[h].name +
                              (composable ? " is missing" : " must be undefined"));
      if (composable) {
        std::size_t gh = *compose_[g][h];
        if (gh >= n || morphisms_[gh].source != morphisms_[g].source || morphisms_[gh].target != morphisms_[h].target)
          throw InvalidGroupoid("composite of " + morphisms_[g].name + " and " + morphisms_[h].name +
                                " has the wrong endpoints");
      }
    }
  }
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t k = 0; k < n; ++k) {
        if (!compose_[g][h] || !compose_[h][k]) continue;
        if (compose_[*compose_[g][h]][k] != compose_[g][*compose_[h][k]])
          throw InvalidGroupoid("composition is not associative on " + morphisms_[g].name + ", " +
                                morphisms_[h].name + ", " + morphisms_[k].name);
      }
  for (std::size_t o = 0; o < objects_.size(); ++o) {
    std::size_t e = identities_[o];
    if (e >= n || morphisms_[e].source != o || morphisms_[e].target != o)
      throw InvalidGroupoid("identity of " + objects_[o] + " is not an endomorphism of it");
    for (std::size_t g = 0; g < n; ++g) {
      if (morphisms_[g].source == o && compose_[e][g] != g)
        throw InvalidGroupoid("identity of " + objects_[o] + " is not neutral on " + morphisms_[g].name);
      if (morphisms_[g].target == o && compose_[g][e] != g)
        throw InvalidGroupoid("identity of " + objects_[o] + " is not neutral on " + morphisms_[g].name);
    }
  }
  for (std::size_t g = 0; g < n; ++g) {
    std::size_t i = inverses_[g];
    if (i >= n || compose_[g][i] != identities_[morphisms_[g].source] ||
        compose_[i][g] != identities_[morphisms_[g].target])
      throw InvalidGroupoid("inverse of " + morphisms_[g].name + " is wrong");
  }
}

Groupoid Groupoid::pair_groupoid(std::size_t n) {
  std::vector<std::string> objects;
  for (std::size_t i = 1; i <= n; ++i) objects.push_back(std::to_string(i));
  std::vector<Morphism> ms;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      ms.push_back({i == j ? "e" + objects[i] : "g" + objects[i] + objects[j], i, j});
  std::size_t m = ms.size();
  std::vector<std::vector<std::optional<std::size_t>>> comp(m, std::vector<std::optional<std::size_t>>(m));
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t h = 0; h < m; ++h)
      if (ms[g].target == ms[h].source) comp[g][h] = ms[g].source * n + ms[h].target;
  std::vector<std::size_t> ids, inv;
  for (std::size_t i = 0; i < n; ++i) ids.push_back(i * n + i);
  for (std::size_t g = 0; g < m; ++g) inv.push_back(ms[g].target * n + ms[g].source);
  return Groupoid(std::move(objects), std::move(ms), std::move(comp), std::move(ids), std::move(inv));
}

std::size_t GroupTable::identity() const {
  for (std::size_t e = 0; e < elements.size(); ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < elements.size() && ok; ++g) ok = table[e][g] == g && table[g][e] == g;
    if (ok) return e;
  }
  throw NotAGroup("no identity element");
}

std::size_t GroupTable::inverse(std::size_t g) const {
  std::size_t e = identity();
  for (std::size_t h = 0; h < elements.size(); ++h)
    if (table[g][h] == e && table[h][g] == e) return h;
  throw NotAGroup("element " + elements[g] + " has no inverse");
}

void validate(const GroupTable& g) {
  std::size_t n = g.elements.size();
  if (n == 0) throw NotAGroup("empty element list");
  std::set<std::string> names(g.elements.begin(), g.elements.end());
  if (names.size() != n) throw NotAGroup("duplicate element names");
  if (g.table.size() != n) throw NotAGroup("table has the wrong number of rows");
  for (const auto& row : g.table) {
    if (row.size() != n) throw NotAGroup("table row has the wrong length");
    for (auto x : row)
      if (x >= n) throw NotAGroup("table entry outside the element list");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]])
          throw NotAGroup("not associative on (" + g.elements[a] + ", " + g.elements[b] + ", " + g.elements[c] + ")");
  g.identity();
  for (std::size_t a = 0; a < n; ++a) g.inverse(a);
}

GroupTable cyclic_group(std::size_t n, const std::string& prefix) {
  GroupTable g;
  for (std::size_t i = 0; i < n; ++i) g.elements.push_back(i == 0 ? "1" : prefix + (i == 1 ? "" : "^" + std::to_string(i)));
  g.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g.table[i][j] = (i + j) % n;
  return g;
}

GroupTable symmetric_group_3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{1, 2, 3};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  GroupTable g;
  for (const auto& q : perms) g.elements.push_back(std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]));
  g.table.assign(6, std::vector<std::size_t>(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      std::array<int, 3> c{};
      for (int k = 0; k < 3; ++k) c[k] = perms[i][perms[j][k] - 1];
      g.table[i][j] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return g;
}

Groupoid Groupoid::from_group(std::vector<std::string> elements, const std::vector<std::vector<std::size_t>>& table) {
  GroupTable gt{elements, table};
  validate(gt);
  std::size_t n = elements.size();
  std::vector<Morphism> ms;
  for (auto& e : elements) ms.push_back({e, 0, 0});
  std::vector<std::vector<std::optional<std::size_t>>> comp(n, std::vector<std::optional<std::size_t>>(n));
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) comp[g][h] = table[g][h];
  std::vector<std::size_t> inv;
  for (std::size_t g = 0; g < n; ++g) inv.push_back(gt.inverse(g));
  return Groupoid({"*"}, std::move(ms), std::move(comp), {gt.identity()}, std::move(inv));
}

Groupoid Groupoid::disjoint_union(const Groupoid& a, const Groupoid& b) {
  auto objects = a.objects_;
  for (const auto& o : b.objects_) objects.push_back(o + "'");
  auto ms = a.morphisms_;
  std::size_t na = a.morphisms_.size(), oa = a.objects_.size();
  for (auto m : b.morphisms_) ms.push_back({m.name + "'", m.source + oa, m.target + oa});
  std::size_t n = ms.size();
  std::vector<std::vector<std::optional<std::size_t>>> comp(n, std::vector<std::optional<std::size_t>>(n));
  for (std::size_t g = 0; g < na; ++g)
    for (std::size_t h = 0; h < na; ++h) comp[g][h] = a.compose_[g][h];
  for (std::size_t g = 0; g < n - na; ++g)
    for (std::size_t h = 0; h < n - na; ++h)
      if (auto c = b.compose_[g][h]) comp[na + g][na + h] = *c + na;
  auto ids = a.identities_;
  for (auto e : b.identities_) ids.push_back(e + na);
  auto inv = a.inverses_;
  for (auto i : b.inverses_) inv.push_back(i + na);
  return Groupoid(std::move(objects), std::move(ms), std::move(comp), std::move(ids), std::move(inv));
}

WeakHopfAlgebra groupoid_algebra(const Groupoid& g, const std::string& name) {
  std::vector<std::string> labels;
  for (const auto& m : g.morphisms()) labels.push_back(m.name);
  Space H(std::move(labels));
  std::size_t n = H.dim();
  AlgebraData alg{H, LinearMap(tensor(H, H), H), {}, nullptr};
  CoalgebraData co{H, LinearMap(H, tensor(H, H)), LinearMap(H, Space::ground())};
  LinearMap S(H, H);
  VectorBuilder one;
  for (std::size_t o = 0; o < g.objects().size(); ++o) one.add(g.identity(o), 1);
  alg.unit = one.build();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y)
      if (auto c = g.compose(x, y)) alg.mult.set_column(x * n + y, SparseVector::unit(*c));
    co.comult.set_column(x, SparseVector::unit(x * n + x));
    co.counit.set_column(x, SparseVector::unit(0));
    S.set_column(x, SparseVector::unit(g.inverse(x)));
  }
  auto wba = std::make_shared<const WeakBialgebra>(name, std::move(alg), std::move(co));
  return {wba, S, S};
}

WeakHopfAlgebra group_algebra(const GroupTable& g, const std::string& name) {
  return groupoid_algebra(Groupoid::from_group(g.elements, g.table), name);
}

std::shared_ptr<const WeakBialgebra> path_algebra_wba(const Quiver& q, const std::string& name) {
  auto paths = all_paths(q, std::nullopt);
  std::vector<std::string> labels;
  for (const auto& p : paths) labels.push_back(path_label(q, p));
  Space H(std::move(labels));
  std::size_t n = H.dim();
  auto find = [&](const Path& p) {
    return static_cast<std::size_t>(std::find(paths.begin(), paths.end(), p) - paths.begin());
  };
  AlgebraData alg{H, LinearMap(tensor(H, H), H), {}, nullptr};
  CoalgebraData co{H, LinearMap(H, tensor(H, H)), LinearMap(H, Space::ground())};
  VectorBuilder one;
  for (std::size_t x = 0; x < n; ++x) {
    if (paths[x].length() == 0) one.add(x, 1);
    for (std::size_t y = 0; y < n; ++y)
      if (auto c = concat(paths[x], paths[y])) alg.mult.set_column(x * n + y, SparseVector::unit(find(*c)));
    co.comult.set_column(x, SparseVector::unit(x * n + x));
    co.counit.set_column(x, SparseVector::unit(0));
  }
  alg.unit = one.build();
  return std::make_shared<const WeakBialgebra>(name, std::move(alg), std::move(co));
}

std::optional<std::size_t> FaceAlgebra::path_index(const Path& p) const {
  auto it = std::find(paths.begin(), paths.end(), p);
  if (it == paths.end()) return std::nullopt;
  return static_cast<std::size_t>(it - paths.begin());
}

FaceAlgebra face_algebra(const Quiver& q, FaceMode mode, const std::string& name) {
  FaceAlgebra f;
  f.quiver = std::make_shared<const Quiver>(q);
  f.mode = mode;
  std::optional<std::size_t> max_len;
  if (mode.truncation) max_len = *mode.truncation;
  f.paths = all_paths(q, max_len);

  std::vector<std::string> labels;
  std::vector<unsigned> degree;
  // Pairs grouped by length, row-major over Q_ℓ × Q_ℓ.
  std::size_t start = 0;
  while (start < f.paths.size()) {
    std::size_t len = f.paths[start].length();
    std::size_t stop = start;
    while (stop < f.paths.size() && f.paths[stop].length() == len) ++stop;
    for (std::size_t p = start; p < stop; ++p)
      for (std::size_t r = start; r < stop; ++r) {
        f.index[{p, r}] = f.pairs.size();
        f.pairs.emplace_back(p, r);
        labels.push_back("x[" + path_label(q, f.paths[p]) + "," + path_label(q, f.paths[r]) + "]");
        degree.push_back(static_cast<unsigned>(len));
      }
    start = stop;
  }
  Space H(std::move(labels));
  std::size_t n = H.dim();
  AlgebraData alg{H, LinearMap(tensor(H, H), H), {}, nullptr};
  if (mode.truncation) {
    auto t = std::make_shared<Truncation>();
    t->degree = degree;
    t->max_degree = *mode.truncation;
    alg.truncation = std::move(t);
  }
  CoalgebraData co{H, LinearMap(H, tensor(H, H)), LinearMap(H, Space::ground())};
  VectorBuilder one;
  for (std::size_t x = 0; x < n; ++x) {
    auto [p, r] = f.pairs[x];
    std::size_t len = f.paths[p].length();
    if (len == 0) one.add(x, 1);
    for (std::size_t y = 0; y < n; ++y) {
      if (!alg.product_defined(x, y)) continue;
      auto [p2, r2] = f.pairs[y];
      auto pp = concat(f.paths[p], f.paths[p2]);
      auto rr = concat(f.paths[r], f.paths[r2]);
      if (!pp || !rr) continue;
      alg.mult.set_column(x * n + y, SparseVector::unit(f.basis_of(*f.path_index(*pp), *f.path_index(*rr))));
    }
    VectorBuilder d;
    for (std::size_t t = 0; t < f.paths.size(); ++t)
      if (f.paths[t].length() == len) d.add(f.basis_of(p, t) * n + f.basis_of(t, r), 1);
    co.comult.set_column(x, d.build());
    if (p == r) co.counit.set_column(x, SparseVector::unit(0));
  }
  alg.unit = one.build();
  f.wba = std::make_shared<const WeakBialgebra>(name, std::move(alg), std::move(co));
  return f;
}

Quiver quiver_a(std::size_t n) {
  std::vector<std::string> vs;
  std::vector<Arrow> as;
  for (std::size_t i = 1; i <= n; ++i) vs.push_back(std::to_string(i));
  for (std::size_t i = 0; i + 1 < n; ++i) as.push_back({std::string(1, static_cast<char>('a' + i)), i, i + 1});
  return Quiver(std::move(vs), std::move(as));
}

Quiver quiver_two_cycle() { return Quiver({"1", "2"}, {{"p", 0, 1}, {"p*", 1, 0}}); }

Quiver quiver_vertices(std::size_t n) {
  std::vector<std::string> vs;
  for (std::size_t i = 1; i <= n; ++i) vs.push_back(std::to_string(i));
  return Quiver(std::move(vs), {});
}

}  // namespace wbalg
