#include "wbalg/instances.hpp"

#include <algorithm>

namespace wbalg {

namespace {

Path vertex_path(std::size_t v) { return Path{v, v, {}}; }

Path sub_path(const Quiver& q, const Path& p, std::size_t from, std::size_t to) {
  if (from == to) {
    std::size_t v = from == 0 ? p.source : q.arrows()[p.arrows[from - 1]].target;
    return vertex_path(v);
  }
  Path out{q.arrows()[p.arrows[from]].source, q.arrows()[p.arrows[to - 1]].target, {}};
  out.arrows.assign(p.arrows.begin() + static_cast<std::ptrdiff_t>(from),
                    p.arrows.begin() + static_cast<std::ptrdiff_t>(to));
  return out;
}

std::size_t require_path(const FaceAlgebra& f, const Path& p) {
  auto i = f.path_index(p);
  if (!i) throw InvalidQuiver("path " + path_label(*f.quiver, p) + " is not a basis path of the face algebra");
  return *i;
}

std::size_t find_path(const FaceAlgebra& f, const std::string& label) {
  for (std::size_t i = 0; i < f.paths.size(); ++i)
    if (path_label(*f.quiver, f.paths[i]) == label) return i;
  throw InvalidQuiver("no path " + label);
}

SparseVector reversed(const SparseVector& v, std::size_t n) {
  std::vector<Entry> es;
  for (const auto& e : v) es.push_back({n - 1 - e.index, e.value});
  std::reverse(es.begin(), es.end());
  return SparseVector::from_entries(std::move(es));
}

// Relation rows in reduced form, pivots at the highest original index.
struct Relations {
  std::size_t n;
  std::vector<SparseVector> rows;
  std::vector<std::size_t> pivots;

  void reset(const std::vector<SparseVector>& gens) {
    std::vector<SparseVector> rev;
    for (const auto& g : gens) rev.push_back(reversed(g, n));
    Echelon ech = row_reduce(std::move(rev));
    rows.clear();
    pivots.clear();
    for (std::size_t k = 0; k < ech.rows.size(); ++k) {
      rows.push_back(reversed(ech.rows[k], n));
      pivots.push_back(n - 1 - ech.pivots[k]);
    }
  }
  SparseVector normal_form(const SparseVector& v) const {
    SparseVector out = v;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      Scalar c = v.coefficient(pivots[k]);
      if (sgn(c) != 0) out -= c * rows[k];
    }
    return out;
  }
};

}  // namespace

Comodule path_comodule(const FaceAlgebra& f) {
  std::vector<std::string> labels;
  for (const auto& p : f.paths) labels.push_back(path_label(*f.quiver, p));
  Space kq(std::move(labels));
  std::size_t n = f.wba->dim();
  LinearMap rho(kq, tensor(kq, f.wba->space()));
  for (std::size_t p = 0; p < f.paths.size(); ++p) {
    VectorBuilder b;
    for (std::size_t q = 0; q < f.paths.size(); ++q)
      if (f.paths[q].length() == f.paths[p].length()) b.add(q * n + f.basis_of(q, p), 1);
    rho.set_column(p, b.build());
  }
  return Comodule("kQ", f.wba, std::move(kq), std::move(rho));
}

std::pair<ComoduleAlgebra, ComoduleCoalgebra> kq_comodule_instances(const FaceAlgebra& f) {
  Comodule m = path_comodule(f);
  const Space& s = m.space();
  std::size_t d = s.dim();
  LinearMap mult(tensor(s, s), s);
  VectorBuilder one;
  LinearMap comult(s, tensor(s, s));
  LinearMap counit(s, Space::ground());
  for (std::size_t i = 0; i < d; ++i) {
    const Path& p = f.paths[i];
    if (p.length() == 0) {
      one.add(i, 1);
      counit.set_column(i, SparseVector::unit(0));
    }
    for (std::size_t j = 0; j < d; ++j) {
      auto pq = concat(p, f.paths[j]);
      if (!pq) continue;
      if (auto k = f.path_index(*pq)) mult.set_column(i * d + j, SparseVector::unit(*k));
    }
    VectorBuilder b;
    for (std::size_t cut = 0; cut <= p.length(); ++cut) {
      std::size_t l = require_path(f, sub_path(*f.quiver, p, 0, cut));
      std::size_t r = require_path(f, sub_path(*f.quiver, p, cut, p.length()));
      b.add(l * d + r, 1);
    }
    comult.set_column(i, b.build());
  }
  return {ComoduleAlgebra{m, std::move(mult), one.build()}, ComoduleCoalgebra{m, std::move(comult), std::move(counit)}};
}

FaceQuotient face_algebra_quotient(const FaceAlgebra& f, const std::vector<Identification>& identifications,
                                   const std::string& name) {
  const WeakBialgebra& h = *f.wba;
  const AlgebraData& alg = h.algebra();
  std::size_t n = h.dim();

  std::map<std::size_t, std::vector<std::pair<Scalar, std::size_t>>> phi;
  for (const auto& id : identifications) {
    std::size_t p = require_path(f, id.path);
    auto& terms = phi[p];
    for (const auto& [c, q] : id.value) terms.emplace_back(c, require_path(f, q));
  }
  auto image = [&](std::size_t p) {
    auto it = phi.find(p);
    return it == phi.end() ? std::vector<std::pair<Scalar, std::size_t>>{{Scalar(1), p}} : it->second;
  };

  std::vector<SparseVector> gens;
  for (std::size_t x = 0; x < n; ++x) {
    auto [p, q] = f.pairs[x];
    if (!phi.count(p) && !phi.count(q)) continue;
    VectorBuilder b;
    b.add(x, 1);
    bool defined = true;
    for (const auto& [c, p2] : image(p))
      for (const auto& [d, q2] : image(q)) {
        auto it = f.index.find({p2, q2});
        if (it == f.index.end()) {
          defined = false;
          continue;
        }
        b.add(it->second, -c * d);
      }
    if (defined) gens.push_back(b.build());
  }

  // Close under multiplication by basis elements, skipping products outside the truncation.
  Relations rel{n, {}, {}};
  rel.reset(gens);
  std::size_t before = 0;
  while (rel.rows.size() != before) {
    before = rel.rows.size();
    std::vector<SparseVector> next = rel.rows;
    for (const auto& r : rel.rows)
      for (std::size_t x = 0; x < n; ++x)
        for (int side = 0; side < 2; ++side) {
          SparseVector ex = SparseVector::unit(x);
          auto prod = side == 0 ? try_multiply(alg, r, ex) : try_multiply(alg, ex, r);
          if (!prod) continue;
          SparseVector nf = rel.normal_form(*prod);
          if (!nf.is_zero()) next.push_back(std::move(nf));
        }
    rel.reset(next);
  }

  std::vector<char> is_pivot(n, 0);
  for (auto c : rel.pivots) is_pivot[c] = 1;
  std::vector<std::size_t> free;
  std::vector<std::size_t> pos(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) {
      pos[j] = free.size();
      free.push_back(j);
    }
  std::vector<std::string> labels;
  for (auto j : free) labels.push_back(h.space().label(j));
  Space qs(std::move(labels));
  std::size_t m = qs.dim();

  LinearMap proj(h.space(), qs);
  for (std::size_t j = 0; j < n; ++j) {
    VectorBuilder b;
    for (const auto& e : rel.normal_form(SparseVector::unit(j))) b.add(pos[e.index], e.value);
    proj.set_column(j, b.build());
  }
  LinearMap sect(qs, h.space());
  for (std::size_t k = 0; k < m; ++k) sect.set_column(k, SparseVector::unit(free[k]));

  AlgebraData qa{qs, LinearMap(tensor(qs, qs), qs), proj(h.one()), nullptr};
  bool closed = true;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (!alg.product_defined(free[a], free[b])) {
        closed = false;
        continue;
      }
      qa.mult.set_column(a * m + b, proj(alg.product(free[a], free[b])));
    }
  if (!closed) {
    auto t = std::make_shared<Truncation>();
    for (auto j : free) t->degree.push_back(alg.truncation->degree[j]);
    t->max_degree = alg.truncation->max_degree;
    qa.truncation = std::move(t);
  }
  CoalgebraData qc{qs, LinearMap(qs, tensor(qs, qs)), LinearMap(qs, Space::ground())};
  for (std::size_t k = 0; k < m; ++k) {
    qc.comult.set_column(k, apply_kron(proj, proj, h.comult().column(free[k])));
    qc.counit.set_column(k, h.counit().column(free[k]));
  }

  CheckReport rep;
  rep.subject = name;
  std::uint64_t bad_counit = 0, bad_coideal = 0;
  for (const auto& r : rel.rows) {
    if (sgn(h.counit_of(r)) != 0) ++bad_counit;
    if (!apply_kron(proj, proj, h.comult()(r)).is_zero()) ++bad_coideal;
  }
  rep.add(boolean_check("relations-counit", bad_counit == 0));
  rep.add(boolean_check("relations-coideal", bad_coideal == 0));
  rep.add_fact("dim", std::to_string(m));
  rep.add_fact("relations", std::to_string(rel.rows.size()));

  auto wba = std::make_shared<const WeakBialgebra>(name, std::move(qa), std::move(qc), Construction::unchecked);
  rep.merge(check_weak_bialgebra(*wba), "wba/");
  FaceQuotient out{std::move(wba), std::move(proj), std::move(sect), std::move(rel.rows), std::move(rep)};
  if (!out.report.passed()) throw QuotientNotWeakBialgebra(name + " is not a weak bialgebra", std::move(out));
  return out;
}

MatrixFrobeniusExample matrix_frobenius_example() {
  FaceAlgebra f = face_algebra(quiver_two_cycle(), FaceMode::truncated(2));
  auto path = [&](const std::string& l) { return f.paths[find_path(f, l)]; };
  FaceQuotient quot = face_algebra_quotient(
      f, {{path("p.p*"), {{Scalar(1), path("e_1")}}}, {path("p*.p"), {{Scalar(1), path("e_2")}}}}, "h(Q)/I");
  const WeakBialgebra& hq = *quot.wba;

  // E_11, E_12, E_21, E_22
  const std::vector<std::string> names = {"e_1", "p", "p*", "e_2"};
  Space a(names);
  LinearMap mult(tensor(a, a), a);
  LinearMap comult(a, tensor(a, a));
  LinearMap counit(a, Space::ground());
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      std::size_t ij = 2 * i + j;
      for (std::size_t l = 0; l < 2; ++l) mult.set_column(ij * 4 + 2 * j + l, SparseVector::unit(2 * i + l));
      VectorBuilder b;
      for (std::size_t k = 0; k < 2; ++k) b.add((2 * i + k) * 4 + 2 * k + j, 1);
      comult.set_column(ij, b.build());
      if (i == j) counit.set_column(ij, SparseVector::unit(0));
    }

  // ρ(a) = Σ_b b⊗x_{b,a} over paths of the same length, raw and in the quotient.
  std::size_t nq = hq.dim(), nr = f.wba->dim();
  LinearMap rho(a, tensor(a, hq.space()));
  LinearMap raw(a, tensor(a, f.wba->space()));
  for (std::size_t i = 0; i < 4; ++i) {
    std::size_t pi = find_path(f, names[i]);
    VectorBuilder b, r;
    for (std::size_t j = 0; j < 4; ++j) {
      std::size_t pj = find_path(f, names[j]);
      if (f.paths[pj].length() != f.paths[pi].length()) continue;
      std::size_t x = f.basis_of(pj, pi);
      b.add_kron(SparseVector::unit(j), quot.projection.column(x), nq);
      r.add(j * nr + x, 1);
    }
    rho.set_column(i, b.build());
    raw.set_column(i, r.build());
  }

  Comodule m("A", quot.wba, a, rho);
  ComoduleFrobenius frob{ComoduleAlgebra{m, mult, SparseVector::from_entries({{0, 1}, {3, 1}})},
                         ComoduleCoalgebra{m, comult, counit}};
  CheckReport rep = check_comodule_frobenius(frob);
  rep.subject = "Mat2 over " + hq.name();

  // ρ(x)ρ(y) in A⊗K for a coaction into K.
  auto product = [&](const LinearMap& co, const AlgebraData& k, std::size_t x, std::size_t y) {
    std::size_t dk = k.dim();
    VectorBuilder b;
    for (const auto& s : co.column(x))
      for (const auto& t : co.column(y)) {
        const SparseVector& ab = mult.column((s.index / dk) * 4 + t.index / dk);
        auto hk = try_multiply(k, SparseVector::unit(s.index % dk), SparseVector::unit(t.index % dk));
        if (!hk) throw TruncationOverflow("coaction product out of truncation");
        b.add(kron(ab, *hk, dk), s.value * t.value);
      }
    return b.build();
  };
  Space aq = tensor(a, hq.space());
  rep.add(equality_check("rho-p-rho-pstar", aq, product(rho, hq.algebra(), 1, 2), rho.column(0)));
  rep.add(equality_check("rho-pstar-rho-p", aq, product(rho, hq.algebra(), 2, 1), rho.column(3)));
  SparseVector raw_lhs = product(raw, f.wba->algebra(), 1, 2);
  if (!(raw_lhs == raw.column(0))) {
    Space ar = tensor(a, f.wba->space());
    rep.discrepancies.push_back(
        {"raw-face-algebra-coaction",
         "over h(Q) itself ρ(p)ρ(p*) ≠ ρ(e_1); equality needs x[p.p*,p.p*] = x[e_1,e_1], which holds in the quotient",
         Witness{{1, 2}, {"p", "p*"}, Tensor::from_vector(ar, raw_lhs), Tensor::from_vector(ar, raw.column(0))}});
  }
  rep.add_fact("quotient-dim", std::to_string(nq));
  return MatrixFrobeniusExample{std::move(quot), std::move(frob), std::move(rep)};
}

ComoduleFrobenius unit_object_instance(std::shared_ptr<const WeakBialgebra> h) {
  Comodule m = Comodule::unit_object(h);
  const Subspace& hs = h->source();
  LinearMap mult = structure_on(h->algebra(), hs.basis, hs.projection);
  SparseVector unit = hs.projection(h->one());
  const CoalgebraData& c = h->source_coalgebra();
  return ComoduleFrobenius{ComoduleAlgebra{m, std::move(mult), std::move(unit)},
                           ComoduleCoalgebra{m, c.comult, c.counit}};
}

}  // namespace wbalg
