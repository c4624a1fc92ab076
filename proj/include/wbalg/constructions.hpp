#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wbalg/weak_bialgebra.hpp"

namespace wbalg {

class InvalidQuiver : public Error {
 public:
  explicit InvalidQuiver(const std::string& what) : Error("InvalidQuiver", what) {}
};
class CyclicQuiver : public Error {
 public:
  explicit CyclicQuiver(const std::string& what) : Error("CyclicQuiver", what) {}
};
class InvalidGroupoid : public Error {
 public:
  explicit InvalidGroupoid(const std::string& what) : Error("InvalidGroupoid", what) {}
};
class NotAGroup : public Error {
 public:
  explicit NotAGroup(const std::string& what) : Error("NotAGroup", what) {}
};

struct Arrow {
  std::string name;
  std::size_t source;
  std::size_t target;
};

class Quiver {
 public:
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  bool acyclic() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

// A path as a sequence of arrows, composed left to right; trivial paths carry
// only their vertex.
struct Path {
  std::size_t source;
  std::size_t target;
  std::vector<std::size_t> arrows;

  std::size_t length() const noexcept { return arrows.size(); }
  friend bool operator==(const Path&, const Path&) = default;
};

std::vector<Path> paths_of_length(const Quiver& q, std::size_t length);
// All paths up to max_length (every path when nullopt; the quiver must then be acyclic), by length.
std::vector<Path> all_paths(const Quiver& q, std::optional<std::size_t> max_length);
// "e_<vertex>" for trivial paths, arrow names joined by "." otherwise.
std::string path_label(const Quiver& q, const Path& p);
std::optional<Path> concat(const Path& p, const Path& q);

// Finite groupoid with left-to-right composition: g·h is defined when t(g) = s(h).
class Groupoid {
 public:
  struct Morphism {
    std::string name;
    std::size_t source;
    std::size_t target;
  };

  // compose[g][h] must be set exactly when t(g) = s(h). Validates all axioms.
  Groupoid(std::vector<std::string> objects, std::vector<Morphism> morphisms,
           std::vector<std::vector<std::optional<std::size_t>>> compose, std::vector<std::size_t> identities,
           std::vector<std::size_t> inverses);

  static Groupoid pair_groupoid(std::size_t n);
  // Elements and a full multiplication table; throws NotAGroup.
  static Groupoid from_group(std::vector<std::string> elements, const std::vector<std::vector<std::size_t>>& table);
  static Groupoid disjoint_union(const Groupoid& a, const Groupoid& b);

  const std::vector<std::string>& objects() const noexcept { return objects_; }
  const std::vector<Morphism>& morphisms() const noexcept { return morphisms_; }
  std::optional<std::size_t> compose(std::size_t g, std::size_t h) const { return compose_[g][h]; }
  std::size_t identity(std::size_t object) const { return identities_.at(object); }
  std::size_t inverse(std::size_t g) const { return inverses_.at(g); }

 private:
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<std::vector<std::optional<std::size_t>>> compose_;
  std::vector<std::size_t> identities_;
  std::vector<std::size_t> inverses_;
};

struct GroupTable {
  std::vector<std::string> elements;
  std::vector<std::vector<std::size_t>> table;  // table[g][h] = g·h

  std::size_t identity() const;
  std::size_t inverse(std::size_t g) const;
};

// Throws NotAGroup with the failing axiom.
void validate(const GroupTable& g);
GroupTable cyclic_group(std::size_t n, const std::string& prefix = "g");
// Permutations of {1,2,3}; labels in one-line notation, product (στ)(i) = σ(τ(i)).
GroupTable symmetric_group_3();

WeakHopfAlgebra groupoid_algebra(const Groupoid& g, const std::string& name = "kG");
WeakHopfAlgebra group_algebra(const GroupTable& g, const std::string& name = "kG");
std::shared_ptr<const WeakBialgebra> path_algebra_wba(const Quiver& q, const std::string& name = "kQ");

struct FaceMode {
  std::optional<unsigned> truncation;  // nullopt: full algebra of an acyclic quiver
  static FaceMode full() { return {}; }
  static FaceMode truncated(unsigned degree) { return {degree}; }
};

struct FaceAlgebra {
  std::shared_ptr<const Quiver> quiver;
  std::vector<Path> paths;  // every path used, by length
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // basis index -> (p, q) in `paths`
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  FaceMode mode;
  std::shared_ptr<const WeakBialgebra> wba;

  std::size_t basis_of(std::size_t p, std::size_t q) const { return index.at({p, q}); }
  std::optional<std::size_t> path_index(const Path& p) const;
};

FaceAlgebra face_algebra(const Quiver& q, FaceMode mode, const std::string& name = "h(Q)");

// Common quivers.
Quiver quiver_a(std::size_t n);  // 1 → 2 → … → n, arrows a, b, c, …
Quiver quiver_two_cycle();       // 1 ⇄ 2 with p: 1 → 2, p*: 2 → 1
Quiver quiver_vertices(std::size_t n);

}  // namespace wbalg
