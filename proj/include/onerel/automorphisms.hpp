#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "onerel/small_cancellation.hpp"
#include "onerel/words.hpp"

namespace onerel {

// An endomorphism of F_n, given by the images of x1..xn.
class Endomorphism {
 public:
  // Rank is images.size(); every image must have that rank.
  explicit Endomorphism(std::vector<Word> images);
  static Endomorphism identity(int rank);

  int rank() const noexcept { return static_cast<int>(images_.size()); }
  // 1-based.
  const Word& image(int index) const { return images_.at(static_cast<std::size_t>(index - 1)); }
  const std::vector<Word>& images() const noexcept { return images_; }
  bool is_identity() const;

  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;

 private:
  std::vector<Word> images_;
};

Word apply(const Endomorphism& e, const Word& w);
// (f o g)(x) = f(g(x)).
Endomorphism compose(const Endomorphism& f, const Endomorphism& g);

// An endomorphism together with a two-sided inverse that has been checked by
// composition.
class Automorphism {
 public:
  // Throws PreconditionError unless forward o inverse and inverse o forward
  // both fix every generator.
  Automorphism(Endomorphism forward, Endomorphism inverse);

  static Automorphism identity(int rank);

  int rank() const noexcept { return forward_.rank(); }
  const Endomorphism& forward() const noexcept { return forward_; }
  const Endomorphism& inverse_map() const noexcept { return inverse_; }
  Automorphism inverse() const { return Automorphism(inverse_, forward_, Trusted{}); }

  friend bool operator==(const Automorphism& a, const Automorphism& b) {
    return a.forward_ == b.forward_;
  }

 private:
  struct Trusted {};
  Automorphism(Endomorphism forward, Endomorphism inverse, Trusted)
      : forward_(std::move(forward)), inverse_(std::move(inverse)) {}
  friend Automorphism compose(const Automorphism&, const Automorphism&);

  Endomorphism forward_;
  Endomorphism inverse_;
};

Word apply(const Automorphism& a, const Word& w);
Automorphism compose(const Automorphism& f, const Automorphism& g);

// psi_{i,k}: x1 -> x1 xi^k, other generators fixed.  Requires 2 <= i <= rank.
Automorphism sweep(int rank, int i, long long k);

// x -> g x g^-1 for every generator.
Automorphism inner_by(const Word& g);

struct NotAnAutomorphism {
  // The image tuple after Nielsen reduction stalled.
  std::vector<Word> reduced_tuple;
};

using Certification = std::variant<Automorphism, NotAnAutomorphism>;

// Nielsen-reduces the image tuple.  The tuple is a basis iff it reduces to
// generators up to permutation and inversion; the recorded moves give the
// inverse.
Certification certify_automorphism(const Endomorphism& e);

// Column-major n x n integer matrix: column i is abelianize(e(x_i)).
class AbelianMatrix {
 public:
  explicit AbelianMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n * n), 0) {}
  static AbelianMatrix identity(int n);

  int size() const noexcept { return n_; }
  long long& operator()(int row, int col) { return entries_[static_cast<std::size_t>(col * n_ + row)]; }
  long long operator()(int row, int col) const {
    return entries_[static_cast<std::size_t>(col * n_ + row)];
  }
  long long determinant() const;

  friend bool operator==(const AbelianMatrix&, const AbelianMatrix&) = default;
  friend AbelianMatrix operator*(const AbelianMatrix& a, const AbelianMatrix& b);

 private:
  int n_;
  std::vector<long long> entries_;
};

AbelianMatrix abelian_matrix(const Endomorphism& e);

struct ConjugatorSearch {
  enum class Method {
    AbelianObstruction,  // matrix differs from the identity
    ConjugacyClass,      // image of x1 is not conjugate to x1
    CandidateSearch,     // exact search over g0 x1^k
  };
  std::optional<Word> conjugator;
  Method method = Method::CandidateSearch;
  std::size_t candidates_tried = 0;
  long long exponent_bound = 0;
};

ConjugatorSearch search_conjugator(const Automorphism& a);
// The unique g with a(x_i) = g x_i g^-1 for all i, if a is inner.
std::optional<Word> find_conjugator(const Automorphism& a);

struct KernelVerdict {
  enum class Kind { NotInStab, NotInKernel, InnerByR, InnerNotByR, NonInnerKernelElement };
  Kind kind = Kind::NotInStab;
  std::optional<Word> conjugator;  // for the two inner verdicts
  // For NotInKernel: the first generator whose image differs modulo R.
  std::optional<int> failing_generator;

  bool in_kernel() const {
    return kind == Kind::InnerByR || kind == Kind::InnerNotByR ||
           kind == Kind::NonInnerKernelElement;
  }
};

std::string_view to_string(KernelVerdict::Kind kind);

// Stab(R) test, then Ker(rho) test, then inner/non-inner split.  Throws
// NotSmallCancellation unless p satisfies C'(1/6).
KernelVerdict classify_kernel(const Automorphism& a, const Presentation& p);

enum class ExampleKind { NonorientablePhi, NonorientablePsi, OrientablePhi, OrientablePsi };

std::string_view to_string(ExampleKind kind);
// Accepts "nonorientable-phi", "nonorientable-psi", "orientable-phi",
// "orientable-psi" (and the short aliases "phi", "psi", "phi-o", "psi-o").
std::optional<ExampleKind> parse_example_kind(std::string_view text);

struct SurfaceExample {
  ExampleKind kind;
  int rank;
  int power;
  Word relator;  // base^power as written, before cyclic normalization
  Presentation presentation;
  Endomorphism map;
  // Empty when the map does not certify as an automorphism.
  std::optional<Automorphism> automorphism;
};

// Builds the surface-type relator (x1^2...xn^2)^p or ([x1,x2]...[x_{n-1},xn])^p
// and the kernel automorphism of the requested kind.  Throws
// PreconditionError for invalid parameters: the non-orientable kinds need
// n >= 2, the orientable ones an even n >= 4, and p >= 1.
SurfaceExample surface_example(ExampleKind kind, int rank, int power);

}  // namespace onerel
