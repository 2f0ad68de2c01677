#include "onerel/automorphisms.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "onerel/errors.hpp"

namespace onerel {

namespace {

void check_rank(int a, int b) {
  if (a != b) {
    throw RankError("rank mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

// u_target <- u_target u_source^sign (right) or u_source^sign u_target (left).
struct NielsenMove {
  int target = 0;  // 0-based
  int source = 0;
  int sign = 1;
  bool right = true;
};

Word moved_word(const std::vector<Word>& tuple, const NielsenMove& m) {
  const Word factor = m.sign > 0 ? tuple[m.source] : invert(tuple[m.source]);
  return m.right ? tuple[m.target] * factor : factor * tuple[m.target];
}

// The elementary automorphism realizing `m` on the tuple: precomposing the
// tuple map with it performs the move.
Endomorphism as_endomorphism(const NielsenMove& m, int rank) {
  std::vector<Word> images;
  for (int i = 1; i <= rank; ++i) images.push_back(Word::generator(i, rank));
  const Word factor = power(Word::generator(m.source + 1, rank), m.sign);
  auto& t = images[static_cast<std::size_t>(m.target)];
  t = m.right ? t * factor : factor * t;
  return Endomorphism(std::move(images));
}

std::vector<NielsenMove> all_moves(int rank) {
  std::vector<NielsenMove> out;
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) {
      if (i == j) continue;
      for (int sign : {1, -1}) {
        for (bool right : {true, false}) out.push_back({i, j, sign, right});
      }
    }
  }
  return out;
}

// Largest length decrease over single moves; ties keep the earliest move.
std::optional<NielsenMove> best_reducing_move(const std::vector<Word>& tuple,
                                              const std::vector<NielsenMove>& moves) {
  std::optional<NielsenMove> best;
  std::size_t best_gain = 0;
  for (const auto& m : moves) {
    const std::size_t before = tuple[m.target].size();
    const std::size_t after = moved_word(tuple, m).size();
    if (after < before && before - after > best_gain) {
      best_gain = before - after;
      best = m;
    }
  }
  return best;
}

// Breadth-first search through tuples of the same total length, looking for
// one that admits a length-reducing move.  Nielsen's reduction theory
// guarantees such a path exists whenever the tuple is a basis that is not yet
// a tuple of letters.
constexpr std::size_t kLevelSearchLimit = 200000;

std::optional<std::vector<NielsenMove>> level_search(const std::vector<Word>& start,
                                                     const std::vector<NielsenMove>& moves) {
  std::map<std::vector<Word>, std::pair<std::vector<Word>, NielsenMove>> parent;
  std::deque<std::vector<Word>> queue{start};
  parent.emplace(start, std::make_pair(start, NielsenMove{}));
  while (!queue.empty()) {
    std::vector<Word> cur = std::move(queue.front());
    queue.pop_front();
    if (best_reducing_move(cur, moves)) {
      std::vector<NielsenMove> path;
      while (cur != start) {
        const auto& [prev, move] = parent.at(cur);
        path.push_back(move);
        cur = prev;
      }
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (const auto& m : moves) {
      Word w = moved_word(cur, m);
      if (w.size() != cur[m.target].size()) continue;
      std::vector<Word> next = cur;
      next[m.target] = std::move(w);
      if (parent.contains(next)) continue;
      if (parent.size() >= kLevelSearchLimit) {
        throw Error("Nielsen reduction exceeded the level-set search limit");
      }
      parent.emplace(next, std::make_pair(cur, m));
      queue.push_back(std::move(next));
    }
  }
  return std::nullopt;
}

bool is_letter_basis(const std::vector<Word>& tuple) {
  std::vector<bool> seen(tuple.size(), false);
  for (const auto& w : tuple) {
    if (w.size() != 1) return false;
    auto idx = static_cast<std::size_t>(w.front().index - 1);
    if (seen[idx]) return false;
    seen[idx] = true;
  }
  return true;
}

Word gen_word(int i, int rank) { return Word::generator(i, rank); }

}  // namespace

Endomorphism::Endomorphism(std::vector<Word> images) : images_(std::move(images)) {
  for (const auto& w : images_) check_rank(w.rank(), rank());
}

Endomorphism Endomorphism::identity(int rank) {
  std::vector<Word> images;
  for (int i = 1; i <= rank; ++i) images.push_back(gen_word(i, rank));
  return Endomorphism(std::move(images));
}

bool Endomorphism::is_identity() const { return *this == identity(rank()); }

Word apply(const Endomorphism& e, const Word& w) {
  check_rank(e.rank(), w.rank());
  std::vector<Letter> raw;
  for (Letter l : w) {
    const Word& img = e.image(l.index);
    if (l.sign > 0) {
      raw.insert(raw.end(), img.begin(), img.end());
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) {
        raw.push_back(it->inverse());
      }
    }
  }
  return Word(raw, w.rank());
}

Endomorphism compose(const Endomorphism& f, const Endomorphism& g) {
  check_rank(f.rank(), g.rank());
  std::vector<Word> images;
  images.reserve(g.images().size());
  for (const auto& w : g.images()) images.push_back(apply(f, w));
  return Endomorphism(std::move(images));
}

Automorphism::Automorphism(Endomorphism forward, Endomorphism inverse)
    : forward_(std::move(forward)), inverse_(std::move(inverse)) {
  check_rank(forward_.rank(), inverse_.rank());
  if (!compose(forward_, inverse_).is_identity() || !compose(inverse_, forward_).is_identity()) {
    throw PreconditionError("maps are not mutually inverse");
  }
}

Automorphism Automorphism::identity(int rank) {
  return Automorphism(Endomorphism::identity(rank), Endomorphism::identity(rank), Trusted{});
}

Word apply(const Automorphism& a, const Word& w) { return apply(a.forward(), w); }

Automorphism compose(const Automorphism& f, const Automorphism& g) {
  return Automorphism(compose(f.forward(), g.forward()), compose(g.inverse_map(), f.inverse_map()),
                      Automorphism::Trusted{});
}

Automorphism sweep(int rank, int i, long long k) {
  if (i < 2 || i > rank) {
    throw RankError("sweep index " + std::to_string(i) + " outside [2, " + std::to_string(rank) + "]");
  }
  auto build = [&](long long exponent) {
    std::vector<Word> images;
    for (int j = 1; j <= rank; ++j) images.push_back(gen_word(j, rank));
    images[0] = images[0] * power(gen_word(i, rank), exponent);
    return Endomorphism(std::move(images));
  };
  return Automorphism(build(k), build(-k));
}

Automorphism inner_by(const Word& g) {
  auto build = [](const Word& c) {
    std::vector<Word> images;
    for (int j = 1; j <= c.rank(); ++j) images.push_back(conjugate(gen_word(j, c.rank()), c));
    return Endomorphism(std::move(images));
  };
  return Automorphism(build(g), build(invert(g)));
}

Certification certify_automorphism(const Endomorphism& e) {
  const int n = e.rank();
  const auto moves = all_moves(n);
  std::vector<Word> tuple = e.images();
  Endomorphism applied = Endomorphism::identity(n);

  auto perform = [&](const NielsenMove& m) {
    tuple[m.target] = moved_word(tuple, m);
    applied = compose(applied, as_endomorphism(m, n));
  };

  for (;;) {
    if (std::any_of(tuple.begin(), tuple.end(), [](const Word& w) { return w.empty(); })) {
      return NotAnAutomorphism{tuple};
    }
    if (auto m = best_reducing_move(tuple, moves)) {
      perform(*m);
      continue;
    }
    if (is_letter_basis(tuple)) break;
    auto path = level_search(tuple, moves);
    if (!path) return NotAnAutomorphism{tuple};
    for (const auto& m : *path) perform(m);
  }

  // e o applied = sigma with sigma(x_i) = tuple[i], a signed permutation.
  std::vector<Word> sigma_inverse(static_cast<std::size_t>(n), Word(n));
  for (int i = 0; i < n; ++i) {
    const Letter l = tuple[static_cast<std::size_t>(i)].front();
    sigma_inverse[static_cast<std::size_t>(l.index - 1)] = power(gen_word(i + 1, n), l.sign);
  }
  return Automorphism(e, compose(applied, Endomorphism(std::move(sigma_inverse))));
}

AbelianMatrix AbelianMatrix::identity(int n) {
  AbelianMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

AbelianMatrix operator*(const AbelianMatrix& a, const AbelianMatrix& b) {
  check_rank(a.size(), b.size());
  AbelianMatrix out(a.size());
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) {
      long long s = 0;
      for (int k = 0; k < a.size(); ++k) s += a(i, k) * b(k, j);
      out(i, j) = s;
    }
  }
  return out;
}

long long AbelianMatrix::determinant() const {
  // Fraction-free Bareiss elimination; exact on integers.
  if (n_ == 0) return 1;
  std::vector<__int128> m(entries_.begin(), entries_.end());
  auto at = [&](int r, int c) -> __int128& { return m[static_cast<std::size_t>(c * n_ + r)]; };
  int sign = 1;
  __int128 prev = 1;
  for (int k = 0; k < n_ - 1; ++k) {
    if (at(k, k) == 0) {
      int swap_row = k + 1;
      while (swap_row < n_ && at(swap_row, k) == 0) ++swap_row;
      if (swap_row == n_) return 0;
      for (int c = 0; c < n_; ++c) std::swap(at(k, c), at(swap_row, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n_; ++i) {
      for (int j = k + 1; j < n_; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      }
    }
    prev = at(k, k);
  }
  return static_cast<long long>(sign * at(n_ - 1, n_ - 1));
}

AbelianMatrix abelian_matrix(const Endomorphism& e) {
  AbelianMatrix m(e.rank());
  for (int col = 0; col < e.rank(); ++col) {
    const auto v = abelianize(e.image(col + 1));
    for (int row = 0; row < e.rank(); ++row) m(row, col) = v.sums[static_cast<std::size_t>(row)];
  }
  return m;
}

ConjugatorSearch search_conjugator(const Automorphism& a) {
  const int n = a.rank();
  ConjugatorSearch out;
  if (abelian_matrix(a.forward()) != AbelianMatrix::identity(n)) {
    out.method = ConjugatorSearch::Method::AbelianObstruction;
    return out;
  }
  const Word x1 = gen_word(1, n);
  const CyclicReduction cr = cyclic_reduce(a.forward().image(1));
  if (cr.reduced != x1) {
    out.method = ConjugatorSearch::Method::ConjugacyClass;
    return out;
  }
  out.method = ConjugatorSearch::Method::CandidateSearch;
  const Word& g0 = cr.conjugator;
  if (n == 1) {
    out.conjugator = g0;
    out.candidates_tried = 1;
    return out;
  }

  // a(x1) = g0 x1 g0^-1 pins g down to g0 x1^k.  For such g the reduced
  // length of g x2 g^-1 is at least 2|k| + 1 - 2|g0|, and it must equal
  // |a(x2)|, so |k| <= |a(x2)|/2 + |g0| < the bound below.
  const auto bound = static_cast<long long>(a.forward().image(2).size() + g0.size() + 2);
  out.exponent_bound = bound;
  for (long long step = 0; step <= 2 * bound; ++step) {
    const long long k = step % 2 == 0 ? step / 2 : -(step + 1) / 2;
    const Word g = g0 * power(x1, k);
    ++out.candidates_tried;
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i) {
      ok = conjugate(gen_word(i, n), g) == a.forward().image(i);
    }
    if (ok) {
      out.conjugator = g;
      return out;
    }
  }
  return out;
}

std::optional<Word> find_conjugator(const Automorphism& a) { return search_conjugator(a).conjugator; }

std::string_view to_string(KernelVerdict::Kind kind) {
  switch (kind) {
    case KernelVerdict::Kind::NotInStab: return "NotInStab";
    case KernelVerdict::Kind::NotInKernel: return "NotInKernel";
    case KernelVerdict::Kind::InnerByR: return "InnerByR";
    case KernelVerdict::Kind::InnerNotByR: return "InnerNotByR";
    case KernelVerdict::Kind::NonInnerKernelElement: return "NonInnerKernelElement";
  }
  return "?";
}

KernelVerdict classify_kernel(const Automorphism& a, const Presentation& p) {
  check_rank(a.rank(), p.rank());
  if (!certify_c_prime(p, Rational(1, 6))) {
    throw NotSmallCancellation("relator " + to_string(p.relator_word()) +
                               " does not satisfy C'(1/6); kernel classification needs Dehn membership");
  }
  KernelVerdict v;
  const Word& r = p.relator_word();
  if (!in_normal_closure(apply(a.forward(), r), p) || !in_normal_closure(apply(a.inverse_map(), r), p)) {
    v.kind = KernelVerdict::Kind::NotInStab;
    return v;
  }
  for (int i = 1; i <= a.rank(); ++i) {
    const Word x = gen_word(i, a.rank());
    if (!in_normal_closure(apply(a.forward(), x) * invert(x), p)) {
      v.kind = KernelVerdict::Kind::NotInKernel;
      v.failing_generator = i;
      return v;
    }
  }
  if (auto g = find_conjugator(a)) {
    v.kind = in_normal_closure(*g, p) ? KernelVerdict::Kind::InnerByR
                                      : KernelVerdict::Kind::InnerNotByR;
    v.conjugator = std::move(g);
  } else {
    v.kind = KernelVerdict::Kind::NonInnerKernelElement;
  }
  return v;
}

std::string_view to_string(ExampleKind kind) {
  switch (kind) {
    case ExampleKind::NonorientablePhi: return "nonorientable-phi";
    case ExampleKind::NonorientablePsi: return "nonorientable-psi";
    case ExampleKind::OrientablePhi: return "orientable-phi";
    case ExampleKind::OrientablePsi: return "orientable-psi";
  }
  return "?";
}

std::optional<ExampleKind> parse_example_kind(std::string_view text) {
  if (text == "nonorientable-phi" || text == "phi") return ExampleKind::NonorientablePhi;
  if (text == "nonorientable-psi" || text == "psi") return ExampleKind::NonorientablePsi;
  if (text == "orientable-phi" || text == "phi-o") return ExampleKind::OrientablePhi;
  if (text == "orientable-psi" || text == "psi-o") return ExampleKind::OrientablePsi;
  return std::nullopt;
}

SurfaceExample surface_example(ExampleKind kind, int rank, int power_p) {
  const bool orientable = kind == ExampleKind::OrientablePhi || kind == ExampleKind::OrientablePsi;
  if (power_p < 1) throw PreconditionError("relator power must be at least 1");
  if (orientable && (rank < 4 || rank % 2 != 0)) {
    throw PreconditionError("orientable examples need an even rank >= 4, got " + std::to_string(rank));
  }
  if (!orientable && rank < 2) {
    throw PreconditionError("non-orientable examples need rank >= 2, got " + std::to_string(rank));
  }

  const int n = rank;
  auto x = [n](int i) { return gen_word(i, n); };
  Word base(n);
  if (orientable) {
    for (int i = 1; i < n; i += 2) base = base * commutator(x(i), x(i + 1));
  } else {
    for (int i = 1; i <= n; ++i) base = base * power(x(i), 2);
  }
  const Word r = power(base, power_p);
  const Word r_inv = invert(r);

  std::vector<Word> images;
  for (int i = 1; i <= n; ++i) images.push_back(x(i));
  switch (kind) {
    case ExampleKind::NonorientablePhi:
      // x1 -> x1 * (r^-1)^(x1^-2)
      images[0] = x(1) * conjugate(r_inv, power(x(1), -2));
      break;
    case ExampleKind::NonorientablePsi: {
      // x1 -> (r^-1)^(x1^-2) x1 (r^-1)^(xn^-2) r^(x1^-2),
      // xn -> (r^-1)^(x1^-2) xn r^(x1^-2)
      const Word s = conjugate(r_inv, power(x(1), -2));
      images[0] = s * x(1) * conjugate(r_inv, power(x(n), -2)) * invert(s);
      images[static_cast<std::size_t>(n - 1)] = conjugate(x(n), s);
      break;
    }
    case ExampleKind::OrientablePhi:
      images[0] = x(1) * r;
      break;
    case ExampleKind::OrientablePsi: {
      // x1 -> r^[x2,x1] x1, x2 -> x2^(r^[x2,x1])
      const Word s = conjugate(r, commutator(x(2), x(1)));
      images[0] = s * x(1);
      images[1] = conjugate(x(2), s);
      break;
    }
  }
  Endomorphism map(std::move(images));
  std::optional<Automorphism> automorphism;
  Certification cert = certify_automorphism(map);
  if (auto* a = std::get_if<Automorphism>(&cert)) automorphism = *a;
  return SurfaceExample{kind, n, power_p, r, Presentation(r), std::move(map), std::move(automorphism)};
}

}  // namespace onerel
