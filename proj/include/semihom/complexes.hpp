#pragma once

// Explicit chain and cochain complexes computing H_n(S, V) and H^n(S, V)
// for a finite inverse monoid S and a left KS-module V.
//
// Degree-n spaces are direct sums over n-tuples of monoid elements, tuples in
// lexicographic order of element indices. The summand of a tuple is the image
// of the idempotent projector act(d(product)) (homology) or
// act(r(product)) (cohomology), with the pivot-column basis of that image.
// Homology tuples are written (s_n, ..., s_1), cohomology tuples
// (s_1, ..., s_n); in both cases the written order is the stored order.

#include "semihom/ks_module.hpp"
#include "semihom/sparse.hpp"

namespace semihom::monhom {

inline constexpr std::size_t kDefaultColumnCap = 50'000;

struct ChainComplexData {
  enum class Direction { Homological, Cohomological };

  Direction direction = Direction::Homological;
  FieldSpec field;
  std::size_t max_degree = 0;
  std::size_t monoid_size = 0;
  std::vector<std::size_t> space_dims;  // degrees 0..max_degree
  /// Homological: maps[n] is the boundary C_n -> C_{n-1} for n >= 1 (maps[0] is
  /// the zero map out of C_0). Cohomological: maps[n] is the coboundary
  /// C^n -> C^{n+1} for 0 <= n < max_degree.
  std::vector<SparseMatrix> maps;
  /// block_offsets[n][k] is the first coordinate of the k-th tuple's summand;
  /// block_offsets[n].back() == space_dims[n].
  std::vector<std::vector<std::size_t>> block_offsets;

  std::vector<Elt> tuple(std::size_t degree, std::size_t block) const;
  /// Every consecutive composite is exactly zero.
  bool composites_vanish() const;
};

ChainComplexData homology_complex(const KSModule& v, std::size_t max_degree,
                                  std::size_t column_cap = kDefaultColumnCap);
ChainComplexData cohomology_complex(const KSModule& v, std::size_t max_degree,
                                    std::size_t column_cap = kDefaultColumnCap);

/// Betti numbers for degrees 0..complex.max_degree - 1 (the top degree is
/// needed only for the incoming boundary).
std::vector<std::size_t> betti_numbers(const ChainComplexData& complex);

/// dim H_n(S, V) for n = 0..max_degree.
std::vector<std::size_t> homology(const KSModule& v, std::size_t max_degree,
                                  std::size_t column_cap = kDefaultColumnCap);
/// dim H^n(S, V) for n = 0..max_degree.
std::vector<std::size_t> cohomology(const KSModule& v, std::size_t max_degree,
                                    std::size_t column_cap = kDefaultColumnCap);

/// Free K-bases {t(s_1..s_n) : d(t) <= r(s_1...s_n)} of the projective
/// resolution P_n -> ... -> P_0 -> KE(S), its boundaries and the contracting
/// K-linear homotopy.
struct ResolutionComplex {
  struct Generator {
    Elt t;
    std::vector<Elt> tuple;
  };

  std::shared_ptr<const InverseMonoid> monoid;
  FieldSpec field;
  std::size_t max_degree = 0;
  /// bases[n] for n = 0..max_degree+1; KE(S) has the idempotent basis.
  std::vector<std::vector<Generator>> bases;
  /// boundary[n] = d_n : P_n -> P_{n-1}, n = 0..max_degree+1 (P_{-1} = KE(S)).
  std::vector<SparseMatrix> boundary;
  /// homotopy[n + 1] = sigma_n : P_n -> P_{n+1}, n = -1..max_degree.
  std::vector<SparseMatrix> homotopy;

  std::size_t dim(std::size_t n) const { return bases[n].size(); }
  /// d_n d_{n+1} = 0 for all stored n, including d_0 d_1.
  bool composites_vanish() const;
  /// d_0 sigma_{-1} = id and d_{n+1} sigma_n + sigma_{n-1} d_n = id for n <= max_degree.
  bool homotopy_identity_holds() const;
};

/// Throws CapError("size cap exceeded") if some P_n, n <= max_degree+1, has
/// more generators than the cap.
ResolutionComplex build_resolution(std::shared_ptr<const InverseMonoid> s, FieldSpec field,
                                   std::size_t max_degree, std::size_t column_cap = kDefaultColumnCap);

}  // namespace semihom::monhom
