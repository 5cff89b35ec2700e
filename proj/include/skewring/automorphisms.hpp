#ifndef SKEWRING_AUTOMORPHISMS_HPP
#define SKEWRING_AUTOMORPHISMS_HPP

#include <array>
#include <optional>
#include <vector>

#include "skewring/ring.hpp"

/**
 * The automorphism group of S = F_p[v]/(v^3 - v).
 *
 * Every automorphism fixes F_p and is determined by the image of v. There
 * are exactly six, numbered 1..6 in a fixed order (h = 1/2 in F_p):
 *
 *   1: a + bv + cv^2  ->  a + b v + c v^2
 *   2:                ->  a - b v + c v^2
 *   3:                ->  (a+b+c) - (b-c)h v - (3b+c)h v^2
 *   4:                ->  (a+b+c) + (b-c)h v - (3b+c)h v^2
 *   5:                ->  (a-b+c) + (b+c)h v + (3b-c)h v^2
 *   6:                ->  (a-b+c) - (b+c)h v + (3b-c)h v^2
 *
 * The closed forms are checked against a brute-force enumerator that knows
 * nothing about them: it searches all t with t^3 = t and keeps those whose
 * induced map a + b t + c t^2 is bijective and multiplicative.
 */
namespace skewring {

class AutomorphismId {
 public:
  /// Throws InvalidAutomorphismId unless 1 <= id <= 6.
  explicit AutomorphismId(int id);

  int value() const noexcept { return id_; }
  static AutomorphismId identity() { return AutomorphismId(1); }
  static std::array<AutomorphismId, 6> all();

  friend bool operator==(const AutomorphismId&, const AutomorphismId&) = default;
  friend auto operator<=>(const AutomorphismId&, const AutomorphismId&) = default;

 private:
  int id_;
};

inline constexpr int kAutomorphismCount = 6;

/// theta_id(v).
RingElement theta_image_of_v(AutomorphismId id, const PrimeModulus& p);

/// Closed-form evaluation of theta_id(z).
RingElement theta_apply(AutomorphismId id, const RingElement& z);

/// a + b t + c t^2 for z = a + b v + c v^2, i.e. the F_p-linear map sending
/// v to t and v^2 to t^2. A ring endomorphism iff t^3 = t.
RingElement theta_apply_via_image(const RingElement& t, const RingElement& z);

/// Two distinct elements with the same image; proves non-injectivity.
struct CollisionWitness {
  RingElement first;
  RingElement second;
};

struct EndomorphismCandidate {
  RingElement image_of_v;
  bool injective;
  std::optional<AutomorphismId> automorphism_id;
  std::optional<CollisionWitness> witness;  // set iff !injective
};

/// Every t in S with t^3 = t, sorted lexicographically, each annotated with
/// injectivity of v -> t. Found by scanning all p^3 elements.
std::vector<EndomorphismCandidate> enumerate_endomorphism_candidates(const PrimeModulus& p);

struct FoundAutomorphism {
  RingElement image_of_v;
  AutomorphismId id;
};

/// Bijective candidates, each verified multiplicative over all p^6 pairs and
/// matched to its closed form (pointwise over all of S). Sorted by image of v.
/// Throws InternalMismatch if a bijective candidate fails either check.
std::vector<FoundAutomorphism> enumerate_automorphisms_bruteforce(const PrimeModulus& p);

/// The id k with theta_i o theta_j = theta_k.
AutomorphismId compose(AutomorphismId i, AutomorphismId j, const PrimeModulus& p);

/// 6x6 composition table; entry (i, j) is compose(i, j).
class GroupTable {
 public:
  explicit GroupTable(const PrimeModulus& p);

  AutomorphismId at(AutomorphismId i, AutomorphismId j) const {
    return entries_[i.value() - 1][j.value() - 1];
  }
  /// Smallest k >= 1 with theta^k = identity (capped at the group order).
  int order(AutomorphismId id) const;
  AutomorphismId inverse(AutomorphismId id) const;
  bool is_abelian() const;

  friend bool operator==(const GroupTable&, const GroupTable&) = default;

 private:
  std::array<std::array<AutomorphismId, 6>, 6> entries_;
};

/// Table at p, cross-checked against the reference table at p = 3; throws
/// InternalMismatch if they differ.
GroupTable group_table(const PrimeModulus& p);
const GroupTable& reference_group_table();

/// Preimage of x + y v + z v^2 under theta_3:
/// (x - y + z) - ((y + z)/2) v + ((3y - z)/2) v^2.
RingElement onto_witness_theta3(Residue x, Residue y, Residue z, const PrimeModulus& p);

}  // namespace skewring

#endif  // SKEWRING_AUTOMORPHISMS_HPP
