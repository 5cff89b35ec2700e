#include "skewring/automorphisms.hpp"

#include <algorithm>
#include <sstream>
#include <string>

namespace skewring {

AutomorphismId::AutomorphismId(int id) : id_(id) {
  if (id < 1 || id > kAutomorphismCount) {
    throw InvalidAutomorphismId("automorphism id must be in 1..6, got " + std::to_string(id));
  }
}

std::array<AutomorphismId, 6> AutomorphismId::all() {
  return {AutomorphismId(1), AutomorphismId(2), AutomorphismId(3),
          AutomorphismId(4), AutomorphismId(5), AutomorphismId(6)};
}

RingElement theta_image_of_v(AutomorphismId id, const PrimeModulus& p) {
  return theta_apply(id, RingElement::v(p));
}

RingElement theta_apply(AutomorphismId id, const RingElement& z) {
  const auto& m = z.modulus();
  const auto h = m.half();
  const auto a = z.a(), b = z.b(), c = z.c();
  const auto three_b = m.mul(3 % m.value(), b);
  const auto sum = m.add(m.add(a, b), c);          // a + b + c
  const auto alternating = m.add(m.sub(a, b), c);  // a - b + c
  switch (id.value()) {
    case 1:
      return z;
    case 2:
      return {m, a, m.neg(b), c};
    case 3:
      return {m, sum, m.neg(m.mul(m.sub(b, c), h)), m.neg(m.mul(m.add(three_b, c), h))};
    case 4:
      return {m, sum, m.mul(m.sub(b, c), h), m.neg(m.mul(m.add(three_b, c), h))};
    case 5:
      return {m, alternating, m.mul(m.add(b, c), h), m.mul(m.sub(three_b, c), h)};
    case 6:
      return {m, alternating, m.neg(m.mul(m.add(b, c), h)), m.mul(m.sub(three_b, c), h)};
  }
  throw InvalidAutomorphismId("automorphism id out of range");
}

RingElement theta_apply_via_image(const RingElement& t, const RingElement& z) {
  const auto& m = z.modulus();
  return RingElement::scalar(m, z.a()) + scale(z.b(), t) + scale(z.c(), t * t);
}

namespace {

std::optional<AutomorphismId> match_image_of_v(const RingElement& t) {
  for (auto id : AutomorphismId::all()) {
    if (theta_image_of_v(id, t.modulus()) == t) return id;
  }
  return std::nullopt;
}

std::string literal(const RingElement& z) {
  std::ostringstream out;
  out << z.a() << ',' << z.b() << ',' << z.c();
  return out.str();
}

// Images of every element (in index order) under v -> t.
std::vector<RingElement> image_table(const RingElement& t, const std::vector<RingElement>& elements) {
  std::vector<RingElement> images;
  images.reserve(elements.size());
  for (const auto& z : elements) images.push_back(theta_apply_via_image(t, z));
  return images;
}

}  // namespace

std::vector<EndomorphismCandidate> enumerate_endomorphism_candidates(const PrimeModulus& p) {
  const auto elements = all_elements(p);
  std::vector<EndomorphismCandidate> out;
  // Elements are already in lexicographic order.
  for (const auto& t : elements) {
    if (t * t * t != t) continue;
    EndomorphismCandidate candidate{t, true, std::nullopt, std::nullopt};
    std::vector<std::size_t> first_preimage(elements.size(), elements.size());
    for (const auto& z : elements) {
      const auto image = theta_apply_via_image(t, z).index();
      if (first_preimage[image] != elements.size()) {
        candidate.injective = false;
        candidate.witness = CollisionWitness{elements[first_preimage[image]], z};
        break;
      }
      first_preimage[image] = z.index();
    }
    if (candidate.injective) candidate.automorphism_id = match_image_of_v(t);
    out.push_back(std::move(candidate));
  }
  return out;
}

std::vector<FoundAutomorphism> enumerate_automorphisms_bruteforce(const PrimeModulus& p) {
  const auto elements = all_elements(p);
  std::vector<FoundAutomorphism> out;
  for (const auto& candidate : enumerate_endomorphism_candidates(p)) {
    if (!candidate.injective) continue;
    const auto& t = candidate.image_of_v;
    const auto images = image_table(t, elements);
    for (const auto& z : elements) {
      for (const auto& w : elements) {
        if (images[(z * w).index()] != images[z.index()] * images[w.index()]) {
          throw InternalMismatch("bijection v -> " + literal(t) + " is not multiplicative at z = " + literal(z) +
                                 ", w = " + literal(w));
        }
      }
    }
    const auto id = match_image_of_v(t);
    if (!id) {
      throw InternalMismatch("automorphism v -> " + literal(t) + " matches no closed form");
    }
    for (const auto& z : elements) {
      if (images[z.index()] != theta_apply(*id, z)) {
        throw InternalMismatch("closed form " + std::to_string(id->value()) + " disagrees with v -> " + literal(t) +
                               " at " + literal(z));
      }
    }
    out.push_back({t, *id});
  }
  return out;
}

AutomorphismId compose(AutomorphismId i, AutomorphismId j, const PrimeModulus& p) {
  const auto image = theta_apply(i, theta_image_of_v(j, p));
  if (auto k = match_image_of_v(image)) return *k;
  throw InternalMismatch("composition " + std::to_string(i.value()) + " o " + std::to_string(j.value()) +
                         " is not one of the six automorphisms");
}

namespace {

std::array<std::array<AutomorphismId, 6>, 6> build_entries(const PrimeModulus& p) {
  std::array<std::array<AutomorphismId, 6>, 6> entries{AutomorphismId::all(), AutomorphismId::all(),
                                                       AutomorphismId::all(), AutomorphismId::all(),
                                                       AutomorphismId::all(), AutomorphismId::all()};
  for (auto i : AutomorphismId::all()) {
    for (auto j : AutomorphismId::all()) entries[i.value() - 1][j.value() - 1] = compose(i, j, p);
  }
  return entries;
}

}  // namespace

GroupTable::GroupTable(const PrimeModulus& p) : entries_(build_entries(p)) {}

int GroupTable::order(AutomorphismId id) const {
  auto power = id;
  for (int k = 1; k <= kAutomorphismCount; ++k) {
    if (power == AutomorphismId::identity()) return k;
    power = at(id, power);
  }
  throw InternalMismatch("automorphism " + std::to_string(id.value()) + " has no finite order within 6 steps");
}

AutomorphismId GroupTable::inverse(AutomorphismId id) const {
  for (auto j : AutomorphismId::all()) {
    if (at(id, j) == AutomorphismId::identity()) return j;
  }
  throw InternalMismatch("automorphism " + std::to_string(id.value()) + " has no inverse in the table");
}

bool GroupTable::is_abelian() const {
  for (auto i : AutomorphismId::all()) {
    for (auto j : AutomorphismId::all()) {
      if (at(i, j) != at(j, i)) return false;
    }
  }
  return true;
}

const GroupTable& reference_group_table() {
  static const GroupTable table(PrimeModulus(3));
  return table;
}

GroupTable group_table(const PrimeModulus& p) {
  GroupTable table(p);
  if (table != reference_group_table()) {
    throw InternalMismatch("composition table at p = " + std::to_string(p.value()) +
                           " differs from the table at p = 3");
  }
  return table;
}

RingElement onto_witness_theta3(Residue x, Residue y, Residue z, const PrimeModulus& p) {
  const auto h = p.half();
  x %= p.value();
  y %= p.value();
  z %= p.value();
  const auto three_y = p.mul(3 % p.value(), y);
  return {p, p.add(p.sub(x, y), z), p.neg(p.mul(p.add(y, z), h)), p.mul(p.sub(three_y, z), h)};
}

}  // namespace skewring
