#include "kpush/random.hpp"

#include <algorithm>
#include <numeric>

namespace kpush {

int RandomSource::uniform(int lo, int hi) {
  if (hi < lo) throw InvalidArgument("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  // Rejection sampling removes the modulo bias.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return static_cast<int>(static_cast<std::int64_t>(lo) + static_cast<std::int64_t>(x % span));
}

LaurentPolynomial random_laurent(RandomSource& rng, const TablePtr& table, const std::vector<Var>& residue_vars,
                                 const std::vector<Var>& params, const RandomPolyOptions& options) {
  const int terms = rng.uniform(options.min_terms, options.max_terms);
  std::vector<Term> out;
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    for (Var v : residue_vars) m.set(v, rng.uniform(-options.max_exponent, options.max_exponent));
    for (Var v : params) {
      // Probability drawn on a 1/1000 grid.
      if (rng.uniform(0, 999) < static_cast<int>(options.param_probability * 1000)) {
        m.set(v, rng.uniform(-options.max_param_exponent, options.max_param_exponent));
      }
    }
    int c = rng.uniform(1, options.max_coeff);
    if (rng.coin()) c = -c;
    out.push_back({m, c});
  }
  return LaurentPolynomial::from_terms(table, std::move(out));
}

namespace {

using Images = std::vector<Monomial>;

// Every permutation of the residue variables in [from, to), applied on top of
// each existing map.
std::vector<Images> with_permutations(const std::vector<Images>& maps, const std::vector<Var>& vars, int from, int to) {
  std::vector<Images> out;
  std::vector<int> perm(to - from);
  std::iota(perm.begin(), perm.end(), from);
  for (const auto& base : maps) {
    auto p = perm;
    do {
      Images img = base;
      for (int i = from; i < to; ++i) img[i] = base[p[i - from]];
      out.push_back(std::move(img));
    } while (std::next_permutation(p.begin(), p.end()));
  }
  (void)vars;
  return out;
}

}  // namespace

LaurentPolynomial random_admissible(RandomSource& rng, const SpaceDescriptor& space, const RandomPolyOptions& options) {
  const TablePtr table = space.table();
  const auto zs = table->variables_of(VarClass::residue);
  const auto ts = table->variables_of(VarClass::parameter);
  const LaurentPolynomial base = random_laurent(rng, table, zs, ts, options);
  const int r = static_cast<int>(zs.size());

  Images identity;
  for (Var v : zs) identity.push_back(Monomial::of(v));
  std::vector<Images> group{identity};
  switch (space.kind) {
    case SpaceKind::grassmannian:
    case SpaceKind::lagrangian:
    case SpaceKind::orthogonal_even:
    case SpaceKind::orthogonal_odd:
    case SpaceKind::g2p2: group = with_permutations(group, zs, 0, r); break;
    case SpaceKind::grassmannian_two_sets:
      group = with_permutations(group, zs, 0, space.m);
      group = with_permutations(group, zs, space.m, r);
      break;
    case SpaceKind::quadric: {
      group = with_permutations(group, zs, 1, r);
      for (int i = 1; i < r; ++i) {
        std::vector<Images> signed_maps;
        for (const auto& g : group) {
          signed_maps.push_back(g);
          Images flipped = g;
          flipped[i] = flipped[i].inverse();
          signed_maps.push_back(std::move(flipped));
        }
        group = std::move(signed_maps);
      }
      break;
    }
    case SpaceKind::full_flag:
    case SpaceKind::g2b: break;
  }
  LaurentPolynomial out(table);
  for (const auto& images : group) {
    MonomialMap map = MonomialMap::identity(table, table);
    for (int i = 0; i < r; ++i) map.set(zs[i], images[i]);
    out += map.apply(base);
  }
  return out;
}

}  // namespace kpush
