#include "kpush/spaces.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "kpush/g2.hpp"

namespace kpush {

std::string to_string(FormulaVariant v) {
  switch (v) {
    case FormulaVariant::full: return "full";
    case FormulaVariant::compact: return "compact";
    case FormulaVariant::sharp: return "sharp";
    case FormulaVariant::simplified: return "simplified";
  }
  return "?";
}

FormulaVariant parse_variant(std::string_view s) {
  if (s == "full") return FormulaVariant::full;
  if (s == "compact") return FormulaVariant::compact;
  if (s == "sharp") return FormulaVariant::sharp;
  if (s == "simplified") return FormulaVariant::simplified;
  throw InvalidArgument("unknown formula variant '" + std::string(s) + "'");
}

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidArgument("bad space descriptor '" + std::string(whole) + "'");
  }
  return value;
}

struct KindName {
  SpaceKind kind;
  const char* name;
  int arity;
};

constexpr KindName kKindNames[] = {
    {SpaceKind::grassmannian, "gr", 2},         {SpaceKind::grassmannian_two_sets, "gr2", 2},
    {SpaceKind::lagrangian, "lg", 1},           {SpaceKind::orthogonal_even, "ogE", 1},
    {SpaceKind::orthogonal_odd, "ogO", 1},      {SpaceKind::full_flag, "fl", 1},
    {SpaceKind::quadric, "q", 1},               {SpaceKind::g2p2, "g2p2", 0},
    {SpaceKind::g2b, "g2b", 0},
};

const KindName& kind_name(SpaceKind kind) {
  for (const auto& k : kKindNames) {
    if (k.kind == kind) return k;
  }
  throw InvalidArgument("unknown space kind");
}

std::vector<std::vector<int>> subsets_of_size(int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(current.size()) == m) {
      out.push_back(current);
      return;
    }
    for (int i = start; i < n; ++i) {
      current.push_back(i);
      self(self, i + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

Monomial tvar(const TablePtr& table, int i) { return Monomial::of(table->at("t" + std::to_string(i + 1))); }
Var zvar(const TablePtr& table, int i) { return table->at("z" + std::to_string(i + 1)); }

CharacterList z_list(const TablePtr& table, int from, int to) {
  CharacterList out(table);
  for (int i = from; i < to; ++i) out.push_back(Monomial::of(zvar(table, i)));
  return out;
}

std::vector<Var> z_vars(const TablePtr& table, int count) {
  std::vector<Var> out;
  for (int i = 0; i < count; ++i) out.push_back(zvar(table, i));
  return out;
}

FixedPoint make_point(const TablePtr& table, const std::vector<Monomial>& images, CharacterList tangent) {
  MonomialMap map = MonomialMap::identity(table, table);
  for (std::size_t i = 0; i < images.size(); ++i) map.set(zvar(table, static_cast<int>(i)), images[i]);
  return FixedPoint{std::move(map), std::move(tangent)};
}

// W = A u (A°)^-1 in index order: t_i for i in A, 1/t_i otherwise.
std::vector<Monomial> isotropic_images(const TablePtr& table, int n, unsigned mask) {
  std::vector<Monomial> w;
  for (int i = 0; i < n; ++i) w.push_back((mask >> i) & 1u ? tvar(table, i) : tvar(table, i).inverse());
  return w;
}

Rational factorial(int k) {
  Rational r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

// Factors (1 - z/c) for z in zs, c in chars: the denominator [chars / Z].
CharacterList denominators(const CharacterList& zs, const CharacterList& chars) {
  return quotient(zs, chars);
}

MonomialMap transposition(const TablePtr& table, int i, int j) {
  MonomialMap map = MonomialMap::identity(table, table);
  map.set(zvar(table, i), Monomial::of(zvar(table, j)));
  map.set(zvar(table, j), Monomial::of(zvar(table, i)));
  return map;
}

void require_invariant(const LaurentPolynomial& f, const MonomialMap& map, const std::string& what) {
  if (!(map.apply(f) == f)) throw SymmetryViolation("f is not invariant under " + what);
}

void require_symmetric_block(const LaurentPolynomial& f, int from, int to) {
  const auto& table = f.table();
  for (int i = from; i + 1 < to; ++i) {
    require_invariant(f, transposition(table, i, i + 1),
                      "the swap of " + table->name(zvar(table, i)) + " and " + table->name(zvar(table, i + 1)));
  }
}

}  // namespace

SpaceDescriptor SpaceDescriptor::parse(std::string_view s) {
  const auto colon = s.find(':');
  const std::string_view head = s.substr(0, colon);
  for (const auto& k : kKindNames) {
    if (head != k.name) continue;
    SpaceDescriptor d{k.kind, 0, k.kind == SpaceKind::g2p2 || k.kind == SpaceKind::g2b ? 2 : 0};
    if (k.arity == 0) {
      if (colon != std::string_view::npos) throw InvalidArgument("space '" + std::string(head) + "' takes no parameters");
    } else {
      if (colon == std::string_view::npos) throw InvalidArgument("space '" + std::string(s) + "' needs parameters");
      const std::string_view args = s.substr(colon + 1);
      const auto comma = args.find(',');
      if (k.arity == 2) {
        if (comma == std::string_view::npos) throw InvalidArgument("space '" + std::string(s) + "' needs m,n");
        d.m = parse_int(args.substr(0, comma), s);
        d.n = parse_int(args.substr(comma + 1), s);
      } else {
        if (comma != std::string_view::npos) throw InvalidArgument("space '" + std::string(s) + "' takes one parameter");
        d.n = parse_int(args, s);
      }
    }
    d.validate();
    return d;
  }
  throw InvalidArgument("unknown space '" + std::string(s) + "'");
}

std::string SpaceDescriptor::to_string() const {
  const auto& k = kind_name(kind);
  switch (k.arity) {
    case 0: return k.name;
    case 1: return std::string(k.name) + ":" + std::to_string(n);
    default: return std::string(k.name) + ":" + std::to_string(m) + "," + std::to_string(n);
  }
}

void SpaceDescriptor::validate() const {
  switch (kind) {
    case SpaceKind::grassmannian:
    case SpaceKind::grassmannian_two_sets:
      if (m < 1 || m >= n) throw InvalidArgument("Grassmannian needs 1 <= m < n");
      break;
    case SpaceKind::g2p2:
    case SpaceKind::g2b:
      if (n != 2) throw InvalidArgument("G2 spaces have rank 2");
      break;
    case SpaceKind::quadric:
      if (n < 2) throw InvalidArgument("quadric needs n >= 2");
      break;
    default:
      if (n < 1) throw InvalidArgument("space needs n >= 1");
  }
  // Tables are limited to kMaxVariables symbols.
  if (residue_count() + parameter_count() > static_cast<int>(kMaxVariables)) throw InvalidArgument("space too large");
}

int SpaceDescriptor::dimension() const {
  switch (kind) {
    case SpaceKind::grassmannian:
    case SpaceKind::grassmannian_two_sets: return m * (n - m);
    case SpaceKind::lagrangian: return n * (n + 1) / 2;
    case SpaceKind::orthogonal_even: return n * (n - 1) / 2;
    case SpaceKind::orthogonal_odd: return n * (n + 1) / 2;
    case SpaceKind::full_flag: return n * (n - 1) / 2;
    case SpaceKind::quadric: return 2 * n - 2;
    case SpaceKind::g2p2: return 5;
    case SpaceKind::g2b: return 6;
  }
  return 0;
}

int SpaceDescriptor::residue_count() const {
  switch (kind) {
    case SpaceKind::grassmannian: return m;
    case SpaceKind::g2p2:
    case SpaceKind::g2b: return 2;
    default: return n;
  }
}

int SpaceDescriptor::parameter_count() const { return n; }

TablePtr SpaceDescriptor::table() const {
  if (kind == SpaceKind::g2p2 || kind == SpaceKind::g2b) return g2_table();
  return VariableTable::standard(residue_count(), parameter_count());
}

std::vector<FormulaVariant> SpaceDescriptor::variants() const {
  switch (kind) {
    case SpaceKind::grassmannian:
    case SpaceKind::grassmannian_two_sets: return {FormulaVariant::full, FormulaVariant::compact};
    case SpaceKind::orthogonal_odd: return {FormulaVariant::sharp, FormulaVariant::simplified};
    default: return {FormulaVariant::full};
  }
}

std::vector<FixedPoint> fixed_points(const SpaceDescriptor& space) {
  space.validate();
  const TablePtr table = space.table();
  const int n = space.n;
  std::vector<FixedPoint> out;
  CharacterList all_t = standard_set(table, StandardSet::T, n);

  switch (space.kind) {
    case SpaceKind::grassmannian:
    case SpaceKind::grassmannian_two_sets: {
      for (const auto& subset : subsets_of_size(n, space.m)) {
        CharacterList a(table);
        for (int i : subset) a.push_back(tvar(table, i));
        CharacterList rest = complement(a, all_t);
        std::vector<Monomial> images(a.begin(), a.end());
        if (space.kind == SpaceKind::grassmannian_two_sets) images.insert(images.end(), rest.begin(), rest.end());
        out.push_back(make_point(table, images, quotient(rest, a)));
      }
      break;
    }
    case SpaceKind::lagrangian:
    case SpaceKind::orthogonal_even:
    case SpaceKind::orthogonal_odd: {
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        const auto w = isotropic_images(table, n, mask);
        const CharacterList dual = inverse(CharacterList(table, w));
        CharacterList tangent = space.kind == SpaceKind::lagrangian ? sym2(dual) : lambda2(dual);
        if (space.kind == SpaceKind::orthogonal_odd) tangent += dual;
        out.push_back(make_point(table, w, std::move(tangent)));
      }
      break;
    }
    case SpaceKind::full_flag: {
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        CharacterList images(table);
        for (int i : perm) images.push_back(tvar(table, i));
        out.push_back(make_point(table, images.entries(), positive_roots(inverse(images))));
      } while (std::next_permutation(perm.begin(), perm.end()));
      break;
    }
    case SpaceKind::quadric: {
      const CharacterList t_pm = standard_set(table, StandardSet::T_pm, n);
      for (int i = 0; i < n; ++i) {
        for (const Monomial& a : {tvar(table, i), tvar(table, i).inverse()}) {
          std::vector<Monomial> images{a};
          for (int j = 0; j < n; ++j) {
            if (j != i) images.push_back(tvar(table, j));
          }
          CharacterList removed(table, {a, a.inverse()});
          out.push_back(make_point(table, images, quotient(complement(removed, t_pm), CharacterList(table, {a}))));
        }
      }
      break;
    }
    case SpaceKind::g2p2:
    case SpaceKind::g2b: {
      const auto& d = g2_data();
      const Monomial t1 = tvar(table, 0), t2 = tvar(table, 1);
      auto group = g2_weyl_group();
      if (space.kind == SpaceKind::g2p2) group.erase(group.begin() + 6, group.end());
      const CharacterList& base = space.kind == SpaceKind::g2p2 ? d.identity_tangent : d.identity_tangent_b;
      for (const auto& w : group) {
        CharacterList tangent(table);
        for (const auto& c : base) tangent.push_back(w.apply(c));
        out.push_back(make_point(table, {w.apply(t1), w.apply(t2)}, std::move(tangent)));
      }
      break;
    }
  }
  for (const auto& p : out) {
    if (static_cast<int>(p.tangent.size()) != space.dimension()) {
      throw InvariantViolation("tangent space of the wrong dimension for " + space.to_string());
    }
  }
  return out;
}

void check_symmetry(const SpaceDescriptor& space, const LaurentPolynomial& f) {
  const int r = space.residue_count();
  switch (space.kind) {
    case SpaceKind::grassmannian:
    case SpaceKind::lagrangian:
    case SpaceKind::orthogonal_even:
    case SpaceKind::orthogonal_odd: require_symmetric_block(f, 0, r); break;
    case SpaceKind::grassmannian_two_sets:
      require_symmetric_block(f, 0, space.m);
      require_symmetric_block(f, space.m, r);
      break;
    case SpaceKind::quadric: {
      require_symmetric_block(f, 1, r);
      const auto& table = f.table();
      MonomialMap flip = MonomialMap::identity(table, table);
      flip.set(zvar(table, 1), Monomial::of(zvar(table, 1), -1));
      require_invariant(f, flip, "the inversion of z2");
      break;
    }
    case SpaceKind::g2p2: require_symmetric_block(f, 0, 2); break;
    case SpaceKind::full_flag:
    case SpaceKind::g2b: break;
  }
}

LaurentPolynomial localization_pushforward(const SpaceDescriptor& space, const LaurentPolynomial& f,
                                           bool verify_symmetry) {
  const TablePtr table = space.table();
  const LaurentPolynomial g = rebase(f, table);
  if (verify_symmetry) check_symmetry(space, g);
  std::vector<FactoredFraction> terms;
  const auto one = LaurentPolynomial::constant(table, 1);
  for (const auto& p : fixed_points(space)) {
    FactoredFraction term{p.substitution.apply(g), {}};
    for (const auto& c : p.tangent) term.factors.push_back(one - LaurentPolynomial::monomial(table, c.inverse()));
    terms.push_back(std::move(term));
  }
  return rational_sum_to_polynomial(std::span<const FactoredFraction>(terms));
}

ResidueForm build_integrand(const SpaceDescriptor& space, const LaurentPolynomial& f, FormulaVariant variant) {
  space.validate();
  const TablePtr table = space.table();
  const LaurentPolynomial g = rebase(f, table);
  const int n = space.n;
  const int r = space.residue_count();
  const auto allowed = space.variants();
  if (space.kind == SpaceKind::orthogonal_odd && variant == FormulaVariant::full) variant = FormulaVariant::sharp;
  if (std::find(allowed.begin(), allowed.end(), variant) == allowed.end()) {
    throw InvalidArgument("variant " + to_string(variant) + " is not available for " + space.to_string());
  }
  const CharacterList zs = z_list(table, 0, r);
  const auto one = LaurentPolynomial::constant(table, 1);

  switch (space.kind) {
    case SpaceKind::grassmannian: {
      const CharacterList chars = standard_set(table, StandardSet::T, n);
      if (variant == FormulaVariant::compact) {
        return ResidueForm(1, g * bracket(positive_roots(zs)), denominators(zs, chars), z_vars(table, r));
      }
      return ResidueForm(1 / factorial(space.m), g * bracket(roots(zs)), denominators(zs, chars), z_vars(table, r));
    }
    case SpaceKind::grassmannian_two_sets: {
      const CharacterList chars = standard_set(table, StandardSet::T, n);
      if (variant == FormulaVariant::compact) {
        return ResidueForm(1, g * bracket(positive_roots(zs)), denominators(zs, chars), z_vars(table, r));
      }
      const CharacterList z1 = z_list(table, 0, space.m), z2 = z_list(table, space.m, n);
      return ResidueForm(1 / (factorial(space.m) * factorial(n - space.m)),
                         g * bracket(roots(z1)) * bracket(quotient(z1, z2)) * bracket(roots(z2)),
                         denominators(zs, chars), z_vars(table, r));
    }
    case SpaceKind::lagrangian:
    case SpaceKind::orthogonal_even:
    case SpaceKind::orthogonal_odd: {
      const CharacterList zinv = inverse(zs);
      CharacterList chars = standard_set(table, StandardSet::T_pm, n);
      LaurentPolynomial numerator = g * bracket(roots(zs));
      if (space.kind == SpaceKind::lagrangian) {
        numerator *= bracket(lambda2(zinv));
      } else if (space.kind == SpaceKind::orthogonal_even || variant == FormulaVariant::sharp) {
        numerator *= bracket(sym2(zinv));
        if (space.kind == SpaceKind::orthogonal_odd) chars = standard_set(table, StandardSet::T_sharp, n);
      } else {
        // [-Z^-1] = prod (1 + z_i).
        numerator *= bracket(lambda2(zinv));
        for (const auto& z : zs) numerator *= one + LaurentPolynomial::monomial(table, z);
      }
      return ResidueForm(1 / factorial(n), std::move(numerator), denominators(zs, chars), z_vars(table, r));
    }
    case SpaceKind::full_flag: {
      const CharacterList chars = standard_set(table, StandardSet::T, n);
      return ResidueForm(1, g * bracket(positive_roots(zs)), denominators(zs, chars), z_vars(table, r));
    }
    case SpaceKind::quadric: {
      const CharacterList chars = standard_set(table, StandardSet::T_pm, n);
      const CharacterList z2 = z_list(table, 1, r);
      LaurentPolynomial numerator = g * bracket(CharacterList(table, {zs[0].pow(-2)}));
      numerator *= bracket(pairwise_product(inverse(zs), inverse(z2)));
      numerator *= bracket(positive_roots(zs));
      return ResidueForm(Rational(1) / Rational(1 << (n - 1)), std::move(numerator), denominators(zs, chars), z_vars(table, r));
    }
    case SpaceKind::g2p2:
    case SpaceKind::g2b: {
      const auto& d = g2_data();
      return ResidueForm(1, g * d.u_class * bracket(positive_roots(zs)), denominators(zs, d.t_flat), z_vars(table, r));
    }
  }
  throw InvalidArgument("unknown space");
}

LaurentPolynomial residue_pushforward(const SpaceDescriptor& space, const LaurentPolynomial& f,
                                      FormulaVariant variant, bool verify_symmetry) {
  if (verify_symmetry) check_symmetry(space, rebase(f, space.table()));
  return iterated_residue(build_integrand(space, f, variant));
}

}  // namespace kpush
