#pragma once

// Seeded generators for randomized campaigns. Draws are derived from
// std::mt19937_64 with our own bounded sampling, so a seed reproduces the same
// sequence with every standard library.

#include <cstdint>
#include <random>

#include "kpush/algebra.hpp"
#include "kpush/spaces.hpp"

namespace kpush {

class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [lo, hi].
  int uniform(int lo, int hi);
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

struct RandomPolyOptions {
  int min_terms = 1;
  int max_terms = 3;
  int max_exponent = 2;       // residue variables: exponents in [-max, max]
  int max_param_exponent = 1; // parameters: exponents in [-max, max]
  double param_probability = 0.25;
  int max_coeff = 3;          // nonzero integers in [-max, max]
};

// Random Laurent polynomial over `vars`; parameters of the table are used only
// when listed.
LaurentPolynomial random_laurent(RandomSource& rng, const TablePtr& table, const std::vector<Var>& residue_vars,
                                 const std::vector<Var>& params, const RandomPolyOptions& options = {});

// Random f with the symmetry the space requires (orbit sum over the symmetry
// group of the residue variables).
LaurentPolynomial random_admissible(RandomSource& rng, const SpaceDescriptor& space,
                                    const RandomPolyOptions& options = {});

}  // namespace kpush
