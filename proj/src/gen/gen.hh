#ifndef TOPKSAT_GEN_GEN_HH
#define TOPKSAT_GEN_GEN_HH

#include <cstdint>

#include "apps/clique.hh"
#include "core/formula.hh"

namespace topksat {

// SplitMix64 (Steele, Lea, Flood 2014). Fixed published constants so a seed
// reproduces identical instances on any platform.
class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Unbiased integer in [0, bound) by rejection.
    uint64_t below(uint64_t bound) {
        uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

    // Uniform in [0, 1) with 53 bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  private:
    uint64_t state_;
};

struct RandomInstanceParams {
    int num_vars = 0;
    int num_hard = 0;
    int clause_len = 3;
    uint64_t seed = 0;
};

// Hard clauses draw clause_len distinct variables uniformly with uniform
// polarities; the soft part is one positive unit clause per variable.
Formula gen_random_instance(const RandomInstanceParams& p);

// G(n, p): each unordered pair becomes an edge independently.
Graph gen_random_graph(int n, double p, uint64_t seed);

} // namespace topksat

#endif
