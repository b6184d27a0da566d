#pragma once

#include <optional>
#include <vector>

#include "sl2rep/presentation.hpp"
#include "sl2rep/sl2.hpp"

namespace sl2rep {

inline constexpr double kRepTol = 1e-9;

// A point of the representation variety: generator images plus the cached
// maximal relator defect (Frobenius distance to the identity).
struct Representation {
  Presentation presentation;
  std::vector<SL2Element> images;
  double residual = 0.0;

  bool on_variety(double tol = kRepTol) const { return residual <= tol; }
};

// Recomputes the residual; throws on image-count mismatch.
Representation make_representation(Presentation p, std::vector<SL2Element> images);

Representation trivial_representation(const Presentation& p);

SL2Element evaluate_word(const Representation& rho, const Word& w);

// Max relator defect, zero for free groups.
double relator_residual(const Representation& rho);

struct NewtonOptions {
  int max_iter = 50;
  double tol = 1e-12;
  int max_halvings = 8;
};

// Damped Gauss-Newton on {relator defects, det - 1} over the generator
// images; the relator Jacobian is assembled from Fox derivatives evaluated
// through Ad(rho). Returns the input unchanged when already within tol.
// Throws ConvergenceError on stall or iteration exhaustion.
Representation newton_refine(const Representation& rho0, const NewtonOptions& opts = {});

// All diagonal representations factoring through a finite abelianization,
// one per character tuple. Throws InvalidInputError when b_1 > 0.
std::vector<Representation> abelian_representations(const Presentation& p);

// Conjugacy dedup (identifies rho with g rho g^-1 over the given list);
// exposed as post-processing, off the main enumeration path.
std::vector<Representation> dedup_by_conjugacy(const std::vector<Representation>& reps);

Representation conjugate_representation(const Representation& rho, const SL2Element& g);

struct CharacterSample {
  std::vector<Word> words;
  std::vector<cplx> traces;
};

CharacterSample character_sample(const Representation& rho, const std::vector<Word>& words);
bool characters_equal(const CharacterSample& s1, const CharacterSample& s2, double tol);

// Solves X rho(g_i) = eta(g_i) X; returns an invertible solution normalized
// to det 1 when one exists in the solution space.
std::optional<SL2Element> intertwiner_between(const Representation& rho,
                                              const Representation& eta);

}  // namespace sl2rep
