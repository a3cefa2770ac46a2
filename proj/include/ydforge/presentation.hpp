#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ydforge/hopf.hpp"
#include "ydforge/scalar.hpp"

namespace ydforge {

// A word in the free monoid on the generators, stored as declaration indices.
using Word = std::vector<int>;

// A finite linear combination of words.
using WordPoly = std::map<Word, Scalar>;

void wordpoly_add(WordPoly& acc, const Word& w, const Scalar& c);
void wordpoly_add(WordPoly& acc, const WordPoly& p, const Scalar& c);

struct Generator {
  std::string name;
  int degree = 1;
};

// One tensor summand of a generator's coproduct.
struct GenTensorTerm {
  Word left;
  Word right;
  Scalar coeff;
};

struct RewriteRule {
  Word lhs;
  WordPoly rhs;
};

// Algebra presentation by generators and rewrite rules.  Two orders are in
// play and deliberately kept apart:
//   * the rewrite order (graded lexicographic over `rewrite_order`, listed
//     largest letter first) controls which side of a relation is reduced;
//   * the listing order of the computed basis is graded, then lexicographic
//     on the reversed word using declaration indices, so commutation-style
//     normal forms list the way the catalogue tables read.
struct Presentation {
  std::string name;
  std::vector<std::string> params;
  std::vector<Generator> generators;
  std::vector<int> rewrite_order;  // generator indices, largest first
  std::vector<RewriteRule> rules;
  std::optional<int> degree_cap;

  // Optional coalgebra/antipode data on generators; empty vectors mean the
  // corresponding structure is absent.
  std::vector<std::vector<GenTensorTerm>> comul_gen;
  std::vector<Scalar> counit_gen;
  std::vector<WordPoly> antipode_gen;

  std::size_t basis_guard = 4096;
};

// Validates the presentation, checks local confluence on every overlap and
// inclusion ambiguity (of degree <= degree_cap when capped), and enumerates
// the irreducible-word basis.  Throws InvalidPresentation, NonConfluent or
// NonTerminating on failure.
class RewriteEngine {
 public:
  explicit RewriteEngine(Presentation pres);

  const Presentation& presentation() const { return pres_; }

  int word_degree(const Word& w) const;

  // Fully reduces a word (or combination) to irreducible form.  Memoized.
  // Throws DegreeCapExceeded when the input degree exceeds the cap.
  WordPoly normal_form(const Word& w) const;
  WordPoly normal_form(const WordPoly& p) const;

  // Irreducible words of degree <= degree_cap (all of them when uncapped),
  // in listing order.
  const std::vector<Word>& basis() const { return basis_; }

  // Index of an irreducible basis word; throws InvalidPresentation if the
  // word is not in the basis.
  std::size_t index_of(const Word& w) const;

  std::string label(const Word& w) const;

  // Builds structure constants on the irreducible basis.  Coproduct and
  // counit extend multiplicatively, the antipode anti-multiplicatively.
  // Throws MissingGeneratorData when coalgebra data is incomplete.
  HopfData structure_constants() const;

 private:
  bool rewrite_less(const Word& a, const Word& b) const;
  bool listing_less(const Word& a, const Word& b) const;
  // First reduction step at the leftmost reducible position, or nullopt.
  std::optional<WordPoly> reduce_once(const Word& w) const;
  WordPoly reduce_with_rule(const Word& w, std::size_t rule, std::size_t pos) const;
  void validate_rules() const;
  void check_confluence() const;
  void enumerate_basis();
  SVec to_svec(const WordPoly& p) const;

  Presentation pres_;
  std::vector<int> rank_;  // rank_[gen] ascending with letter size
  std::vector<Word> basis_;
  std::map<Word, std::size_t> index_;
  mutable std::map<Word, WordPoly> nf_cache_;
};

}  // namespace ydforge
