#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ydforge/coqt.hpp"
#include "ydforge/hopf.hpp"
#include "ydforge/scalar.hpp"

namespace ydforge {

// One expected element: a sparse combination of basis labels, with the
// coefficients kept as text so the frozen data stays independent of the
// scalar internals. Resolve against a concrete algebra with golden_to_svec.
using GoldenVec = std::vector<std::pair<std::string, std::string>>;

// Expected tables for one catalog entry. `labels` are the row and column
// headers; tables may cover only a slice of the basis (for the truncated and
// higher-dimensional entries they cover the generators). Empty tables mean
// "no frozen expectation". Flags are tri-state: unset means unasserted.
struct GoldenTables {
  std::vector<std::string> labels;
  std::vector<std::vector<GoldenVec>> left_action;   // row acting on column
  std::vector<std::vector<GoldenVec>> right_action;  // column acting on row side
  std::vector<std::vector<GoldenVec>> dot;           // transmuted product
  std::vector<GoldenVec> dot_antipode;               // transmuted antipode
  std::optional<bool> cotriangular;
  std::optional<bool> dot_commutative;
  std::optional<bool> dot_antipode_involutive;
};

struct CatalogEntry {
  std::string name;
  HopfData hopf;
  BilinearForm R;
  // Closed-form convolution inverse, when one is known independently of the
  // solver; tests compare it against inverse_form.
  std::optional<BilinearForm> R_inverse;
  GoldenTables golden;
};

// Resolves a golden element against the basis labels of H. Throws InputError
// on an unknown label; scalar text goes through Scalar::parse.
SVec golden_to_svec(const HopfData& H, const GoldenVec& g);

// Four-dimensional entry over Q(k) with the one-parameter form family.
CatalogEntry build_sweedler();

// Anticommutator family on generators g, x_1..x_n (dimension 2^(n+1)) with
// the form determined by an n-by-n coefficient matrix A. An empty A means
// symbolic entries A11, A12, ...; symbolic_symmetric shares Aij = Aji. The
// printed expectation tables assume a symmetric A and are left empty
// otherwise. Throws BadDimension unless 1 <= n <= 4.
CatalogEntry build_en(std::size_t n, std::vector<std::vector<Scalar>> A = {},
                      bool symbolic_symmetric = false);

// Degree-truncated quantum 2x2 entry over Q(s), q = s^2. The expectation
// tables live on the generators; full verification wants degree_cap >= 3.
// Throws PreconditionFail if degree_cap < 2.
CatalogEntry build_slq2(int degree_cap);

// Eight-dimensional sign-parameter entry over Q(alpha, beta). The two sign
// parameters must be +1 or -1; the comultiplication is only an algebra map
// when nu^2 = 1, so nu cannot stay symbolic. Throws InputError on other
// values.
CatalogEntry build_suzuki(int nu = 1, int lambda = 1);

// Group algebras with the trivial form counit x counit: "C2" or "S3".
CatalogEntry build_group_algebra(const std::string& which);

// Function algebra on a finite group (commutative, non-cocommutative): "S3".
CatalogEntry build_dual_group_algebra(const std::string& which);

// Names accepted by build_by_name, in listing order.
std::vector<std::string> catalog_names();

// Builds a default-parameter entry: en uses n = 2 with shared symbolic
// coefficients, slq2 uses degree cap 3, suzuki uses (+1, +1). Throws
// InputError on an unknown name.
CatalogEntry build_by_name(const std::string& name);

}  // namespace ydforge
