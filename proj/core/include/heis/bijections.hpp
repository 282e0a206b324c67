#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heis/lattice_path.hpp"
#include "heis/linalg.hpp"
#include "heis/partition.hpp"

namespace heis {

// lambda_P for P in the heis_tilde family of size n (steps R, N, U, UU).
Functional path_to_functional(const LabeledLatticePath& p, FieldPtr f, int n);

// kind a: 1x1; kind b: m > 1, nonzero exactly on the superdiagonal;
// kind c: m > 1 odd, nonzero exactly on the superdiagonal and at (1,1).
enum class BlockKind { a, b, c, none };
BlockKind block_kind(const SquareMatrix& block);
char to_char(BlockKind k);

enum class FunctionalClass { class_Y, class_X, neither };

struct Classification {
  FunctionalClass cls = FunctionalClass::neither;
  std::vector<SquareMatrix> blocks;
  std::vector<BlockKind> kinds;
  std::optional<std::size_t> witness;  // first block of kind none
};
// class_Y (all blocks kind a or b) is reported in preference to class_X.
Classification classify_functional(const Functional& lambda);
std::string to_string(FunctionalClass c);

// Inverse of path_to_functional on class X; throws NotClassX otherwise.
LabeledLatticePath functional_to_path(const Functional& lambda);

// Pell path -> noncrossing partition supported on arcs (i,i+1), (i,i+2).
LabeledSetPartition pell_path_to_partition(const LabeledLatticePath& p, int n);

// #N + #UU: log_q of the degree of the character attached to P
int heis_degree_exponent(const LabeledLatticePath& p);
// steps are all N or UU
bool is_c_invariant_heis_path(const LabeledLatticePath& p);
// for each j in [n-1]: an arc (i, j+1) with i < j, or an arc (j, k+1) with j < k
bool is_c_invariant_partition(const LabeledSetPartition& p);

}  // namespace heis
