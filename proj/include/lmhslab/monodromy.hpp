#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lmhslab/exactlin.hpp"
#include "lmhslab/lattice.hpp"

namespace lmhslab {

inline constexpr unsigned kDefaultBaseChangeBound = 12;

/// Ordered vanishing cycles on a common lattice.
class CycleConfiguration {
 public:
  CycleConfiguration(Lattice lattice, std::vector<LatticeVector> cycles);

  const Lattice& lattice() const { return lattice_; }
  const std::vector<LatticeVector>& cycles() const { return cycles_; }
  std::size_t size() const { return cycles_.size(); }
  /// pairwise_gram()(i, j) == inner(cycles[i], cycles[j]).
  const IntMatrix& pairwise_gram() const { return pairwise_gram_; }

 private:
  Lattice lattice_;
  std::vector<LatticeVector> cycles_;
  IntMatrix pairwise_gram_;
};

/// Lattice spec on the first non-comment line, then one comma-separated
/// integer vector per line. Lines starting with '#' and blank lines are
/// skipped. If `lattice` is given the file may omit its spec line; when
/// both are present they must describe the same Gram matrix.
CycleConfiguration parse_cycle_configuration(const std::string& text, const std::optional<Lattice>& lattice);

struct IsometryAnalysis {
  bool is_isometry = false;
  std::optional<unsigned> finite_order;       // least n <= bound with T^n = I
  bool is_quasi_unipotent = false;            // some T^n, n <= bound, unipotent
  std::optional<unsigned> base_change_order;  // least such n
  bool unipotent = false;                     // (T - I)^rank == 0
  unsigned bound = kDefaultBaseChangeBound;
};

/// Integer matrix acting on column coordinate vectors of a lattice, with
/// its analysis computed once at construction.
class IsometryCandidate {
 public:
  IsometryCandidate(IntMatrix matrix, Lattice lattice, unsigned base_change_bound = kDefaultBaseChangeBound);

  const IntMatrix& matrix() const { return matrix_; }
  const Lattice& lattice() const { return lattice_; }
  const IsometryAnalysis& analysis() const { return analysis_; }

 private:
  IntMatrix matrix_;
  Lattice lattice_;
  IsometryAnalysis analysis_;
};

/// Certified nilpotent rational operator.
class NilpotentOperator {
 public:
  /// Throws ArithmeticError if m is not nilpotent.
  explicit NilpotentOperator(RatMatrix m);

  const RatMatrix& matrix() const { return matrix_; }
  /// Least m with N^{m+1} = 0 (0 for the zero operator).
  unsigned nilpotency_index() const { return index_; }
  std::size_t dim() const { return matrix_.rows(); }

 private:
  RatMatrix matrix_;
  unsigned index_;
};

/// (M - I)^rows == 0.
bool is_unipotent(const RatMatrix& m);
bool is_unipotent(const IntMatrix& m);

/// Least m with N^{m+1} = 0, or nullopt when N is not nilpotent.
std::optional<unsigned> nilpotency_index(const RatMatrix& n);

/// Matrix of v -> v + sum_i <v, g_i> g_i, applied literally.
IsometryCandidate picard_lefschetz(const CycleConfiguration& config,
                                   unsigned base_change_bound = kDefaultBaseChangeBound);

/// a * b (b applied first). Throws PreconditionError on different lattices.
IsometryCandidate compose(const IsometryCandidate& a, const IsometryCandidate& b);

IsometryAnalysis quasi_unipotency(const IntMatrix& t, const Lattice& lattice,
                                  unsigned bound = kDefaultBaseChangeBound);

/// Power T^n as a candidate on the same lattice (a base change of order n).
IsometryCandidate base_change(const IsometryCandidate& t, unsigned n);

/// N = sum_{j>=1} (-1)^{j+1} (T - I)^j / j. Throws PreconditionError when T
/// is not unipotent, ArithmeticError if exp(N) != T.
NilpotentOperator log_unipotent(const IsometryCandidate& t);

/// Finite exponential series of a nilpotent operator.
RatMatrix exp_nilpotent(const NilpotentOperator& n);

/// T - I taken as the monodromy logarithm without any unipotency test,
/// together with what it actually is.
struct LiteralLog {
  RatMatrix n;
  std::size_t rank = 0;
  bool nilpotent = false;
  std::optional<unsigned> nilpotency_index;
  /// c with N^2 = c N, when such a scalar exists.
  std::optional<Rational> square_factor;
};
LiteralLog paper_log(const IsometryCandidate& t);

/// Eichler transvection v -> v - <a,v> e + <e,v> a - (1/2)<a,a><e,v> e.
/// Requires <e,e> = 0, <e,a> = 0 and an even lattice.
IsometryCandidate eichler_unipotent(const Lattice& l, const LatticeVector& e, const LatticeVector& a);

}  // namespace lmhslab
