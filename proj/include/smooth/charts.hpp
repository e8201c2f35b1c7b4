#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "smooth/groebner.hpp"
#include "smooth/matrix.hpp"

namespace smooth {

/// (I_W, I_X, g): the ambient W = V(I_W) is a non-singular complete
/// intersection on D(g) with one generator per codimension, and X = V(I_X)
/// lies inside W.
struct Chart {
  Ideal ambient;
  Ideal variety;
  Polynomial localizer;
  unsigned depth = 0;

  /// (<0>, I_X, 1) at depth 0.
  static Chart trivial(const Ideal& variety);
  /// Verifies the rings agree and I_W is contained in I_X; throws
  /// std::invalid_argument otherwise.
  static Chart checked(Ideal ambient, Ideal variety, Polynomial localizer, unsigned depth = 0);

  const RingPtr& ring() const { return variety.ring(); }
  std::size_t codim() const { return ambient.size(); }
};

/// An r x r submatrix M of the ambient Jacobian with q = det M != 0 and A the
/// cofactor matrix, sum_k A[l,k] * M[m,k] = q * delta(l,m).
struct FrameData {
  std::vector<std::size_t> rows, cols;
  PolyMatrix m;
  Polynomial q;
  PolyMatrix a;
};

struct ChartOptions {
  /// Stop enumerating frames once g is in the ideal of determinants (rather
  /// than in the radical of I_W plus that ideal).
  bool strict_cover = false;
  /// Try random linear combinations of the generators during descent.
  bool combinations = true;
  /// Restrict frames to the minors used by an explicit lift of a power of g.
  bool lift_cover = false;
  unsigned combination_attempts = 3;
  /// Power bound for lifts; 0 picks default_lift_cap.
  unsigned lift_cap = 0;
};

/// Lazily walks the frames of a chart in lexicographic column order. The
/// caller runs check_cover() after dealing with each frame; once it returns
/// true no further frames are produced.
class FrameEnumerator {
 public:
  FrameEnumerator(const Chart& chart, const ChartOptions& options = {});

  std::optional<FrameData> next();
  bool check_cover();
  bool cover_complete() const { return complete_; }
  const std::vector<Polynomial>& determinants() const { return determinants_; }
  std::size_t yielded() const { return determinants_.size(); }

 private:
  bool advance();

  Chart chart_;
  ChartOptions options_;
  PolyMatrix jac_;
  std::size_t r_, n_;
  std::vector<std::size_t> cols_;
  bool started_ = false, exhausted_ = false, complete_ = false;
  std::optional<std::vector<std::vector<std::size_t>>> selected_;
  std::size_t selected_pos_ = 0;
  std::vector<Polynomial> determinants_;
};

/// Builds a frame for the given column subset; nullopt when det is zero.
std::optional<FrameData> make_frame(const Chart& chart, const std::vector<std::size_t>& cols);

/// Derivatives of each f along the free variables (columns not in the
/// frame), corrected to be tangent to W:
///   D[i,j] = q df_i/dx_j - sum_{l,k} dg_l/dx_j A[l,k] df_i/dx_{c_k}.
PolyMatrix relative_jacobian(const std::vector<Polynomial>& f, const Chart& chart, const FrameData& frame);

/// Free variable indices of a frame in ascending order.
std::vector<std::size_t> free_columns(const Chart& chart, const FrameData& frame);

/// q*g in the radical of I_X + (entries of the relative Jacobian of I_X).
bool check_delta_frame(const Chart& chart, const FrameData& frame);
/// The ideal whose radical is tested by check_delta_frame.
Ideal delta_ideal(const Chart& chart, const FrameData& frame);

/// Order of I_X along W is at most one on D(g).
bool delta_check(const Chart& chart, const ChartOptions& options = {});

/// I_W + <f> + (r+1)-minors of Jac(g_1..g_r, f). Throws std::invalid_argument
/// when f lies in I_W.
Ideal singular_locus_ideal(const Chart& chart, const Polynomial& f);

/// Raised when descent finds no smooth hypersurface through X, which means
/// the order condition did not hold.
class DescentFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Descent {
  enum class Path { generator, combination, cover };
  Path path = Path::generator;
  std::vector<Chart> charts;
};

std::string to_string(Descent::Path path);

/// One step down in ambient dimension: charts (I_W + <f>, I_X, g') whose
/// D(g') cover X on D(g), each new ambient smooth there.
Descent descend(const Chart& chart, std::mt19937_64& rng, const ChartOptions& options = {});

/// (n - r) - dim X, the size of the minors used by the embedded criterion.
/// Throws std::logic_error if negative.
std::size_t embedded_codimension(const Chart& chart);

/// q*g in the radical of I_X + (c-minors of the relative Jacobian, reduced mod I_X).
bool check_jacobian_frame(const Chart& chart, const FrameData& frame, std::size_t c);
Ideal jacobian_frame_ideal(const Chart& chart, const FrameData& frame, std::size_t c);

/// Jacobian criterion for X inside W on D(g), frame by frame.
bool embedded_jacobian(const Chart& chart, const ChartOptions& options = {});

/// Classical criterion: 1 in I + (c-minors of Jac(I) reduced mod I), c the
/// codimension. Requires I radical and equidimensional.
bool affine_jacobian_criterion(const Ideal& ideal);

}  // namespace smooth
