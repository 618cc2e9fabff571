#include "symquot/bwb.hpp"

#include <algorithm>
#include <stdexcept>

namespace symquot {

bool is_dominant(const GLWeight& lambda) {
  for (std::size_t i = 0; i + 1 < lambda.size(); ++i)
    if (lambda[i] < lambda[i + 1]) return false;
  return true;
}

Integer schur_dim(const GLWeight& lambda, int r) {
  if (static_cast<int>(lambda.size()) != r)
    throw std::invalid_argument("weight length does not match the rank");
  if (!is_dominant(lambda)) throw std::invalid_argument("weight is not dominant");
  Integer num = 1, den = 1;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      num *= lambda[i] - lambda[j] + j - i;
      den *= j - i;
    }
  if (num % den != 0) throw std::logic_error("Weyl dimension is not integral");
  return num / den;
}

BWBResult bwb_cohomology(const BundleWeight& w, int n) {
  if (!is_dominant(w.lambda_s) || !is_dominant(w.lambda_q))
    throw std::invalid_argument("bundle weight parts must be dominant");
  std::vector<int> v(w.lambda_q);
  v.insert(v.end(), w.lambda_s.begin(), w.lambda_s.end());
  if (static_cast<int>(v.size()) != n + 1)
    throw std::invalid_argument("weight length does not match the Grassmannian");
  for (int i = 0; i <= n; ++i) v[i] += n - i;  // rho-shift
  BWBResult out;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (v[i] == v[j]) return out;  // singular weight, everything vanishes
      if (v[i] < v[j]) ++out.degree;
    }
  out.zero = false;
  std::sort(v.begin(), v.end(), std::greater<int>());
  out.weight.resize(n + 1);
  for (int i = 0; i <= n; ++i) out.weight[i] = v[i] - (n - i);
  return out;
}

std::map<int, Integer> bott(int p, int j, int n) {
  if (p < 0 || p > n) throw std::invalid_argument("exterior power out of range");
  // Omega^p(j) on P^n = Gr(1, n+1): S = O(-1), T = S^v (x) Q, so
  // Omega^p(j) = S_{(p-j)}(S) (x) S_{(0^{n-p}, (-1)^p)}(Q)
  BundleWeight w;
  w.lambda_s = {p - j};
  w.lambda_q.assign(n - p, 0);
  w.lambda_q.insert(w.lambda_q.end(), p, -1);
  auto r = bwb_cohomology(w, n);
  std::map<int, Integer> out;
  if (!r.zero) out[r.degree] = r.dim();
  return out;
}

namespace {

// One pushforward summand on Gr(2,3) with its multiplicity in the filtration.
struct Piece {
  GLWeight lambda_s;
  GLWeight lambda_q;
  int mult;
};

std::map<int, Integer> assemble(const std::vector<Piece>& pieces) {
  std::map<int, Integer> column;
  for (const auto& piece : pieces) {
    auto r = bwb_cohomology({piece.lambda_s, piece.lambda_q}, 2);
    if (r.zero) continue;
    column[r.degree] += piece.mult * r.dim();
  }
  return column;
}

}  // namespace

Hilb2P2HKR hilb2_p2_hkr() {
  // Pushforward decompositions along pi : Hilb^2 P^2 -> Gr(2,3) of the exterior
  // powers of the tangent bundle, with the fibre directions resolved through
  // the relative Euler sequence:
  //   Rpi_* T_pi          = S_{(2,-2)}S + S_{(1,-1)}S
  //   pi^* T_G            = S^v (x) Q
  //   Rpi_* wedge^2 T_pi  = S_{(3,-3)}S + S_{(1,-1)}S
  //   pi_*(T_pi (x) pi^* T_G) = Q (x) (S_{(2,-3)}S + S_{(1,-2)}S^2 + S^v)
  //   wedge^3 T (x) pieces: Q^v twists of S_{(1,-6)}, S_{(0,-5)}, S_{(-1,-4)},
  //   S_{(-2,-3)}, and the relative part S_{(-1,-5)}, S_{(-2,-4)}
  //   wedge^4 T = omega^v: S_{(0,-6)} + S_{(-2,-4)}
  Hilb2P2HKR out;
  out.wedge.resize(5);
  out.wedge[0] = assemble({{{0, 0}, {0}, 1}});
  out.wedge[1] = assemble({
      {{0, -1}, {1}, 1},   // pi^* T_G
      {{2, -2}, {0}, 1},   // Rpi_* T_pi, surviving part (degree 1)
      {{1, -1}, {0}, 1},   // Rpi_* T_pi, vanishing part
  });
  out.wedge[2] = assemble({
      {{-1, -1}, {2}, 1},  // pi^* wedge^2 T_G = det(S^v (x) Q)
      {{2, -3}, {1}, 1},   // Q (x) S_{(2,-3)}S, vanishes
      {{1, -2}, {1}, 2},   // Q (x) S_{(1,-2)}S, twice
      {{0, -1}, {1}, 1},   // Q (x) S^v
      {{3, -3}, {0}, 1},   // Rpi_* wedge^2 T_pi, surviving part (degree 1)
      {{1, -1}, {0}, 1},   // Rpi_* wedge^2 T_pi, vanishing part
  });
  out.wedge[3] = assemble({
      {{1, -6}, {-1}, 1},   // Q^v (x) S_{(1,-6)}S, degree 1
      {{0, -5}, {-1}, 1},   // vanishes
      {{-1, -4}, {-1}, 1},  // degree 0
      {{-2, -3}, {-1}, 1},  // degree 0
      {{-1, -5}, {0}, 1},   // relative part, degree 0
      {{-2, -4}, {0}, 1},   // relative part, degree 0
  });
  out.wedge[4] = assemble({
      {{0, -6}, {0}, 1},
      {{-2, -4}, {0}, 1},
  });

  // Hermite-reciprocity model for the anticanonical sections: Sym^2 of the
  // 10-dimensional h^0(P^2, O(3)) must reproduce h^0(omega^v).
  Integer cubics = bott(0, 3, 2).at(0);
  if (out.wedge[4][0] != binomial(cubics + 1, 2))
    throw std::logic_error("anticanonical column disagrees with the symmetric-square model");

  out.chi_wedge3 = 0;
  for (const auto& [q, h] : out.wedge[3]) out.chi_wedge3 += (q % 2 == 0 ? h : -h);

  GradedDimension hh{AxisSystem{"hh"}};
  for (int p = 0; p <= 4; ++p)
    for (const auto& [q, h] : out.wedge[p]) hh.add({p + q}, h);
  out.hochschild = hh;
  return out;
}

}  // namespace symquot
