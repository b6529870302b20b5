#pragma once

// Structure theory for the preset groups SL(2,R) and SL(3,R) with K = SO(n)
// and the minimal parabolic P = MAN (M the finite group of +-1 diagonal
// matrices of determinant 1): Cartan involution, Cartan/Iwasawa/KAK
// decompositions, restricted roots, rho, the map phi(X) = (X - theta X)/2
// relating a (+) n to p, and its Jacobian.
//
// All bases are orthonormal for <X,Y> = tr(X^T Y); Lebesgue measures on
// subspaces always refer to coordinates in these bases.

#include <string>
#include <vector>

#include "horbit/matrix.hpp"

namespace horbit {

struct RestrictedRoot {
  Vec coeff;         // alpha(H) = coeff . (coordinates of H in basis_a)
  int multiplicity;  // dim of the root space
};

struct GroupPreset {
  std::string name;  // "SL2R" | "SL3R"
  int n = 0;         // matrix size
  int dim_g = 0, dim_k = 0, dim_p = 0, dim_a = 0, dim_n = 0;
  std::vector<Mat> basis_k;
  std::vector<Mat> basis_p;    // a-basis first, then the orthogonal complement
  std::vector<Mat> basis_a;    // prefix of basis_p
  std::vector<Mat> basis_n;    // strictly upper triangular root vectors
  std::vector<Mat> basis_p_m;  // p-part of Lie(M); empty (M is finite)
  std::vector<RestrictedRoot> roots;  // positive restricted roots
  std::vector<Mat> m_elements;        // M = Z_K(a), the +-1 diagonal matrices
};

const GroupPreset& sl2r();
const GroupPreset& sl3r();
const GroupPreset* find_group_preset(const std::string& name);  // nullptr if unknown

// g = kappa mu exp(h) nu with kappa in SO(n), mu in M, h in a, nu upper
// unitriangular.  The QR convention absorbs all sign ambiguity so that
// exp(h) has positive diagonal; mu then comes out as the identity.
struct IwasawaFactors {
  Mat kappa, mu, h, nu;
};

Mat cartan_involution(const Mat& X);  // theta X = -X^T
Mat phi_map(const Mat& X);            // (X - theta X)/2, the symmetric part
bool in_p(const GroupPreset&, const Mat& X, double tol = 1e-10);
bool in_k_group(const Mat& g, double tol = 1e-10);  // orthogonal, det 1

// 2^{-dim n / 2}; runs the Gram-determinant self check and throws
// InternalConsistency if the two routes disagree beyond 1e-12.
double phi_jacobian(const GroupPreset&);
// Independent route: sqrt of the Gram determinant of phi on a basis of a+n.
double phi_jacobian_gram(const GroupPreset&);

// g = k exp(X) with k in SO(n), X symmetric traceless (polar decomposition).
void cartan_decompose(const Mat& g, Mat& k, Mat& X);
IwasawaFactors iwasawa_decompose(const Mat& g);
Vec iwasawa_a_coords(const GroupPreset&, const Mat& g);  // coords of H(g)
// g = k1 exp(h) k2, h diagonal with decreasing entries (closure of the
// positive chamber), via the singular value decomposition.
void kak_decompose(const Mat& g, Mat& k1, Mat& h, Mat& k2);

double rho_of(const GroupPreset&, const Vec& a_coords);          // rho(H)
double iwasawa_weight(const GroupPreset&, const Vec& a_coords);  // e^{2 rho(H)}
double kak_weight(const GroupPreset&, const Vec& a_coords);      // prod sinh(alpha(H))^mult
bool in_positive_chamber(const GroupPreset&, const Vec& a_coords, double tol = 0.0);

// Matrix of ad_X on g-coordinates (basis_k then basis_p).
Mat ad_matrix(const GroupPreset&, const Mat& X);
// Matrix of (ad_X)^2 restricted to p, in basis_p coordinates; X must be in p.
Mat ad_p_squared(const GroupPreset&, const Mat& X);

// J(X) = |det_p sinh(ad_X)/ad_X|.
// Eigenvalue route: valid for symmetric X (the sl(n) presets), uses
// J = prod_{i<j} sinh(l_i - l_j)/(l_i - l_j) over eigenvalues of X.
double cartan_density(const Mat& X);
// Series route per the module contract: truncates the matrix series of
// sum_m ad_X^{2m}/(2m+1)! on p when the term norm drops under 1e-16.
double cartan_density_series(const GroupPreset&, const Mat& X);

// det of (Ad_x - Id) restricted to span(basis); empty basis gives 1.
double det_ad_minus_id(std::span<const Mat> basis, const Mat& x);

// Volume of K in the trace-form metric (normalizes the KAK route).
double vol_k_intrinsic(const GroupPreset&);

// Preset tables as structured text so tests can pin them bit-exactly.
std::string preset_to_json(const GroupPreset&);

}  // namespace horbit
