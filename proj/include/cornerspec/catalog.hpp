#pragma once

#include <vector>

namespace cornerspec {

// Closed-form Hodge-Laplacian spectra of the standard closed faces, listed
// with multiplicity, ascending, truncated to eigenvalues <= cutoff.

// Circle of circumference c: (2πk/c)^2, k ∈ Z, for p = 0 and p = 1.
std::vector<double> circle_spectrum(double circumference, int p, double cutoff);

// Flat torus R^d / ⊕ L_i Z: each lattice eigenvalue Σ (2π k_i / L_i)^2 with
// multiplicity C(d, p) on p-forms.
std::vector<double> torus_spectrum(const std::vector<double>& lengths, int p, double cutoff);

// Round n-sphere of radius r. Nonharmonic coclosed p-forms (p <= n-1) have
// eigenvalues (k+p)(k+n-p-1)/r^2, exact p-forms (p >= 1) (k+p-1)(k+n-p)/r^2,
// k >= 1; harmonic forms only in degrees 0 and n.
std::vector<double> sphere_spectrum(int n, double radius, int p, double cutoff);

// Multiplicity of the coclosed p-form eigenspace of index k on S^n: the
// dimension of the SO(n+1) representation with highest weight (k, 1^p, 0...)
// (doubled when the weight sits on the last slot of an even orthogonal group).
long long sphere_coclosed_multiplicity(int n, int p, int k);

// Weyl dimension formula for SO(N) with dominant highest weight `weight`
// (length floor(N/2), trailing entries may be zero).
double so_irrep_dimension(int N, const std::vector<int>& weight);

}  // namespace cornerspec
