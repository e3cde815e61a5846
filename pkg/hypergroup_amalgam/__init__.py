"""
hypergroup_amalgam
==================

Numerics for the Bessel-Kingman hypergroup (R+, *_alpha), alpha >= 1/2.
Includes:
- Special functions (Gamma, j_alpha, J_nu and its zeros)
- Endpoint-weighted and oscillation-aware quadrature
- Kernel, translation, convolution and Haar measure of the hypergroup
- Discrete and continuous Wiener-amalgam norms
- The hypergroup Fourier transform, its inverse and Plancherel checks
- Finite commutative hypergroups given by structure tables
- A verification harness producing machine-readable reports
"""

__version__ = "0.1.0"
