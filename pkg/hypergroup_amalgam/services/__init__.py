"""
hypergroup_amalgam.services
===========================

Numerical services (special functions, quadrature, hypergroup operations,
amalgam norms, Fourier transform, finite hypergroups, verification) plus
the file and parallel-execution helpers they share.
"""
