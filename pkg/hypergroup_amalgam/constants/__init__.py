"""
hypergroup_amalgam.constants
============================

Numeric defaults, tolerances and exit codes.
"""
