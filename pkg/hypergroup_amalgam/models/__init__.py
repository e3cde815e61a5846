"""
hypergroup_amalgam.models
=========================

Typed records shared by the services and the CLI:
- Alpha, QuadSpec, ExponentPair, TailPolicy, RunConfig (pydantic)
- TestFunction, DualFunction, FiniteHypergroup (frozen dataclasses)
- VerificationReport and its detail rows
"""
