"""
Top-level package for the H2 variational quantum eigensolver engine.

Integrals, fermion-to-qubit mappings, circuit simulation and the classical
optimizers live under this namespace; the CLI lives in ``scripts/``.
"""
