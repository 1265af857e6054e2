"""Minimal nilpotent coadjoint orbits by symplectic induction of compact orbits.

Exact root-system combinatorics, a validated catalog of real simple Lie
algebras, explicit matrix models with their distinguished sl2-triples and
Cayley transforms, and seeded numerical verification that the induced
symplectic structure on the cone over the compact orbit matches the canonical
structure of the minimal nilpotent coadjoint orbit.
"""

__version__ = "0.1.0"

from . import exactla, realform, report, rootsys

__all__ = ["__version__", "exactla", "realform", "report", "rootsys"]
