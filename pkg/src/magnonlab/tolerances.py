"""Central tolerance configuration.

Algebraic identities (single partial trace, one operator application) are
held to 1e-12; composed quantities (dual-route indicator checks, Bloch
identities built from several expectation values) accumulate rounding and
get 1e-10.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    algebraic: float = 1e-12
    composed: float = 1e-10
    degeneracy: float = 1e-6   # absolute gap below which a ground state is flagged degenerate
    residual: float = 1e-8     # eigenpair residual requirement


DEFAULT = Tolerances()
