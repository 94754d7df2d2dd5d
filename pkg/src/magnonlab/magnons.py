"""Pauli, ladder, and magnon operators plus the bosonic-character indicator.

The creation operator of the mode with wavenumber k on an N-site ring is

    M_k^dag = (1/sqrt(N)) sum_{l=1..N} exp(i k l) sigma_l^+

with sigma_l^+ |0>_l = |1>_l and sigma_l^+ |1>_l = 0.  The indicator of
bosonic character is |<psi|[M_k, M_k^dag]|psi>|, which equals 1 for ideal
bosons and is computed here both by direct operator application and through
the closed form -(1/N) sum_l <sigma_l^z> as a mandatory self-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import ConsistencyError
from .states import StateVector, site_bits
from .tolerances import DEFAULT, Tolerances


class PauliAxis(Enum):
    X = "X"
    Y = "Y"
    Z = "Z"
    PLUS = "+"
    MINUS = "-"


@dataclass(frozen=True)
class MagnonMode:
    """Quantized ring mode: index j in 0..N-1, wavenumber k = 2*pi*j/N.

    ``index=None`` together with an explicit ``wavenumber`` opts into
    unquantized k (exploration only); use :meth:`unquantized`.
    """

    n_sites: int
    index: int | None = 0
    wavenumber: float | None = None

    def __post_init__(self):
        if self.n_sites < 1:
            raise ValueError("mode needs at least one site")
        if self.index is not None:
            if not 0 <= self.index < self.n_sites:
                raise ValueError(
                    f"mode index {self.index} outside 0..{self.n_sites - 1}"
                )
            object.__setattr__(
                self, "wavenumber", 2.0 * math.pi * self.index / self.n_sites
            )
        elif self.wavenumber is None:
            raise ValueError("provide a mode index or an explicit wavenumber")

    @classmethod
    def unquantized(cls, n_sites: int, k: float) -> "MagnonMode":
        """Mode with arbitrary real wavenumber; bypasses ring quantization."""
        return cls(n_sites, None, float(k))


def all_modes(n_sites: int) -> list[MagnonMode]:
    return [MagnonMode(n_sites, j) for j in range(n_sites)]


def _check_same_sites(state: StateVector, mode: MagnonMode) -> None:
    if mode.n_sites != state.n_sites:
        raise ValueError(
            f"mode on {mode.n_sites} sites applied to {state.n_sites}-site state"
        )


# ---------------------------------------------------------------------------
# Pauli action
# ---------------------------------------------------------------------------

def apply_pauli(state: StateVector, site: int, axis: PauliAxis | str) -> StateVector:
    """Apply a single-site Pauli or ladder operator; output may be unnormalized."""
    axis = PauliAxis(axis) if not isinstance(axis, PauliAxis) else axis
    n = state.n_sites
    if not 1 <= site <= n:
        raise ValueError(f"site {site} out of range 1..{n}")
    amps = state.amplitudes
    mask = 1 << (site - 1)
    idx = np.arange(state.dim, dtype=np.int64)
    flipped = amps[idx ^ mask]
    bit = (idx >> (site - 1)) & 1
    if axis is PauliAxis.X:
        out = flipped
    elif axis is PauliAxis.Y:
        # sigma_y |0> = -i|1>, sigma_y |1> = +i|0>
        out = 1j * (1.0 - 2.0 * bit) * flipped
    elif axis is PauliAxis.Z:
        out = (2.0 * bit - 1.0) * amps
    elif axis is PauliAxis.PLUS:
        out = np.where(bit == 1, flipped, 0.0)
    else:  # MINUS
        out = np.where(bit == 0, flipped, 0.0)
    return StateVector(n, out)


def apply_pauli_string(state: StateVector, factors) -> StateVector:
    """Apply a product of single-site operators on distinct sites.

    ``factors`` is an iterable of ``(site, axis)`` pairs; the sites must be
    pairwise distinct, which makes the product order-independent.
    """
    seen = set()
    out = state
    for site, axis in factors:
        if site in seen:
            raise ValueError(f"site {site} repeated in operator string")
        seen.add(site)
        out = apply_pauli(out, site, axis)
    return out


def pauli_expectation(state: StateVector, factors) -> complex:
    """<psi| P |psi> for the Pauli string P given as (site, axis) pairs."""
    return state.inner(apply_pauli_string(state, factors))


def sigma_z_expectations(state: StateVector) -> np.ndarray:
    """<sigma_l^z> for every site, from the diagonal probabilities."""
    probs = np.abs(state.amplitudes) ** 2
    n = state.n_sites
    out = np.empty(n)
    for l in range(1, n + 1):
        out[l - 1] = float(probs @ (2.0 * site_bits(n, l) - 1.0))
    return out


# ---------------------------------------------------------------------------
# magnon ladder operators
# ---------------------------------------------------------------------------

def _magnon_apply(state: StateVector, mode: MagnonMode, create: bool) -> StateVector:
    _check_same_sites(state, mode)
    n = state.n_sites
    amps = state.amplitudes
    idx = np.arange(state.dim, dtype=np.int64)
    out = np.zeros_like(amps)
    scale = 1.0 / math.sqrt(n)
    for l in range(1, n + 1):
        phase = (1j if create else -1j) * mode.wavenumber * l
        coef = scale * np.exp(phase)
        mask = 1 << (l - 1)
        bit = (idx >> (l - 1)) & 1
        target = bit == (1 if create else 0)
        out[target] += coef * amps[idx[target] ^ mask]
    return StateVector(n, out)


def magnon_create(state: StateVector, mode: MagnonMode) -> StateVector:
    """Image under M_k^dag; unnormalized, possibly zero."""
    return _magnon_apply(state, mode, create=True)


def magnon_annihilate(state: StateVector, mode: MagnonMode) -> StateVector:
    """Image under M_k (adjoint of magnon_create); unnormalized, possibly zero."""
    return _magnon_apply(state, mode, create=False)


def commutator_expectation(
    state: StateVector, mode: MagnonMode, tol: Tolerances = DEFAULT
) -> float:
    """<psi|[M_k, M_k^dag]|psi>, signed.

    Computed by direct operator application and cross-checked against the
    closed form -(1/N) sum_l <sigma_l^z> (from [sigma^-, sigma^+] = -sigma^z);
    the two routes must agree within ``tol.composed`` or a ConsistencyError
    is raised.  The direct value is returned; it is k-independent.
    """
    _check_same_sites(state, mode)
    amps = state.amplitudes
    created = magnon_create(state, mode)
    annihilated = magnon_annihilate(state, mode)
    direct = complex(
        np.vdot(amps, magnon_annihilate(created, mode).amplitudes)
        - np.vdot(amps, magnon_create(annihilated, mode).amplitudes)
    )
    closed = -float(np.mean(sigma_z_expectations(state)))
    if abs(direct.imag) > tol.composed:
        raise ConsistencyError(
            f"commutator expectation has imaginary residue {direct.imag:.3e}"
        )
    if abs(direct.real - closed) > tol.composed:
        raise ConsistencyError(
            "direct and closed-form commutator expectations disagree: "
            f"{direct.real!r} vs {closed!r}"
        )
    return direct.real


def bosonic_indicator(
    state: StateVector, mode: MagnonMode, tol: Tolerances = DEFAULT
) -> float:
    """|<psi|[M_k, M_k^dag]|psi>|, the quantity bounded by Lambda."""
    return abs(commutator_expectation(state, mode, tol))


def cross_commutators(
    state: StateVector, mode1: MagnonMode, mode2: MagnonMode
) -> tuple[complex, complex]:
    """(<[M_k, M_k']>, <[M_k^dag, M_k'^dag]>); both vanish identically."""
    _check_same_sites(state, mode1)
    _check_same_sites(state, mode2)
    amps = state.amplitudes

    def expect(op_first, op_second) -> complex:
        forward = op_second(op_first(state, mode2), mode1).amplitudes
        backward = op_second(op_first(state, mode1), mode2).amplitudes
        return complex(np.vdot(amps, forward - backward))

    return (
        expect(magnon_annihilate, magnon_annihilate),
        expect(magnon_create, magnon_create),
    )
