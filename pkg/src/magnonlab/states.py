"""N-qubit pure states and the vacuum-state constructors.

Conventions used throughout the package:

* Sites are numbered ``l = 1..N``.  Basis index ``b`` stores site ``l`` at
  bit position ``l - 1`` (little-endian), with bit value 1 meaning the site
  is in ``|1>``, the sigma_z = +1 eigenstate.  Equivalently ``|0>`` carries
  sigma_z = -1.
* Amplitudes are dense complex128 arrays of length ``2**N``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .errors import SizeCapError

# Dense storage of 2**N complex amplitudes; 20 sites is 16 MiB per state.
DEFAULT_CAP = 20


def _check_sites(n: int, cap: int | None) -> None:
    if n < 1:
        raise ValueError(f"need at least one site, got n={n}")
    limit = DEFAULT_CAP if cap is None else cap
    if n > limit:
        raise SizeCapError(f"n={n} sites exceeds the size cap {limit}")


def site_bits(n_sites: int, site: int) -> np.ndarray:
    """Bit value (0 or 1) of ``site`` for every basis index; shape (2**N,)."""
    if not 1 <= site <= n_sites:
        raise ValueError(f"site {site} out of range 1..{n_sites}")
    return (np.arange(1 << n_sites, dtype=np.int64) >> (site - 1)) & 1


def sigma_z_diagonal(n_sites: int, site: int) -> np.ndarray:
    """Diagonal of sigma_z on ``site``: +1 where the bit is set, -1 where clear."""
    return 2.0 * site_bits(n_sites, site) - 1.0


@dataclass(frozen=True, eq=False)
class StateVector:
    """Pure state of ``n_sites`` qubits.

    The named constructors below always return unit-norm states; operator
    images (Pauli strings, magnon ladders, Hamiltonian action) may carry any
    norm, including zero.
    """

    n_sites: int
    amplitudes: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.n_sites < 1:
            raise ValueError(f"need at least one site, got n_sites={self.n_sites}")
        amps = np.asarray(self.amplitudes, dtype=np.complex128)
        if amps.shape != (1 << self.n_sites,):
            raise ValueError(
                f"amplitude length {amps.shape} inconsistent with n_sites={self.n_sites}"
            )
        amps = np.ascontiguousarray(amps)
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return 1 << self.n_sites

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def normalized(self) -> "StateVector":
        nrm = self.norm()
        if nrm < 1e-14:
            raise ValueError("cannot normalize a (numerically) zero vector")
        return StateVector(self.n_sites, self.amplitudes / nrm)

    def inner(self, other: "StateVector") -> complex:
        """<self|other>."""
        if other.n_sites != self.n_sites:
            raise ValueError("states live on different site counts")
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def is_zero(self, atol: float = 1e-14) -> bool:
        return self.norm() <= atol


@dataclass(frozen=True)
class LatticeGraph:
    """Undirected simple graph on sites 1..n_sites (no loops, no duplicates)."""

    n_sites: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n_sites < 1:
            raise ValueError("graph needs at least one site")
        canon = set()
        for a, b in self.edges:
            if a == b:
                raise ValueError(f"self-loop at site {a}")
            if not (1 <= a <= self.n_sites and 1 <= b <= self.n_sites):
                raise ValueError(f"edge ({a},{b}) leaves 1..{self.n_sites}")
            canon.add((min(a, b), max(a, b)))
        object.__setattr__(self, "edges", frozenset(canon))

    @classmethod
    def from_edges(cls, n_sites: int, edges) -> "LatticeGraph":
        return cls(n_sites, frozenset(tuple(e) for e in edges))

    @classmethod
    def path(cls, n_sites: int) -> "LatticeGraph":
        return cls.from_edges(n_sites, [(l, l + 1) for l in range(1, n_sites)])

    @classmethod
    def ring(cls, n_sites: int) -> "LatticeGraph":
        edges = [(l, l + 1) for l in range(1, n_sites)]
        if n_sites > 2:
            edges.append((n_sites, 1))
        elif n_sites == 2:
            edges = [(1, 2)]
        return cls.from_edges(n_sites, edges)

    def neighbors(self, site: int) -> list[int]:
        out = []
        for a, b in self.edges:
            if a == site:
                out.append(b)
            elif b == site:
                out.append(a)
        return sorted(out)

    def degree(self, site: int) -> int:
        return len(self.neighbors(site))


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def product_state(bits, cap: int | None = None) -> StateVector:
    """Computational basis state; ``bits[l-1]`` is the value of site ``l``."""
    bits = list(bits)
    if not bits:
        raise ValueError("empty bit list: a state needs at least one site")
    if any(b not in (0, 1) for b in bits):
        raise ValueError("bits must be 0 or 1")
    n = len(bits)
    _check_sites(n, cap)
    index = 0
    for l, b in enumerate(bits, start=1):
        index |= b << (l - 1)
    amps = np.zeros(1 << n, dtype=np.complex128)
    amps[index] = 1.0
    return StateVector(n, amps)


def all_zero_state(n: int, cap: int | None = None) -> StateVector:
    """The product vacuum |0...0> (every site at sigma_z = -1)."""
    return product_state([0] * n, cap)


def dicke_state(n: int, m: int, cap: int | None = None) -> StateVector:
    """Symmetric state with exactly ``m`` sites excited to |1>.

    Equal amplitude 1/sqrt(C(n,m)) on every Hamming-weight-m index, built by
    enumerating the weight-m indices directly.
    """
    _check_sites(n, cap)
    if not 0 <= m <= n:
        raise ValueError(f"excitation count m={m} outside 0..{n}")
    amps = np.zeros(1 << n, dtype=np.complex128)
    value = 1.0 / math.sqrt(math.comb(n, m))
    for positions in combinations(range(n), m):
        index = 0
        for p in positions:
            index |= 1 << p
        amps[index] = value
    return StateVector(n, amps)


def weighted_ghz(n: int, p: float, cap: int | None = None) -> StateVector:
    """sqrt(p)|0...0> + sqrt(1-p)|1...1>."""
    _check_sites(n, cap)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"weight p={p} outside [0, 1]")
    amps = np.zeros(1 << n, dtype=np.complex128)
    amps[0] = math.sqrt(p)
    amps[-1] = math.sqrt(1.0 - p)
    return StateVector(n, amps)


def ghz_state(n: int, cap: int | None = None) -> StateVector:
    """(|0...0> + |1...1>)/sqrt(2)."""
    return weighted_ghz(n, 0.5, cap)


def cluster_state(graph: LatticeGraph, cap: int | None = None) -> StateVector:
    """Simultaneous +1 eigenstate of K_l = sigma_l^x prod_{m in C(l)} sigma_m^z.

    Built as the controlled-Z graph state on |+>^N with an extra z-basis
    phase flip on every odd-degree site.  The flip is required because this
    package follows the sigma_z|0> = -|0> sign convention: without it the
    plain CZ state satisfies K_l = (-1)^deg(l) instead of +1.
    """
    n = graph.n_sites
    _check_sites(n, cap)
    dim = 1 << n
    amps = np.full(dim, 1.0 / math.sqrt(dim), dtype=np.complex128)
    idx = np.arange(dim, dtype=np.int64)
    for a, b in graph.edges:
        both = ((idx >> (a - 1)) & 1) & ((idx >> (b - 1)) & 1)
        amps[both == 1] *= -1.0
    for l in range(1, n + 1):
        if graph.degree(l) % 2 == 1:
            amps[((idx >> (l - 1)) & 1) == 1] *= -1.0
    return StateVector(n, amps)


def stabilizer_generators(graph: LatticeGraph) -> list[list[tuple[int, str]]]:
    """K_l as (site, axis) lists, one generator per site of ``graph``."""
    gens = []
    for l in range(1, graph.n_sites + 1):
        gens.append([(l, "X")] + [(m, "Z") for m in graph.neighbors(l)])
    return gens


# ---------------------------------------------------------------------------
# toric code
# ---------------------------------------------------------------------------

def _toric_edge_index(lx: int, ly: int, x: int, y: int, horizontal: bool) -> int:
    """1-based site index of the east (horizontal) or north edge at vertex (x,y)."""
    x %= lx
    y %= ly
    return 2 * (y * lx + x) + (0 if horizontal else 1) + 1


def toric_stabilizers(lx: int, ly: int) -> tuple[list[list[int]], list[list[int]]]:
    """Site lists of the vertex (sigma_x) and plaquette (sigma_z) stabilizers.

    Qubits live on the 2*lx*ly edges of an lx-by-ly torus.  The vertex
    operator at (x,y) acts on the four edges meeting that vertex; the
    plaquette operator acts on the four edges bounding the face whose
    lower-left corner is (x,y).
    """
    stars = []
    plaquettes = []
    for y in range(ly):
        for x in range(lx):
            stars.append(sorted({
                _toric_edge_index(lx, ly, x, y, True),
                _toric_edge_index(lx, ly, x - 1, y, True),
                _toric_edge_index(lx, ly, x, y, False),
                _toric_edge_index(lx, ly, x, y - 1, False),
            }))
            plaquettes.append(sorted({
                _toric_edge_index(lx, ly, x, y, True),
                _toric_edge_index(lx, ly, x, y + 1, True),
                _toric_edge_index(lx, ly, x, y, False),
                _toric_edge_index(lx, ly, x + 1, y, False),
            }))
    return stars, plaquettes


def toric_code_ground(lx: int, ly: int, cap: int | None = None) -> StateVector:
    """Toric-code ground state on an lx-by-ly torus (2*lx*ly edge qubits).

    The plaquette operators already stabilize |0...0>; the vertex projectors
    (1 + A_v)/2 are applied one at a time with renormalization after each, so
    intermediate norms stay O(1).
    """
    if lx < 2 or ly < 2:
        raise ValueError(f"torus dimensions must be >= 2, got ({lx},{ly})")
    n = 2 * lx * ly
    _check_sites(n, cap)
    stars, _ = toric_stabilizers(lx, ly)
    dim = 1 << n
    amps = np.zeros(dim, dtype=np.complex128)
    amps[0] = 1.0
    idx = np.arange(dim, dtype=np.int64)
    for star in stars:
        mask = 0
        for site in star:
            mask |= 1 << (site - 1)
        amps = amps + amps[idx ^ mask]
        amps /= np.linalg.norm(amps)
    return StateVector(n, amps)


def haar_random(n: int, seed: int, cap: int | None = None) -> StateVector:
    """Haar-random pure state from normalized complex Gaussian amplitudes.

    Sampling is reproducible: a ``numpy.random.default_rng(seed)`` (PCG64)
    generator draws the real parts of all 2**N amplitudes first, then the
    imaginary parts.
    """
    _check_sites(n, cap)
    rng = np.random.default_rng(seed)
    dim = 1 << n
    re = rng.standard_normal(dim)
    im = rng.standard_normal(dim)
    amps = re + 1j * im
    amps /= np.linalg.norm(amps)
    return StateVector(n, amps)
