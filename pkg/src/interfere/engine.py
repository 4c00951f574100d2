"""Many-particle transition probabilities with partial distinguishability.

The probability of detecting the output occupation s from input modes
r = (r_1..r_N) through an m-mode network U, for particles with internal-state
overlaps S, is the doubly permuted path sum

    P = (1 / prod_j s_j!) * sum_{sigma, rho in S_N} eps(sigma) eps(rho)
        * prod_k S[sigma(k), rho(k)] * conj(U[r_sigma(k), d_k]) * U[r_rho(k), d_k]

where d is the expansion of s into one output mode per particle and eps is 1
for bosons and the permutation sign for fermions. Grouping the pairs by the
relative permutation tau = rho o sigma^{-1} factors the overlap weight out of
the inner sum: the weight of a pair depends only on tau, as
prod_j S[j, tau(j)], and eps(sigma) eps(rho) = eps(tau). The evaluation here
iterates tau and vectorizes the inner sum over sigma.

Fully indistinguishable and fully distinguishable particles admit closed
forms (permanent/determinant of the scattering submatrix, and permanent of
its squared moduli), provided as fast paths.
"""

import functools
import itertools
import math
from dataclasses import dataclass

import numpy as np

from .exceptions import ConsistencyError, DomainError, ResourceError
from . import linalg
from .model import (
    Statistics,
    enumerate_occupations,
    occupation_to_assignment,
    validate_gram,
    validate_occupation,
)

MAX_GENERAL_PARTICLES = 7
MAX_FAST_PATH_PARTICLES = 16
MAX_DISTRIBUTION_PARTICLES = 5
MAX_DISTRIBUTION_MODES = 12
IMAG_TOL = 1e-10
CLAMP_SLACK = 1e-10


@dataclass(frozen=True)
class EventSpec:
    """One transition event: network, input modes, output occupation, overlaps."""

    unitary: np.ndarray
    input_modes: tuple
    output: tuple
    gram: np.ndarray
    statistics: Statistics

    def validated(self):
        """Check dimensional consistency; returns (U, r, s, S) as arrays/tuples."""
        u = np.asarray(self.unitary, dtype=complex)
        if u.ndim != 2 or u.shape[0] != u.shape[1]:
            raise DomainError(f"unitary must be square, got shape {u.shape}")
        m = u.shape[0]
        r = tuple(int(j) for j in self.input_modes)
        n = len(r)
        if n < 1:
            raise DomainError("at least one particle required")
        if any(not 0 <= j < m for j in r):
            raise DomainError(f"input modes {r} out of range for {m} modes")
        s = validate_occupation(self.output)
        if len(s) != m:
            raise DomainError(f"output occupation has {len(s)} modes, unitary has {m}")
        if sum(s) != n:
            raise DomainError(f"output occupation holds {sum(s)} particles, input holds {n}")
        gram = validate_gram(self.gram)
        if gram.shape[0] != n:
            raise DomainError(f"overlap matrix is {gram.shape[0]}x{gram.shape[0]}, need {n}x{n}")
        if self.statistics is Statistics.FERMION:
            for a, b in itertools.combinations(range(n), 2):
                if r[a] == r[b] and abs(gram[a, b]) > 1e-12:
                    raise DomainError(
                        "fermions sharing an input mode require orthogonal internal states"
                    )
        return u, r, s, gram


@functools.lru_cache(maxsize=None)
def _permutation_table(n: int):
    """All permutations of range(n) in lexicographic order, with signs and
    moved-point counts. Arrays are cached read-only."""
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.intp)
    signs = np.empty(len(perms), dtype=np.intp)
    for i, p in enumerate(perms):
        sign = 1
        seen = [False] * n
        for start in range(n):
            if seen[start]:
                continue
            j = start
            length = 0
            while not seen[j]:
                seen[j] = True
                j = p[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
        signs[i] = sign
    moved = (perms != np.arange(n)).sum(axis=1)
    for a in (perms, signs, moved):
        a.setflags(write=False)
    return perms, signs, moved


def relative_permutation_terms(unitary, input_modes, output):
    """Per-tau inner sums of the pairwise path expansion.

    For each relative permutation tau (lexicographic order) returns
    G(tau) = sum_sigma conj(A_sigma) A_{tau o sigma}, where A_sigma is the
    path amplitude prod_k U[r_sigma(k), d_k]. Also returns the permutation
    signs and moved-point counts, and the output multiplicity factor
    prod_j s_j!. G is independent of both the statistics and the overlaps.
    """
    u = np.asarray(unitary, dtype=complex)
    r = np.asarray(input_modes, dtype=np.intp)
    n = len(r)
    if n > MAX_GENERAL_PARTICLES:
        raise ResourceError(
            f"pairwise path sum limited to {MAX_GENERAL_PARTICLES} particles, got {n}"
        )
    d = np.asarray(occupation_to_assignment(output), dtype=np.intp)
    perms, signs, moved = _permutation_table(n)
    amps = u[r[perms], d[None, :]].prod(axis=1)
    conj_amps = amps.conj()
    inner = np.empty(len(perms), dtype=complex)
    for t in range(len(perms)):
        composed = perms[t][perms]
        inner[t] = conj_amps @ u[r[composed], d[None, :]].prod(axis=1)
    multiplicity = 1.0
    for c in output:
        multiplicity *= math.factorial(int(c))
    return perms, signs, moved, inner, multiplicity


def _as_probability(value, context: str) -> float:
    """Discard a bounded imaginary residue and clamp to [0, 1] within slack."""
    v = complex(value)
    if abs(v.imag) > IMAG_TOL:
        raise ConsistencyError(f"{context}: imaginary residue {v.imag:.3e} exceeds {IMAG_TOL}")
    p = v.real
    if p < -CLAMP_SLACK or p > 1.0 + CLAMP_SLACK:
        raise ConsistencyError(f"{context}: value {p!r} outside [0, 1] beyond slack")
    return min(max(p, 0.0), 1.0) + 0.0  # normalizes -0.0


def event_probability(spec: EventSpec) -> float:
    """Transition probability of one event under partial distinguishability."""
    u, r, s, gram = spec.validated()
    perms, signs, moved, inner, multiplicity = relative_permutation_terms(u, r, s)
    n = len(r)
    weights = gram[np.arange(n)[None, :], perms].prod(axis=1)
    if spec.statistics is Statistics.FERMION:
        weights = weights * signs
    total = (weights * inner).sum() / multiplicity
    return _as_probability(total, "event probability")


def quantum_probability(unitary, input_modes, output, statistics: Statistics) -> float:
    """Fast path for fully indistinguishable particles (all-ones overlaps).

    Bosons: |permanent|^2 / prod_j s_j! of the scattering submatrix;
    fermions: |determinant|^2.
    """
    output = validate_occupation(output)
    n = len(tuple(input_modes))
    if n > MAX_FAST_PATH_PARTICLES:
        raise ResourceError(f"fast path limited to {MAX_FAST_PATH_PARTICLES} particles, got {n}")
    if sum(output) != n:
        raise DomainError(f"output occupation holds {sum(output)} particles, input holds {n}")
    sub = linalg.scattering_submatrix(unitary, input_modes, occupation_to_assignment(output))
    if statistics is Statistics.FERMION:
        amp = linalg.determinant(sub)
        value = abs(amp) ** 2
    else:
        amp = linalg.permanent(sub)
        value = abs(amp) ** 2
        for c in output:
            value /= math.factorial(int(c))
    return _as_probability(value, "quantum probability")


def classical_probability(unitary, input_modes, output) -> float:
    """Fast path for fully distinguishable particles (identity overlaps).

    Permanent of the elementwise |U|^2 scattering submatrix over the output
    multiplicity; equal to the multinomial count times the single-particle
    probabilities whenever those are constant.
    """
    output = validate_occupation(output)
    n = len(tuple(input_modes))
    if n > MAX_FAST_PATH_PARTICLES:
        raise ResourceError(f"fast path limited to {MAX_FAST_PATH_PARTICLES} particles, got {n}")
    if sum(output) != n:
        raise DomainError(f"output occupation holds {sum(output)} particles, input holds {n}")
    sub = linalg.scattering_submatrix(unitary, input_modes, occupation_to_assignment(output))
    value = linalg.permanent(np.abs(sub) ** 2)
    for c in output:
        value /= math.factorial(int(c))
    return _as_probability(value, "classical probability")


def full_distribution(unitary, input_modes, gram, statistics: Statistics) -> dict:
    """Probabilities of every output occupation, keyed by occupation tuple.

    Enumerates all C(m + N - 1, N) outputs in lexicographic order. The
    normalization (sum equal to 1) holds when input modes are distinct or the
    internal states of same-mode particles are orthogonal.
    """
    u = np.asarray(unitary, dtype=complex)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise DomainError(f"unitary must be square, got shape {u.shape}")
    m = u.shape[0]
    n = len(tuple(input_modes))
    if n > MAX_DISTRIBUTION_PARTICLES or m > MAX_DISTRIBUTION_MODES:
        raise ResourceError(
            f"full distribution limited to {MAX_DISTRIBUTION_PARTICLES} particles in "
            f"{MAX_DISTRIBUTION_MODES} modes, got {n} in {m}"
        )
    result = {}
    for occ in enumerate_occupations(m, n):
        spec = EventSpec(u, tuple(input_modes), occ, gram, statistics)
        result[occ] = event_probability(spec)
    return result
