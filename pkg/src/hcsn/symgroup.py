"""Symmetric group branching data at the Grothendieck-group level.

Irreducible representations of S_n are indexed by partitions of n. Restriction
to a Young subgroup S_{n1} x ... x S_{nk} is encoded by iterated
Littlewood-Richardson coefficients, computed here by counting skew tableaux
satisfying the ballot condition.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .partitions import Partition, enumerate_partitions

_LR_CACHE: dict[tuple[Partition, Partition, Partition], int] = {}


class ShapeMismatchError(ValueError):
    """Partition sizes are inconsistent with the subgroup composition."""


@dataclass(frozen=True)
class YoungSubgroup:
    """The subgroup S_{n1} x ... x S_{nk} of S_n, n = n1 + ... + nk."""

    blocks: tuple[int, ...]

    def __post_init__(self):
        if not self.blocks or any(b < 1 for b in self.blocks):
            raise ValueError(f"blocks must be positive integers: {self.blocks!r}")

    @property
    def ambient(self) -> int:
        return sum(self.blocks)


@dataclass
class K0Vector:
    """Multiplicity map over tuples of partitions, one partition per block."""

    entries: dict[tuple[Partition, ...], int]

    def items_sorted(self):
        return sorted(self.entries.items(), key=lambda kv: kv[0])

    def __eq__(self, other):
        if not isinstance(other, K0Vector):
            return NotImplemented
        return self.entries == other.entries

    def __iter__(self):
        return iter(self.items_sorted())


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > j) for j in range(lam[0]))


def dim_irrep(lam: Partition) -> int:
    """Number of standard Young tableaux of shape lam (hook length formula)."""
    n = sum(lam)
    conj = conjugate(lam)
    result = factorial(n)
    for i, row in enumerate(lam):
        for j in range(row):
            result //= row - j + conj[j] - i - 1
    return result


def _contains(lam: Partition, mu: Partition) -> bool:
    return len(mu) <= len(lam) and all(mu[i] <= lam[i] for i in range(len(mu)))


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """The Littlewood-Richardson coefficient c^lam_{mu,nu}.

    Counts semistandard skew tableaux of shape lam/mu and content nu whose
    reverse reading word (rows top to bottom, each read right to left) is a
    ballot sequence.
    """
    key = (lam, mu, nu)
    cached = _LR_CACHE.get(key)
    if cached is not None:
        return cached
    if sum(lam) != sum(mu) + sum(nu) or not _contains(lam, mu):
        _LR_CACHE[key] = 0
        return 0
    cells = []
    for r, row in enumerate(lam):
        inner = mu[r] if r < len(mu) else 0
        for c in range(row - 1, inner - 1, -1):
            cells.append((r, c))
    values = len(nu)
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (values + 1)

    def backtrack(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        right = filling.get((r, c + 1))
        above = filling.get((r - 1, c))
        vmin = 1 if above is None else above + 1
        vmax = values if right is None else right
        total = 0
        for v in range(vmin, vmax + 1):
            if counts[v] >= nu[v - 1]:
                continue
            if v >= 2 and counts[v] >= counts[v - 1]:
                continue
            filling[(r, c)] = v
            counts[v] += 1
            total += backtrack(idx + 1)
            counts[v] -= 1
            del filling[(r, c)]
        return total

    result = backtrack(0)
    _LR_CACHE[key] = result
    return result


def branching_multiplicity(
    lam: Partition, subgroup: YoungSubgroup, taus: tuple[Partition, ...]
) -> int:
    """Multiplicity of the outer product of the taus in lam restricted."""
    if sum(lam) != subgroup.ambient:
        raise ShapeMismatchError(
            f"|lam| = {sum(lam)} but the subgroup sits in S_{subgroup.ambient}"
        )
    if len(taus) != len(subgroup.blocks):
        raise ShapeMismatchError(
            f"{len(taus)} factors given for {len(subgroup.blocks)} blocks"
        )
    for tau, b in zip(taus, subgroup.blocks):
        if sum(tau) != b:
            raise ShapeMismatchError(f"|{tau}| != block size {b}")
    return _branch(lam, subgroup.blocks, tuple(taus))


def _branch(lam: Partition, blocks: tuple[int, ...], taus: tuple[Partition, ...]) -> int:
    if len(blocks) == 1:
        return 1 if taus[0] == lam else 0
    rest = sum(lam) - blocks[-1]
    total = 0
    for rho in enumerate_partitions(rest):
        if not _contains(lam, rho):
            continue
        c = lr_coefficient(lam, rho, taus[-1])
        if c:
            total += c * _branch(rho, blocks[:-1], taus[:-1])
    return total


def restrict_standard_k0(lam: Partition, subgroup: YoungSubgroup) -> K0Vector:
    """Class of the restriction of the standard object indexed by lam.

    Splitting off one block at a time, the multiplicity of each tuple is the
    iterated Littlewood-Richardson coefficient.
    """
    if sum(lam) != subgroup.ambient:
        raise ShapeMismatchError(
            f"|lam| = {sum(lam)} but the subgroup sits in S_{subgroup.ambient}"
        )
    blocks = subgroup.blocks
    frontier: dict[tuple[Partition, ...], int] = {(lam,): 1}
    for b in blocks[:-1]:
        new: dict[tuple[Partition, ...], int] = {}
        for key, mult in frontier.items():
            sigma = key[-1]
            rest = sum(sigma) - b
            for tau in enumerate_partitions(b):
                for rho in enumerate_partitions(rest):
                    c = lr_coefficient(sigma, rho, tau)
                    if c:
                        new_key = key[:-1] + (tau, rho)
                        new[new_key] = new.get(new_key, 0) + mult * c
        frontier = new
    return K0Vector(frontier)
