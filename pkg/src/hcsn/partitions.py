"""Integer partition arithmetic and the m-restricted / m-trivial combinatorics.

A partition is a tuple of weakly decreasing positive integers, stored without
trailing zeros; ``()`` is the empty partition. Componentwise sums and scalar
multiples pad with zeros implicitly, so ``(4,2,1,1) + 3*(1,1) == (7,5,1,1)``.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple

Partition = tuple[int, ...]


def as_partition(parts: Iterable[int]) -> Partition:
    """Normalize to canonical form (no trailing zeros) and validate."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x <= 0 for x in p):
        raise ValueError(f"partition parts must be positive: {p!r}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {p!r}")
    return p


def parse_partition(text: str) -> Partition:
    """Parse the text form: comma-separated descending parts, '' for ()."""
    text = text.strip()
    if not text:
        return ()
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise ValueError(f"malformed partition text: {text!r}") from exc
    return as_partition(parts)


def format_partition(p: Partition) -> str:
    return ",".join(str(x) for x in p)


def differences(p: Partition) -> tuple[int, ...]:
    """Consecutive part differences, with a trailing zero appended.

    The i-th entry is p[i] - p[i+1]; the last entry is the last part itself.
    The empty partition has no differences.
    """
    if not p:
        return ()
    return tuple(p[i] - p[i + 1] for i in range(len(p) - 1)) + (p[-1],)


def from_differences(d: Iterable[int]) -> Partition:
    """Inverse of :func:`differences`: parts are the suffix sums."""
    d = list(d)
    parts = []
    total = 0
    for x in reversed(d):
        total += x
        parts.append(total)
    return as_partition(reversed(parts))


def add_scaled(mu: Partition, nu: Partition, m: int) -> Partition:
    """Componentwise mu + m*nu, padding the shorter with zeros."""
    length = max(len(mu), len(nu))
    return as_partition(
        (mu[i] if i < len(mu) else 0) + m * (nu[i] if i < len(nu) else 0)
        for i in range(length)
    )


def is_m_restricted(lam: Partition, m: int) -> bool:
    """True iff every consecutive difference (trailing zero included) is < m."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return all(d < m for d in differences(lam))


def is_m_trivial(lam: Partition, m: int) -> bool:
    """True iff lam is (m-1, ..., m-1, b) with 0 <= b < m-1.

    The run of parts equal to m-1 may be empty, and b = 0 means there is no
    extra part.
    """
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    i = 0
    while i < len(lam) and lam[i] == m - 1:
        i += 1
    rest = lam[i:]
    if not rest:
        return True
    return len(rest) == 1 and 0 < rest[0] < m - 1


class RestrictedDecomposition(NamedTuple):
    mu: Partition
    nu: Partition
    m: int


def decompose(lam: Partition, m: int) -> RestrictedDecomposition:
    """Split lam as mu + m*nu with mu m-restricted; the pair is unique.

    Each consecutive difference d is written d = e + m*f with 0 <= e < m;
    mu and nu are the partitions with difference sequences e and f.
    """
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    d = differences(lam)
    mu = from_differences(x % m for x in d)
    nu = from_differences(x // m for x in d)
    return RestrictedDecomposition(mu, nu, m)


def triv_partition(k: int, m: int) -> Partition:
    """The unique m-trivial partition of size k."""
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    q, b = divmod(k, m - 1)
    return as_partition((m - 1,) * q + ((b,) if b else ()))


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n, in reverse-lexicographic order."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return list(_gen_partitions(n, n))


def _gen_partitions(n: int, max_part: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _gen_partitions(n - first, first):
            yield (first,) + rest


def phi_image_labels(n: int, m: int) -> set[Partition]:
    """Partitions lam of n whose m-restricted component is m-trivial.

    These label the simple Harish-Chandra bimodules at parameter r/m.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 2 <= m <= n:
        raise ValueError(f"m must satisfy 2 <= m <= n, got m={m}, n={n}")
    return {
        lam
        for lam in enumerate_partitions(n)
        if is_m_trivial(decompose(lam, m).mu, m)
    }


def sorted_partitions(labels: Iterable[Partition]) -> list[Partition]:
    """Canonical (reverse-lexicographic) ordering, for stable output."""
    return sorted(labels, reverse=True)
