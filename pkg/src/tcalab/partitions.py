"""Integer partitions and strip/border-strip combinatorics.

A partition is a canonical tuple of weakly decreasing positive integers;
the empty tuple () is the empty partition.  Everything downstream (symmetric
group characters, K-theory bases, local cohomology tables) is indexed by
partitions, and the two strip relations

    HS: lam/mu is a horizontal strip  (at most one box per column),
    VS: lam/mu is a vertical strip    (at most one box per row),

drive all of it.  Border strips are handled through first-column hook
lengths (beta numbers), which make the "aligned" enumeration and the
rho-shifted sorting rule two views of the same computation.

All functions are pure and all values immutable.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterator, NamedTuple

Partition = tuple[int, ...]

HS = "HS"
VS = "VS"


class PartitionError(ValueError):
    """Raised when input does not describe a valid partition."""


def partition(parts) -> Partition:
    """Canonicalize an iterable of parts: strip zeros, validate monotonicity."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    for i, x in enumerate(p):
        if x <= 0:
            raise PartitionError(f"parts must be positive, got {x}")
        if i + 1 < len(p) and p[i + 1] > x:
            raise PartitionError(f"parts must be weakly decreasing: {p}")
    return p


def parse_partition(text: str) -> Partition:
    """Parse the CLI syntax: comma-separated parts; '' or '0' is empty."""
    text = text.strip()
    if text in ("", "0"):
        return ()
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise PartitionError(f"cannot parse partition {text!r}") from exc
    return partition(parts)


def format_partition(p: Partition) -> str:
    return ",".join(str(x) for x in p) if p else "0"


def size(p: Partition) -> int:
    return sum(p)


def length(p: Partition) -> int:
    return len(p)


def transpose(p: Partition) -> Partition:
    """Conjugate partition: column lengths of the diagram."""
    if not p:
        return ()
    cols = [0] * p[0]
    for row in p:
        for j in range(row):
            cols[j] += 1
    return tuple(cols)


def contains(outer: Partition, inner: Partition) -> bool:
    """Containment of diagrams: inner_i <= outer_i for all rows."""
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def multiplicities(p: Partition) -> dict[int, int]:
    """Map part value i to its multiplicity m_i."""
    m: dict[int, int] = {}
    for x in p:
        m[x] = m.get(x, 0) + 1
    return m


def aut_factor(p: Partition) -> int:
    """The product of m_i! over the part multiplicities (written lam!)."""
    out = 1
    for c in multiplicities(p).values():
        out *= factorial(c)
    return out


class PartitionStats(NamedTuple):
    multiplicities: dict[int, int]
    aut_factor: int
    length: int
    size: int


def stats(p: Partition) -> PartitionStats:
    """Multiplicities m_i, lam! = prod m_i!, number of rows, number of boxes."""
    return PartitionStats(multiplicities(p), aut_factor(p), len(p), sum(p))


def conjugacy_class_size_factor(p: Partition) -> int:
    """z_mu = prod i^{m_i} m_i!, the centralizer order of the class mu."""
    z = 1
    for i, c in multiplicities(p).items():
        z *= i**c * factorial(c)
    return z


# ---------------------------------------------------------------------------
# Enumeration


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n, lexicographically descending."""
    return list(_partitions_of(n))


@lru_cache(maxsize=None)
def _partitions_cached(n: int) -> tuple[Partition, ...]:
    return tuple(_partitions_of(n))


def _partitions_of(n: int, cap: int | None = None) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    if cap is None:
        cap = n
    for first in range(min(n, cap), 0, -1):
        for rest in _partitions_of(n - first, first):
            yield (first,) + rest


def partitions_up_to(n: int) -> list[Partition]:
    """All partitions of size 0..n, ordered by size then lex descending."""
    out: list[Partition] = []
    for k in range(n + 1):
        out.extend(_partitions_cached(k))
    return out


# ---------------------------------------------------------------------------
# Horizontal and vertical strips


def is_strip(lam: Partition, mu: Partition, kind: str) -> bool:
    """True iff mu is contained in lam and lam/mu is a strip of the kind."""
    if kind == VS:
        return is_strip(transpose(lam), transpose(mu), HS)
    if kind != HS:
        raise ValueError(f"kind must be 'HS' or 'VS', got {kind!r}")
    if not contains(lam, mu):
        return False
    # interleaving: lam_i >= mu_i >= lam_{i+1}
    for i in range(len(lam)):
        mu_i = mu[i] if i < len(mu) else 0
        nxt = lam[i + 1] if i + 1 < len(lam) else 0
        if not (lam[i] >= mu_i >= nxt):
            return False
    return True


def remove_strips(lam: Partition, d: int, kind: str) -> list[Partition]:
    """All mu with lam/mu a strip of size d, lexicographically descending."""
    if d < 0:
        raise ValueError("strip size must be nonnegative")
    if kind == VS:
        inner = remove_strips(transpose(lam), d, HS)
        return sorted((transpose(m) for m in inner), reverse=True)
    if kind != HS:
        raise ValueError(f"kind must be 'HS' or 'VS', got {kind!r}")
    results: list[Partition] = []

    def rec(i: int, budget: int, acc: list[int]) -> None:
        if i == len(lam):
            if budget == 0:
                results.append(partition(acc))
            return
        nxt = lam[i + 1] if i + 1 < len(lam) else 0
        # mu_i ranges over [lam_{i+1}, lam_i]; spend lam_i - mu_i boxes
        for mu_i in range(lam[i], nxt - 1, -1):
            spent = lam[i] - mu_i
            if spent > budget:
                break
            rec(i + 1, budget - spent, acc + [mu_i])

    rec(0, d, [])
    return sorted(results, reverse=True)


def add_strips(lam: Partition, d: int, kind: str) -> list[Partition]:
    """All mu with mu/lam a strip of size d, lexicographically descending."""
    if d < 0:
        raise ValueError("strip size must be nonnegative")
    if kind == VS:
        inner = add_strips(transpose(lam), d, HS)
        return sorted((transpose(m) for m in inner), reverse=True)
    if kind != HS:
        raise ValueError(f"kind must be 'HS' or 'VS', got {kind!r}")
    rows = len(lam) + 1
    results: list[Partition] = []

    def rec(i: int, budget: int, acc: list[int]) -> None:
        if i == rows:
            if budget == 0:
                results.append(partition(acc))
            return
        lo = lam[i] if i < len(lam) else 0
        hi = lam[i - 1] if i > 0 else lo + budget
        hi = min(hi, lo + budget)
        for mu_i in range(hi, lo - 1, -1):
            rec(i + 1, budget - (mu_i - lo), acc + [mu_i])

    rec(0, d, [])
    return sorted(results, reverse=True)


# ---------------------------------------------------------------------------
# Hooks and dimensions


def hook_lengths(p: Partition) -> list[list[int]]:
    t = transpose(p)
    return [
        [p[i] - j + t[j] - i - 1 for j in range(p[i])]
        for i in range(len(p))
    ]


def hook_dimension(p: Partition) -> int:
    """Dimension of the symmetric group irreducible indexed by p."""
    if not p:
        return 1
    denom = 1
    for row in hook_lengths(p):
        for h in row:
            denom *= h
    return factorial(size(p)) // denom


def stable_dimension_poly(mu: Partition) -> tuple[Fraction, ...]:
    """Coefficients (degree-ascending) of the polynomial in N whose value is
    the dimension of the irreducible indexed by (mu_1+1, ..., mu_l+1, 1^N).

    Degree is |mu|.  Built from the hook length formula: the quotient of
    consecutive-factor products below is exact.
    """
    l, n = len(mu), size(mu)
    skip = {l + mu[i] - i for i in range(l)}  # offsets l + mu_i - (i+1) + 1
    poly = [Fraction(1)]
    for j in range(1, l + n + 1):
        if j in skip:
            continue
        # multiply by (N + j)
        nxt = [Fraction(0)] * (len(poly) + 1)
        for k, c in enumerate(poly):
            nxt[k] += c * j
            nxt[k + 1] += c
        poly = nxt
    denom = 1
    for row in hook_lengths(mu):
        for h in row:
            denom *= h
    return tuple(c / denom for c in poly)


def eval_poly(coeffs: tuple[Fraction, ...], x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


# ---------------------------------------------------------------------------
# Prefixed shapes, aligned border strips, shifted normalization


def prefixed(first: int, rest: Partition) -> tuple[int, ...]:
    """The integer sequence (first, rest); a partition iff first >= rest_1."""
    return (first,) + rest


def prefixed_is_partition(first: int, rest: Partition) -> bool:
    return first >= (rest[0] if rest else 0)


def prefixed_to_partition(first: int, rest: Partition) -> Partition:
    if not prefixed_is_partition(first, rest) or first < 0:
        raise PartitionError(f"({first}, {rest}) is not a partition")
    return partition((first,) + rest)


class BorderStripRemoval(NamedTuple):
    size: int
    height: int  # number of rows the strip occupies
    result: Partition


def _beta_numbers(p: Partition) -> list[int]:
    n = len(p)
    return [p[i] + (n - 1 - i) for i in range(n)]


def _partition_from_beta(beta: list[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    n = len(beta)
    return partition(beta[i] - (n - 1 - i) for i in range(n))


def aligned_border_strips(shape: Partition) -> list[BorderStripRemoval]:
    """All removable connected border strips containing the last box of the
    first row, one per realizable size, ordered by increasing size.

    In beta-number terms these are exactly the removals lowering the largest
    beta number; the height is one more than the number of beta numbers
    jumped over.
    """
    if not shape:
        return []
    beta = _beta_numbers(shape)
    rest = set(beta[1:])
    out: list[BorderStripRemoval] = []
    for s in range(1, beta[0] + 1):
        b = beta[0] - s
        if b in rest:
            continue
        height = 1 + sum(1 for x in beta[1:] if x > b)
        result = _partition_from_beta([b] + beta[1:])
        out.append(BorderStripRemoval(s, height, result))
    return out


def border_strip_component_count(outer: Partition, inner: Partition) -> int:
    """Number of connected components of the skew shape outer/inner, which
    must be a border strip (contain no 2x2 square).

    Exposed for the general, possibly disconnected notion; only the aligned
    (connected) enumeration feeds local cohomology.
    """
    if not contains(outer, inner):
        raise PartitionError("inner must be contained in outer")
    cells = set()
    for i, row in enumerate(outer):
        lo = inner[i] if i < len(inner) else 0
        for j in range(lo, row):
            cells.add((i, j))
    for (i, j) in cells:
        if {(i + 1, j), (i, j + 1), (i + 1, j + 1)} <= cells:
            raise PartitionError("skew shape contains a 2x2 square")
    comps = 0
    seen: set[tuple[int, int]] = set()
    for cell in cells:
        if cell in seen:
            continue
        comps += 1
        stack = [cell]
        while stack:
            i, j = stack.pop()
            if (i, j) in seen:
                continue
            seen.add((i, j))
            for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                if nb in cells and nb not in seen:
                    stack.append(nb)
    return comps


def shifted_normalize(
    first: int, rest: Partition
) -> tuple[int, Partition] | None:
    """Sort alpha = (first, rest) under the shifted action w(alpha+rho)-rho
    with rho = (-1,-2,-3,...).

    Returns None when alpha is singular (alpha+rho has a repeated entry,
    including collisions with the infinite tail of the zero padding), else
    the pair (sign, normalized) with sign = (-1)^(inversions of w).
    """
    alpha = (first,) + rest
    m = len(alpha)
    shifted = [alpha[i] - (i + 1) for i in range(m)]
    if len(set(shifted)) < m:
        return None
    # zero padding continues alpha; its shifted entries are -(m+1), -(m+2), ...
    if any(e <= -(m + 1) for e in shifted):
        return None
    inversions = sum(
        1
        for i in range(m)
        for j in range(i + 1, m)
        if shifted[i] < shifted[j]
    )
    ordered = sorted(shifted, reverse=True)
    normalized = partition(ordered[i] + (i + 1) for i in range(m))
    return ((-1) ** inversions, normalized)
