"""Symmetric group characters and Littlewood-Richardson structure constants.

Character values come from the Murnaghan-Nakayama recursion over connected
border strips (rim hooks), run on beta numbers and memoized.  LR
coefficients are computed by direct enumeration of lattice-word skew
semistandard tableaux; this is deliberately the slow transparent algorithm,
because these numbers serve as the oracle for everything else.

Everything here is an exact integer.
"""

from __future__ import annotations

from functools import lru_cache

from .partitions import (
    HS,
    Partition,
    add_strips,
    contains,
    partition,
    size,
)


class SizeMismatchError(ValueError):
    """Cycle type and shape index representations of different groups."""


@lru_cache(maxsize=None)
def _rim_hook_removals(lam: Partition, s: int) -> tuple[tuple[Partition, int], ...]:
    """All (result, height) for removable rim hooks of size s from lam."""
    n = len(lam)
    beta = [lam[i] + (n - 1 - i) for i in range(n)]
    present = set(beta)
    out = []
    for i, b in enumerate(beta):
        nb = b - s
        if nb < 0 or nb in present:
            continue
        height = 1 + sum(1 for x in beta if nb < x < b)
        replaced = sorted(beta[:i] + [nb] + beta[i + 1 :], reverse=True)
        result = partition(replaced[j] - (n - 1 - j) for j in range(n))
        out.append((result, height))
    return tuple(out)


@lru_cache(maxsize=None)
def _mn(mu: Partition, lam: Partition) -> int:
    if not mu:
        return 1
    total = 0
    for result, height in _rim_hook_removals(lam, mu[0]):
        total += (-1) ** (height - 1) * _mn(mu[1:], result)
    return total


def mn_trace(mu: Partition, lam: Partition) -> int:
    """Trace of the conjugacy class of cycle type mu on the irreducible
    indexed by lam.  Requires |mu| = |lam|."""
    if size(mu) != size(lam):
        raise SizeMismatchError(f"|mu|={size(mu)} but |lam|={size(lam)}")
    return _mn(mu, lam)


# ---------------------------------------------------------------------------
# Littlewood-Richardson rule


def _skew_cells(nu: Partition, lam: Partition) -> list[tuple[int, int]]:
    """Cells of nu/lam in reading order: rows top down, right to left."""
    cells = []
    for i, row in enumerate(nu):
        lo = lam[i] if i < len(lam) else 0
        for j in range(row - 1, lo - 1, -1):
            cells.append((i, j))
    return cells


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """The multiplicity c^nu_{lam,mu} counting lattice-word semistandard
    skew tableaux of shape nu/lam and content mu."""
    if size(nu) != size(lam) + size(mu):
        return 0
    if not (contains(nu, lam) and contains(nu, mu)):
        return 0
    cells = _skew_cells(nu, lam)
    k = len(mu)
    filled: dict[tuple[int, int], int] = {}
    used = [0] * (k + 1)

    def count(pos: int) -> int:
        if pos == len(cells):
            return 1
        i, j = cells[pos]
        total = 0
        for v in range(1, k + 1):
            if used[v] >= mu[v - 1]:
                continue
            if v > 1 and used[v] + 1 > used[v - 1]:
                continue  # reading-word prefix must stay a lattice word
            right = filled.get((i, j + 1))
            if right is not None and v > right:
                continue  # rows weakly increase left to right
            above = filled.get((i - 1, j))
            if above is not None and v <= above:
                continue  # columns strictly increase downwards
            filled[(i, j)] = v
            used[v] += 1
            total += count(pos + 1)
            used[v] -= 1
            del filled[(i, j)]
        return total

    return count(0)


@lru_cache(maxsize=None)
def lr_expand(lam: Partition, mu: Partition) -> tuple[tuple[Partition, int], ...]:
    """All (nu, c^nu_{lam,mu}) with nonzero coefficient."""
    from .partitions import _partitions_cached

    out = []
    for nu in _partitions_cached(size(lam) + size(mu)):
        if not (contains(nu, lam) and contains(nu, mu)):
            continue
        c = lr_coefficient(lam, mu, nu)
        if c:
            out.append((nu, c))
    return tuple(out)


# ---------------------------------------------------------------------------
# Formal integer combinations of partitions


def _term_order(p: Partition):
    return (size(p), tuple(-x for x in p))


class VClass:
    """Finitely supported integer combination of simple objects [S_lam]."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[Partition, int] | None = None):
        self.coeffs = {p: c for p, c in (coeffs or {}).items() if c != 0}

    @classmethod
    def simple(cls, lam) -> "VClass":
        return cls({partition(lam): 1})

    @classmethod
    def zero(cls) -> "VClass":
        return cls()

    def items(self) -> list[tuple[Partition, int]]:
        return sorted(self.coeffs.items(), key=lambda kv: _term_order(kv[0]))

    def __add__(self, other: "VClass") -> "VClass":
        out = dict(self.coeffs)
        for p, c in other.coeffs.items():
            out[p] = out.get(p, 0) + c
        return VClass(out)

    def __sub__(self, other: "VClass") -> "VClass":
        return self + (-other)

    def __neg__(self) -> "VClass":
        return VClass({p: -c for p, c in self.coeffs.items()})

    def __rmul__(self, n: int) -> "VClass":
        return VClass({p: n * c for p, c in self.coeffs.items()})

    def __mul__(self, other: "VClass") -> "VClass":
        return schur_product(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, VClass) and self.coeffs == other.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        bits = []
        for p, c in self.items():
            name = f"S[{','.join(map(str, p)) or '0'}]"
            bits.append(f"{'+' if c >= 0 else '-'}{abs(c) if abs(c) != 1 else ''}{name}")
        return "".join(bits).lstrip("+")

    def max_size(self) -> int:
        return max((size(p) for p in self.coeffs), default=0)


def schur_product(x: VClass, y: VClass) -> VClass:
    """Bilinear extension of [S_lam][S_mu] = sum of c^nu [S_nu]."""
    out: dict[Partition, int] = {}
    for lam, a in x.coeffs.items():
        for mu, b in y.coeffs.items():
            for nu, c in lr_expand(lam, mu):
                out[nu] = out.get(nu, 0) + a * b * c
    return VClass(out)


def pieri_class(lam: Partition, d: int, kind: str = HS) -> VClass:
    """Sum of [S_mu] over strips mu/lam of size d, all coefficients one."""
    return VClass({mu: 1 for mu in add_strips(lam, d, kind)})
