"""Grothendieck groups: the L and Q bases, the Euler pairing, the Fourier
involution, classes of modules over the full ring, and the derivative
calculus on classes.

K(Mod_K) has two distinguished bases: classes of simples [L_lam] and classes
of indecomposable injectives [Q_lam].  The change of basis removes
horizontal strips in one direction and signed vertical strips in the other.
Products are computed with the Littlewood-Richardson rule in either basis.

Classes over the full polynomial ring are ungraded Euler classes spanned by
simples [S_lam] (torsion) and projectives [A x S_lam]; homological shifts
are absorbed into signs.
"""

from __future__ import annotations

from .partitions import (
    HS,
    VS,
    Partition,
    partition,
    remove_strips,
    size,
)
from .symchar import VClass, lr_expand, _term_order


class BasisMismatchError(ValueError):
    """Arithmetic attempted across the L and Q bases without conversion."""


class ZeroClassError(ValueError):
    """Operation undefined on the zero class."""


L_BASIS = "L"
Q_BASIS = "Q"


class KClassK:
    """Integer combination of basis classes of K(Mod_K), tagged L or Q."""

    __slots__ = ("basis", "coeffs")

    def __init__(self, basis: str, coeffs: dict[Partition, int] | None = None):
        if basis not in (L_BASIS, Q_BASIS):
            raise ValueError(f"basis must be 'L' or 'Q', got {basis!r}")
        self.basis = basis
        self.coeffs = {p: c for p, c in (coeffs or {}).items() if c != 0}

    @classmethod
    def of(cls, basis: str, lam) -> "KClassK":
        return cls(basis, {partition(lam): 1})

    def items(self) -> list[tuple[Partition, int]]:
        return sorted(self.coeffs.items(), key=lambda kv: _term_order(kv[0]))

    def _check(self, other: "KClassK") -> None:
        if self.basis != other.basis:
            raise BasisMismatchError(
                f"cannot combine {self.basis}-basis with {other.basis}-basis"
            )

    def __add__(self, other: "KClassK") -> "KClassK":
        self._check(other)
        out = dict(self.coeffs)
        for p, c in other.coeffs.items():
            out[p] = out.get(p, 0) + c
        return KClassK(self.basis, out)

    def __sub__(self, other: "KClassK") -> "KClassK":
        return self + (-other)

    def __neg__(self) -> "KClassK":
        return KClassK(self.basis, {p: -c for p, c in self.coeffs.items()})

    def __rmul__(self, n: int) -> "KClassK":
        return KClassK(self.basis, {p: n * c for p, c in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, KClassK)
            and self.basis == other.basis
            and self.coeffs == other.coeffs
        )

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __hash__(self):
        return hash((self.basis, frozenset(self.coeffs.items())))

    def __repr__(self) -> str:
        if not self.coeffs:
            return f"0_{self.basis}"
        bits = []
        for p, c in self.items():
            name = f"{self.basis}[{','.join(map(str, p)) or '0'}]"
            mag = "" if abs(c) == 1 else str(abs(c))
            bits.append(f"{'+' if c >= 0 else '-'}{mag}{name}")
        return "".join(bits).lstrip("+")


def l_class(lam) -> KClassK:
    return KClassK.of(L_BASIS, lam)


def q_class(lam) -> KClassK:
    return KClassK.of(Q_BASIS, lam)


def q_to_l(x: KClassK) -> KClassK:
    """[Q_lam] = sum over horizontal-strip removals mu of [L_mu]."""
    if x.basis != Q_BASIS:
        raise BasisMismatchError("q_to_l expects a Q-basis class")
    out: dict[Partition, int] = {}
    for lam, c in x.coeffs.items():
        for d in range(size(lam) + 1):
            for mu in remove_strips(lam, d, HS):
                out[mu] = out.get(mu, 0) + c
    return KClassK(L_BASIS, out)


def l_to_q(x: KClassK) -> KClassK:
    """[L_mu] = sum over vertical-strip removals nu of (-1)^{|mu|-|nu|} [Q_nu]."""
    if x.basis != L_BASIS:
        raise BasisMismatchError("l_to_q expects an L-basis class")
    out: dict[Partition, int] = {}
    for mu, c in x.coeffs.items():
        for d in range(size(mu) + 1):
            sign = (-1) ** d
            for nu in remove_strips(mu, d, VS):
                out[nu] = out.get(nu, 0) + sign * c
    return KClassK(Q_BASIS, out)


def k_product(x: KClassK, y: KClassK) -> KClassK:
    """Product in K(Mod_K); the LR rule applies in both bases."""
    x._check(y)
    out: dict[Partition, int] = {}
    for lam, a in x.coeffs.items():
        for mu, b in y.coeffs.items():
            for nu, c in lr_expand(lam, mu):
                out[nu] = out.get(nu, 0) + a * b * c
    return KClassK(x.basis, out)


def _pair_basis(b1: str, lam: Partition, b2: str, mu: Partition) -> int:
    if b1 == Q_BASIS and b2 == Q_BASIS:
        from .partitions import is_strip

        return 1 if is_strip(lam, mu, HS) else 0
    if b1 == L_BASIS and b2 == Q_BASIS:
        return 1 if lam == mu else 0
    if b1 == L_BASIS and b2 == L_BASIS:
        from .partitions import is_strip

        return (-1) ** (size(mu) - size(lam)) if is_strip(mu, lam, VS) else 0
    # Q against L: signed count over common removals
    from .partitions import is_strip

    total = 0
    for d in range(size(lam) + 1):
        for nu in remove_strips(lam, d, HS):
            if is_strip(mu, nu, VS):
                total += (-1) ** (size(mu) - size(nu))
    return total


def pairing(x: KClassK, y: KClassK) -> int:
    """Euler pairing <[M],[N]> = alternating sum of Ext dimensions,
    extended bilinearly; any basis combination is accepted."""
    total = 0
    for lam, a in x.coeffs.items():
        for mu, b in y.coeffs.items():
            total += a * b * _pair_basis(x.basis, lam, y.basis, mu)
    return total


def fourier_K(x: KClassK) -> KClassK:
    """The involution swapping bases: basis class of lam goes to the other
    basis at the transpose with sign (-1)^{|lam|}."""
    from .partitions import transpose

    other = L_BASIS if x.basis == Q_BASIS else Q_BASIS
    out: dict[Partition, int] = {}
    for lam, c in x.coeffs.items():
        t = transpose(lam)
        out[t] = out.get(t, 0) + c * (-1) ** size(lam)
    return KClassK(other, out)


# ---------------------------------------------------------------------------
# Classes of modules over the full ring


class AClass:
    """Ungraded Euler class: torsion part over simples [S_lam] and
    projective part over [A x S_lam]."""

    __slots__ = ("torsion", "projective")

    def __init__(self, torsion: VClass | None = None, projective: VClass | None = None):
        self.torsion = torsion or VClass()
        self.projective = projective or VClass()

    @classmethod
    def simple(cls, lam) -> "AClass":
        return cls(torsion=VClass.simple(lam))

    @classmethod
    def free(cls, lam) -> "AClass":
        return cls(projective=VClass.simple(lam))

    def __add__(self, other: "AClass") -> "AClass":
        return AClass(self.torsion + other.torsion, self.projective + other.projective)

    def __sub__(self, other: "AClass") -> "AClass":
        return AClass(self.torsion - other.torsion, self.projective - other.projective)

    def __neg__(self) -> "AClass":
        return AClass(-self.torsion, -self.projective)

    def __rmul__(self, n: int) -> "AClass":
        return AClass(n * self.torsion, n * self.projective)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AClass)
            and self.torsion == other.torsion
            and self.projective == other.projective
        )

    def __bool__(self) -> bool:
        return bool(self.torsion) or bool(self.projective)

    def __hash__(self):
        return hash((self.torsion, self.projective))

    def __repr__(self) -> str:
        if not self:
            return "0"
        bits = []
        for p, c in self.torsion.items():
            name = f"S[{','.join(map(str, p)) or '0'}]"
            mag = "" if abs(c) == 1 else str(abs(c))
            bits.append(f"{'+' if c >= 0 else '-'}{mag}{name}")
        for p, c in self.projective.items():
            name = f"P[{','.join(map(str, p)) or '0'}]"
            mag = "" if abs(c) == 1 else str(abs(c))
            bits.append(f"{'+' if c >= 0 else '-'}{mag}{name}")
        return "".join(bits).lstrip("+")


def _box_removals(lam: Partition) -> list[Partition]:
    return remove_strips(lam, 1, HS)


def schur_derivative(x):
    """Single-box-removal branching on torsion classes and the Leibniz rule
    with D(A) = A on projective classes.  Accepts VClass or AClass."""
    if isinstance(x, VClass):
        out: dict[Partition, int] = {}
        for lam, c in x.coeffs.items():
            for mu in _box_removals(lam):
                out[mu] = out.get(mu, 0) + c
        return VClass(out)
    if isinstance(x, AClass):
        proj: dict[Partition, int] = {}
        for lam, c in x.projective.coeffs.items():
            proj[lam] = proj.get(lam, 0) + c
            for mu in _box_removals(lam):
                proj[mu] = proj.get(mu, 0) + c
        return AClass(schur_derivative(x.torsion), VClass(proj))
    raise TypeError(f"expected VClass or AClass, got {type(x).__name__}")


def shift_operator(x: AClass) -> AClass:
    """Euler-characteristic shadow of the cone of M -> DM: [DM] - [M]."""
    return schur_derivative(x) - x


def diff_annihilator(x: AClass) -> tuple[int, int]:
    """Lexicographically minimal (n1, n2), n1 first, such that applying the
    shift operator n1 times and the derivative n2 times kills the class.

    A nonzero projective part survives the derivative (its largest term has
    a fixed coefficient), so n2 exists only once the shift operator has
    exhausted the projective part; that takes at most one step more than
    the largest projective partition size.
    """
    if not x:
        raise ZeroClassError("the zero class has no minimal annihilator")
    cap1 = x.projective.max_size() + 2
    z = x
    for n1 in range(cap1 + 1):
        if not z:
            return (n1, 0)
        if not z.projective:
            y = z
            for n2 in range(z.torsion.max_size() + 2):
                if not y:
                    return (n1, n2)
                y = schur_derivative(y)
            raise AssertionError("torsion class survived past its size bound")
        z = shift_operator(z)
    raise AssertionError("projective part survived past its size bound")


def injective_envelope_class(lam) -> VClass:
    """Class of the torsion injective envelope of [S_lam]: multiplicity one
    on each horizontal-strip removal of lam."""
    lam = partition(lam)
    out: dict[Partition, int] = {}
    for d in range(size(lam) + 1):
        for mu in remove_strips(lam, d, HS):
            out[mu] = 1
    return VClass(out)
