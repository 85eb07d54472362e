"""Enhanced Hilbert series, character polynomials, and the modification rule.

The enhanced series of a sequence of symmetric group representations
collects trace(c_mu | M) t^mu / mu! over all cycle types mu.  For a class
over the full ring this takes the closed form p(t) exp(T_0) + q(t) with p
and q honest polynomials; p carries the character polynomial through the
umbral substitution t^nu -> falling factorials in the variables a_i, and q
is the low-degree correction governed by local cohomology.

The modification rule evaluates a character polynomial below its stable
range by rho-shifted sorting of the prefixed sequence (N - |lam|, lam).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .ktheory import AClass, KClassK, Q_BASIS, q_to_l
from .partitions import (
    Partition,
    aut_factor,
    multiplicities,
    partition,
    remove_strips,
    shifted_normalize,
    size,
)
from .polynomials import MPoly, falling_factorial_poly
from .symchar import mn_trace


class EnhancedSeries:
    """The pair (p, q) representing p * exp(T_0) + q."""

    __slots__ = ("p", "q")

    def __init__(self, p: MPoly, q: MPoly):
        if p.family != "t" or q.family != "t":
            raise ValueError("enhanced series parts live in the t family")
        self.p = p
        self.q = q

    def __eq__(self, other) -> bool:
        return isinstance(other, EnhancedSeries) and self.p == other.p and self.q == other.q

    def __repr__(self) -> str:
        return f"({self.p!r})*exp(T0) + ({self.q!r})"


@lru_cache(maxsize=None)
def enhanced_of_simple(lam: Partition) -> MPoly:
    """Enhanced series of a single simple: sum over cycle types mu of
    trace(c_mu) t^mu / mu!.  Homogeneous of weighted degree |lam|."""
    lam = partition(lam)
    from .partitions import _partitions_cached

    terms = MPoly.zero("t")
    for mu in _partitions_cached(size(lam)):
        tr = mn_trace(mu, lam)
        if tr:
            terms = terms + MPoly.of_partition(mu, Fraction(tr, aut_factor(mu)))
    return terms


def enhanced_of_class(x: AClass) -> EnhancedSeries:
    """p from the projective part, q from the torsion part."""
    p = MPoly.zero("t")
    for lam, c in x.projective.coeffs.items():
        p = p + enhanced_of_simple(lam).scale(c)
    q = MPoly.zero("t")
    for lam, c in x.torsion.coeffs.items():
        q = q + enhanced_of_simple(lam).scale(c)
    return EnhancedSeries(p, q)


def plain_hilbert(s: EnhancedSeries) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Set t_i = 0 for i >= 2: coefficient tuples (p0, q0) of the univariate
    series p0(t) e^t + q0(t), degree ascending."""
    return s.p.restrict_to_first(), s.q.restrict_to_first()


def umbral(p: MPoly) -> MPoly:
    """Linear (not multiplicative) substitution prod t_i^{d_i} ->
    prod (a_i)_{d_i}, falling factorials expanded in the monomial basis."""
    if p.family != "t":
        raise ValueError("umbral substitution consumes the t family")
    out = MPoly.zero("a")
    for key, c in p.terms.items():
        term = MPoly.const(c, "a")
        for i, d in key:
            term = term * falling_factorial_poly(i, d)
        out = out + term
    return out


@lru_cache(maxsize=None)
def char_poly_simple(lam: Partition) -> MPoly:
    """Character polynomial of the simple at lam: umbral image of the
    alternating sum of enhanced series over vertical-strip removals."""
    lam = partition(lam)
    p = MPoly.zero("t")
    for d in range(size(lam) + 1):
        for mu in remove_strips(lam, d, "VS"):
            p = p + enhanced_of_simple(mu).scale((-1) ** d)
    return umbral(p)


def char_poly_of_class(x: AClass) -> MPoly:
    """Umbral image of the p-part of the enhanced series."""
    return umbral(enhanced_of_class(x).p)


def eval_char_poly(X: MPoly, mu: Partition) -> Fraction:
    """Evaluate at a_i = m_i(mu); integral on integral classes."""
    if X.family != "a":
        raise ValueError("character polynomials live in the a family")
    values = {i: Fraction(m) for i, m in multiplicities(partition(mu)).items()}
    return X.evaluate(values)


def modification(lam: Partition, n_boxes: int) -> tuple[int, Partition] | None:
    """Below-threshold evaluation data for the character polynomial at
    classes of size n_boxes: None when the value is identically zero,
    otherwise (sign, target) with the trace taken on the target shape."""
    lam = partition(lam)
    return shifted_normalize(n_boxes - size(lam), lam)


def character_value(lam: Partition, mu: Partition) -> int:
    """Value of the character polynomial of the simple at lam on the class
    mu, computed through the modification rule (valid in all degrees)."""
    lam, mu = partition(lam), partition(mu)
    result = modification(lam, size(mu))
    if result is None:
        return 0
    sign, target = result
    return sign * mn_trace(mu, target)


def t1_derivative(s: MPoly) -> MPoly:
    """Formal partial derivative in t_1; the series-level shadow of the
    single-box branching operator."""
    if s.family != "t":
        raise ValueError("t1_derivative consumes the t family")
    return s.partial(1)


def _stable_range_defect(lam: Partition) -> int:
    """|lam| + lam_1 - (multiplicity of lam_1) - 1, with 0 on the empty
    partition; bounds the top degree local cohomology can contribute."""
    if not lam:
        return 0
    return size(lam) + lam[0] - multiplicities(lam)[lam[0]] - 1


def stability_bound(x: AClass, lc_degrees: tuple[int, int] | None = None) -> int:
    """Upper bound for deg q of the class: the max of the degree-0/1 local
    cohomology degrees (measured values if supplied, else the torsion
    support of the class stands in for degree 0) and the defect over the
    simple constituents of the image in the quotient category."""
    if lc_degrees is not None:
        d0, d1 = lc_degrees
    else:
        d0, d1 = x.torsion.max_size(), 0
    image = q_to_l(KClassK(Q_BASIS, dict(x.projective.coeffs)))
    defects = [_stable_range_defect(lam) for lam in image.coeffs]
    return max([d0, d1] + defects) if defects else max(d0, d1)
