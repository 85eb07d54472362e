"""Machine verification layer: hom spaces, socles, relation validation,
realized resolutions, kernel/cokernel constituents, contractibility."""

import pytest
from fractions import Fraction
from hypothesis import given, settings

from conftest import partitions_st
from tcalab.ktheory import q_class, q_to_l
from tcalab.partitions import (
    HS,
    is_strip,
    partitions_up_to,
    remove_strips,
    size,
)
from tcalab.quiver import (
    NotAComplexError,
    NotHSError,
    QuiverRep,
    RelationError,
    RepComplex,
    TruncationTooSmallError,
    VertexMissingError,
    VertexSet,
    ZeroMapError,
    build_injective,
    build_simple,
    complex_cohomology,
    direct_sum,
    hom_space,
    kernel_cokernel_constituents,
    realize_bgg,
    socle,
    tau_contractibility_check,
)


class TestVertexSet:
    def test_downward_closure_enforced(self):
        with pytest.raises(VertexMissingError):
            VertexSet([(2,)])  # (1) and () missing
        vs = VertexSet.up_to_size(3)
        assert len(vs) == 7

    def test_covering_pairs_stay_inside(self):
        vs = VertexSet.up_to_size(3)
        for i, j in vs.covering_pairs():
            assert size(j) == size(i) + 1
            assert is_strip(j, i, HS)


class TestBuilders:
    def test_simple(self):
        vs = VertexSet.up_to_size(3)
        rep = build_simple((2, 1), vs)
        assert rep.total_dim() == 1
        assert rep.dim((2, 1)) == 1
        with pytest.raises(VertexMissingError):
            build_simple((4,), vs)

    def test_injective_support(self):
        vs = VertexSet.up_to_size(4)
        rep = build_injective((2, 1), vs)
        removals = {
            mu
            for d in range(4)
            for mu in remove_strips((2, 1), d, HS)
        }
        assert {v for v in vs.vertices if rep.dim(v)} == removals
        assert rep.total_dim() == len(removals)
        assert build_injective((), vs).total_dim() == 1

    def test_truncation_guard(self):
        # vertex set without small partitions cannot host the injective
        with pytest.raises((TruncationTooSmallError, VertexMissingError)):
            build_injective((2,), VertexSet([]))

    def test_constructed_reps_validate(self):
        vs = VertexSet.up_to_size(4)
        for lam in partitions_up_to(4):
            build_injective(lam, vs).validate()
            build_simple(lam, vs).validate()

    def test_relation_validator_catches_zero_relation_breakage(self):
        # a column is not a horizontal strip, so the composite through (1)
        # into (1,1) must vanish; an all-ones assignment breaks this
        vs = VertexSet.up_to_size(2)
        dims = {v: 1 for v in vs.vertices}
        arrows = {pair: [[Fraction(1)]] for pair in vs.covering_pairs()}
        with pytest.raises(RelationError):
            QuiverRep(vs, dims, arrows)

    def test_relation_validator_catches_path_disagreement(self):
        # two box-addition paths from (1) to (2,1) must compose equally
        vs = VertexSet.up_to_size(3)
        rep = build_injective((2, 1), vs)
        arrows = dict(rep.arrows)
        arrows[((1, 1), (2, 1))] = [[Fraction(2)]]
        with pytest.raises(RelationError):
            QuiverRep(vs, dict(rep.dims), arrows)


class TestHomSocle:
    def test_hom_between_injectives(self):
        vs = VertexSet.up_to_size(3)
        q2 = build_injective((2,), vs)
        q1 = build_injective((1,), vs)
        assert hom_space(q2, q1)[0] == 1
        assert hom_space(q1, q2)[0] == 0

    def test_hom_dimensions_sweep(self):
        vs = VertexSet.up_to_size(4)
        injectives = {lam: build_injective(lam, vs) for lam in partitions_up_to(4)}
        for lam, ql in injectives.items():
            for mu, qm in injectives.items():
                expected = 1 if is_strip(lam, mu, HS) else 0
                assert hom_space(ql, qm)[0] == expected, (lam, mu)
                simple = build_simple(lam, vs)
                assert hom_space(simple, qm)[0] == (1 if lam == mu else 0)

    def test_hom_basis_is_intertwiner(self):
        vs = VertexSet.up_to_size(3)
        q21 = build_injective((2, 1), vs)
        q1 = build_injective((1,), vs)
        dim, basis = hom_space(q21, q1)
        assert dim == 1
        phi = basis[0]
        from tcalab import linalg

        for (i, j) in vs.covering_pairs():
            lhs = linalg.mat_mul(
                phi.get(j, linalg.zeros(q1.dims[j], q21.dims[j])),
                q21.cover_matrix(i, j),
            )
            rhs = linalg.mat_mul(
                q1.cover_matrix(i, j),
                phi.get(i, linalg.zeros(q1.dims[i], q21.dims[i])),
            )
            assert lhs == rhs

    def test_socle_examples(self):
        vs = VertexSet.up_to_size(4)
        for lam in partitions_up_to(4):
            assert socle(build_injective(lam, vs)) == {lam: 1}
            assert socle(build_simple(lam, vs)) == {lam: 1}
        ds, _ = direct_sum(
            [build_injective((2,), vs), build_injective((1, 1), vs)]
        )
        assert socle(ds) == {(2,): 1, (1, 1): 1}

    def test_cyclic_subreps_have_top_socle(self):
        # the subrepresentation generated by any support vertex of an
        # injective reaches the top vertex, so its socle contains it
        for lam in partitions_up_to(4):
            vs = VertexSet.up_to_size(size(lam))
            q = build_injective(lam, vs)
            support = [v for v in vs.vertices if q.dim(v)]
            for start in support:
                reach = {start}
                frontier = {start}
                while frontier:
                    nxt = set()
                    for v in frontier:
                        for w in support:
                            if w not in reach and is_strip(w, v, HS):
                                nxt.add(w)
                    reach |= nxt
                    frontier = nxt
                dims = {v: 1 for v in reach}
                arrows = {
                    pair: [[Fraction(1)]]
                    for pair in vs.covering_pairs()
                    if pair[0] in reach and pair[1] in reach
                }
                sub = QuiverRep(vs, dims, arrows)  # validates the relations
                assert socle(sub).get(lam) == 1, (lam, start)


class TestRealizedResolutions:
    def test_two_term_example(self):
        cx = realize_bgg((1,))
        cohom = complex_cohomology(cx)
        assert cohom == [{(1,): 1}, {}]

    def test_column_example(self):
        cohom = complex_cohomology(realize_bgg((1, 1)))
        assert cohom == [{(1, 1): 1}, {}, {}]

    def test_hook_example(self):
        cohom = complex_cohomology(realize_bgg((2, 1)))
        assert cohom == [{(2, 1): 1}, {}, {}]

    def test_sweep_up_to_4(self):
        for lam in partitions_up_to(4):
            cohom = complex_cohomology(realize_bgg(lam))
            assert cohom[0] == {lam: 1}, lam
            assert all(not h for h in cohom[1:]), lam

    def test_composition_series_matches_basis_change(self):
        vs = VertexSet.up_to_size(4)
        for lam in partitions_up_to(4):
            rep = build_injective(lam, vs)
            multiset = {v: rep.dim(v) for v in vs.vertices if rep.dim(v)}
            assert multiset == dict(q_to_l(q_class(lam)).coeffs)

    def test_identity_complex_has_no_cohomology(self):
        vs = VertexSet.up_to_size(2)
        q = build_injective((2,), vs)
        ident = {
            v: [[Fraction(1)]]
            for v in vs.vertices
            if q.dims[v]
        }
        cx = RepComplex([q, q], [ident])
        assert all(not h for h in complex_cohomology(cx))

    def test_non_complex_rejected(self):
        vs = VertexSet.up_to_size(2)
        q2 = build_injective((2,), vs)
        q1 = build_injective((1,), vs)
        q0 = build_injective((), vs)
        f = {v: [[Fraction(1)]] for v in vs.vertices if q2.dims[v] and q1.dims[v]}
        g = {v: [[Fraction(1)]] for v in vs.vertices if q1.dims[v] and q0.dims[v]}
        with pytest.raises(NotAComplexError):
            RepComplex([q2, q1, q0], [f, g])


class TestKernelCokernel:
    def test_examples(self):
        ker, coker = kernel_cokernel_constituents((1,), ())
        assert ker == {(1,)} and coker == set()
        ker, coker = kernel_cokernel_constituents((2,), (1,))
        assert ker == {(2,)} and coker == set()
        # constituents below (1) that are not horizontal-strip removals of
        # (2,1) survive into the cokernel
        ker, coker = kernel_cokernel_constituents((2, 1), (1,))
        assert ker == {(2, 1), (1, 1), (2,)}
        assert coker == {()}

    def test_errors(self):
        with pytest.raises(ZeroMapError):
            kernel_cokernel_constituents((1,), (), scale=0)
        with pytest.raises(NotHSError):
            kernel_cokernel_constituents((2, 2), (1,))

    @settings(max_examples=30, deadline=None)
    @given(partitions_st(max_part=3, max_rows=3))
    def test_set_difference_contract(self, lam):
        for d in range(size(lam) + 1):
            for mu in remove_strips(lam, d, HS):
                ker, coker = kernel_cokernel_constituents(lam, mu)
                down_lam = {
                    x for k in range(size(lam) + 1) for x in remove_strips(lam, k, HS)
                }
                down_mu = {
                    x for k in range(size(mu) + 1) for x in remove_strips(mu, k, HS)
                }
                assert ker == down_lam - down_mu
                assert coker == down_mu - down_lam


class TestContractibility:
    def test_examples(self):
        assert tau_contractibility_check(VertexSet([()]))
        assert tau_contractibility_check(VertexSet.up_to_size(6))

    @given(partitions_st(max_part=3, max_rows=3))
    def test_any_downward_closed_set(self, lam):
        closed = {lam}
        frontier = {lam}
        while frontier:
            nxt = set()
            for mu in frontier:
                for nu in remove_strips(mu, 1, HS):
                    if nu not in closed:
                        closed.add(nu)
                        nxt.add(nu)
            frontier = nxt
        assert tau_contractibility_check(VertexSet(closed))
