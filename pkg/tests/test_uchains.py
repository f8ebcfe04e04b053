import pytest

from nilcomm.errors import NotMaximumSimpleChain
from nilcomm.partitions import all_partitions, dominance_leq, from_parts
from nilcomm.poset import build_poset
from nilcomm.greene import greene_lambda
from nilcomm.uchains import (
    UChainSpec,
    cardinality_closed_form,
    check_replacement,
    iter_specs,
    lambda_u,
    materialize,
    max_simple_u_chains,
    max_u_chain_cardinality,
    simple_cardinality,
)


def test_spec_validation():
    assert UChainSpec((2, 4)).expanded() == (2, 3, 4, 5)
    assert UChainSpec((1,)).r == 1
    with pytest.raises(ValueError):
        UChainSpec(())
    with pytest.raises(ValueError):
        UChainSpec((2, 3))
    with pytest.raises(ValueError):
        UChainSpec((0, 2))
    with pytest.raises(ValueError):
        UChainSpec((4, 2))


def test_materialize_top_row():
    P = from_parts([7, 5, 4, 3, 2, 1])
    inst = materialize(P, UChainSpec((6,)))
    assert inst.union == frozenset((u, 7, 1) for u in range(1, 8))
    # anchor 7 selects the same row
    assert materialize(P, UChainSpec((7,))).union == inst.union


def test_materialize_two_strands():
    P = from_parts([7, 5, 4, 3, 2, 1])
    D = build_poset(P)
    inst = materialize(P, UChainSpec((2, 4)))
    assert len(inst.strands[0]) == 11
    assert len(inst.strands[1]) == 7
    assert not inst.strands[0] & inst.strands[1]
    for s in inst.strands:
        assert D.is_chain(s)
    assert len(inst.union) == cardinality_closed_form(P, UChainSpec((2, 4))) == 18


def test_materialize_empty():
    P = from_parts([4, 2, 2, 1, 1])
    assert materialize(P, UChainSpec((6,))).union == frozenset()


def test_strands_are_disjoint_chains_everywhere_small():
    for n in range(1, 9):
        for P in all_partitions(n):
            D = build_poset(P)
            for spec in iter_specs(P.max_part):
                inst = materialize(P, spec)
                assert sum(len(s) for s in inst.strands) == len(inst.union)
                for s in inst.strands:
                    assert D.is_chain(s), (P, spec)


def test_closed_form_known_values():
    P = from_parts([6, 6, 5, 4, 3, 2, 2, 1, 1])
    assert simple_cardinality(P, 5) == 17
    assert cardinality_closed_form(P, UChainSpec((1, 5))) == 27
    assert cardinality_closed_form(P, UChainSpec((1, 3))) == 25
    assert cardinality_closed_form(P, UChainSpec((3, 5))) == 24

    P2 = from_parts([5, 4, 3, 3, 2, 1])
    assert simple_cardinality(P2, 3) == 12
    assert simple_cardinality(P2, 2) == 12


def test_closed_form_equals_enumeration():
    # one anchor beyond the largest part exercises the empty-strand boundary
    for n in range(1, 11):
        for P in all_partitions(n):
            for spec in iter_specs(P.max_part + 1):
                assert cardinality_closed_form(P, spec) == len(materialize(P, spec).union), (P, spec)


def test_max_simple_examples():
    assert max_simple_u_chains(from_parts([6, 6, 5, 4, 3, 2, 2, 1, 1])) == (17, (5,))
    assert max_simple_u_chains(from_parts([5, 4, 3, 3, 2, 1])) == (12, (2, 3))
    assert max_simple_u_chains(from_parts([1, 1])) == (2, (1,))
    # anchors 6 and 7 select the same row; the larger represents the pair
    assert max_simple_u_chains(from_parts([7])) == (7, (7,))


def test_lambda_u_examples():
    assert lambda_u(from_parts([5, 4, 3, 3, 2, 1])).parts == (12, 5, 1)
    for n in (1, 2, 5, 9):
        assert lambda_u(from_parts([n])).parts == (n,)
    # frozen from spec-free enumeration: u_1 = 8, u_2 = 10
    assert lambda_u(from_parts([4, 2, 2, 1, 1])).parts == (8, 2)


def _enumerated_u(P, k):
    """Best k-strand size by materializing every specification (padding
    with empty strands lets shorter specifications count)."""
    best = 0
    for spec in iter_specs(P.max_part, max_r=k):
        best = max(best, len(materialize(P, spec).union))
    return best


def test_solver_matches_enumeration():
    for n in range(1, 10):
        for P in all_partitions(n):
            for k in range(1, (P.max_part + 1) // 2 + 2):
                assert max_u_chain_cardinality(P, k) == _enumerated_u(P, k), (P, k)


def test_lambda_u_is_a_partition_with_spaced_parts():
    for n in range(1, 11):
        for P in all_partitions(n):
            lam = lambda_u(P).parts
            assert sum(lam) == P.n
            assert all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1))
            assert all(lam[i] - lam[i + 1] >= 2 for i in range(len(lam) - 1)), (P, lam)


def test_lambda_u_dominated_by_chain_invariant():
    for n in range(1, 11):
        for P in all_partitions(n):
            assert dominance_leq(lambda_u(P), greene_lambda(build_poset(P))), P


def test_iter_specs_census():
    # anchors within 1..5, gap >= 2: five singles, six pairs, one triple
    specs = list(iter_specs(5))
    assert len(specs) == 12
    assert len({s.anchors for s in specs}) == 12
    assert UChainSpec((1, 3, 5)) in specs


def test_replacement_example():
    P = from_parts([6, 6, 5, 4, 3, 2, 2, 1, 1])
    res = check_replacement(P, UChainSpec((1, 3)), 5)
    assert res.ok and not res.identity
    assert res.position == 2
    assert res.replaced.anchors == (1, 5)
    assert (res.original_size, res.new_size) == (25, 27)
    # the other slot would shrink the family, which is why it is not chosen
    assert cardinality_closed_form(P, UChainSpec((3, 5))) == 24 < 25


def test_replacement_identity_cases():
    P = from_parts([6, 6, 5, 4, 3, 2, 2, 1, 1])
    res = check_replacement(P, UChainSpec((1, 5)), 5)
    assert res.ok and res.identity and res.replaced.anchors == (1, 5)

    # pair {2,3} straddles the anchor pairs of (1,3): nothing to change
    P2 = from_parts([2, 2])
    res2 = check_replacement(P2, UChainSpec((1, 3)), 2)
    assert res2.ok and res2.identity


def test_replacement_requires_maximum_anchor():
    P = from_parts([6, 6, 5, 4, 3, 2, 2, 1, 1])
    with pytest.raises(NotMaximumSimpleChain):
        check_replacement(P, UChainSpec((1, 3)), 1)


def test_replacement_holds_exhaustively():
    for n in range(1, 11):
        for P in all_partitions(n):
            _, winners = max_simple_u_chains(P)
            for spec in iter_specs(P.max_part, max_r=3):
                for a in winners:
                    res = check_replacement(P, spec, a)
                    assert res.ok, (P, spec, a)
                    assert res.new_size >= res.original_size
