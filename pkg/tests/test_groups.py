"""Group, subgroup, and automorphism machinery.

Derived counts are pinned only after being recomputed here by an
independent oracle (brute-force subset closure, element-order census).
"""

import math
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from groupdual import (
    Automorphism,
    Homomorphism,
    all_subgroups,
    automorphism_group,
    identity_automorphism,
    is_characteristic,
    make_group,
    primary_decomposition,
    scalar_automorphism,
    stabilizer,
    subgroup_closure,
    subgroup_from_elements,
)

SMALL_GROUPS = st.sampled_from(
    [make_group(o) for o in ([2, 2], [2, 4], [3, 3], [8], [9], [6], [2, 2, 2])]
)


def test_order_sequence_is_not_normalized():
    assert make_group([2, 4]).orders == (2, 4)
    assert make_group([4, 2]).orders == (4, 2)
    assert make_group([2, 4]) != make_group([4, 2])


def test_exponent_cardinality_weights():
    A = make_group([2, 4])
    assert (A.exponent, A.cardinality, A.weights) == (4, 8, (2, 1))
    B = make_group([6, 4])
    assert (B.exponent, B.cardinality, B.weights) == (12, 24, (2, 3))


def test_element_text_form_digit_concat_and_comma():
    A = make_group([2, 4])
    a = A.element([1, 3])
    assert A.format_element(a) == "13"
    assert A.parse_element("13") == a
    B = make_group([12, 2])
    b = B.element([11, 1])
    assert B.format_element(b) == "11,1"
    assert B.parse_element("11,1") == b


def test_element_order_against_repeated_addition_oracle():
    A = make_group([2, 4])
    for a in A.elements():
        n, x = 1, a
        while not x.is_zero():
            x = x + a
            n += 1
        assert a.order == n


@given(SMALL_GROUPS, st.data())
@settings(max_examples=40, deadline=None)
def test_subgroup_closure_lagrange(A, data):
    elems = list(A.elements())
    gens = data.draw(st.lists(st.sampled_from(elems), max_size=3))
    H = subgroup_closure(A, gens)
    assert A.cardinality % H.order == 0
    # Closure under addition and negation.
    eset = H.element_set()
    for x in H.elements:
        assert (-x).coords in eset
        for y in H.elements:
            assert (x + y).coords in eset


def _brute_force_subgroups(A):
    """Oracle: all addition-closed subsets containing zero."""
    elems = list(A.elements())
    found = set()
    for r in range(len(elems) + 1):
        for subset in combinations(elems, r):
            sset = {e.coords for e in subset}
            if A.zero().coords not in sset:
                continue
            if all((x + y).coords in sset for x in subset for y in subset):
                found.add(frozenset(sset))
    return found


def test_all_subgroups_of_z2xz4_matches_brute_force():
    A = make_group([2, 4])
    oracle = _brute_force_subgroups(A)
    assert len(oracle) == 8
    computed = {s.element_set() for s in all_subgroups(A)}
    assert computed == oracle


def test_all_subgroups_of_klein_group():
    A = make_group([2, 2])
    assert {s.element_set() for s in all_subgroups(A)} == _brute_force_subgroups(A)


def test_subgroup_from_elements_rejects_non_closed_sets():
    A = make_group([2, 2])
    with pytest.raises(ValueError):
        subgroup_from_elements(A, [A.zero(), A.element([1, 0]), A.element([0, 1])])


def test_primary_decomposition_against_order_census():
    A = make_group([12, 2])
    parts = primary_decomposition(A)
    assert {p: part.orders for p, part in parts.items()} == {2: (4, 2), 3: (3,)}
    # Oracle: the element-order census of A factors as the censuses of the
    # p-parts combined by lcm.
    census = {}
    for a in A.elements():
        census[a.order] = census.get(a.order, 0) + 1
    combined = {}
    for o2 in parts[2].elements():
        for o3 in parts[3].elements():
            d = math.lcm(o2.order, o3.order)
            combined[d] = combined.get(d, 0) + 1
    assert census == combined


def test_homomorphism_rejects_order_violations():
    A, B = make_group([4]), make_group([2, 4])
    with pytest.raises(ValueError):
        # An order-2 generator cannot map to an order-4 element.
        Homomorphism(make_group([2]), B, ((0, 1),))
    # But it can map to an order-2 element.
    Homomorphism(make_group([2]), B, ((1, 2),))
    Homomorphism(A, make_group([2]), ((1,),))


@pytest.mark.parametrize(
    "orders,count",
    [([2, 2], 6), ([2, 4], 8), ([3, 3], 48), ([8], 4), ([9], 6), ([2, 2, 2], 168)],
)
def test_automorphism_group_sizes(orders, count):
    assert len(automorphism_group(make_group(orders))) == count


@given(SMALL_GROUPS, st.data())
@settings(max_examples=25, deadline=None)
def test_automorphism_group_laws(A, data):
    auts = automorphism_group(A)
    tau = data.draw(st.sampled_from(auts))
    sig = data.draw(st.sampled_from(auts))
    composed = tau.compose(sig)
    assert composed in auts
    ident = identity_automorphism(A)
    assert tau.compose(tau.inverse()) == ident
    assert tau.inverse().compose(tau) == ident
    assert tau.compose(ident) == tau


@pytest.mark.parametrize("orders", [[6], [12, 2]])
def test_aut_order_is_product_over_primary_parts(orders):
    A = make_group(orders)
    total = len(automorphism_group(A))
    parts = primary_decomposition(A)
    assert total == math.prod(len(automorphism_group(p)) for p in parts.values())


def test_scalar_automorphism_and_orders():
    A = make_group([3, 3])
    two = scalar_automorphism(A, 2)
    assert two.matrix == ((2, 0), (0, 2))
    assert two.order == 2
    assert identity_automorphism(A).order == 1


def test_characteristic_subgroups_of_z2xz4():
    A = make_group([2, 4])
    socle = subgroup_closure(A, [A.element([1, 0]), A.element([0, 2])])
    l0 = subgroup_closure(A, [A.element([1, 0])])
    assert is_characteristic(socle)
    assert not is_characteristic(l0)
    # Stabilizer index = orbit size (orbit-stabilizer).
    auts = automorphism_group(A)
    stab = stabilizer(l0)
    orbit = {frozenset(t.apply(h).coords for h in l0.elements) for t in auts}
    assert len(auts) == len(stab) * len(orbit)


def test_automorphism_rejects_non_bijective_matrix():
    A = make_group([2, 2])
    with pytest.raises(ValueError):
        Automorphism(A, A, ((1, 1), (1, 1)))
