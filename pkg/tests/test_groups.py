from __future__ import annotations

import json

import pytest

from pgspectra import (
    FiniteGroup,
    GroupFamilySpec,
    cyclic_subgroup,
    cyclic_subgroups,
    direct_product,
    element_order,
    group_from_json,
    group_to_json,
    make_cyclic,
    make_dicyclic,
    make_dihedral,
    make_elementary_abelian,
    make_gpq,
    make_group,
    order_census,
    totient_and_divisors,
)
from pgspectra.errors import InvalidFamilyParameters
from pgspectra.groups import check_associative, is_prime, prime_power_base


def groups_under_test() -> list[FiniteGroup]:
    return [
        make_cyclic(1),
        make_cyclic(12),
        make_elementary_abelian(2, 3),
        make_elementary_abelian(3, 2),
        make_dihedral(5),
        make_dicyclic(3),
        make_gpq(2, 5),
        make_gpq(3, 7),
        direct_product(make_elementary_abelian(2, 2), make_cyclic(3)),
        direct_product(make_elementary_abelian(2, 2), make_elementary_abelian(3, 2)),
    ]


# ---------------------------------------------------------------------------
# number-theory helpers
# ---------------------------------------------------------------------------


def test_is_prime():
    assert [n for n in range(2, 30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert not is_prime(1)
    assert not is_prime(0)


def test_prime_power_base():
    assert prime_power_base(8) == 2
    assert prime_power_base(9) == 3
    assert prime_power_base(7) == 7
    assert prime_power_base(12) is None
    assert prime_power_base(1) is None


def test_totient_and_divisors():
    assert totient_and_divisors(12) == (4, (2, 3, 4, 6))
    assert totient_and_divisors(7) == (6, ())
    assert totient_and_divisors(1) == (1, ())
    with pytest.raises(InvalidFamilyParameters):
        totient_and_divisors(0)


# ---------------------------------------------------------------------------
# group laws, for every family
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("g", groups_under_test(), ids=lambda g: g.spec.describe())
def test_group_axioms(g: FiniteGroup):
    assert check_associative(g)
    e = g.identity
    assert e == 0
    for a in range(g.order):
        assert g.mul(e, a) == a
        assert g.mul(a, e) == a
        assert g.mul(a, g.inv(a)) == e
        assert g.mul(g.inv(a), a) == e


def test_associativity_scales_to_order_200():
    # the row-comparison trick keeps the full triple check fast
    assert check_associative(make_dihedral(100))


@pytest.mark.parametrize("g", groups_under_test(), ids=lambda g: g.spec.describe())
def test_element_orders_divide_group_order(g: FiniteGroup):
    for a in range(g.order):
        assert g.order % element_order(g, a) == 0


@pytest.mark.parametrize("g", groups_under_test(), ids=lambda g: g.spec.describe())
def test_power_matches_repeated_multiplication(g: FiniteGroup):
    for a in range(g.order):
        acc = g.identity
        for k in range(1, element_order(g, a) + 2):
            acc = g.mul(acc, a)
            assert g.power(a, k) == acc
    assert g.power(1 % g.order, 0) == g.identity


def test_negative_powers_use_the_inverse():
    g = make_cyclic(7)
    assert g.power(3, -1) == g.inv(3)
    assert g.power(3, -2) == g.mul(g.inv(3), g.inv(3))


# ---------------------------------------------------------------------------
# family constructors
# ---------------------------------------------------------------------------


def test_cyclic_group():
    g = make_cyclic(6)
    assert g.order == 6
    assert g.mul(4, 5) == 3
    assert order_census(g) == {1: 1, 2: 1, 3: 2, 6: 2}
    assert make_cyclic(1).order == 1


def test_elementary_abelian_group():
    g = make_elementary_abelian(2, 2)
    assert order_census(g) == {1: 1, 2: 3}
    assert g.labels[0] == "(0,0)"
    h = make_elementary_abelian(3, 2)
    assert order_census(h) == {1: 1, 3: 8}
    # commutative by construction
    assert all(h.mul(a, b) == h.mul(b, a) for a in range(9) for b in range(9))


def test_elementary_abelian_rejects_bad_params():
    with pytest.raises(InvalidFamilyParameters):
        make_elementary_abelian(4, 2)
    with pytest.raises(InvalidFamilyParameters):
        make_elementary_abelian(2, 0)


def test_dihedral_group():
    g = make_dihedral(4)
    assert g.order == 8
    assert order_census(g) == {1: 1, 2: 5, 4: 2}
    a, b = 1, 4  # rotation, reflection
    assert element_order(g, a) == 4
    assert element_order(g, b) == 2
    # b a b^-1 = a^-1
    assert g.mul(g.mul(b, a), g.inv(b)) == g.inv(a)
    assert g.labels[:5] == ("e", "a", "a2", "a3", "b")
    with pytest.raises(InvalidFamilyParameters):
        make_dihedral(2)


def test_dicyclic_group():
    g = make_dicyclic(3)
    assert g.order == 12
    a, x = 1, 6
    assert element_order(g, a) == 6
    assert element_order(g, x) == 4
    # x^2 = a^n and x a x^-1 = a^-1
    assert g.mul(x, x) == g.power(a, 3)
    assert g.mul(g.mul(x, a), g.inv(x)) == g.inv(a)
    assert order_census(g) == {1: 1, 2: 1, 3: 2, 4: 6, 6: 2}
    with pytest.raises(InvalidFamilyParameters):
        make_dicyclic(2)


def test_gpq_group():
    g = make_gpq(2, 3)
    assert g.order == 6
    assert order_census(g) == {1: 1, 2: 3, 3: 2}
    # nonabelian: some pair fails to commute
    assert any(g.mul(a, b) != g.mul(b, a) for a in range(6) for b in range(6))
    assert order_census(make_gpq(3, 7)) == {1: 1, 3: 14, 7: 6}


@pytest.mark.parametrize("p,q", [(3, 5), (5, 3), (2, 4), (4, 7), (2, 2)])
def test_gpq_rejects_bad_params(p: int, q: int):
    with pytest.raises(InvalidFamilyParameters):
        make_gpq(p, q)


def test_direct_product_with_trivial_factor():
    d = make_dihedral(3)
    prod = direct_product(make_cyclic(1), d)
    assert prod.order == d.order
    assert prod.table == d.table


def test_direct_product_orders_are_lcms():
    g = direct_product(make_elementary_abelian(2, 2), make_cyclic(3))
    assert order_census(g) == {1: 1, 2: 3, 3: 2, 6: 6}
    h = direct_product(make_elementary_abelian(2, 2), make_elementary_abelian(3, 2))
    assert order_census(h) == {1: 1, 2: 3, 3: 8, 6: 24}


def test_direct_product_labels_pair_up():
    g = direct_product(make_cyclic(2), make_cyclic(3))
    assert g.labels[0] == "(0,0)"
    assert len(set(g.labels)) == g.order


def test_make_group_dispatch():
    spec = GroupFamilySpec("dicyclic", (4,))
    g = make_group(spec)
    assert g.order == 16
    assert g.spec == spec
    nested = GroupFamilySpec(
        "direct-product",
        factors=(
            GroupFamilySpec("elementary-abelian", (2, 2)),
            GroupFamilySpec("cyclic", (3,)),
        ),
    )
    assert make_group(nested).order == 12
    with pytest.raises(InvalidFamilyParameters):
        make_group(GroupFamilySpec("frobnicated", (1,)))


def test_spec_describe():
    assert GroupFamilySpec("dihedral", (5,)).describe() == "dihedral[5]"
    nested = GroupFamilySpec(
        "direct-product",
        factors=(
            GroupFamilySpec("elementary-abelian", (2, 2)),
            GroupFamilySpec("cyclic", (3,)),
        ),
    )
    assert "x" in nested.describe()


# ---------------------------------------------------------------------------
# cyclic subgroup machinery
# ---------------------------------------------------------------------------


def test_cyclic_subgroup_contents():
    g = make_cyclic(12)
    assert cyclic_subgroup(g, 4) == (0, 4, 8)
    assert cyclic_subgroup(g, 0) == (0,)
    assert len(cyclic_subgroup(g, 5)) == 12


def test_cyclic_subgroups_deduplicated():
    g = make_cyclic(6)
    subs = cyclic_subgroups(g)
    # one cyclic subgroup per divisor of 6
    assert sorted(len(s) for s in subs) == [1, 2, 3, 6]
    assert len(set(subs)) == len(subs)


@pytest.mark.parametrize("p,n", [(2, 2), (2, 3), (3, 2)])
def test_elementary_abelian_subgroup_count(p: int, n: int):
    g = make_elementary_abelian(p, n)
    expected = 1 + (p**n - 1) // (p - 1)  # trivial one plus the lines
    assert len(cyclic_subgroups(g)) == expected


@pytest.mark.parametrize("g", groups_under_test(), ids=lambda g: g.spec.describe())
def test_totients_of_cyclic_subgroups_cover_the_group(g: FiniteGroup):
    total = sum(totient_and_divisors(len(s))[0] for s in cyclic_subgroups(g))
    assert total == g.order


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def test_group_json_roundtrip():
    g = make_gpq(2, 3)
    back = group_from_json(group_to_json(g))
    assert back.order == g.order
    assert back.table == g.table
    assert back.labels == g.labels
    assert back.inverse == g.inverse
    assert back.spec is None  # provenance is not serialized


def test_group_json_shape():
    obj = json.loads(group_to_json(make_cyclic(3)))
    assert set(obj) == {"order", "identity", "table", "labels"}
    assert obj["identity"] == 0


def test_group_json_rejects_nonzero_identity():
    obj = json.loads(group_to_json(make_cyclic(3)))
    obj["identity"] = 1
    with pytest.raises(InvalidFamilyParameters):
        group_from_json(json.dumps(obj))
