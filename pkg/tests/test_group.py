"""Group arithmetic, conjugacy classes and connection-set validation."""

import itertools

import pytest

from v8npst.group import (
    IDENTITY,
    ConnectionSetError,
    GroupElement,
    GroupParams,
    IdentityInSet,
    NotGenerating,
    NotNormal,
    NotSymmetric,
    all_elements,
    conjugacy_classes,
    conjugate,
    element,
    element_str,
    enumerate_connection_sets,
    generated_subgroup,
    inverse,
    is_normal_subset,
    multiply,
    parse_element,
    validate_connection_set,
    vertex_index,
)

from conftest import coset_apply, coset_of, coset_oracle


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_identity_is_neutral(n):
    p = GroupParams(n)
    for x in all_elements(p):
        assert multiply(p, IDENTITY, x) == x
        assert multiply(p, x, IDENTITY) == x


@pytest.mark.parametrize("n", [1, 2, 3, 4, 6])
def test_defining_relations(n):
    p = GroupParams(n)
    a = element(p, 1, 0)
    b = element(p, 0, 1)
    x = IDENTITY
    for _ in range(2 * n):
        x = multiply(p, x, a)
    assert x == IDENTITY  # a^{2n} = 1
    y = IDENTITY
    for _ in range(4):
        y = multiply(p, y, b)
    assert y == IDENTITY  # b^4 = 1
    assert multiply(p, b, a) == multiply(p, inverse(p, a), inverse(p, b))
    assert multiply(p, inverse(p, b), a) == multiply(p, inverse(p, a), b)


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_b_times_a_normal_form(n):
    p = GroupParams(n)
    # ba = a^{-1}b^{-1} = a^{2n-1} b^3
    assert multiply(p, element(p, 0, 1), element(p, 1, 0)) == GroupElement(2 * n - 1, 3)


def test_b_squared_is_central_n3_against_coset_table():
    p = GroupParams(3)
    table = coset_oracle(3)
    b2 = element(p, 0, 2)
    for r in range(6):
        ar = element(p, r, 0)
        assert multiply(p, b2, ar) == element(p, r, 2)
        lhs = coset_apply(table, coset_of(table, 0, 2), ar)
        rhs = coset_apply(table, coset_of(table, r, 0), b2)
        assert lhs == rhs


@pytest.mark.parametrize("n", [1, 2, 3])
def test_multiplication_matches_coset_enumeration(n):
    """Every product agrees with the independent coset-table regular action."""
    p = GroupParams(n)
    table = coset_oracle(n)
    elems = all_elements(p)
    cosets = {x: coset_of(table, x.r, x.s) for x in elems}
    assert len(set(cosets.values())) == 8 * n  # normal forms are distinct
    for x in elems:
        for y in elems:
            assert cosets[multiply(p, x, y)] == coset_apply(table, cosets[x], y)


@pytest.mark.parametrize("n", range(1, 7))
def test_normal_form_count(n):
    p = GroupParams(n)
    elems = all_elements(p)
    assert len(elems) == len(set(elems)) == 8 * n
    assert [vertex_index(p, x) for x in elems] == list(range(8 * n))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_associativity_exhaustive(n):
    p = GroupParams(n)
    elems = all_elements(p)
    for x, y, z in itertools.product(elems, repeat=3):
        assert multiply(p, multiply(p, x, y), z) == multiply(p, x, multiply(p, y, z))


@pytest.mark.parametrize("n", [1, 2, 4])
def test_left_multiplication_is_bijection(n):
    p = GroupParams(n)
    elems = all_elements(p)
    for g in elems:
        assert len({multiply(p, g, x) for x in elems}) == 8 * n


def test_inverse_trivial_cases():
    p = GroupParams(3)
    assert inverse(p, IDENTITY) == IDENTITY
    assert inverse(p, element(p, 1, 0)) == element(p, 5, 0)  # <a> is cyclic of order 6


def test_inverse_exhaustive_v24_by_table_search():
    p = GroupParams(3)
    elems = all_elements(p)
    for x in elems:
        solutions = [y for y in elems if multiply(p, x, y) == IDENTITY]
        assert solutions == [inverse(p, x)]


def test_conjugacy_classes_n1_exact():
    p = GroupParams(1)
    got = {frozenset(c.members) for c in conjugacy_classes(p)}
    e = lambda r, s: GroupElement(r % 2, s % 4)
    expected = {
        frozenset({e(0, 0)}),
        frozenset({e(0, 2)}),
        frozenset({e(0, 1), e(0, 3)}),
        frozenset({e(1, 1), e(1, 3)}),
        frozenset({e(1, 0), e(1, 2)}),
    }
    assert got == expected


@pytest.mark.parametrize(
    "n,count", [(1, 5), (2, 10), (3, 9), (4, 14), (5, 13), (6, 18)]
)
def test_conjugacy_class_counts(n, count):
    assert len(conjugacy_classes(GroupParams(n))) == count
    assert count == 2 * n + (3 if n % 2 else 6)


@pytest.mark.parametrize("n", [2, 3])
def test_classes_partition_group(n):
    p = GroupParams(n)
    classes = conjugacy_classes(p)
    union = set()
    total = 0
    for c in classes:
        assert not (union & c.members)
        union |= c.members
        total += len(c)
    assert union == set(all_elements(p)) and total == 8 * n


@pytest.mark.parametrize("n", range(1, 7))
def test_classes_match_fresh_orbit_computation(n):
    p = GroupParams(n)
    classes = {frozenset(c.members) for c in conjugacy_classes(p)}
    elems = all_elements(p)
    seen = set()
    orbits = set()
    for x in elems:
        if x in seen:
            continue
        orbit = frozenset(conjugate(p, g, x) for g in elems)
        orbits.add(orbit)
        seen |= orbit
    assert classes == orbits


@pytest.mark.parametrize("n", [1, 2, 3])
def test_normal_iff_class_union(n, rng):
    """Sg = gS holds exactly when the subset is a union of conjugacy classes."""
    p = GroupParams(n)
    classes = conjugacy_classes(p)
    elems = all_elements(p)
    for _ in range(40):
        size = int(rng.integers(1, 8 * n))
        subset = frozenset(
            elems[i] for i in rng.choice(8 * n, size=size, replace=False)
        )
        is_union = all(
            c.members <= subset or not (c.members & subset) for c in classes
        )
        assert is_normal_subset(p, subset) == is_union


def test_validate_full_set_n1_is_k8():
    p = GroupParams(1)
    members = [x for x in all_elements(p) if x != IDENTITY]
    conn = validate_connection_set(p, members)
    assert len(conn) == 7
    assert len(conn.class_indices) == 4


def test_validate_rejections():
    p = GroupParams(1)
    with pytest.raises(NotGenerating):
        validate_connection_set(p, [element(p, 0, 2)])  # <b^2> has order 2
    with pytest.raises(NotSymmetric):
        validate_connection_set(p, [element(p, 0, 1)])  # b^{-1} = b^3 missing
    with pytest.raises(IdentityInSet):
        validate_connection_set(p, [IDENTITY, element(p, 0, 1), element(p, 0, 3)])
    p2 = GroupParams(2)
    with pytest.raises(NotNormal):
        # {a, a^3} is symmetric but not a class union (class of a is {a, a^3 b^2})
        validate_connection_set(p2, [element(p2, 1, 0), element(p2, 3, 0)])
    assert issubclass(NotNormal, ConnectionSetError)


def test_validate_reports_offending_element():
    p = GroupParams(2)
    with pytest.raises(NotSymmetric, match="a"):
        validate_connection_set(p, [element(p, 1, 0)])


def test_enumerate_n1_contents():
    p = GroupParams(1)
    sets = list(enumerate_connection_sets(p, 4))
    as_members = [conn.members for conn in sets]
    two_class = frozenset(
        {element(p, 0, 1), element(p, 0, 3), element(p, 1, 0), element(p, 1, 2)}
    )
    full = frozenset(x for x in all_elements(p) if x != IDENTITY)
    assert two_class in as_members
    assert full in as_members
    assert all(IDENTITY not in m for m in as_members)


def test_enumerate_single_class_n1_none_generate():
    """For n=1 no single conjugacy class generates the group.

    Checked against an independent closure computation: every non-identity
    class closes into a proper subgroup of order 4 at most.
    """
    p = GroupParams(1)
    assert list(enumerate_connection_sets(p, 1)) == []
    for c in conjugacy_classes(p):
        if IDENTITY in c.members:
            continue
        closure = generated_subgroup(p, c.members)
        assert len(closure) in (2, 4)


def test_enumerate_max_classes_zero_is_empty():
    assert list(enumerate_connection_sets(GroupParams(2), 0)) == []


@pytest.mark.parametrize("n", [1, 2, 3])
def test_enumerate_deterministic_validated_and_complete(n):
    p = GroupParams(n)
    budget = len(conjugacy_classes(p))
    first = list(enumerate_connection_sets(p, budget))
    second = list(enumerate_connection_sets(p, budget))
    assert [c.class_indices for c in first] == [c.class_indices for c in second]
    for conn in first:
        revalidated = validate_connection_set(p, conn.members)
        assert revalidated.members == conn.members
    # brute force over all class subsets finds exactly the same collection
    classes = conjugacy_classes(p)
    non_identity = [i for i, c in enumerate(classes) if IDENTITY not in c.members]
    expected = set()
    for k in range(1, len(non_identity) + 1):
        for combo in itertools.combinations(non_identity, k):
            members = frozenset().union(*(classes[i].members for i in combo))
            try:
                validate_connection_set(p, members)
            except ConnectionSetError:
                continue
            expected.add(members)
    assert {c.members for c in first} == expected


def test_element_str_round_trip():
    p = GroupParams(3)
    for x in all_elements(p):
        assert parse_element(p, element_str(x)) == x
    assert element_str(GroupElement(0, 0)) == "1"
    assert element_str(GroupElement(2, 1)) == "a^2*b"


def test_bad_params_rejected():
    with pytest.raises(ValueError):
        GroupParams(0)
    with pytest.raises(ValueError):
        GroupParams(-3)
