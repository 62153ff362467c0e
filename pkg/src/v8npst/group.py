"""Exact structure theory for the groups V_8n.

V_8n = <a, b : a^{2n} = b^4 = 1, ba = a^{-1}b^{-1}, b^{-1}a = a^{-1}b> is a
non-abelian group of order 8n.  Every element has a unique normal form
a^r b^s with 0 <= r < 2n, 0 <= s < 4.  Vertices of Cayley graphs over V_8n
are labelled 0..8n-1 in the order

    1, a, ..., a^{2n-1}, b, ab, ..., a^{2n-1}b, b^2, ..., b^3, ..., a^{2n-1}b^3

so that label = 2n*s + r, and the label range splits into the four blocks
V1 = [0, 2n), V2 = [2n, 4n), V3 = [4n, 6n), V4 = [6n, 8n).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple


class GroupElement(NamedTuple):
    r: int
    s: int


IDENTITY = GroupElement(0, 0)


@dataclass(frozen=True)
class GroupParams:
    """Order parameter; the group V_8n has 8n elements."""

    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")

    @property
    def order(self) -> int:
        return 8 * self.n

    @property
    def two_n(self) -> int:
        return 2 * self.n

    @property
    def is_odd(self) -> bool:
        return self.n % 2 == 1

    @property
    def parity(self) -> str:
        if self.n % 2 == 1:
            return "odd"
        return "even0mod4" if self.n % 4 == 0 else "even2mod4"


class ConnectionSetError(ValueError):
    """A candidate connection set violates one of the structural hypotheses."""


class IdentityInSet(ConnectionSetError):
    pass


class NotSymmetric(ConnectionSetError):
    pass


class NotNormal(ConnectionSetError):
    pass


class NotGenerating(ConnectionSetError):
    pass


def element(params: GroupParams, r: int, s: int) -> GroupElement:
    """Normal form of a^r b^s (exponents reduced mod 2n and mod 4)."""
    return GroupElement(r % params.two_n, s % 4)


def multiply(params: GroupParams, x: GroupElement, y: GroupElement) -> GroupElement:
    """Product xy in normal form.

    Uses the rewriting rules derived from the presentation:
        b   a^r = a^{-r} b^{1 or 3}   (3 when r is odd)
        b^2 a^r = a^{r}  b^2          (b^2 is central)
        b^3 a^r = a^{-r} b^{3 or 1}   (1 when r is odd)
    """
    two_n = params.two_n
    r1, s1 = x
    r2, s2 = y
    if s1 == 0:
        return GroupElement((r1 + r2) % two_n, s2)
    if s1 == 2:
        return GroupElement((r1 + r2) % two_n, (2 + s2) % 4)
    if s1 == 1:
        t = 1 if r2 % 2 == 0 else 3
    else:
        t = 3 if r2 % 2 == 0 else 1
    return GroupElement((r1 - r2) % two_n, (t + s2) % 4)


def inverse(params: GroupParams, x: GroupElement) -> GroupElement:
    """(a^r b^s)^{-1} = b^{-s} a^{-r}, put back into normal form."""
    r, s = x
    return multiply(
        params,
        GroupElement(0, (4 - s) % 4),
        GroupElement((params.two_n - r) % params.two_n, 0),
    )


def conjugate(params: GroupParams, g: GroupElement, x: GroupElement) -> GroupElement:
    """g x g^{-1}."""
    return multiply(params, multiply(params, g, x), inverse(params, g))


def all_elements(params: GroupParams) -> tuple[GroupElement, ...]:
    """All 8n elements in vertex-label order."""
    return tuple(
        GroupElement(r, s) for s in range(4) for r in range(params.two_n)
    )


def vertex_index(params: GroupParams, x: GroupElement) -> int:
    return 2 * params.n * x.s + x.r


def element_at(params: GroupParams, idx: int) -> GroupElement:
    if not 0 <= idx < params.order:
        raise ValueError(f"vertex index {idx} out of range [0, {params.order})")
    return GroupElement(idx % params.two_n, idx // params.two_n)


def region(params: GroupParams, idx: int) -> int:
    """Block number 1..4 of a vertex label (V1..V4)."""
    if not 0 <= idx < params.order:
        raise ValueError(f"vertex index {idx} out of range [0, {params.order})")
    return idx // params.two_n + 1


def element_str(x: GroupElement) -> str:
    """Compact rendering: 1, a, a^2, b, a*b, a^2*b^3, ..."""
    r, s = x
    if r == 0 and s == 0:
        return "1"
    parts = []
    if r > 0:
        parts.append("a" if r == 1 else f"a^{r}")
    if s > 0:
        parts.append("b" if s == 1 else f"b^{s}")
    return "*".join(parts)


def parse_element(params: GroupParams, text: str) -> GroupElement:
    """Parse the grammar produced by element_str (also accepts a^r*b^s)."""
    text = text.strip()
    if text == "1":
        return IDENTITY
    r = s = 0
    seen_a = seen_b = False
    for part in text.split("*"):
        part = part.strip()
        if part.startswith("a") and not seen_a and not seen_b:
            seen_a = True
            exp = part[1:]
            if exp == "":
                r = 1
            elif exp.startswith("^"):
                r = int(exp[1:])
            else:
                raise ValueError(f"cannot parse element {text!r}")
        elif part.startswith("b") and not seen_b:
            seen_b = True
            exp = part[1:]
            if exp == "":
                s = 1
            elif exp.startswith("^"):
                s = int(exp[1:])
            else:
                raise ValueError(f"cannot parse element {text!r}")
        else:
            raise ValueError(f"cannot parse element {text!r}")
    if r < 0 or s < 0:
        raise ValueError(f"negative exponent in element {text!r}")
    return element(params, r, s)


@dataclass(frozen=True)
class ConjugacyClass:
    tag: str
    members: frozenset[GroupElement]

    def __len__(self) -> int:
        return len(self.members)


def _orbit_partition(params: GroupParams) -> list[frozenset[GroupElement]]:
    """Conjugation orbits {g x g^{-1} : g in G}, computed from scratch."""
    elems = all_elements(params)
    remaining = set(elems)
    orbits = []
    for x in elems:
        if x not in remaining:
            continue
        orbit = frozenset(conjugate(params, g, x) for g in elems)
        orbits.append(orbit)
        remaining -= orbit
    return orbits


def _paper_partition_odd(params: GroupParams) -> list[frozenset[GroupElement]]:
    n, two_n = params.n, params.two_n
    classes: list[frozenset[GroupElement]] = [
        frozenset({IDENTITY}),
        frozenset({GroupElement(0, 2)}),
        frozenset(
            GroupElement(j, k) for j in range(0, two_n, 2) for k in (1, 3)
        ),
        frozenset(
            GroupElement(j, k) for j in range(1, two_n, 2) for k in (1, 3)
        ),
    ]
    for r in range(n):
        e = 2 * r + 1
        classes.append(
            frozenset({GroupElement(e, 0), GroupElement((-e) % two_n, 2)})
        )
    for s in range(1, (n - 1) // 2 + 1):
        e = 2 * s
        classes.append(
            frozenset({GroupElement(e, 0), GroupElement(two_n - e, 0)})
        )
        classes.append(
            frozenset({GroupElement(e, 2), GroupElement(two_n - e, 2)})
        )
    return classes


def _paper_partition_even(params: GroupParams) -> list[frozenset[GroupElement]]:
    n, two_n = params.n, params.two_n
    classes: list[frozenset[GroupElement]] = [
        frozenset({IDENTITY}),
        frozenset({GroupElement(0, 2)}),
        frozenset({GroupElement(n, 0)}),
        frozenset({GroupElement(n, 2)}),
    ]
    # The four n-element classes; b^{(-1)^k} means b for even k and b^3 for odd k.
    for base, flip in ((0, 0), (0, 1), (1, 0), (1, 1)):
        classes.append(
            frozenset(
                GroupElement((2 * k + base) % two_n, 1 if (k + flip) % 2 == 0 else 3)
                for k in range(n)
            )
        )
    for r in range(n):
        e = 2 * r + 1
        classes.append(
            frozenset({GroupElement(e, 0), GroupElement((-e) % two_n, 2)})
        )
    for s in range(1, n // 2):
        e = 2 * s
        classes.append(
            frozenset({GroupElement(e, 0), GroupElement(two_n - e, 0)})
        )
        classes.append(
            frozenset({GroupElement(e, 2), GroupElement(two_n - e, 2)})
        )
    return classes


@lru_cache(maxsize=None)
def conjugacy_classes(params: GroupParams) -> tuple[ConjugacyClass, ...]:
    """Conjugacy classes, cross-checked against a fresh orbit computation.

    Classes come out in a fixed listing order (identity, b^2, the large
    classes, then the two-element classes by exponent); each class is tagged
    by its smallest-label member.
    """
    if params.is_odd:
        listed = _paper_partition_odd(params)
    else:
        listed = _paper_partition_even(params)
    orbits = {frozenset(o) for o in _orbit_partition(params)}
    assert {frozenset(c) for c in listed} == orbits, "class listing disagrees with conjugation orbits"
    expected = 2 * params.n + (3 if params.is_odd else 6)
    assert len(listed) == expected

    out = []
    for members in listed:
        rep = min(members, key=lambda x: vertex_index(params, x))
        out.append(ConjugacyClass(tag=element_str(rep), members=members))
    return tuple(out)


@lru_cache(maxsize=None)
def class_index_map(params: GroupParams) -> dict[GroupElement, int]:
    """Element -> index of its conjugacy class in conjugacy_classes(params)."""
    mapping: dict[GroupElement, int] = {}
    for i, cls in enumerate(conjugacy_classes(params)):
        for x in cls.members:
            mapping[x] = i
    return mapping


@dataclass(frozen=True)
class ConnectionSet:
    """Validated connection set: identity-free, symmetric, normal, generating."""

    params: GroupParams
    members: frozenset[GroupElement]
    class_indices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.members)

    @property
    def class_tags(self) -> tuple[str, ...]:
        classes = conjugacy_classes(self.params)
        return tuple(classes[i].tag for i in self.class_indices)

    def sorted_members(self) -> tuple[GroupElement, ...]:
        return tuple(
            sorted(self.members, key=lambda x: vertex_index(self.params, x))
        )


def generated_subgroup(
    params: GroupParams, members: Iterable[GroupElement]
) -> frozenset[GroupElement]:
    """Closure of <members> computed by fixpoint iteration."""
    gens = list(members)
    seen = {IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = multiply(params, x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def is_normal_subset(params: GroupParams, members: frozenset[GroupElement]) -> bool:
    """Sg = gS for every g; must agree with the union-of-classes test."""
    for g in all_elements(params):
        left = {multiply(params, g, s) for s in members}
        right = {multiply(params, s, g) for s in members}
        if left != right:
            return False
    return True


def validate_connection_set(
    params: GroupParams,
    members: Iterable[GroupElement | tuple[int, int]],
    *,
    require_generating: bool = True,
) -> ConnectionSet:
    """Check identity-freeness, symmetry, normality and generation.

    Raises the ConnectionSetError subclass naming the first violated
    hypothesis.  require_generating=False admits disconnected Cayley graphs
    (useful for spectral computations only; the decision procedures always
    demand a generating set).
    """
    mset = frozenset(
        x if isinstance(x, GroupElement) else element(params, *x) for x in members
    )
    for x in mset:
        if not (0 <= x.r < params.two_n and 0 <= x.s < 4):
            raise ValueError(f"element {x} not in normal form for n={params.n}")
    if IDENTITY in mset:
        raise IdentityInSet("the identity element is not allowed in a connection set")
    missing = [x for x in mset if inverse(params, x) not in mset]
    if missing:
        x = min(missing, key=lambda e: vertex_index(params, e))
        raise NotSymmetric(
            f"set is not inverse-closed: {element_str(x)} in S but "
            f"{element_str(inverse(params, x))} is not"
        )

    cmap = class_index_map(params)
    classes = conjugacy_classes(params)
    idxs = sorted({cmap[x] for x in mset})
    union_ok = all(classes[i].members <= mset for i in idxs) and sum(
        len(classes[i]) for i in idxs
    ) == len(mset)
    assert union_ok == is_normal_subset(params, mset), (
        "class-union and Sg=gS normality tests disagree"
    )
    if not union_ok:
        raise NotNormal("set is not a union of conjugacy classes (Sg != gS)")

    if require_generating and generated_subgroup(params, mset) != frozenset(
        all_elements(params)
    ):
        raise NotGenerating("set does not generate the whole group")
    return ConnectionSet(params=params, members=mset, class_indices=tuple(idxs))


def enumerate_connection_sets(
    params: GroupParams, max_classes: int
) -> Iterator[ConnectionSet]:
    """All valid connection sets that are unions of <= max_classes classes.

    Deterministic order: by class count, then lexicographically by the tuple
    of class indices.  Invalid unions (non-symmetric or non-generating) are
    skipped.
    """
    classes = conjugacy_classes(params)
    non_identity = [i for i, c in enumerate(classes) if IDENTITY not in c.members]
    full = frozenset(all_elements(params))
    for k in range(1, min(max_classes, len(non_identity)) + 1):
        for combo in itertools.combinations(non_identity, k):
            members = frozenset().union(*(classes[i].members for i in combo))
            if any(inverse(params, x) not in members for x in members):
                continue
            if generated_subgroup(params, members) != full:
                continue
            yield ConnectionSet(
                params=params, members=members, class_indices=tuple(combo)
            )
