"""Perfect-state-transfer decision procedure for normal Cay(V_8n, S).

The decision works entirely on the integer spectrum.  Transfer between a
vertex pair requires the graph to be integral, the pair to sit at one of
the admissible displacements, and the 2-adic valuations of the eigenvalue
gaps nu2(alpha_1 - lambda) to follow a parity-dependent pattern:

  odd n:   all beta gaps share one valuation and every alpha_2..alpha_4 and
           gamma gap is strictly larger; transfer pairs are u - v = +-4n.
  even n:  one of three valuation patterns (Type 1 / 2 / 3) must hold, and
           the admissible displacement set depends on the pattern and on
           n mod 4 (+-n within a block, +-3n/+-5n between opposite blocks,
           or +-4n).

When transfer exists, the minimum time is pi/M with
M = gcd(alpha_1 - lambda) over the distinct eigenvalues lambda != alpha_1.

A gap of zero has valuation +infinity, which satisfies every "strictly
greater" requirement and fails every equality against a finite baseline
(connected graphs never produce zero gaps: alpha_1 = |S| is simple).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .group import region
from .spectrum import SpectrumTable

INF = float("inf")


class NotIntegral(ValueError):
    pass


class DegenerateSpectrum(ValueError):
    pass


class SameVertex(ValueError):
    pass


class WrongParity(ValueError):
    pass


def nu2(x: int):
    """2-adic valuation; nu2(0) = +infinity."""
    if x == 0:
        return INF
    x = abs(x)
    return (x & -x).bit_length() - 1


def gap_gcd(table: SpectrumTable) -> int:
    """M = gcd over the distinct eigenvalue values of |alpha_1 - value|."""
    if not table.all_integral:
        raise NotIntegral("gap gcd requires an integral spectrum")
    alpha1 = table.alpha(1).integer_value
    values = {ev.integer_value for ev in table.eigenvalues}
    gaps = [abs(alpha1 - v) for v in values if v != alpha1]
    if not gaps:
        raise DegenerateSpectrum("spectrum has a single distinct eigenvalue")
    return math.gcd(*gaps)


class TypeClassification(NamedTuple):
    type1: bool
    type2: bool
    type3: bool


@dataclass(frozen=True)
class PstVerdict:
    u: int
    v: int
    has_pst: bool
    clause: str
    M: Optional[int] = None
    min_time: Optional[float] = None


class _GapValuations:
    """Valuations nu2(alpha_1 - lambda) of every labelled gap."""

    def __init__(self, table: SpectrumTable) -> None:
        alpha1 = table.alpha(1).integer_value
        self.alpha = {
            ev.index: nu2(alpha1 - ev.integer_value)
            for ev in table.eigenvalues
            if ev.kind == "alpha"
        }
        self.beta = {
            ev.index: nu2(alpha1 - ev.integer_value)
            for ev in table.eigenvalues
            if ev.kind == "beta"
        }
        self.gamma = {
            ev.index: nu2(alpha1 - ev.integer_value)
            for ev in table.eigenvalues
            if ev.kind == "gamma"
        }


def _odd_valuation_pattern(table: SpectrumTable) -> bool:
    """All beta gaps share nu2(alpha_1 - beta_0); alpha and gamma gaps exceed it."""
    g = _GapValuations(table)
    base = g.beta[0]
    if base == INF:
        return False
    if any(val != base for val in g.beta.values()):
        return False
    others = [g.alpha[i] for i in (2, 3, 4)] + list(g.gamma.values())
    return all(val > base for val in others)


def classify_graph_type(table: SpectrumTable) -> TypeClassification:
    """Type 1/2/3 valuation patterns (even n only)."""
    if table.params.is_odd:
        raise WrongParity("graph types are defined for even n only")
    if not table.all_integral:
        return TypeClassification(False, False, False)
    g = _GapValuations(table)
    beta_odd = [g.beta[j] for j in table.beta_indices if j % 2 == 1]
    beta_even = [g.beta[j] for j in table.beta_indices if j % 2 == 0]
    gamma_odd = [g.gamma[k] for k in table.gamma_indices if k % 2 == 1]
    gamma_even = [g.gamma[k] for k in table.gamma_indices if k % 2 == 0]

    def pattern(base, equal_groups, greater_groups) -> bool:
        if base == INF:
            return False
        equal = [val for grp in equal_groups for val in grp]
        greater = [val for grp in greater_groups for val in grp]
        return all(v == base for v in equal) and all(v > base for v in greater)

    alpha_even = [g.alpha[i] for i in (2, 4, 6, 8)]
    alpha_odd = [g.alpha[i] for i in (3, 5, 7)]

    type1 = pattern(
        g.beta[1] if 1 in g.beta else INF,
        [beta_odd, gamma_odd],
        [alpha_even, alpha_odd, beta_even, gamma_even],
    )
    type2 = pattern(
        g.alpha[2],
        [alpha_even, beta_odd, gamma_even],
        [alpha_odd, beta_even, gamma_odd],
    )
    type3 = pattern(
        g.alpha[2],
        [alpha_even, gamma_odd, gamma_even],
        [alpha_odd, beta_odd, beta_even],
    )
    return TypeClassification(type1, type2, type3)


_BLOCK_PAIRS = ({1, 2}, {1, 4}, {2, 3}, {3, 4})


def _blocked_clause(params, u: int, v: int, same_region_blocked: bool) -> Optional[str]:
    """First region pair that rules the pair out, if any."""
    ru, rv = region(params, u), region(params, v)
    pair = {ru, rv}
    if pair in ({1, 3}, {2, 4}):
        return None
    if len(pair) == 1 and not same_region_blocked:
        return None
    for union in _BLOCK_PAIRS:
        if pair <= union:
            members = sorted(union)
            return f"no-pst:region-block:V{members[0]}V{members[1]}"
    raise AssertionError("unreachable region combination")


def _verdict(u, v, clause, table=None) -> PstVerdict:
    if table is None:
        return PstVerdict(u=u, v=v, has_pst=False, clause=clause)
    M = gap_gcd(table)
    return PstVerdict(
        u=u, v=v, has_pst=True, clause=clause, M=M, min_time=math.pi / M
    )


def classify_pair_odd(table: SpectrumTable, u: int, v: int) -> PstVerdict:
    """Decision for odd n: region no-gos, then displacement +-4n,
    integrality, and the beta-baseline valuation pattern."""
    params = table.params
    if not params.is_odd:
        raise WrongParity("classify_pair_odd requires odd n")
    if u == v:
        raise SameVertex("perfect state transfer needs two distinct vertices")
    blocked = _blocked_clause(params, u, v, same_region_blocked=True)
    if blocked is not None:
        return _verdict(u, v, blocked)
    if u - v not in (4 * params.n, -4 * params.n):
        return _verdict(u, v, "no-pst:displacement")
    if not table.all_integral:
        return _verdict(u, v, "no-pst:non-integral")
    if not _odd_valuation_pattern(table):
        return _verdict(u, v, "no-pst:valuation")
    return _verdict(u, v, "pst:odd-antipodal", table)


def classify_pair_even(table: SpectrumTable, u: int, v: int) -> PstVerdict:
    """Decision for even n via the Type 1/2/3 patterns."""
    params = table.params
    if params.is_odd:
        raise WrongParity("classify_pair_even requires even n")
    if u == v:
        raise SameVertex("perfect state transfer needs two distinct vertices")
    blocked = _blocked_clause(params, u, v, same_region_blocked=False)
    if blocked is not None:
        return _verdict(u, v, blocked)
    n = params.n
    d = u - v
    same_region = region(params, u) == region(params, v)
    if same_region:
        if d not in (n, -n):
            return _verdict(u, v, "no-pst:displacement")
        if not table.all_integral:
            return _verdict(u, v, "no-pst:non-integral")
        types = classify_graph_type(table)
        if n % 4 == 0 and types.type1:
            return _verdict(u, v, "pst:type1-same-region", table)
        if n % 4 == 2 and types.type2:
            return _verdict(u, v, "pst:type2-same-region", table)
        return _verdict(u, v, "no-pst:valuation")
    # opposite blocks V1<->V3 or V2<->V4
    if d in (4 * n, -4 * n):
        if not table.all_integral:
            return _verdict(u, v, "no-pst:non-integral")
        if classify_graph_type(table).type3:
            return _verdict(u, v, "pst:type3-antipodal", table)
        return _verdict(u, v, "no-pst:valuation")
    if d in (3 * n, -3 * n, 5 * n, -5 * n):
        if not table.all_integral:
            return _verdict(u, v, "no-pst:non-integral")
        types = classify_graph_type(table)
        if n % 4 == 0 and types.type2:
            return _verdict(u, v, "pst:type2-cross", table)
        if n % 4 == 2 and types.type1:
            return _verdict(u, v, "pst:type1-cross", table)
        return _verdict(u, v, "no-pst:valuation")
    return _verdict(u, v, "no-pst:displacement")


def classify_pair(table: SpectrumTable, u: int, v: int) -> PstVerdict:
    if table.params.is_odd:
        return classify_pair_odd(table, u, v)
    return classify_pair_even(table, u, v)


def all_pst_pairs(table: SpectrumTable) -> tuple[PstVerdict, ...]:
    """Every unordered pair (u < v) with perfect state transfer."""
    order = table.params.order
    out = []
    for u in range(order):
        for v in range(u + 1, order):
            verdict = classify_pair(table, u, v)
            if verdict.has_pst:
                out.append(verdict)
    return tuple(out)
