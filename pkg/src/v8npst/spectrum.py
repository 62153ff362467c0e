"""Spectra of normal Cayley graphs Cay(V_8n, S).

Each irreducible representation contributes one eigenvalue

    lambda = (1/d) * sum_{s in S} chi(s)

of multiplicity d^2 (1 for the linear characters, 4 for the 2-dimensional
ones).  Eigenvalues are kept per representation, labelled alpha_i / beta_j /
gamma_k, and never merged across representations even when numerically
equal: the transfer-time decision rules distinguish them by label.

Integrality is decided in two tiers: a numeric screen at 1e-8, with the
exact cyclotomic form consulted when the numeric distance to the nearest
integer falls in the inconclusive band (1e-8, 1e-4).  An eigenvalue inside
the band with no exact form available raises NumericallyAmbiguous rather
than guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .cyclotomic import CycloInt
from .group import ConnectionSet, GroupParams, conjugacy_classes
from .characters import character_table, rep_descriptors

NUMERIC_TOL = 1e-8
AMBIGUOUS_TOL = 1e-4


class NumericallyAmbiguous(ArithmeticError):
    """An eigenvalue sits in the gap between the numeric tolerances."""


_KIND_BY_REP = {"theta": "alpha", "psi": "beta", "phi": "gamma"}


@dataclass(frozen=True)
class Eigenvalue:
    label: str
    kind: str  # alpha | beta | gamma
    index: int
    multiplicity: int
    value: float
    exact_num: Optional[CycloInt]
    exact_den: int
    is_integer: bool
    integer_value: Optional[int]


@dataclass(frozen=True)
class SpectrumTable:
    connection: ConnectionSet
    eigenvalues: tuple[Eigenvalue, ...]
    all_integral: bool

    @property
    def params(self) -> GroupParams:
        return self.connection.params

    def by_label(self, label: str) -> Eigenvalue:
        for ev in self.eigenvalues:
            if ev.label == label:
                return ev
        raise KeyError(label)

    def alpha(self, i: int) -> Eigenvalue:
        return self.by_label(f"alpha_{i}")

    def beta(self, j: int) -> Eigenvalue:
        return self.by_label(f"beta_{j}")

    def gamma(self, k: int) -> Eigenvalue:
        return self.by_label(f"gamma_{k}")

    @property
    def beta_indices(self) -> tuple[int, ...]:
        """Valid psi indices: 0..n-1 for odd n, 1..n-1 for even n."""
        return tuple(ev.index for ev in self.eigenvalues if ev.kind == "beta")

    @property
    def gamma_indices(self) -> tuple[int, ...]:
        return tuple(ev.index for ev in self.eigenvalues if ev.kind == "gamma")

    def values_with_multiplicity(self) -> list[tuple[float, int]]:
        return [(ev.value, ev.multiplicity) for ev in self.eigenvalues]


def _decide_integrality(
    value: float, exact_num: Optional[CycloInt], den: int
) -> tuple[bool, Optional[int]]:
    nearest = round(value)
    dist = abs(value - nearest)
    if dist <= NUMERIC_TOL:
        if exact_num is not None:
            if not (exact_num - CycloInt.integer(exact_num.m, nearest * den)).is_zero():
                raise NumericallyAmbiguous(
                    f"value {value!r} passes the numeric screen but is not exactly {nearest}"
                )
        return True, nearest
    if dist < AMBIGUOUS_TOL:
        if exact_num is None:
            raise NumericallyAmbiguous(
                f"value {value!r} is within {dist:.2e} of {nearest} "
                f"(between tolerances {NUMERIC_TOL} and {AMBIGUOUS_TOL})"
            )
        if (exact_num - CycloInt.integer(exact_num.m, nearest * den)).is_zero():
            return True, nearest
        return False, None
    return False, None


def eigenvalue_labels(params: GroupParams) -> tuple[str, ...]:
    out = []
    for d in rep_descriptors(params):
        out.append(f"{_KIND_BY_REP[d.kind]}_{d.index}")
    return tuple(out)


def eigenvalues(connection: ConnectionSet) -> SpectrumTable:
    """Per-representation eigenvalues of Cay(V_8n, S), exact and numeric."""
    params = connection.params
    classes = conjugacy_classes(params)
    table = character_table(params)
    m = 4 * params.n
    entries = []
    for row, desc in zip(table, rep_descriptors(params)):
        num = CycloInt.zero(m)
        for ci in connection.class_indices:
            num = num + len(classes[ci]) * row[ci]
        den = desc.degree
        z = num.value()
        assert abs(z.imag) < 1e-10, f"eigenvalue for {desc} is not real: {z}"
        value = z.real / den
        is_int, int_val = _decide_integrality(value, num, den)
        entries.append(
            Eigenvalue(
                label=f"{_KIND_BY_REP[desc.kind]}_{desc.index}",
                kind=_KIND_BY_REP[desc.kind],
                index=desc.index,
                multiplicity=desc.degree ** 2,
                value=value,
                exact_num=num,
                exact_den=den,
                is_integer=is_int,
                integer_value=int_val,
            )
        )
    table_out = SpectrumTable(
        connection=connection,
        eigenvalues=tuple(entries),
        all_integral=all(e.is_integer for e in entries),
    )
    _assert_consistency(table_out)
    return table_out


def _assert_consistency(table: SpectrumTable) -> None:
    order = table.params.order
    size = len(table.connection)
    total_mult = sum(e.multiplicity for e in table.eigenvalues)
    assert total_mult == order, "eigenvalue multiplicities do not sum to 8n"
    alpha1 = table.alpha(1)
    assert abs(alpha1.value - size) < 1e-9, "alpha_1 must equal |S|"
    trace = sum(e.multiplicity * e.value for e in table.eigenvalues)
    assert abs(trace) < 1e-7 * max(1.0, size), "trace identity violated"
    second = sum(e.multiplicity * e.value ** 2 for e in table.eigenvalues)
    assert abs(second - order * size) < 1e-6 * max(1.0, order * size), (
        "second-moment identity violated"
    )


def check_integrality(table: SpectrumTable) -> bool:
    """Re-run the integrality decision and verify the rounded identities.

    Returns the all-integral flag; raises NumericallyAmbiguous when a value
    falls in the undecidable band.  Integer values must reproduce the exact
    trace and edge-count identities.
    """
    flags = []
    ints = []
    for ev in table.eigenvalues:
        is_int, int_val = _decide_integrality(ev.value, ev.exact_num, ev.exact_den)
        assert is_int == ev.is_integer and int_val == ev.integer_value, (
            "stored integrality flags disagree with a fresh decision"
        )
        flags.append(is_int)
        ints.append(int_val)
    all_int = all(flags)
    assert all_int == table.all_integral
    if all_int:
        mults = [e.multiplicity for e in table.eigenvalues]
        assert sum(m * v for m, v in zip(mults, ints)) == 0
        assert sum(m * v * v for m, v in zip(mults, ints)) == table.params.order * len(
            table.connection
        )
    return all_int


# --------------------------------------------------------------------------
# Closed-form orthonormal eigenbasis
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class EigenvectorSet:
    """Columns of `matrix` are the closed-form eigenvectors; labels[i] names
    the eigenvalue of column i (repeated according to multiplicity)."""

    connection: ConnectionSet
    labels: tuple[str, ...]
    matrix: np.ndarray

    def column_eigenvalues(self, table: SpectrumTable) -> np.ndarray:
        by_label = {ev.label: ev.value for ev in table.eigenvalues}
        return np.array([by_label[lab] for lab in self.labels])


def _region_vector(params: GroupParams, pieces: list[np.ndarray]) -> np.ndarray:
    return np.concatenate(pieces)


def eigenvectors(connection: ConnectionSet) -> EigenvectorSet:
    """The printed orthonormal eigenbasis of C^{8n} (independent of S)."""
    params = connection.params
    n = params.n
    two_n = params.two_n
    r = np.arange(two_n)
    zeros = np.zeros(two_n, dtype=complex)
    cols: list[np.ndarray] = []
    labels: list[str] = []
    s8 = 1.0 / np.sqrt(8 * n)
    s4 = 1.0 / np.sqrt(4 * n)
    omega = np.exp(1j * np.pi / n)

    def add(label: str, v1, v2, v3, v4, scale) -> None:
        cols.append(scale * np.concatenate([v1, v2, v3, v4]))
        labels.append(label)

    ones = np.ones(two_n, dtype=complex)
    alt = (-1.0 + 0j) ** r  # 1, -1, 1, -1, ...

    if params.is_odd:
        add("alpha_1", ones, ones, ones, ones, s8)
        add("alpha_2", ones, -ones, ones, -ones, s8)
        add("alpha_3", alt, alt, alt, alt, s8)
        add("alpha_4", alt, -alt, alt, -alt, s8)
        for j in range(n):
            w = omega ** (2 * r * j)
            wneg = (-omega ** (-2 * j)) ** r
            wpos = (-omega ** (2 * j)) ** r
            add(f"beta_{j}", w, zeros, -w, zeros, s4)
            add(f"beta_{j}", zeros, w, zeros, -w, s4)
            add(f"beta_{j}", zeros, -wneg, zeros, wneg, s4)
            add(f"beta_{j}", wpos, zeros, -wpos, zeros, s4)
        for k in range(1, n):
            w = omega ** (r * k)
            wc = omega ** (-r * k)
            add(f"gamma_{k}", w, zeros, w, zeros, s4)
            add(f"gamma_{k}", zeros, w, zeros, w, s4)
            add(f"gamma_{k}", zeros, wc, zeros, wc, s4)
            add(f"gamma_{k}", wc, zeros, wc, zeros, s4)
    else:
        i_r = 1j ** r
        mi_r = (-1j) ** r
        add("alpha_1", ones, ones, ones, ones, s8)
        add("alpha_2", i_r, i_r * 1j ** 3, -i_r, i_r * 1j, s8)
        add("alpha_3", alt, -alt, alt, -alt, s8)
        add("alpha_4", mi_r, mi_r * (-1j) ** 3, mi_r * (-1j) ** 2, mi_r * (-1j), s8)
        add("alpha_5", ones, -ones, ones, -ones, s8)
        add("alpha_6", i_r, i_r * 1j, i_r * 1j ** 2, i_r * 1j ** 3, s8)
        add("alpha_7", alt, alt, alt, alt, s8)
        add("alpha_8", mi_r, mi_r * (-1j), mi_r * (-1j) ** 2, mi_r * (-1j) ** 3, s8)
        for j in range(1, n):
            w = omega ** (r * j)
            wc = omega ** (-r * j)
            add(f"beta_{j}", w, zeros, w, zeros, s4)
            add(f"beta_{j}", zeros, 1j * w, zeros, 1j * w, s4)
            add(f"beta_{j}", zeros, -1j * wc, zeros, -1j * wc, s4)
            add(f"beta_{j}", wc, zeros, wc, zeros, s4)
        for k in range(1, n):
            z = (1j * omega ** k) ** r
            zc = (1j * omega ** (-k)) ** r
            add(f"gamma_{k}", z, zeros, -z, zeros, s4)
            add(f"gamma_{k}", zeros, z, zeros, -z, s4)
            add(f"gamma_{k}", zeros, -zc, zeros, zc, s4)
            add(f"gamma_{k}", zc, zeros, -zc, zeros, s4)

    V = np.column_stack(cols)
    assert V.shape == (params.order, params.order)
    return EigenvectorSet(connection=connection, labels=tuple(labels), matrix=V)
