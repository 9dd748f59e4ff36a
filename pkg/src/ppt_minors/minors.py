"""Separability and negativity from the principal minors of the partial transpose.

The 15 principal minors of a 4x4 Hermitian matrix are enumerated in a fixed
order: for each order ``k`` the index subsets follow lexicographic order,
i.e. ``{1,2}, {1,3}, {1,4}, {2,3}, {2,4}, {3,4}`` for ``k = 2``.  Slot ``l``
of order ``k`` is reported as ``m^k_l`` (1-based).

The sums of the order-k minors are the coefficients of the characteristic
polynomial ``x^4 - S1 x^3 + S2 x^2 - S3 x + S4``; its smallest root gives the
negativity without any eigensolver.
"""

from dataclasses import dataclass, field
from itertools import combinations

from .errors import NotHermitian
from .hermitian import (
    DensityMatrix,
    Subsystem,
    as_matrix4,
    check_hermitian,
    partial_transpose,
    validate_density,
)
from .quartic import quartic_real_roots

SUBSETS = {k: tuple(combinations(range(4), k)) for k in (1, 2, 3, 4)}
NEGATIVE_MINOR_TOL = 1e-10
_IMAG_RESIDUE_TOL = 1e-12


@dataclass(frozen=True)
class MinorSet:
    order1: tuple
    order2: tuple
    order3: tuple
    order4: tuple

    def by_order(self, k):
        return (self.order1, self.order2, self.order3, self.order4)[k - 1]

    def labeled(self):
        """Yield ``(order, index, value)`` with 1-based ``index``."""
        for k in (1, 2, 3, 4):
            for l, value in enumerate(self.by_order(k), start=1):
                yield k, l, value

    def values(self):
        return self.order1 + self.order2 + self.order3 + self.order4

    def __len__(self):
        return 15


@dataclass(frozen=True)
class CharPolyCoefficients:
    s1: float
    s2: float
    s3: float
    s4: float

    def as_tuple(self):
        return (self.s1, self.s2, self.s3, self.s4)


@dataclass(frozen=True)
class SeparabilityVerdict:
    separable: bool
    negative_minors: list = field(default_factory=list)
    tolerance_used: float = NEGATIVE_MINOR_TOL


@dataclass(frozen=True)
class NegativityReport:
    roots: tuple
    lambda_min: float
    negativity: float
    method: str
    # eigen route only: sum of |negative eigenvalues|
    negative_sum: float | None = None


def minor_label(order, index):
    return f"m^{order}_{index}"


def _det3(a, r, c):
    """Determinant of the 3x3 submatrix of ``a`` on rows ``r`` and columns ``c``."""
    r0, r1, r2 = a[r[0]], a[r[1]], a[r[2]]
    c0, c1, c2 = c
    return (
        r0[c0] * (r1[c1] * r2[c2] - r1[c2] * r2[c1])
        - r0[c1] * (r1[c0] * r2[c2] - r1[c2] * r2[c0])
        + r0[c2] * (r1[c0] * r2[c1] - r1[c1] * r2[c0])
    )


def _det4(a):
    rows = (1, 2, 3)
    total = 0j
    sign = 1.0
    for j in range(4):
        cols = tuple(c for c in range(4) if c != j)
        total += sign * a[0][j] * _det3(a, rows, cols)
        sign = -sign
    return total


def principal_minors(h):
    """All 15 principal minors of a Hermitian 4x4 matrix, by cofactor expansion."""
    h = as_matrix4(h)
    check_hermitian(h)
    # symmetrize so that imaginary parts of the minors are pure round-off
    a = (0.5 * (h + h.conj().T)).tolist()

    o2 = [a[i][i] * a[j][j] - a[i][j] * a[j][i] for i, j in SUBSETS[2]]
    o3 = [_det3(a, s, s) for s in SUBSETS[3]]
    o4 = [_det4(a)]
    for value in o2 + o3 + o4:
        if abs(value.imag) > _IMAG_RESIDUE_TOL:
            raise NotHermitian(f"principal minor has imaginary part {value.imag:.3e}")
    return MinorSet(
        order1=tuple(a[i][i].real for i in range(4)),
        order2=tuple(v.real for v in o2),
        order3=tuple(v.real for v in o3),
        order4=(o4[0].real,),
    )


def minor_sums(m):
    """Characteristic-polynomial coefficients ``S_k`` = sum of the order-k minors."""
    return CharPolyCoefficients(
        s1=float(sum(m.order1)),
        s2=float(sum(m.order2)),
        s3=float(sum(m.order3)),
        s4=float(m.order4[0]),
    )


def sylvester_separable(pt, tol=NEGATIVE_MINOR_TOL):
    """Decide separability from the partial transpose ``pt``.

    The state is separable iff no principal minor of ``pt`` is below ``-tol``.
    Offending minors are listed as ``(order, index, value)``.
    """
    if tol < 0:
        raise ValueError("tol must be non-negative")
    minors = principal_minors(pt)
    negative = [(k, l, v) for k, l, v in minors.labeled() if v < -tol]
    return SeparabilityVerdict(separable=not negative, negative_minors=negative, tolerance_used=tol)


def negative_minor_sum(pt):
    """``|sum of the strictly negative principal minors|`` of ``pt``.

    Diagnostic only: unlike the negativity, this number is not an
    entanglement measure.
    """
    minors = principal_minors(pt)
    return abs(sum(v for v in minors.values() if v < 0.0))


def negativity_minors(rho, side=Subsystem.A):
    """Negativity as ``max(0, -lambda_min)`` of the minor-sum quartic of ``rho^T``."""
    if not isinstance(rho, DensityMatrix):
        rho = validate_density(rho)
    pt = partial_transpose(rho.matrix, side)
    roots = quartic_real_roots(minor_sums(principal_minors(pt)))
    lam = roots[0]
    return NegativityReport(roots=roots, lambda_min=lam, negativity=max(0.0, -lam), method="minors")

