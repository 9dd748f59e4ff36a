"""Independent eigenvalue route: cyclic complex Jacobi and the trace-norm negativity.

Nothing here touches determinants or polynomial roots, so it can be used to
check the minor-based pipeline.
"""

import math
from dataclasses import dataclass

from .errors import CrossCheckError, NoConvergence
from .hermitian import DensityMatrix, Subsystem, as_matrix4, check_hermitian, partial_transpose, validate_density
from .minors import NegativityReport

OFFDIAG_TOL = 1e-12
MAX_SWEEPS = 100
_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


@dataclass(frozen=True)
class EigenDecomposition:
    eigenvalues: tuple
    max_offdiag_residual: float


def _max_offdiag(a):
    return max(abs(a[i][j]) for i in range(4) for j in range(4) if i != j)


def _rotate(a, p, q):
    """Apply the unitary that zeroes ``a[p][q]``: ``a <- W^H a W``."""
    g = a[p][q]
    mag = abs(g)
    if mag == 0.0:
        return
    phase = g / mag
    tau = (a[q][q].real - a[p][p].real) / (2.0 * mag)
    t = (1.0 if tau >= 0.0 else -1.0) / (abs(tau) + math.sqrt(1.0 + tau * tau))
    c = 1.0 / math.sqrt(1.0 + t * t)
    s = t * c
    wpq = s * phase
    wqp = -s * phase.conjugate()
    for row in a:
        xp, xq = row[p], row[q]
        row[p] = xp * c + xq * wqp
        row[q] = xp * wpq + xq * c
    rp, rq = a[p], a[q]
    cwpq, cwqp = wpq.conjugate(), wqp.conjugate()
    for k in range(4):
        xp, xq = rp[k], rq[k]
        rp[k] = c * xp + cwqp * xq
        rq[k] = cwpq * xp + c * xq


def eigvalsh4(h):
    """Ascending eigenvalues of a Hermitian 4x4 matrix by cyclic Jacobi sweeps.

    Stops once the largest off-diagonal magnitude is at most 1e-12; raises
    :class:`NoConvergence` after 100 sweeps.  The residual in the result is
    measured on the final rotated matrix.
    """
    h = as_matrix4(h)
    check_hermitian(h)
    a = h.tolist()
    off = _max_offdiag(a)
    sweeps = 0
    while off > OFFDIAG_TOL:
        if sweeps == MAX_SWEEPS:
            raise NoConvergence(f"off-diagonal residual {off:.3e} after {MAX_SWEEPS} sweeps", off)
        for p, q in _PAIRS:
            _rotate(a, p, q)
        sweeps += 1
        off = _max_offdiag(a)
    return EigenDecomposition(
        eigenvalues=tuple(sorted(a[i][i].real for i in range(4))),
        max_offdiag_residual=off,
    )


def negativity_eigen(rho, side=Subsystem.A):
    """Negativity ``(||rho^T||_1 - 1) / 2`` from the spectrum of the partial transpose.

    The sum of the magnitudes of the negative eigenvalues is reported
    alongside; the two must agree to 1e-10.
    """
    if not isinstance(rho, DensityMatrix):
        rho = validate_density(rho)
    ev = eigvalsh4(partial_transpose(rho.matrix, side)).eigenvalues
    from_norm = (sum(abs(x) for x in ev) - 1.0) / 2.0
    from_negatives = -sum(x for x in ev if x < 0.0)
    if abs(from_norm - from_negatives) > 1e-10:
        raise CrossCheckError(
            f"trace-norm negativity {from_norm!r} != negative-eigenvalue sum {from_negatives!r}"
        )
    return NegativityReport(
        roots=ev,
        lambda_min=ev[0],
        negativity=max(0.0, from_norm),
        method="eigen",
        negative_sum=from_negatives,
    )
