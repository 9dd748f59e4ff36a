"""Dense 4x4 complex matrices on C^2 (x) C^2 and their bipartite operations.

Composite index convention: row ``2*m + mu``, column ``2*n + nu`` where
``m, n`` label qubit A (most significant) and ``mu, nu`` label qubit B.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import NonFiniteEntry, NotHermitian, NotPSD, TraceNotOne

VALIDATION_TOL = 1e-10


class Subsystem(str, Enum):
    A = "A"
    B = "B"


def as_matrix4(g):
    """Return ``g`` as a read-only complex128 4x4 array, rejecting NaN/Inf."""
    arr = np.array(g, dtype=np.complex128)
    if arr.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {arr.shape}")
    if not np.isfinite(arr).all():
        raise NonFiniteEntry("matrix contains NaN or infinite entries")
    arr.flags.writeable = False
    return arr


def as_matrix2(g):
    arr = np.array(g, dtype=np.complex128)
    if arr.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {arr.shape}")
    if not np.isfinite(arr).all():
        raise NonFiniteEntry("matrix contains NaN or infinite entries")
    return arr


def kron2(left, right):
    """Tensor product of two 2x2 matrices: ``out[2m+mu, 2n+nu] = left[m,n] * right[mu,nu]``."""
    left = as_matrix2(left)
    right = as_matrix2(right)
    out = (left[:, None, :, None] * right[None, :, None, :]).reshape(4, 4)
    out.flags.writeable = False
    return out


def partial_transpose(g, s=Subsystem.A):
    """Transpose the indices of one qubit.

    For ``A`` the off-diagonal 2x2 blocks are swapped; for ``B`` every
    2x2 block is transposed in place. Pure index permutation.
    """
    s = Subsystem(s)
    t = as_matrix4(g).reshape(2, 2, 2, 2)
    if s is Subsystem.A:
        out = t.transpose(2, 1, 0, 3)
    else:
        out = t.transpose(0, 3, 2, 1)
    out = out.reshape(4, 4).copy()
    out.flags.writeable = False
    return out


def partial_trace(g, traced=Subsystem.B):
    """Trace out one qubit and return the 2x2 reduced matrix of the other."""
    traced = Subsystem(traced)
    t = as_matrix4(g).reshape(2, 2, 2, 2)
    if traced is Subsystem.B:
        return np.einsum("iaja->ij", t)
    return np.einsum("aiaj->ij", t)


def hermiticity_defect(g):
    """Largest ``|g[i,j] - conj(g[j,i])|``."""
    g = np.asarray(g)
    return float(np.max(np.abs(g - g.conj().T)))


def check_hermitian(g, tol=VALIDATION_TOL):
    defect = hermiticity_defect(g)
    if defect > tol:
        raise NotHermitian(f"max |h[i,j] - conj(h[j,i])| = {defect:.3e} exceeds {tol:.0e}")
    return defect


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """A validated two-qubit density matrix.

    Construct through :func:`validate_density` (or the generators in
    :mod:`ppt_minors.states`); the wrapped array is read-only.
    """

    matrix: np.ndarray

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self.matrix
        return self.matrix.astype(dtype)

    def __repr__(self):
        return f"DensityMatrix(\n{np.array2string(self.matrix, precision=6)})"


def validate_density(g, tol=VALIDATION_TOL):
    """Check Hermiticity, unit trace and positivity, in that order.

    Positivity is decided by the principal-minor (Sylvester) test on the
    matrix itself: every one of its 15 principal minors must be ``>= -tol``.
    """
    from .minors import principal_minors

    if isinstance(g, DensityMatrix):
        return g
    m = as_matrix4(g)
    check_hermitian(m, tol)
    tr = complex(np.trace(m))
    if abs(tr - 1.0) > tol:
        raise TraceNotOne(f"trace = {tr.real:.12g}{tr.imag:+.3g}j, |Tr - 1| = {abs(tr - 1):.3e}")
    minors = principal_minors(m)
    for order, index, value in minors.labeled():
        if value < -tol:
            raise NotPSD(f"principal minor m^{order}_{index} = {value:.6e} is negative")
    return DensityMatrix(m)
