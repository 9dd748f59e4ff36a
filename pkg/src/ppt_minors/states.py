"""Two-qubit test states: Bell, Werner, product and seeded random ensembles.

Randomness comes from numpy's PCG64 bit generator seeded with an explicit
unsigned 64-bit integer.  Gaussian variates are produced from its uniform
doubles with the Box-Muller transform and exponential variates by inversion,
so a seed fixes every draw.  No global RNG state is used.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import NotHermitian, NotPSD, TraceNotOne
from .hermitian import as_matrix2, kron2, validate_density

_SEED_LIMIT = 2**64


class BellKind(str, Enum):
    PHI_PLUS = "phi+"
    PHI_MINUS = "phi-"
    PSI_PLUS = "psi+"
    PSI_MINUS = "psi-"


_BELL_VECTORS = {
    BellKind.PHI_PLUS: (1, 0, 0, 1),
    BellKind.PHI_MINUS: (1, 0, 0, -1),
    BellKind.PSI_PLUS: (0, 1, 1, 0),
    BellKind.PSI_MINUS: (0, 1, -1, 0),
}


@dataclass(frozen=True, eq=False)
class SeparableEnsemble:
    """Weights ``p_i`` and single-qubit factor pairs of ``sum_i p_i a_i (x) b_i``."""

    weights: tuple
    factors: tuple

    def state(self):
        return sum(w * kron2(a, b) for w, (a, b) in zip(self.weights, self.factors))


def make_rng(seed):
    """PCG64 generator for a seed in ``[0, 2**64)``."""
    seed = int(seed)
    if not 0 <= seed < _SEED_LIMIT:
        raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
    return np.random.Generator(np.random.PCG64(seed))


def ensemble_seeds(seed, n):
    """``n`` per-item 64-bit seeds derived from one base seed."""
    make_rng(seed)
    return [int(s) for s in np.random.SeedSequence(int(seed)).generate_state(n, dtype=np.uint64)]


def box_muller(rng, n):
    """``n`` standard normal draws from pairs of uniforms."""
    m = (n + 1) // 2
    u1 = 1.0 - rng.random(m)  # (0, 1], keeps log finite
    u2 = rng.random(m)
    r = np.sqrt(-2.0 * np.log(u1))
    z = np.concatenate([r * np.cos(2.0 * np.pi * u2), r * np.sin(2.0 * np.pi * u2)])
    return z[:n]


def _complex_gaussian(rng, shape):
    n = int(np.prod(shape))
    z = box_muller(rng, 2 * n)
    return (z[:n] + 1j * z[n:]).reshape(shape)


def _bell_projector(kind):
    v = np.array(_BELL_VECTORS[BellKind(kind)], dtype=np.complex128)
    return np.outer(v, v.conj()) / 2.0


def bell_state(kind):
    """Projector onto one of the four Bell vectors (``phi+``, ``phi-``, ``psi+``, ``psi-``)."""
    return validate_density(_bell_projector(kind))


def werner_state(p):
    """``p |psi-><psi-| + (1 - p) I/4`` for ``0 <= p <= 1``; entangled iff ``p > 1/3``."""
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"Werner weight must lie in [0, 1], got {p}")
    return validate_density(p * _bell_projector(BellKind.PSI_MINUS) + (1.0 - p) * np.eye(4) / 4.0)


def check_qubit_state(a, tol=1e-10):
    a = as_matrix2(a)
    defect = float(np.max(np.abs(a - a.conj().T)))
    if defect > tol:
        raise NotHermitian(f"single-qubit factor asymmetry {defect:.3e}")
    tr = complex(np.trace(a))
    if abs(tr - 1.0) > tol:
        raise TraceNotOne(f"single-qubit factor trace {tr.real:.12g}")
    det = float(np.linalg.det(a).real)
    if det < -1e-12 or min(a[0, 0].real, a[1, 1].real) < -1e-12:
        raise NotPSD(f"single-qubit factor not positive (det {det:.3e})")
    return a


def bloch_state(x, y, z):
    """Single-qubit density matrix ``(I + r . sigma) / 2`` for ``|r| <= 1``."""
    return check_qubit_state(
        0.5 * np.array([[1.0 + z, x - 1j * y], [x + 1j * y, 1.0 - z]], dtype=np.complex128)
    )


def product_state(a, b):
    """``a (x) b`` for two single-qubit density matrices."""
    return validate_density(kron2(check_qubit_state(a), check_qubit_state(b)))


def _random_pure_qubit(rng):
    psi = _complex_gaussian(rng, (2,))
    psi /= np.linalg.norm(psi)
    return np.outer(psi, psi.conj())


def random_separable(n_terms, seed):
    """Random convex mixture of ``n_terms`` pure product states.

    Factors are Haar-random pure qubit states; weights are uniform on the
    simplex (normalized exponential draws).  Returns the state and the
    ensemble that witnesses its separability.
    """
    if int(n_terms) < 1:
        raise ValueError("n_terms must be at least 1")
    rng = make_rng(seed)
    factors = tuple((_random_pure_qubit(rng), _random_pure_qubit(rng)) for _ in range(int(n_terms)))
    w = -np.log(1.0 - rng.random(int(n_terms)))
    weights = tuple(float(x) for x in w / w.sum())
    ens = SeparableEnsemble(weights=weights, factors=factors)
    return validate_density(ens.state()), ens


def random_density(seed):
    """Full-rank random state ``G G^H / Tr(G G^H)`` from a complex Ginibre matrix."""
    g = _complex_gaussian(make_rng(seed), (4, 4))
    rho = g @ g.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    return validate_density(rho / np.trace(rho).real)


def random_su2(rng):
    q = box_muller(rng, 4)
    q /= np.linalg.norm(q)
    alpha, beta = complex(q[0], q[1]), complex(q[2], q[3])
    return np.array([[alpha, -beta.conjugate()], [beta, alpha.conjugate()]])


def random_local_unitary(seed):
    """``U (x) V`` with ``U, V`` Haar-random in SU(2)."""
    rng = make_rng(seed)
    return kron2(random_su2(rng), random_su2(rng))


def conjugate(rho, u):
    """``u rho u^H`` as a validated density matrix."""
    m = np.asarray(rho)
    return validate_density(u @ m @ u.conj().T)
