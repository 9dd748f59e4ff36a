"""Real roots of ``x^4 - S1 x^3 + S2 x^2 - S3 x + S4`` by Ferrari's method.

The quartic is depressed, a root of the resolvent cubic is found in closed
form (trigonometric form when it has three real roots, Cardano otherwise),
and the quartic splits into two real quadratics.  Each root is then polished
by Newton's method on the original polynomial.  No eigensolver is involved.

Repeated roots are where Ferrari loses accuracy (a k-fold root is only
determined to about eps**(1/k)).  They are handled separately: a k-fold root
of p is a simple root of its (k-1)-th derivative, so candidate repeated-root
factorizations are built from the critical points of p and kept when they
reproduce the coefficients at least as well as the all-simple answer.
"""

import math
from itertools import combinations

from .errors import ResidualTooLarge

RESIDUAL_TOL = 1e-10
MAX_NEWTON = 50
# coefficient mismatch treated as round-off when comparing factorizations
REBUILD_TOL = 64 * 2.220446049250313e-16
# Ferrari spreads a repeated root by at most ~eps**(1/4); wider gaps are simple
CLUSTER_GAP = 1e-3


def _coeffs(c):
    if hasattr(c, "as_tuple"):
        c = c.as_tuple()
    s1, s2, s3, s4 = (float(v) for v in c)
    if not all(math.isfinite(v) for v in (s1, s2, s3, s4)):
        raise ValueError("quartic coefficients must be finite")
    return s1, s2, s3, s4


def char_poly(x, s1, s2, s3, s4):
    return (((x - s1) * x + s2) * x - s3) * x + s4


def _char_poly_deriv(x, s1, s2, s3):
    return ((4.0 * x - 3.0 * s1) * x + 2.0 * s2) * x - s3


def _cbrt(x):
    return math.copysign(abs(x) ** (1.0 / 3.0), x)


def _cubic_newton(x, b, c, d):
    for _ in range(MAX_NEWTON):
        f = ((x + b) * x + c) * x + d
        df = (3.0 * x + 2.0 * b) * x + c
        if f == 0.0 or df == 0.0:
            break
        nxt = x - f / df
        if abs(((nxt + b) * nxt + c) * nxt + d) >= abs(f):
            break
        x = nxt
    return x


def cubic_real_roots(b, c, d):
    """Real roots of ``t^3 + b t^2 + c t + d``, largest first.

    Three roots in trigonometric form when the discriminant allows it,
    otherwise the single real root from Cardano's formula.
    """
    shift = b / 3.0
    p = c - b * b / 3.0
    q = 2.0 * b**3 / 27.0 - b * c / 3.0 + d
    disc = q * q / 4.0 + p**3 / 27.0
    if p < 0.0 and disc <= 0.0:
        rad = math.sqrt(-p / 3.0)
        phi = math.acos(max(-1.0, min(1.0, -q / (2.0 * rad**3))))
        ts = [2.0 * rad * math.cos((phi - 2.0 * math.pi * k) / 3.0) for k in range(3)]
    elif p == 0.0:
        ts = [_cbrt(-q)]
    else:
        sq = math.sqrt(max(disc, 0.0))
        u = _cbrt(-q / 2.0 + sq)
        ts = [u - p / (3.0 * u) if u != 0.0 else _cbrt(-q / 2.0 - sq)]
    return [_cubic_newton(t - shift, b, c, d) for t in ts]


def _quadratic(b, c):
    """Real parts of the roots of ``y^2 + b y + c``; imaginary parts are dropped."""
    disc = b * b - 4.0 * c
    if disc < 0.0:
        # complex pair; the real part is kept and the residual gate decides
        return -b / 2.0, -b / 2.0
    sq = math.sqrt(disc)
    big = -0.5 * (b + math.copysign(sq, b))
    if big == 0.0:
        return 0.0, 0.0
    return big, c / big


def _ferrari(s1, s2, s3, s4):
    a3, a2, a1, a0 = -s1, s2, -s3, s4
    p = a2 - 3.0 * a3 * a3 / 8.0
    q = a1 - a3 * a2 / 2.0 + a3**3 / 8.0
    r = a0 - a3 * a1 / 4.0 + a3 * a3 * a2 / 16.0 - 3.0 * a3**4 / 256.0
    shift = -a3 / 4.0

    # resolvent cubic 8m^3 + 8p m^2 + (2p^2 - 8r) m - q^2, monic form
    m = cubic_real_roots(p, p * p / 4.0 - r, -q * q / 8.0)[0]
    if m > 0.0:
        s = math.sqrt(2.0 * m)
        half = q / (2.0 * s)
        ys = _quadratic(-s, p / 2.0 + m + half) + _quadratic(s, p / 2.0 + m - half)
    else:
        # biquadratic: y^4 + p y^2 + r
        ys = ()
        for z in _quadratic(p, r):
            rt = math.sqrt(max(z, 0.0))
            ys += (rt, -rt)
    return [y + shift for y in ys]


def _polish(x, s1, s2, s3, s4):
    f = char_poly(x, s1, s2, s3, s4)
    for _ in range(MAX_NEWTON):
        if f == 0.0:
            break
        df = _char_poly_deriv(x, s1, s2, s3)
        if df == 0.0:
            break
        nxt = x - f / df
        fn = char_poly(nxt, s1, s2, s3, s4)
        if abs(fn) >= abs(f):
            break
        x, f = nxt, fn
    return x


def _rebuild_error(roots, s1, s2, s3, s4):
    """Scaled mismatch between ``(S1..S4)`` and the symmetric functions of ``roots``."""
    e = [1.0, 0.0, 0.0, 0.0, 0.0]
    for r in roots:
        for k in range(4, 0, -1):
            e[k] += r * e[k - 1]
    scale = max(1.0, max(abs(r) for r in roots))
    return max(
        abs(e[k] - sk) / (binom * scale**k)
        for k, sk, binom in ((1, s1, 4), (2, s2, 6), (3, s3, 4), (4, s4, 1))
    )


def _repeated_root_candidates(s1, s2, s3, s4):
    """Candidate root lists grouped by how many distinct values they contain."""
    one, two, three = [], [], []
    # fourfold: root of the third derivative 24x - 6 S1
    c = s1 / 4.0
    one.append([c, c, c, c])
    # threefold: roots of the second derivative 12x^2 - 6 S1 x + 2 S2
    for c in _quadratic(-s1 / 2.0, s2 / 6.0):
        two.append([c, c, c, s1 - 3.0 * c])
    # twofold: roots of the first derivative, then deflate p by (x - c)^2
    critical = cubic_real_roots(-0.75 * s1, 0.5 * s2, -0.25 * s3)
    for c in critical:
        b = 2.0 * c - s1
        e = s2 - 2.0 * c * s1 + 3.0 * c * c
        three.append([c, c, *_quadratic(b, e)])
    for c, d in combinations(critical, 2):
        two.append([c, c, d, d])
    return one, two, three


def quartic_real_roots(c):
    """Four real roots, ascending, of the characteristic quartic with sums ``c``.

    ``c`` is a :class:`~ppt_minors.minors.CharPolyCoefficients` or a
    4-sequence ``(S1, S2, S3, S4)``.  Repeated roots are returned repeated.
    Raises :class:`ResidualTooLarge` if a root leaves ``|p(x)| > 1e-10``,
    which signals complex roots (non-Hermitian source).
    """
    s1, s2, s3, s4 = _coeffs(c)
    roots = sorted(_polish(x0, s1, s2, s3, s4) for x0 in _ferrari(s1, s2, s3, s4))

    best = roots
    if min(b - a for a, b in zip(roots, roots[1:])) <= CLUSTER_GAP:
        # fewest distinct roots first among exact fits, else the closest fit
        fallback = (_rebuild_error(roots, s1, s2, s3, s4), roots)
        for group in _repeated_root_candidates(s1, s2, s3, s4):
            err, cand = min((_rebuild_error(c, s1, s2, s3, s4), c) for c in group)
            if err <= REBUILD_TOL:
                best = cand
                break
            fallback = min(fallback, (err, cand))
        else:
            best = fallback[1]

    for x in best:
        f = char_poly(x, s1, s2, s3, s4)
        if not abs(f) <= RESIDUAL_TOL:
            raise ResidualTooLarge(f"root {x!r} leaves residual {abs(f):.3e} > {RESIDUAL_TOL:.0e}")
    return tuple(sorted(best))
