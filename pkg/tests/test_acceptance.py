"""Acceptance criteria, each at its stated tolerance.

Every test carries a ``criterion`` marker; the session summary prints one
PASS/FAIL line per criterion.
"""

import time

import numpy as np
import pytest

from ppt_minors import (
    BellKind,
    bell_state,
    eigvalsh4,
    minor_sums,
    negative_minor_sum,
    negativity_eigen,
    negativity_minors,
    partial_transpose,
    principal_minors,
    quartic_real_roots,
    random_density,
    random_local_unitary,
    random_separable,
    sylvester_separable,
    werner_state,
)
from ppt_minors import cli
from ppt_minors.states import conjugate, ensemble_seeds, make_rng

from _oracles import esym

N_ENSEMBLE = 10_000
BASE_SEED = 20261015


@pytest.fixture(scope="session")
def ensemble():
    return [random_density(s) for s in ensemble_seeds(BASE_SEED, N_ENSEMBLE)]


@pytest.fixture(scope="session")
def ensemble_results(ensemble):
    t0 = time.perf_counter()
    minors = [negativity_minors(rho) for rho in ensemble]
    eigen = [negativity_eigen(rho) for rho in ensemble]
    return minors, eigen, time.perf_counter() - t0


@pytest.mark.criterion(1, "path equivalence over 10,000 random states (1e-8, <10 s)")
def test_path_equivalence(ensemble_results):
    minors, eigen, elapsed = ensemble_results
    worst = max(abs(a.negativity - b.negativity) for a, b in zip(minors, eigen))
    print(f"max |N_minors - N_eigen| = {worst:.3e}, both paths {elapsed:.2f} s")
    assert worst <= 1e-8
    assert elapsed < 10.0


@pytest.mark.criterion(2, "S1..S4 match symmetric functions of oracle eigenvalues (1e-9)")
def test_newton_identities():
    seeds = ensemble_seeds(BASE_SEED + 2, 500)
    worst = 0.0
    for s in seeds:
        rho = random_density(s).matrix
        for h in (rho, partial_transpose(rho)):
            got = minor_sums(principal_minors(h)).as_tuple()
            want = esym(eigvalsh4(h).eigenvalues)
            worst = max(worst, max(abs(g - w) for g, w in zip(got, want)))
    print(f"1000 Hermitian inputs, max coefficient error {worst:.3e}")
    assert worst <= 1e-9


@pytest.mark.criterion(3, "Werner closed form on 101 points (1e-10) and verdict flip")
def test_werner_sweep():
    rows = cli.werner_sweep(0.0, 1.0, 101, 1e-10)
    assert len(rows) == 101
    for p, n_min, n_eig, separable in rows:
        exact = max(0.0, (3.0 * p - 1.0) / 4.0)
        assert abs(n_min - exact) <= 1e-10
        assert abs(n_eig - exact) <= 1e-10
    verdict = {round(p, 2): sep for p, _, _, sep in rows}
    assert verdict[0.33] and not verdict[0.34]
    assert all(verdict[round(k / 100, 2)] for k in range(34))
    assert not any(verdict[round(k / 100, 2)] for k in range(34, 101))


@pytest.mark.criterion(4, "Sylvester verdict agrees with oracle sign; separable states accepted")
def test_sylvester_agreement(ensemble, ensemble_results):
    _, eigen, _ = ensemble_results
    band = 0
    for rho, rep in zip(ensemble, eigen):
        lam = rep.lambda_min
        verdict = sylvester_separable(partial_transpose(rho.matrix))
        if abs(lam) <= 1e-8:
            band += 1
            continue
        assert verdict.separable == (lam > 0.0)

    rejected = []
    for i, s in enumerate(ensemble_seeds(BASE_SEED + 4, N_ENSEMBLE)):
        rho, _ = random_separable(1 + i % 6, s)
        if not sylvester_separable(partial_transpose(rho.matrix)).separable:
            rejected.append(s)
    print(f"random states inside the |lambda_min| <= 1e-8 band: {band}; separable rejected: {len(rejected)}")
    assert not rejected


@pytest.mark.criterion(5, "Bell states: negativity 1/2 on both paths, m^2_4 = -1/4 (1e-12)")
def test_bell_exactness():
    for kind in BellKind:
        rho = bell_state(kind)
        assert abs(negativity_minors(rho).negativity - 0.5) <= 1e-12
        assert abs(negativity_eigen(rho).negativity - 0.5) <= 1e-12
    pt = partial_transpose(bell_state(BellKind.PHI_PLUS).matrix)
    assert abs(principal_minors(pt).order2[3] + 0.25) <= 1e-12


@pytest.mark.criterion(6, "at most one partial-transpose root below -1e-10")
def test_single_negative_root(ensemble_results):
    minors, _, _ = ensemble_results
    counts = [sum(r < -1e-10 for r in rep.roots) for rep in minors]
    print(f"entangled states in ensemble: {sum(c == 1 for c in counts)}")
    assert max(counts) <= 1


FROZEN_PAIR = (11078971960885377977, 5802583823545794729)


def _not_a_measure_pairs(base_seed, n):
    data = []
    for s in ensemble_seeds(base_seed, n):
        rho = random_density(s)
        neg = negativity_minors(rho).negativity
        if neg > 0.0:
            data.append((neg, negative_minor_sum(partial_transpose(rho.matrix)), s))
    data.sort()
    return [
        (a[2], b[2])
        for a, b in zip(data, data[1:])
        if b[0] - a[0] <= 1e-6 and abs(b[1] - a[1]) > 1e-3
    ]


@pytest.mark.criterion(7, "equal negativity (1e-6) with negative-minor sums apart (>1e-3)")
def test_not_a_measure():
    pairs = _not_a_measure_pairs(2024, 5000)
    assert FROZEN_PAIR in pairs or FROZEN_PAIR[::-1] in pairs
    rhos = [random_density(s) for s in FROZEN_PAIR]
    negs = [negativity_minors(r).negativity for r in rhos]
    sums = [negative_minor_sum(partial_transpose(r.matrix)) for r in rhos]
    print(f"seeds {FROZEN_PAIR}: N = {negs}, negative-minor sums = {sums}")
    assert abs(negs[0] - negs[1]) <= 1e-6
    assert abs(sums[0] - sums[1]) > 1e-3


def _diagonal_cases(seed):
    rng = make_rng(seed)
    cases = []
    for _ in range(900):
        cases.append((rng.uniform(-0.5, 1.0, 4), False))
    patterns = ("double", "triple", "pair", "quad")
    for i in range(100):
        a, b, c = rng.uniform(-0.5, 1.0, 3)
        kind = patterns[i % 4]
        d = {
            "double": [a, a, b, c],
            "triple": [a, a, a, b],
            "pair": [a, a, b, b],
            "quad": [a, a, a, a],
        }[kind]
        cases.append((np.array(d), True))
    return cases


@pytest.mark.criterion(8, "quartic roots of diagonal matrices (1e-9 simple, 1e-6 repeated)")
def test_quartic_robustness():
    worst = {False: 0.0, True: 0.0}
    for diag, repeated in _diagonal_cases(BASE_SEED + 8):
        h = np.diag(diag).astype(complex)
        roots = quartic_real_roots(minor_sums(principal_minors(h)))
        err = float(np.max(np.abs(np.array(roots) - np.sort(diag))))
        worst[repeated] = max(worst[repeated], err)
    print(f"max root error: simple {worst[False]:.3e}, repeated {worst[True]:.3e}")
    assert worst[False] <= 1e-9
    assert worst[True] <= 1e-6


@pytest.mark.criterion(9, "negativity invariant under local unitaries (1e-8)")
def test_local_unitary_invariance():
    worst = 0.0
    for s in ensemble_seeds(BASE_SEED + 9, 1000):
        rho = random_density(s)
        moved = conjugate(rho.matrix, random_local_unitary(s ^ 0x5DEECE66D))
        worst = max(
            worst,
            abs(negativity_minors(moved).negativity - negativity_minors(rho).negativity),
            abs(negativity_eigen(moved).negativity - negativity_eigen(rho).negativity),
        )
    print(f"max negativity change under U (x) V: {worst:.3e}")
    assert worst <= 1e-8


@pytest.mark.criterion(10, "bench on 10,000 trials reports both timings, disagreement <= 1e-8")
def test_bench_integrity(capsys):
    code = cli.main(["bench", "--trials", "10000"])
    out = capsys.readouterr().out
    lines = out.splitlines()
    with capsys.disabled():
        print("\n" + out, end="")
    assert code == 0
    assert any(l.startswith("minors ") for l in lines)
    assert any(l.startswith("eigen ") for l in lines)
    dis = float(next(l for l in lines if l.startswith("max_disagreement")).split()[1])
    assert dis <= 1e-8
