"""Spin-one Kemmer (DKP) beta matrices and the identities built on them.

The 10-dimensional basis is ordered as three 3-blocks followed by one
scalar component, matching the block layout of the beta matrices.
Indices run over 0..3 with metric diag(+1, -1, -1, -1).
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Callable

from .exact import ExactMatrix, I, commutator

DIM = 10
METRIC = (1, -1, -1, -1)
_OFFSETS = (0, 3, 6, 9)

BetaFn = Callable[[int], ExactMatrix]


def _check_index(*idx: int) -> None:
    for n in idx:
        if n not in (0, 1, 2, 3):
            raise IndexError(f"spacetime index must be in 0..3, got {n!r}")


def metric(nu: int, lam: int) -> int:
    _check_index(nu, lam)
    return METRIC[nu] if nu == lam else 0


def epsilon(nu: int, lam: int, rho: int, sigma: int) -> int:
    """Levi-Civita symbol with epsilon(0, 1, 2, 3) = +1."""
    idx = (nu, lam, rho, sigma)
    _check_index(*idx)
    if len(set(idx)) < 4:
        return 0
    sign = 1
    perm = list(idx)
    for i in range(4):
        while perm[i] != i:
            j = perm[i]
            perm[i], perm[j] = perm[j], perm[i]
            sign = -sign
    return sign


def spin_block(j: int) -> ExactMatrix:
    """3x3 spin-one generator S^j: (S^j)_{ab} = -i eps_{jab}."""
    if j not in (1, 2, 3):
        raise IndexError(j)
    rows = [[0] * 3 for _ in range(3)]
    for a in range(3):
        for b in range(3):
            e = epsilon(0, j, a + 1, b + 1)
            rows[a][b] = I * (-e)
    return ExactMatrix.from_rows(rows)


def k_row(j: int) -> ExactMatrix:
    """1x3 unit row K^j selecting component j."""
    if j not in (1, 2, 3):
        raise IndexError(j)
    return ExactMatrix((1, 3), {(0, j - 1): 1})


@lru_cache(maxsize=None)
def beta(nu: int) -> ExactMatrix:
    """Upper-index Kemmer matrix beta^nu as an exact 10x10 matrix."""
    _check_index(nu)
    o = _OFFSETS
    if nu == 0:
        eye = ExactMatrix.identity(3)
        return ExactMatrix.from_blocks((DIM, DIM), {(o[0], o[2]): eye, (o[2], o[0]): eye})
    s = spin_block(nu)
    k = k_row(nu)
    return ExactMatrix.from_blocks((DIM, DIM), {
        (o[0], o[3]): (-I) * k.H,
        (o[1], o[2]): s,
        (o[2], o[1]): -s,
        (o[3], o[0]): (-I) * k,
    })


def beta_lower(nu: int, beta_fn: BetaFn = beta) -> ExactMatrix:
    _check_index(nu)
    return beta_fn(nu).scale(METRIC[nu])


def kemmer_residual(nu: int, lam: int, rho: int, beta_fn: BetaFn = beta) -> ExactMatrix:
    """b_nu b_lam b_rho + b_rho b_lam b_nu - (b_nu g_{lam rho} + b_rho g_{nu lam}).

    Lower-index matrices; zero for every index triple when the trilinear
    Kemmer relation holds.
    """
    _check_index(nu, lam, rho)
    bn, bl, br = (beta_lower(i, beta_fn) for i in (nu, lam, rho))
    lhs = bn @ bl @ br + br @ bl @ bn
    rhs = bn.scale(metric(lam, rho)) + br.scale(metric(nu, lam))
    return lhs - rhs


def spin_tensor(lam: int, rho: int, beta_fn: BetaFn = beta) -> ExactMatrix:
    """S_{lam rho} = (b_lam b_rho - b_rho b_lam) / 2 with lower indices."""
    _check_index(lam, rho)
    return commutator(beta_lower(lam, beta_fn), beta_lower(rho, beta_fn)).scale(Fraction(1, 2))


def xi(nu: int, beta_fn: BetaFn = beta) -> ExactMatrix:
    """Spin pseudo-vector xi_nu = (i/2) eps_{nu lam rho sigma} b^lam b^rho b^sigma."""
    _check_index(nu)
    total = ExactMatrix.zeros(DIM)
    others = [i for i in range(4) if i != nu]
    for lam, rho, sig in permutations(others, 3):
        sgn = epsilon(nu, lam, rho, sig)
        total = total + (beta_fn(lam) @ beta_fn(rho) @ beta_fn(sig)).scale(sgn)
    return total.scale(I * Fraction(1, 2))


def xi3_spectrum(beta_fn: BetaFn = beta) -> Counter:
    """Eigenvalue multiplicities of xi_3, by exact rank computations.

    Requires xi^3 == xi (checked), which makes xi diagonalizable with
    eigenvalues in {-1, 0, 1}. Then (xi^2 +/- xi)/2 project onto the +/-1
    eigenspaces and the kernel of xi is the 0 eigenspace.
    """
    x = xi(3, beta_fn)
    x2 = x @ x
    if x2 @ x != x:
        raise ArithmeticError("xi_3 does not satisfy xi^3 = xi; spectrum not in {-1,0,1}")
    n0 = DIM - x.rank()
    n_plus = (x2 + x).rank()
    n_minus = (x2 - x).rank()
    return Counter({-1: n_minus, 0: n0, 1: n_plus})
