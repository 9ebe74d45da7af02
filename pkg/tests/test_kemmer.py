from fractions import Fraction
from itertools import product

import numpy as np
import pytest

from hmwkit.exact import I, ExactMatrix, commutator
from hmwkit.kemmer import (beta, epsilon, kemmer_residual, spin_block, spin_tensor, xi,
                           xi3_spectrum)

# displayed spin blocks, typed in independently of spin_block()
S_DISPLAY = {
    1: [[0, 0, 0], [0, 0, -1], [0, 1, 0]],
    2: [[0, 0, 1], [0, 0, 0], [-1, 0, 0]],
    3: [[0, -1, 0], [1, 0, 0], [0, 0, 0]],
}


@pytest.mark.parametrize("j", [1, 2, 3])
def test_spin_blocks_match_display(j):
    expected = ExactMatrix.from_rows([[I * v for v in row] for row in S_DISPLAY[j]])
    assert spin_block(j) == expected


def test_beta0_entries():
    b0 = beta(0)
    assert b0[0, 6] == 1
    assert b0[6, 0] == 1
    assert b0[9, 9] == 0
    assert b0.nnz() == 6


def test_beta3_k_block():
    b3 = beta(3)
    # last row -i K^3 selects component 3 of the first block
    assert b3[9, 2] == -I
    assert b3[2, 9] == -I
    assert b3[9, 0] == 0 and b3[9, 1] == 0


def test_beta_blocks_pattern():
    for j in (1, 2, 3):
        b = beta(j)
        for a, c in product(range(3), repeat=2):
            assert b[3 + a, 6 + c] == I * S_DISPLAY[j][a][c]
            assert b[6 + a, 3 + c] == -I * S_DISPLAY[j][a][c]


def test_beta_entries_gaussian_integers():
    for nu in range(4):
        assert all(v.is_gaussian_integer() for _, v in beta(nu).items())


def test_self_subtraction():
    assert (beta(1) - beta(1)).is_zero()


def test_bad_index():
    with pytest.raises(IndexError):
        beta(4)


def test_epsilon_properties():
    nonzero = [(idx, epsilon(*idx)) for idx in product(range(4), repeat=4) if epsilon(*idx)]
    assert len(nonzero) == 24
    assert epsilon(0, 1, 2, 3) == 1
    for idx, v in nonzero:
        a, b, c, d = idx
        assert epsilon(b, a, c, d) == -v
        assert epsilon(a, b, d, c) == -v


def test_kemmer_relation_specific_triples():
    assert kemmer_residual(0, 0, 0).is_zero()
    b0 = beta(0)
    assert b0 @ b0 @ b0 == b0
    assert kemmer_residual(1, 1, 1).is_zero()
    b1 = beta(1).scale(-1)
    assert b1 @ b1 @ b1 == b1.scale(-1)


def test_kemmer_relation_all_triples():
    bad = [t for t in product(range(4), repeat=3) if not kemmer_residual(*t).is_zero()]
    assert bad == []


def test_kemmer_relation_float_crosscheck():
    # numerical double-check of the same identity with numpy complex matrices
    g = np.diag([1, -1, -1, -1])
    bl = [g[n, n] * beta(n).to_complex() for n in range(4)]
    for n, l, r in product(range(4), repeat=3):
        lhs = bl[n] @ bl[l] @ bl[r] + bl[r] @ bl[l] @ bl[n]
        rhs = bl[n] * g[l, r] + bl[r] * g[n, l]
        assert np.abs(lhs - rhs).max() == 0


def test_spin_tensor_antisymmetry_and_entries():
    assert spin_tensor(1, 1).is_zero()
    for lam, rho in product(range(4), repeat=2):
        assert spin_tensor(lam, rho) == -spin_tensor(rho, lam)
    half = Fraction(1, 2)
    allowed = {0, half, -half}
    for _, v in spin_tensor(0, 2).items():
        assert v.re in allowed and v.im in allowed
    for lam, rho in product(range(4), repeat=2):
        for _, v in spin_tensor(lam, rho).items():
            assert (2 * v.re).denominator == 1 and (2 * v.im).denominator == 1


def test_xi3_cubic_identity():
    x = xi(3)
    assert x @ x @ x == x
    t = x.trace()
    assert t.im == 0 and t.re.denominator == 1


def test_xi3_commutators():
    x = xi(3)
    for j in (0, 1, 2):
        assert commutator(x, beta(j)).is_zero()
    assert not commutator(x, beta(3)).is_zero()


def test_commutator_antisymmetric():
    c = commutator(beta(0), beta(3))
    assert not c.is_zero()
    assert c == -commutator(beta(3), beta(0))


def test_xi3_spectrum_multiplicities():
    spec = xi3_spectrum()
    assert set(spec) <= {-1, 0, 1}
    assert sum(spec.values()) == 10
    # (n_-1, n_0, n_+1) computed beforehand with sympy's exact eigenvals
    assert (spec[-1], spec[0], spec[1]) == (3, 4, 3)


def test_xi3_spectrum_trace_oracle():
    # independent route: trace(xi) = n+ - n-, trace(xi^2) = n+ + n-
    x = xi(3)
    spec = xi3_spectrum()
    assert x.trace() == spec[1] - spec[-1]
    assert (x @ x).trace() == spec[1] + spec[-1]


def test_xi3_spectrum_numeric_crosscheck():
    ev = np.linalg.eigvals(xi(3).to_complex())
    rounded = sorted(int(round(e.real)) for e in ev)
    assert np.allclose(ev.imag, 0, atol=1e-12)
    assert rounded == [-1] * 3 + [0] * 4 + [1] * 3


def test_corrupted_beta_detected():
    def bad(nu):
        b = beta(nu)
        if nu == 2:
            return b + ExactMatrix((10, 10), {(9, 9): 1})
        return b
    assert not kemmer_residual(2, 2, 2, bad).is_zero()
