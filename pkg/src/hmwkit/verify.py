"""Exact algebra suites run by ``hmwkit verify``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import kemmer
from .exact import commutator
from .nc_algebra import NCParams, commutator as nc_commutator, bopp_shift, deformed_commutators


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        tail = f"  ({self.detail})" if self.detail else ""
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}{tail}"


# rational grid for the deformed-commutator suite; theta != 0, alpha in (0, 2)
THETA_GRID = (Fraction(1, 3), Fraction(-2, 5), Fraction(7, 2), Fraction(1, 100), Fraction(5))
ALPHA_GRID = (Fraction(1, 2), Fraction(3, 4), Fraction(9, 10), Fraction(1), Fraction(6, 5))


def kemmer_checks(beta_fn=kemmer.beta) -> list[Check]:
    out = []
    for nu, lam, rho in product(range(4), repeat=3):
        r = kemmer.kemmer_residual(nu, lam, rho, beta_fn)
        out.append(Check(f"kemmer_residual({nu},{lam},{rho}) == 0", r.is_zero(),
                         "" if r.is_zero() else f"{r.nnz()} nonzero entries"))
    return out


def spin_tensor_checks(beta_fn=kemmer.beta) -> list[Check]:
    out = []
    for lam, rho in product(range(4), repeat=2):
        s = kemmer.spin_tensor(lam, rho, beta_fn)
        ok = s == -kemmer.spin_tensor(rho, lam, beta_fn)
        out.append(Check(f"spin_tensor({lam},{rho}) == -spin_tensor({rho},{lam})", ok))
    return out


def xi_checks(beta_fn=kemmer.beta) -> list[Check]:
    x = kemmer.xi(3, beta_fn)
    out = [Check("xi3^3 == xi3", x @ x @ x == x)]
    tr = x.trace()
    out.append(Check("trace(xi3) is an exact integer",
                     tr.im == 0 and tr.re.denominator == 1, f"trace = {tr}"))
    for nu in range(4):
        c = commutator(x, beta_fn(nu))
        if nu < 3:
            out.append(Check(f"[xi3, beta^{nu}] == 0", c.is_zero()))
        else:
            out.append(Check(f"[xi3, beta^{nu}] != 0", not c.is_zero(), f"{c.nnz()} nonzero entries"))
    try:
        spec = kemmer.xi3_spectrum(beta_fn)
        ok = sum(spec.values()) == kemmer.DIM and set(spec) <= {-1, 0, 1}
        detail = ", ".join(f"{ev:+d}: {spec[ev]}" for ev in (-1, 0, 1))
    except ArithmeticError as exc:
        ok, detail = False, str(exc)
    out.append(Check("xi3 spectrum in {-1,0,+1}, multiplicities sum to 10", ok, detail))
    return out


def commutator_table(beta_fn=kemmer.beta) -> list[Check]:
    out = []
    for a, b in product(range(4), repeat=2):
        c = commutator(beta_fn(a), beta_fn(b))
        ok = c == -commutator(beta_fn(b), beta_fn(a))
        out.append(Check(f"[beta^{a}, beta^{b}] == -[beta^{b}, beta^{a}]", ok))
    return out


def deformed_algebra_checks() -> list[Check]:
    out = []
    for theta, alpha in product(THETA_GRID, ALPHA_GRID):
        params = NCParams(theta, alpha)
        d = deformed_commutators(params)
        (x1, x2), _ = bopp_shift(params)
        ok = (d.delta_eff == 1 and d.theta_eff == theta
              and d.theta_bar_eff == params.theta_bar
              and nc_commutator(x2, x1) == -d.theta_eff
              and (alpha != 1 or d.theta_bar_eff == 0))
        out.append(Check(f"deformed algebra theta={theta} alpha={alpha}", ok,
                         f"delta_eff = {d.delta_eff}"))
    return out


def run_all(beta_fn=kemmer.beta) -> list[Check]:
    return (kemmer_checks(beta_fn) + spin_tensor_checks(beta_fn) + xi_checks(beta_fn)
            + commutator_table(beta_fn) + deformed_algebra_checks())


def report(checks: list[Check]) -> str:
    failed = sum(not c.passed for c in checks)
    lines = [c.line() for c in checks]
    lines.append(f"{len(checks) - failed}/{len(checks)} checks passed")
    return "\n".join(lines) + "\n"
