"""Hermitian-structure quantities: fundamental form, Nijenhuis tensor, Lee form.

The fundamental 2-form is ``Omega(X, Y) = g(JX, Y)``.  The Nijenhuis tensor

    N(Y, Z) = -[Y, Z] + [JY, JZ] - J[Y, JZ] - J[JY, Z]

vanishes identically exactly when J is integrable.  The Lee form is

    theta = -2/(n-2) * (delta Omega) o J,

with the codifferential convention of :mod:`wtw.curvature`; its dual vector
is ``B = 2/(n-2) * J(delta J)``, and the two expressions are required to
agree.  A structure is locally conformally Kaehler when ``d Omega = theta ^
Omega`` and ``d theta = 0``.

`require_gate` enforces the standing hypotheses of the pseudo-harmonicity
conditions: integrability of J and the Lee identity ``d Omega = theta ^
Omega``.  Violations raise :class:`GateError` naming the failed assumption.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .connection import cov_deriv_endo, levi_civita, weyl
from .curvature import codifferential_endo
from .frame import (Bivector, FrameSpec, TwoForm, Vector, d_oneform,
                    d_twoform, wedge_one_two)
from .reports import CheckReport


class GateError(Exception):
    """A standing assumption of the condition machinery is violated."""

    def __init__(self, assumption: str, message: str):
        super().__init__(f"{assumption}: {message}")
        self.assumption = assumption


@dataclass(frozen=True)
class LeeData:
    theta: Vector   # Lee form coefficients in the coframe
    B: Vector       # dual Lee vector components (equal, orthonormal frame)


def fundamental_form(spec: FrameSpec) -> TwoForm:
    """Omega with Omega(E_i, E_j) = g(J E_i, E_j) = J[j][i]."""
    n = spec.n
    return TwoForm(spec, [[spec.const(spec.J[j][i]) for j in range(n)]
                          for i in range(n)])


def nijenhuis(spec: FrameSpec):
    """The Nijenhuis tensor as components N[k][i][j] of N(E_i, E_j), plus a verdict."""
    n = spec.n
    c = spec.c
    J = spec.J
    comps = []
    for k in range(n):
        plane = []
        for i in range(n):
            row = []
            for j in range(n):
                value = Fraction(0)
                value -= c[i][j][k]
                for p in range(n):
                    for q in range(n):
                        value += J[p][i] * J[q][j] * c[p][q][k]
                for q in range(n):
                    for m in range(n):
                        value -= J[q][j] * c[i][q][m] * J[k][m]
                for p in range(n):
                    for m in range(n):
                        value -= J[p][i] * c[p][j][m] * J[k][m]
                row.append(spec.const(value))
            plane.append(tuple(row))
        comps.append(tuple(plane))
    comps = tuple(comps)
    integrable = all(entry.is_zero for plane in comps for row in plane for entry in row)
    return comps, integrable


def lee_form(spec: FrameSpec) -> LeeData:
    """Lee form from delta Omega composed with J; cross-checked against J(delta J)."""
    n = spec.n
    lc = levi_civita(spec)
    omega = fundamental_form(spec)
    # (nabla_i Omega)(E_j, E_k) = -sum_m gamma[i][j][m] Om[m][k] - gamma[i][k][m] Om[j][m]
    delta_omega = []
    for k in range(n):
        value = spec.zero()
        for i in range(n):
            for m in range(n):
                value = value + lc.gamma[i][i][m] * omega.comps[m][k]
                value = value + lc.gamma[i][k][m] * omega.comps[i][m]
        delta_omega.append(value)
    factor = Fraction(-2, n - 2)
    theta = tuple(factor * sum((spec.J[p][k] * delta_omega[p] for p in range(n)),
                               spec.zero())
                  for k in range(n))
    delta_j = codifferential_endo(spec, spec.j_endo())
    B = tuple(Fraction(2, n - 2) * entry for entry in spec.j_apply(delta_j))
    if any(not (t - b).is_zero for t, b in zip(theta, B)):
        raise AssertionError("Lee form routes disagree; codifferential convention broken")
    return LeeData(theta=theta, B=B)


def lck_check(spec: FrameSpec) -> CheckReport:
    """Residuals of d Omega - theta ^ Omega and of d theta."""
    report = CheckReport(title="locally conformally Kaehler identities")
    lee = lee_form(spec)
    omega = fundamental_form(spec)
    residual = d_twoform(spec, omega) - wedge_one_two(spec, lee.theta, omega)
    report.add("d(Omega) = theta ^ Omega", residual.is_zero)
    dtheta = d_oneform(spec, lee.theta)
    report.add("d(theta) = 0", dtheta.is_zero)
    _, integrable = nijenhuis(spec)
    report.add("Nijenhuis tensor vanishes", integrable)
    return report


def require_gate(spec: FrameSpec) -> LeeData:
    """Enforce the standing assumptions; returns the Lee data on success."""
    _, integrable = nijenhuis(spec)
    if not integrable:
        raise GateError("integrability assumption",
                        "the Nijenhuis tensor of J does not vanish")
    lee = lee_form(spec)
    omega = fundamental_form(spec)
    residual = d_twoform(spec, omega) - wedge_one_two(spec, lee.theta, omega)
    if not residual.is_zero:
        raise GateError("Lee identity assumption",
                        "d(Omega) differs from theta ^ Omega")
    return lee


def nabla_j_checks(spec: FrameSpec) -> CheckReport:
    """Exact checks of the nabla-J identities for the Levi-Civita connection.

    Verified identities:
      * 2 g((nabla_X J) Y, Z) = dOmega(X,Y,Z) - dOmega(X,JY,JZ) + g(N(Y,Z), JX);
      * Gray's integrability criterion (nabla_X J)(Y) = (nabla_{JX} J)(JY);
      * the closed form 2 (nabla_X J) Y = g(JX,Y) B - g(B,Y) JX + g(X,Y) JB
        - g(JB,Y) X, valid under the Lee identity;
      * (J nabla_X J)^wedge = 1/2 (B ^ X - JB ^ JX);
      * D J = 0 for the Weyl connection built from phi = theta.
    """
    report = CheckReport(title="nabla-J identities")
    n = spec.n
    lee = require_gate(spec)
    lc = levi_civita(spec)
    J = spec.J
    j_endo = spec.j_endo()
    nJ = cov_deriv_endo(lc, j_endo)
    omega = fundamental_form(spec)
    dom = d_twoform(spec, omega)
    ncomp, _ = nijenhuis(spec)

    ok = True
    for x in range(n):
        for y in range(n):
            for z in range(n):
                value = dom.comps[x][y][z]
                value = value - sum((J[p][y] * J[q][z] * dom.comps[x][p][q]
                                     for p in range(n) for q in range(n)), spec.zero())
                value = value + sum((ncomp[k][y][z] * J[k][x] for k in range(n)),
                                    spec.zero())
                if not (2 * nJ[x].comps[z][y] - value).is_zero:
                    ok = False
    report.add("nabla-J from d(Omega) and the Nijenhuis tensor", ok)

    ok = True
    for x in range(n):
        for y in range(n):
            for z in range(n):
                twisted = sum((J[p][x] * J[q][y] * nJ[p].comps[z][q]
                               for p in range(n) for q in range(n)), spec.zero())
                if not (nJ[x].comps[z][y] - twisted).is_zero:
                    ok = False
    report.add("Gray integrability criterion", ok)

    B = lee.B
    JB = spec.j_apply(B)
    ok = True
    for x in range(n):
        for y in range(n):
            for l in range(n):
                rhs = omega.comps[x][y] * B[l] - B[y] * J[l][x]
                if x == y:
                    rhs = rhs + JB[l]
                if l == x:
                    rhs = rhs - JB[y]
                if not (2 * nJ[x].comps[l][y] - rhs).is_zero:
                    ok = False
    report.add("closed form of nabla-J through the Lee vector", ok)

    ok = True
    half = Fraction(1, 2)
    for x in range(n):
        jn = j_endo @ nJ[x]
        ex = tuple(spec.const(1 if l == x else 0) for l in range(n))
        jex = tuple(spec.const(J[l][x]) for l in range(n))
        lhs = Bivector(spec, [[jn.comps[q][p] for q in range(n)] for p in range(n)])
        rhs_b = Bivector.wedge_vectors(spec, B, ex)
        rhs_jb = Bivector.wedge_vectors(spec, JB, jex)
        for p in range(n):
            for q in range(n):
                value = lhs.comps[p][q] - half * (rhs_b.comps[p][q] - rhs_jb.comps[p][q])
                if not value.is_zero:
                    ok = False
    report.add("wedge image of J nabla-J through the Lee vector", ok)

    lee_spec = spec.with_phi(lee.theta)
    dj = cov_deriv_endo(weyl(lee_spec), lee_spec.j_endo())
    report.add("J parallel for the Weyl connection of the Lee form",
               all(entry.is_zero for direction in dj
                   for row in direction.comps for entry in row))
    return report
