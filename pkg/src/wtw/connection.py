"""Levi-Civita and Weyl connections in a left-invariant orthonormal frame.

A connection is stored through its coefficients ``gamma[i][j][k]`` with
``nabla_{E_i} E_j = sum_k gamma[i][j][k] E_k``.  Because all tensor
components are constant in the frame, every covariant derivative reduces to
gamma-contractions; this is relied on throughout the package.

For the Levi-Civita connection of the identity Gram matrix the Koszul
formula collapses to ``2 gamma[i][j][k] = c[i][j][k] - c[i][k][j] - c[j][k][i]``.
The Weyl connection of the 1-form phi is

    D_X Y = nabla_X Y - 1/2 [phi(X) Y + phi(Y) X - g(X, Y) phi#].

Contracts (tested as exact identities):
  * torsion-free: gamma[i][j][k] - gamma[j][i][k] = c[i][j][k];
  * metric: gamma[i][j][k] + gamma[i][k][j] = 0 (Levi-Civita) and
    = -phi_i * delta_jk (Weyl), the frame form of D g = phi (x) g.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .frame import Endo, FrameSpec, Vector
from .polyalg import Scalar


@dataclass(frozen=True)
class Connection:
    spec: FrameSpec
    gamma: tuple[tuple[tuple[Scalar, ...], ...], ...]
    kind: str  # "levi-civita" or "weyl"

    def nonzero(self):
        """Iterate (i, j, k, gamma_ijk) over nonzero coefficients."""
        n = self.spec.n
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if not self.gamma[i][j][k].is_zero:
                        yield i, j, k, self.gamma[i][j][k]


@lru_cache(maxsize=64)
def levi_civita(spec: FrameSpec) -> Connection:
    n = spec.n
    half = Fraction(1, 2)
    gamma = tuple(tuple(tuple(
        spec.const(half * (spec.c[i][j][k] - spec.c[i][k][j] - spec.c[j][k][i]))
        for k in range(n)) for j in range(n)) for i in range(n))
    return Connection(spec, gamma, "levi-civita")


@lru_cache(maxsize=64)
def weyl(spec: FrameSpec) -> Connection:
    """The unique torsion-free connection with D g = phi (x) g for this phi."""
    n = spec.n
    lc = levi_civita(spec)
    half = Fraction(1, 2)

    def entry(i, j, k):
        value = lc.gamma[i][j][k]
        value = value - half * (spec.phi[i] if j == k else spec.zero())
        value = value - half * (spec.phi[j] if i == k else spec.zero())
        if i == j:
            value = value + half * spec.phi[k]
        return value

    gamma = tuple(tuple(tuple(entry(i, j, k) for k in range(n))
                        for j in range(n)) for i in range(n))
    return Connection(spec, gamma, "weyl")


def cov_deriv_oneform(conn: Connection, omega: Sequence[Scalar]):
    """(nabla_{E_i} omega)(E_j) = -sum_k gamma[i][j][k] omega_k, as an n x n array."""
    spec = conn.spec
    n = spec.n
    return tuple(tuple(-sum((conn.gamma[i][j][k] * omega[k] for k in range(n)),
                            spec.zero())
                       for j in range(n)) for i in range(n))


@lru_cache(maxsize=512)
def cov_deriv_endo(conn: Connection, S: Endo) -> tuple[Endo, ...]:
    """(D_{E_i} S)(E_j) = D_{E_i}(S E_j) - S(D_{E_i} E_j), one endo per direction.

    This is the connection induced on Hom(TM, TM) by the same gammas; for a
    Weyl connection it preserves skewness of constant skew sections, which is
    asserted by the test suite (the "D on Hom" contract).
    """
    spec = conn.spec
    n = spec.n
    out = []
    for i in range(n):
        comps = [[sum((conn.gamma[i][k][l] * S.comps[k][j]
                       - S.comps[l][k] * conn.gamma[i][j][k] for k in range(n)),
                      spec.zero())
                  for j in range(n)] for l in range(n)]
        out.append(Endo(spec, comps))
    return tuple(out)


def second_cov_deriv_endo(conn: Connection, S: Endo):
    """D2_{E_i E_j} S = D_{E_i}(D_{E_j} S) - D_{D_{E_i} E_j} S, an n x n array of endos."""
    spec = conn.spec
    n = spec.n
    first = cov_deriv_endo(conn, S)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            value = cov_deriv_endo(conn, first[j])[i]
            for k in range(n):
                value = value - first[k].scale(conn.gamma[i][j][k])
            row.append(value)
        out.append(tuple(row))
    return tuple(out)


def torsion_residual(conn: Connection):
    """gamma[i][j][k] - gamma[j][i][k] - c[i][j][k]; identically zero."""
    spec = conn.spec
    n = spec.n
    return tuple(tuple(tuple(
        conn.gamma[i][j][k] - conn.gamma[j][i][k] - spec.c[i][j][k]
        for k in range(n)) for j in range(n)) for i in range(n))


def metric_residual(conn: Connection):
    """gamma[i][j][k] + gamma[i][k][j] (+ phi_i delta_jk for Weyl); identically zero."""
    spec = conn.spec
    n = spec.n

    def entry(i, j, k):
        value = conn.gamma[i][j][k] + conn.gamma[i][k][j]
        if conn.kind == "weyl" and j == k:
            value = value + spec.phi[i]
        return value

    return tuple(tuple(tuple(entry(i, j, k) for k in range(n))
                       for j in range(n)) for i in range(n))


def reconstruct_weyl_form(conn: Connection) -> Vector:
    """Recover phi from a Weyl connection: phi_i = -(2/n) sum_j gamma[i][j][j].

    Round-trips the input form exactly; this is the uniqueness statement for
    the Weyl connection with a prescribed metric derivative.
    """
    spec = conn.spec
    n = spec.n
    factor = Fraction(-2, n)
    return tuple(sum((conn.gamma[i][j][j] for j in range(n)), spec.zero()) * factor
                 for i in range(n))
