"""Pointwise twistor-fiber algebra and the two second-fundamental-form traces.

Everything here is evaluated at the single fiber point I = J of the section
defined by the complex structure; no chart of the twistor manifold is ever
built.  The fiber metric on endomorphisms is

    G(a, b) = 1/2 Trace{X -> g(aX, bX)} = 1/2 Trace(a^T b),

which equals -1/2 Trace(a o b) on skew endomorphisms.  The wedge isomorphism
sends a skew endomorphism ``a`` to the bivector with components
``g(a E_i, E_j)``, normalized so that ``2 g(a^, X ^ Y) = g(aX, Y)`` under the
halved metric on bivectors.

The curvature of the induced connection on endomorphism sections acts as the
commutator ``R(X, Y) a = R(X, Y) o a - a o R(X, Y)``; this is cross-checked
against the double-covariant-derivative definition and any mismatch raises.

Vertical bases: for m = n/2 the ``m^2 - m`` endomorphisms pairing the J-frame
planes are stored *unnormalized* (each has G-norm-squared 2, so the family's
Gram matrix is 2*Identity); expansions divide by the norm squared instead of
normalizing, keeping all arithmetic rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .connection import (Connection, cov_deriv_endo, levi_civita,
                         second_cov_deriv_endo, weyl)
from .curvature import Curvature, codifferential_endo, curvature, ricci, star_ricci
from .frame import (Bivector, Endo, FrameError, FrameSpec, d_oneform,
                    eval_on_bivector, wedge_oneforms)
from .hermitian import require_gate
from .polyalg import Ring, Scalar
from .reports import CheckReport


def g_fiber(a: Endo, b: Endo) -> Scalar:
    """G(a, b) = 1/2 sum_i g(a E_i, b E_i)."""
    spec = a.spec
    n = spec.n
    half = Fraction(1, 2)
    return half * sum((a.comps[l][i] * b.comps[l][i]
                       for l in range(n) for i in range(n)), spec.zero())


def wedge_iso(a: Endo) -> Bivector:
    """The bivector of a skew endomorphism: components g(a E_i, E_j)."""
    if not a.is_skew:
        raise FrameError("wedge isomorphism requires a skew endomorphism")
    n = a.spec.n
    return Bivector(a.spec, [[a.comps[j][i] for j in range(n)] for i in range(n)])


def curvature_on_bivector(R: Curvature, b: Bivector) -> Endo:
    """R(b) = sum_{p<q} b[p][q] R(E_p, E_q) as an endomorphism."""
    spec = R.spec
    n = spec.n
    comps = [[sum((b.comps[p][q] * R.r[p][q][k][l]
                   for p in range(n) for q in range(p + 1, n)), spec.zero())
              for k in range(n)] for l in range(n)]
    return Endo(spec, comps)


def endo_curvature_action(R: Curvature, S: Endo) -> "tuple[tuple[Endo, ...], ...]":
    """R(E_i, E_j) acting on an endomorphism section: the commutator action."""
    n = R.spec.n
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            rm = R.endo(i, j)
            row.append(rm.commutator(S))
        out.append(tuple(row))
    return tuple(out)


def endo_curvature_consistency(spec: FrameSpec, conn: Connection, S: Endo) -> None:
    """Assert the commutator action equals the gamma-based curvature on Hom.

    The gamma route: R(E_i,E_j)S = sum_m c[i][j][m] D_m S - D_i D_j S + D_j D_i S,
    with every derivative the induced one on endomorphisms.  Raises on any
    mismatch (sign conventions are the dominant failure mode).
    """
    n = spec.n
    R = curvature(conn)
    comm = endo_curvature_action(R, S)
    first = cov_deriv_endo(conn, S)
    second = [cov_deriv_endo(conn, first[j]) for j in range(n)]
    for i in range(n):
        for j in range(n):
            direct = Endo.zero(spec)
            for m in range(n):
                direct = direct + first[m].scale(spec.const(spec.c[i][j][m]))
            direct = direct - second[j][i] + second[i][j]
            if not (direct - comm[i][j]).is_zero:
                raise AssertionError(
                    "induced curvature mismatch between commutator action and "
                    f"double covariant derivative at ({i+1},{j+1})")


@dataclass(frozen=True)
class VerticalBasis:
    """Unnormalized vertical endomorphisms at the fiber point J.

    Every element is skew, anti-commutes with J, and the pairwise fiber
    metric is ``2 * Identity``; expansions divide by ``norm_sq`` (= 2).
    """

    elements: tuple[Endo, ...]
    labels: tuple[str, ...]
    norm_sq: Fraction


def _adapted_frame(spec: FrameSpec) -> list[tuple[Fraction, ...]]:
    """An orthonormal frame f with f_{2k+1} = J f_{2k}, as rows of rationals.

    Works whenever J maps frame vectors to signed frame vectors (true for
    the builtins); otherwise a rational adapted frame need not exist and a
    FrameError is raised.
    """
    n = spec.n
    used: set[int] = set()
    frame: list[tuple[Fraction, ...]] = []
    for i in range(n):
        if i in used:
            continue
        column = [spec.J[l][i] for l in range(n)]
        support = [l for l, v in enumerate(column) if v != 0]
        if len(support) != 1 or abs(column[support[0]]) != 1 or support[0] in used:
            raise FrameError(
                "vertical basis construction needs J to map frame vectors to "
                "signed frame vectors")
        used.add(i)
        used.add(support[0])
        e_i = tuple(Fraction(1 if l == i else 0) for l in range(n))
        frame.append(e_i)
        frame.append(tuple(column))
    return frame


def vertical_basis(spec: FrameSpec) -> VerticalBasis:
    """The plane-pairing family spanning the vertical space at J."""
    n = spec.n
    m = n // 2
    frame = _adapted_frame(spec)

    def pair_endo(a: int, b: int) -> Endo:
        # S_ab in the adapted frame, pushed to frame coordinates: f_b f_a^T - f_a f_b^T
        fa, fb = frame[a], frame[b]
        return Endo(spec, [[spec.const(fb[k] * fa[l] - fa[k] * fb[l])
                            for l in range(n)] for k in range(n)])

    elements: list[Endo] = []
    labels: list[str] = []
    for r in range(m - 1):
        for s in range(r + 1, m):
            elements.append(pair_endo(2 * r, 2 * s) - pair_endo(2 * r + 1, 2 * s + 1))
            labels.append(f"A[{r+1},{s+1}]")
            elements.append(pair_endo(2 * r, 2 * s + 1) + pair_endo(2 * r + 1, 2 * s))
            labels.append(f"B[{r+1},{s+1}]")
    basis = VerticalBasis(tuple(elements), tuple(labels), Fraction(2))
    _validate_vertical(spec, basis)
    return basis


def _validate_vertical(spec: FrameSpec, basis: VerticalBasis) -> None:
    j_endo = spec.j_endo()
    count = len(basis.elements)
    m = spec.n // 2
    if count != m * m - m:
        raise AssertionError(f"vertical basis has {count} elements, expected {m*m-m}")
    for v in basis.elements:
        if not v.is_skew or not v.anticommutes_with(j_endo):
            raise AssertionError("vertical basis element not skew/anti-commuting")
    for a in range(count):
        for b in range(count):
            expected = basis.norm_sq if a == b else 0
            if g_fiber(basis.elements[a], basis.elements[b]) != spec.const(expected):
                raise AssertionError("vertical basis is not G-orthogonal with norm^2 = 2")


def fiber_pairing_check(spec: FrameSpec, a: Endo, b: Endo) -> CheckReport:
    """Residual of the fiber-curvature pairing identity

    G(R(X,Y)a, b) = g(R([a,b]^) X, Y)
                    - 1/2 [ dphi([a,b]^) g(X,Y) + dphi([a,b]X, Y) + dphi(X, [a,b]Y) ]

    for all frame pairs (X, Y), where R is the Weyl curvature acting on
    endomorphisms by commutator.
    """
    if not a.is_skew or not b.is_skew:
        raise FrameError("pairing identity requires skew endomorphisms")
    report = CheckReport(title="fiber curvature pairing")
    n = spec.n
    conn = weyl(spec)
    R = curvature(conn)
    endo_curvature_consistency(spec, conn, a)
    action = endo_curvature_action(R, a)
    comm = a.commutator(b)
    comm_wedge = wedge_iso(comm)
    r_of_wedge = curvature_on_bivector(R, comm_wedge)
    dphi = d_oneform(spec, spec.phi)
    dphi_wedge = eval_on_bivector(dphi, comm_wedge)
    half = Fraction(1, 2)
    ok = True
    for i in range(n):
        for j in range(n):
            lhs = g_fiber(action[i][j], b)
            rhs = r_of_wedge.comps[j][i]
            corr = dphi_wedge * (1 if i == j else 0)
            corr = corr + sum((comm.comps[l][i] * dphi.comps[l][j] for l in range(n)),
                              spec.zero())
            corr = corr + sum((comm.comps[l][j] * dphi.comps[i][l] for l in range(n)),
                              spec.zero())
            if not (lhs - rhs + half * corr).is_zero:
                ok = False
    report.add("curvature pairing identity on endomorphisms", ok)
    return report


def curvature_pairing_with_dj_check(spec: FrameSpec) -> CheckReport:
    """Residual of the expansion of G(R(X,Z)J, D_Y J) through Levi-Civita data.

    The Weyl-connection derivative of J pairs with the fiber curvature as

      G(R(X,Z)J, D_Y J)
        = 2 g(R((J nabla_Y J)^) X, Z) - g(R(phi# ^ Y - J phi# ^ JY) X, Z)
          - dphi((J nabla_Y J)^) g(X,Z) - dphi((J nabla_Y J) X, Z)
          - dphi(X, (J nabla_Y J) Z)
          + 1/2 dphi(phi# ^ Y - J phi# ^ JY) g(X,Z)
          + 1/2 [phi(JX) dphi(JY,Z) + phi(X) dphi(Y,Z)
                 - g(Y,JX) dphi(J phi#, Z) - g(Y,X) dphi(phi#, Z)]
          + 1/2 [phi(JZ) dphi(X,JY) + phi(Z) dphi(X,Y)
                 - g(Y,JZ) dphi(X, J phi#) - g(Y,Z) dphi(X, phi#)]

    checked for every frame triple (X, Y, Z); nabla is Levi-Civita, R and the
    fiber pairing belong to the Weyl connection.
    """
    report = CheckReport(title="fiber pairing of the curvature with DJ")
    n = spec.n
    J = spec.J
    phi = spec.phi
    jphi = spec.j_apply(phi)
    conn = weyl(spec)
    R = curvature(conn)
    j_endo = spec.j_endo()
    dj = cov_deriv_endo(conn, j_endo)
    nj = cov_deriv_endo(levi_civita(spec), j_endo)
    dphi = d_oneform(spec, spec.phi)
    act_j = endo_curvature_action(R, j_endo)
    half = Fraction(1, 2)

    def dphi_vec(vec, k):
        return sum((vec[p] * dphi.comps[p][k] for p in range(n)), spec.zero())

    def dphi_vec_right(k, vec):
        return sum((dphi.comps[k][p] * vec[p] for p in range(n)), spec.zero())

    ok = True
    for y in range(n):
        jn = j_endo @ nj[y]
        jn_wedge = wedge_iso(jn)
        ey = tuple(spec.const(1 if l == y else 0) for l in range(n))
        jy = tuple(spec.const(J[l][y]) for l in range(n))
        bphi = Bivector(spec, [[
            phi[p] * ey[q] - phi[q] * ey[p] - (jphi[p] * jy[q] - jphi[q] * jy[p])
            for q in range(n)] for p in range(n)])
        r_jn = curvature_on_bivector(R, jn_wedge)
        r_bphi = curvature_on_bivector(R, bphi)
        dphi_jn = eval_on_bivector(dphi, jn_wedge)
        dphi_bphi = eval_on_bivector(dphi, bphi)
        for x in range(n):
            phi_jx = sum((phi[p] * J[p][x] for p in range(n)), spec.zero())
            for z in range(n):
                phi_jz = sum((phi[p] * J[p][z] for p in range(n)), spec.zero())
                lhs = g_fiber(act_j[x][z], dj[y])
                rhs = 2 * r_jn.comps[z][x] - r_bphi.comps[z][x]
                if x == z:
                    rhs = rhs - dphi_jn + half * dphi_bphi
                rhs = rhs - sum((jn.comps[l][x] * dphi.comps[l][z]
                                 for l in range(n)), spec.zero())
                rhs = rhs - sum((jn.comps[l][z] * dphi.comps[x][l]
                                 for l in range(n)), spec.zero())
                part = phi_jx * sum((J[p][y] * dphi.comps[p][z] for p in range(n)),
                                    spec.zero())
                part = part + phi[x] * dphi.comps[y][z]
                part = part - J[y][x] * dphi_vec(jphi, z)
                if y == x:
                    part = part - dphi_vec(phi, z)
                rhs = rhs + half * part
                part = phi_jz * sum((dphi.comps[x][p] * J[p][y] for p in range(n)),
                                    spec.zero())
                part = part + phi[z] * dphi.comps[x][y]
                part = part - J[y][z] * dphi_vec_right(x, jphi)
                if y == z:
                    part = part - dphi_vec_right(x, phi)
                rhs = rhs + half * part
                if not (lhs - rhs).is_zero:
                    ok = False
    report.add("pairing of the fiber curvature with DJ through Levi-Civita data", ok)
    return report


def vertical_antisymmetry_check(spec: FrameSpec, V: Endo) -> CheckReport:
    """Residual of G(R(X,Y)J, V) + G(R(X,Y)V, J) = 0 for vertical V."""
    j_endo = spec.j_endo()
    if not V.is_skew or not V.anticommutes_with(j_endo):
        raise FrameError("V must be vertical at J (skew and anti-commuting)")
    report = CheckReport(title="vertical antisymmetry of the fiber curvature")
    n = spec.n
    R = curvature(weyl(spec))
    act_j = endo_curvature_action(R, j_endo)
    act_v = endo_curvature_action(R, V)
    ok = all((g_fiber(act_j[i][j], V) + g_fiber(act_v[i][j], j_endo)).is_zero
             for i in range(n) for j in range(n))
    report.add("G(R(X,Y)J, V) = -G(R(X,Y)V, J)", ok)
    return report


@dataclass(frozen=True)
class TwistorEval:
    """Pointwise data of the twistor metric and modified connection at J.

    All scalars live in the ring extended by the fiber-scale symbol ``t``.

    gram: Gram matrix of g~_t on horizontal lifts E_i^h followed by the
      G-normalized vertical directions (diag(1,...,1, t,...,t) by construction;
      computed, not assumed).
    hh_horizontal: gamma coefficients of the horizontal part of D'_{X^h} Y^h
      (equal to the Weyl gammas).
    hh_vertical: coefficients of the vertical part of D'_{E_i^h} E_j^h on the
      unnormalized vertical basis (divide-by-norm-squared expansion of
      1/2 R(E_i, E_j) J).
    vh_pairing: values g~_t(D~_V X^h, Y^h) = -t/2 G(R(X, Y) J, V) indexed
      [alpha][i][j] over the unnormalized basis.
    """

    ring_t: Ring
    gram: tuple
    hh_horizontal: tuple
    hh_vertical: tuple
    vh_pairing: tuple
    vertical_labels: tuple[str, ...]


def dprime_eval(spec: FrameSpec) -> TwistorEval:
    n = spec.n
    ring_t = spec.ring.extend("t")
    t = ring_t.sym("t")

    def lift(value: Scalar) -> Scalar:
        return value.lift(ring_t)

    basis = vertical_basis(spec)
    nv = len(basis.elements)
    conn = weyl(spec)
    R = curvature(conn)
    j_endo = spec.j_endo()
    endo_curvature_consistency(spec, conn, j_endo)
    act_j = endo_curvature_action(R, j_endo)

    size = n + nv
    gram = [[ring_t.zero()] * size for _ in range(size)]
    for i in range(n):
        gram[i][i] = ring_t.one()
    for a in range(nv):
        for b in range(nv):
            # normalized pair: G(V_a, V_b) / norm_sq
            value = g_fiber(basis.elements[a], basis.elements[b])
            gram[n + a][n + b] = t * lift(value * Fraction(1, basis.norm_sq))

    hh_horizontal = tuple(tuple(tuple(conn.gamma[i][j][k] for k in range(n))
                                for j in range(n)) for i in range(n))
    half = Fraction(1, 2)
    inv_norm = Fraction(1, basis.norm_sq)
    hh_vertical = tuple(tuple(tuple(
        half * inv_norm * g_fiber(act_j[i][j], basis.elements[alpha])
        for alpha in range(nv)) for j in range(n)) for i in range(n))

    vh = tuple(tuple(tuple(
        lift(g_fiber(act_j[i][j], basis.elements[alpha])) * t * Fraction(-1, 2)
        for j in range(n)) for i in range(n)) for alpha in range(nv))

    return TwistorEval(ring_t=ring_t,
                       gram=tuple(tuple(row) for row in gram),
                       hh_horizontal=hh_horizontal,
                       hh_vertical=hh_vertical,
                       vh_pairing=vh,
                       vertical_labels=basis.labels)


def h_trace(spec: FrameSpec):
    """Horizontal trace of the second fundamental form, as an n-vector.

    Component k is the curvature-trace expansion (independent of the fiber
    scale t by construction):

        2 Tr{X -> g(R((J nabla_X J)^) X, Z)} + rho(phi#, Z) - rho*(J phi#, JZ)
        - dphi((J nabla_Z J)^) + dphi(J delta J, Z)
        - Tr{X -> dphi(X, (J nabla_X J) Z)} + phi(JZ) dphi(J^)
        - (n/2 - 1) dphi(phi#, Z) + dphi(J phi#, JZ)

    with nabla the Levi-Civita connection and R, rho, rho* of the Weyl
    connection.  Requires the gate (integrability and the Lee identity).
    """
    require_gate(spec)
    n = spec.n
    J = spec.J
    lc = levi_civita(spec)
    j_endo = spec.j_endo()
    nJ = cov_deriv_endo(lc, j_endo)
    R = curvature(weyl(spec))
    rho = ricci(R)
    rho_star = star_ricci(R)
    dphi = d_oneform(spec, spec.phi)
    phi = spec.phi
    jphi = spec.j_apply(phi)
    delta_j = codifferential_endo(spec, j_endo)
    j_delta_j = spec.j_apply(delta_j)
    dphi_jwedge = eval_on_bivector(dphi, wedge_iso(j_endo))
    jn = [j_endo @ nJ[x] for x in range(n)]
    jn_wedge = [wedge_iso(m) for m in jn]

    out = []
    for k in range(n):
        jz = [J[l][k] for l in range(n)]
        value = spec.zero()
        for x in range(n):
            rb = curvature_on_bivector(R, jn_wedge[x])
            value = value + 2 * rb.comps[k][x]
        value = value + sum((phi[p] * rho[p][k] for p in range(n)), spec.zero())
        value = value - sum((jphi[p] * jz[q] * rho_star[p][q]
                             for p in range(n) for q in range(n)), spec.zero())
        value = value - eval_on_bivector(dphi, jn_wedge[k])
        value = value + sum((j_delta_j[p] * dphi.comps[p][k] for p in range(n)),
                            spec.zero())
        for x in range(n):
            value = value - sum((dphi.comps[x][l] * jn[x].comps[l][k]
                                 for l in range(n)), spec.zero())
        phi_jz = sum((phi[p] * J[p][k] for p in range(n)), spec.zero())
        value = value + phi_jz * dphi_jwedge
        value = value - (Fraction(n, 2) - 1) * sum((phi[p] * dphi.comps[p][k]
                                                    for p in range(n)), spec.zero())
        value = value + sum((jphi[p] * jz[q] * dphi.comps[p][q]
                             for p in range(n) for q in range(n)), spec.zero())
        out.append(value)
    return tuple(out)


@dataclass(frozen=True)
class VTraceData:
    """Vertical-trace residual (Z, U) -> scalar, computed two independent ways.

    direct: from the traced second covariant derivative of J for the Weyl
      connection, anti-invariant part g((Tr D2 J)(Z), U) - g((Tr D2 J)(JZ), JU).
    closed_form: from the 2-form d(phi - theta) + n(n-4)/(2(n-2)) phi ^ theta
      paired with JZ ^ U + Z ^ JU.
    """

    direct: tuple
    closed_form: tuple

    @property
    def paths_agree(self) -> bool:
        return all((a - b).is_zero for ra, rb in zip(self.direct, self.closed_form)
                   for a, b in zip(ra, rb))


def v_trace(spec: FrameSpec) -> VTraceData:
    lee = require_gate(spec)
    n = spec.n
    J = spec.J
    conn = weyl(spec)
    j_endo = spec.j_endo()
    second = second_cov_deriv_endo(conn, j_endo)
    traced = Endo.zero(spec)
    for i in range(n):
        traced = traced + second[i][i]

    direct = tuple(tuple(
        traced.comps[l][k]
        - sum((J[p][k] * J[q][l] * traced.comps[q][p]
               for p in range(n) for q in range(n)), spec.zero())
        for l in range(n)) for k in range(n))

    coeff = Fraction(n * (n - 4), 2 * (n - 2))
    pmt = tuple(spec.phi[i] - lee.theta[i] for i in range(n))
    F = d_oneform(spec, pmt)
    wedge = wedge_oneforms(spec, spec.phi, lee.theta)
    closed = tuple(tuple(
        sum((J[p][k] * (F.comps[p][l] + coeff * wedge.comps[p][l])
             for p in range(n)), spec.zero())
        + sum((J[q][l] * (F.comps[k][q] + coeff * wedge.comps[k][q])
               for q in range(n)), spec.zero())
        for l in range(n)) for k in range(n))
    return VTraceData(direct=direct, closed_form=closed)
