from __future__ import annotations

import pytest

from wtw.connection import levi_civita, weyl
from wtw.curvature import (curvature, identity_suite, phi_tensor, ricci,
                           ricci_formula_check, star_ricci,
                           weyl_curvature_via_formula)


def _nonzero_r(R):
    out = {}
    n = R.spec.n
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                for l in range(n):
                    if not R.r[i][j][k][l].is_zero:
                        out[(i + 1, j + 1, k + 1, l + 1)] = str(R.r[i][j][k][l])
    return out


def _table(matrix):
    return [[str(entry) for entry in row] for row in matrix]


class TestCurvatureTensor:
    def test_kodaira_levi_civita_table(self, kodairas):
        got = _nonzero_r(curvature(levi_civita(kodairas[(1, 1)])))
        assert got == {
            (1, 2, 1, 2): "-3", (1, 2, 2, 1): "3",
            (1, 4, 1, 4): "1", (1, 4, 4, 1): "-1",
            (2, 4, 2, 4): "1", (2, 4, 4, 2): "-1",
        }

    def test_abelian_flat(self, abelian):
        assert not _nonzero_r(curvature(levi_civita(abelian)))
        assert not _nonzero_r(curvature(weyl(abelian)))

    def test_two_weyl_curvature_routes_agree(self, inoue, kodairas, hyperbolic_like):
        for spec in (inoue, kodairas[(1, 1)], kodairas[(-1, -1)], hyperbolic_like):
            direct = curvature(weyl(spec))
            formula = weyl_curvature_via_formula(spec)
            n = spec.n
            assert all((direct.r[i][j][k][l] - formula.r[i][j][k][l]).is_zero
                       for i in range(n) for j in range(n)
                       for k in range(n) for l in range(n))

    def test_zero_form_reduces_to_levi_civita_curvature(self, kodairas):
        spec = kodairas[(1, 1)].with_phi((0, 0, 0, 0))
        lc = curvature(levi_civita(spec))
        via = weyl_curvature_via_formula(spec)
        assert _nonzero_r(lc) == _nonzero_r(via)

    def test_antisymmetry_in_first_pair(self, inoue, kodairas):
        for spec in (inoue, kodairas[(1, -1)]):
            for conn in (levi_civita(spec), weyl(spec)):
                R = curvature(conn)
                assert all((R.r[i][j][k][l] + R.r[j][i][k][l]).is_zero
                           for i in range(4) for j in range(4)
                           for k in range(4) for l in range(4))


class TestPhiTensor:
    def test_zero_form(self, abelian):
        assert all(entry.is_zero for row in phi_tensor(abelian) for entry in row)

    def test_inoue_single_component(self, inoue):
        spec = inoue.with_phi((0, "a2", 0, 0))
        table = phi_tensor(spec)
        assert str(table[0][0]) == "-1/4*a2^2 - a2"

    def test_kodaira_diagonal(self, kodairas):
        spec = kodairas[(1, 1)].with_phi((0, 0, "a3", 0))
        table = phi_tensor(spec)
        assert str(table[2][2]) == "1/4*a3^2"
        assert str(table[0][0]) == "-1/4*a3^2"


class TestRicciTables:
    def test_inoue_reduced_ricci(self, inoue_reduced):
        rho = _table(ricci(curvature(weyl(inoue_reduced))))
        assert rho[0][0] == "-1/2*a2^2 - a2"
        assert rho[0][1] == "1/2*a1*a2 + 3/2*a1"
        # forced by the antisymmetry identity rho[i][j] - rho[j][i] = 2 dphi[i][j]
        assert rho[1][0] == "1/2*a1*a2 - 1/2*a1"
        assert rho[1][1] == "-1/2*a1^2 - 3/2"
        assert rho[2][2] == rho[3][3] == "-1/2*a1^2 - 1/2*a2^2 + 1/2*a2"
        zero_slots = {(i, j) for i in range(4) for j in range(4)
                      if rho[i][j] == "0"}
        assert zero_slots == {(0, 2), (0, 3), (1, 2), (1, 3),
                              (2, 0), (2, 1), (3, 0), (3, 1),
                              (2, 3), (3, 2)}

    def test_inoue_reduced_star_ricci(self, inoue_reduced):
        rho = _table(star_ricci(curvature(weyl(inoue_reduced))))
        assert rho[0][0] == rho[1][1] == "-1/2*a2 - 1"
        assert rho[0][1] == "1/2*a1"
        assert rho[1][0] == "-1/2*a1"
        assert rho[2][3] == "-1/2*a1"
        assert rho[3][2] == "1/2*a1"
        assert rho[2][2] == rho[3][3] == "-1/4*a1^2 - 1/4*a2^2 + 1/2*a2 - 1/4"

    @pytest.mark.parametrize("signs", [(1, 1), (1, -1), (-1, 1), (-1, -1)])
    def test_kodaira_ricci(self, kodairas, signs):
        rho = _table(ricci(curvature(weyl(kodairas[signs]))))
        assert rho == [
            ["-1/2*a2^2 - 1/2*a3^2 - 1/2*a4^2 - 2", "1/2*a1*a2 + 2*a4",
             "1/2*a1*a3", "1/2*a1*a4 - a2"],
            ["1/2*a1*a2 - 2*a4", "-1/2*a1^2 - 1/2*a3^2 - 1/2*a4^2 - 2",
             "1/2*a2*a3", "a1 + 1/2*a2*a4"],
            ["1/2*a1*a3", "1/2*a2*a3",
             "-1/2*a1^2 - 1/2*a2^2 - 1/2*a4^2", "1/2*a3*a4"],
            ["1/2*a1*a4 - a2", "a1 + 1/2*a2*a4",
             "1/2*a3*a4", "-1/2*a1^2 - 1/2*a2^2 - 1/2*a3^2 + 2"],
        ]

    @pytest.mark.parametrize("signs", [(1, 1), (1, -1), (-1, 1), (-1, -1)])
    def test_kodaira_star_ricci(self, kodairas, signs):
        e1, e2 = signs
        spec = kodairas[signs]
        rho = star_ricci(curvature(weyl(spec)))
        r = spec.ring
        a1, a2, a3, a4 = (r.sym(name) for name in ("a1", "a2", "a3", "a4"))
        ee = e1 * e2
        quarter = r.parse("1/4")
        top = [
            -(a3 ** 2 + a4 ** 2 + 12) * quarter, a4,
            (a1 * a3 + ee * (2 * a1 + a2 * a4)) * quarter,
            (-2 * a2 + a1 * a4 - ee * a2 * a3) * quarter,
        ]
        for j in range(4):
            assert rho[0][j] == top[j]
        assert rho[1][1] == rho[0][0]
        assert rho[1][0] == -a4
        assert rho[1][2] == rho[2][1] == -ee * rho[0][3]
        assert rho[1][3] == rho[3][1] == ee * rho[0][2]
        assert rho[2][0] == rho[0][2]
        assert rho[3][0] == rho[0][3]
        assert rho[2][3] == -ee * a4
        assert rho[3][2] == ee * a4
        assert rho[2][2] == rho[3][3] == -(a1 ** 2 + a2 ** 2) * quarter


class TestIdentitySuite:
    @pytest.mark.parametrize("which", ["inoue", "k++", "k+-", "k-+", "k--"])
    def test_all_identities_hold(self, which, inoue, kodairas):
        table = {"inoue": inoue, "k++": kodairas[(1, 1)], "k+-": kodairas[(1, -1)],
                 "k-+": kodairas[(-1, 1)], "k--": kodairas[(-1, -1)]}
        report = identity_suite(table[which])
        assert report.ok, [c.name for c in report.failures]

    def test_symmetric_ricci_iff_closed_form(self, inoue):
        # dphi = 0 for phi = a2 eta2, so rho must be symmetric
        spec = inoue.with_phi((0, "a2", 0, 0))
        rho = ricci(curvature(weyl(spec)))
        assert all((rho[i][k] - rho[k][i]).is_zero for i in range(4) for k in range(4))

    def test_identity_suite_on_lck_fixture(self, hyperbolic_like):
        report = identity_suite(hyperbolic_like)
        assert report.ok, [c.name for c in report.failures]


class TestRicciFormulas:
    @pytest.mark.parametrize("which", ["inoue", "k++", "k--", "hyp"])
    def test_formulas_hold(self, which, inoue, kodairas, hyperbolic_like):
        table = {"inoue": inoue, "k++": kodairas[(1, 1)],
                 "k--": kodairas[(-1, -1)], "hyp": hyperbolic_like}
        report = ricci_formula_check(table[which])
        assert report.ok, [c.name for c in report.failures]
        assert report.notes["jstar_term_sign"].startswith("-1/2")

    def test_zero_form_reduces_to_riemannian_tensors(self, kodairas):
        spec = kodairas[(1, 1)].with_phi((0, 0, 0, 0))
        rw = curvature(weyl(spec))
        rg = curvature(levi_civita(spec))
        assert _table(ricci(rw)) == _table(ricci(rg))
        assert _table(star_ricci(rw)) == _table(star_ricci(rg))
