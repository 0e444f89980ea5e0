import math
import os

import mpmath
import pytest

import dtheta

DATA = os.path.join(os.path.dirname(__file__), "..", "data")


def test_field_signature():
    f = dtheta.field("sqrt5")
    assert (f.r1, f.r2, f.degree, f.disc) == (2, 0, 2, 5)
    assert f.c == pytest.approx(-0.5 * math.log((1 + math.sqrt(5)) / 2), abs=1e-12)


def test_dedekind_zeta_matches_mpmath():
    f = dtheta.field("sqrt5")
    s = mpmath.mpf(2)
    chi = {1: 1, 2: -1, 3: -1, 4: 1}
    l2 = sum(c * mpmath.zeta(s, mpmath.mpf(a) / 5) for a, c in chi.items()) / 25
    assert abs(dtheta.dedekind_zeta(f, 2.0) - complex(mpmath.zeta(2) * l2)) < 1e-13


def test_kernel_closed_form():
    for x in (0.5, 1.0, 2.0):
        assert dtheta.z_tilde(1, 0, x) == pytest.approx(2 * math.exp(-x * x), rel=1e-10)


def test_jacobi_relation():
    r = dtheta.check_theta(dtheta.field("Q"), 1, 2.0)
    assert r.rel_error < 1e-10
    assert r.lhs.real == pytest.approx(float(mpmath.jtheta(3, 0, mpmath.exp(-mpmath.pi / 2))), rel=1e-12)


def test_coefficients():
    assert dtheta.moebius_coeffs(dtheta.field("Q"), 1, 10)[1:] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
    assert dtheta.ideal_coeffs(dtheta.field("sqrt5"), 5)[1:] == [1, 0, 0, 1, 1]


def test_hlr_identity():
    zeros = dtheta.load_zeros(os.path.join(DATA, "riemann30.txt"))
    assert len(zeros) == 30
    r = dtheta.hlr_check(1.0, zeros)
    assert r.residual < 1e-4


def test_errors_are_typed():
    with pytest.raises(dtheta.DomainError):
        dtheta.check_theta(dtheta.field("Q"), 1, 0.0)
    with pytest.raises(dtheta.ParseError):
        dtheta.field(os.path.join(DATA, "garbage.chars"))
    with pytest.raises(dtheta.Error):
        dtheta.hlr_check(1.0, [21.0, 14.0])
