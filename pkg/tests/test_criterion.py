"""Semisimplicity criterion: bar transform, Z sets, cell factors, verdicts."""

from fractions import Fraction

import pytest

from cycbrauer.criterion import (VARIANTS, bar_deltas, brauer_z, decide,
                                 g_lambda_mu, g_mu, z_set, z_tilde)
from cycbrauer.partitions import admissible_set, multipartitions
from cycbrauer.scalars import CyclotomicField, FiniteField

Q = CyclotomicField(1)


def test_bar_deltas_m2():
    F = CyclotomicField(2)
    a, b = F.embed(3), F.embed(5)
    bars = bar_deltas(F, [a, b])
    assert bars[0] == a + b
    assert bars[1] == a - b


def test_bar_deltas_inverts():
    # the transform is a bijection: recover deltas by the inverse transform
    F = CyclotomicField(3)
    deltas = [F.embed(Fraction(1, 2)), F.embed(2), F.embed(-7)]
    bars = bar_deltas(F, deltas)
    xi = F.root_of_unity(3)
    minv = F.embed(Fraction(1, 3))
    for j in range(3):
        acc = F.zero
        for i in range(3):
            acc = acc + bars[i] * xi ** ((-j * i) % 3)
        assert acc * minv == deltas[j]


def test_z_tilde_printed_small():
    assert z_tilde(2, 2, "printed") == frozenset()
    assert z_tilde(3, 2, "printed") == frozenset({0})
    assert z_tilde(2, 3, "printed") == frozenset({0, 3})
    assert z_tilde(3, 3, "printed") == frozenset({-1, 0, 1, 3})


def test_z_variants_agree_for_large_n():
    for m in range(1, 6):
        for n in range(4, 9):
            assert z_tilde(m, n, "printed") == z_tilde(m, n, "combinatorial")


def test_z_variants_differ_on_thin_locus():
    # frozen observation: the combinatorial set has the extra element 1 at
    # n = 2 (every m) and at n = 3 for m <= 2; equality otherwise
    for m in range(1, 6):
        diff = z_tilde(m, 2, "combinatorial") ^ z_tilde(m, 2, "printed")
        assert diff == {1}
    for m in (1, 2):
        assert z_tilde(m, 3, "combinatorial") ^ z_tilde(m, 3, "printed") == {1}
    for m in (3, 4, 5):
        assert z_tilde(m, 3, "combinatorial") == z_tilde(m, 3, "printed")


def test_z_set_scaling():
    assert z_set(3, 2, "printed") == frozenset({0})
    assert z_set(2, 3, "printed") == frozenset({0, 6})


def test_brauer_z():
    assert brauer_z(2) == frozenset({0})
    assert 1 in brauer_z(3)  # B_3(1) is famously not semisimple
    assert 2 not in brauer_z(3)


def test_g_mu_generic_nonzero():
    F = CyclotomicField(3)
    deltas = [F.embed(Fraction(22, 7)), F.embed(5), F.embed(-9)]
    for mu in multipartitions(3, 1):
        assert g_mu(F, deltas, mu)


def test_g_lambda_mu_vanishes_on_hyperplane():
    # pick an admissible pair and solve bar_0 = m - m c by hand
    F = CyclotomicField(2)
    mu = ((), ())
    pair = admissible_set(mu, 2)[0]
    c = pair.content
    # deltas with bar_0 = 2 - 2c and bar_1 generic: delta = ((b0+b1)/2, (b0-b1)/2)
    b0, b1 = F.embed(2 - 2 * c), F.embed(17)
    half = F.embed(Fraction(1, 2))
    deltas = [(b0 + b1) * half, (b0 - b1) * half]
    assert not g_lambda_mu(F, deltas, pair)


def test_decide_delta_zero():
    for m in (2, 3):
        F = CyclotomicField(m)
        for variant in VARIANTS:
            v = decide(m, 2, F, [F.zero] * m, variant)
            assert not v.semisimple
            assert v.reasons[0]["kind"] == "delta-zero"


def test_decide_m1_brauer():
    v = decide(1, 3, Q, [Q.embed(1)])
    assert not v.semisimple and v.reasons[0]["kind"] == "brauer-z"
    assert decide(1, 3, Q, [Q.embed(2)]).semisimple


def test_decide_char_p():
    F = FiniteField(2, 1)
    v = decide(2, 2, F, [F.one, F.one])
    assert not v.semisimple
    assert any(r["kind"] == "char" for r in v.reasons)


def test_decide_fixture_c1():
    """(2,2), delta = (1,-1): the printed set is empty so that variant says
    semisimple, while the combinatorial and gmu variants flag the point."""
    F = CyclotomicField(2)
    deltas = [F.embed(1), F.embed(-1)]
    assert decide(2, 2, F, deltas, "printed-z").semisimple
    assert not decide(2, 2, F, deltas, "combinatorial-rho").semisimple
    assert not decide(2, 2, F, deltas, "gmu").semisimple


def test_decide_generic_semisimple():
    F = CyclotomicField(2)
    deltas = [F.embed(Fraction(355, 113)), F.embed(Fraction(22, 7))]
    for variant in VARIANTS:
        assert decide(2, 3, F, deltas, variant).semisimple


def test_decide_n1():
    F = FiniteField(3, 1)
    assert not decide(3, 1, F, [F.one, F.zero, F.zero]).semisimple
    assert decide(2, 1, CyclotomicField(2),
                  [CyclotomicField(2).zero] * 2).semisimple


def test_decide_rejects_bad_input():
    with pytest.raises(ValueError):
        decide(2, 2, Q, [Q.one], "printed-z")
    with pytest.raises(ValueError):
        decide(2, 2, CyclotomicField(2), [0, 0], "no-such-variant")
