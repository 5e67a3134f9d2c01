"""Trace-form oracle and the concordance harness."""

from fractions import Fraction

import pytest

from cycbrauer.oracle import (StructureTable, _rank_exact_certified,
                              _to_rational_blocks, concordance_sweep,
                              deltas_admissible, galois_conjugate_deltas,
                              radical_dimension, report_csv,
                              semisimple_verdict)
from cycbrauer.linalg import primes_for_modular
from cycbrauer.scalars import CyclotomicField, FiniteField
from cycbrauer.wreath import compose, enumerate_group, identity


def test_structure_table_closure():
    t = StructureTable(3, 2)
    assert t.size == 27
    for (i, j), (k, exps) in t.products.items():
        assert 0 <= k < t.size
        assert len(exps) == 3 and all(e >= 0 for e in exps)


def test_group_algebra_semisimple_maschke():
    # regular-representation trace form of Q(zeta_m) W_{m,2} has full rank
    for m in (2, 3, 4):
        F = CyclotomicField(m)
        group = enumerate_group(m, 2)
        N = len(group)
        e = identity(m, 2)
        T = [[F.embed(N) if compose(g, h) == e else F.zero for h in group]
             for g in group]
        big, deg = _to_rational_blocks(F, T)
        rank, method = _rank_exact_certified(big, primes_for_modular(m, count=3))
        assert rank == N * deg, (m, rank, method)


def test_radical_at_delta_zero():
    frozen = {(2, 2): 4, (3, 2): 9, (2, 3): 54}
    for (m, n), want in frozen.items():
        F = CyclotomicField(m)
        v = semisimple_verdict(m, n, F, [F.zero] * m)
        assert v["verdict"] == "not-semisimple"
        assert v["radical"] == want
        assert v["cross_check_agrees"]


def test_fixture_points_2_2():
    F = CyclotomicField(2)
    frozen = {(1, -1): 3, (1, 1): 3, (0, 2): 0}
    for ds, rad in frozen.items():
        v = semisimple_verdict(2, 2, F, [F.embed(d) for d in ds])
        assert v["radical"] == rad
        assert v["cross_check_agrees"]


def test_generic_point_semisimple():
    F = CyclotomicField(3)
    ds = [F.embed(Fraction(7, 3)), F.embed(Fraction(-5, 4)),
          F.embed(Fraction(-5, 4))]
    v = semisimple_verdict(3, 2, F, ds)
    assert v["verdict"] == "semisimple" and v["admissible"]


def test_oracle_flags_off_locus_points():
    F = CyclotomicField(3)
    v = semisimple_verdict(3, 2, F, [F.embed(1), F.embed(2), F.embed(3)])
    assert v["admissible"] is False and "note" in v


def test_oracle_refuses_char_p():
    K = FiniteField(5, 1)
    v = semisimple_verdict(2, 2, K, [K.one, K.one])
    assert v["verdict"] == "unsupported"


def test_oracle_cap():
    F = CyclotomicField(2)
    v = semisimple_verdict(2, 4, F, [F.one, F.one], cap=100)
    assert v["verdict"] == "unsupported"


def test_radical_galois_invariant():
    F = CyclotomicField(3)
    z = F.zeta
    ds = [F.embed(2), z + F.embed(1), z ** 2 + F.embed(1)]
    t = StructureTable(3, 2)
    r1 = radical_dimension(t, F, ds)
    r2 = radical_dimension(t, F, galois_conjugate_deltas(F, ds, 2))
    assert r1 == r2


def test_deltas_admissible():
    F = CyclotomicField(3)
    assert deltas_admissible([F.embed(1), F.embed(2), F.embed(2)])
    assert not deltas_admissible([F.embed(1), F.embed(2), F.embed(3)])
    assert deltas_admissible([F.embed(4), F.embed(9)])  # m = 2, always


def test_concordance_sweep_small():
    rep = concordance_sweep([(2, 2)], seed=5, generic_points=2,
                            hyperplane_points=2)
    assert rep["schema_version"] == 1
    assert rep["summary"]["num_points"] == 5
    assert not rep["summary"]["generic_disagreements"]
    assert rep["summary"]["cross_check_failures"] == 0
    strata = {p["provenance"] for p in rep["points"]}
    assert strata == {"delta-zero", "generic-random", "on-hyperplane"}
    # deterministic under the seed
    rep2 = concordance_sweep([(2, 2)], seed=5, generic_points=2,
                             hyperplane_points=2)
    assert rep == rep2
    csv_text = report_csv(rep)
    assert csv_text.count("\n") == 6  # header + 5 points


def test_concordance_sweep_points_are_admissible():
    rep = concordance_sweep([(3, 2)], seed=1, generic_points=2,
                            hyperplane_points=3)
    for p in rep["points"]:
        assert p["oracle"]["admissible"], p["provenance"]
