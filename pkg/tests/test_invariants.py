import random

import pytest

from conicline.errors import ScriptStepFailed
from conicline.invariants import (abelianization, bigness_certificate,
                                  builtin_table, compare, count_homs,
                                  exponent_matrix, format_group_table,
                                  invariant_bundle, parse_group_table,
                                  smith_normal_form, symmetric_group_table,
                                  verdict_sound)
from conicline.presentations import Presentation

CONIC = Presentation(2, [(1, 2, 1, 2), (2, 1, 2, 1)])
G2 = Presentation(2, [(1, 2, 1, 2, -1, -2, -1, -2)])
F2 = Presentation(2, [])


def test_smith_normal_form_basics():
    diag, _, _ = smith_normal_form([[2, 4], [6, 8]])
    assert diag == [2, 4]


def test_smith_divisibility_chain():
    diag, _, _ = smith_normal_form([[2, 0, 0], [0, 3, 0], [0, 0, 4]])
    nonzero = [x for x in diag if x]
    for a, b in zip(nonzero, nonzero[1:]):
        assert b % a == 0


def test_exponent_matrix():
    m = exponent_matrix(CONIC)
    assert m == [[2, 2], [2, 2]]


def test_abelianization_conic():
    ab = abelianization(CONIC)
    assert ab.free_rank == 1
    assert list(ab.torsion) == [2]


def test_abelianization_free_group():
    ab = abelianization(Presentation(3, []))
    assert ab.free_rank == 3
    assert not list(ab.torsion)


def test_hom_counts_known_values():
    s3 = builtin_table("S3")
    assert count_homs(F2, s3) == 36
    assert count_homs(G2, s3) == 30
    assert count_homs(CONIC, s3) == 24


def test_symmetric_group_table_round_trip():
    t = symmetric_group_table(3)
    u = parse_group_table(format_group_table(t))
    assert u.size == t.size
    assert u.mult == t.mult
    assert u.inverse == t.inverse


def test_compare_distinct_by_rank():
    v = compare(F2, CONIC)
    assert v.kind == "distinct"
    assert v.witness[0] == "abelianization"


def test_compare_distinct_by_hom_count():
    v = compare(F2, G2)
    assert v.kind == "distinct"
    assert v.witness is not None


def test_compare_equivalent_relabelled():
    q = Presentation(2, [(2, 1, 2, 1), (1, 2, 1, 2)])
    v = compare(CONIC, q)
    assert v.kind == "equivalent"
    assert verdict_sound(CONIC, q, v)


def test_bundle_cached_and_equal():
    assert invariant_bundle(CONIC) == invariant_bundle(CONIC)
    assert invariant_bundle(CONIC) != invariant_bundle(F2)


def test_bigness_conic_reaches_torus_form():
    report = bigness_certificate(CONIC)
    names = [name for name, _ in report.steps]
    assert names[-1] == "torus"
    assert "<x, y | x^2, y^3>" in report.steps[-1][1]


def test_bigness_with_kill_and_quotient():
    z_conic = Presentation(3, [(1, 2, -1, -2), (1, 3, -1, -3),
                               (2, 3, 2, 3), (3, 2, 3, 2)])
    report = bigness_certificate(z_conic, kill=(1,))
    assert [n for n, _ in report.steps][-1] == "torus"
    report = bigness_certificate(F2, quotient=True)
    assert [n for n, _ in report.steps][-1] == "torus"


def test_bigness_fails_on_wrong_group():
    with pytest.raises(ScriptStepFailed):
        bigness_certificate(Presentation(2, [(1,), (2,)]))


def test_snf_invariant_under_unimodular(  ):
    rng = random.Random(7)
    base = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    want = smith_normal_form(base)[0]

    def elementary(m):
        m = [row[:] for row in m]
        k = len(m)
        i, j = rng.sample(range(k), 2)
        c = rng.randint(-3, 3)
        if rng.random() < 0.5:
            for t in range(k):
                m[i][t] += c * m[j][t]
        else:
            for t in range(k):
                m[t][i] += c * m[t][j]
        return m

    m = base
    for _ in range(50):
        m = elementary(m)
        assert smith_normal_form(m)[0] == want
