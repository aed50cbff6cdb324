from conicline.invariants import invariant_bundle
from conicline.presentations import Presentation, replay
from conicline.tietze import simplify

CONIC = Presentation(2, [(1, 2, 1, 2), (2, 1, 2, 1)])


def test_eliminates_defined_generator():
    # x3 = x1 x2 is a pure definition; it must disappear
    p = Presentation(3, [(3, -2, -1), (1, 2, 1, 2)])
    s = simplify(p).presentation
    assert s.ngen == 2


def test_removes_duplicate_relators():
    # one cyclic class spelled three ways: rotation and inversion
    p = Presentation(2, [(1, 2, 1, 2), (2, 1, 2, 1),
                         (-2, -1, -2, -1)])
    s = simplify(p).presentation
    assert len(s.relators) == 1


def test_trace_replays_to_same_output():
    p = Presentation(3, [(3, -2, -1), (1, 2, 1, 2), (2, 1, 2, 1)])
    res = simplify(p)
    replayed = replay(p, res.trace)
    assert replayed.ngen == res.presentation.ngen
    assert replayed.relators == res.presentation.relators


def test_budget_zero_is_identity():
    res = simplify(CONIC, budget=0)
    assert res.presentation.relators == CONIC.relators


def test_preserves_invariant_bundle():
    p = Presentation(3, [(3, -2, -1), (1, 2, 1, 2), (2, 1, 2, 1)])
    s = simplify(p).presentation
    assert invariant_bundle(s) == invariant_bundle(CONIC)


def test_big_presentation_reaches_small_form():
    # a padded conic-pair presentation collapses back to two generators
    p = CONIC
    for d in [(1,), (2,), (1, 2), (2, -1)]:
        p = p.add_generator(d)
    s = simplify(p).presentation
    assert s.ngen == 2
    assert invariant_bundle(s) == invariant_bundle(CONIC)
