"""Catalog of conic-line arrangements and their expected groups.

Each entry records how an arrangement's fundamental group enters the
pipeline — as a Lefschetz-pair table to assemble, as a presentation read
off the braid monodromy, or (when no derivation data exists) only as the
expected simplified group — together with verification metadata: the
expected group, a cross-check entry when the arrangement is known to
agree with another one, and the generator-killing data that drives the
bigness certificate.

The expected groups are the nine distinct simplified presentations for
two tangent conics with up to two extra lines; :func:`expected_groups`
exposes them by name.
"""

from dataclasses import dataclass
from typing import Optional

from . import words
from .errors import UnknownModel
from .invariants import bigness_certificate, compare, invariant_bundle
from .presentations import Presentation
from .tietze import simplify
from .van_kampen import assemble, parse_mt_table, present


def _rel(u, v=()):
    """Relator of the relation ``u = v``."""
    return words.concat(tuple(u), words.inverse(tuple(v)))


def _comm(a, b):
    return _rel(tuple(a) + tuple(b), tuple(b) + tuple(a))


# -- the nine simplified groups --------------------------------------------

_GROUPS = {
    # pi_1 of the two tangent conics alone
    "conic-pair": Presentation(2, [(1, 2, 1, 2), (2, 1, 2, 1)]),
    # one line: the three possibilities
    "z-plus-conic-pair": Presentation(3, [
        _comm((1,), (2,)), _comm((1,), (3,)),
        (2, 3, 2, 3), (3, 2, 3, 2)]),
    "square-commuting": Presentation(2, [_rel((1, 2, 1, 2), (2, 1, 2, 1))]),
    "free-2": Presentation(2, []),
    # two lines: the five possibilities
    "commuting-squares-3": Presentation(3, [
        _rel((2, 3, 2, 3), (3, 2, 3, 2)),
        _rel((1, 3, 1, 3), (3, 1, 3, 1)),
        _comm((1,), (2,)),
        _comm((2,), (3, 1, -3))]),
    "triple-square": Presentation(3, [
        _rel((3, 2, 1, 3, 2, 1), (2, 1, 3, 2, 1, 3)),
        _rel((3, 2, 1, 3, 2, 1), (1, 3, 2, 1, 3, 2))]),
    "z-plus-square-commuting": Presentation(3, [
        _comm((1,), (2,)), _comm((1,), (3,)),
        _rel((2, 3, 2, 3), (3, 2, 3, 2))]),
    "z-plus-free-2": Presentation(3, [_comm((1,), (2,)), _comm((1,), (3,))]),
    "z2-plus-conic-pair": Presentation(4, [
        _comm((1,), (2,)), _comm((1,), (3,)), _comm((1,), (4,)),
        _comm((2,), (3,)), _comm((2,), (4,)),
        (3, 4, 3, 4), (4, 3, 4, 3)]),
}


def expected_groups():
    """The distinct simplified groups, keyed by a stable name."""
    return dict(_GROUPS)


# -- the conic-pair Lefschetz-pair table -----------------------------------

# Derived by tracking the braid monodromy of
# (x^2+y^2-1)(x^2+y^2-1+(y-3/10)^2/2): six singular fibers swept
# rightmost first from a real base point right of the curve, each factor
# written as a conjugated half-twist power and the delta words solved so
# the assembly reproduces the tracked factors exactly.  The product of
# the factors is the full twist, as it must be for a degree-4 curve.
CONIC_PAIR_TABLE = """\
strands: 4
1 2 1 s3^-1 s2
2 3 1 s2^-1
2 3 4 e
2 3 4 s2 s3^-1
2 3 1 s3 s2^-1 s3 s2 s3^2 s2
1 2 1 e
"""


# -- published presentations (read off the braid monodromy) ----------------

_PUB_ONE_LINE_SIMPLE_TANGENT = Presentation(5, [
    (5, 4, 3, 2, 1),
    _rel((4,), (5,)),
    _comm((1,), (2,)),
    _rel((3, 5, 3, 5), (5, 3, 5, 3)),
    _comm((2, 1, -2), (5, 3, -5)),
    _rel((2,), (5, 3, -5)),
    _rel((-1, 2, 1), (4, 3, -4)),
    _rel((2, 1, -2, 5, 2, 1, -2, 5), (5, 2, 1, -2, 5, 2, 1, -2)),
    _rel((3, 4, 3, 4), (4, 3, 4, 3)),
    _rel((5,), (2, -1, -2, 4, 2, 1, -2)),
])

_PUB_ONE_LINE_TANGENT_AT_TANGENCY = Presentation(5, [
    (5, 4, 3, 2, 1),
    _rel((4,), (5,)),
    _rel((5, 3, 2, 5, 3, 2), (3, 2, 5, 3, 2, 5)),
    _rel((5, 3, 2, 5, 3, 2), (2, 5, 3, 2, 5, 3)),
    _rel((1,), (5, 3, 2, -3, -5)),
    _rel((1,), (4, 2, -4)),
    _rel((2, 4, 2, 4), (4, 2, 4, 2)),
    _rel((-3, 4, 3), (5,)),
])

_PUB_ONE_LINE_BOTH_TANGENCIES = Presentation(5, [
    (5, 4, 3, 2, 1),
    _rel((4,), (5,)),
    _rel((1,), (4, 3, -4)),
    _rel((2, 4, 3), (4, 3, 2)),
    _rel((4, 3, 2, 4, 3), (3, 2, 4, 3, 4)),
    _rel((1,), (-2, -3, -4, 3, 4, 3, 2)),
    _rel((-2, -3, 4, 3, 2), (1, 5, -1)),
    _rel((2, 1, 5), (1, 5, 2)),
    _rel((1, 5, 2, 1, 5), (5, 2, 1, 5, 1)),
])

_PUB_TWO_LINES_BOTH_TANGENCIES = Presentation(6, [
    (6, 5, 4, 3, 2, 1),
    _rel((3, -5, 6, 5), (-5, 6, 5, 3)),
    _rel((-3, 4, 3), (-5, -6, 5, 6, 5)),
    _rel((5, -5, 6, 5, 2, 5, -5, 6, 5, 2), (2, 5, -5, 6, 5, 2, 5, -5, 6, 5)),
    _rel((5, -5, 6, 5, 2, 5, -5, 6, 5, 2), (-5, 6, 5, 2, 5, -5, 6, 5, 2, 5)),
    _rel((1,), (6, 5, 2, -5, -6)),
    _rel((1,), (4, 3, 2, -3, -4)),
    _rel((4, 3, 2, 4, 3, 2), (2, 4, 3, 2, 4, 3)),
    _rel((4, 3, 2, 4, 3, 2), (3, 2, 4, 3, 2, 4)),
    _rel((4,), (5,)),
])

_W_A = (6, 5, 4, -5, -6, 6, 5, 3, -5)
_W_B = (5, 3, -5, 6, 5, 4, -5, -6, 6)
_W_C = (6, 5, 3, -5, 6, 5, 4, -5, -6)
_PUB_TWO_LINES_ONE_AT_TANGENCY = Presentation(6, [
    (6, 5, 4, 3, 2, 1),
    _rel((4,), (5,)),
    _comm((1,), (2,)),
    _rel((2, 1, -2, 5, 3), (5, 3, 2, 1, -2)),
    _rel((5, 3, 2, 1, -2, 5, 3), (3, 5, 3, 2, 1, -2, 5)),
    _comm((1,), (4,)),
    _comm((1,), (6,)),
    _rel((2,), (5, 3, -5)),
    _rel((2,), (6, 4, 3, -4, -6)),
    _rel(_W_A + _W_A, _W_B + _W_B),
    _rel(_W_A + _W_A, _W_C + _W_C),
    _rel((4,), (6, 5, -6)),
])

_PUB_TWO_LINES_TANGENT_PAIR = Presentation(6, [
    (6, 5, 4, 3, 2, 1),
    _rel((4,), (5,)),
    _rel((1,), (4, 3, -4)),
    _rel((4, 3, 2), (2, 4, 3)),
    _rel((4, 3, 2, 4, 3), (3, 2, 4, 3, 4)),
    _rel((4, 6, 4, 6), (6, 4, 6, 4)),
    _rel((4, 3, -4, 4, 2, 4, 3, -4, 4), (4, 2, 4, 3, -4, 4, 4, 3, -4)),
    _rel((2, 4, 3, -4, 4), (4, 3, -4, 4, 2)),
    _rel((4, 3, -4),
         (-2, -3, -4, 6, -4, -6, 4, 3, -4, 6, 4, -6, 4, 3, 2)),
    _rel((-2, -3, -4, 6, 4, -6, 4, 3, 2), (4, 3, -4, 4, 4, -3, -4)),
    _comm((4, 1, -4), (6,)),
    _comm((4, 2, -4), (6,)),
    _comm((5, 3, -5), (6,)),
])


# -- entries ----------------------------------------------------------------

@dataclass(frozen=True)
class ArrangementEntry:
    """One arrangement with its verification data.

    ``source`` is ``("table", text)`` for a Lefschetz-pair table,
    ``("presentation", p)`` for a presentation read off the braid
    monodromy, or ``None`` when the arrangement carries only its
    expected group.  ``crosscheck`` names another entry known to have
    the same group.  ``bigness_kill``/``bigness_quotient`` feed the
    bigness certificate: generators to kill and whether the certificate
    needs the explicit quotient step.
    """

    id: str
    description: str
    source: Optional[tuple]
    expected: Presentation
    figure: str = ""
    crosscheck: Optional[str] = None
    bigness_kill: tuple = ()
    bigness_quotient: Optional[bool] = None
    notes: str = ""


_ENTRIES = [
    ArrangementEntry(
        "conic-pair",
        "two conics tangent to each other at two points",
        ("table", CONIC_PAIR_TABLE),
        _GROUPS["conic-pair"],
        figure="two tangent conics"),
    # one additional line
    ArrangementEntry(
        "one-line-transverse",
        "a line meeting both conics transversally",
        None,
        _GROUPS["z-plus-conic-pair"],
        figure="generic line",
        bigness_kill=(1,),
        notes="a transverse line adds a central free factor; no "
              "derivation data beyond the expected group"),
    ArrangementEntry(
        "one-line-simple-tangent",
        "a line tangent to one conic at a smooth point, crossing the other",
        ("presentation", _PUB_ONE_LINE_SIMPLE_TANGENT),
        _GROUPS["square-commuting"],
        figure="line tangent at a simple point",
        bigness_kill=(1,)),
    ArrangementEntry(
        "one-line-through-tangency",
        "a line through one tangency point, transverse to both conics",
        None,
        _GROUPS["square-commuting"],
        figure="line through a tangency point",
        crosscheck="one-line-tangent-at-tangency",
        bigness_quotient=True,
        notes="known to agree with the tangent-at-tangency case; "
              "verified at the invariant level against it"),
    ArrangementEntry(
        "one-line-tangent-at-tangency",
        "a line through one tangency point, tangent to both conics there",
        ("presentation", _PUB_ONE_LINE_TANGENT_AT_TANGENCY),
        _GROUPS["square-commuting"],
        figure="common tangent line at a tangency point",
        bigness_kill=(3,)),
    ArrangementEntry(
        "one-line-both-tangencies",
        "the line through the two tangency points",
        ("presentation", _PUB_ONE_LINE_BOTH_TANGENCIES),
        _GROUPS["free-2"],
        figure="line through both tangency points",
        bigness_kill=(2,)),
    # two additional lines
    ArrangementEntry(
        "two-lines-transverse",
        "two lines meeting the conics and each other transversally",
        None,
        _GROUPS["z2-plus-conic-pair"],
        figure="two generic lines",
        bigness_kill=(1, 2),
        notes="two transverse lines add two central free factors"),
    ArrangementEntry(
        "two-lines-each-tangent",
        "two lines, each tangent to a different conic at a smooth point",
        None,
        _GROUPS["z-plus-square-commuting"],
        figure="tangent lines on different conics",
        bigness_kill=(1,)),
    ArrangementEntry(
        "two-lines-same-conic",
        "two lines tangent to the same conic at smooth points",
        None,
        _GROUPS["commuting-squares-3"],
        figure="tangent lines on one conic",
        bigness_kill=(1,)),
    ArrangementEntry(
        "two-lines-both-tangencies",
        "two lines, each through one of the two tangency points",
        ("presentation", _PUB_TWO_LINES_BOTH_TANGENCIES),
        _GROUPS["triple-square"],
        figure="one line per tangency point",
        bigness_kill=(3, 6)),
    ArrangementEntry(
        "two-lines-one-at-tangency",
        "a line tangent at a smooth point plus a line through a tangency "
        "point",
        ("presentation", _PUB_TWO_LINES_ONE_AT_TANGENCY),
        _GROUPS["z-plus-square-commuting"],
        figure="tangent line and tangency-point line",
        bigness_kill=(1, 6)),
    ArrangementEntry(
        "two-lines-tangent-pair",
        "a line pair crossing at a tangency point of the conics",
        ("presentation", _PUB_TWO_LINES_TANGENT_PAIR),
        _GROUPS["z-plus-free-2"],
        figure="line pair at a tangency point",
        bigness_kill=(2, 6)),
    # the four groups repeated in the two-line case listing
    ArrangementEntry(
        "listing-triple-square",
        "two-line case listing: the triple-square group",
        None,
        _GROUPS["triple-square"],
        crosscheck="two-lines-both-tangencies",
        bigness_kill=(3,)),
    ArrangementEntry(
        "listing-z-plus-square-commuting",
        "two-line case listing: Z plus the square-commuting group",
        None,
        _GROUPS["z-plus-square-commuting"],
        crosscheck="two-lines-each-tangent",
        bigness_kill=(1,)),
    ArrangementEntry(
        "listing-z-plus-free",
        "two-line case listing: Z plus the free group of rank two",
        None,
        _GROUPS["z-plus-free-2"],
        crosscheck="two-lines-tangent-pair",
        bigness_kill=(1,),
        bigness_quotient=True),
    ArrangementEntry(
        "listing-z2-plus-conic-pair",
        "two-line case listing: Z^2 plus the conic-pair group",
        None,
        _GROUPS["z2-plus-conic-pair"],
        crosscheck="two-lines-transverse",
        bigness_kill=(1, 2)),
]

_CATALOG = {e.id: e for e in _ENTRIES}


def list_entries():
    return sorted(_CATALOG)


def get_entry(id):
    try:
        return _CATALOG[id]
    except KeyError:
        raise UnknownModel(f"no arrangement entry {id!r}") from None


# -- verification -----------------------------------------------------------

@dataclass
class VerificationReport:
    entry_id: str
    stages: tuple            # names of the pipeline stages that ran
    verdict: str             # "equivalent" | "distinct" | "inconclusive"
    computed_bundle: Optional[dict]
    expected_bundle: dict
    bigness: Optional[tuple]
    detail: str = ""

    @property
    def passed(self):
        return self.verdict == "equivalent" and self.bigness is not None

    def as_dict(self):
        return {"entry": self.entry_id,
                "stages": list(self.stages),
                "verdict": self.verdict,
                "passed": self.passed,
                "computed_invariants": self.computed_bundle,
                "expected_invariants": self.expected_bundle,
                "bigness_steps": list(self.bigness) if self.bigness else None,
                "detail": self.detail}


def _computed_presentation(entry):
    """Run the entry's derivation pipeline, if it has one."""
    if entry.source is None:
        return None, ()
    kind, data = entry.source
    if kind == "table":
        rows, n = parse_mt_table(data)
        f = assemble(rows, n)
        return present(f, projective=True), ("assemble", "present")
    if kind == "presentation":
        return data, ("presentation",)
    raise ValueError(f"unknown source kind {kind!r}")


def verify(entry, budget=20000):
    """Check the entry's pipeline output against its expected group."""
    if isinstance(entry, str):
        entry = get_entry(entry)
    expected_b = invariant_bundle(simplify(entry.expected, budget).presentation)
    computed, stages = _computed_presentation(entry)
    detail = ""
    if computed is not None:
        verdict = compare(computed, entry.expected, budget)
        stages = stages + ("simplify", "compare")
        kind = verdict.kind
        computed_b = verdict.bundle1.as_dict()
        source_for_bigness = computed
    elif entry.crosscheck:
        other = get_entry(entry.crosscheck)
        verdict = compare(entry.expected, other.expected, budget)
        stages = ("crosscheck",)
        kind = verdict.kind
        computed_b = verdict.bundle2.as_dict()
        detail = f"compared against {entry.crosscheck}"
        source_for_bigness = entry.expected
    else:
        verdict = compare(entry.expected, entry.expected, budget)
        stages = ("encode",)
        kind = verdict.kind
        computed_b = None
        detail = "no derivation data; expected group only"
        source_for_bigness = entry.expected
    bigness = None
    try:
        report = bigness_certificate(source_for_bigness, entry.bigness_kill,
                                     budget, entry.bigness_quotient)
        bigness = tuple(name for name, _ in report.steps)
    except Exception as exc:      # noqa: BLE001 - reported, not hidden
        detail = (detail + "; " if detail else "") + f"bigness failed: {exc}"
    return VerificationReport(entry.id, stages, kind,
                              computed_b, expected_b.as_dict(), bigness,
                              detail)


def verify_all(budget=20000):
    return [verify(_CATALOG[i], budget) for i in list_entries()]
