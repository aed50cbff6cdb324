"""Computable invariants of finite presentations.

* integer Smith normal form with unimodular transforms, and the
  abelianization derived from the relator exponent-sum matrix,
* homomorphism counting into small finite groups by pruned enumeration,
* a comparison verdict (equivalent / distinct / inconclusive) built from
  simplification, invariant bundles and relabelling,
* the step-by-step certificate that a group surjects onto the quotient
  ``<x, y | x^2, y^3>`` (and hence contains a large free subgroup).
"""

import itertools
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import words
from .errors import BudgetExceeded, ParseError, ScriptStepFailed
from .presentations import Presentation, TietzeMove, replay
from .tietze import simplify

# -- Smith normal form -----------------------------------------------------


def smith_normal_form(matrix):
    """Diagonalize an integer matrix: returns ``(diag, left, right)``.

    ``left`` and ``right`` are unimodular with ``left @ matrix @ right``
    diagonal; the diagonal is nonnegative and each entry divides the
    next.  Pure-integer row/column reduction, no floating point.
    """
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    a = [[int(v) for v in row] for row in matrix]
    for row in a:
        if len(row) != cols:
            raise ValueError("ragged matrix")
    left = [[int(i == j) for j in range(rows)] for i in range(rows)]
    right = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def row_op(i, j, q):  # row_i -= q * row_j
        for k in range(cols):
            a[i][k] -= q * a[j][k]
        for k in range(rows):
            left[i][k] -= q * left[j][k]

    def col_op(i, j, q):  # col_i -= q * col_j
        for k in range(rows):
            a[k][i] -= q * a[k][j]
        for k in range(cols):
            right[k][i] -= q * right[k][j]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        left[i], left[j] = left[j], left[i]

    def swap_cols(i, j):
        for k in range(rows):
            a[k][i], a[k][j] = a[k][j], a[k][i]
        for k in range(cols):
            right[k][i], right[k][j] = right[k][j], right[k][i]

    t = 0
    while t < min(rows, cols):
        piv = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (piv is None
                                or abs(a[i][j]) < abs(a[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    row_op(i, t, q)
                    if a[i][t]:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    col_op(j, t, q)
                    if a[t][j]:
                        swap_cols(t, j)
                        dirty = True
            if not dirty:
                break
        # enforce the divisibility chain before moving on
        bad = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if a[i][j] % a[t][t]:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            row_op(t, bad, -1)  # fold the offending row in and redo
            continue
        t += 1
    for i in range(min(rows, cols)):
        if a[i][i] < 0:
            for k in range(cols):
                a[i][k] = -a[i][k]
            for k in range(rows):
                left[i][k] = -left[i][k]
    diag = [a[i][i] for i in range(min(rows, cols))]
    return diag, left, right


@dataclass(frozen=True)
class Abelianization:
    free_rank: int
    torsion: tuple

    def as_dict(self):
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}


def exponent_matrix(p):
    """Relator exponent sums; one row per relator, one column per generator."""
    rows = []
    for r in p.relators:
        row = [0] * p.ngen
        for a in r:
            row[abs(a) - 1] += 1 if a > 0 else -1
        rows.append(row)
    return rows


def abelianization(p):
    if not p.relators or p.ngen == 0:
        return Abelianization(p.ngen, ())
    diag, _, _ = smith_normal_form(exponent_matrix(p))
    nonzero = [d for d in diag if d]
    return Abelianization(p.ngen - len(nonzero),
                          tuple(d for d in nonzero if d > 1))


# -- finite target groups --------------------------------------------------


@dataclass(frozen=True)
class GroupTable:
    """A finite group as a multiplication table over ``0 .. size-1``."""

    name: str
    size: int
    mult: tuple      # mult[a][b]
    inverse: tuple
    identity: int = 0

    def __post_init__(self):
        for a in range(self.size):
            if self.mult[self.identity][a] != a or self.mult[a][self.identity] != a:
                raise ValueError("identity element is wrong")
            if self.mult[a][self.inverse[a]] != self.identity:
                raise ValueError("inverse table is wrong")


def symmetric_group_table(k, name=None):
    """Multiplication table of the symmetric group on ``k`` points."""
    elements = sorted(itertools.permutations(range(k)))
    index = {e: i for i, e in enumerate(elements)}
    mult = tuple(tuple(index[tuple(a[b[i]] for i in range(k))]
                       for b in elements) for a in elements)
    inv = []
    for a in elements:
        ia = [0] * k
        for i, v in enumerate(a):
            ia[v] = i
        inv.append(index[tuple(ia)])
    return GroupTable(name or f"S{k}", len(elements), mult, tuple(inv))


_TABLES = {}


def builtin_table(name):
    """The built-in targets: S3 and S4 (S5 on request, it is larger)."""
    if name not in _TABLES:
        if name not in ("S3", "S4", "S5"):
            raise ValueError(f"no built-in group {name!r}")
        _TABLES[name] = symmetric_group_table(int(name[1]))
    return _TABLES[name]


def format_group_table(table):
    lines = [f"name: {table.name}", f"order: {table.size}"]
    for row in table.mult:
        lines.append(" ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


def parse_group_table(text):
    lines = [ln.strip() for ln in text.splitlines()
             if ln.strip() and not ln.strip().startswith("#")]
    if len(lines) < 2 or not lines[0].startswith("name:"):
        raise ParseError("group table must start with 'name:' and 'order:'")
    name = lines[0].split(":", 1)[1].strip()
    if not lines[1].startswith("order:"):
        raise ParseError("missing 'order:' line")
    try:
        size = int(lines[1].split(":", 1)[1])
    except ValueError:
        raise ParseError("bad order") from None
    body = lines[2:]
    if len(body) != size:
        raise ParseError(f"expected {size} table rows, got {len(body)}")
    mult = tuple(tuple(int(v) for v in ln.split()) for ln in body)
    for row in mult:
        if len(row) != size or any(not 0 <= v < size for v in row):
            raise ParseError("malformed table row")
    identity = next((e for e in range(size)
                     if all(mult[e][a] == a and mult[a][e] == a
                            for a in range(size))), None)
    if identity is None:
        raise ParseError("table has no identity element")
    inv = []
    for a in range(size):
        b = next((b for b in range(size) if mult[a][b] == identity), None)
        if b is None:
            raise ParseError(f"element {a} has no inverse")
        inv.append(b)
    return GroupTable(name, size, mult, tuple(inv), identity)


def count_homs(p, table, budget=10 ** 8):
    """Count homomorphisms into ``table`` by pruned enumeration.

    Raises :class:`BudgetExceeded` when the raw search space
    ``|target| ** ngen`` exceeds ``budget``; pruning usually visits far
    fewer assignments, but the bound keeps the call predictable.
    """
    size = table.size
    if size ** p.ngen > budget:
        raise BudgetExceeded(
            f"{size}^{p.ngen} assignments exceed budget {budget}")
    mult = np.asarray(table.mult, dtype=np.int64)
    inv = np.asarray(table.inverse, dtype=np.int64)
    # candidate assignments encoded mixed-radix; short relators prune first
    live = np.arange(size ** p.ngen, dtype=np.int64)
    for r in sorted(p.relators, key=len):
        if live.size == 0:
            break
        acc = np.full(live.size, table.identity, dtype=np.int64)
        for a in r:
            g = (live // size ** (abs(a) - 1)) % size
            acc = mult[acc, g if a > 0 else inv[g]]
        live = live[acc == table.identity]
    return int(live.size)


# -- bundles and comparison ------------------------------------------------


@dataclass(frozen=True)
class InvariantBundle:
    abelianization: Abelianization
    hom_counts: tuple  # ((target name, count), ...)

    def as_dict(self):
        return {"abelianization": self.abelianization.as_dict(),
                "hom_counts": dict(self.hom_counts)}


_BUNDLE_CACHE = {}


def invariant_bundle(p, targets=("S3", "S4"), budget=10 ** 8):
    counts = []
    for t in targets:
        table = t if isinstance(t, GroupTable) else builtin_table(t)
        # only built-in tables are safe cache keys by name
        key = ((p.ngen, p.relators, table.name)
               if table is _TABLES.get(table.name) else None)
        if key is not None and key in _BUNDLE_CACHE:
            n = _BUNDLE_CACHE[key]
        else:
            n = count_homs(p, table, budget)
            if key is not None:
                _BUNDLE_CACHE[key] = n
        counts.append((table.name, n))
    return InvariantBundle(abelianization(p), tuple(counts))


def _canonical_multiset(relators):
    return tuple(sorted(words.cyclic_normal_form(r) for r in relators if
                        words.cyclic_normal_form(r)))


@dataclass
class ComparisonVerdict:
    kind: str                      # "equivalent" | "distinct" | "inconclusive"
    witness: Optional[tuple] = None
    trace1: tuple = ()
    trace2: tuple = ()
    bundle1: Optional[InvariantBundle] = None
    bundle2: Optional[InvariantBundle] = None
    budget_spent: int = 0

    def as_dict(self):
        out = {"kind": self.kind}
        if self.witness:
            out["witness"] = {"invariant": self.witness[0],
                              "left": self.witness[1],
                              "right": self.witness[2]}
        if self.bundle1:
            out["left_invariants"] = self.bundle1.as_dict()
        if self.bundle2:
            out["right_invariants"] = self.bundle2.as_dict()
        return out


def _relabel_moves(q1, q2):
    """A relabelling of ``q1`` onto ``q2``'s relator multiset, as moves."""
    if q1.ngen != q2.ngen or len(q1.relators) != len(q2.relators):
        return None
    n = q1.ngen
    if n > 7:
        return None
    target = _canonical_multiset(q2.relators)
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            old_in_new = {g: (signs[g - 1] * perm[g - 1],)
                          for g in range(1, n + 1)}
            mapped = [words.substitute_letters(r, old_in_new)
                      for r in q1.relators]
            if _canonical_multiset(mapped) == target:
                new_in_old = {}
                for g in range(1, n + 1):
                    new_in_old[perm[g - 1]] = (signs[g - 1] * g,)
                move = TietzeMove(
                    "change_generators",
                    (tuple(sorted((k, tuple(v)) for k, v in new_in_old.items())),
                     tuple(sorted((k, tuple(v)) for k, v in old_in_new.items()))))
                return (move,)
    return None


def compare(p1, p2, budget=20000, targets=("S3", "S4"), hom_budget=10 ** 8):
    """Decide whether two presentations present the same group, when possible.

    ``distinct`` comes with an invariant witness, ``equivalent`` with
    replayable traces whose ends agree up to relator order; anything the
    budgets cannot settle is ``inconclusive`` (never a guess).
    """
    r1 = simplify(p1, budget)
    r2 = simplify(p2, budget)
    q1, q2 = r1.presentation, r2.presentation
    b1 = invariant_bundle(q1, targets, hom_budget)
    b2 = invariant_bundle(q2, targets, hom_budget)
    spent = len(r1.trace) + len(r2.trace)
    if b1.abelianization != b2.abelianization:
        return ComparisonVerdict("distinct",
                                 ("abelianization",
                                  b1.abelianization.as_dict(),
                                  b2.abelianization.as_dict()),
                                 r1.trace, r2.trace, b1, b2, spent)
    for (name1, c1), (_, c2) in zip(b1.hom_counts, b2.hom_counts):
        if c1 != c2:
            return ComparisonVerdict("distinct", (f"hom_count_{name1}", c1, c2),
                                     r1.trace, r2.trace, b1, b2, spent)
    relabel = _relabel_moves(q1, q2)
    if relabel is not None:
        return ComparisonVerdict("equivalent", None,
                                 r1.trace + relabel, r2.trace, b1, b2, spent)
    return ComparisonVerdict("inconclusive", None, r1.trace, r2.trace,
                             b1, b2, spent)


def verdict_sound(p1, p2, verdict):
    """Check an ``equivalent`` verdict by replaying both traces."""
    if verdict.kind != "equivalent":
        return False
    end1 = replay(p1, verdict.trace1)
    end2 = replay(p2, verdict.trace2)
    return (end1.ngen == end2.ngen
            and _canonical_multiset(end1.relators)
            == _canonical_multiset(end2.relators))


# -- the surjection certificate --------------------------------------------

_CONIC_RELATOR = words.cyclic_normal_form((1, 2, 1, 2))
_BRAID_RELATOR = words.cyclic_normal_form((1, 2, 1, 2, -1, -2, -1, -2))


@dataclass
class BignessReport:
    steps: tuple
    final: Presentation
    trace: tuple

    def as_dict(self):
        return {"steps": [{"step": s, "detail": d} for s, d in self.steps],
                "final_relators": [words.format_word(r)
                                   for r in self.final.relators]}


def bigness_certificate(p, kill=(), budget=20000, quotient=None):
    """Certify a surjection onto ``<x, y | x^2, y^3>``.

    Kills the generators in ``kill`` (the meridians of the extra lines),
    simplifies down to the two-tangent-conics group, substitutes
    ``x = ab``, ``y = b`` and adjoins ``y^3``; every step is checked
    syntactically and recorded.  Since the image presents a group with a
    free subgroup of rank two, so does anything that surjects onto it.

    ``quotient`` controls the intermediate quotient by ``(x1 x2)^2``:
    ``None`` takes it exactly when the projection leaves the weaker
    square-commuting relator, ``True`` always takes it (needed when the
    projection leaves a free group), ``False`` forbids it.

    Raises :class:`ScriptStepFailed` if any step's outcome is not the
    expected one.
    """
    steps = []
    start_len = len(p.trace)
    q = p
    for g in sorted(kill, reverse=True):
        if not 1 <= g <= q.ngen:
            raise ScriptStepFailed("project", f"no generator x{g} to kill")
        q = q.substitute(g, ())
    q = simplify(q, budget).presentation
    if q.ngen != 2:
        raise ScriptStepFailed(
            "project", f"expected 2 generators after projection, got {q.ngen}")
    classes = {words.cyclic_normal_form(r) for r in q.relators}
    if not classes <= {_CONIC_RELATOR, _BRAID_RELATOR} or (
            not classes and quotient is not True):
        raise ScriptStepFailed(
            "project", f"unexpected relators after projection: {q.relators}")
    steps.append(("project", f"killed {sorted(kill)}; relators now "
                  + ", ".join(words.format_word(r) for r in q.relators)))
    need_quotient = _CONIC_RELATOR not in classes or _BRAID_RELATOR in classes
    if need_quotient and quotient is False:
        raise ScriptStepFailed(
            "project", "projection needs the quotient step, but it is "
            "forbidden")
    if quotient is True or need_quotient:
        q = q.add_relators([(1, 2, 1, 2)], "pass to the two-conic quotient")
        q = simplify(q, budget).presentation
        if {words.cyclic_normal_form(r) for r in q.relators} != {_CONIC_RELATOR}:
            raise ScriptStepFailed("project", "quotient step did not close up")
        steps.append(("quotient", "adjoined (x1 x2)^2"))
    q = q.change_generators({1: (1, 2), 2: (2,)}, {1: (1, -2), 2: (2,)})
    square = words.cyclic_normal_form((1, 1))
    for r in q.relators:
        if words.cyclic_normal_form(r) != square:
            raise ScriptStepFailed(
                "substitute", f"relator {words.format_word(r)} is not a "
                "conjugate of x1^2")
    steps.append(("substitute", "x = ab, y = b; relators reduce to x^2"))
    q = q.add_relators([(2, 2, 2)], "adjoin y^3")
    q = simplify(q, budget).presentation
    want = {square, words.cyclic_normal_form((2, 2, 2))}
    if q.ngen != 2 or {words.cyclic_normal_form(r) for r in q.relators} != want:
        raise ScriptStepFailed("torus", "did not reach <x, y | x^2, y^3>")
    steps.append(("torus", "final presentation is <x, y | x^2, y^3>"))
    return BignessReport(tuple(steps), q, q.trace[start_len:])
