"""Budgeted greedy simplification of finite presentations.

The engine repeats four deterministic passes until nothing changes or
the move budget runs out:

1. drop trivial and duplicate relators (duplicates up to cyclic
   permutation, inversion and free reduction),
2. eliminate a generator that occurs exactly once in some relator
   (candidates tried by ascending generator index),
3. shorten a relator by rewriting it against another relator whenever
   they share more than half of the shorter one,
4. remove a relator that a bounded rewrite search proves to be a
   consequence of the remaining ones.

Every move is recorded in the presentation trace, so the output replays
bit-for-bit from the input.  The engine never claims non-equivalence:
running out of budget only means failure-to-match within budget.
"""

from dataclasses import dataclass

from . import words
from .presentations import Presentation

# Bounds of the pass-4 consequence search; fixed so traces reproduce.
_SEARCH_BEAM = 600
_SEARCH_DEPTH = 24


@dataclass
class SimplifyResult:
    presentation: Presentation
    trace: tuple
    exhausted: bool


def simplify(p, budget=10000):
    """Greedy Tietze simplification within ``budget`` recorded moves."""
    if budget < 0:
        raise ValueError("budget must be >= 0")
    start_len = len(p.trace)
    spent = 0
    exhausted = False
    while True:
        if spent >= budget:
            exhausted = bool(_find_any_change(p))
            break
        q = _one_step(p)
        if q is None:
            break
        p = q
        spent += 1
    return SimplifyResult(p, p.trace[start_len:], exhausted)


def _one_step(p):
    """Apply the first applicable move in the fixed pass order."""
    step = _dedup_step(p)
    if step is not None:
        return step
    step = _elimination_step(p)
    if step is not None:
        return step
    step = _shorten_step(p)
    if step is not None:
        return step
    return _consequence_step(p)


def _find_any_change(p):
    return _one_step(p) is not None


# -- pass 1: trivial and duplicate relators --------------------------------

def _dedup_step(p):
    seen = set()
    for i, r in enumerate(p.relators):
        if not r:
            return p.remove_relator(i, "trivial")
        key = words.cyclic_normal_form(r)
        if key in seen:
            return p.remove_relator(i, "duplicate")
        seen.add(key)
    return None


# -- pass 2: generator elimination -----------------------------------------

def _elimination_candidate(p):
    """Smallest generator with a single occurrence in some relator."""
    for g in range(1, p.ngen + 1):
        for i, r in enumerate(p.relators):
            occurrences = [k for k, a in enumerate(r) if abs(a) == g]
            if len(occurrences) == 1:
                return g, i, occurrences[0]
    return None


def _elimination_step(p):
    found = _elimination_candidate(p)
    if found is None:
        return None
    g, i, k = found
    r = p.relators[i]
    rot = r[k:] + r[:k]           # occurrence of g now leads
    if rot[0] < 0:
        rot = words.inverse(rot)  # same relator, g now positive
        rot = rot[-1:] + rot[:-1]
    definition = words.inverse(rot[1:])
    return p.remove_relator(i, f"defines x{g}").substitute(g, definition)


# -- pass 3: rewriting one relator against another -------------------------

def _rotations(w):
    return [w[r:] + w[:r] for r in range(len(w))]


def _rewrite_once(r, s, min_extra=1):
    """Rewrite cyclic relator ``r`` using relator ``s``.

    Looks for a common piece of length ``L`` with ``2L >= len(s) +
    min_extra`` and replaces it by the complementary piece of ``s``.
    With ``min_extra=1`` the result is strictly shorter.  Returns the
    rewritten word or None.
    """
    m = len(s)
    if m < 2 or len(r) < (m + min_extra + 1) // 2:
        return None
    doubled = r + r
    for z in _rotations(s) + _rotations(words.inverse(s)):
        for piece_len in range(min(m - 1, len(r)), (m + min_extra - 1) // 2, -1):
            piece = z[:piece_len]
            for k in range(len(r)):
                if doubled[k:k + piece_len] == piece:
                    rest = doubled[k + piece_len:k + len(r)]
                    return words.concat(words.inverse(z[piece_len:]), rest)
    return None


def _shorten_step(p):
    for i, r in enumerate(p.relators):
        for j, s in enumerate(p.relators):
            if i == j or len(s) > len(r):
                continue
            new = _rewrite_once(r, s)
            if new is not None and len(words.cyclic_reduce(new)) < len(r):
                return p.replace_relator(i, new, f"rewritten with relator {j}")
    return None


# -- pass 4: bounded consequence detection ---------------------------------

def _rewrite_variants(r, s):
    """All one-step rewrites of cyclic relator ``r`` by relator ``s``.

    Shortening and length-preserving replacements are both produced;
    anything longer is not.
    """
    m = len(s)
    out = []
    if m < 2 or not r:
        return out
    doubled = r + r
    for z in _rotations(s) + _rotations(words.inverse(s)):
        for piece_len in range(min(m - 1, len(r)), (m - 1) // 2, -1):
            piece = z[:piece_len]
            for k in range(len(r)):
                if doubled[k:k + piece_len] == piece:
                    rest = doubled[k + piece_len:k + len(r)]
                    out.append(words.concat(words.inverse(z[piece_len:]), rest))
    return out


def _trivializes(target, others, beam=_SEARCH_BEAM, depth=_SEARCH_DEPTH):
    """Bounded search showing ``target`` is a consequence of ``others``.

    Breadth-limited rewriting that also admits length-preserving steps;
    states are deduplicated by cyclic normal form.
    """
    rules = [s for s in others if s]
    if not rules:
        return False
    start = words.cyclic_normal_form(target)
    if not start:
        return True
    frontier = [start]
    seen = {start}
    for _ in range(depth):
        next_frontier = []
        for w in frontier:
            for s in rules:
                if len(s) > 2 * len(w):
                    continue
                for new in _rewrite_variants(w, s):
                    key = words.cyclic_normal_form(new)
                    if not key:
                        return True
                    if key not in seen:
                        seen.add(key)
                        next_frontier.append(key)
        next_frontier.sort(key=lambda u: (len(u), u))
        frontier = next_frontier[:beam]
        if not frontier:
            return False
    return False


def _consequence_step(p):
    if len(p.relators) < 2:
        return None
    order = sorted(range(len(p.relators)),
                   key=lambda i: (-len(p.relators[i]), i))
    for i in order:
        others = p.relators[:i] + p.relators[i + 1:]
        if _trivializes(p.relators[i], others):
            return p.remove_relator(i, "consequence of the others")
    return None
