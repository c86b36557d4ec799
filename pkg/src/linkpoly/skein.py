"""HOMFLY skein polynomial by skein-tree resolution, with the derived
Jones and Alexander polynomials and the Morton degree bookkeeping.

Convention: l^{-1} P(+) + l P(-) = -m P(0) with P(unknot) = 1 (Lickorish
and Millett's polynomial with l and l^{-1} interchanged).  A split unknot
multiplies P by delta = -(l + l^{-1}) m^{-1}, the unique value consistent
with the relation.

Two engines share one memo table keyed by canonical codes:

* the diagram engine makes the diagram descending along a canonical strand
  walk, resolving the first crossing first reached on the under-strand;
  kinks, reducible bigons, split unions and crossing-free loops are
  stripped before every node;
* the braid engine works on words: cyclic free cancellation, splitting at
  unused generator indices, connected-sum splitting at once-used indices,
  then skein resolution at negative letters and at clasps of positive
  words (searching braid-relation rewrites for a clasp when none is
  visible), falling back to the diagram engine if the search fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagram import (BraidWord, Diagram, DiagramError, braid_closure)
from .laurent import Laurent, Laurent2, homfly_to_alexander, homfly_to_jones
from .seifert import bennequin, canonical_euler

DEFAULT_SKEIN_BUDGET = 400_000
_MEMO_LIMIT = 600_000

DELTA = Laurent2({(4, -4): -1, (-4, -4): -1})


class SkeinBudgetError(RuntimeError):
    def __init__(self, nodes, detail=""):
        self.nodes = nodes
        super().__init__(
            f"skein resolution budget exhausted after {nodes} nodes{detail}")


class _Ctx:
    def __init__(self, budget):
        self.budget = budget
        self.nodes = 0

    def tick(self, detail=""):
        self.nodes += 1
        if self.nodes > self.budget:
            raise SkeinBudgetError(self.nodes, detail)


_memo_diagram = {}
_memo_braid = {}
_delta_powers = {0: Laurent2.one()}


def _delta_pow(k):
    if k not in _delta_powers:
        _delta_powers[k] = _delta_pow(k - 1) * DELTA
    return _delta_powers[k]


def clear_caches():
    _memo_diagram.clear()
    _memo_braid.clear()


def _memo_guard(table):
    if len(table) > _MEMO_LIMIT:
        table.clear()


# -- diagram-level simplification ------------------------------------------------


def _remove_straight(D, removed_crossings):
    """Delete the given crossings, reconnecting every strand straight
    through them (the Reidemeister I/II splice).  Strand cycles that never
    leave the deleted set become free loops."""
    removed = {4 * c + s for c in removed_crossings for s in range(4)}

    def through(x):
        # in-dart -> theta of the straight-through out-dart
        return D.theta[(x & ~3) | ((x + 2) & 3)]

    new_theta = {}
    for d in range(4 * D.n):
        if d in removed or D.is_in_dart(d):
            continue
        x = D.theta[d]
        if x not in removed:
            continue
        while x in removed:
            x = through(x)
        new_theta[d] = x
    loops = D.free_loops
    seen = set()
    for s0 in removed:
        if s0 in seen or not D.is_in_dart(s0):
            continue
        x, chain, closed = s0, [], False
        while x in removed:
            chain.append(x)
            x = through(x)
            if x == s0:
                closed = True
                break
        if closed:
            seen.update(chain)
            loops += 1
    keep = [c for c in range(D.n) if c not in removed_crossings]
    index = {c: i for i, c in enumerate(keep)}

    def nd(d):
        return 4 * index[d >> 2] + (d & 3)

    theta2 = [None] * (4 * len(keep))
    for d in range(4 * D.n):
        if d in removed:
            continue
        t = new_theta.get(d)
        if t is None:
            t = D.theta[d]
            if t in removed:
                continue
        theta2[nd(d)] = nd(t)
        theta2[nd(t)] = nd(d)
    return Diagram([D.signs[c] for c in keep], theta2, loops, validate=False)


def _dart_is_over(d):
    return (d & 3) in (1, 3)


def _simplify_once(D):
    """One Reidemeister I or II removal, or None."""
    for f in D.faces():
        if len(f) == 1:
            return _remove_straight(D, {f[0] >> 2})
        if len(f) == 2:
            e1, e2 = f
            c1, c2 = e1 >> 2, e2 >> 2
            if c1 == c2:
                continue
            edge_a = (e1, D.theta[e1])
            edge_b = (e2, D.theta[e2])
            a_over = [_dart_is_over(d) for d in edge_a]
            b_over = [_dart_is_over(d) for d in edge_b]
            if (all(a_over) and not any(b_over)) or \
                    (all(b_over) and not any(a_over)):
                return _remove_straight(D, {c1, c2})
    return None


def _atoms(D):
    """Split into connected crossing-bearing pieces; returns
    (pieces, number_of_free_loop_atoms)."""
    loops = D.free_loops
    if D.n == 0:
        return [], loops
    comp = D._graph_components()
    reps = sorted(set(comp))
    if len(reps) == 1:
        piece = D if loops == 0 else Diagram(D.signs, D.theta, 0,
                                             validate=False)
        return [piece], loops
    pieces = []
    for r in reps:
        cross = [c for c in range(D.n) if comp[c] == r]
        index = {c: i for i, c in enumerate(cross)}
        theta = [None] * (4 * len(cross))
        for c in cross:
            for s in range(4):
                d = 4 * c + s
                t = D.theta[d]
                theta[4 * index[c] + s] = 4 * index[t >> 2] + (t & 3)
        pieces.append(Diagram([D.signs[c] for c in cross], theta,
                              validate=False))
    return pieces, loops


def _P_diagram(D, ctx):
    """P of an arbitrary diagram: clean, split, recurse."""
    atoms = 0
    leaves = []
    stack = [D]
    while stack:
        X = stack.pop()
        pieces, loops = _atoms(X)
        atoms += loops
        for piece in pieces:
            simpler = _simplify_once(piece)
            if simpler is not None:
                stack.append(simpler)
            else:
                atoms += 1
                leaves.append(piece)
    if atoms == 0:
        raise DiagramError("P of the empty diagram is undefined")
    out = _delta_pow(atoms - 1)
    for leaf in leaves:
        out = out * _P_connected(leaf, ctx)
    return out


def _first_bad_crossing(D):
    """Walk the strands; return the first crossing first reached on the
    under-strand, or None if the diagram is descending."""
    seen_cross = set()
    seen_darts = set()
    for d0 in D.out_darts():
        if d0 in seen_darts:
            continue
        d = d0
        while d not in seen_darts:
            seen_darts.add(d)
            e = D.theta[d]
            c = e >> 2
            if c not in seen_cross:
                seen_cross.add(c)
                if (e & 3) == 0:
                    return c
            d = (e & ~3) | ((e + 2) & 3)
    return None


def _P_connected(D, ctx):
    """P of a connected, loop-free, RI/RII-clean diagram."""
    if D.n == 0:
        return Laurent2.one()
    key = D.canonical_code()
    hit = _memo_diagram.get(key)
    if hit is not None:
        return hit
    ctx.tick(f" (diagram node, {D.n} crossings)")
    c = _first_bad_crossing(D)
    if c is None:
        out = _delta_pow(D.components() - 1)
    else:
        p0 = _P_diagram(D.smooth_oriented(c), ctx)
        px = _P_diagram(D.switch_crossing(c), ctx)
        if D.signs[c] > 0:
            # P+ = -l m P0 - l^2 P-
            out = p0.monomial_mul(-1, 1, 1) + px.monomial_mul(-1, 2, 0)
        else:
            # P- = -1/l m P0 - 1/l^2 P+
            out = p0.monomial_mul(-1, -1, 1) + px.monomial_mul(-1, -2, 0)
    _memo_guard(_memo_diagram)
    _memo_diagram[key] = out
    return out


def homfly(D: Diagram, budget=DEFAULT_SKEIN_BUDGET) -> Laurent2:
    """Skein polynomial P(l, m) of the link presented by the diagram."""
    import sys
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 20000))
    try:
        return _P_diagram(D, _Ctx(budget))
    finally:
        sys.setrecursionlimit(old)


# -- braid engine ------------------------------------------------------------------


def _cyclic_free_reduce(word):
    changed = True
    word = list(word)
    while changed:
        changed = False
        out = []
        for x in word:
            if out and out[-1] == -x:
                out.pop()
                changed = True
            else:
                out.append(x)
        while len(out) >= 2 and out[0] == -out[-1]:
            out = out[1:-1]
            changed = True
        word = out
    return tuple(word)


def _braid_key(s, word):
    if not word:
        return (s, ())
    variants = []
    flip = tuple((1 if x > 0 else -1) * (s - abs(x)) for x in word)
    for w in (word, word[::-1], flip, flip[::-1]):
        for r in range(len(w)):
            variants.append(w[r:] + w[:r])
    return (s, min(variants))


def _braid_P(s, word, ctx):
    word = _cyclic_free_reduce(word)
    if not word:
        return _delta_pow(s - 1)
    used = {}
    for x in word:
        used[abs(x)] = used.get(abs(x), 0) + 1
    # split at an unused generator index: distant split union
    for j in range(1, s):
        if j not in used:
            left = tuple(x for x in word if abs(x) < j)
            right = tuple((1 if x > 0 else -1) * (abs(x) - j)
                          for x in word if abs(x) > j)
            return (DELTA * _braid_P(j, left, ctx)
                    * _braid_P(s - j, right, ctx))
    # connected sum at a once-used index (the crossing is nugatory)
    for j in sorted(used):
        if used[j] == 1:
            left = tuple(x for x in word if abs(x) < j)
            right = tuple((1 if x > 0 else -1) * (abs(x) - j)
                          for x in word if abs(x) > j)
            return _braid_P(j, left, ctx) * _braid_P(s - j, right, ctx)
    key = _braid_key(s, word)
    hit = _memo_braid.get(key)
    if hit is not None:
        return hit
    ctx.tick(f" (braid node, {len(word)} letters)")
    out = None
    negs = [k for k, x in enumerate(word) if x < 0]
    if negs:
        k = negs[0]
        smoothed = word[:k] + word[k + 1:]
        switched = word[:k] + (-word[k],) + word[k + 1:]
        p0 = _braid_P(s, smoothed, ctx)
        px = _braid_P(s, switched, ctx)
        out = p0.monomial_mul(-1, -1, 1) + px.monomial_mul(-1, -2, 0)
    else:
        k = _find_clasp(word)
        if k is None:
            rewritten = _search_clasp_rewrite(word)
            if rewritten is not None:
                out = _braid_P(s, rewritten, ctx)
            else:
                out = _P_diagram(braid_closure(BraidWord(s, word)), ctx)
        else:
            smoothed = word[:k] + word[k + 1:]
            switched = word[:k] + (-word[k],) + word[k + 1:]
            p0 = _braid_P(s, smoothed, ctx)
            px = _braid_P(s, switched, ctx)
            out = p0.monomial_mul(-1, 1, 1) + px.monomial_mul(-1, 2, 0)
    _memo_guard(_memo_braid)
    _memo_braid[key] = out
    return out


def _find_clasp(word):
    n = len(word)
    for k in range(n):
        if word[k] == word[(k + 1) % n] and k + 1 < n:
            return k
    if n >= 2 and word[-1] == word[0]:
        return n - 1  # cyclically adjacent; resolve the last letter
    return None


def _search_clasp_rewrite(word, cap=4096):
    """BFS over cyclic rotations, far commutations and positive braid
    relations looking for a word with an adjacent equal pair."""
    start = word
    seen = {start}
    queue = [start]
    while queue and len(seen) < cap:
        w = queue.pop(0)
        n = len(w)
        neighbors = []
        neighbors.append(w[1:] + w[:1])
        for k in range(n - 1):
            a, b = w[k], w[k + 1]
            if abs(abs(a) - abs(b)) >= 2:
                neighbors.append(w[:k] + (b, a) + w[k + 2:])
        for k in range(n - 2):
            a, b, c = w[k], w[k + 1], w[k + 2]
            if a == c and abs(abs(a) - abs(b)) == 1 and a > 0 and b > 0:
                neighbors.append(w[:k] + (b, a, b) + w[k + 3:])
        for nb in neighbors:
            if nb in seen:
                continue
            if _find_clasp(nb) is not None:
                return nb
            seen.add(nb)
            queue.append(nb)
    return None


def homfly_braid(word: BraidWord, budget=DEFAULT_SKEIN_BUDGET) -> Laurent2:
    """P of the closure of a braid word, via braid-level reductions."""
    import sys
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 20000))
    try:
        return _braid_P(word.strands, tuple(word.letters), _Ctx(budget))
    finally:
        sys.setrecursionlimit(old)


# -- derived polynomials -------------------------------------------------------------


def alexander_symmetric(D: Diagram, budget=DEFAULT_SKEIN_BUDGET,
                        P=None) -> Laurent:
    """Alexander polynomial, centered so Delta(t) = Delta(1/t) up to the
    sign forced for even-component links; Delta(1) = 1 for knots.  Returns
    the zero polynomial for split links."""
    raw = homfly_to_alexander(P if P is not None else homfly(D, budget))
    if not raw:
        return raw
    qmin, qmax = min(raw.terms), max(raw.terms)
    if (qmin + qmax) % 2:
        raise DiagramError("Alexander polynomial cannot be centered")
    centered = raw.shift_quarters(-(qmin + qmax) // 2)
    if all(q % 4 == 0 for q in centered.terms):
        at_one = sum(centered.terms.values())
        if at_one in (1, -1):
            return centered * at_one
    if centered.max_cf() < 0:
        centered = -centered
    return centered


def alexander_nonneg(D: Diagram, budget=DEFAULT_SKEIN_BUDGET,
                     P=None) -> Laurent:
    """Alexander polynomial normalized so min deg = 0 and Delta(0) > 0."""
    raw = homfly_to_alexander(P if P is not None else homfly(D, budget))
    if not raw:
        return raw
    shifted = raw.shift_quarters(-min(raw.terms))
    if shifted.min_cf() < 0:
        shifted = -shifted
    return shifted


@dataclass(frozen=True)
class DegreeRecord:
    mindeg_l: Fraction
    maxdeg_l: Fraction
    mindeg_m: Fraction
    maxdeg_m: Fraction


def degrees(P: Laurent2) -> DegreeRecord:
    if not P:
        raise DiagramError("degrees of the zero polynomial are undefined")
    return DegreeRecord(P.min_deg("l"), P.max_deg("l"),
                        P.min_deg("m"), P.max_deg("m"))


@dataclass(frozen=True)
class MortonReport:
    bennequin: int
    mindeg_l: Fraction
    maxdeg_m: Fraction
    one_minus_chi: int
    bennequin_le_mindeg_l: bool
    maxdeg_m_le_one_minus_chi: bool
    mindeg_l_le_maxdeg_m: bool

    @property
    def all_hold(self):
        return (self.bennequin_le_mindeg_l
                and self.maxdeg_m_le_one_minus_chi
                and self.mindeg_l_le_maxdeg_m)


def morton_report(D: Diagram, budget=DEFAULT_SKEIN_BUDGET, P=None):
    """Morton's inequalities b(D) <= mindeg_l P, maxdeg_m P <= 1 - chi(D),
    and the general mindeg_l P <= maxdeg_m P."""
    if P is None:
        P = homfly(D, budget)
    deg = degrees(P)
    b = bennequin(D)
    omc = 1 - canonical_euler(D)
    return MortonReport(b, deg.mindeg_l, deg.maxdeg_m, omc,
                        b <= deg.mindeg_l, deg.maxdeg_m <= omc,
                        deg.mindeg_l <= deg.maxdeg_m)
