"""Oriented link diagrams as combinatorial maps.

A diagram with n crossings is stored as 4n darts.  Dart 4c+s is the end of
an edge sitting in slot s of crossing c, where slots run counterclockwise
and slot 0 is always the incoming under-strand.  `theta` is the edge
involution pairing the two darts of each edge, and the rotation at a
crossing is slot -> slot+1 (mod 4).

Conventions fixed here and relied on everywhere else:

* slot 0 = incoming under, slot 2 = outgoing under;
* the over-strand enters at slot 3 for a positive crossing and at slot 1
  for a negative one (so sign = +1 iff over_in == 3);
* the A-splitting joins slots (0,1) and (2,3), the B-splitting joins
  (1,2) and (3,0); the oriented (Seifert) smoothing is the A-splitting at
  positive crossings and the B-splitting at negative ones;
* faces are the orbits of d -> rotate(theta(d)); a connected diagram must
  have exactly crossings+2 of them (Euler), which doubles as the
  planarity check for parsed input.

Crossing-free unknot components are carried in a `free_loops` counter.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass


class DiagramError(ValueError):
    pass


class NonReducedError(DiagramError):
    pass


class GenerationError(DiagramError):
    pass


def _rot(d, k=1):
    return (d & ~3) | ((d + k) & 3)


# in-slot -> out-slot of the oriented smoothing, by crossing sign
SEIFERT_ARC = {1: {0: 1, 3: 2}, -1: {0: 3, 1: 2}}
# undirected split pairings (slot -> slot)
A_SPLIT = {0: 1, 1: 0, 2: 3, 3: 2}
B_SPLIT = {1: 2, 2: 1, 3: 0, 0: 3}


class Diagram:
    """Immutable oriented link diagram."""

    def __init__(self, signs, theta, free_loops=0, validate=True):
        self.signs = tuple(signs)
        self.theta = tuple(theta)
        self.free_loops = free_loops
        self._cache = {}
        if validate:
            self._validate()

    # -- basic structure ------------------------------------------------

    @property
    def n(self):
        return len(self.signs)

    def over_in(self, c):
        return 3 if self.signs[c] > 0 else 1

    def is_in_dart(self, d):
        s = d & 3
        return s == 0 or s == self.over_in(d >> 2)

    def out_darts(self):
        return [d for d in range(4 * self.n) if not self.is_in_dart(d)]

    def _validate(self):
        n = self.n
        th = self.theta
        if len(th) != 4 * n:
            raise DiagramError("theta length must be 4 * crossings")
        for d in range(4 * n):
            e = th[d]
            if e is None or not 0 <= e < 4 * n or th[e] != d or e == d:
                raise DiagramError("theta is not a fixed-point-free involution")
            if self.is_in_dart(d) == self.is_in_dart(e):
                raise DiagramError("orientation inconsistency: edge with two "
                                   "heads or two tails")
        if n:
            comp = self._graph_components()
            sizes = {}
            for c in range(n):
                sizes[comp[c]] = sizes.get(comp[c], 0) + 1
            fcomp = {}
            for f in self.faces():
                k = comp[f[0] >> 2]
                fcomp[k] = fcomp.get(k, 0) + 1
            for k, sz in sizes.items():
                if fcomp.get(k, 0) != sz + 2:
                    raise DiagramError(
                        f"not planar: component with {sz} crossings has "
                        f"{fcomp.get(k, 0)} faces (expected {sz + 2})")

    def _graph_components(self):
        """Crossing -> representative over the underlying 4-valent graph."""
        n = self.n
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for d in range(4 * n):
            a, b = find(d >> 2), find(self.theta[d] >> 2)
            if a != b:
                parent[a] = b
        return [find(c) for c in range(n)]

    def __eq__(self, other):
        return (isinstance(other, Diagram) and self.signs == other.signs
                and self.theta == other.theta
                and self.free_loops == other.free_loops)

    def __hash__(self):
        return hash((self.signs, self.theta, self.free_loops))

    def __repr__(self):
        return f"<Diagram c={self.n} w={self.writhe()} loops={self.free_loops}>"

    def to_json(self):
        return {"signs": list(self.signs), "theta": list(self.theta),
                "free_loops": self.free_loops}

    @classmethod
    def from_json(cls, data):
        return cls(data["signs"], data["theta"], data.get("free_loops", 0))

    # -- counts ----------------------------------------------------------

    def writhe(self):
        return sum(self.signs)

    def crossing_number(self):
        return self.n

    def negative_crossings(self):
        return [c for c in range(self.n) if self.signs[c] < 0]

    def faces(self):
        """Faces as tuples of darts (orbits of rotate . theta)."""
        if "faces" in self._cache:
            return self._cache["faces"]
        seen = [False] * (4 * self.n)
        out = []
        for d0 in range(4 * self.n):
            if seen[d0]:
                continue
            orbit = []
            d = d0
            while not seen[d]:
                seen[d] = True
                orbit.append(d)
                d = _rot(self.theta[d])
            out.append(tuple(orbit))
        self._cache["faces"] = out
        return out

    def face_of_dart(self):
        if "face_of" in self._cache:
            return self._cache["face_of"]
        fo = [0] * (4 * self.n)
        for i, f in enumerate(self.faces()):
            for d in f:
                fo[d] = i
        self._cache["face_of"] = fo
        return fo

    def corner_face(self, c, j):
        """Face at the corner between slots j and j+1 of crossing c."""
        return self.face_of_dart()[4 * c + ((j + 1) & 3)]

    # -- strands ----------------------------------------------------------

    def next_along_strand(self, d):
        """From an out-dart, cross its edge and pass straight through the
        next crossing; returns the next out-dart."""
        return _rot(self.theta[d], 2)

    def strand_orbits(self):
        seen = set()
        orbits = []
        for d0 in self.out_darts():
            if d0 in seen:
                continue
            orbit = []
            d = d0
            while d not in seen:
                seen.add(d)
                orbit.append(d)
                d = self.next_along_strand(d)
            orbits.append(tuple(orbit))
        return orbits

    def components(self):
        """Number of link components."""
        return len(self.strand_orbits()) + self.free_loops

    def is_connected(self):
        if self.n == 0:
            return self.free_loops == 1
        if self.free_loops:
            return False
        return len(set(self._graph_components())) == 1

    def is_split_diagram(self):
        return (self.n + self.free_loops) > 0 and not self.is_connected()

    def nugatory_crossings(self):
        """Crossings some face touches in two opposite corners."""
        out = set()
        for c in range(self.n):
            if (self.corner_face(c, 0) == self.corner_face(c, 2)
                    or self.corner_face(c, 1) == self.corner_face(c, 3)):
                out.add(c)
        return out

    # -- moves -------------------------------------------------------------

    def mirror(self):
        return self._relabel([self.over_in(c) for c in range(self.n)])

    def switch_crossing(self, c):
        if not 0 <= c < self.n:
            raise DiagramError(f"no crossing {c}")
        offs = [0] * self.n
        offs[c] = self.over_in(c)
        return self._relabel(offs)

    def _relabel(self, offsets):
        """Rotate the slot labels of each crossing by its offset.  An offset
        equal to over_in swaps over and under there, flipping the sign."""
        n = self.n

        def nd(d):
            c, s = d >> 2, d & 3
            return 4 * c + ((s - offsets[c]) & 3)

        theta = [0] * (4 * n)
        for d in range(4 * n):
            theta[nd(d)] = nd(self.theta[d])
        signs = [(-s if offsets[c] in (1, 3) else s)
                 for c, s in enumerate(self.signs)]
        return Diagram(signs, theta, self.free_loops, validate=False)

    def smooth_oriented(self, c):
        """Replace crossing c by its oriented smoothing."""
        if not 0 <= c < self.n:
            raise DiagramError(f"no crossing {c}")
        arc = SEIFERT_ARC[self.signs[c]]
        removed = {4 * c + s for s in range(4)}
        new_theta = {}
        for d in range(4 * self.n):
            if d in removed or self.is_in_dart(d):
                continue
            x = self.theta[d]
            if x not in removed:
                continue
            while x in removed:
                x = self.theta[4 * c + arc[x & 3]]
            new_theta[d] = x
        loops = self.free_loops
        # smoothing arcs never reached from outside close into free loops
        seen = set()
        for s0 in (4 * c + s for s in arc):
            if s0 in seen:
                continue
            x, chain, closed = s0, [], False
            while x in removed:
                chain.append(x)
                x = self.theta[4 * c + arc[x & 3]]
                if x == s0:
                    closed = True
                    break
            if closed:
                seen.update(chain)
                loops += 1

        def nd(d):
            return d - 4 if (d >> 2) > c else d

        n2 = self.n - 1
        theta2 = [None] * (4 * n2)
        for d in range(4 * self.n):
            if d in removed:
                continue
            t = new_theta.get(d)
            if t is None:
                t = self.theta[d]
                if t in removed:
                    continue  # rebuilt from the out-dart side
            theta2[nd(d)] = nd(t)
            theta2[nd(t)] = nd(d)
        signs2 = [s for i, s in enumerate(self.signs) if i != c]
        return Diagram(signs2, theta2, loops, validate=False)

    # -- canonical form ------------------------------------------------------

    def canonical_code(self):
        """Relabeling-invariant code: per connected component, the minimum
        over start crossings of the BFS-relabeled connection table.  Slot
        numbering is intrinsic, so only crossing labels vary."""
        if "code" in self._cache:
            return self._cache["code"]
        n = self.n
        comp = self._graph_components() if n else []
        groups = {}
        for c in range(n):
            groups.setdefault(comp[c], []).append(c)
        comp_codes = []
        for crossings in groups.values():
            best = None
            for start in crossings:
                order = [start]
                pos = {start: 0}
                i = 0
                while i < len(order):
                    cc = order[i]
                    i += 1
                    for s in range(4):
                        nb = self.theta[4 * cc + s] >> 2
                        if nb not in pos:
                            pos[nb] = len(order)
                            order.append(nb)
                code = tuple(
                    (self.signs[cc],)
                    + tuple(x for s in range(4)
                            for x in (pos[self.theta[4 * cc + s] >> 2],
                                      self.theta[4 * cc + s] & 3))
                    for cc in order)
                if best is None or code < best:
                    best = code
            comp_codes.append(best)
        comp_codes.sort()
        result = (tuple(comp_codes), self.free_loops)
        self._cache["code"] = result
        return result


# -- module-level operation aliases -------------------------------------------


def writhe(D):
    return D.writhe()


def crossing_number(D):
    return D.n


def mirror(D):
    return D.mirror()


def switch_crossing(D, c):
    return D.switch_crossing(c)


def smooth_oriented(D, c):
    return D.smooth_oriented(c)


def is_connected(D):
    return D.is_connected()


def is_split_diagram(D):
    return D.is_split_diagram()


def nugatory_crossings(D):
    return D.nugatory_crossings()


# -- parsing -------------------------------------------------------------------


_PD_RE = re.compile(r"[Xx]\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]")


def parse_pd(text):
    """Parse PD notation: records X[a,b,c,d] list edge labels
    counterclockwise from the incoming under-strand; the over-strand
    direction is inferred from edge-label succession."""
    if not text or not text.strip():
        raise DiagramError("empty PD input")
    records = [tuple(int(x) for x in m.groups()) for m in _PD_RE.finditer(text)]
    if not records:
        raise DiagramError(f"no X[a,b,c,d] records found in {text!r}")
    occurrences = {}
    for c, rec in enumerate(records):
        for s, lab in enumerate(rec):
            occurrences.setdefault(lab, []).append((c, s))
    for lab, occ in occurrences.items():
        if len(occ) != 2:
            raise DiagramError(
                f"edge label {lab} appears {len(occ)} times (expected 2)")
    # orientation: propagate the under-strand constraints (slot 0 in, slot 2
    # out) through shared edges; only over-strands that never dive under
    # anywhere need the label-succession rule
    n = len(records)
    inflag = {}           # (crossing, slot) -> True if the edge points in

    def set_flag(c, s, val):
        if (c, s) in inflag:
            if inflag[(c, s)] != val:
                lab = records[c][s]
                raise DiagramError(
                    f"orientation inconsistency at edge label {lab}")
            return
        inflag[(c, s)] = val
        if s in (1, 3):
            set_flag(c, 4 - s, not val)   # over strand: one in, one out
        lab = records[c][s]
        (c1, s1), (c2, s2) = occurrences[lab]
        other = (c2, s2) if (c1, s1) == (c, s) else (c1, s1)
        set_flag(other[0], other[1], not val)

    for c in range(n):
        set_flag(c, 0, True)
        set_flag(c, 2, False)
    for c, (a, b, cc, d) in enumerate(records):
        if (c, 1) in inflag:
            continue
        # untouched over-strand: fall back to label succession (labels
        # increase along a component, wrapping from largest to smallest)
        if d == b + 1 or (b != d + 1 and b > d):
            set_flag(c, 1, True)
        else:
            set_flag(c, 3, True)
    signs = []
    for c in range(n):
        if inflag[(c, 1)] == inflag[(c, 3)]:
            raise DiagramError("orientation inconsistency at a crossing")
        signs.append(1 if inflag[(c, 3)] else -1)
    theta = [None] * (4 * n)
    for lab, ((c1, s1), (c2, s2)) in occurrences.items():
        if inflag[(c1, s1)] == inflag[(c2, s2)]:
            raise DiagramError(f"orientation inconsistency at edge label {lab}")
        theta[4 * c1 + s1] = 4 * c2 + s2
        theta[4 * c2 + s2] = 4 * c1 + s1
    return Diagram(signs, theta)


@dataclass(frozen=True)
class BraidWord:
    """A braid word: letter i stands for sigma_i, -i for its inverse."""
    strands: int
    letters: tuple

    def __post_init__(self):
        if self.strands < 1:
            raise DiagramError("need at least one strand")
        for x in self.letters:
            if x == 0 or abs(x) > self.strands - 1:
                raise DiagramError(
                    f"letter {x} out of range for {self.strands} strands")

    def writhe(self):
        return sum(1 if x > 0 else -1 for x in self.letters)

    def __str__(self):
        return f"{self.strands}: " + " ".join(str(x) for x in self.letters)


def parse_braid(text):
    """Parse the braid format 's: l1 l2 ... lk'."""
    if not text or not text.strip():
        raise DiagramError("empty braid input")
    head, sep, tail = text.partition(":")
    if not sep:
        raise DiagramError(f"malformed braid {text!r} (missing ':')")
    try:
        strands = int(head.strip())
        letters = tuple(int(t) for t in tail.split())
    except ValueError as exc:
        raise DiagramError(f"malformed braid {text!r}") from exc
    return BraidWord(strands, letters)


def braid_closure(word: BraidWord) -> Diagram:
    """Standard annular closure.  Positive letters give positive crossings
    (the left strand passes under).  Unused strands close into free loops."""
    letters = word.letters
    n = len(letters)
    signs = []
    theta = [None] * (4 * n)
    dangling = [None] * (word.strands + 1)
    first_in = [None] * (word.strands + 1)

    def connect(out_d, in_d):
        theta[out_d] = in_d
        theta[in_d] = out_d

    for k, letter in enumerate(letters):
        i = abs(letter)
        if letter > 0:
            nw, sw, se, ne = 4 * k, 4 * k + 1, 4 * k + 2, 4 * k + 3
            signs.append(1)
        else:
            ne, nw, sw, se = 4 * k, 4 * k + 1, 4 * k + 2, 4 * k + 3
            signs.append(-1)
        for p, top in ((i, nw), (i + 1, ne)):
            if dangling[p] is None:
                first_in[p] = top
            else:
                connect(dangling[p], top)
        dangling[i], dangling[i + 1] = sw, se
    free = 0
    for p in range(1, word.strands + 1):
        if dangling[p] is None:
            free += 1
        else:
            connect(dangling[p], first_in[p])
    return Diagram(signs, theta, free)


def torus_closure(n):
    """Closure of sigma_1^n: the (2,n) torus link diagram."""
    return braid_closure(BraidWord(2, tuple([1] * n)))


# -- composite detection ---------------------------------------------------------


def _components_without(D, skip_darts):
    n = D.n
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for d in range(4 * n):
        if d in skip_darts or D.theta[d] in skip_darts:
            continue
        a, b = find(d >> 2), find(D.theta[d] >> 2)
        if a != b:
            parent[a] = b
    return [find(c) for c in range(n)]


def _find_two_cut(D):
    """A pair of edges on two common faces whose removal separates the
    crossings into two nonempty sides, or None."""
    fo = D.face_of_dart()
    groups = {}
    for d in D.out_darts():
        key = frozenset((fo[d], fo[D.theta[d]]))
        groups.setdefault(key, []).append((d, D.theta[d]))
    for key, edges in groups.items():
        if len(key) < 2 or len(edges) < 2:
            continue
        for i in range(len(edges)):
            for j in range(i + 1, len(edges)):
                e, f = edges[i], edges[j]
                skip = {e[0], e[1], f[0], f[1]}
                comp = _components_without(D, skip)
                if len(set(comp)) != 2:
                    continue
                if comp[e[0] >> 2] == comp[e[1] >> 2]:
                    continue
                if comp[f[0] >> 2] == comp[f[1] >> 2]:
                    continue
                return e, f, comp
    return None


def _split_two_cut(D, e, f, comp):
    """Cut along the two-edge cut and close each side with a trivial arc."""
    out1, in2 = e
    out2, in1 = f
    if comp[out1 >> 2] == comp[out2 >> 2]:
        raise DiagramError("two-cut edges flow the same way")
    halves = []
    for out_d, in_d in ((out1, in1), (out2, in2)):
        side = comp[out_d >> 2]
        cross = [c for c in range(D.n) if comp[c] == side]
        index = {c: i for i, c in enumerate(cross)}

        def nd(d, index=index):
            return 4 * index[d >> 2] + (d & 3)

        theta = [None] * (4 * len(cross))
        for d in range(4 * D.n):
            t = D.theta[d]
            if (d >> 2) in index and (t >> 2) in index and d < t:
                if {d, t} & {out1, out2, in1, in2}:
                    continue
                theta[nd(d)] = nd(t)
                theta[nd(t)] = nd(d)
        theta[nd(out_d)] = nd(in_d)
        theta[nd(in_d)] = nd(out_d)
        halves.append(Diagram([D.signs[c] for c in cross], theta))
    return halves


def prime_factor_count(D: Diagram) -> int:
    """Number of prime summands of a connected reduced diagram."""
    if not D.is_connected():
        raise DiagramError("prime factorization needs a connected diagram")
    if D.nugatory_crossings():
        raise NonReducedError("diagram is not reduced; nugatory crossings "
                              "distort the prime factor count")
    return _prime_count(D)


def _prime_count(D):
    if D.n == 0:
        return 0
    cut = _find_two_cut(D)
    if cut is None:
        return 1
    d1, d2 = _split_two_cut(D, *cut)
    return _prime_count(d1) + _prime_count(d2)


# -- pretzel and torus families ----------------------------------------------------


def pretzel_diagram(twists, orientation_scheme="reverse"):
    """Standard pretzel diagram with the requested per-band strand scheme.

    Bands are vertical twist regions joined cyclically (top ends in a row,
    bottom ends in a row).  In a `reverse` band the two strands are
    antiparallel; in a `parallel` band they run the same way.  Over/under
    markings are chosen so the skein sign of every crossing in band j is
    sign(twists[j]).
    """
    k = len(twists)
    if k < 2:
        raise DiagramError("a pretzel needs at least two bands")
    if any(t == 0 for t in twists):
        raise DiagramError("zero twist bands are not allowed")
    if isinstance(orientation_scheme, str):
        schemes = [orientation_scheme] * k
    else:
        schemes = list(orientation_scheme)
    if len(schemes) != k or any(s not in ("reverse", "parallel")
                                for s in schemes):
        raise DiagramError(
            "orientation scheme must give 'reverse' or 'parallel' per band")
    DOWN, UP = 0, 1

    def flip(d):
        return 1 - d

    dL = [None] * k
    dR = [None] * k
    dL[0] = DOWN
    for j in range(k):
        dR[j] = flip(dL[j]) if schemes[j] == "reverse" else dL[j]
        if j + 1 < k:
            dL[j + 1] = flip(dR[j])
    if dL[0] != flip(dR[k - 1]):
        raise DiagramError("orientation scheme is not consistently orientable")
    bottoms = [(dL[j], dR[j]) if abs(twists[j]) % 2 == 0 else (dR[j], dL[j])
               for j in range(k)]
    for j in range(k):
        if bottoms[(j + 1) % k][0] != flip(bottoms[j][1]):
            raise DiagramError(
                "orientation scheme is not consistently orientable "
                "(bottom closure clashes with the twist parities)")

    signs = []
    theta = [None] * (4 * sum(abs(t) for t in twists))

    def connect(a, b):
        theta[a] = b
        theta[b] = a

    ccw = ("TR", "TL", "BL", "BR")  # counterclockwise end order
    next_c = 0
    band_top = []
    band_bottom = []
    for j, t in enumerate(twists):
        dl, dr = dL[j], dR[j]
        target = 1 if t > 0 else -1
        top_ends = None
        prev = None
        for _ in range(abs(t)):
            c = next_c
            next_c += 1
            ins = ("TL" if dl == DOWN else "BR", "TR" if dr == DOWN else "BL")
            placed = None
            for under in ins:
                other = ins[0] if ins[1] == under else ins[1]
                gap = (ccw.index(other) - ccw.index(under)) % 4
                if gap in (1, 3) and (1 if gap == 3 else -1) == target:
                    placed = under
                    break
            if placed is None:
                raise DiagramError("cannot realize requested band sign")
            base = ccw.index(placed)
            slot_of = {ccw[(base + s) % 4]: 4 * c + s for s in range(4)}
            signs.append(target)
            if prev is None:
                top_ends = (slot_of["TL"], slot_of["TR"])
            else:
                connect(prev[0], slot_of["TL"])
                connect(prev[1], slot_of["TR"])
            prev = (slot_of["BL"], slot_of["BR"])
            dl, dr = dr, dl
        band_top.append(top_ends)
        band_bottom.append(prev)
    for j in range(k):
        nxt = (j + 1) % k
        connect(band_top[j][1], band_top[nxt][0])
        connect(band_bottom[j][1], band_bottom[nxt][0])
    return Diagram(signs, theta)


# -- random corpus generators ---------------------------------------------------------


def random_positive_braidword(rng, target_c):
    """Random positive braid word whose closure is connected and reduced:
    every generator index in range occurs at least twice."""
    if target_c < 2:
        raise GenerationError("need at least 2 crossings")
    g = rng.randint(1, min(4, max(1, target_c // 2)))
    letters = []
    for i in range(1, g + 1):
        letters += [i, i]
    while len(letters) < target_c:
        letters.append(rng.randint(1, g))
    rng.shuffle(letters)
    return BraidWord(g + 1, tuple(letters))


def random_positive_diagram(seed, target_c, flavor="mixed"):
    """Deterministic random connected reduced positive diagram.

    `flavor`: 'braid' closes a random positive braid word; 'plane' takes the
    medial diagram of a random plane even graph (richer reduced Seifert
    graphs); 'mixed' chooses per seed.
    """
    rng = random.Random(f"positive:{seed}:{target_c}")
    if flavor == "mixed":
        flavor = rng.choice(("braid", "plane"))
    if flavor == "braid":
        return braid_closure(random_positive_braidword(rng, target_c))
    if flavor == "plane":
        from . import evgraph
        G = evgraph.random_plane_even_graph(rng, target_c)
        return evgraph.medial_diagram(G)
    raise GenerationError(f"unknown flavor {flavor!r}")


def random_almost_positive_diagram(seed, target_c, force_parallel_crossing,
                                   flavor="mixed", max_tries=64):
    """Random connected reduced almost positive diagram.

    Generates a positive diagram and switches one crossing, chosen so that a
    positive crossing joining the same two Seifert circles as the switched
    one exists iff `force_parallel_crossing`.
    """
    from .seifert import seifert as seifert_data
    rng = random.Random(
        f"almost:{seed}:{target_c}:{int(force_parallel_crossing)}")
    for _ in range(max_tries):
        D = random_positive_diagram(rng.getrandbits(32), target_c, flavor)
        pairs = seifert_data(D).crossing_pair
        mult = {}
        for p in pairs.values():
            mult[p] = mult.get(p, 0) + 1
        candidates = [c for c in range(D.n)
                      if (mult[pairs[c]] >= 2) == force_parallel_crossing]
        if not candidates:
            continue
        return D.switch_crossing(rng.choice(candidates))
    raise GenerationError(
        f"no almost positive diagram with force_parallel_crossing="
        f"{force_parallel_crossing} after {max_tries} tries "
        f"(seed={seed}, target_c={target_c})")
