"""Seifert's algorithm on diagrams: circles, valency, Seifert graphs,
canonical Euler characteristic, Bennequin numbers, and the Murasugi-sum
decomposition into special diagrams.

Seifert circles are the orbits of the oriented smoothing of every crossing.
Interior/exterior questions (separating circles, special summands) are
answered on the region structure of the all-smoothed picture, which is
obtained from the diagram's faces by merging the two channel corners of
each crossing.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagram import Diagram, DiagramError, SEIFERT_ARC


@dataclass(frozen=True)
class SeifertData:
    circles: tuple              # tuples of out-darts, one per circle
    s: int                      # circle count (free loops included)
    circle_of_dart: tuple       # dart -> circle index
    crossing_pair: dict         # crossing -> frozenset of 2 circle indices
    valency: tuple              # circle index -> number of adjacent crossings


def seifert(D: Diagram) -> SeifertData:
    """Run Seifert's algorithm: orbits of edges under the oriented smoothing."""
    n = D.n
    circle_of = [None] * (4 * n)
    circles = []
    for d0 in D.out_darts():
        if circle_of[d0] is not None:
            continue
        idx = len(circles)
        orbit = []
        d = d0
        while circle_of[d] is None:
            circle_of[d] = idx
            circle_of[D.theta[d]] = idx
            orbit.append(d)
            e = D.theta[d]                       # in-dart at next crossing
            c = e >> 2
            d = 4 * c + SEIFERT_ARC[D.signs[c]][e & 3]
        circles.append(tuple(orbit))
    pair = {}
    val = [0] * (len(circles) + D.free_loops)
    for c in range(n):
        outs = (2, 1) if D.signs[c] > 0 else (2, 3)
        a, b = circle_of[4 * c + outs[0]], circle_of[4 * c + outs[1]]
        if a == b:
            raise DiagramError("oriented smoothing joined a circle to itself")
        pair[c] = frozenset((a, b))
        val[a] += 1
        val[b] += 1
    all_circles = list(circles) + [()] * D.free_loops
    return SeifertData(tuple(all_circles), len(all_circles),
                       tuple(circle_of), pair, tuple(val))


def canonical_euler(D: Diagram) -> int:
    """chi(D) = s(D) - c(D)."""
    return seifert(D).s - D.n


def positivity_class(D: Diagram) -> int:
    """Number of negative crossings (0 = positive, 1 = almost positive)."""
    return sum(1 for s in D.signs if s < 0)


@dataclass(frozen=True)
class SeifertGraph:
    vertices: int
    edges: tuple                # (circle_a, circle_b, sign, crossing) per edge
    reduced: bool

    def b1(self):
        comp = self.component_count()
        return len(self.edges) - self.vertices + comp

    def component_count(self):
        parent = list(range(self.vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b, _, _ in self.edges:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
        return len({find(v) for v in range(self.vertices)})

    def adjacency_pairs(self):
        return {frozenset((a, b)) for a, b, _, _ in self.edges}


def seifert_graph(D: Diagram) -> SeifertGraph:
    data = seifert(D)
    edges = []
    for c in range(D.n):
        a, b = sorted(data.crossing_pair[c])
        edges.append((a, b, D.signs[c], c))
    return SeifertGraph(data.s, tuple(edges), reduced=False)


def reduced_seifert_graph(D: Diagram) -> SeifertGraph:
    """Collapse parallel edges; adjacency is preserved."""
    full = seifert_graph(D)
    seen = {}
    for a, b, sign, c in full.edges:
        seen.setdefault(frozenset((a, b)), (a, b, sign, c))
    return SeifertGraph(full.vertices, tuple(seen.values()), reduced=True)


def betti1(g: SeifertGraph) -> int:
    return g.b1()


def bennequin(D: Diagram) -> int:
    """b(D) = w(D) - s(D) + 1."""
    return D.writhe() - seifert(D).s + 1


def rudolph_bennequin(D: Diagram) -> int:
    """rb(D) = b(D) + 2 s_-(D), where s_- counts >=2-valent Seifert circles
    whose adjacent non-nugatory crossings are all negative."""
    data = seifert(D)
    nug = D.nugatory_crossings()
    bad = [False] * data.s
    relevant = [0] * data.s
    for c in range(D.n):
        if c in nug:
            continue
        for circ in data.crossing_pair[c]:
            relevant[circ] += 1
            if D.signs[c] > 0:
                bad[circ] = True
    s_minus = sum(1 for i in range(data.s)
                  if data.valency[i] >= 2 and not bad[i])
    return bennequin(D) + 2 * s_minus


# -- regions of the all-smoothed picture --------------------------------------


def _region_structure(D: Diagram):
    """Union-find the diagram's faces across the channel corners of every
    crossing.  Returns (region_of_face, region adjacency list as
    (region_a, region_b, circle) triples, region holding each crossing)."""
    nf = len(D.faces())
    parent = list(range(nf))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    channel = {}
    for c in range(D.n):
        # corners merged by the oriented smoothing (the crossing's channel)
        j1, j2 = (1, 3) if D.signs[c] > 0 else (0, 2)
        f1, f2 = D.corner_face(c, j1), D.corner_face(c, j2)
        channel[c] = (f1, f2)
        a, b = find(f1), find(f2)
        if a != b:
            parent[a] = b
    region_of_face = [find(f) for f in range(nf)]
    data = seifert(D)
    fo = D.face_of_dart()
    adj = set()
    for d in range(4 * D.n):
        circ = data.circle_of_dart[d]
        r1 = region_of_face[fo[d]]
        r2 = region_of_face[fo[D.theta[d]]]
        adj.add((min(r1, r2), max(r1, r2), circ))
    crossing_region = {c: region_of_face[channel[c][0]] for c in range(D.n)}
    return region_of_face, sorted(adj), crossing_region, data


def separating_circles(D: Diagram) -> set:
    """Seifert circles with crossings on both sides."""
    if not D.is_connected():
        raise DiagramError("separating circles need a connected diagram")
    return {circ for circ, _ in _separating_with_sides(D)}


def _separating_with_sides(D):
    """Yield (circle, side-assignment) for each separating circle; the side
    assignment maps each crossing to 0/1."""
    _, adj, crossing_region, data = _region_structure(D)
    regions = sorted({r for a, b, _ in adj for r in (a, b)}
                     | set(crossing_region.values()))
    out = []
    for circ in range(data.s):
        parent = {r: r for r in regions}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b, cc in adj:
            if cc == circ:
                continue
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
        sides = {}
        for c, r in crossing_region.items():
            sides[c] = find(r)
        kinds = sorted(set(sides.values()))
        if len(kinds) == 2:
            out.append((circ, {c: kinds.index(v) for c, v in sides.items()}))
        elif len(kinds) > 2:
            raise DiagramError("circle removal split regions into more than "
                               "two sides; map corrupted")
    return out


def is_special(D: Diagram) -> bool:
    """No separating Seifert circles."""
    return not separating_circles(D)


def is_special_alternating(D: Diagram) -> bool:
    """Special and positive (equivalently special and alternating)."""
    return positivity_class(D) == 0 and is_special(D)


@dataclass
class MurasugiDecomposition:
    summands: list              # special Diagrams
    join_tree: object           # nested ("leaf", i) / ("join", left, right)
    separating_found: int = 0


def special_summands(D: Diagram) -> MurasugiDecomposition:
    """Murasugi-sum decomposition along separating Seifert circles.

    Each summand keeps one side of a separating circle; the other side is
    removed by smoothing all its crossings and dropping the resulting
    crossing-free loops (closing the circle with a trivial arc).
    """
    if not D.is_connected():
        raise DiagramError("Murasugi decomposition needs a connected diagram")
    summands = []
    joins = [0]

    def cut_side(diagram, cross_ids):
        """Smooth away every crossing not in cross_ids, drop free loops."""
        out = diagram
        for c in sorted(set(range(diagram.n)) - set(cross_ids), reverse=True):
            out = out.smooth_oriented(c)
        return Diagram(out.signs, out.theta, 0)

    def recurse(diagram):
        found = _separating_with_sides(diagram)
        if not found:
            i = len(summands)
            summands.append(diagram)
            return ("leaf", i)
        joins[0] += 1
        _, sides = found[0]
        left = cut_side(diagram, [c for c, s in sides.items() if s == 0])
        right = cut_side(diagram, [c for c, s in sides.items() if s == 1])
        return ("join", recurse(left), recurse(right))

    tree = recurse(D)
    return MurasugiDecomposition(summands, tree, joins[0])
