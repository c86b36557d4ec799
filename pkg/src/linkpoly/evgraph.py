"""Even-valence (checkerboard) graphs of special diagrams.

A `PlaneGraph` is a signed multigraph with a rotation system: `rot[v]` lists
the darts (edge, end) counterclockwise around v.  For a special diagram the
even-valence graph has one vertex per non-Seifert-circle region and one edge
per crossing; its cells correspond to the Seifert circles.  The medial
construction inverts this: `medial_diagram` turns any connected plane graph
with even valences back into a special diagram whose crossing signs follow
the edge signs.

The canonical orientation directs every edge so that each cell's boundary
is coherently oriented (implemented by 2-coloring the faces and giving each
edge the direction its black-side face traversal induces).  With it, the
bottom coefficient of the Alexander polynomial of a special alternating
diagram counts arborescences (spanning trees with every edge pointing at
the root), computed exactly by the matrix-tree determinant and checked
against explicit enumeration.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from enum import Enum

from .diagram import Diagram, DiagramError, NonReducedError
from .seifert import (canonical_euler, positivity_class, seifert,
                      separating_circles, special_summands)


class PlaneGraph:
    """Signed plane multigraph with rotation system; optionally directed."""

    def __init__(self, n_vertices, edges, rot, directed=False):
        self.n = n_vertices
        self.edges = [tuple(e) for e in edges]   # (u, v, sign); u->v if directed
        self.rot = [list(r) for r in rot]
        self.directed = directed
        self._check()

    def _check(self):
        seen = {}
        for v, r in enumerate(self.rot):
            for d in r:
                e, end = d
                if seen.setdefault(d, v) != v:
                    raise DiagramError("dart listed twice")
                if self.edges[e][end] != v:
                    raise DiagramError(f"dart {d} listed at wrong vertex")
        for e, (u, v, sign) in enumerate(self.edges):
            for end, w in ((0, u), (1, v)):
                if (e, end) not in seen:
                    raise DiagramError(f"dart ({e},{end}) missing from rotation")

    # -- structure ---------------------------------------------------------

    @property
    def m(self):
        return len(self.edges)

    def vertex_of(self, dart):
        e, end = dart
        return self.edges[e][end]

    def theta(self, dart):
        e, end = dart
        return (e, 1 - end)

    def sigma(self, dart):
        v = self.vertex_of(dart)
        r = self.rot[v]
        return r[(r.index(dart) + 1) % len(r)]

    def degrees(self):
        return [len(r) for r in self.rot]

    def faces(self):
        """Orbits of sigma . theta, as tuples of darts."""
        seen = set()
        out = []
        for v in range(self.n):
            for d0 in self.rot[v]:
                if d0 in seen:
                    continue
                orbit = []
                d = d0
                while d not in seen:
                    seen.add(d)
                    orbit.append(d)
                    d = self.sigma(self.theta(d))
                out.append(tuple(orbit))
        return out

    def euler_ok(self):
        if self.n == 0:
            return True
        return self.n - self.m + len(self.faces()) == 2 and self.is_connected()

    def is_connected(self):
        if self.n <= 1:
            return True
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v, _ in self.edges:
            a, b = find(u), find(v)
            if a != b:
                parent[a] = b
        return len({find(v) for v in range(self.n)}) == 1

    def copy(self):
        return PlaneGraph(self.n, self.edges, self.rot, self.directed)

    def __repr__(self):
        kind = "directed" if self.directed else "undirected"
        return f"<PlaneGraph V={self.n} E={self.m} {kind}>"

    # -- canonical code (map isomorphism up to relabeling) -------------------

    def canonical_code(self, include_direction=None):
        if include_direction is None:
            include_direction = self.directed
        best = None
        darts = [(e, end) for e in range(self.m) for end in (0, 1)]
        for flip in (False, True):
            rot = self.rot if not flip else [list(reversed(r)) for r in self.rot]

            def sigma(d):
                v = self.vertex_of(d)
                r = rot[v]
                return r[(r.index(d) + 1) % len(r)]

            for start in darts:
                labels = {self.vertex_of(start): 0}
                entry = {self.vertex_of(start): start}
                order = [self.vertex_of(start)]
                i = 0
                rows = []
                while i < len(order):
                    v = order[i]
                    i += 1
                    r = rot[v]
                    k = r.index(entry[v])
                    seq = r[k:] + r[:k]
                    row = []
                    for d in seq:
                        w_dart = self.theta(d)
                        w = self.vertex_of(w_dart)
                        if w not in labels:
                            labels[w] = len(order)
                            entry[w] = w_dart
                            order.append(w)
                        rw = rot[w]
                        off = (rw.index(w_dart) - rw.index(entry[w])) % len(rw)
                        e, end = d
                        sig = self.edges[e][2]
                        if include_direction:
                            row.append((labels[w], off, sig, end))
                        else:
                            row.append((labels[w], off, sig))
                    rows.append(tuple(row))
                if len(order) == self.n:
                    code = tuple(rows)
                    if best is None or code < best:
                        best = code
        return (self.n, self.m, best)

    def to_dot(self):
        lines = ["digraph evgraph {" if self.directed else "graph evgraph {"]
        arrow = "->" if self.directed else "--"
        for e, (u, v, sign) in enumerate(self.edges):
            style = "" if sign > 0 else ' [style=dashed, label="-"]'
            lines.append(f"  {u} {arrow} {v}{style};")
        lines.append("}")
        return "\n".join(lines)


# -- construction by attaching cycles -------------------------------------------


def cycle_graph(signs):
    """A single cycle with the given edge signs (length >= 2)."""
    k = len(signs)
    if k < 2:
        raise DiagramError("cycle needs length >= 2")
    edges = [(i, (i + 1) % k, signs[i]) for i in range(k)]
    rot = []
    for v in range(k):
        prev = (v - 1) % k
        rot.append([(prev, 1), (v, 0)])
    return PlaneGraph(k, edges, rot)


def face_corner_darts(G, face):
    """The corner markers of a face orbit: corner i of the face sits right
    after dart theta(face[i]) in the rotation at that dart's vertex."""
    return [G.theta(d) for d in face]


def attach_cycle(G, face, attach_positions, gaps, signs):
    """Attach a new cycle inside `face` (a dart tuple from G.faces()).

    attach_positions: indices into the face's corner list (see
    `face_corner_darts`), strictly increasing; the cycle visits those
    corners' vertices in face order and puts gaps[i] fresh vertices on the
    segment leaving attach point i.  The closing segment is the last one.
    len(signs) must equal the number of new edges.  All touched vertices
    gain valence 2, so even valences are preserved.
    """
    corners = face_corner_darts(G, face)
    k = len(attach_positions)
    if k < 1:
        raise DiagramError("need at least one attach corner")
    if k > 1:
        descents = sum(1 for i in range(k)
                       if attach_positions[(i + 1) % k] < attach_positions[i])
        if descents != 1 or len(set(attach_positions)) != k:
            raise DiagramError("attach corners must be in cyclic face order")
    verts = [G.vertex_of(corners[p]) for p in attach_positions]
    if len(set(verts)) != k:
        raise DiagramError("attach corners must have distinct vertices")
    total_new_edges = k + sum(gaps) if k > 1 else gaps[0] + 1
    if k == 1 and gaps[0] < 1:
        raise DiagramError("a one-corner cycle needs a fresh vertex (no loops)")
    if len(gaps) != k or len(signs) != (sum(gaps) + k):
        raise DiagramError("need one gap per segment and one sign per edge")

    for order_flag in (0, 1):
        try:
            H = _attach_cycle_once(G, corners, attach_positions, gaps, signs,
                                   order_flag)
        except DiagramError:
            continue
        if H.euler_ok():
            return H
    raise DiagramError("cycle attachment is not planar")


def _attach_cycle_once(G, corners, attach_positions, gaps, signs, order_flag):
    n = G.n
    edges = list(G.edges)
    rot = [list(r) for r in G.rot]
    k = len(attach_positions)
    verts = [G.vertex_of(corners[p]) for p in attach_positions]
    # build vertex sequence of the new cycle
    seq = []
    for i in range(k):
        seq.append(("old", verts[i]))
        for _ in range(gaps[i]):
            seq.append(("new", n))
            n += 1
    L = len(seq)
    ids = []
    for kind, v in seq:
        ids.append(v)
    rot += [[] for _ in range(n - G.n)]
    new_edges = []
    s_iter = iter(signs)
    for i in range(L):
        e_id = len(edges) + len(new_edges)
        new_edges.append((ids[i], ids[(i + 1) % L], next(s_iter)))
    edges += new_edges
    base = len(G.edges)
    # insert darts: at each cycle vertex, incoming edge (prev) and outgoing
    for i in range(L):
        v = ids[i]
        out_dart = (base + i, 0)
        in_dart = (base + (i - 1) % L, 1)
        pair = [out_dart, in_dart] if order_flag == 0 else [in_dart, out_dart]
        if seq[i][0] == "new":
            rot[v] = pair
        else:
            j = [p for p, (kind, w) in enumerate(seq) if kind == "old"
                 and w == v][0]
            corner_dart = corners[attach_positions[[x for x, (kind, w)
                                 in enumerate(seq) if kind == "old"].index(j)]]
            pos = rot[v].index(corner_dart)
            rot[v] = rot[v][:pos + 1] + pair + rot[v][pos + 1:]
    return PlaneGraph(n, edges, rot)


def random_plane_even_graph(rng, target_edges):
    """Random connected loop-free plane graph with all valences even and
    exactly `target_edges` edges, built by attaching cycles inside faces."""
    if target_edges < 2:
        raise DiagramError("need at least 2 edges")
    first = rng.randint(2, max(2, min(5, target_edges)))
    while target_edges - first == 1:
        first = rng.randint(2, max(2, min(5, target_edges)))
    G = cycle_graph([1] * first)
    while G.m < target_edges:
        remaining = target_edges - G.m
        choices = [a for a in range(2, min(6, remaining) + 1)
                   if remaining - a != 1]
        add = rng.choice(choices)
        for _ in range(40):
            faces = G.faces()
            face = faces[rng.randrange(len(faces))]
            by_vertex = {}
            for p, d in enumerate(face_corner_darts(G, face)):
                by_vertex.setdefault(G.vertex_of(d), p)
            distinct = sorted(by_vertex.values())
            kmax = min(3, len(distinct), add)
            k = rng.randint(1, kmax)
            if k == 1 and add < 2:
                continue
            attach = sorted(rng.sample(distinct, k))
            extra = add - k
            gaps = [0] * k
            if k == 1:
                gaps[0] = add - 1
            else:
                for _ in range(extra):
                    gaps[rng.randrange(k)] += 1
            try:
                G = attach_cycle(G, face, attach, gaps, [1] * add)
                break
            except DiagramError:
                continue
        else:
            raise DiagramError("random graph generation stalled")
    return G


def shape_a_graph(circle_sizes, middle_touches=None, subdivide_cell=0):
    """A chain of positive circles with an outer cell attached: the cell's
    closing edge is negative and joins interior points of the two outermost
    circles (the fiber-surface shape with a chain of circles).

    circle_sizes: length of each circle in the chain (>= 2 each).
    middle_touches: which middle circles the cell also touches (default all,
    at the chain's cut vertices); for bigon chains touching a cut vertex.
    subdivide_cell: extra fresh vertices on the cell's positive segments.
    """
    m = len(circle_sizes)
    if m < 1:
        raise DiagramError("need at least one circle")
    G = cycle_graph([1] * circle_sizes[0])
    share = [0]  # vertex shared with the next circle; circle 0 anchor
    anchor = [0]
    last_vertex = circle_sizes[0] - 1
    for i in range(1, m):
        # attach circle i at a single corner on the previous circle's free
        # vertex (valence 2 there, both corners usable: pick any face corner)
        target = last_vertex
        faces = G.faces()
        face = max(faces, key=len)
        cds = face_corner_darts(G, face)
        pos = next(p for p, d in enumerate(cds) if G.vertex_of(d) == target)
        size = circle_sizes[i]
        G = attach_cycle(G, face, [pos], [size - 1], [1] * size)
        last_vertex = G.n - 1
    # touch points: an interior vertex of the first and last circles plus
    # middle attachment vertices, all on a common face, in face order
    first_touch = 0
    last_touch = last_vertex
    wanted = [first_touch]
    if middle_touches is None:
        middle_touches = []
    wanted += list(middle_touches)
    wanted.append(last_touch)
    faces = G.faces()
    for face in sorted(faces, key=len, reverse=True):
        sel = _corners_in_order(G, face, wanted)
        if sel is not None:
            k = len(wanted)
            gaps = [subdivide_cell] * (k - 1) + [0]
            signs = []
            for i in range(k - 1):
                signs += [1] * (subdivide_cell + 1)
            signs += [-1]
            try:
                return attach_cycle(G, face, sel, gaps, signs)
            except DiagramError:
                continue
    raise DiagramError("could not attach the outer cell to the chain")


def _corners_in_order(G, face, wanted):
    """Positions of corners on `face` visiting `wanted` vertices in cyclic
    order (one corner per vertex, returned in the wanted order), or None."""
    options = {}
    for p, d in enumerate(face_corner_darts(G, face)):
        options.setdefault(G.vertex_of(d), []).append(p)
    if any(w not in options for w in wanted):
        return None
    k = len(wanted)
    for combo in itertools.product(*(options[w] for w in wanted)):
        if len(set(combo)) != k:
            continue
        if k == 1:
            return list(combo)
        descents = sum(1 for i in range(k) if combo[(i + 1) % k] < combo[i])
        if descents == 1:
            return list(combo)
    return None


def shape_b_graph(k, negative_in_double=True):
    """The even-valence graph of a (2,2,...,2)-pretzel (k bands, oriented to
    be special) with one crossing switched: a k-cycle with every edge
    doubled and exactly one negative edge."""
    if k < 2:
        raise DiagramError("need at least two 2-bands")
    G = cycle_graph([1] * k)
    faces = G.faces()
    face = faces[0]
    by_vertex = {}
    for p, d in enumerate(face_corner_darts(G, face)):
        by_vertex.setdefault(G.vertex_of(d), p)
    attach = sorted(by_vertex.values())
    signs = [1] * k
    signs[0] = -1
    if not negative_in_double:
        edges = [list(e) for e in G.edges]
        edges[0][2] = -1
        G = PlaneGraph(G.n, [tuple(e) for e in edges], G.rot)
        signs = [1] * k
    return attach_cycle(G, face, attach, [0] * k, signs)


# -- medial construction -------------------------------------------------------------


def medial_diagram(G: PlaneGraph) -> Diagram:
    """The special diagram whose even-valence graph is G: one crossing per
    edge, Seifert circles tracing the faces of G, signs matching edge signs."""
    if G.m == 0:
        raise DiagramError("medial of an edgeless graph is not a diagram")
    if any(d % 2 for d in G.degrees()):
        raise DiagramError("medial orientation needs even valences")
    if not G.is_connected():
        raise DiagramError("medial construction needs a connected graph")
    for u, v, _ in G.edges:
        if u == v:
            raise DiagramError("loop edges give nugatory kinks; not supported")
    # corners: (vertex, index) after rot[v][index]
    corner_id = {}
    for v in range(G.n):
        for i in range(len(G.rot[v])):
            corner_id[(v, i)] = len(corner_id)
    # Faces of G are the Seifert circles.  The raw face orbits traverse the
    # two sides of an edge oppositely; flipping one color class of the face
    # 2-coloring (which exists exactly because valences are even) aligns
    # them, which is what makes every crossing consistently oriented.
    faces = G.faces()
    face_of = {}
    for i, f in enumerate(faces):
        for d in f:
            face_of[d] = i
    color = {0: 0}
    queue = [0]
    while queue:
        i = queue.pop()
        for d in faces[i]:
            j = face_of[G.theta(d)]
            if j not in color:
                color[j] = 1 - color[i]
                queue.append(j)
            elif color[j] == color[i]:
                raise DiagramError("faces are not 2-colorable; "
                                   "not an even-valence plane graph")
    tail = {}
    head = {}
    for fi, f in enumerate(faces):
        cs = []
        for d in f:
            td = G.theta(d)
            v = G.vertex_of(td)
            cs.append(corner_id[(v, G.rot[v].index(td))])
        for i, c in enumerate(cs):
            a = f[i][0]           # crossing = edge index
            b = f[(i + 1) % len(f)][0]
            if color[fi] == 0:
                tail[c], head[c] = a, b
            else:
                tail[c], head[c] = b, a
    # per crossing: counterclockwise end order [P_v, N_u, P_u, N_v]
    theta = [None] * (4 * G.m)
    signs = []
    corner_slots = {}
    for e, (u, v, sign) in enumerate(G.edges):
        du, dv = (e, 0), (e, 1)
        pu_i = G.rot[u].index(du)
        pv_i = G.rot[v].index(dv)
        n_u = corner_id[(u, pu_i)]
        p_u = corner_id[(u, (pu_i - 1) % len(G.rot[u]))]
        n_v = corner_id[(v, pv_i)]
        p_v = corner_id[(v, (pv_i - 1) % len(G.rot[v]))]
        ccw = (p_v, n_u, p_u, n_v)
        ins = [c for c in ccw if head[c] == e]
        if len(ins) != 2:
            raise DiagramError("face orientations are inconsistent")
        placed = None
        for under in ins:
            other = ins[0] if ins[1] == under else ins[1]
            gap = (ccw.index(other) - ccw.index(under)) % 4
            if gap in (1, 3) and (1 if gap == 3 else -1) == sign:
                placed = under
                break
        if placed is None:
            raise DiagramError("cannot realize edge sign at a crossing")
        base = ccw.index(placed)
        signs.append(sign)
        for s in range(4):
            corner = ccw[(base + s) % 4]
            corner_slots.setdefault(corner, []).append(4 * e + s)
    for corner, slots in corner_slots.items():
        if len(slots) != 2:
            raise DiagramError("corner incident to wrong number of crossings")
        a, b = slots
        theta[a] = b
        theta[b] = a
    return Diagram(signs, theta)


# -- even-valence graph of a special diagram ----------------------------------------


def evgraph_from_special(D: Diagram) -> PlaneGraph:
    """Checkerboard graph on the non-Seifert-circle regions of a connected
    special diagram; edges inherit crossing signs and indices."""
    if D.n == 0:
        raise DiagramError("no crossings, no even-valence graph")
    if not D.is_connected():
        raise DiagramError("even-valence graph needs a connected diagram")
    if separating_circles(D):
        raise DiagramError("diagram is not special")
    data = seifert(D)
    faces = D.faces()
    is_seifert_face = []
    for f in faces:
        circles = {data.circle_of_dart[d] for d in f}
        is_seifert_face.append(len(circles) == 1)
    if sum(is_seifert_face) != data.s:
        raise DiagramError("region classification failed; map corrupted")
    vid = {}
    for i, f in enumerate(faces):
        if not is_seifert_face[i]:
            vid[i] = len(vid)
    fo = D.face_of_dart()
    # channel corners of each crossing: the corners its smoothing merges
    ends = {}
    for c in range(D.n):
        j1, j2 = (1, 3) if D.signs[c] > 0 else (0, 2)
        f1, f2 = D.corner_face(c, j1), D.corner_face(c, j2)
        if is_seifert_face[f1] or is_seifert_face[f2]:
            raise DiagramError("channel corner landed on a Seifert region")
        ends[c] = ((f1, j1), (f2, j2))
    edges = [(vid[ends[c][0][0]], vid[ends[c][1][0]], D.signs[c])
             for c in range(D.n)]
    rot = [[] for _ in range(len(vid))]
    for i, f in enumerate(faces):
        if is_seifert_face[i]:
            continue
        for d in f:
            t = D.theta[d]
            c, j = t >> 2, t & 3
            (fa, ja), (fb, jb) = ends[c]
            if (i, j) == (fa, ja):
                rot[vid[i]].append((c, 0))
            elif (i, j) == (fb, jb):
                rot[vid[i]].append((c, 1))
    G = PlaneGraph(len(vid), edges, rot)
    if len(G.faces()) != data.s:
        raise DiagramError("even-valence graph has wrong cell count")
    return G


# -- canonical orientation and arborescences ------------------------------------------


def canonical_orient(G: PlaneGraph) -> PlaneGraph:
    """Direct every edge so each cell's boundary is coherent: 2-color the
    faces and let each edge run the way its black face traverses it.
    Deterministic tie-break: the face containing dart (0,0) is black."""
    faces = G.faces()
    face_of = {}
    for i, f in enumerate(faces):
        for d in f:
            face_of[d] = i
    color = {0 if not faces else face_of[(0, 0)]: 0}
    queue = [face_of[(0, 0)]] if G.m else []
    while queue:
        i = queue.pop()
        for d in faces[i]:
            j = face_of[G.theta(d)]
            if j not in color:
                color[j] = 1 - color[i]
                queue.append(j)
            elif color[j] == color[i]:
                raise DiagramError("faces are not 2-colorable; "
                                   "not an even-valence plane graph")
    edges = []
    for e, (u, v, sign) in enumerate(G.edges):
        d0, d1 = (e, 0), (e, 1)
        black_dart = d0 if color[face_of[d0]] == 0 else d1
        if color[face_of[black_dart]] != 0:
            raise DiagramError("edge with no black side")
        # the black face traverses edge(d) from vertex(theta(d)) to vertex(d)
        head = G.vertex_of(black_dart)
        tail = G.vertex_of(G.theta(black_dart))
        if (tail, head) == (u, v):
            edges.append((u, v, sign))
        else:
            edges.append((v, u, sign))
    rot = []
    swap = [new[:2] != old[:2] for new, old in zip(edges, G.edges)]
    for r in G.rot:
        rot.append([(e, 1 - end) if swap[e] else (e, end) for (e, end) in r])
    return PlaneGraph(G.n, edges, rot, directed=True)


def _bareiss_det(M):
    n = len(M)
    if n == 0:
        return 1
    M = [row[:] for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[-1][-1]


def arborescence_count(G: PlaneGraph, root=0) -> int:
    """Spanning trees in which every edge, as directed in G, points toward
    the root: det of the root-deleted out-degree Laplacian minor."""
    if not G.directed:
        raise DiagramError("arborescence counting needs a directed graph")
    if not G.is_connected():
        import warnings
        warnings.warn("arborescence count of a disconnected graph is 0")
        return 0
    n = G.n
    if n == 1:
        return 1
    L = [[0] * n for _ in range(n)]
    for (t, h, _) in G.edges:
        if t == h:
            continue
        L[t][t] += 1
        L[t][h] -= 1
    keep = [v for v in range(n) if v != root]
    minor = [[L[i][j] for j in keep] for i in keep]
    return _bareiss_det(minor)


def arborescence_enumerate(G: PlaneGraph, root=0) -> int:
    """Brute-force oracle: try all edge subsets of size n-1."""
    if not G.directed:
        raise DiagramError("needs a directed graph")
    n = G.n
    count = 0
    for combo in itertools.combinations(range(G.m), n - 1):
        out_used = [0] * n
        ok = True
        for e in combo:
            t, h, _ = G.edges[e]
            if t == h:
                ok = False
                break
            out_used[t] += 1
        if not ok or out_used[root] != 0:
            continue
        if any(out_used[v] != 1 for v in range(n) if v != root):
            continue
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        acyclic = True
        for e in combo:
            t, h, _ = G.edges[e]
            a, b = find(t), find(h)
            if a == b:
                acyclic = False
                break
            parent[a] = b
        if acyclic:
            count += 1
    return count


def contract_edge(G: PlaneGraph, e) -> PlaneGraph:
    """Contract a non-loop edge, merging its head into its tail; parallel
    edges become loops.  Directions and signs of other edges survive."""
    u, v, _ = G.edges[e]
    if u == v:
        raise DiagramError("cannot contract a loop")
    keep = [i for i in range(G.m) if i != e]
    newid = {old: i for i, old in enumerate(keep)}

    def nv(w):
        x = w if w != v else u
        return x - 1 if x > v else x

    edges = [(nv(G.edges[i][0]), nv(G.edges[i][1]), G.edges[i][2])
             for i in keep]
    ru = G.rot[u]
    rv = G.rot[v]
    iu = ru.index((e, 0)) if (e, 0) in ru and G.edges[e][0] == u else ru.index((e, 0) if (e, 0) in ru else (e, 1))
    # dart of e at u and at v
    du = (e, 0) if G.edges[e][0] == u else (e, 1)
    dv = (e, 1) if du == (e, 0) else (e, 0)
    iu = ru.index(du)
    iv = rv.index(dv)
    merged = (ru[iu + 1:] + ru[:iu]) + (rv[iv + 1:] + rv[:iv])
    rot = []
    for w in range(G.n):
        if w == v:
            continue
        src = merged if w == u else G.rot[w]
        rot.append([(newid[i], end) for (i, end) in src if i != e])
    return PlaneGraph(G.n - 1, edges, rot, directed=G.directed)


def in_two_cut(G: PlaneGraph, e) -> bool:
    """Is e part of a pair of edges whose deletion disconnects G?"""
    for f in range(G.m):
        if f == e:
            continue
        parent = list(range(G.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i, (u, v, _) in enumerate(G.edges):
            if i in (e, f):
                continue
            a, b = find(u), find(v)
            if a != b:
                parent[a] = b
        if len({find(v) for v in range(G.n)}) > 1:
            return True
    return False


# -- fiberedness machinery -----------------------------------------------------------


def unbisect(G: PlaneGraph) -> PlaneGraph:
    """Remove valence-2 vertices whose two (distinct) edges carry the same
    sign, merging them into one edge of that sign.  Repeats to a fixpoint."""
    G = G.copy()
    changed = True
    while changed:
        changed = False
        for v in range(G.n):
            r = G.rot[v]
            if len(r) != 2:
                continue
            (e1, end1), (e2, end2) = r
            if e1 == e2:
                continue
            if G.edges[e1][2] != G.edges[e2][2]:
                continue
            G = _merge_through(G, v, e1, end1, e2, end2)
            changed = True
            break
    return G


def _merge_through(G, v, e1, end1, e2, end2):
    sign = G.edges[e1][2]
    a = G.edges[e1][1 - end1]
    b = G.edges[e2][1 - end2]
    keep = [i for i in range(G.m) if i not in (e1, e2)]
    newid = {old: i for i, old in enumerate(keep)}
    merged_id = len(keep)

    def nv(w):
        return w - 1 if w > v else w

    edges = [(nv(G.edges[i][0]), nv(G.edges[i][1]), G.edges[i][2])
             for i in keep]
    edges.append((nv(a), nv(b), sign))
    rot = []
    for w in range(G.n):
        if w == v:
            continue
        row = []
        for (i, end) in G.rot[w]:
            if i == e1:
                row.append((merged_id, 0))
            elif i == e2:
                row.append((merged_id, 1))
            else:
                row.append((newid[i], end))
        rot.append(row)
    return PlaneGraph(G.n - 1, edges, rot)


def reduce_clasps(D: Diagram) -> Diagram:
    """Apply the clasp reduction (two same-sign crossings bounding a
    non-Seifert bigon become one crossing) until none applies.  This is the
    diagram counterpart of unbisection; it deplumbs Hopf bands, preserving
    whether the canonical surface is a fiber."""
    while True:
        data = seifert(D)
        target = None
        for f in D.faces():
            if len(f) != 2:
                continue
            c1, c2 = f[0] >> 2, f[1] >> 2
            if c1 == c2 or D.signs[c1] != D.signs[c2]:
                continue
            circles = {data.circle_of_dart[d] for d in f}
            if len(circles) == 1:
                continue  # Seifert bigon: a reverse clasp, not a (y) site
            target = c1
            break
        if target is None:
            return D
        D = D.smooth_oriented(target)


def _blocks(G: PlaneGraph):
    """Biconnected components as lists of edge indices (loops come out as
    singleton blocks)."""
    adj = [[] for _ in range(G.n)]
    for i, (u, v, _) in enumerate(G.edges):
        if u == v:
            continue
        adj[u].append((v, i))
        adj[v].append((u, i))
    blocks = [[i] for i, (u, v, _) in enumerate(G.edges) if u == v]
    visited = [False] * G.n
    depth = [0] * G.n
    low = [0] * G.n
    stack = []

    def dfs(root):
        todo = [(root, -1, iter(adj[root]))]
        visited[root] = True
        while todo:
            v, pe, it = todo[-1]
            advanced = False
            for (w, e) in it:
                if e == pe:
                    continue
                if not visited[w]:
                    stack.append(e)
                    visited[w] = True
                    depth[w] = depth[v] + 1
                    low[w] = depth[w]
                    todo.append((w, e, iter(adj[w])))
                    advanced = True
                    break
                elif depth[w] < depth[v]:
                    stack.append(e)
                    low[v] = min(low[v], depth[w])
            if advanced:
                continue
            todo.pop()
            if todo:
                p, ppe, _ = todo[-1]
                low[p] = min(low[p], low[v])
                if low[v] >= depth[p]:
                    block = []
                    while True:
                        e = stack.pop()
                        block.append(e)
                        if e == pe:
                            break
                    blocks.append(block)

    for v in range(G.n):
        if not visited[v] and adj[v]:
            dfs(v)
    return blocks


class FiberShape(Enum):
    TORUS_CHAIN = "TorusChain"
    PRETZEL_SWITCHED = "PretzelSwitched"
    TORUS_FACTOR = "TorusFactor"
    NOT_FIBERED_SHAPE = "NotFiberedShape"


@dataclass
class FiberShapeReport:
    verdict: FiberShape
    detail: str = ""
    witness: dict = field(default_factory=dict)

    @property
    def fibered(self):
        return self.verdict is not FiberShape.NOT_FIBERED_SHAPE


def _block_is_cycle(G, block):
    verts = set()
    for e in block:
        u, v, _ = G.edges[e]
        verts.update((u, v))
    return len(block) == len(verts) and len(block) >= 2


def _negative_block_matches(G):
    """Structure test on the unbisected exceptional block: some face through
    the negative edge must be a simple cycle whose removal leaves a chain of
    circles with the negative edge joining interior points of the outermost
    ones.  Returns (ok, block_count, cell_length, detail)."""
    neg = [e for e in range(G.m) if G.edges[e][2] < 0]
    if len(neg) != 1:
        return (False, 0, 0, "expected exactly one negative edge")
    p = neg[0]
    pu, pv, _ = G.edges[p]
    if pu == pv:
        return (False, 0, 0, "negative edge is a loop")
    for f in G.faces():
        if not any(d[0] == p for d in f):
            continue
        cycle_verts = [G.vertex_of(G.theta(d)) for d in f]
        if len(set(cycle_verts)) != len(cycle_verts):
            continue
        cell_edges = {d[0] for d in f}
        if len(cell_edges) != len(f):
            continue
        rest = [e for e in range(G.m) if e not in cell_edges]
        if not rest:
            continue
        used_verts = set()
        for e in rest:
            u, v, _ = G.edges[e]
            used_verts.update((u, v))
        if used_verts != set(range(G.n)):
            continue  # isolated vertices: cell stripped the graph apart
        H = _subgraph(G, rest)
        if not H.is_connected():
            continue
        blocks = _blocks(H)
        if sum(len(b) for b in blocks) != len(rest):
            continue
        if not all(_block_is_cycle(H, b) for b in blocks):
            continue
        arrangement = _block_path_ends(H, blocks)
        if arrangement is None:
            continue
        end_blocks, cuts = arrangement
        hu, hv = _subgraph_vertex(G, rest, pu), _subgraph_vertex(G, rest, pv)
        if hu in cuts or hv in cuts:
            continue
        if len(blocks) == 1:
            return (True, 1, len(f), "single circle")
        b1, b2 = end_blocks
        v1 = _block_vertices(H, blocks[b1])
        v2 = _block_vertices(H, blocks[b2])
        if (hu in v1 and hv in v2) or (hu in v2 and hv in v1):
            return (True, len(blocks), len(f), "chain of circles")
    return (False, 0, 0, "no face through the negative edge works")


def _subgraph(G, edge_ids):
    verts = sorted({w for e in edge_ids for w in G.edges[e][:2]})
    vmap = {w: i for i, w in enumerate(verts)}
    edges = [(vmap[G.edges[e][0]], vmap[G.edges[e][1]], G.edges[e][2])
             for e in edge_ids]
    emap = {e: i for i, e in enumerate(edge_ids)}
    rot = []
    for w in verts:
        rot.append([(emap[e], end) for (e, end) in G.rot[w] if e in emap])
    return PlaneGraph(len(verts), edges, rot)


def _subgraph_vertex(G, edge_ids, w):
    verts = sorted({x for e in edge_ids for x in G.edges[e][:2]})
    return verts.index(w) if w in verts else None


def _block_vertices(H, block):
    out = set()
    for e in block:
        u, v, _ = H.edges[e]
        out.update((u, v))
    return out


def _block_path_ends(H, blocks):
    """If the block-cut tree is a path, return (indices of the two end
    blocks, set of cut vertices); a single block returns itself twice."""
    if len(blocks) == 1:
        return ((0, 0), set())
    vsets = [_block_vertices(H, b) for b in blocks]
    counts = {}
    for vs in vsets:
        for v in vs:
            counts[v] = counts.get(v, 0) + 1
    cuts = {v for v, c in counts.items() if c > 1}
    ends = [i for i, vs in enumerate(vsets) if len(vs & cuts) == 1]
    middles = [i for i, vs in enumerate(vsets) if len(vs & cuts) == 2]
    if len(ends) != 2 or len(ends) + len(middles) != len(blocks):
        return None
    if any(c for c in counts.values() if c > 2):
        return None
    # verify the middles really join into one path: walk from one end
    order = [ends[0]]
    seen_cut = set()
    while True:
        cur = order[-1]
        nxt = None
        for i, vs in enumerate(vsets):
            if i in order:
                continue
            shared = vsets[cur] & vs & cuts
            if shared and not (shared & seen_cut):
                nxt = i
                seen_cut |= shared
                break
        if nxt is None:
            break
        order.append(nxt)
    if len(order) != len(blocks):
        return None
    return ((ends[0], ends[1]), cuts)


def classify_fiber_shape(D: Diagram) -> FiberShapeReport:
    """Decide whether a connected almost positive diagram's canonical
    surface has the fibered combinatorial shape: Murasugi summands and prime
    factors must all be (2,n)-torus special diagrams except the one holding
    the negative crossing, which after clasp reductions must match the
    chain-of-circles cell shape or the switched-pretzel shape."""
    if not D.is_connected():
        raise DiagramError("classifier needs a connected diagram")
    if positivity_class(D) != 1:
        raise DiagramError("classifier needs an almost positive diagram")
    if D.nugatory_crossings():
        raise NonReducedError("classifier needs a reduced diagram")
    dec = special_summands(D)
    exceptional = None
    for S in dec.summands:
        if positivity_class(S) == 1:
            if exceptional is not None:
                raise DiagramError("two negative summands in an almost "
                                   "positive diagram")
            exceptional = S
        else:
            G = evgraph_from_special(S)
            for b in _blocks(G):
                sub = _subgraph(G, b)
                if not _block_is_cycle(sub, list(range(sub.m))):
                    return FiberShapeReport(
                        FiberShape.NOT_FIBERED_SHAPE,
                        "a positive prime factor is not a (2,n) torus diagram")
    if exceptional is None:
        raise DiagramError("no summand holds the negative crossing")
    G = evgraph_from_special(exceptional)
    neg_edge = next(e for e in range(G.m) if G.edges[e][2] < 0)
    blocks = _blocks(G)
    neg_block = None
    for b in blocks:
        if neg_edge in b:
            neg_block = b
        else:
            sub = _subgraph(G, b)
            if not _block_is_cycle(sub, list(range(sub.m))):
                return FiberShapeReport(
                    FiberShape.NOT_FIBERED_SHAPE,
                    "a positive prime factor of the exceptional summand is "
                    "not a (2,n) torus diagram")
    B = unbisect(_subgraph(G, neg_block))
    ok, nblocks, cell_len, detail = _negative_block_matches(B)
    if not ok:
        return FiberShapeReport(FiberShape.NOT_FIBERED_SHAPE, detail)
    if nblocks >= 2:
        verdict = FiberShape.TORUS_CHAIN
    elif cell_len == 2:
        verdict = FiberShape.PRETZEL_SWITCHED
    else:
        verdict = FiberShape.TORUS_FACTOR
    return FiberShapeReport(verdict, detail,
                            {"chain_blocks": nblocks, "cell_length": cell_len})


def is_fibered_alexander(D: Diagram, heuristic=False, budget=None) -> bool:
    """Alexander fiberedness test: 2 maxdeg Delta(D) = 1 - chi(D) and
    min cf Delta(D) = 1.  Proven exact for connected almost positive
    diagrams; anything else must opt in with heuristic=True."""
    from .skein import (DEFAULT_SKEIN_BUDGET, alexander_nonneg,
                        alexander_symmetric, homfly)
    if not heuristic:
        if not D.is_connected() or positivity_class(D) != 1:
            raise DiagramError(
                "Alexander criterion is only proven for connected almost "
                "positive diagrams; pass heuristic=True to evaluate anyway")
    budget = budget if budget is not None else DEFAULT_SKEIN_BUDGET
    P = homfly(D, budget)
    sym = alexander_symmetric(D, P=P)
    if not sym:
        return False
    nn = alexander_nonneg(D, P=P)
    return (2 * sym.max_deg() == 1 - canonical_euler(D)
            and nn.min_cf() == 1)


def alexander_at_zero_special(D: Diagram) -> int:
    """Delta(0) of a special alternating diagram as an arborescence count of
    its canonically oriented even-valence graph."""
    if positivity_class(D) != 0:
        raise DiagramError("needs a positive diagram")
    G = canonical_orient(evgraph_from_special(D))
    return arborescence_count(G, 0)


@dataclass(frozen=True)
class ThevCheck:
    lhs: int       # Delta_{D_p}(0)
    rhs: int       # Delta_D(0)
    verdict: bool  # strict decrease


def thev_check(D: Diagram, p) -> ThevCheck:
    """Contract the crossing's edge in the even-valence graph and verify the
    strict decrease of the arborescence count."""
    if D.nugatory_crossings():
        raise NonReducedError("needs a reduced diagram")
    from .seifert import is_special_alternating
    if not is_special_alternating(D):
        raise DiagramError("needs a special alternating diagram")
    data = seifert(D)
    partners = [c for c in range(D.n)
                if c != p and data.crossing_pair[c] == data.crossing_pair[p]]
    if partners:
        raise DiagramError(
            f"crossing {p} has a parallel partner {partners[0]}; "
            "the theorem needs an isolated pair of Seifert circles")
    G = canonical_orient(evgraph_from_special(D))
    rhs = arborescence_count(G, 0)
    Gp = contract_edge(G, p)
    lhs = arborescence_count(Gp, 0)
    return ThevCheck(lhs, rhs, lhs < rhs)
