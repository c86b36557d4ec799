"""Assembly of diagrams from unoriented crossings with chosen over-strands.

Montesinos-style constructions (the pretzel with one rational-tangle slot
used for the almost positive diagrams D_n of the (3,...,3,-1) family) are
easiest to build unoriented: place crossings with a chosen over-diagonal,
solder ends together, then propagate orientations along each strand and
read off slot-0 positions and skein signs at the end.
"""

from __future__ import annotations

import itertools

from .diagram import Diagram, DiagramError


class TangleAssembler:
    """Crossings have 4 ports in counterclockwise order; `over_diag` picks
    which diagonal (ports 0-2 or ports 1-3) carries the over-strand.
    Ports are soldered pairwise; `wire()` makes a crossing-free segment."""

    def __init__(self):
        self.over_diag = []
        self.solder = {}
        self.segments = {}
        self._next_term = 0

    def crossing(self, over_diag):
        c = len(self.over_diag)
        self.over_diag.append(over_diag)
        return [("c", c, i) for i in range(4)]

    def wire(self):
        a = ("t", self._next_term)
        b = ("t", self._next_term + 1)
        self._next_term += 2
        self.segments[a] = b
        self.segments[b] = a
        return a, b

    def join(self, a, b):
        if a in self.solder or b in self.solder:
            raise DiagramError(f"port {a} or {b} soldered twice")
        self.solder[a] = b
        self.solder[b] = a

    # -- finishing -----------------------------------------------------------

    def _edges(self):
        """Contract wire chains: pairs of crossing ports, plus free loops."""
        pairs = []
        loops = 0
        seen = set()
        for start in list(self.solder):
            if start in seen or start[0] != "c":
                continue
            x = self.solder[start]
            chain = {start}
            while x[0] == "t":
                chain.add(x)
                x = self.segments[x]
                chain.add(x)
                x = self.solder[x]
            chain.add(x)
            seen |= chain
            pairs.append((start, x))
        for t in self.segments:
            if t in seen or t in self._loop_scan_done:
                continue
            x = t
            cycle = set()
            while x not in cycle:
                cycle.add(x)
                x = self.segments[x]
                cycle.add(x)
                if x not in self.solder:
                    raise DiagramError(f"dangling port {x}")
                x = self.solder[x]
            self._loop_scan_done |= cycle
            loops += 1
        return pairs, loops

    def diagrams(self):
        """All diagrams over the possible strand orientations (the first
        strand's direction is fixed; reversing every component gives the
        same signs and slots, so nothing is lost)."""
        nc = len(self.over_diag)
        for p in [("c", c, i) for c in range(nc) for i in range(4)]:
            if p not in self.solder:
                raise DiagramError(f"port {p} left dangling")
        self._loop_scan_done = set()
        pairs, free_loops = self._edges()
        mate = {}
        for a, b in pairs:
            mate[a] = b
            mate[b] = a
        # strand orbits on ports: cross the edge, pass straight through
        orbits = []
        orbit_of = {}
        for p0 in sorted(mate):
            if p0 in orbit_of:
                continue
            orbit = []
            p = p0
            while p not in orbit_of:
                orbit_of[p] = len(orbits)
                orbit.append(p)
                q = mate[p]
                p = ("c", q[1], (q[2] + 2) % 4)
            orbits.append(orbit)
        k = len(orbits)
        for mask in range(1 << max(0, k - 1)):
            flip = [False] + [bool((mask >> i) & 1) for i in range(k - 1)]
            # walk each orbit; alternate ports are outgoing
            is_out = {}
            for oi, orbit in enumerate(orbits):
                for j, p in enumerate(orbit):
                    q = mate[p]
                    # p tail, q head along the walk direction
                    if flip[oi]:
                        is_out[p], is_out[q] = False, True
                    else:
                        is_out[p], is_out[q] = True, False
            try:
                yield self._build(mate, is_out, free_loops), mask
            except DiagramError:
                continue

    def _build(self, mate, is_out, free_loops):
        nc = len(self.over_diag)
        signs = []
        base = []
        for c in range(nc):
            over = (1, 3) if self.over_diag[c] else (0, 2)
            under = (0, 2) if self.over_diag[c] else (1, 3)
            under_in = [i for i in under if not is_out[("c", c, i)]]
            over_in = [i for i in over if not is_out[("c", c, i)]]
            if len(under_in) != 1 or len(over_in) != 1:
                raise DiagramError("orientation clash at a crossing")
            b = under_in[0]
            gap = (over_in[0] - b) % 4
            if gap not in (1, 3):
                raise DiagramError("over strand not transverse")
            base.append(b)
            signs.append(1 if gap == 3 else -1)
        theta = [None] * (4 * nc)

        def dart(port):
            _, c, i = port
            return 4 * c + ((i - base[c]) % 4)

        for p, q in mate.items():
            theta[dart(p)] = dart(q)
        return Diagram(signs, theta, free_loops)


def _vertical_column(asm, twists, over_first):
    """A column of |twists| vertical crossings; over_first picks the over
    diagonal of every crossing.  Returns (nw, ne, sw, se) ports."""
    top = asm.wire(), asm.wire()
    nw, cur_l = top[0]
    ne, cur_r = top[1]
    for _ in range(abs(twists)):
        ports = asm.crossing(over_first)
        # counterclockwise: [TR, TL, BL, BR]
        tr, tl, bl, br = ports
        asm.join(cur_l, tl)
        asm.join(cur_r, tr)
        cur_l, cur_r = bl, br
    sw, se = asm.wire(), asm.wire()
    asm.join(cur_l, sw[0])
    asm.join(cur_r, se[0])
    return nw, ne, sw[1], se[1]


def _apply_ops(asm, ops):
    """Build a slot from (kind, over_diag) steps: 'V' adds a crossing at the
    bottom, 'H' adds one on the right.  Returns (nw, ne, sw, se) ports."""
    nw_pair, ne_pair = asm.wire(), asm.wire()
    sw_pair, se_pair = asm.wire(), asm.wire()
    # 0-tangle: nw--ne and sw--se
    asm.join(nw_pair[1], ne_pair[1])
    asm.join(sw_pair[1], se_pair[1])
    nw, ne, sw, se = nw_pair[0], ne_pair[0], sw_pair[0], se_pair[0]
    # the exposed ends are re-soldered as twists arrive: keep them as loose
    # terminals by re-wiring through fresh segments
    cur = {"nw": nw, "ne": ne, "sw": sw, "se": se}

    def splice(name):
        # detach: cur[name] is a terminal whose segment partner is soldered
        return cur[name]

    for kind, over in ops:
        ports = asm.crossing(over)
        if kind == "V":
            tr, tl, bl, br = ports
            asm.join(splice("sw"), tl)
            asm.join(splice("se"), tr)
            a, b = asm.wire(), asm.wire()
            asm.join(bl, a[0])
            asm.join(br, b[0])
            cur["sw"], cur["se"] = a[1], b[1]
        elif kind == "H":
            # counterclockwise: [RT, LT, LB, RB]
            rt, lt, lb, rb = ports
            asm.join(splice("ne"), lt)
            asm.join(splice("se"), lb)
            a, b = asm.wire(), asm.wire()
            asm.join(rt, a[0])
            asm.join(rb, b[0])
            cur["ne"], cur["se"] = a[1], b[1]
        else:
            raise DiagramError(f"unknown op {kind}")
    return cur["nw"], cur["ne"], cur["sw"], cur["se"]


def montesinos_candidates(slot_ops, columns, column_over):
    """Diagrams of the cyclic closure of one op-built slot followed by
    vertical twist columns (pretzel frame), over all orientation choices."""
    asm = TangleAssembler()
    slots = [_apply_ops(asm, slot_ops)]
    for t in columns:
        slots.append(_vertical_column(asm, t, column_over))
    k = len(slots)
    for j in range(k):
        nxt = (j + 1) % k
        asm.join(slots[j][1], slots[nxt][0])   # ne -> nw
        asm.join(slots[j][3], slots[nxt][2])   # se -> sw
    yield from asm.diagrams()
