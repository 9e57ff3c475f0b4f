"""Gauss diagrams of (virtual) knots.

A Gauss diagram is an oriented circle with 2n marked endpoints, matched up
into n signed, directed chords ("arrows").  Each arrow records one crossing
of a knot diagram: the tail sits at the over-passage, the head at the
under-passage, and the sign is the usual crossing sign.  Endpoints are
numbered 0..2n-1 in circular order; position 0 is the basepoint.

Diagrams are immutable.  Equality of knots is tested through the canonical
form, which quotients out rotation of the basepoint and renumbering of the
arrows.
"""

from dataclasses import dataclass
from functools import cached_property
import re


class GaussCodeError(ValueError):
    """Raised on malformed signed Gauss codes.

    Carries ``position``, the character offset of the offending token.
    """

    def __init__(self, message, position=None):
        if position is not None:
            message = "%s (at position %d)" % (message, position)
        super().__init__(message)
        self.position = position


@dataclass(frozen=True)
class Arrow:
    """A signed directed chord.  ``tail``/``head`` are endpoint positions."""

    tail: int
    head: int
    sign: int
    singular: bool = False

    def endpoints(self):
        return (self.tail, self.head)


_TOKEN_RE = re.compile(r"([OU])\s*(\d+)\s*([+-])\s*(\*?)")


class GaussDiagram:
    """Immutable Gauss diagram on ``2 * n`` circle positions."""

    __slots__ = ("arrows", "__dict__")

    def __init__(self, arrows):
        arrows = tuple(arrows)
        seen = sorted(p for a in arrows for p in (a.tail, a.head))
        if seen != list(range(2 * len(arrows))):
            raise ValueError("arrow endpoints must cover 0..2n-1 exactly")
        for a in arrows:
            if a.sign not in (1, -1):
                raise ValueError("arrow sign must be +1 or -1")
        object.__setattr__(self, "arrows", arrows)

    # -- construction ------------------------------------------------------

    @classmethod
    def from_code(cls, text):
        return parse_gauss_code(text)

    @property
    def n(self):
        return len(self.arrows)

    @cached_property
    def endpoint_map(self):
        """position -> (arrow index, role); role is 'O' at tails, 'U' at heads."""
        out = {}
        for i, a in enumerate(self.arrows):
            out[a.tail] = (i, "O")
            out[a.head] = (i, "U")
        return out

    # -- serialization -----------------------------------------------------

    def code(self):
        """Signed Gauss code with arrows labeled 1..n in storage order."""
        toks = []
        for p in range(2 * self.n):
            i, role = self.endpoint_map[p]
            a = self.arrows[i]
            toks.append("%s%d%s%s" % (role, i + 1, "+" if a.sign > 0 else "-",
                                      "*" if a.singular else ""))
        return "".join(toks)

    def _rotated_tokens(self, shift):
        """Token stream read from position ``shift``, arrows renumbered by
        first occurrence."""
        order = {}
        toks = []
        for k in range(2 * self.n):
            p = (shift + k) % (2 * self.n)
            i, role = self.endpoint_map[p]
            if i not in order:
                order[i] = len(order) + 1
            a = self.arrows[i]
            toks.append((role, order[i], a.sign, a.singular))
        return tuple(toks)

    @cached_property
    def canonical(self):
        """Lexicographically minimal rotated, renumbered token stream."""
        if self.n == 0:
            return ()
        return min(self._rotated_tokens(s) for s in range(2 * self.n))

    def canonical_code(self):
        """Signed Gauss code of the canonical (rotation-minimal) form."""
        return "".join("%s%d%s%s" % (role, label, "+" if sign > 0 else "-",
                                     "*" if singular else "")
                       for role, label, sign, singular in self.canonical)

    def canonical_equal(self, other):
        return self.canonical == other.canonical

    def __eq__(self, other):
        return isinstance(other, GaussDiagram) and self.arrows == other.arrows

    def __hash__(self):
        return hash(self.arrows)

    def __repr__(self):
        return "GaussDiagram(%r)" % (self.code(),)

    # -- basic geometry ----------------------------------------------------

    def arc_contains(self, start, stop, p):
        """True if ``p`` lies strictly inside the ccw arc from ``start`` to
        ``stop``."""
        if start <= stop:
            return start < p < stop
        return p > start or p < stop

    def intersect(self, i, j):
        """True if arrows ``i`` and ``j`` cross: exactly one endpoint of one
        lies strictly between the endpoints of the other."""
        a, b = self.arrows[i], self.arrows[j]
        inside = self.arc_contains(a.tail, a.head, b.tail)
        return inside != self.arc_contains(a.tail, a.head, b.head)

    def neighbor_indices(self, i):
        """Indices of arrows crossing arrow ``i``."""
        return [j for j in range(self.n) if j != i and self.intersect(i, j)]

    def parallel_pairs(self):
        """All index pairs (i, j), i < j, of non-crossing arrows."""
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n)
                if not self.intersect(i, j)]

    def smooth_pair(self, i, j):
        """Orientedly smooth the two non-crossing arrows ``i`` and ``j``.

        Returns a :class:`SmoothedPair` with the three circle components.
        Component 2 is the one bounded by both smoothed chords, i.e. the part
        between the two smoothing sites as encountered from the basepoint;
        components 1 and 3 are enclosed by a single chord each, ordered by
        first encounter from the basepoint.
        """
        if self.intersect(i, j):
            raise ValueError("can only smooth a non-crossing pair")
        comps = self._smooth_components((i, j))
        if len(comps) != 3:  # cannot happen for a non-crossing pair
            raise AssertionError("smoothing did not give 3 components")
        pair_eps = set(self.arrows[i].endpoints()) | set(self.arrows[j].endpoints())
        e1, e2, e3, e4 = sorted(pair_eps)
        mate = {self.arrows[i].tail: self.arrows[i].head,
                self.arrows[i].head: self.arrows[i].tail,
                self.arrows[j].tail: self.arrows[j].head,
                self.arrows[j].head: self.arrows[j].tail}
        by_interval = {}
        for ci, comp in enumerate(comps):
            for iv in comp:
                by_interval[iv] = ci
        if mate[e1] == e4:
            # nested from the basepoint: outer chord {e1,e4}, inner {e2,e3}
            order = (by_interval[e4], by_interval[e1], by_interval[e2])
        else:
            # side by side: chords {e1,e2} and {e3,e4}
            order = (by_interval[e1], by_interval[e2], by_interval[e3])
        assert len(set(order)) == 3
        return SmoothedPair(self, (i, j), tuple(comps[c] for c in order))

    def _smooth_components(self, arrow_indices):
        """Components of the circle after orientedly smoothing the given
        chords.  Intervals are named by their start endpoint: interval ``p``
        runs ccw from endpoint ``p`` to the next endpoint.  Traversal jumps
        across a smoothed chord when it reaches one of its endpoints."""
        m = 2 * self.n
        jump = {}
        for k in arrow_indices:
            a = self.arrows[k]
            jump[a.tail] = a.head
            jump[a.head] = a.tail
        comps = []
        seen = set()
        for start in range(m):
            if start in seen:
                continue
            comp = []
            p = start
            while p not in seen:
                seen.add(p)
                comp.append(p)
                nxt = (p + 1) % m
                p = jump.get(nxt, nxt)
            comps.append(frozenset(comp))
        return comps

    # -- knot-level operations --------------------------------------------

    def writhe(self):
        return sum(a.sign for a in self.arrows)

    def rotate(self, shift):
        """Move the basepoint ``shift`` endpoints ccw."""
        m = 2 * self.n
        return GaussDiagram(Arrow((a.tail - shift) % m, (a.head - shift) % m,
                                  a.sign, a.singular) for a in self.arrows)

    def connect_sum(self, other, at_self=0, at_other=0):
        """Splice ``other`` into this diagram.

        ``at_self``/``at_other`` are insertion sites, counted as in
        :meth:`insert_gaps`: site k means just before endpoint k.
        """
        d2 = other.rotate(at_other) if other.n else other
        w = 2 * d2.n

        def newpos(p):
            return p + w if p >= at_self else p
        arrows = [Arrow(newpos(a.tail), newpos(a.head), a.sign, a.singular)
                  for a in self.arrows]
        arrows += [Arrow(a.tail + at_self, a.head + at_self, a.sign, a.singular)
                   for a in d2.arrows]
        return GaussDiagram(arrows)

    def insert_gaps(self, gaps):
        """Shift endpoints to open gaps: each (site, width) opens ``width``
        free positions just before old endpoint ``site``.  Returns the
        shifted arrow list; the caller supplies arrows filling the gaps."""
        def newpos(p):
            return p + sum(w for site, w in gaps if site <= p)
        return [Arrow(newpos(a.tail), newpos(a.head), a.sign, a.singular)
                for a in self.arrows]

    def delete_arrows(self, indices):
        drop = set(indices)
        gone = set()
        for k in drop:
            gone.update(self.arrows[k].endpoints())
        remap = {}
        q = 0
        for p in range(2 * self.n):
            if p not in gone:
                remap[p] = q
                q += 1
        return GaussDiagram(Arrow(remap[a.tail], remap[a.head], a.sign, a.singular)
                            for k, a in enumerate(self.arrows) if k not in drop)

    # -- symmetries --------------------------------------------------------

    def inverse(self):
        """Reverse the orientation of the knot: the circle is read backwards."""
        m = 2 * self.n
        return GaussDiagram(Arrow(m - 1 - a.tail, m - 1 - a.head, a.sign,
                                  a.singular) for a in self.arrows)

    def mirror(self):
        """Mirror image: the sign of every arrow is flipped."""
        return GaussDiagram(Arrow(a.tail, a.head, -a.sign, a.singular)
                            for a in self.arrows)

    def switch(self):
        """Flip the sign and the direction of every arrow."""
        return GaussDiagram(Arrow(a.head, a.tail, -a.sign, a.singular)
                            for a in self.arrows)

    def apply_symmetry(self, name):
        if name == "identity":
            return self
        if name == "inverse":
            return self.inverse()
        if name == "mirror":
            return self.mirror()
        if name == "switch":
            return self.switch()
        raise ValueError("unknown symmetry %r" % (name,))

    # -- virtualization and singular arrows --------------------------------

    def virtualize(self, index, kind):
        """Replace arrow ``index`` by a virtualized copy.

        ``kind`` is ``"way"`` (reverse the arrow, keep the sign),
        ``"sign"`` (flip the sign, keep the direction) or ``"both"``.
        """
        a = self.arrows[index]
        if kind == "way":
            new = Arrow(a.head, a.tail, a.sign, a.singular)
        elif kind == "sign":
            new = Arrow(a.tail, a.head, -a.sign, a.singular)
        elif kind == "both":
            new = Arrow(a.head, a.tail, -a.sign, a.singular)
        else:
            raise ValueError("kind must be 'way', 'sign' or 'both'")
        arrows = list(self.arrows)
        arrows[index] = new
        return GaussDiagram(arrows)

    def singular_indices(self):
        return [i for i, a in enumerate(self.arrows) if a.singular]

    def resolve(self, bits):
        """Resolve all singular arrows.

        ``bits`` has one entry per singular arrow, in index order.  Bit 0
        keeps the arrow as stored (the positive resolution); bit 1 switches
        the crossing (direction reversed, sign negated).
        """
        sing = self.singular_indices()
        if len(bits) != len(sing):
            raise ValueError("need one resolution bit per singular arrow")
        arrows = list(self.arrows)
        for b, k in zip(bits, sing):
            a = arrows[k]
            if b:
                arrows[k] = Arrow(a.head, a.tail, -a.sign, False)
            else:
                arrows[k] = Arrow(a.tail, a.head, a.sign, False)
        return GaussDiagram(arrows)


@dataclass(frozen=True)
class SmoothedPair:
    """Outcome of smoothing a non-crossing arrow pair.

    ``components`` holds three disjoint frozensets of interval names (an
    interval is named by the endpoint position it starts at).  An endpoint
    position p belongs to the component containing interval p.
    """

    diagram: GaussDiagram
    pair: tuple
    components: tuple

    def component_of(self, position):
        for ci, comp in enumerate(self.components):
            if position in comp:
                return ci
        raise ValueError("position %d not found" % position)

    def arrow_components(self):
        """arrow index -> (component of tail, component of head) for all
        arrows other than the smoothed pair."""
        out = {}
        for k, a in enumerate(self.diagram.arrows):
            if k in self.pair:
                continue
            out[k] = (self.component_of(a.tail), self.component_of(a.head))
        return out


def parse_gauss_code(text):
    """Parse one signed Gauss code line into a :class:`GaussDiagram`.

    Tokens are ``O``/``U`` + label + sign + optional ``*`` marker; whitespace
    and commas are ignored.  Each label must occur exactly once as ``O`` and
    once as ``U``, with equal signs and markers on both occurrences.
    """
    stripped = text.strip()
    if not stripped:
        return GaussDiagram(())
    occurrences = {}
    first_pos = {}
    pos = 0
    index = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace() or ch == ",":
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise GaussCodeError("unrecognized token %r" % text[pos], pos)
        role, label, sign, star = m.group(1), m.group(2), m.group(3), m.group(4)
        key = label
        rec = occurrences.setdefault(key, [])
        if len(rec) >= 2:
            raise GaussCodeError("label %s appears more than twice" % label, pos)
        rec.append((role, index, 1 if sign == "+" else -1, bool(star)))
        first_pos.setdefault(key, pos)
        index += 1
        pos = m.end()
    arrows = []
    for label, rec in occurrences.items():
        if len(rec) != 2:
            raise GaussCodeError("label %s appears only once" % label,
                                 first_pos[label])
        (r1, p1, s1, g1), (r2, p2, s2, g2) = rec
        if {r1, r2} != {"O", "U"}:
            raise GaussCodeError("label %s must occur once as O and once as U"
                                 % label, first_pos[label])
        if s1 != s2:
            raise GaussCodeError("label %s has inconsistent signs" % label,
                                 first_pos[label])
        if g1 != g2:
            raise GaussCodeError("label %s has inconsistent singular markers"
                                 % label, first_pos[label])
        tail = p1 if r1 == "O" else p2
        head = p2 if r1 == "O" else p1
        arrows.append((min(tail, head), Arrow(tail, head, s1, g1)))
    arrows.sort()
    return GaussDiagram(a for _, a in arrows)


def parse_gauss_lines(text):
    """Parse a multi-line input, one diagram per non-empty line."""
    out = []
    for line in text.splitlines():
        if line.strip() and not line.lstrip().startswith("#"):
            out.append(parse_gauss_code(line))
    return out
