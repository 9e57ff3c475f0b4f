"""Crossing weights and the classification of non-crossing arrow pairs.

The weight of a crossing c is the signed count of arrows crossing its chord,
where the intersection index of x against c is +1 when x points from the
left side of c to the right side, i.e. when the head of x lies on the ccw
arc from the tail of c to the head of c.

Smoothing a non-crossing pair splits the circle into three components; the
relative weights w12, w13, w23 count (signed, then in absolute value) the
arrows joining two of the components, measured against the chord separating
them.
"""

from dataclasses import dataclass


def int_sign(diagram, c, x):
    """Intersection index of arrow ``x`` against arrow ``c``.

    0 when the chords do not cross; otherwise +1 if x crosses c from left
    to right (head of x on the ccw arc tail(c) -> head(c)), else -1.
    """
    if not diagram.intersect(c, x):
        return 0
    ac, ax = diagram.arrows[c], diagram.arrows[x]
    return 1 if diagram.arc_contains(ac.tail, ac.head, ax.head) else -1


def crossing_weight(diagram, c):
    """Weight of crossing ``c``: sum of sign(x) * int_sign(c, x) over the
    arrows x crossing c."""
    return sum(diagram.arrows[x].sign * int_sign(diagram, c, x)
               for x in diagram.neighbor_indices(c))


def all_weights(diagram):
    return [crossing_weight(diagram, c) for c in range(diagram.n)]


@dataclass(frozen=True)
class WeightTriple:
    """Relative weights of a smoothed pair, indexed by component pairs."""

    w12: int
    w13: int
    w23: int

    def as_tuple(self):
        return (self.w12, self.w13, self.w23)


def _separating_chords(sm):
    """For each component pair (1,2), (1,3), (2,3) of a smoothed pair, the
    smoothed chords separating the two components.

    Component 2 (index 1) is bounded by both chords, so it is separated from
    each outer component by exactly one chord; components 1 and 3 are
    separated by both chords.
    """
    d = sm.diagram
    i, j = sm.pair
    out = {}
    for pa, pb in ((0, 1), (0, 2), (1, 2)):
        seps = []
        for k in (i, j):
            a = d.arrows[k]
            # chord k separates the two components iff crossing it swaps them
            sides = set()
            for comp_idx in (pa, pb):
                for iv in sm.components[comp_idx]:
                    # interval iv starts at endpoint iv; which side of chord k?
                    mid_in = d.arc_contains(a.tail, a.head, iv + 0.5)
                    sides.add((comp_idx, mid_in))
            by_comp = {}
            for ci, side in sides:
                by_comp.setdefault(ci, set()).add(side)
            if (len(by_comp[pa]) == 1 and len(by_comp[pb]) == 1
                    and by_comp[pa] != by_comp[pb]):
                seps.append(k)
        out[(pa, pb)] = seps
    return out


def _relative_weight(sm, comp_a, comp_b, chord):
    """Signed count of arrows joining components ``comp_a`` and ``comp_b``,
    against the smoothed chord ``chord``."""
    d = sm.diagram
    total = 0
    for k, (ct, ch) in sm.arrow_components().items():
        if {ct, ch} == {comp_a, comp_b}:
            total += d.arrows[k].sign * int_sign(d, chord, k)
    return total


def relative_weights(sm):
    """Relative weights (w12, w13, w23) of a smoothed pair.

    Each weight is measured against the chord separating the two components;
    when both chords separate them, both give the same value (asserted) and
    the smaller arrow index is used.
    """
    seps = _separating_chords(sm)
    vals = {}
    for pair_key in ((0, 1), (0, 2), (1, 2)):
        chords = seps[pair_key]
        if not chords:
            raise AssertionError("no separating chord for component pair")
        results = [abs(_relative_weight(sm, pair_key[0], pair_key[1], c))
                   for c in sorted(chords)]
        assert len(set(results)) == 1, "separating chords disagree"
        vals[pair_key] = results[0]
    return WeightTriple(vals[(0, 1)], vals[(0, 2)], vals[(1, 2)])


@dataclass(frozen=True)
class PairConfig:
    """Rotation-invariant configuration of a non-crossing arrow pair.

    Two disjoint directed chords fall into three classes once the basepoint
    is forgotten; the class is read off from the view in which one chord is
    outermost (e1 e2 e3 e4 in ccw order, outer chord {e1,e4}, inner chord
    {e2,e3}):

    - class "A": the chords are co-oriented (e1 and e2 both tails in one
      view, both heads in the other),
    - class "B": e1 is a tail and e2 a head in either view,
    - class "C": e1 is a head and e2 a tail in either view.

    ``labels`` are the relative weights in slot order (outer-middle,
    middle-inner, outer-inner).  Class A labels are those of the tails-first
    view; classes B and C are symmetric under swapping the first two slots
    and store the lexicographically smaller triple.
    """

    cls: str
    labels: tuple


def _views(diagram, i, j):
    """The two nested views of a non-crossing pair.

    Yields (tag1, tag2, outer, inner) where outer/inner are arrow indices
    and the tags are the roles ('T' or 'H') of e1 (on the outer arrow) and
    e2 (the first inner endpoint after e1).
    """
    for outer, inner in ((i, j), (j, i)):
        ao, ai = diagram.arrows[outer], diagram.arrows[inner]
        # orient the outer chord so the ccw arc from e1 contains the inner chord
        if diagram.arc_contains(ao.tail, ao.head, ai.tail):
            e1 = ao.tail
        else:
            e1 = ao.head
        t1 = "T" if e1 == ao.tail else "H"
        # first inner endpoint on the ccw arc from e1
        m = 2 * diagram.n
        p = (e1 + 1) % m
        while p not in (ai.tail, ai.head):
            p = (p + 1) % m
        t2 = "T" if p == ai.tail else "H"
        yield (t1, t2, outer, inner)


def _view_labels(diagram, sm, outer):
    """Relative-weight labels (outer-mid, mid-inner, outer-inner) for the
    view whose outermost chord is arrow ``outer``."""
    i, j = sm.pair
    w = relative_weights(sm)
    d = diagram
    a = d.arrows[outer]
    # component 2 (index 1) is always the middle one.  The component on the
    # far side of the outer chord (not containing the inner chord) is the
    # view's outer region.
    inner = j if outer == i else i
    ai = d.arrows[inner]
    far_side_in_arc = not d.arc_contains(a.tail, a.head, ai.tail)
    # find a component whose intervals lie on the far side of the outer chord
    outer_comp = None
    for ci in (0, 2):
        iv = next(iter(sm.components[ci]))
        if d.arc_contains(a.tail, a.head, iv + 0.5) == far_side_in_arc:
            outer_comp = ci
            break
    inner_comp = 2 if outer_comp == 0 else 0
    table = {(0, 1): w.w12, (1, 2): w.w23, (0, 2): w.w13}
    def get(x, y):
        return table[(min(x, y), max(x, y))]
    return (get(outer_comp, 1), get(1, inner_comp), get(outer_comp, inner_comp))


def classify_pair(diagram, i, j):
    """Canonical :class:`PairConfig` of the non-crossing pair (i, j)."""
    sm = diagram.smooth_pair(i, j)
    views = list(_views(diagram, i, j))
    tags = {(t1, t2) for t1, t2, _, _ in views}
    if tags == {("T", "T"), ("H", "H")}:
        cls = "A"
        for t1, t2, outer, _ in views:
            if (t1, t2) == ("T", "T"):
                return PairConfig(cls, _view_labels(diagram, sm, outer))
    if tags == {("T", "H")}:
        cls = "B"
    elif tags == {("H", "T")}:
        cls = "C"
    else:
        raise AssertionError("impossible pair tags %r" % (tags,))
    labs = [_view_labels(diagram, sm, outer) for _, _, outer, _ in views]
    return PairConfig(cls, min(labs))


def pair_sign(diagram, i, j):
    return diagram.arrows[i].sign * diagram.arrows[j].sign
