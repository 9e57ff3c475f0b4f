"""Loop invariants for knots in thickened surfaces.

A labeled surface diagram is a Gauss diagram together with a genus g and a
homology label in Z^(2g) for every boundary arc of the circle (arc k runs
ccw from endpoint k to endpoint k+1).  The label records the class of the
corresponding strand segment on the surface; the class of any closed
component obtained by smoothing is the sum of its arc labels.

``surface_invariant`` refines the virtual ``general_invariant``: each
non-crossing pair contributes its configuration class labeled by the three
component classes of the smoothing (slot order: outer, middle, inner
region, canonicalized exactly as in the virtual case, except that the
class-B/C symmetry swaps the outer and inner slots).  The quotient
relations are

    any configuration with a zero-homology label = 0
    C(a, b, c) = A(b, a, c) + A(b, c, a)
    B(a, b, c) = A(c, a, b) + A(a, c, b)

``weight_image`` replaces each label pair by the absolute homological
intersection pairing, mapping surface configurations onto virtual weight
configurations; ``commuting_check`` verifies that this projection of the
surface invariant equals the virtual invariant of the underlying diagram.
"""

from dataclasses import dataclass

from .diagram import GaussDiagram, GaussCodeError, parse_gauss_code
from .invariants import ACombination, general_invariant, normal_form
from .weights import pair_sign, _views


def intersection_number(a, b):
    """Algebraic intersection pairing of two classes in Z^(2g), with the
    standard symplectic form on each handle block."""
    if len(a) != len(b) or len(a) % 2:
        raise ValueError("classes must have equal even length")
    total = 0
    for k in range(0, len(a), 2):
        total += a[k] * b[k + 1] - a[k + 1] * b[k]
    return total


def omega(a, b):
    """Unsigned pairing of two classes (the weight of the pair)."""
    return abs(intersection_number(a, b))


def _zero(genus):
    return (0,) * (2 * genus)


@dataclass(frozen=True)
class LabeledSurfaceDiagram:
    """Gauss diagram with genus and per-arc homology labels."""

    diagram: GaussDiagram
    genus: int
    arc_labels: tuple

    def __post_init__(self):
        if len(self.arc_labels) != 2 * self.diagram.n:
            raise ValueError("need one label per boundary arc")
        for lab in self.arc_labels:
            if len(lab) != 2 * self.genus:
                raise ValueError("labels must have length 2 * genus")

    @property
    def n(self):
        return self.diagram.n

    def total_class(self):
        return tuple(sum(c) for c in zip(*self.arc_labels)) \
            if self.arc_labels else _zero(self.genus)

    def component_class(self, intervals):
        out = [0] * (2 * self.genus)
        for iv in intervals:
            for k, c in enumerate(self.arc_labels[iv]):
                out[k] += c
        return tuple(out)

    def serialize(self):
        lines = ["genus %d" % self.genus, self.diagram.code()]
        for k, lab in enumerate(self.arc_labels):
            lines.append("arc %d: %s" % (k, " ".join(str(c) for c in lab)))
        return "\n".join(lines) + "\n"


def parse_labeled(text):
    """Parse the labeled format: a ``genus g`` line, a Gauss code line, then
    one ``arc k: c1 ... c2g`` line per boundary arc."""
    lines = [ln for ln in text.splitlines()
             if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or not lines[0].split()[0] == "genus":
        raise GaussCodeError("labeled input must start with a 'genus g' line")
    try:
        genus = int(lines[0].split()[1])
    except (IndexError, ValueError):
        raise GaussCodeError("malformed genus line %r" % lines[0])
    diagram = parse_gauss_code(lines[1])
    labels = {}
    for ln in lines[2:]:
        head, _, rest = ln.partition(":")
        parts = head.split()
        if len(parts) != 2 or parts[0] != "arc":
            raise GaussCodeError("malformed arc line %r" % ln)
        k = int(parts[1])
        lab = tuple(int(tok) for tok in rest.split())
        if len(lab) != 2 * genus:
            raise GaussCodeError("arc %d label must have %d coordinates"
                                 % (k, 2 * genus))
        labels[k] = lab
    full = tuple(labels.get(k, _zero(genus)) for k in range(2 * diagram.n))
    return LabeledSurfaceDiagram(diagram, genus, full)


# -- the surface invariant -------------------------------------------------

def _surface_config(ld, i, j):
    """Canonical (class, region-class triple) of a non-crossing pair."""
    d = ld.diagram
    sm = d.smooth_pair(i, j)
    views = list(_views(d, i, j))
    tags = {(t1, t2) for t1, t2, _, _ in views}
    # region classes in basepoint component order, then per-view slot order
    comp_cls = [ld.component_class(c) for c in sm.components]

    def view_triple(outer):
        a = d.arrows[outer]
        inner = j if outer == i else i
        ai = d.arrows[inner]
        far_in_arc = not d.arc_contains(a.tail, a.head, ai.tail)
        outer_comp = None
        for ci in (0, 2):
            iv = next(iter(sm.components[ci]))
            if d.arc_contains(a.tail, a.head, iv + 0.5) == far_in_arc:
                outer_comp = ci
                break
        inner_comp = 2 if outer_comp == 0 else 0
        return (comp_cls[outer_comp], comp_cls[1], comp_cls[inner_comp])

    if tags == {("T", "T"), ("H", "H")}:
        for t1, t2, outer, _ in views:
            if (t1, t2) == ("T", "T"):
                return ("A", view_triple(outer))
    cls = "B" if tags == {("T", "H")} else "C"
    return (cls, min(view_triple(outer) for _, _, outer, _ in views))


def surface_combination(ld):
    """Unreduced signed sum of surface configurations."""
    if ld.diagram.singular_indices():
        raise ValueError("invariant is only defined for regular diagrams")
    d = {}
    for i, j in ld.diagram.parallel_pairs():
        key = _surface_config(ld, i, j)
        d[key] = d.get(key, 0) + pair_sign(ld.diagram, i, j)
    return ACombination.from_dict(d)


def surface_normal_form(comb, genus):
    """Reduce modulo the surface relations: drop zero-labeled terms and
    rewrite classes B and C into class A."""
    zero = _zero(genus)
    out = {}

    def add(key, c):
        out[key] = out.get(key, 0) + c
    for (cls, labels), coeff in comb.terms:
        a, b, c = labels
        if zero in (a, b, c):
            continue
        if cls == "A":
            add(("A", (a, b, c)), coeff)
        elif cls == "C":
            add(("A", (b, a, c)), coeff)
            add(("A", (b, c, a)), coeff)
        elif cls == "B":
            add(("A", (c, a, b)), coeff)
            add(("A", (a, c, b)), coeff)
        else:
            raise ValueError("unknown configuration class %r" % (cls,))
    return ACombination.from_dict(out)


def surface_invariant(ld):
    """Normal form of the surface configuration sum."""
    return surface_normal_form(surface_combination(ld), ld.genus)


def gv_functional(comb, alpha, beta, gamma, genus):
    """Counting functional on surface combinations for a class triple.

    Defined (vanishing on the relations) when no class is zero and either
    all three are distinct or ``alpha == gamma != beta``.
    """
    zero = _zero(genus)
    if zero in (alpha, beta, gamma):
        raise ValueError("classes must be nonzero")
    distinct = len({alpha, beta, gamma}) == 3
    if not distinct and not (alpha == gamma and beta != gamma):
        raise ValueError("classes must be pairwise distinct, or the outer "
                         "two equal and distinct from the middle one")
    total = 0
    for (cls, labels), coeff in comb.terms:
        r1, r2, r3 = labels
        if cls == "A":
            hit = (r1, r2, r3) == (alpha, beta, gamma)
        elif cls == "B":
            hit = r2 == gamma and {r1, r3} == {alpha, beta}
        else:
            hit = r2 == alpha and {r1, r3} == {beta, gamma}
        if hit:
            total += coeff
    return total


# -- projection to the virtual invariant -----------------------------------

def weight_image(comb):
    """Replace each homology triple (a, b, c) by the weight triple
    (omega(a,b), omega(b,c), omega(a,c)) on the same configuration shape,
    landing in virtual configuration combinations."""
    out = {}
    for (cls, labels), coeff in comb.terms:
        a, b, c = labels
        key = (omega(a, b), omega(b, c), omega(a, c))
        if cls in ("B", "C"):
            key = min(key, (key[1], key[0], key[2]))
        k = (cls, key)
        out[k] = out.get(k, 0) + coeff
    return ACombination.from_dict(out)


def project_to_virtual(ld):
    """Forget the surface realization."""
    return ld.diagram


def commuting_check(ld):
    """True when the weight image of the surface invariant agrees with the
    virtual invariant of the underlying Gauss diagram (which holds whenever
    the labels come from an actual realization on the surface)."""
    lhs = normal_form(weight_image(surface_combination(ld)))
    rhs = general_invariant(project_to_virtual(ld))
    return lhs == rhs


# -- labeled Reidemeister moves --------------------------------------------

def _merge_labels(ld, removed_positions):
    """Arc labels after deleting endpoints: arcs between surviving
    endpoints absorb the labels of the removed subdivisions."""
    m = 2 * ld.n
    survivors = [p for p in range(m) if p not in removed_positions]
    out = []
    for idx, p in enumerate(survivors):
        q = survivors[(idx + 1) % len(survivors)]
        lab = list(ld.arc_labels[p])
        r = (p + 1) % m
        while r != q:
            for k, c in enumerate(ld.arc_labels[r]):
                lab[k] += c
            r = (r + 1) % m
        out.append(tuple(lab))
    return tuple(out)


def _insert_pieces(labels, gap, pieces):
    """Split the arc containing insertion gap ``gap`` into ``pieces``.

    The pieces must sum to the old arc label.  Gap g lies just before
    endpoint g, inside arc g-1; gaps 0 and m both lie inside the wrap arc
    but place the new endpoints at the start resp. the end of the position
    range.  Returns the new circular label list.
    """
    m = len(labels)
    if m == 0:
        raise ValueError("cannot split arcs of an empty diagram")
    old = labels[(gap - 1) % m]
    assert tuple(sum(c) for c in zip(*pieces)) == tuple(old)
    if gap == 0:
        # wrap arc splits; its first piece becomes the new wrap arc
        return list(pieces[1:]) + labels[:m - 1] + [pieces[0]]
    if gap == m:
        return labels[:m - 1] + list(pieces)
    return labels[:gap - 1] + list(pieces) + labels[gap:]


def _vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def labeled_apply(ld, move, splits=None):
    """Apply a Reidemeister move to a labeled diagram.

    ``splits`` supplies the class of the first sub-arc at each insertion
    gap (sequence of classes, one per gap in gap order, defaulting to
    zero); the short arcs created inside a kink or bigon always carry the
    zero class.  Removals and R3 slides require those short arcs to carry
    the zero class and raise ValueError otherwise.
    """
    from . import moves as mv
    zero = _zero(ld.genus)
    base = ld.diagram
    labels = list(ld.arc_labels)
    m = 2 * ld.n
    if move.kind == "r1_add":
        gap = move.data[0]
        x = splits[0] if splits else zero
        old = labels[(gap - 1) % m] if m else zero
        if not m:
            raise ValueError("cannot insert into an empty diagram")
        new_labels = _insert_pieces(labels, gap, [x, zero, _vsub(_vsub(old, x), zero)])
        return LabeledSurfaceDiagram(mv.apply_move(base, move), ld.genus,
                                     tuple(new_labels))
    if move.kind == "r2_add":
        g1, g2, _ = move.data
        s = list(splits) if splits else [zero, zero]
        if g1 > g2:
            g1, g2 = g2, g1
            s = [s[1], s[0]]
        if g1 == g2:
            old = labels[(g1 - 1) % m]
            rest = _vsub(_vsub(old, s[0]), s[1])
            pieces = [s[0], zero, s[1], zero, rest]
            new_labels = _insert_pieces(labels, g1, pieces)
        elif g1 == 0 and g2 == m:
            # both gaps split the wrap arc; the second block sits at the
            # end of the position range, the first at the start
            old = labels[m - 1]
            rest = _vsub(_vsub(old, s[0]), s[1])
            new_labels = [zero, rest] + labels[:m - 1] + [s[1], zero, s[0]]
        else:
            old2 = labels[(g2 - 1) % m]
            new_labels = _insert_pieces(labels, g2, [s[1], zero, _vsub(old2, s[1])])
            old1 = labels[(g1 - 1) % m]
            new_labels = _insert_pieces(new_labels, g1, [s[0], zero, _vsub(old1, s[0])])
        return LabeledSurfaceDiagram(mv.apply_move(base, move), ld.genus,
                                     tuple(new_labels))
    if move.kind == "r1_remove":
        a = base.arrows[move.data[0]]
        p = min(a.tail, a.head) if abs(a.tail - a.head) == 1 else max(a.tail, a.head)
        if ld.arc_labels[p] != zero:
            raise ValueError("kink arc carries a nonzero class")
        gone = set(a.endpoints())
        return LabeledSurfaceDiagram(mv.apply_move(base, move), ld.genus,
                                     _merge_labels(ld, gone))
    if move.kind == "r2_remove":
        i, j = move.data
        ai, aj = base.arrows[i], base.arrows[j]
        for block in (sorted((ai.tail, aj.tail)), sorted((ai.head, aj.head))):
            p, q = block
            inner = p if q - p == 1 else q
            if ld.arc_labels[inner] != zero:
                raise ValueError("bigon arc carries a nonzero class")
        gone = set(ai.endpoints()) | set(aj.endpoints())
        return LabeledSurfaceDiagram(mv.apply_move(base, move), ld.genus,
                                     _merge_labels(ld, gone))
    if move.kind == "r3":
        for pa, pb in move.data:
            inner = pa if (pb - pa) % m == 1 else pb
            if ld.arc_labels[inner] != zero:
                raise ValueError("slide arc carries a nonzero class")
        return LabeledSurfaceDiagram(mv.apply_move(base, move), ld.genus,
                                     ld.arc_labels)
    raise ValueError("unsupported labeled move %r" % (move.kind,))
