"""Loop invariants of virtual knots computed from Gauss diagrams.

All invariants below are sums over the non-crossing arrow pairs of the
diagram.  Each pair contributes its configuration class (see
``weights.classify_pair``) with the product of its two arrow signs:

- ``three_loop(d, i, j, k)`` counts the configurations matched by the
  counting template for the integer triple (i, j, k);
- ``framed_invariant(d)`` multiplies group generators A(w(p), w(q)) over the
  pairs, using the crossing weights of the two smoothed arrows;
- ``general_invariant(d)`` keeps the whole signed formal sum of
  configurations, reduced to normal form in the quotient by the relations
  forced by the third Reidemeister move.

The quotient relations (labels in slot order outer-mid, mid-inner,
outer-inner):

    any configuration whose three labels are not pairwise distinct = 0
    C(x, y, z) = A(x, z, y) + A(y, z, x)
    B(x, y, z) = A(z, x, y) + A(z, y, x)

so the normal form is supported on class-A configurations with pairwise
distinct labels.
"""

from dataclasses import dataclass

from .groupa import AElement
from .weights import classify_pair, crossing_weight, pair_sign, PairConfig


def _require_regular(diagram):
    if diagram.singular_indices():
        raise ValueError("invariant is only defined for regular diagrams; "
                         "resolve singular arrows first")


def _signed_configs(diagram):
    for i, j in diagram.parallel_pairs():
        yield (i, j), pair_sign(diagram, i, j), classify_pair(diagram, i, j)


def _template_match(cfg, i, j, k):
    """Whether a configuration is counted by the (i, j, k) template.

    The template has one summand per configuration class: class A carries
    the labels (i, j, k) in slot order, class B carries {j, k} on the two
    adjacent slots with i on the far slot, class C carries {i, k} adjacent
    with j on the far slot.

    The template distinguishes chord directions (classes B and C), so the
    resulting invariant transforms under orientation reversal and under
    the all-crossings switch by exchanging the first two indices:
    three_loop(reverse(d), i, j, k) == three_loop(d, j, i, k).  It is
    blind to the all-signs mirror.
    """
    x, y, z = cfg.labels
    if cfg.cls == "A":
        return (x, y, z) == (i, j, k)
    if cfg.cls == "B":
        return z == i and {x, y} == {j, k}
    return z == j and {x, y} == {i, k}


def three_loop(diagram, i, j, k):
    """The integer loop invariant for the pairwise distinct triple (i, j, k)."""
    if len({i, j, k}) != 3:
        raise ValueError("indices i, j, k must be pairwise distinct")
    _require_regular(diagram)
    return sum(sign for _, sign, cfg in _signed_configs(diagram)
               if _template_match(cfg, i, j, k))


def counted_pairs(diagram):
    """The non-crossing pairs of the diagram (the pairs every loop
    invariant sums over)."""
    _require_regular(diagram)
    return diagram.parallel_pairs()


def framed_invariant(diagram):
    """Group-valued framed invariant: product of A(w(p), w(q)) over
    non-crossing pairs {p, q}, with w the crossing weight."""
    _require_regular(diagram)
    w = [crossing_weight(diagram, c) for c in range(diagram.n)]
    out = AElement.identity()
    for i, j in diagram.parallel_pairs():
        out = out * AElement.generator(w[i], w[j])
    return out


# -- formal sums of configurations ----------------------------------------

@dataclass(frozen=True)
class ACombination:
    """Integer combination of configuration classes, as a sorted tuple of
    ((cls, labels), coefficient) items."""

    terms: tuple = ()

    @classmethod
    def from_dict(cls, d):
        return cls(tuple(sorted((key, c) for key, c in d.items() if c)))

    def as_dict(self):
        return dict(self.terms)

    def __add__(self, other):
        d = self.as_dict()
        for key, c in other.terms:
            d[key] = d.get(key, 0) + c
        return ACombination.from_dict(d)

    def __neg__(self):
        return ACombination(tuple((key, -c) for key, c in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def is_zero(self):
        return not self.terms

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for (c, labels), coeff in self.terms:
            bits.append("%+d*%s%s" % (coeff, c, tuple(labels)))
        return " ".join(bits)


def raw_combination(diagram):
    """The unreduced signed sum of pair configurations."""
    _require_regular(diagram)
    d = {}
    for _, sign, cfg in _signed_configs(diagram):
        key = (cfg.cls, cfg.labels)
        d[key] = d.get(key, 0) + sign
    return ACombination.from_dict(d)


def normal_form(comb):
    """Reduce a combination modulo the quotient relations.

    Configurations with repeated labels are dropped; classes B and C are
    rewritten into class A.  The result is a canonical representative:
    two combinations are equal in the quotient iff their normal forms are
    equal.
    """
    out = {}
    def add(key, c):
        out[key] = out.get(key, 0) + c
    for (cls, labels), coeff in comb.terms:
        x, y, z = labels
        if len({x, y, z}) != 3:
            continue
        if cls == "A":
            add(("A", (x, y, z)), coeff)
        elif cls == "C":
            add(("A", (x, z, y)), coeff)
            add(("A", (y, z, x)), coeff)
        elif cls == "B":
            add(("A", (z, x, y)), coeff)
            add(("A", (z, y, x)), coeff)
        else:
            raise ValueError("unknown configuration class %r" % (cls,))
    return ACombination.from_dict(out)


def general_invariant(diagram):
    """Normal form of the signed configuration sum: the universal loop
    invariant with values in the quotient of formal configuration sums."""
    return normal_form(raw_combination(diagram))


def loop_functional(comb, i, j, k):
    """Evaluate the (i, j, k) counting template on a combination.

    Vanishes on the quotient relations, so it is well defined on normal
    forms; composed with ``general_invariant`` it recovers ``three_loop``.
    """
    if len({i, j, k}) != 3:
        raise ValueError("indices i, j, k must be pairwise distinct")
    total = 0
    for (cls, labels), coeff in comb.terms:
        if _template_match(PairConfig(cls, labels), i, j, k):
            total += coeff
    return total


# -- derived operations ----------------------------------------------------

def writhe_correction(value, diagram2):
    """Multiply a group value by A(0, w(a)) for every crossing a of
    ``diagram2`` (the correction making the framed invariant comparable
    across diagrams of different writhe parity)."""
    out = value
    for c in range(diagram2.n):
        out = out * AElement.generator(0, crossing_weight(diagram2, c))
    return out


@dataclass(frozen=True)
class SymmetryReport:
    """Support of the framed invariant against its images under the
    diagram symmetries.

    Under each of inverse, mirror and switch, every crossing weight is
    negated, so the support of the framed invariant is reflected by
    i -> -1 - i.  A knot is distinguished from its inverse/mirror/switch by
    the framed invariant exactly when the support is not symmetric under
    that reflection.
    """

    support: tuple
    reflected_support: tuple
    detects_inverse: bool
    detects_mirror: bool
    detects_switch: bool


def symmetry_report(diagram):
    v = framed_invariant(diagram)
    r = v.reflect()
    asym = v != r
    return SymmetryReport(tuple(v.sorted_support()), tuple(r.sorted_support()),
                          asym, asym, asym)


def connect_ratio(diagram1, diagram2, at_self=0, at_other=0):
    """framed_invariant(connect_sum) * framed_invariant(d1)^-1 *
    framed_invariant(d2)^-1 (in this group, inverse = identity map)."""
    total = framed_invariant(diagram1.connect_sum(diagram2, at_self, at_other))
    return total * framed_invariant(diagram1) * framed_invariant(diagram2)
