"""Bundled example diagrams and parameterized diagram families.

The ``.gauss`` files hold one signed Gauss code per file; the ``.lgauss``
files hold homology-labeled diagrams in the surface file format.  The
family builders construct towers of nested chords from a small blueprint:
each blueprint chord is replaced by a stack of parallel co-oriented copies.
"""

from importlib import resources

from .diagram import Arrow, GaussDiagram, parse_gauss_code
from .surface import LabeledSurfaceDiagram, parse_labeled

GAUSS_NAMES = (
    "virtual_trefoil",
    "loop_witness",
    "detection_example",
    "virtualization_base",
    "virtualization_way",
    "virtualization_sign",
    "framed_base",
    "framed_way",
    "framed_sign",
    "two_singular_witness",
)

LABELED_NAMES = (
    "realized_torus",
    "realized_torus_rich",
)


def fixture_text(filename):
    """Raw text of a bundled fixture file."""
    return (resources.files(__package__) / "fixtures" / filename).read_text()


def load(name):
    """Bundled diagram by name (see ``GAUSS_NAMES``)."""
    return parse_gauss_code(fixture_text(name + ".gauss"))


def load_labeled(name):
    """Bundled labeled surface diagram by name (see ``LABELED_NAMES``)."""
    return parse_labeled(fixture_text(name + ".lgauss"))


def all_diagrams():
    """All bundled unlabeled diagrams as a name -> diagram map."""
    return {name: load(name) for name in GAUSS_NAMES}


def virtualization_triple():
    """A diagram, its way-virtualization, and its sign-virtualization.

    The three are distinguished by the integer loop invariant with
    indices (2, 0, 3), which takes the values 1, 0 and -1 on them.
    """
    return (load("virtualization_base"), load("virtualization_way"),
            load("virtualization_sign"))


def framed_triple():
    """A second virtualization triple, distinguished by the framed invariant."""
    return (load("framed_base"), load("framed_way"), load("framed_sign"))


def expand_blueprint(chords, dirs, mults, signs=None, singular_class=None):
    """Replace each blueprint chord by a stack of parallel copies.

    ``chords`` pairs up abstract positions; a chord of multiplicity m
    becomes m nested co-oriented copies (the r-th endpoint of one block is
    joined to the (m-1-r)-th endpoint of the other).  ``dirs[k]`` truthy
    means the chord points from its first block to its second.
    """
    width = {}
    for k, (p, q) in enumerate(chords):
        width[p] = mults[k]
        width[q] = mults[k]
    start = {}
    s = 0
    for p in sorted(width):
        start[p] = s
        s += width[p]
    arrows = []
    for k, (p, q) in enumerate(chords):
        sign = 1 if signs is None else signs[k]
        for r in range(mults[k]):
            e1 = start[p] + r
            e2 = start[q] + (mults[k] - 1 - r)
            t, h = (e1, e2) if dirs[k] else (e2, e1)
            arrows.append(Arrow(t, h, sign, singular=(k == singular_class)))
    return GaussDiagram(sorted(arrows, key=lambda a: min(a.tail, a.head)))


def tower(n):
    """Four-class family with crossing weights (n, 0, -2, 1).

    The framed invariant of ``tower(n)`` is the interval generator
    A(0, n) for even n and A(0, -2) for odd n.
    """
    if n < 1:
        raise ValueError("tower requires n >= 1")
    return expand_blueprint([(0, 2), (3, 6), (1, 4), (5, 7)],
                            (1, 0, 0, 0), (1, 1, n, n))


def one_singular_family(i):
    """One-singular-crossing diagrams whose framed derivative is A(-i, i).

    For odd i >= 1, the two resolutions have framed invariant A(-1, i)
    and A(-i, -1), so the multiplicative derivative is A(-i, i).
    """
    if i < 1 or i % 2 == 0:
        raise ValueError("one_singular_family requires odd i >= 1")
    return expand_blueprint([(0, 2), (1, 3), (4, 5), (6, 7), (8, 9)],
                            (0, 1, 0, 0, 0), (1, i, 1, 1, 1),
                            singular_class=0)
