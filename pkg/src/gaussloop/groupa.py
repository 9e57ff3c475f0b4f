"""The abelian group generated by symbols A(i, j), i, j integers, subject to

    A(i, i) = 1,   A(i, j)^2 = 1,   A(i, j) A(j, k) = A(i, k),

with all generators commuting.  The group is isomorphic to a direct sum of
copies of Z/2 indexed by the integers: A(i, j) maps to the finite support
set {min(i,j), ..., max(i,j) - 1}, and multiplication becomes symmetric
difference of supports.  Elements are represented by their support.
"""

from dataclasses import dataclass


def _interval(i, j):
    lo, hi = min(i, j), max(i, j)
    return frozenset(range(lo, hi))


@dataclass(frozen=True)
class AElement:
    """Element of the group, stored as its Z/2 support set."""

    support: frozenset = frozenset()

    @classmethod
    def generator(cls, i, j):
        return cls(_interval(i, j))

    @classmethod
    def identity(cls):
        return cls()

    def __mul__(self, other):
        return AElement(self.support ^ other.support)

    def inverse(self):
        return self  # every element has order <= 2

    def is_identity(self):
        return not self.support

    def support_parity(self):
        return len(self.support) % 2

    def shift(self):
        """Coordinate shift: support index i moves to i - 1."""
        return AElement(frozenset(i - 1 for i in self.support))

    def reflect(self):
        """Index negation: support index i moves to -1 - i.

        This is the image of the support under inverting all generator
        indices: A(i, j) maps to A(-i, -j).
        """
        return AElement(frozenset(-1 - i for i in self.support))

    def sorted_support(self):
        return sorted(self.support)

    def generator_factorization(self):
        """Write the element as a product of generators A(i, j) with
        disjoint index intervals, one per maximal run of the support."""
        runs = []
        for i in self.sorted_support():
            if runs and runs[-1][1] == i:
                runs[-1] = (runs[-1][0], i + 1)
            else:
                runs.append((i, i + 1))
        return runs

    def __str__(self):
        runs = self.generator_factorization()
        if not runs:
            return "1"
        return " ".join("A(%d,%d)" % r for r in runs)

    def __repr__(self):
        return "AElement(%s)" % (self,)


def product(elements):
    out = AElement.identity()
    for e in elements:
        out = out * e
    return out
