import random

from gaussloop.diagram import Arrow, GaussDiagram


def random_diagram(rng, n, singular_count=0, signs=(1, -1)):
    """Uniformly random chord matching with random signs and directions."""
    points = list(range(2 * n))
    rng.shuffle(points)
    singular = set(rng.sample(range(n), singular_count))
    arrows = []
    for k in range(n):
        p, q = points[2 * k], points[2 * k + 1]
        arrows.append(Arrow(p, q, rng.choice(signs), singular=(k in singular)))
    return GaussDiagram(sorted(arrows, key=lambda a: min(a.tail, a.head)))
