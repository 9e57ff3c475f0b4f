"""Reidemeister moves on Gauss diagrams, random walks, and finite-type
derivatives.

Moves are local templates on the endpoint circle:

- R1 adds or removes an isolated arrow (adjacent endpoints), in 4 kinds
  (tail-first or head-first, either sign).
- R2 adds or removes a pair of arrows with opposite signs whose endpoints
  form two blocks of adjacent positions, tails in one block and heads in
  the other.  The blocks can be joined in parallel fashion (the chords
  cross) or antiparallel fashion (nested chords); together with the choice
  of sign placement and of which block holds the tails this gives 8
  insertion variants.
- R3 slides a strand across a crossing.  The template involves three
  arrows X, Y, Z pairwise crossing through three blocks of two adjacent
  endpoints, and the move swaps the two endpoints inside each block.  Two
  sign patterns are supported: all-positive with blocks
  (tail X, tail Y), (head X, tail Z), (head Y, head Z), and its
  crossing-switched variant, all-negative with blocks
  (head X, head Y), (tail X, head Z), (tail Y, tail Z).

A gap index g in 0..2n names the insertion site just before old endpoint g
(g = 2n: before the basepoint, at the end).
"""

import random
from dataclasses import dataclass

from .diagram import Arrow, GaussDiagram


@dataclass(frozen=True)
class Move:
    kind: str
    data: tuple

    def __str__(self):
        return "%s%r" % (self.kind, self.data)


# -- R1 --------------------------------------------------------------------

def r1_add(diagram, gap, tail_first, sign):
    arrows = diagram.insert_gaps([(gap, 2)])
    p, q = gap, gap + 1
    arrows.append(Arrow(p, q, sign) if tail_first else Arrow(q, p, sign))
    return GaussDiagram(arrows)


def isolated_arrows(diagram):
    m = 2 * diagram.n
    return [i for i, a in enumerate(diagram.arrows)
            if (a.tail - a.head) % m in (1, m - 1)]


# -- R2 --------------------------------------------------------------------

# variant -> (parallel?, tails_in_first_block?, sign_of_first_tail)
_R2_VARIANTS = [(par, tf, s) for par in (True, False)
                for tf in (True, False) for s in (1, -1)]


def r2_add(diagram, gap1, gap2, variant):
    """Insert an R2 pair at gaps ``gap1 <= gap2``."""
    if gap1 > gap2:
        gap1, gap2 = gap2, gap1
    par, tails_first, s = _R2_VARIANTS[variant]
    arrows = diagram.insert_gaps([(gap1, 2), (gap2, 2)])
    a1, a2 = gap1, gap1 + 1
    b1, b2 = gap2 + 2, gap2 + 3
    if par:
        joins = ((a1, b1), (a2, b2))
    else:
        joins = ((a1, b2), (a2, b1))
    for idx, (pa, pb) in enumerate(joins):
        sign = s if idx == 0 else -s
        arrows.append(Arrow(pa, pb, sign) if tails_first else Arrow(pb, pa, sign))
    return GaussDiagram(arrows)


def r2_removable_pairs(diagram):
    """Arrow pairs matching an R2 block pattern."""
    m = 2 * diagram.n
    out = []
    for i in range(diagram.n):
        for j in range(i + 1, diagram.n):
            ai, aj = diagram.arrows[i], diagram.arrows[j]
            if ai.sign + aj.sign != 0 or ai.singular or aj.singular:
                continue
            tails = sorted((ai.tail, aj.tail))
            heads = sorted((ai.head, aj.head))
            if (tails[1] - tails[0]) % m not in (1, m - 1):
                continue
            if (heads[1] - heads[0]) % m not in (1, m - 1):
                continue
            # the two blocks must be disjoint
            if set(tails) & set(heads):
                continue
            out.append((i, j))
    return out


# -- R3 --------------------------------------------------------------------

def _adjacent(diagram, p, q):
    return (q - p) % (2 * diagram.n) == 1


def r3_moves(diagram):
    """All R3 template matches, as Moves carrying the three endpoint blocks."""
    d = diagram
    m = 2 * d.n
    if m < 6:
        return []
    epm = d.endpoint_map
    moves = []
    seen = set()
    for sign, block1_role in ((1, "O"), (-1, "U")):
        # block1 holds (first endpoints of X and Y); for the positive
        # template these are the tails, for the negative one the heads.
        for p in range(m):
            q = (p + 1) % m
            (x, rx), (y, ry) = epm[p], epm[q]
            for first, second in (((x, rx, p), (y, ry, q)),
                                  ((y, ry, q), (x, rx, p))):
                X, rX, pX = first
                Y, rY, pY = second
                if X == Y or rX != block1_role or rY != block1_role:
                    continue
                aX, aY = d.arrows[X], d.arrows[Y]
                if aX.sign != sign or aY.sign != sign:
                    continue
                if aX.singular or aY.singular:
                    continue
                # other endpoint of X must be adjacent to an endpoint of Z
                oX = aX.head if block1_role == "O" else aX.tail
                oY = aY.head if block1_role == "O" else aY.tail
                # forward orientation: blocks (pX,pY),(oX,tZ),(oY,hZ) in ccw
                # order within each block; backward: all blocks reversed.
                if (pY - pX) % m == 1:
                    zt = (oX + 1) % m
                    zh = (oY + 1) % m
                else:
                    zt = (oX - 1) % m
                    zh = (oY - 1) % m
                if zt not in epm or zh not in epm:
                    continue
                Z1, rZ1 = epm[zt]
                Z2, rZ2 = epm[zh]
                if Z1 != Z2 or Z1 in (X, Y):
                    continue
                aZ = d.arrows[Z1]
                if aZ.sign != sign or aZ.singular:
                    continue
                # positive template: Z meets X's head block with its tail and
                # Y's head block with its head; roles swap for the negative.
                if block1_role == "O":
                    ok = (rZ1 == "O" and rZ2 == "U")
                else:
                    ok = (rZ1 == "U" and rZ2 == "O")
                if not ok:
                    continue
                blocks = frozenset((frozenset((pX, pY)), frozenset((oX, zt)),
                                    frozenset((oY, zh))))
                if len({pX, pY, oX, zt, oY, zh}) != 6 or blocks in seen:
                    continue
                seen.add(blocks)
                moves.append(Move("r3", (((pX, pY), (oX, zt), (oY, zh)))))
    return moves


def _apply_r3(diagram, blocks):
    perm = {}
    for pa, pb in blocks:
        perm[pa] = pb
        perm[pb] = pa
    return GaussDiagram(Arrow(perm.get(a.tail, a.tail), perm.get(a.head, a.head),
                              a.sign, a.singular) for a in diagram.arrows)


# -- move application ------------------------------------------------------

def apply_move(diagram, move):
    if move.kind == "r1_add":
        gap, tail_first, sign = move.data
        return r1_add(diagram, gap, tail_first, sign)
    if move.kind == "r1_remove":
        return diagram.delete_arrows([move.data[0]])
    if move.kind == "r2_add":
        gap1, gap2, variant = move.data
        return r2_add(diagram, gap1, gap2, variant)
    if move.kind == "r2_remove":
        return diagram.delete_arrows(list(move.data))
    if move.kind == "r3":
        return _apply_r3(diagram, move.data)
    raise ValueError("unknown move kind %r" % (move.kind,))


def enumerate_moves(diagram, frame_preserving=False, rng=None,
                    insertion_cap=6, size_cap=None):
    """Applicable moves: all removals and R3 slides, plus a sample of the
    (quadratically many) insertion instances.  With ``rng`` None the
    insertions enumerated are the full R1 family and the R2 family at the
    basepoint gap only; pass an ``rng`` to sample insertion sites."""
    m = 2 * diagram.n
    moves = []
    grow_ok = size_cap is None or diagram.n < size_cap
    if not frame_preserving:
        for i in isolated_arrows(diagram):
            if not diagram.arrows[i].singular:
                moves.append(Move("r1_remove", (i,)))
    for pair in r2_removable_pairs(diagram):
        moves.append(Move("r2_remove", pair))
    moves.extend(r3_moves(diagram))
    if grow_ok:
        if rng is None:
            if not frame_preserving:
                for gap in range(m + 1):
                    for tf in (True, False):
                        for s in (1, -1):
                            moves.append(Move("r1_add", (gap, tf, s)))
            for v in range(8):
                moves.append(Move("r2_add", (0, 0, v)))
        else:
            if not frame_preserving:
                for _ in range(insertion_cap):
                    moves.append(Move("r1_add", (rng.randrange(m + 1),
                                                 rng.random() < 0.5,
                                                 rng.choice((1, -1)))))
            for _ in range(insertion_cap):
                g1 = rng.randrange(m + 1)
                g2 = rng.randrange(m + 1)
                moves.append(Move("r2_add", (min(g1, g2), max(g1, g2),
                                             rng.randrange(8))))
    return moves


def random_walk(diagram, steps, seed=None, rng=None, frame_preserving=False,
                size_cap=10, even_r1=False):
    """Apply ``steps`` uniformly sampled moves and return the final diagram.

    ``even_r1`` restricts R1 insertions/removals to an even total count by
    performing them in same-kind bursts of two (writhe-parity preserving
    walks for the framed invariant)."""
    if rng is None:
        rng = random.Random(seed)
    d = diagram
    k = 0
    while k < steps:
        moves = enumerate_moves(d, frame_preserving=frame_preserving,
                                rng=rng, size_cap=size_cap)
        if even_r1 and len(isolated_arrows(d)) < 2:
            moves = [mv for mv in moves if mv.kind != "r1_remove"]
        if not moves:
            break
        mv = rng.choice(moves)
        if even_r1 and mv.kind == "r1_add":
            d = apply_move(d, mv)
            gap2 = rng.randrange(2 * d.n + 1)
            mv2 = Move("r1_add", (gap2, rng.random() < 0.5, rng.choice((1, -1))))
            d = apply_move(d, mv2)
            k += 2
            continue
        if even_r1 and mv.kind == "r1_remove":
            d2 = apply_move(d, mv)
            rest = [i for i in isolated_arrows(d2)
                    if not d2.arrows[i].singular]
            if not rest:
                continue
            d = d2.delete_arrows([rng.choice(rest)])
            k += 2
            continue
        d = apply_move(d, mv)
        k += 1
    return d


# -- finite type -----------------------------------------------------------

def finite_type_derivative(diagram, invariant, multiplicative=False):
    """Alternating derivative of an invariant over the resolutions of the
    singular arrows.

    Additive invariants get sum of (-1)^(number of switched arrows) times
    the value; for invariants with values in the order-2 group, pass
    ``multiplicative=True`` to multiply the values instead.
    """
    k = len(diagram.singular_indices())
    total = None
    for mask in range(2 ** k):
        bits = [(mask >> b) & 1 for b in range(k)]
        val = invariant(diagram.resolve(bits))
        if multiplicative:
            total = val if total is None else total * val
        else:
            signed = -val if sum(bits) % 2 else val
            total = signed if total is None else total + signed
    return total
