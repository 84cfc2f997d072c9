"""Origamis (square-tiled surfaces) as pairs of permutations.

An origami on n unit squares is encoded by two permutations of
``{0, ..., n-1}``: ``h`` sends each square to the one glued to its right
edge, ``v`` to the one glued to its top edge.  The pair must generate a
transitive group (connected surface).

Conventions fixed here and relied on everywhere else:

* squares are 0-indexed, ``h`` = right neighbor, ``v`` = up neighbor;
* corners of squares are identified along cycles of the commutator
  ``c = v h v^-1 h^-1`` (one counterclockwise turn around the bottom-left
  corner crosses four quadrants and lands on the bottom-left corner of
  ``c(i)``);  a cycle of length m is a cone point of angle 2*pi*m, i.e. a
  zero of order m - 1; fixed points of c are regular marked points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import perms
from .errors import Disconnected, SizeMismatch
from .perms import Perm


@dataclass(frozen=True)
class Origami:
    """A connected square-tiled surface. Instances are validated on creation."""

    h: Perm
    v: Perm

    def __post_init__(self):
        h = perms.check_perm(self.h)
        v = perms.check_perm(self.v)
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "v", v)
        if len(h) != len(v):
            raise SizeMismatch(f"h acts on {len(h)} squares, v on {len(v)}")
        if len(h) == 0:
            raise SizeMismatch("an origami needs at least one square")
        if not perms.group_is_transitive(h, v):
            raise Disconnected("<h, v> is not transitive: the surface is disconnected")

    @property
    def n(self) -> int:
        """Number of unit squares (= flat area)."""
        return len(self.h)

    def key(self) -> tuple:
        return (self.h, self.v)

    def __str__(self):
        return f"{perms.cycle_string(self.h)} / {perms.cycle_string(self.v)}"


@dataclass(frozen=True)
class Stratum:
    """Zero orders (descending), genus, and the number of regular marked points."""

    orders: tuple[int, ...]
    genus: int
    marked_points: int

    def __str__(self):
        if not self.orders:
            return f"H(0) torus, {self.marked_points} marked point(s)"
        body = ",".join(map(str, self.orders))
        extra = f", {self.marked_points} marked point(s)" if self.marked_points else ""
        return f"H({body}) genus {self.genus}{extra}"


def new_origami(h, v) -> Origami:
    """Validate and build an origami from two permutations (any iterable form)."""
    h = tuple(h)
    v = tuple(v)
    if len(h) != len(v):
        raise SizeMismatch(f"h acts on {len(h)} squares, v on {len(v)}")
    return Origami(h, v)


def commutator(o: Origami) -> Perm:
    """c = v h v^-1 h^-1 (function composition, rightmost applied first)."""
    return perms.compose(
        o.v, perms.compose(o.h, perms.compose(perms.invert(o.v), perms.invert(o.h)))
    )


def vertex_cycles(o: Origami) -> list[tuple[int, ...]]:
    """Cycles of the commutator; they partition the squares and index the
    vertices of the square cell structure (one vertex per cycle)."""
    return perms.cycles(commutator(o))


def stratum(o: Origami) -> Stratum:
    cyc = vertex_cycles(o)
    orders = tuple(sorted((len(c) - 1 for c in cyc if len(c) > 1), reverse=True))
    marked = sum(1 for c in cyc if len(c) == 1)
    total = sum(orders)
    if total % 2:
        raise AssertionError("sum of zero orders must be even")
    genus = 1 + total // 2
    # Euler characteristic cross-check: V - 2n + n = 2 - 2g.
    euler_genus = 1 + (o.n - len(cyc)) // 2
    if euler_genus != genus or (o.n - len(cyc)) % 2:
        raise AssertionError("genus from zero orders disagrees with Euler characteristic")
    return Stratum(orders, genus, marked)


def _bfs_relabeling(o: Origami, base: int) -> Perm:
    """Relabeling that assigns labels by BFS discovery order from ``base``,
    scanning neighbors in the fixed order (h, h^-1, v, v^-1)."""
    n = o.n
    hi = perms.invert(o.h)
    vi = perms.invert(o.v)
    label = [-1] * n
    label[base] = 0
    order = [base]
    head = 0
    nxt = 1
    while head < len(order):
        x = order[head]
        head += 1
        for g in (o.h, hi, o.v, vi):
            y = g[x]
            if label[y] < 0:
                label[y] = nxt
                nxt += 1
                order.append(y)
    return tuple(label)


def canonical_form_with_relabeling(o: Origami) -> tuple[Origami, Perm]:
    """Canonical representative of the relabeling class of ``o``.

    Returns ``(canonical, pi)`` where ``pi`` maps old labels to new ones:
    ``canonical.h = pi h pi^-1``.  Two origamis are simultaneous conjugates
    iff their canonical forms are equal.
    """
    best = None
    best_pi = None
    for base in range(o.n):
        pi = _bfs_relabeling(o, base)
        key = perms.conjugate(o.h, pi) + perms.conjugate(o.v, pi)
        if best is None or key < best:
            best = key
            best_pi = pi
    n = o.n
    return Origami(best[:n], best[n:]), best_pi


def canonical_form(o: Origami) -> Origami:
    return canonical_form_with_relabeling(o)[0]


def period_lattice_index(o: Origami) -> int:
    """Index in Z^2 of the lattice generated by holonomy vectors of closed
    curves.  Index 1 means the origami is reduced (primitive torus cover)."""
    n = o.n
    pot = [None] * n
    pot[0] = (0, 0)
    queue = [0]
    hi = perms.invert(o.h)
    vi = perms.invert(o.v)
    steps = [(o.h, (1, 0)), (hi, (-1, 0)), (o.v, (0, 1)), (vi, (0, -1))]
    while queue:
        x = queue.pop()
        px, py = pot[x]
        for g, (dx, dy) in steps:
            y = g[x]
            if pot[y] is None:
                pot[y] = (px + dx, py + dy)
                queue.append(y)
    gens = []
    for x in range(n):
        px, py = pot[x]
        for g, (dx, dy) in ((o.h, (1, 0)), (o.v, (0, 1))):
            qx, qy = pot[g[x]]
            vec = (px + dx - qx, py + dy - qy)
            if vec != (0, 0):
                gens.append(vec)
    # Incremental 2D Hermite reduction: basis rows (a, b) and (0, d).
    a = b = d = 0
    for (x, y) in gens:
        while x != 0:
            q = a // x
            a, b, x, y = x, y, a - q * x, b - q * y
        d = math.gcd(d, y)
    return abs(a * d)


def is_reduced(o: Origami) -> bool:
    return period_lattice_index(o) == 1


def random_transitive_pair(rng, n: int) -> Origami:
    """Random valid origami on n squares (rng: random.Random; testing helper)."""
    while True:
        h = list(range(n))
        v = list(range(n))
        rng.shuffle(h)
        rng.shuffle(v)
        if perms.group_is_transitive(tuple(h), tuple(v)):
            return Origami(tuple(h), tuple(v))


def surface_json(o: Origami) -> dict:
    s = stratum(o)
    return {
        "n": o.n,
        "h": perms.one_line_string(o.h),
        "v": perms.one_line_string(o.v),
        "stratum": list(s.orders),
        "genus": s.genus,
        "marked_points": s.marked_points,
        "reduced": is_reduced(o),
        "period_lattice_index": period_lattice_index(o),
    }
