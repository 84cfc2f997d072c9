"""Combinatorial SL(2,Z) action on origamis and finite orbit enumeration.

Generators and their linear parts:

* ``R = [[1, 1], [0, 1]]`` (horizontal shear): ``(h, v) -> (h, v h^-1)``
* ``L = [[1, 0], [1, 1]]`` (vertical shear):   ``(h, v) -> (h v^-1, v)``
* ``S = [[0, -1], [1, 0]]`` (rotation):        ``(h, v) -> (v^-1, h)``

Each formula realizes the surface ``g . O`` (matrix acting on the plane)
with a specific square relabeling: for R the new square i keeps the base of
the old square i after re-cutting the sheared parallelograms, and similarly
for L and S.  Holonomy vectors of cycles transform by the matrix itself;
this is pinned down by exact tests in the homology module rather than
trusted.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum

from . import perms
from .errors import NotPrimitive, OrbitLimitExceeded
from .perms import Perm
from .surface import Origami, canonical_form_with_relabeling, period_lattice_index

ORBIT_CAP_DEFAULT = 10**6


class Generator(Enum):
    R = "R"
    L = "L"
    S = "S"

    @property
    def matrix(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return {
            Generator.R: ((1, 1), (0, 1)),
            Generator.L: ((1, 0), (1, 1)),
            Generator.S: ((0, -1), (1, 0)),
        }[self]


GENERATORS = (Generator.R, Generator.L, Generator.S)


def act(g: Generator, o: Origami) -> Origami:
    """Apply one generator (left action of its matrix on the surface)."""
    return act_power(g, o, 1)


def act_power(g: Generator, o: Origami, k: int) -> Origami:
    """Apply g^k in one shot; shears have closed-form powers."""
    if g is Generator.R:
        return Origami(o.h, perms.compose(o.v, perms.power(o.h, -k)))
    if g is Generator.L:
        return Origami(perms.compose(o.h, perms.power(o.v, -k)), o.v)
    if g is Generator.S:
        k %= 4
        h, v = o.h, o.v
        for _ in range(k):
            h, v = perms.invert(v), h
        return Origami(h, v)
    raise ValueError(g)


def act_word(word, o: Origami) -> Origami:
    """Apply a word of (Generator, power) pairs; the leftmost factor is the
    outermost matrix, so the word is applied right to left."""
    for g, k in reversed(list(word)):
        o = act_power(g, o, k)
    return o


def matrix_to_word(mat) -> list[tuple[Generator, int]]:
    """Decompose an SL(2,Z) matrix into (generator, power) factors whose
    left-to-right matrix product is the input."""
    (a, b), (c, d) = mat
    if a * d - b * c != 1:
        raise ValueError(f"matrix {mat} does not have determinant 1")
    word: list[tuple[Generator, int]] = []
    while c != 0:
        q = a // c
        if q != 0:
            word.append((Generator.R, q))
            a, b = a - q * c, b - q * d
        word.append((Generator.S, 1))
        # S^-1 * M = [[c, d], [-a, -b]]
        a, b, c, d = c, d, -a, -b
    # now c == 0, a*d == 1
    if a == 1:
        if b != 0:
            word.append((Generator.R, b))
    else:
        # [[-1, b], [0, -1]] = S^2 R^(-b)
        word.append((Generator.S, 2))
        if b != 0:
            word.append((Generator.R, -b))
    return word


def apply_matrix(mat, o: Origami) -> Origami:
    """Left action of an arbitrary SL(2,Z) matrix."""
    return act_word(matrix_to_word(mat), o)


def word_to_matrix(word) -> tuple[tuple[int, int], tuple[int, int]]:
    m = ((1, 0), (0, 1))
    for g, k in word:
        if g is Generator.R:
            gm = ((1, k), (0, 1))
        elif g is Generator.L:
            gm = ((1, 0), (k, 1))
        else:
            gm = ((1, 0), (0, 1))
            for _ in range(k % 4):
                gm = _mat_mul2(gm, ((0, -1), (1, 0)))
        m = _mat_mul2(m, gm)
    return m


def _mat_mul2(x, y):
    return (
        (x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]),
        (x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]),
    )


@dataclass(frozen=True)
class OrbitEdge:
    target: int
    relabeling: Perm  # maps labels of act(g, source) to labels of the target vertex


@dataclass
class OrbitGraph:
    """SL(2,Z) orbit of the canonical form of an origami.

    ``vertices`` holds canonical forms in BFS discovery order, ``edges``
    maps ``(vertex_index, Generator)`` to an :class:`OrbitEdge`, and
    ``base`` is the index of the input origami's class (always 0).
    """

    vertices: list[Origami]
    edges: dict[tuple[int, Generator], OrbitEdge]
    base: int
    base_relabeling: Perm  # maps the input origami's labels to vertices[base]
    reduced: bool
    period_lattice_index: int

    @property
    def size(self) -> int:
        return len(self.vertices)

    def target(self, i: int, g: Generator) -> int:
        return self.edges[(i, g)].target

    def to_json(self) -> dict:
        return {
            "schema_version": 1,
            "size": self.size,
            "base": self.base,
            "reduced": self.reduced,
            "period_lattice_index": self.period_lattice_index,
            "vertices": [
                {"h": perms.one_line_string(o.h), "v": perms.one_line_string(o.v)}
                for o in self.vertices
            ],
            "edges": [
                [i, g.value, e.target]
                for (i, g), e in sorted(
                    self.edges.items(), key=lambda kv: (kv[0][0], kv[0][1].value)
                )
            ],
        }


def orbit(o: Origami, cap: int = ORBIT_CAP_DEFAULT,
          generators=GENERATORS) -> OrbitGraph:
    """BFS closure of the canonical form of ``o`` under the generator set."""
    base, base_pi = canonical_form_with_relabeling(o)
    index = {base.key(): 0}
    vertices = [base]
    edges: dict[tuple[int, Generator], OrbitEdge] = {}
    head = 0
    while head < len(vertices):
        cur = vertices[head]
        for g in generators:
            moved = act(g, cur)
            canon, pi = canonical_form_with_relabeling(moved)
            j = index.get(canon.key())
            if j is None:
                j = len(vertices)
                if j >= cap:
                    raise OrbitLimitExceeded(
                        f"orbit exceeded {cap} vertices; raise the cap if intended"
                    )
                index[canon.key()] = j
                vertices.append(canon)
            edges[(head, g)] = OrbitEdge(j, pi)
        head += 1
    return OrbitGraph(
        vertices=vertices,
        edges=edges,
        base=0,
        base_relabeling=base_pi,
        reduced=period_lattice_index(o) == 1,
        period_lattice_index=period_lattice_index(o),
    )


def veech_index(o: Origami, cap: int = ORBIT_CAP_DEFAULT) -> int:
    """Index of the stabilizer of ``o`` in SL(2,Z) = number of orbit vertices."""
    return orbit(o, cap=cap).size


def bezout_matrix(p: int, q: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """A determinant-1 matrix A with A (p, q)^T = (1, 0)^T, for primitive (p, q)."""
    if math.gcd(abs(p), abs(q)) != 1 or (p, q) == (0, 0):
        raise NotPrimitive(f"direction ({p}, {q}) is not a primitive vector")
    # extended Euclid: a p + b q = 1
    a, b = _extended_gcd(p, q)
    return ((a, b), (-q, p))


def _extended_gcd(p: int, q: int) -> tuple[int, int]:
    old_r, r = p, q
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        quo = old_r // r
        old_r, r = r, old_r - quo * r
        old_s, s = s, old_s - quo * s
        old_t, t = t, old_t - quo * t
    if old_r < 0:
        old_s, old_t = -old_s, -old_t
    return old_s, old_t


def orbit_json_string(g: OrbitGraph) -> str:
    return json.dumps(g.to_json(), indent=2)
