"""Permutations in one-line notation, stored as tuples of ints.

A permutation on n points is a tuple ``p`` of length n with ``p[i]`` the
image of ``i``.  Composition is function composition: ``compose(p, q)[i] ==
p[q[i]]``.
"""

from __future__ import annotations

import re

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def check_perm(p) -> Perm:
    """Return ``p`` as a tuple, raising ValueError if it is not a permutation."""
    p = tuple(p)
    if sorted(p) != list(range(len(p))):
        raise ValueError(f"not a permutation of 0..{len(p) - 1}: {p}")
    return p


def compose(p: Perm, q: Perm) -> Perm:
    """p after q: (p o q)(i) = p[q[i]]."""
    return tuple(p[q[i]] for i in range(len(q)))


def invert(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def power(p: Perm, k: int) -> Perm:
    """p^k for any integer k, computed cycle by cycle."""
    n = len(p)
    out = [0] * n
    seen = [False] * n
    for start in range(n):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        j = p[start]
        while j != start:
            seen[j] = True
            cyc.append(j)
            j = p[j]
        m = len(cyc)
        shift = k % m
        for idx, sq in enumerate(cyc):
            out[sq] = cyc[(idx + shift) % m]
    return tuple(out)


def conjugate(p: Perm, g: Perm) -> Perm:
    """g p g^-1, i.e. the relabeling of p by g."""
    out = [0] * len(p)
    for i in range(len(p)):
        out[g[i]] = g[p[i]]
    return tuple(out)


def cycles(p: Perm) -> list[tuple[int, ...]]:
    """Disjoint cycles of p, each starting at its least element, sorted."""
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        j = p[start]
        while j != start:
            seen[j] = True
            cyc.append(j)
            j = p[j]
        out.append(tuple(cyc))
    return out


def cycle_string(p: Perm) -> str:
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles(p))


def one_line_string(p: Perm) -> str:
    return ",".join(map(str, p))


def from_cycles(cycle_list, n: int) -> Perm:
    out = list(range(n))
    for cyc in cycle_list:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            if not 0 <= a < n:
                raise ValueError(f"cycle entry {a} out of range for n={n}")
            out[a] = b
    return check_perm(out)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse(text: str, n: int | None = None) -> Perm:
    """Parse a permutation from one-line ("2,0,1") or cycle ("(0 1 2)(3)") form.

    In cycle notation fixed points may be omitted when ``n`` is given;
    otherwise n is inferred as 1 + the largest entry mentioned.
    """
    text = text.strip()
    if not text:
        raise ValueError("empty permutation string")
    if "(" in text:
        body = text.replace(",", " ")
        cycs = []
        consumed = _CYCLE_RE.sub("", body).strip()
        if consumed:
            raise ValueError(f"malformed cycle notation: {text!r}")
        for m in _CYCLE_RE.finditer(body):
            entries = m.group(1).split()
            if entries:
                cycs.append([int(e) for e in entries])
        size = n if n is not None else 1 + max((max(c) for c in cycs), default=0)
        return from_cycles(cycs, size)
    images = [int(tok) for tok in text.replace(",", " ").split()]
    p = check_perm(images)
    if n is not None and len(p) != n:
        raise ValueError(f"permutation has {len(p)} entries, expected {n}")
    return p


def group_is_transitive(h: Perm, v: Perm) -> bool:
    """True when <h, v> acts transitively on 0..n-1."""
    n = len(h)
    if n == 0:
        return False
    hi, vi = invert(h), invert(v)
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        x = stack.pop()
        for g in (h, hi, v, vi):
            y = g[x]
            if not seen[y]:
                seen[y] = True
                count += 1
                stack.append(y)
    return count == n
