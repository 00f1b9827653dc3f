"""Naive reference implementations used to cross-check the library.

Everything here works on tuples of 0/1 ints and deliberately avoids the
library's packed-int representation and Gray-code enumeration: different
data layout, different algorithms, same answers.
"""

from __future__ import annotations

from itertools import product


def to_bits(v) -> tuple[int, ...]:
    """Convert a library BitVector to a plain tuple of ints."""
    return tuple(int(ch) for ch in v.to01())


def o_weight(a) -> int:
    return sum(a)


def o_mu(a, b) -> int:
    return sum(x & y for x, y in zip(a, b))


def o_add(a, b) -> tuple[int, ...]:
    return tuple(x ^ y for x, y in zip(a, b))


def o_dot(a, b) -> int:
    return o_mu(a, b) % 2


def o_rref(rows) -> list[tuple[int, ...]]:
    """Reduced row echelon form over GF(2), scanning columns left to right."""
    rows = [list(r) for r in rows]
    if not rows:
        return []
    ncols = len(rows[0])
    pivot_row = 0
    for col in range(ncols):
        src = next((i for i in range(pivot_row, len(rows)) if rows[i][col]), None)
        if src is None:
            continue
        rows[pivot_row], rows[src] = rows[src], rows[pivot_row]
        for i in range(len(rows)):
            if i != pivot_row and rows[i][col]:
                rows[i] = [x ^ y for x, y in zip(rows[i], rows[pivot_row])]
        pivot_row += 1
        if pivot_row == len(rows):
            break
    return [tuple(r) for r in rows if any(r)]


def o_rank(rows) -> int:
    return len(o_rref(rows))


def o_codewords(rows) -> list[tuple[int, ...]]:
    """All codewords by re-encoding every message with a binary counter."""
    rows = [tuple(r) for r in rows]
    if not rows:
        return []
    k = len(rows)
    ncols = len(rows[0])
    out = []
    for msg in range(1 << k):
        word = (0,) * ncols
        for j in range(k):
            if (msg >> j) & 1:
                word = o_add(word, rows[j])
        out.append(word)
    return out


def o_min_distance(rows) -> int:
    weights = [o_weight(w) for w in o_codewords(o_rref(rows))]
    return min(w for w in weights if w > 0)


def o_weight_counts(rows) -> dict[int, int]:
    counts: dict[int, int] = {}
    for w in o_codewords(o_rref(rows)):
        counts[o_weight(w)] = counts.get(o_weight(w), 0) + 1
    return counts


def o_member(rows, v) -> bool:
    """Membership by rank comparison of the augmented row list."""
    base = o_rank(rows)
    return o_rank(list(rows) + [tuple(v)]) == base


def o_doubly_even_words(rows) -> set[tuple[int, ...]]:
    return {w for w in o_codewords(o_rref(rows)) if o_weight(w) % 4 == 0}


def o_orthogonal_all(rows, v) -> bool:
    return all(o_dot(r, v) == 0 for r in rows)


def all_vectors(length: int):
    return product((0, 1), repeat=length)
