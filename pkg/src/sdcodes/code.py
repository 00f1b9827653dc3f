"""Binary linear codes: duality, membership, distance, classification.

A LinearCode is stored in canonical form (RREF generator, zero rows dropped),
so code equality is literal generator equality.  Minimum distance and weight
enumeration walk all 2^k codewords with a Gray-code sweep; a hard dimension
cap keeps that exhaustive walk bounded and makes oversize requests an explicit
error instead of a silent approximation.
"""

from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Mapping

from .gf2 import BitMatrix, BitVector, _kernel_ints, _rref_ints

DEFAULT_ENUMERATION_CAP = 30


class EnumerationCapError(ValueError):
    """Raised when an exhaustive codeword sweep would exceed the dimension cap."""


class CodeType(enum.Enum):
    """Self-duality / weight-divisibility classification."""

    TYPE_I = "TypeI"
    TYPE_II = "TypeII"
    SELF_ORTHOGONAL_ONLY = "SelfOrthogonalOnly"
    NOT_SELF_ORTHOGONAL = "NotSelfOrthogonal"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class WeightEnumerator:
    """Weight distribution: maps weight w to the number of codewords of weight w.

    Only weights with nonzero counts are stored; lookups elsewhere return 0.
    Compares equal to plain dicts with the same nonzero entries.
    """

    counts: Mapping[int, int]

    def __getitem__(self, w: int) -> int:
        return self.counts.get(w, 0)

    def items(self):
        return sorted(self.counts.items())

    def total(self) -> int:
        return sum(self.counts.values())

    def min_positive_weight(self) -> int:
        return min(w for w in self.counts if w > 0)

    def as_dict(self) -> dict[int, int]:
        return dict(sorted(self.counts.items()))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, WeightEnumerator):
            other = other.counts
        if isinstance(other, Mapping):
            return {w: c for w, c in self.counts.items() if c} == {
                w: c for w, c in other.items() if c
            }
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.counts.items())))


class LinearCode:
    """A binary (n, k) linear code in canonical RREF-generator form."""

    __slots__ = ("n", "k", "generator")

    n: int
    k: int
    generator: BitMatrix

    def __init__(self, generator: BitMatrix):
        rows, _ = _rref_ints(generator.row_ints(), generator.ncols)
        canonical = BitMatrix(
            [BitVector(generator.ncols, bits) for bits in rows], ncols=generator.ncols
        )
        object.__setattr__(self, "n", generator.ncols)
        object.__setattr__(self, "k", len(rows))
        object.__setattr__(self, "generator", canonical)

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError("LinearCode is immutable")

    @classmethod
    def from_generator(cls, m: BitMatrix) -> LinearCode:
        """Code spanned by the rows of m; dependent rows are reduced away."""
        return cls(m)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.generator == other.generator

    def __hash__(self) -> int:
        return hash(self.generator)

    def __repr__(self) -> str:
        return f"LinearCode(n={self.n}, k={self.k})"

    # -- structure ---------------------------------------------------------

    def dual(self) -> LinearCode:
        """The (n, n-k) code of all vectors orthogonal to every codeword."""
        basis = _kernel_ints(self.generator.row_ints(), self.n)
        return LinearCode(BitMatrix([BitVector(self.n, b) for b in basis], ncols=self.n))

    def is_self_orthogonal(self) -> bool:
        rows = self.generator.row_ints()
        return all(
            (a & b).bit_count() & 1 == 0 for i, a in enumerate(rows) for b in rows[i:]
        )

    def is_self_dual(self) -> bool:
        return 2 * self.k == self.n and self.is_self_orthogonal()

    def contains(self, v: BitVector) -> bool:
        """Row-space membership, decided by reducing v against the RREF generator."""
        if v.length != self.n:
            raise ValueError(f"length mismatch: {v.length} != {self.n}")
        bits = v.bits
        for row, p in zip(self.generator.row_ints(), self._pivots()):
            if (bits >> p) & 1:
                bits ^= row
        return bits == 0

    def _pivots(self) -> tuple[int, ...]:
        # rows are in RREF: the pivot of each row is its lowest set bit
        return tuple((r & -r).bit_length() - 1 for r in self.generator.row_ints())

    def intersection(self, other: LinearCode) -> LinearCode:
        """The code of vectors lying in both codes (kernel of stacked parity checks)."""
        if self.n != other.n:
            raise ValueError(f"length mismatch: {self.n} != {other.n}")
        checks = self.dual().generator.rows + other.dual().generator.rows
        basis = _kernel_ints([r.bits for r in checks], self.n)
        return LinearCode(BitMatrix([BitVector(self.n, b) for b in basis], ncols=self.n))

    # -- exhaustive sweeps --------------------------------------------------

    def _check_cap(self, cap: int) -> None:
        if self.k > cap:
            raise EnumerationCapError(
                f"instance too large: dimension {self.k} exceeds enumeration cap {cap}"
            )

    def codewords(self, *, cap: int = DEFAULT_ENUMERATION_CAP) -> list[int]:
        """All 2^k codewords as raw ints, in Gray-code order (starts at 0)."""
        self._check_cap(cap)
        rows = self.generator.row_ints()
        words = [0] * (1 << self.k)
        c = 0
        for i in range(1, 1 << self.k):
            c ^= rows[(i & -i).bit_length() - 1]
            words[i] = c
        return words

    def minimum_distance(
        self, *, cap: int = DEFAULT_ENUMERATION_CAP, threads: int = 1
    ) -> int:
        """Smallest nonzero codeword weight, by exhaustive Gray-code sweep."""
        if self.k == 0:
            raise ValueError("the zero-dimensional code has no minimum distance")
        self._check_cap(cap)
        rows = self.generator.row_ints()
        parts = _partition_prefixes(self.k, threads)
        if len(parts) == 1:
            return _sweep_min(rows, self.k, 0, 0)
        g = parts[0][1]
        low = self.k - g

        def job(part: tuple[int, int]) -> int:
            prefix, _ = part
            base = 0
            for j in range(g):
                if (prefix >> j) & 1:
                    base ^= rows[low + j]
            return _sweep_min(rows, low, base, prefix)

        with ThreadPoolExecutor(max_workers=threads) as pool:
            return min(pool.map(job, parts))

    def weight_enumerator(
        self, *, cap: int = DEFAULT_ENUMERATION_CAP, threads: int = 1
    ) -> WeightEnumerator:
        """Full weight distribution via the same Gray-code sweep."""
        self._check_cap(cap)
        rows = self.generator.row_ints()
        parts = _partition_prefixes(self.k, threads)
        if len(parts) == 1:
            counts = _sweep_counts(rows, self.k, 0, self.n)
        else:
            g = parts[0][1]
            low = self.k - g

            def job(part: tuple[int, int]) -> list[int]:
                prefix, _ = part
                base = 0
                for j in range(g):
                    if (prefix >> j) & 1:
                        base ^= rows[low + j]
                return _sweep_counts(rows, low, base, self.n)

            with ThreadPoolExecutor(max_workers=threads) as pool:
                counts = [0] * (self.n + 1)
                for sub in pool.map(job, parts):
                    for w, c in enumerate(sub):
                        counts[w] += c
        return WeightEnumerator({w: c for w, c in enumerate(counts) if c})

    def classify(self) -> CodeType:
        """Type of the code, decided from generator rows only (no enumeration).

        A self-orthogonal code is doubly-even iff every generator row has
        weight divisible by 4: pairwise overlaps are even, so weights add
        mod 4 under the sum formula w(a+b) = w(a)+w(b)-2*mu(a,b).
        """
        if not self.is_self_orthogonal():
            return CodeType.NOT_SELF_ORTHOGONAL
        doubly_even = all(r.bit_count() % 4 == 0 for r in self.generator.row_ints())
        if 2 * self.k != self.n:
            return CodeType.SELF_ORTHOGONAL_ONLY
        return CodeType.TYPE_II if doubly_even else CodeType.TYPE_I


def _sweep_min(rows: list[int], nbits: int, base: int, prefix: int) -> int:
    """Min weight over {base XOR span(rows[:nbits])}, skipping the zero word.

    The zero word can only occur in the prefix-0 partition (at step 0).
    """
    best = 1 << 62
    c = base
    if prefix != 0 or base != 0:
        best = c.bit_count()
    for i in range(1, 1 << nbits):
        c ^= rows[(i & -i).bit_length() - 1]
        w = c.bit_count()
        if w < best:
            best = w
            if best == 1:
                break
    return best


def _sweep_counts(rows: list[int], nbits: int, base: int, n: int) -> list[int]:
    counts = [0] * (n + 1)
    c = base
    counts[c.bit_count()] = 1
    for i in range(1, 1 << nbits):
        c ^= rows[(i & -i).bit_length() - 1]
        counts[c.bit_count()] += 1
    return counts


def _partition_prefixes(k: int, threads: int) -> list[tuple[int, int]]:
    """Sub-range descriptors (prefix, g) for a sweep split over 2^g prefixes."""
    if threads <= 1 or k < 2:
        return [(0, 0)]
    g = min(max(threads - 1, 1).bit_length(), k - 1)
    return [(p, g) for p in range(1 << g)]


def from_generator(m: BitMatrix) -> LinearCode:
    return LinearCode(m)


def extremal_bound(n: int, code_type: CodeType) -> int:
    """Upper bound on the minimum distance of a self-dual code of length n."""
    if n < 1:
        raise ValueError("length must be positive")
    if code_type is CodeType.TYPE_I:
        return 2 * (n // 8) + 2
    if code_type is CodeType.TYPE_II:
        if n % 8:
            raise ValueError(f"doubly-even self-dual codes require 8 | n, got n={n}")
        return 4 * (n // 24) + 4
    raise ValueError(f"extremal bound is defined for TypeI/TypeII only, got {code_type}")
