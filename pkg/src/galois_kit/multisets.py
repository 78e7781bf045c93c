"""Finite multisets of m-tuples and matrices as column sequences.

A matrix is an ordered sequence of columns (m-tuples); its multiset of
columns forgets the order.  Row-wise application of an operation to a
matrix is the workhorse of every satisfaction check.
"""

from dataclasses import dataclass

from .errors import GaloisKitError

__all__ = [
    "FiniteMultiset",
    "TupleMatrix",
    "apply_op_rows",
    "columns_multiset",
    "enumerate_matrices_leq",
    "ms_diff",
    "ms_join",
    "ms_partitions",
    "ms_sub",
    "split_enumerate",
]


class FiniteMultiset:
    """Multiplicity function over m-tuples; absent keys have multiplicity 0."""

    __slots__ = ("arity", "counts", "_key")

    def __init__(self, arity, counts=None):
        if arity < 1:
            raise GaloisKitError("multiset arity must be positive")
        counts = {tuple(t): c for t, c in dict(counts or {}).items() if c}
        for t, c in counts.items():
            if len(t) != arity:
                raise GaloisKitError(f"tuple {t!r} has wrong length for arity {arity}")
            if not isinstance(c, int) or c < 0:
                raise GaloisKitError(f"multiplicity {c!r} must be a nonnegative int")
        self.arity = arity
        self.counts = counts
        self._key = (arity, tuple(sorted(counts.items())))

    @classmethod
    def from_tuples(cls, arity, tuples):
        counts = {}
        for t in tuples:
            t = tuple(t)
            counts[t] = counts.get(t, 0) + 1
        return cls(arity, counts)

    @classmethod
    def empty(cls, arity):
        return cls(arity)

    def multiplicity(self, t):
        return self.counts.get(tuple(t), 0)

    @property
    def cardinality(self):
        return sum(self.counts.values())

    def support(self):
        return sorted(self.counts)

    def elements(self):
        """All elements with multiplicity, sorted."""
        out = []
        for t in sorted(self.counts):
            out.extend([t] * self.counts[t])
        return out

    def is_empty(self):
        return not self.counts

    def __eq__(self, other):
        if not isinstance(other, FiniteMultiset):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        inner = ", ".join(f"{t}:{c}" for t, c in sorted(self.counts.items()))
        return "{" + inner + "}"


def _check_arities(a, b):
    if a.arity != b.arity:
        raise GaloisKitError("multiset arity mismatch")


def ms_join(s, s2):
    """Additive union: multiplicities add."""
    _check_arities(s, s2)
    counts = dict(s.counts)
    for t, c in s2.counts.items():
        counts[t] = counts.get(t, 0) + c
    return FiniteMultiset(s.arity, counts)


def ms_diff(s, s2):
    """Truncated difference: max(count - count', 0)."""
    _check_arities(s, s2)
    counts = {t: c - s2.multiplicity(t) for t, c in s.counts.items()}
    return FiniteMultiset(s.arity, {t: c for t, c in counts.items() if c > 0})


def ms_sub(s2, s):
    """Submultiset test: every multiplicity of s2 bounded by s."""
    _check_arities(s2, s)
    return all(c <= s.multiplicity(t) for t, c in s2.counts.items())


def _set_partitions(items):
    """Set partitions of a list of labeled items via restricted growth."""
    n = len(items)
    if n == 0:
        yield []
        return

    def rec(i, blocks):
        if i == n:
            yield [list(b) for b in blocks]
            return
        for b in blocks:
            b.append(items[i])
            yield from rec(i + 1, blocks)
            b.pop()
        blocks.append([items[i]])
        yield from rec(i + 1, blocks)
        blocks.pop()

    yield from rec(0, [])


def ms_partitions(s):
    """All partitions of s into non-empty submultisets, duplicate-free.

    A partition is returned as a sorted tuple of blocks, each block a
    FiniteMultiset; identical blocks may repeat within a partition.
    """
    items = s.elements()
    seen = set()
    out = []
    for blocks in _set_partitions(items):
        part = tuple(
            sorted(
                (FiniteMultiset.from_tuples(s.arity, b) for b in blocks),
                key=lambda m: m._key,
            )
        )
        key = tuple(m._key for m in part)
        if key not in seen:
            seen.add(key)
            out.append(part)
    out.sort(key=lambda part: (len(part), [m._key for m in part]))
    return out


@dataclass(frozen=True)
class TupleMatrix:
    """A matrix viewed as an ordered sequence of columns (m-tuples)."""

    row_count: int
    columns: tuple

    def __post_init__(self):
        cols = tuple(tuple(c) for c in self.columns)
        if any(len(c) != self.row_count for c in cols):
            raise GaloisKitError("column length must equal row count")
        object.__setattr__(self, "columns", cols)

    @classmethod
    def from_rows(cls, rows):
        rows = [tuple(r) for r in rows]
        if not rows:
            raise GaloisKitError("a matrix needs at least one row")
        n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise GaloisKitError("ragged rows")
        cols = tuple(tuple(r[j] for r in rows) for j in range(n))
        return cls(len(rows), cols)

    @property
    def column_count(self):
        return len(self.columns)

    def row(self, i):
        return tuple(c[i] for c in self.columns)

    def rows(self):
        return [self.row(i) for i in range(self.row_count)]

    def concat(self, other):
        if other.row_count != self.row_count:
            raise GaloisKitError("row count mismatch in concatenation")
        return TupleMatrix(self.row_count, self.columns + other.columns)


def columns_multiset(m):
    """The multiset of columns of m (the matrix characteristic)."""
    return FiniteMultiset.from_tuples(m.row_count, m.columns)


def apply_op_rows(f, m):
    """Row-wise application: component i is f applied to row i of m."""
    if m.column_count != f.arity:
        raise GaloisKitError(
            f"matrix has {m.column_count} columns but f has arity {f.arity}"
        )
    return tuple(f(*m.row(i)) for i in range(m.row_count))


def enumerate_matrices_leq(phi, n):
    """All n-column matrices whose column multiset respects phi.

    Each m-tuple may appear as a column at most phi(tuple) times.
    Matrices are emitted once each, columns chosen in lexicographic
    order position by position (so the stream order is column-rank
    lexicographic and restartable).
    """
    if n < 1:
        raise GaloisKitError("column count must be positive")
    candidates = phi.positive_support()
    used = {}

    def rec(pos, chosen):
        if pos == n:
            yield TupleMatrix(phi.arity, tuple(chosen))
            return
        for col in candidates:
            if used.get(col, 0) < phi.value(col):
                used[col] = used.get(col, 0) + 1
                chosen.append(col)
                yield from rec(pos + 1, chosen)
                chosen.pop()
                used[col] -= 1

    yield from rec(0, [])


def split_enumerate(s, n):
    """All ordered selections of n columns from s with their remainders.

    Yields (matrix, remainder) pairs; the matrix column order is
    significant, the remainder is kept as a multiset.  Identical columns
    produce a single distinct ordering.  Empty stream if |s| < n.
    """
    if n < 1:
        raise GaloisKitError("selection size must be positive")
    if s.cardinality < n:
        return
    remaining = dict(s.counts)
    support = sorted(s.counts)

    def rec(pos, chosen):
        if pos == n:
            m1 = TupleMatrix(s.arity, tuple(chosen))
            yield m1, FiniteMultiset(s.arity, remaining)
            return
        for col in support:
            if remaining.get(col, 0) > 0:
                remaining[col] -= 1
                chosen.append(col)
                yield from rec(pos + 1, chosen)
                chosen.pop()
                remaining[col] += 1

    yield from rec(0, [])
