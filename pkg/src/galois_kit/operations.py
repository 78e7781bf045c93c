"""Finite operations as value tables, variable manipulations, and closures.

An operation f: {0..k_in-1}^n -> {0..k_out-1} is a flat table indexed by
the lexicographic rank of the input tuple, leftmost variable most
significant.  The five table rewrites zeta, tau, delta, nabla, star are
the classical variable manipulations: cyclic shift, transposition,
identification of the first two variables, dummy first variable, and
substitution into the first argument.
"""

from dataclasses import dataclass
from itertools import permutations, product

from .errors import GaloisKitError

__all__ = [
    "Operation",
    "OperationClass",
    "all_operations",
    "close_composition",
    "close_perm_dummy",
    "delta",
    "linear_class_fixture",
    "minor_by_injection",
    "nabla",
    "projection",
    "star",
    "tau",
    "zeta",
]


@dataclass(frozen=True)
class Operation:
    """A total finitary function stored as a rank-indexed value table."""

    domain_size: int
    codomain_size: int
    arity: int
    table: tuple

    def __post_init__(self):
        if self.arity < 1:
            raise GaloisKitError("nullary operations are not supported")
        if self.domain_size < 1 or self.codomain_size < 1:
            raise GaloisKitError("domain sizes must be positive")
        expected = self.domain_size ** self.arity
        if len(self.table) != expected:
            raise GaloisKitError(
                f"table length {len(self.table)} != {self.domain_size}^{self.arity}"
            )
        if any(not (0 <= v < self.codomain_size) for v in self.table):
            raise GaloisKitError("table entry out of codomain range")
        object.__setattr__(self, "table", tuple(self.table))

    def rank(self, inputs):
        r = 0
        k = self.domain_size
        for x in inputs:
            r = r * k + x
        return r

    def __call__(self, *inputs):
        if len(inputs) == 1 and isinstance(inputs[0], (tuple, list)):
            inputs = tuple(inputs[0])
        if len(inputs) != self.arity:
            raise GaloisKitError(
                f"arity mismatch: got {len(inputs)} arguments for arity {self.arity}"
            )
        if any(not (0 <= x < self.domain_size) for x in inputs):
            raise GaloisKitError("argument out of domain range")
        return self.table[self.rank(inputs)]

    @classmethod
    def from_callable(cls, domain_size, codomain_size, arity, fn):
        table = tuple(
            fn(*xs) for xs in product(range(domain_size), repeat=arity)
        )
        return cls(domain_size, codomain_size, arity, table)

    def sort_key(self):
        return (self.arity, self.table)


def eval_op(op, inputs):
    """Table lookup f(x_1, ..., x_n)."""
    return op(*inputs)


def projection(n, i, k):
    """The i-th n-ary projection (1-based i) over domain size k."""
    if not 1 <= i <= n:
        raise GaloisKitError(f"projection index {i} out of range 1..{n}")
    return Operation.from_callable(k, k, n, lambda *xs: xs[i - 1])


def zeta(op):
    """Cyclic shift: (zeta f)(x1, ..., xn) = f(x2, ..., xn, x1)."""
    if op.arity == 1:
        return op
    return Operation.from_callable(
        op.domain_size, op.codomain_size, op.arity,
        lambda *xs: op(*xs[1:], xs[0]),
    )


def tau(op):
    """Transposition: (tau f)(x1, x2, ...) = f(x2, x1, ...)."""
    if op.arity == 1:
        return op
    return Operation.from_callable(
        op.domain_size, op.codomain_size, op.arity,
        lambda *xs: op(xs[1], xs[0], *xs[2:]),
    )


def delta(op):
    """Identification: (delta f)(x1, ..., x_{n-1}) = f(x1, x1, x2, ...)."""
    if op.arity == 1:
        return op
    return Operation.from_callable(
        op.domain_size, op.codomain_size, op.arity - 1,
        lambda *xs: op(xs[0], *xs),
    )


def nabla(op):
    """Dummy variable: (nabla f)(x1, ..., x_{n+1}) = f(x2, ..., x_{n+1})."""
    return Operation.from_callable(
        op.domain_size, op.codomain_size, op.arity + 1,
        lambda *xs: op(*xs[1:]),
    )


def star(f, g):
    """Substitution into the first argument.

    (f * g)(x_1, ..., x_{m+n-1}) = f(g(x_1, ..., x_m), x_{m+1}, ...)
    where g is m-ary and f is n-ary.
    """
    if g.codomain_size != f.domain_size:
        raise GaloisKitError("codomain of g must equal domain of f")
    if g.domain_size != f.domain_size:
        raise GaloisKitError("star requires equal domain sizes")
    m = g.arity
    return Operation.from_callable(
        f.domain_size, f.codomain_size, m + f.arity - 1,
        lambda *xs: f(g(*xs[:m]), *xs[m:]),
    )


def minor_by_injection(f, sigma, target_arity):
    """g(x_1, ..., x_N) = f(x_{sigma(1)}, ..., x_{sigma(n)}).

    ``sigma`` is a sequence of 1-based positions in 1..target_arity, one
    per argument of f; it must be injective.  This is the combined
    permutation-plus-dummy form of variable manipulation.
    """
    sigma = tuple(sigma)
    if len(sigma) != f.arity:
        raise GaloisKitError("sigma must have one entry per argument of f")
    if len(set(sigma)) != len(sigma):
        raise GaloisKitError("sigma must be injective")
    if any(not 1 <= s <= target_arity for s in sigma):
        raise GaloisKitError("sigma value out of range")
    return Operation.from_callable(
        f.domain_size, f.codomain_size, target_arity,
        lambda *xs: f(*(xs[s - 1] for s in sigma)),
    )


class OperationClass:
    """Per-arity sets of operations with a fixed domain and codomain.

    Members are deduplicated by table equality; iteration is in the
    canonical order (arity ascending, table lexicographic ascending).
    """

    def __init__(self, domain_size, codomain_size=None, members=()):
        self.domain_size = domain_size
        self.codomain_size = codomain_size if codomain_size is not None else domain_size
        self._by_arity = {}
        for op in members:
            self.add(op)

    def add(self, op):
        if op.domain_size != self.domain_size or op.codomain_size != self.codomain_size:
            raise GaloisKitError("operation domain/codomain mismatch with class")
        self._by_arity.setdefault(op.arity, {})[op.table] = op

    def arity_part(self, n):
        return [self._by_arity[n][t] for t in sorted(self._by_arity.get(n, {}))]

    def arities(self):
        return sorted(self._by_arity)

    @property
    def max_arity(self):
        return max(self._by_arity) if self._by_arity else 0

    def __iter__(self):
        for n in sorted(self._by_arity):
            for t in sorted(self._by_arity[n]):
                yield self._by_arity[n][t]

    def __len__(self):
        return sum(len(d) for d in self._by_arity.values())

    def __contains__(self, op):
        return op.table in self._by_arity.get(op.arity, {})

    def __eq__(self, other):
        if not isinstance(other, OperationClass):
            return NotImplemented
        return (
            self.domain_size == other.domain_size
            and self.codomain_size == other.codomain_size
            and {n: set(d) for n, d in self._by_arity.items() if d}
            == {n: set(d) for n, d in other._by_arity.items() if d}
        )

    def __le__(self, other):
        return all(op in other for op in self)

    def copy(self):
        return OperationClass(self.domain_size, self.codomain_size, self)

    def __repr__(self):
        sizes = {n: len(d) for n, d in sorted(self._by_arity.items())}
        return f"OperationClass(k={self.domain_size}->{self.codomain_size}, {sizes})"


def all_operations(k, arity, codomain_size=None):
    """All operations of the given arity over domain size k, canonical order."""
    k_out = codomain_size if codomain_size is not None else k
    for table in product(range(k_out), repeat=k ** arity):
        yield Operation(k, k_out, arity, table)


def close_perm_dummy(cls_, arity_cap):
    """Least superclass closed under permutation and dummy variables, arity <= cap.

    Equivalently all minor_by_injection images with target arity <= cap;
    one pass suffices because injections compose to injections.
    """
    if cls_.max_arity > arity_cap:
        raise GaloisKitError("arity cap below an existing member arity")
    out = OperationClass(cls_.domain_size, cls_.codomain_size)
    for f in cls_:
        for target in range(f.arity, arity_cap + 1):
            for sigma in permutations(range(1, target + 1), f.arity):
                out.add(minor_by_injection(f, sigma, target))
    return out


def close_composition(cls_, arity_cap):
    """Fixpoint closure under zeta, tau, nabla, star with all projections.

    All intermediate arities stay <= arity_cap; the bounded fixpoint may
    undercount functions derivable only through arities above the cap.
    """
    if cls_.domain_size != cls_.codomain_size:
        raise GaloisKitError("composition closure requires domain == codomain")
    if arity_cap < 1 or cls_.max_arity > arity_cap:
        raise GaloisKitError("invalid arity cap")
    k = cls_.domain_size
    out = OperationClass(k, k)
    worklist = []

    def push(op):
        if op not in out:
            out.add(op)
            worklist.append(op)

    for n in range(1, arity_cap + 1):
        for i in range(1, n + 1):
            push(projection(n, i, k))
    for op in cls_:
        push(op)

    while worklist:
        f = worklist.pop()
        push(zeta(f))
        push(tau(f))
        if f.arity + 1 <= arity_cap:
            push(nabla(f))
        for g in list(out):
            if f.arity + g.arity - 1 <= arity_cap:
                push(star(f, g))
            if g.arity + f.arity - 1 <= arity_cap:
                push(star(g, f))
    return out


def _is_prime(k):
    if k < 2:
        return False
    return all(k % d for d in range(2, int(k ** 0.5) + 1))


def linear_class_fixture(k, p, arity_cap):
    """Linear functions sum(c_i * x_i) mod k with nonzero-coefficient count = 1 mod p.

    Requires prime k and p >= 2; the combination p = 2 with k = 2 is
    rejected (there the class degenerates and is closed under
    identification, defeating its purpose as a fixture).
    """
    if not _is_prime(k):
        raise GaloisKitError(f"k={k} must be prime for field arithmetic")
    if p < 2:
        raise GaloisKitError("p must be at least 2")
    if p == 2 and k == 2:
        raise GaloisKitError("the combination p=2, k=2 is excluded")
    out = OperationClass(k, k)
    for n in range(1, arity_cap + 1):
        for coeffs in product(range(k), repeat=n):
            nonzero = sum(1 for c in coeffs if c)
            if nonzero % p != 1 % p:
                continue
            out.add(
                Operation.from_callable(
                    k, k, n,
                    lambda *xs, cs=coeffs: sum(c * x for c, x in zip(cs, xs)) % k,
                )
            )
    return out
