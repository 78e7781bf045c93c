"""Repetition functions: maps from m-tuples to N union {inf}.

Stored as a default value plus a finite exception map, so a function
that is almost-everywhere 0 (or almost-everywhere inf) stays small even
when the tuple space k^m is large.  The representation is canonical:
exception entries equal to the default are dropped, and if the
exceptions happen to cover the whole tuple space the default is
re-derived, so structural equality coincides with pointwise equality.
"""

from itertools import product

from .errors import GaloisKitError
from .extnat import INF, ext_max, ext_min, is_extnat

__all__ = ["RepetitionFunction", "rf_leq", "rf_pointwise_inf", "rf_pointwise_sup"]


class RepetitionFunction:

    __slots__ = ("arity", "domain_size", "default", "exceptions", "_key")

    def __init__(self, arity, domain_size, default=0, exceptions=None):
        if arity < 1 or domain_size < 1:
            raise GaloisKitError("arity and domain size must be positive")
        if not is_extnat(default):
            raise GaloisKitError(f"invalid default value {default!r}")
        exceptions = dict(exceptions or {})
        for t, v in exceptions.items():
            if len(t) != arity or any(not 0 <= x < domain_size for x in t):
                raise GaloisKitError(f"invalid exception key {t!r}")
            if not is_extnat(v):
                raise GaloisKitError(f"invalid exception value {v!r}")
        exceptions = {t: v for t, v in exceptions.items() if v != default}
        # Canonical default: the most frequent value, with a fixed tie
        # order, so pointwise-equal functions are structurally equal even
        # when the exceptions nearly cover the tuple space.
        space = domain_size ** arity
        hist = {default: space - len(exceptions)}
        for v in exceptions.values():
            hist[v] = hist.get(v, 0) + 1
        best = max(
            hist, key=lambda v: (hist[v], v == INF, v if v != INF else -1)
        )
        if best != default:
            # only possible when exceptions cover at least half the space,
            # so the rewrite below stays proportional to their size
            exceptions = {
                t: exceptions.get(t, default)
                for t in product(range(domain_size), repeat=arity)
                if exceptions.get(t, default) != best
            }
            default = best
        self.arity = arity
        self.domain_size = domain_size
        self.default = default
        self.exceptions = exceptions
        self._key = (arity, domain_size, default, frozenset(exceptions.items()))

    @classmethod
    def constant(cls, arity, domain_size, value):
        return cls(arity, domain_size, default=value)

    @classmethod
    def from_counts(cls, arity, domain_size, counts):
        """Default-0 function from a tuple -> count map (e.g. a chi_M)."""
        return cls(arity, domain_size, default=0, exceptions=counts)

    def value(self, t):
        return self.exceptions.get(tuple(t), self.default)

    def all_tuples(self):
        return product(range(self.domain_size), repeat=self.arity)

    def positive_support(self):
        """Tuples with value > 0, in lexicographic order.

        Enumerates the full tuple space when the default is positive;
        callers must budget-guard that case.
        """
        if self.default > 0:
            return [t for t in self.all_tuples() if self.value(t) > 0]
        return sorted(t for t, v in self.exceptions.items() if v > 0)

    def support_size(self):
        total = self.domain_size ** self.arity
        positive_exc = sum(1 for v in self.exceptions.values() if v > 0)
        if self.default > 0:
            zero_exc = sum(1 for v in self.exceptions.values() if v == 0)
            return total - zero_exc
        return positive_exc

    def total(self):
        """Sum of all values, with inf propagation; no tuple enumeration."""
        rest = self.domain_size ** self.arity - len(self.exceptions)
        if (self.default == INF and rest > 0) or INF in self.exceptions.values():
            return INF
        return self.default * rest + sum(self.exceptions.values())

    def pointwise(self, other, fn, check=None):
        if (self.arity, self.domain_size) != (other.arity, other.domain_size):
            raise GaloisKitError("repetition function arity/domain mismatch")
        keys = set(self.exceptions) | set(other.exceptions)
        if check is not None and not check(self.default, other.default):
            return None
        exc = {t: fn(self.value(t), other.value(t)) for t in keys}
        if check is not None and any(
            not check(self.value(t), other.value(t)) for t in keys
        ):
            return None
        return RepetitionFunction(
            self.arity, self.domain_size, fn(self.default, other.default), exc
        )

    def __eq__(self, other):
        if not isinstance(other, RepetitionFunction):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        exc = {t: v for t, v in sorted(self.exceptions.items())}
        return (
            f"RepetitionFunction(m={self.arity}, k={self.domain_size}, "
            f"default={self.default}, exceptions={exc})"
        )


def rf_leq(phi, phi2):
    """Pointwise comparison phi <= phi2."""
    if (phi.arity, phi.domain_size) != (phi2.arity, phi2.domain_size):
        raise GaloisKitError("repetition function arity/domain mismatch")
    if phi.default > phi2.default:
        return False
    keys = set(phi.exceptions) | set(phi2.exceptions)
    return all(phi.value(t) <= phi2.value(t) for t in keys)


def rf_pointwise_sup(family):
    """Pointwise maximum of a non-empty finite family, inf absorbing."""
    family = list(family)
    if not family:
        raise GaloisKitError("sup of an empty family")
    acc = family[0]
    for phi in family[1:]:
        acc = acc.pointwise(phi, ext_max)
    return acc


def rf_pointwise_inf(family):
    """Pointwise minimum of a non-empty finite family."""
    family = list(family)
    if not family:
        raise GaloisKitError("inf of an empty family")
    acc = family[0]
    for phi in family[1:]:
        acc = acc.pointwise(phi, ext_min)
    return acc
