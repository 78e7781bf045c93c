"""Arithmetic over N extended with infinity.

Infinity is the float ``math.inf`` throughout the toolkit; all other
values are plain non-negative ints.  These helpers centralize the
arithmetic rules (inf absorbs addition, inf - n = inf, truncated
subtraction on naturals) so callers never improvise them.
"""

import math

INF = math.inf


def is_extnat(x):
    return x == INF or (isinstance(x, int) and x >= 0 and not isinstance(x, bool))


def ext_add(a, b):
    if a == INF or b == INF:
        return INF
    return a + b


def ext_sub(a, b):
    """Truncated subtraction; inf - n = inf for finite n."""
    if a == INF:
        if b == INF:
            raise ValueError("inf - inf is undefined")
        return INF
    if b == INF:
        return 0
    return max(a - b, 0)


def ext_min(a, b):
    return a if a <= b else b


def ext_max(a, b):
    return a if a >= b else b


def parse_extnat(text):
    if text in ("inf", "INF", "oo"):
        return INF
    value = int(text)
    if value < 0:
        raise ValueError(f"negative count: {text}")
    return value


def format_extnat(x):
    return "inf" if x == INF else str(x)
