"""Pure-Python group-law kernels.

A compiled twin lives in ``mecdsa._kernels._native``; the two must return
bit-identical results for every input, and the test suite cross-checks
them.  Points at this layer are ``None`` (the identity) or ``(x, y)``
tuples of canonical residues; no on-curve checking happens here, that is
the caller's job.  Plain Python ints keep arbitrary-precision curve sizes
working unchanged.  Nothing here runs in constant time.
"""


def mod_inv(a, m):
    """Inverse of a modulo m.  Raises ZeroDivisionError when none exists."""
    try:
        return pow(a, -1, m)
    except ValueError:
        raise ZeroDivisionError(f"no inverse of {a} modulo {m}") from None


def point_neg(pt, p):
    if pt is None:
        return None
    x, y = pt
    return (x, (p - y) % p)


def point_double(pt, a, p):
    if pt is None:
        return None
    x, y = pt
    if y == 0:
        return None
    lam = (3 * x * x + a) * mod_inv(2 * y, p) % p
    x3 = (lam * lam - 2 * x) % p
    return (x3, (lam * (x - x3) - y) % p)


def point_add(p1, p2, a, p):
    if p1 is None:
        return p2
    if p2 is None:
        return p1
    x1, y1 = p1
    x2, y2 = p2
    if x1 == x2:
        if (y1 + y2) % p == 0:
            return None
        return point_double(p1, a, p)
    lam = (y2 - y1) * mod_inv((x2 - x1) % p, p) % p
    x3 = (lam * lam - x1 - x2) % p
    return (x3, (lam * (x1 - x3) - y1) % p)


def scalar_mul(k, pt, a, p):
    """k-fold group sum of pt, left-to-right double-and-add.  k >= 0 and
    is used as given (no reduction), so order checks like n*P work."""
    if k < 0:
        raise ValueError("scalar must be non-negative")
    if k == 0 or pt is None:
        return None
    acc = None
    for i in range(k.bit_length() - 1, -1, -1):
        acc = point_double(acc, a, p)
        if (k >> i) & 1:
            acc = point_add(acc, pt, a, p)
    return acc
