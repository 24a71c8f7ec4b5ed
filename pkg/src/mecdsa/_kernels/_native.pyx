# cython: language_level=3
"""Compiled group-law kernels, the fast twin of ``mecdsa._kernels.pure``.

``point_add``/``point_double``/``point_neg`` mirror the affine formulas
of the pure backend exactly.  ``scalar_mul`` is the hot kernel: it runs
the same left-to-right double-and-add but carries the accumulator in
Jacobian coordinates, deferring the field inversion to a single final
normalization instead of one per group operation.  The affine result is
bit-identical to the pure backend's, and the test suite cross-checks the
two on every curve it touches.

Scalars stay Python ints, so arbitrary-precision curves work unchanged.
Behavior is defined for prime moduli only; composite moduli may surface
as ZeroDivisionError at any step.  Not constant-time.
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


cdef inline object _double(object pt, object a, object p):
    if pt is None:
        return None
    x, y = pt
    if y == 0:
        return None
    lam = (3 * x * x + a) * pow(2 * y, -1, p) % p
    x3 = (lam * lam - 2 * x) % p
    return (x3, (lam * (x - x3) - y) % p)


cdef inline object _add(object p1, object p2, object a, object p):
    if p1 is None:
        return p2
    if p2 is None:
        return p1
    x1, y1 = p1
    x2, y2 = p2
    if x1 == x2:
        if (y1 + y2) % p == 0:
            return None
        return _double(p1, a, p)
    lam = (y2 - y1) * pow((x2 - x1) % p, -1, p) % p
    x3 = (lam * lam - x1 - x2) % p
    return (x3, (lam * (x1 - x3) - y1) % p)


def point_double(pt, a, p):
    try:
        return _double(pt, a, p)
    except ValueError:
        raise ZeroDivisionError("no inverse; modulus not prime?") from None


def point_add(p1, p2, a, p):
    try:
        return _add(p1, p2, a, p)
    except ValueError:
        raise ZeroDivisionError("no inverse; modulus not prime?") from None


# Jacobian accumulator: (X, Y, Z) with affine x = X/Z^2, y = Y/Z^3.
# Z == 0 encodes the identity.  Coefficient shapes a == 0 and a == p - 3
# get the usual cheaper doubling.


cdef inline tuple _jac_double(object X1, object Y1, object Z1, object a, object p,
                              bint a_zero, bint a_minus3):
    if Z1 == 0 or Y1 == 0:
        return (1, 1, 0)
    XX = X1 * X1 % p
    YY = Y1 * Y1 % p
    YYYY = YY * YY % p
    S = 4 * X1 * YY % p
    if a_zero:
        M = 3 * XX % p
    elif a_minus3:
        ZZ = Z1 * Z1 % p
        M = 3 * ((X1 - ZZ) * (X1 + ZZ)) % p
    else:
        ZZ = Z1 * Z1 % p
        M = (3 * XX + a * ZZ % p * ZZ) % p
    X3 = (M * M - 2 * S) % p
    Y3 = (M * (S - X3) - 8 * YYYY) % p
    Z3 = 2 * Y1 * Z1 % p
    return (X3, Y3, Z3)


cdef inline tuple _jac_add_affine(object X1, object Y1, object Z1,
                                  object x2, object y2, object a, object p,
                                  bint a_zero, bint a_minus3):
    if Z1 == 0:
        return (x2, y2, 1)
    ZZ = Z1 * Z1 % p
    U2 = x2 * ZZ % p
    S2 = y2 * Z1 % p * ZZ % p
    H = (U2 - X1) % p
    R = (S2 - Y1) % p
    if H == 0:
        if R == 0:
            return _jac_double(X1, Y1, Z1, a, p, a_zero, a_minus3)
        return (1, 1, 0)
    HH = H * H % p
    HHH = H * HH % p
    V = X1 * HH % p
    X3 = (R * R - HHH - 2 * V) % p
    Y3 = (R * (V - X3) - Y1 * HHH) % p
    Z3 = Z1 * H % p
    return (X3, Y3, Z3)


def scalar_mul(k, pt, a, p):
    """k-fold group sum of pt, left-to-right double-and-add.  k >= 0 and
    is used as given (no reduction), so order checks like n*P work."""
    if k < 0:
        raise ValueError("scalar must be non-negative")
    if k == 0 or pt is None:
        return None
    x2, y2 = pt
    cdef bint a_zero = a == 0
    cdef bint a_minus3 = a == p - 3
    cdef bytes kb = k.to_bytes((k.bit_length() + 7) // 8, "big")
    cdef Py_ssize_t nbytes = len(kb)
    cdef Py_ssize_t i
    cdef int j
    cdef unsigned int byte
    cdef bint started = False
    X, Y, Z = 1, 1, 0
    try:
        for i in range(nbytes):
            byte = kb[i]
            for j in range(7, -1, -1):
                if not started:
                    if not (byte >> j) & 1:
                        continue
                    started = True
                    X, Y, Z = x2, y2, 1
                    continue
                X, Y, Z = _jac_double(X, Y, Z, a, p, a_zero, a_minus3)
                if (byte >> j) & 1:
                    X, Y, Z = _jac_add_affine(X, Y, Z, x2, y2, a, p, a_zero, a_minus3)
        if Z == 0:
            return None
        zinv = pow(Z, -1, p)
        zz = zinv * zinv % p
        return (X * zz % p, Y * zz % p * zinv % p)
    except ValueError:
        raise ZeroDivisionError("no inverse; modulus not prime?") from None
