"""Single-curve ECDSA over any registry curve.

Signing: e = H(m); pick a nonce k in [1, n-1]; (x, y) = k*P; r = x mod n
(retry on r = 0); s = k^-1 (e + d*r) mod n (retry on s = 0).
Verification recomputes R = (e/s)*P + (r/s)*Q and accepts when r matches
R's x-coordinate mod n.  H is SHA-256 and e enters every formula reduced
modulo the order, so curves of any size work.

The private key d lies in [1, n-1]: d = n would give Q = O, which is
unusable.  Verification also rejects R = O, whose x-coordinate does not
exist.
"""

import hashlib
import random
import secrets
from dataclasses import dataclass

from mecdsa import _kernels
from mecdsa import curve as curvemod
from mecdsa._hex import hex_to_int, int_to_hex
from mecdsa.curve import CurveParams, Point
from mecdsa.errors import FieldMismatchError, FormatError, NonceExhaustedError
from mecdsa.opcount import Trace


def hash_to_int(message: bytes) -> int:
    """SHA-256 digest of the message as a big-endian integer."""
    return int.from_bytes(hashlib.sha256(message).digest(), "big")


class NonceSource:
    """Source of secret scalars in [1, order-1].

    Single-consumer: never share one across concurrent signers, or the
    draw order (and with it test reproducibility) is gone.
    """

    def draw(self, order: int) -> int:
        raise NotImplementedError


class SystemNonceSource(NonceSource):
    """Rejection sampling from the operating system CSPRNG."""

    def draw(self, order: int) -> int:
        if order < 3:
            raise ValueError("order too small to draw from")
        bits = order.bit_length()
        while True:
            k = secrets.randbits(bits)
            if 1 <= k <= order - 1:
                return k


class SeededNonceSource(NonceSource):
    """Deterministic rejection sampling from a seeded PRNG.

    For reproducible tests and benchmarks only — not a CSPRNG.
    """

    def __init__(self, seed: int):
        self._rng = random.Random(seed)

    def draw(self, order: int) -> int:
        if order < 3:
            raise ValueError("order too small to draw from")
        bits = order.bit_length()
        while True:
            k = self._rng.getrandbits(bits)
            if 1 <= k <= order - 1:
                return k


class ListNonceSource(NonceSource):
    """Explicit nonce list consumed in order (test mode).

    Makes every retry path deterministic.  Raises NonceExhaustedError
    when the list runs out and ValueError for an out-of-range entry.
    """

    def __init__(self, values):
        self._values = list(values)
        self._next = 0

    @property
    def consumed(self) -> int:
        return self._next

    @property
    def remaining(self) -> int:
        return len(self._values) - self._next

    def draw(self, order: int) -> int:
        if self._next >= len(self._values):
            raise NonceExhaustedError(
                f"nonce list exhausted after {self._next} draws"
            )
        k = self._values[self._next]
        self._next += 1
        if not 1 <= k <= order - 1:
            raise ValueError(f"nonce {k} outside [1, {order - 1}]")
        return k


@dataclass(frozen=True)
class Keypair:
    curve: CurveParams
    d: int
    q: Point


@dataclass(frozen=True)
class EcdsaSignature:
    r: int
    s: int


def keygen(curve: CurveParams, rng: NonceSource) -> Keypair:
    """Draw d uniformly from [1, n-1] and compute Q = d*P."""
    d = rng.draw(curve.n)
    q = curvemod.scalar_mul(d, curve.base, curve)
    if q.is_infinity:
        raise ValueError("degenerate key: d*P = O (is the curve order right?)")
    return Keypair(curve, d, q)


def sign(
    message: bytes,
    keypair: Keypair,
    nonces: NonceSource,
    trace: "Trace | None" = None,
) -> EcdsaSignature:
    """Sign; retries draw a fresh nonce until r != 0 and s != 0."""
    c = keypair.curve
    n = c.n
    e = hash_to_int(message)
    counts = trace.counts if trace is not None else None
    while True:
        k = nonces.draw(n)
        kp = curvemod.scalar_mul(k, c.base, c)
        if counts is not None:
            counts.ec_mul += 1
        r = kp.x % n
        if r == 0:
            if trace is not None:
                trace.retries += 1
            continue
        kinv = _kernels.mod_inv(k, n)
        dr = keypair.d * r % n
        t = (e + dr) % n
        s = kinv * t % n
        if counts is not None:
            counts.field_inv += 1
            counts.field_mul += 2
            counts.field_add += 1
        if s == 0:
            if trace is not None:
                trace.retries += 1
            continue
        if trace is not None:
            trace.nonces.append(k)
            trace.points.append(kp)
            trace.r_values.append(r)
        return EcdsaSignature(r, s)


def verify(
    message: bytes,
    sig: EcdsaSignature,
    public: Point,
    curve: CurveParams,
    trace: "Trace | None" = None,
) -> bool:
    """Accept or reject; never raises for bad signatures.

    The range check on (r, s) runs before any arithmetic, so rejected
    garbage costs nothing measurable.
    """
    n = curve.n
    if not (1 <= sig.r <= n - 1 and 1 <= sig.s <= n - 1):
        return False
    try:
        public_ok = not public.is_infinity and curvemod.is_on_curve(public, curve)
    except FieldMismatchError:
        public_ok = False
    if not public_ok:
        return False
    e = hash_to_int(message)
    counts = trace.counts if trace is not None else None
    w = _kernels.mod_inv(sig.s, n)
    u = e * w % n
    v = sig.r * w % n
    if counts is not None:
        counts.field_inv += 1
        counts.field_mul += 2
    big_r = curvemod.point_add(
        curvemod.scalar_mul(u, curve.base, curve),
        curvemod.scalar_mul(v, public, curve),
        curve,
    )
    if counts is not None:
        counts.ec_mul += 2
        counts.ec_add += 1
    if big_r.is_infinity:
        return False
    r_prime = big_r.x % n
    if trace is not None:
        trace.points.append(big_r)
        trace.r_values.append(r_prime)
    return sig.r == r_prime


def format_signature(sig: EcdsaSignature) -> str:
    """Text form "r:s", two lowercase hex integers."""
    return f"{int_to_hex(sig.r)}:{int_to_hex(sig.s)}"


def parse_signature(text: str) -> EcdsaSignature:
    parts = text.split(":")
    if len(parts) != 2:
        raise FormatError(f"signature must be 'r:s', got {text!r}")
    return EcdsaSignature(hex_to_int(parts[0], "r"), hex_to_int(parts[1], "s"))


__all__ = [
    "EcdsaSignature",
    "Keypair",
    "ListNonceSource",
    "NonceExhaustedError",
    "NonceSource",
    "SeededNonceSource",
    "SystemNonceSource",
    "format_signature",
    "hash_to_int",
    "keygen",
    "parse_signature",
    "sign",
    "verify",
]
