"""The multi-curve signature scheme (MECDSA) and the run-it-t-times
ECDSA baseline, plus the binary wire encoding.

Over an ordered list of curves E_1..E_t (duplicates allowed), a
multi-signature on message m is (r, s_1..s_t):

  per curve:  (x_i, y_i) = k_i * P_i,   r_i = x_i mod n_i   (retry on 0)
  shared:     r = r_1 + ... + r_t       (a plain integer sum, no modulus)
  per curve:  s_i = k_i^-1 (e + d_i * r) mod n_i

If r = 0 (mod n_i) for any i — or any s_i lands on 0, which is a shared
failure because every s_j depends on r — the whole pass restarts with
fresh nonces for all curves.  Verification recomputes R_i =
(e/s_i)*P_i + (r/s_i)*Q_i per curve and accepts when r equals the sum of
the recovered x-coordinates reduced per curve.  For t = 1 all of this
degenerates, bit for bit, to plain ECDSA.

Because r is unreduced it lies in [t, n_1+...+n_t - t] for any genuine
signature, which is also the verifier's first range check (closed
interval, boundaries accepted).

Nonces are drawn in curve-index order from a single source, so test-mode
runs are reproducible; the r sum is the join point of the per-curve work.
"""

from dataclasses import dataclass

from mecdsa import _kernels
from mecdsa import curve as curvemod
from mecdsa.curve import CurveParams, Point
from mecdsa.ecdsa import EcdsaSignature, Keypair, NonceSource, hash_to_int
from mecdsa.ecdsa import sign as ecdsa_sign
from mecdsa.ecdsa import verify as ecdsa_verify
from mecdsa.errors import FieldMismatchError, FormatError
from mecdsa.opcount import Trace


@dataclass(frozen=True)
class MultiCurveConfig:
    """Ordered list of t >= 1 validated curves; duplicates permitted."""

    curves: "tuple[CurveParams, ...]"

    def __post_init__(self):
        object.__setattr__(self, "curves", tuple(self.curves))
        if len(self.curves) < 1:
            raise ValueError("a multi-curve config needs at least one curve")

    @property
    def t(self) -> int:
        return len(self.curves)

    @property
    def order_sum(self) -> int:
        return sum(c.n for c in self.curves)


@dataclass(frozen=True)
class MultiCurveKeypair:
    """Independent per-curve keypairs, index-aligned with the config."""

    config: MultiCurveConfig
    d: "tuple[int, ...]"
    q: "tuple[Point, ...]"

    def __post_init__(self):
        if not (len(self.d) == len(self.q) == self.config.t):
            raise ValueError("keypair lists must align with the config")


@dataclass(frozen=True)
class MultiSignature:
    """(r, s_1..s_t): the shared unreduced sum plus one s per curve."""

    r: int
    s: "tuple[int, ...]"

    @property
    def t(self) -> int:
        return len(self.s)


@dataclass(frozen=True)
class TEcdsaSignature:
    """Baseline signature: one independent (r_i, s_i) pair per curve."""

    pairs: "tuple[EcdsaSignature, ...]"

    @property
    def t(self) -> int:
        return len(self.pairs)


def mkeygen(config: MultiCurveConfig, rng: NonceSource) -> MultiCurveKeypair:
    """One independent keypair per curve, drawn in index order."""
    ds, qs = [], []
    for c in config.curves:
        d = rng.draw(c.n)
        q = curvemod.scalar_mul(d, c.base, c)
        if q.is_infinity:
            raise ValueError(f"degenerate key on {c.name}: d*P = O")
        ds.append(d)
        qs.append(q)
    return MultiCurveKeypair(config, tuple(ds), tuple(qs))


def msign(
    message: bytes,
    keypair: MultiCurveKeypair,
    nonces: NonceSource,
    trace: "Trace | None" = None,
) -> MultiSignature:
    """Multi-curve signing as described in the module docstring.

    Counted steps per retry-free run: t EC multiplies, t inversions,
    2t field multiplies, and 2t-1 additions (t from e + d_i*r, t-1 from
    the r summation, which the cost model classifies as field adds).
    """
    cfg = keypair.config
    e = hash_to_int(message)
    counts = trace.counts if trace is not None else None
    while True:
        ks, points, r_parts = [], [], []
        for c in cfg.curves:
            while True:
                k = nonces.draw(c.n)
                kp = curvemod.scalar_mul(k, c.base, c)
                if counts is not None:
                    counts.ec_mul += 1
                r_i = kp.x % c.n
                if r_i != 0:
                    break
                if trace is not None:
                    trace.retries += 1
            ks.append(k)
            points.append(kp)
            r_parts.append(r_i)
        r = r_parts[0]
        for part in r_parts[1:]:
            r = r + part
            if counts is not None:
                counts.field_add += 1
        if any(r % c.n == 0 for c in cfg.curves):
            if trace is not None:
                trace.restarts += 1
            continue
        ss = []
        for c, k, d in zip(cfg.curves, ks, keypair.d):
            kinv = _kernels.mod_inv(k, c.n)
            dr = d * r % c.n
            t_i = (e + dr) % c.n
            s_i = kinv * t_i % c.n
            if counts is not None:
                counts.field_inv += 1
                counts.field_mul += 2
                counts.field_add += 1
            if s_i == 0:
                break
            ss.append(s_i)
        if len(ss) != cfg.t:
            # an s_i = 0 invalidates the shared r; restart everything
            if trace is not None:
                trace.restarts += 1
            continue
        if trace is not None:
            trace.nonces.extend(ks)
            trace.points.extend(points)
            trace.r_values.extend(r_parts)
        return MultiSignature(r, tuple(ss))


def mverify(
    message: bytes,
    sig: MultiSignature,
    publics: "tuple[Point, ...]",
    config: MultiCurveConfig,
    trace: "Trace | None" = None,
) -> bool:
    """Accept or refuse; never raises for bad signatures.

    All range checks run before any curve arithmetic: r must lie in
    [t, sum(n_i) - t] and every s_i in [1, n_i - 1].
    """
    t = config.t
    if sig.t != t or len(publics) != t:
        return False
    if not (t <= sig.r <= config.order_sum - t):
        return False
    for c, s_i in zip(config.curves, sig.s):
        if not (1 <= s_i <= c.n - 1):
            return False
    for c, q in zip(config.curves, publics):
        try:
            if q.is_infinity or not curvemod.is_on_curve(q, c):
                return False
        except FieldMismatchError:
            return False
    e = hash_to_int(message)
    counts = trace.counts if trace is not None else None
    r_primes = []
    for c, s_i, q in zip(config.curves, sig.s, publics):
        w = _kernels.mod_inv(s_i, c.n)
        u = e * w % c.n
        v = sig.r * w % c.n
        if counts is not None:
            counts.field_inv += 1
            counts.field_mul += 2
        big_r = curvemod.point_add(
            curvemod.scalar_mul(u, c.base, c),
            curvemod.scalar_mul(v, q, c),
            c,
        )
        if counts is not None:
            counts.ec_mul += 2
            counts.ec_add += 1
        if big_r.is_infinity:
            return False
        rp = big_r.x % c.n
        r_primes.append(rp)
        if trace is not None:
            trace.points.append(big_r)
            trace.r_values.append(rp)
    total = r_primes[0]
    for rp in r_primes[1:]:
        total = total + rp
        if counts is not None:
            counts.field_add += 1
    return sig.r == total


def t_ecdsa_sign(
    message: bytes,
    keypair: MultiCurveKeypair,
    nonces: NonceSource,
    trace: "Trace | None" = None,
) -> TEcdsaSignature:
    """Baseline: an independent ECDSA signature per curve, same message."""
    pairs = []
    for c, d, q in zip(keypair.config.curves, keypair.d, keypair.q):
        pairs.append(ecdsa_sign(message, Keypair(c, d, q), nonces, trace))
    return TEcdsaSignature(tuple(pairs))


def t_ecdsa_verify(
    message: bytes,
    sig: TEcdsaSignature,
    publics: "tuple[Point, ...]",
    config: MultiCurveConfig,
    trace: "Trace | None" = None,
) -> bool:
    """Accept iff every per-curve signature verifies."""
    if sig.t != config.t or len(publics) != config.t:
        return False
    for c, pair, q in zip(config.curves, sig.pairs, publics):
        if not ecdsa_verify(message, pair, q, c, trace):
            return False
    return True


# Wire format: 0x01 | t | (2-byte big-endian length + minimal big-endian
# bytes) for r and then each s_i.  Strict decoding: exact lengths, no
# trailing bytes, no leading-zero (non-minimal) integers.

_WIRE_VERSION = 0x01


def encode_multisig(sig: MultiSignature) -> bytes:
    if sig.t < 1:
        raise FormatError("cannot encode a signature with no components")
    if sig.t > 255:
        raise FormatError("cannot encode more than 255 components")
    out = bytearray((_WIRE_VERSION, sig.t))
    for value in (sig.r, *sig.s):
        if value < 0:
            raise FormatError("signature integers must be non-negative")
        blob = value.to_bytes((value.bit_length() + 7) // 8, "big")
        if len(blob) > 0xFFFF:
            raise FormatError("integer too large for the wire format")
        out += len(blob).to_bytes(2, "big")
        out += blob
    return bytes(out)


def decode_multisig(data: bytes) -> MultiSignature:
    """Strict inverse of encode_multisig; FormatError carries the offset."""
    if len(data) < 2:
        raise FormatError("truncated header", offset=len(data))
    if data[0] != _WIRE_VERSION:
        raise FormatError(f"unsupported version byte {data[0]:#04x}", offset=0)
    t = data[1]
    if t == 0:
        raise FormatError("component count must be at least 1", offset=1)
    offset = 2
    values = []
    for _ in range(t + 1):
        if offset + 2 > len(data):
            raise FormatError("truncated length prefix", offset=offset)
        length = int.from_bytes(data[offset : offset + 2], "big")
        offset += 2
        if offset + length > len(data):
            raise FormatError("truncated integer", offset=offset)
        blob = data[offset : offset + length]
        if length > 0 and blob[0] == 0:
            raise FormatError("non-minimal integer encoding", offset=offset)
        values.append(int.from_bytes(blob, "big"))
        offset += length
    if offset != len(data):
        raise FormatError(f"{len(data) - offset} trailing bytes", offset=offset)
    return MultiSignature(values[0], tuple(values[1:]))
