"""Short-Weierstrass curves: affine group law, scalar multiplication,
point compression, text encodings, and parameter validation.

Curve arithmetic delegates to the selected kernel backend (compiled or
pure Python); this module owns the typed surface and all checking.
Affine coordinates with one field inversion per addition are the ground
truth here — auditable over fast.
"""

from dataclasses import dataclass, field

from mecdsa import _kernels
from mecdsa._hex import int_to_fixed_hex
from mecdsa.errors import FieldMismatchError, FormatError, InvalidPointError
from mecdsa.fieldmath import PrimeField, is_probable_prime, sqrt_mod


@dataclass(frozen=True)
class Point:
    """An affine point, or the identity when both coordinates are None."""

    x: "int | None" = None
    y: "int | None" = None

    def __post_init__(self):
        if (self.x is None) != (self.y is None):
            raise ValueError("either both coordinates or neither")
        if self.x is not None and (self.x < 0 or self.y < 0):
            raise ValueError("coordinates must be non-negative")

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __repr__(self):
        if self.is_infinity:
            return "Point(infinity)"
        return f"Point({self.x:#x}, {self.y:#x})"


INFINITY = Point()


@dataclass(frozen=True)
class CurveParams:
    """One named curve y^2 = x^3 + ax + b over F_p with base point of
    order n and cofactor h.

    The constructor keeps whatever integers it is given; judging them is
    ``validate_curve_params``'s job, so that broken parameter sets can be
    constructed and then reported on rather than exploding here.
    """

    name: str
    p: int
    a: int
    b: int
    gx: int
    gy: int
    n: int
    h: int

    def __post_init__(self):
        if self.p < 2:
            raise ValueError("field modulus must be >= 2")
        for label in ("a", "b", "gx", "gy", "n", "h"):
            if getattr(self, label) < 0:
                raise ValueError(f"parameter {label} must be non-negative")

    @property
    def base(self) -> Point:
        return Point(self.gx, self.gy)

    @property
    def field(self) -> PrimeField:
        return PrimeField(self.p)

    @property
    def coord_bytes(self) -> int:
        """Fixed byte width of one coordinate in every encoding."""
        return (self.p.bit_length() + 7) // 8


def _check_coords(pt: Point, c: CurveParams):
    if pt.x >= c.p or pt.y >= c.p:
        raise FieldMismatchError(
            f"point {pt!r} has coordinates outside the field of {c.name}"
        )


def is_on_curve(pt: Point, c: CurveParams) -> bool:
    """True for the identity and for points satisfying the curve equation."""
    if pt.is_infinity:
        return True
    _check_coords(pt, c)
    return (pt.y * pt.y - (pt.x * pt.x * pt.x + c.a * pt.x + c.b)) % c.p == 0


def _require_on_curve(pt: Point, c: CurveParams):
    if not is_on_curve(pt, c):
        raise InvalidPointError(f"{pt!r} is not on curve {c.name}")


def _wrap(raw) -> Point:
    return INFINITY if raw is None else Point(raw[0], raw[1])


def _raw(pt: Point):
    return None if pt.is_infinity else (pt.x, pt.y)


def point_neg(pt: Point, c: CurveParams) -> Point:
    _require_on_curve(pt, c)
    return _wrap(_kernels.point_neg(_raw(pt), c.p))


def point_add(pt: Point, other: Point, c: CurveParams) -> Point:
    """Group law: identity, inverse pairs, tangent doubling, chord."""
    _require_on_curve(pt, c)
    _require_on_curve(other, c)
    return _wrap(_kernels.point_add(_raw(pt), _raw(other), c.a, c.p))


def scalar_mul(k: int, pt: Point, c: CurveParams) -> Point:
    """k-fold group sum for k >= 0; k is not reduced modulo anything."""
    if k < 0:
        raise ValueError("scalar must be non-negative")
    _require_on_curve(pt, c)
    return _wrap(_kernels.scalar_mul(k, _raw(pt), c.a, c.p))


def decompress_point(prefix: int, x_bytes: bytes, c: CurveParams) -> Point:
    """Recover (x, y) from a parity prefix (02 even / 03 odd) and x."""
    if prefix not in (0x02, 0x03):
        raise FormatError(f"bad compression prefix {prefix:#04x}")
    if len(x_bytes) != c.coord_bytes:
        raise FormatError(
            f"x must be exactly {c.coord_bytes} bytes, got {len(x_bytes)}"
        )
    x = int.from_bytes(x_bytes, "big")
    if x >= c.p:
        raise FormatError("x lies outside the field")
    rhs = (x * x * x + c.a * x + c.b) % c.p
    y = sqrt_mod(rhs, c.p)
    if y is None:
        raise InvalidPointError("x is not the abscissa of any curve point")
    want_odd = prefix == 0x03
    if bool(y & 1) != want_odd:
        y = (c.p - y) % c.p
    if bool(y & 1) != want_odd:
        # rhs == 0: the only root is y = 0, which is even.
        raise InvalidPointError("no root with the requested parity")
    return Point(x, y)


def compress_point(pt: Point, c: CurveParams) -> bytes:
    if pt.is_infinity:
        raise InvalidPointError("the identity has no compressed form")
    _require_on_curve(pt, c)
    prefix = b"\x03" if pt.y & 1 else b"\x02"
    return prefix + pt.x.to_bytes(c.coord_bytes, "big")


def encode_point(pt: Point, c: CurveParams, compressed: bool = True) -> str:
    """Text form: "inf", or prefix-tagged lowercase hex at fixed width."""
    if pt.is_infinity:
        return "inf"
    if compressed:
        return compress_point(pt, c).hex()
    _require_on_curve(pt, c)
    w = c.coord_bytes
    return "04" + int_to_fixed_hex(pt.x, w) + int_to_fixed_hex(pt.y, w)


def decode_point(text: str, c: CurveParams) -> Point:
    """Inverse of encode_point; the decoded point is checked on-curve."""
    if text == "inf":
        return INFINITY
    try:
        blob = bytes.fromhex(text)
    except ValueError:
        raise FormatError(f"not a hex point encoding: {text!r}") from None
    if not blob:
        raise FormatError("empty point encoding")
    w = c.coord_bytes
    prefix = blob[0]
    if prefix in (0x02, 0x03):
        return decompress_point(prefix, blob[1:], c)
    if prefix == 0x04:
        if len(blob) != 1 + 2 * w:
            raise FormatError(
                f"uncompressed point must be {1 + 2 * w} bytes, got {len(blob)}"
            )
        pt = Point(
            int.from_bytes(blob[1 : 1 + w], "big"),
            int.from_bytes(blob[1 + w :], "big"),
        )
        try:
            _require_on_curve(pt, c)
        except FieldMismatchError:
            raise InvalidPointError(
                f"{pt!r} has coordinates outside the field of {c.name}"
            ) from None
        return pt
    raise FormatError(f"bad point prefix {prefix:#04x}")


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class ValidationReport:
    """Outcome of validate_curve_params, one entry per check."""

    curve_name: str
    strict: bool
    checks: "list[CheckResult]" = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def __str__(self):
        mode = "strict" if self.strict else "relaxed"
        lines = [f"validation of {self.curve_name} ({mode}):"]
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            suffix = f" ({c.detail})" if c.detail else ""
            lines.append(f"  {status} {c.name}{suffix}")
        return "\n".join(lines)


def validate_curve_params(
    c: CurveParams, strict: bool = True, rounds: int = 64
) -> ValidationReport:
    """Run every parameter check and report each one pass/fail.

    Relaxed mode drops only the two order-size bounds, never an algebraic
    check, so toy curves stay honest.  A check that blows up on garbage
    input counts as failed, not as an error.
    """
    report = ValidationReport(curve_name=c.name, strict=strict)

    def run(name, fn, detail=""):
        try:
            passed = bool(fn())
            note = "" if passed else detail
        except Exception as exc:
            passed, note = False, f"{detail + ': ' if detail else ''}{exc}"
        report.checks.append(CheckResult(name, passed, note))
        return passed

    run("field-modulus-prime", lambda: is_probable_prime(c.p, rounds))
    run(
        "discriminant-nonzero",
        lambda: (4 * c.a**3 + 27 * c.b**2) % c.p != 0,
        "4a^3 + 27b^2 = 0 (mod p): singular curve",
    )
    base_ok = run(
        "base-point-on-curve",
        lambda: not c.base.is_infinity and is_on_curve(c.base, c),
    )
    run("order-prime", lambda: is_probable_prime(c.n, rounds))
    run(
        "order-kills-base",
        lambda: base_ok
        and c.n >= 1
        and _kernels.scalar_mul(c.n, (c.gx, c.gy), c.a, c.p) is None,
        "n*P != O",
    )
    run("cofactor-positive", lambda: c.h >= 1)
    run(
        "cofactor-group-size",
        lambda: (c.h * c.n - (c.p + 1)) ** 2 <= 4 * c.p,
        "h*n falls outside the Hasse interval",
    )
    if strict:
        run("order-above-2^160", lambda: c.n > 2**160)
        run("order-above-4-sqrt-p", lambda: c.n * c.n > 16 * c.p)
    return report
