"""Multi-curve ECDSA signatures.

One signature over t independently-chosen curves: per-curve nonce points
give residues r_i, the shared value r is their plain integer sum, and
each curve contributes one s_i binding r under its own order.  Compared
with running ECDSA once per curve, the signature carries a single r
instead of t of them.  The package also ships classic single-curve ECDSA,
the run-it-t-times baseline, a cost-model bench, and a CLI.

NOT production-hardened: arithmetic is not constant-time, key files are
unencrypted, and nonce handling favors testability.  Desk-scale use only.
"""

from mecdsa._kernels import BACKEND as _BACKEND
from mecdsa.curve import (
    INFINITY,
    CurveParams,
    Point,
    decompress_point,
    is_on_curve,
    point_add,
    point_neg,
    scalar_mul,
    validate_curve_params,
)
from mecdsa.ecdsa import (
    EcdsaSignature,
    Keypair,
    ListNonceSource,
    NonceSource,
    SeededNonceSource,
    SystemNonceSource,
    hash_to_int,
    keygen,
    sign,
    verify,
)
from mecdsa.errors import (
    CurveValidationError,
    DuplicateCurveError,
    FieldMismatchError,
    FormatError,
    InvalidPointError,
    MecdsaError,
    NonceExhaustedError,
    NotInvertibleError,
    UnknownCurveError,
)
from mecdsa.fieldmath import FieldElement, PrimeField, is_probable_prime, sqrt_mod
from mecdsa.multi import (
    MultiCurveConfig,
    MultiCurveKeypair,
    MultiSignature,
    TEcdsaSignature,
    decode_multisig,
    encode_multisig,
    mkeygen,
    msign,
    mverify,
    t_ecdsa_sign,
    t_ecdsa_verify,
)
from mecdsa.opcount import OpCounts, Trace
from mecdsa.registry import CurveRegistry, default_registry, get_curve, list_curves

__version__ = "0.1.0"


def kernel_backend() -> str:
    """Which kernel implementation this process selected: 'native' or 'pure'."""
    return _BACKEND


__all__ = [
    "CurveParams",
    "CurveRegistry",
    "CurveValidationError",
    "DuplicateCurveError",
    "EcdsaSignature",
    "FieldElement",
    "FieldMismatchError",
    "FormatError",
    "INFINITY",
    "InvalidPointError",
    "Keypair",
    "ListNonceSource",
    "MecdsaError",
    "MultiCurveConfig",
    "MultiCurveKeypair",
    "MultiSignature",
    "NonceExhaustedError",
    "NonceSource",
    "NotInvertibleError",
    "OpCounts",
    "Point",
    "PrimeField",
    "SeededNonceSource",
    "SystemNonceSource",
    "TEcdsaSignature",
    "Trace",
    "UnknownCurveError",
    "decode_multisig",
    "decompress_point",
    "default_registry",
    "encode_multisig",
    "get_curve",
    "hash_to_int",
    "is_on_curve",
    "is_probable_prime",
    "keygen",
    "kernel_backend",
    "list_curves",
    "mkeygen",
    "msign",
    "mverify",
    "point_add",
    "point_neg",
    "scalar_mul",
    "sign",
    "sqrt_mod",
    "t_ecdsa_sign",
    "t_ecdsa_verify",
    "validate_curve_params",
    "verify",
]
