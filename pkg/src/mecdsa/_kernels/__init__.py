"""Kernel backend selection.

The compiled extension and the pure-Python module implement the same five
functions with identical semantics.  Selection happens once, at import:
``MECDSA_BACKEND=auto|native|pure`` in the environment forces a choice,
``auto`` (the default) prefers the compiled kernels and falls back.
"""

import os

_choice = os.environ.get("MECDSA_BACKEND", "auto").strip().lower()
if _choice not in ("auto", "native", "pure"):
    raise ImportError(
        f"MECDSA_BACKEND must be 'auto', 'native' or 'pure', not {_choice!r}"
    )

if _choice == "pure":
    from mecdsa._kernels import pure as _impl

    BACKEND = "pure"
else:
    try:
        from mecdsa._kernels import _native as _impl  # type: ignore[no-redef]

        BACKEND = "native"
    except ImportError:
        if _choice == "native":
            raise ImportError(
                "MECDSA_BACKEND=native, but the compiled extension is not "
                "available; build it with 'python setup.py build_ext "
                "--inplace' or reinstall the package"
            ) from None
        from mecdsa._kernels import pure as _impl

        BACKEND = "pure"

mod_inv = _impl.mod_inv
point_neg = _impl.point_neg
point_double = _impl.point_double
point_add = _impl.point_add
scalar_mul = _impl.scalar_mul
