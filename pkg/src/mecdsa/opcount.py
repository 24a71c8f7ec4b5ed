"""Operation tallies and execution traces, at algorithm-step granularity.

A tallied operation is one explicit step of the signing or verification
procedure: computing k*P is a single EC multiply no matter how many
doublings run inside the kernel, and kernel internals are never counted.
This is the only granularity at which the cost-model predictions are
reproducible, so it is the only one offered.
"""

from dataclasses import dataclass, field


@dataclass
class OpCounts:
    """Field add/mul/inv and EC add/mul tallies for one execution."""

    field_add: int = 0
    field_mul: int = 0
    field_inv: int = 0
    ec_add: int = 0
    ec_mul: int = 0

    def __add__(self, other: "OpCounts") -> "OpCounts":
        return OpCounts(
            self.field_add + other.field_add,
            self.field_mul + other.field_mul,
            self.field_inv + other.field_inv,
            self.ec_add + other.ec_add,
            self.ec_mul + other.ec_mul,
        )

    def total(self) -> int:
        return self.field_add + self.field_mul + self.field_inv + self.ec_add + self.ec_mul

    def as_dict(self) -> "dict[str, int]":
        return {
            "field_add": self.field_add,
            "field_mul": self.field_mul,
            "field_inv": self.field_inv,
            "ec_add": self.ec_add,
            "ec_mul": self.ec_mul,
        }


@dataclass
class Trace:
    """Optional instrumentation carrier for sign/verify calls.

    Counts accumulate for every step actually executed, retried attempts
    included.  The per-curve lists hold the *final accepted* round only:
    for signing the nonces k_i, the points k_i*P_i and the residues r_i;
    for verification the recomputed points R_i and residues r'_i.

    Traces record secrets (nonces).  They exist for tests, diagnostics
    and the cost model — never hand one production data.
    """

    counts: OpCounts = field(default_factory=OpCounts)
    nonces: "list[int]" = field(default_factory=list)
    points: list = field(default_factory=list)
    r_values: "list[int]" = field(default_factory=list)
    retries: int = 0
    restarts: int = 0
