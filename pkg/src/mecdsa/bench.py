"""Cost-model harness: predicted vs measured operation counts, signature
length accounting, wall-clock timing, and a kernel-backend comparison.

Counting granularity is the algorithm step (see ``mecdsa.opcount``); the
per-execution predictions for t curves are

    scheme    phase    Fp.add  Fp.mul  Fp.inv  EC.add  EC.mul
    t-ecdsa   sign       t       2t      t       0       t
    t-ecdsa   verify     0       2t      t       t       2t
    mecdsa    sign      2t-1     2t      t       0       t
    mecdsa    verify    t-1      2t      t       t       2t

and the scalar payload bounds in bits are 2*sum(l(n_i)) for t-ecdsa
versus max(l(n_i)) + t - 1 + sum(l(n_i)) for mecdsa, where l(n) is the
bit length of the order.  The t - 1 slack on the shared r is generous;
the tight variant replaces it with ceil(log2 t) and is reported too,
without changing any wire format.

Timings are informational only.  Retried runs are reported with their
actual (elevated) counts and a retry flag, never silently dropped.
"""

import statistics
import time
from dataclasses import dataclass, field

from mecdsa import multi
from mecdsa.curve import CurveParams
from mecdsa.ecdsa import ListNonceSource, SeededNonceSource
from mecdsa.multi import MultiCurveConfig, MultiCurveKeypair, mkeygen
from mecdsa.opcount import OpCounts, Trace

SCHEMES = ("mecdsa", "t-ecdsa")
PHASES = ("sign", "verify")


def _check_scheme_phase(scheme: str, phase: str):
    if scheme not in SCHEMES:
        raise ValueError(f"scheme must be one of {SCHEMES}, got {scheme!r}")
    if phase not in PHASES:
        raise ValueError(f"phase must be one of {PHASES}, got {phase!r}")


def predicted_counts(scheme: str, phase: str, t: int) -> OpCounts:
    """Per-execution operation counts predicted by the cost model."""
    _check_scheme_phase(scheme, phase)
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    if phase == "sign":
        adds = 2 * t - 1 if scheme == "mecdsa" else t
        return OpCounts(adds, 2 * t, t, 0, t)
    adds = t - 1 if scheme == "mecdsa" else 0
    return OpCounts(adds, 2 * t, t, t, 2 * t)


@dataclass
class MeasuredRun:
    """Counts observed for one instrumented execution."""

    scheme: str
    phase: str
    t: int
    counts: OpCounts
    retries: int = 0
    restarts: int = 0

    @property
    def retried(self) -> bool:
        return self.retries > 0 or self.restarts > 0

    @property
    def matches_predicted(self) -> bool:
        return self.counts == predicted_counts(self.scheme, self.phase, self.t)


def measure_counts(
    scheme: str,
    phase: str,
    config: MultiCurveConfig,
    keypair: MultiCurveKeypair,
    message: bytes,
    nonces: "list[int]",
) -> MeasuredRun:
    """Run one sign or verify with counting instrumentation.

    ``nonces`` feeds the signing side; for the verify phase the signature
    is produced first without instrumentation, then verified with it.
    """
    _check_scheme_phase(scheme, phase)
    sign_fn = multi.msign if scheme == "mecdsa" else multi.t_ecdsa_sign
    verify_fn = multi.mverify if scheme == "mecdsa" else multi.t_ecdsa_verify
    trace = Trace()
    if phase == "sign":
        sign_fn(message, keypair, ListNonceSource(nonces), trace)
    else:
        sig = sign_fn(message, keypair, ListNonceSource(nonces))
        ok = verify_fn(message, sig, keypair.q, config, trace)
        if not ok:
            raise AssertionError("genuine signature failed to verify")
    return MeasuredRun(
        scheme, phase, config.t, trace.counts, trace.retries, trace.restarts
    )


def ceil_log2(t: int) -> int:
    if t < 1:
        raise ValueError("t must be >= 1")
    return (t - 1).bit_length()


def formula_sig_bits(scheme: str, orders: "list[int]", tight: bool = False) -> int:
    """Scalar payload bound in bits for a curve set, by the length formulas."""
    if scheme not in SCHEMES:
        raise ValueError(f"scheme must be one of {SCHEMES}, got {scheme!r}")
    lengths = [n.bit_length() for n in orders]
    if scheme == "t-ecdsa":
        return 2 * sum(lengths)
    slack = ceil_log2(len(lengths)) if tight else len(lengths) - 1
    return max(lengths) + slack + sum(lengths)


@dataclass
class LengthReport:
    """Formula bounds vs measured minimal payloads, in bits."""

    t: int
    samples: int
    mecdsa_formula_bits: int
    mecdsa_tight_bits: int
    tecdsa_formula_bits: int
    mecdsa_measured_mean: float = 0.0
    mecdsa_measured_max: int = 0
    tecdsa_measured_mean: float = 0.0
    tecdsa_measured_max: int = 0


def _multisig_payload_bits(sig: multi.MultiSignature) -> int:
    return sig.r.bit_length() + sum(s.bit_length() for s in sig.s)


def _tecdsa_payload_bits(sig: multi.TEcdsaSignature) -> int:
    return sum(p.r.bit_length() + p.s.bit_length() for p in sig.pairs)


def signature_length_report(
    config: MultiCurveConfig, samples: int = 100, seed: int = 0
) -> LengthReport:
    """Measure minimal payload sizes over random signatures.

    Measured payloads are the bit lengths of the scalars themselves
    (headers and byte padding excluded), which is what the formulas
    bound.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    orders = [c.n for c in config.curves]
    report = LengthReport(
        t=config.t,
        samples=samples,
        mecdsa_formula_bits=formula_sig_bits("mecdsa", orders),
        mecdsa_tight_bits=formula_sig_bits("mecdsa", orders, tight=True),
        tecdsa_formula_bits=formula_sig_bits("t-ecdsa", orders),
    )
    rng = SeededNonceSource(seed)
    keypair = mkeygen(config, rng)
    m_bits, b_bits = [], []
    import random as _random

    msg_rng = _random.Random(seed ^ 0x5BD1E995)
    for _ in range(samples):
        message = msg_rng.randbytes(64)
        m_bits.append(_multisig_payload_bits(multi.msign(message, keypair, rng)))
        b_bits.append(_tecdsa_payload_bits(multi.t_ecdsa_sign(message, keypair, rng)))
    report.mecdsa_measured_mean = statistics.fmean(m_bits)
    report.mecdsa_measured_max = max(m_bits)
    report.tecdsa_measured_mean = statistics.fmean(b_bits)
    report.tecdsa_measured_max = max(b_bits)
    return report


@dataclass
class TimingStats:
    iterations: int
    mean: float
    median: float
    minimum: float
    maximum: float

    @classmethod
    def from_samples(cls, samples: "list[float]") -> "TimingStats":
        return cls(
            iterations=len(samples),
            mean=statistics.fmean(samples),
            median=statistics.median(samples),
            minimum=min(samples),
            maximum=max(samples),
        )


@dataclass
class CostReport:
    """One scheme x phase cell of the comparison."""

    scheme: str
    phase: str
    t: int
    counted: OpCounts
    predicted: OpCounts
    retried: bool
    wall_time: TimingStats
    lengths: LengthReport

    @property
    def counts_match(self) -> bool:
        return self.counted == self.predicted


def timing_bench(
    config: MultiCurveConfig,
    iterations: int = 10,
    seed: int = 0,
    length_samples: int = 100,
) -> "list[CostReport]":
    """Time and count all four scheme x phase cells.

    Messages and nonces are generated deterministically from the seed, so
    operation counts repeat exactly across runs; wall times of course do
    not.
    """
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    import random as _random

    lengths = signature_length_report(config, samples=length_samples, seed=seed)
    keypair = mkeygen(config, SeededNonceSource(seed + 1))
    reports = []
    for scheme in SCHEMES:
        sign_fn = multi.msign if scheme == "mecdsa" else multi.t_ecdsa_sign
        verify_fn = multi.mverify if scheme == "mecdsa" else multi.t_ecdsa_verify
        msg_rng = _random.Random(seed)
        nonce_rng = SeededNonceSource(seed + 2)
        sign_times, verify_times = [], []
        sign_trace, verify_trace = Trace(), Trace()
        first = True
        for _ in range(iterations):
            message = msg_rng.randbytes(64)
            t0 = time.perf_counter()
            sig = sign_fn(message, keypair, nonce_rng, sign_trace if first else None)
            t1 = time.perf_counter()
            ok = verify_fn(
                message, sig, keypair.q, config, verify_trace if first else None
            )
            t2 = time.perf_counter()
            if not ok:
                raise AssertionError("genuine signature failed to verify")
            sign_times.append(t1 - t0)
            verify_times.append(t2 - t1)
            first = False
        for phase, times, trace in (
            ("sign", sign_times, sign_trace),
            ("verify", verify_times, verify_trace),
        ):
            reports.append(
                CostReport(
                    scheme=scheme,
                    phase=phase,
                    t=config.t,
                    counted=trace.counts,
                    predicted=predicted_counts(scheme, phase, config.t),
                    retried=trace.retries > 0 or trace.restarts > 0,
                    wall_time=TimingStats.from_samples(times),
                    lengths=lengths,
                )
            )
    return reports


def format_report_table(reports: "list[CostReport]") -> str:
    """Human-readable comparison table, one row per scheme x phase."""
    header = (
        f"{'scheme':<9} {'phase':<7} {'Fp.add':>6} {'Fp.mul':>6} {'Fp.inv':>6} "
        f"{'EC.add':>6} {'EC.mul':>6} {'match':>6} {'median_s':>10}"
    )
    lines = [header, "-" * len(header)]
    for rep in reports:
        c = rep.counted
        lines.append(
            f"{rep.scheme:<9} {rep.phase:<7} {c.field_add:>6} {c.field_mul:>6} "
            f"{c.field_inv:>6} {c.ec_add:>6} {c.ec_mul:>6} "
            f"{'yes' if rep.counts_match else 'NO':>6} {rep.wall_time.median:>10.6f}"
        )
    if reports:
        ln = reports[0].lengths
        lines.append("")
        lines.append(
            f"signature payload bits (t={ln.t}): "
            f"mecdsa formula={ln.mecdsa_formula_bits} tight={ln.mecdsa_tight_bits} "
            f"measured mean={ln.mecdsa_measured_mean:.1f} max={ln.mecdsa_measured_max}"
        )
        lines.append(
            f"{'':>29}t-ecdsa formula={ln.tecdsa_formula_bits} "
            f"measured mean={ln.tecdsa_measured_mean:.1f} max={ln.tecdsa_measured_max}"
        )
    return "\n".join(lines)


def report_kv_lines(reports: "list[CostReport]") -> str:
    """Machine-readable key = value mirror of the table."""
    lines = []
    for rep in reports:
        prefix = f"{rep.scheme}.{rep.phase}"
        for key, value in rep.counted.as_dict().items():
            lines.append(f"{prefix}.counted.{key} = {value}")
        for key, value in rep.predicted.as_dict().items():
            lines.append(f"{prefix}.predicted.{key} = {value}")
        lines.append(f"{prefix}.match = {'true' if rep.counts_match else 'false'}")
        lines.append(f"{prefix}.retried = {'true' if rep.retried else 'false'}")
        lines.append(f"{prefix}.median_seconds = {rep.wall_time.median:.9f}")
        lines.append(f"{prefix}.mean_seconds = {rep.wall_time.mean:.9f}")
    if reports:
        ln = reports[0].lengths
        lines.append(f"length.t = {ln.t}")
        lines.append(f"length.mecdsa.formula_bits = {ln.mecdsa_formula_bits}")
        lines.append(f"length.mecdsa.tight_bits = {ln.mecdsa_tight_bits}")
        lines.append(f"length.mecdsa.measured_mean_bits = {ln.mecdsa_measured_mean:.2f}")
        lines.append(f"length.mecdsa.measured_max_bits = {ln.mecdsa_measured_max}")
        lines.append(f"length.tecdsa.formula_bits = {ln.tecdsa_formula_bits}")
        lines.append(f"length.tecdsa.measured_mean_bits = {ln.tecdsa_measured_mean:.2f}")
        lines.append(f"length.tecdsa.measured_max_bits = {ln.tecdsa_measured_max}")
    return "\n".join(lines)


@dataclass
class BackendTiming:
    backend: str
    scalar_mul: TimingStats


@dataclass
class BackendComparison:
    """Same scalar-multiplication workload on each available kernel."""

    curve: str
    results: "list[BackendTiming]" = field(default_factory=list)
    outputs_equal: bool = True

    @property
    def speedup(self) -> "float | None":
        stats = {r.backend: r.scalar_mul for r in self.results}
        if "pure" in stats and "native" in stats and stats["native"].median > 0:
            return stats["pure"].median / stats["native"].median
        return None


def compare_backends(
    params: CurveParams, iterations: int = 30, seed: int = 0
) -> BackendComparison:
    """Benchmark scalar_mul on the pure and (if built) compiled kernels.

    Also cross-checks that both backends produce identical points for the
    sampled scalars.
    """
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    import random as _random

    from mecdsa._kernels import pure as pure_mod

    backends = [("pure", pure_mod)]
    try:
        from mecdsa._kernels import _native as native_mod

        backends.append(("native", native_mod))
    except ImportError:
        pass
    rng = _random.Random(seed)
    scalars = [rng.randrange(1, params.n) for _ in range(iterations)]
    base = (params.gx, params.gy)
    comparison = BackendComparison(curve=params.name)
    outputs = {}
    for name, mod in backends:
        times = []
        results = []
        for k in scalars:
            t0 = time.perf_counter()
            results.append(mod.scalar_mul(k, base, params.a, params.p))
            times.append(time.perf_counter() - t0)
        outputs[name] = results
        comparison.results.append(
            BackendTiming(backend=name, scalar_mul=TimingStats.from_samples(times))
        )
    if len(outputs) == 2:
        comparison.outputs_equal = outputs["pure"] == outputs["native"]
    return comparison


def format_backend_comparison(comparison: BackendComparison) -> str:
    lines = [f"kernel backends on {comparison.curve} (scalar_mul):"]
    for res in comparison.results:
        st = res.scalar_mul
        lines.append(
            f"  {res.backend:<7} median {st.median * 1e3:8.3f} ms   "
            f"mean {st.mean * 1e3:8.3f} ms   ({st.iterations} iterations)"
        )
    speedup = comparison.speedup
    if speedup is not None:
        agree = "outputs identical" if comparison.outputs_equal else "OUTPUTS DIFFER"
        lines.append(f"  native speedup over pure: {speedup:.2f}x ({agree})")
    else:
        lines.append("  compiled backend not available; nothing to compare")
    return "\n".join(lines)
