import random

import pytest

from mecdsa.curve import is_on_curve, scalar_mul
from mecdsa.ecdsa import (
    EcdsaSignature,
    Keypair,
    ListNonceSource,
    SeededNonceSource,
    sign,
    verify,
)
from mecdsa.errors import NonceExhaustedError
from mecdsa.multi import (
    MultiCurveConfig,
    MultiCurveKeypair,
    MultiSignature,
    TEcdsaSignature,
    mkeygen,
    msign,
    mverify,
    t_ecdsa_sign,
    t_ecdsa_verify,
)
from mecdsa.opcount import Trace
from mecdsa.registry import default_registry

from .conftest import TEST17, TOY23, TOY43, toy_tuple
from .oracles import msign_oracle, mverify_oracle

# engineered on (TEST17, TOY23): the first pair makes r = r_1 + r_2 = 19,
# which is 0 mod n_1 and forces a full restart; the second pair is clean
RESTART_NONCES = [1, 2, 1, 3]
CLEAN_NONCES = [1, 3]


def toy_keypair(config, ds):
    qs = tuple(scalar_mul(d, c.base, c) for d, c in zip(ds, config.curves))
    return MultiCurveKeypair(config, tuple(ds), qs)


def test_config_requires_at_least_one_curve():
    with pytest.raises(ValueError):
        MultiCurveConfig(())


def test_mkeygen_unit_scalars_give_base_points():
    registry = default_registry()
    config = MultiCurveConfig((registry.get("secp256k1"), registry.get("p256")))
    kp = mkeygen(config, ListNonceSource([1, 1]))
    assert kp.q == tuple(c.base for c in config.curves)


def test_mkeygen_degenerates_to_single_keygen():
    config = MultiCurveConfig((TEST17,))
    kp = mkeygen(config, ListNonceSource([7]))
    assert kp.d == (7,)
    assert kp.q[0] == scalar_mul(7, TEST17.base, TEST17)


def test_mkeygen_toy_pair_on_curve(toy_pair_config):
    rng = SeededNonceSource(5)
    kp = mkeygen(toy_pair_config, rng)
    for c, q in zip(toy_pair_config.curves, kp.q):
        assert not q.is_infinity and is_on_curve(q, c)


def test_msign_t1_bit_identical_to_ecdsa():
    config = MultiCurveConfig((TEST17,))
    for d, k, message in [(11, 5, b"beta"), (16, 6, b"delta"), (9, 4, b"eps")]:
        kp = toy_keypair(config, [d])
        multi_sig = msign(message, kp, ListNonceSource([k]))
        single = sign(message, Keypair(TEST17, d, kp.q[0]), ListNonceSource([k]))
        assert multi_sig.r == single.r
        assert multi_sig.s == (single.s,)


def test_msign_t1_retry_behavior_matches_ecdsa():
    # k = 7 hits r = 0 on TEST17; both sides must consume two nonces
    config = MultiCurveConfig((TEST17,))
    kp = toy_keypair(config, [5])
    multi_src = ListNonceSource([7, 3])
    single_src = ListNonceSource([7, 3])
    multi_sig = msign(b"retry", kp, multi_src)
    single = sign(b"retry", Keypair(TEST17, 5, kp.q[0]), single_src)
    assert (multi_sig.r, multi_sig.s[0]) == (single.r, single.s)
    assert multi_src.consumed == single_src.consumed == 2


def test_mverify_t1_agrees_with_ecdsa_verify_everywhere():
    config = MultiCurveConfig((TEST17,))
    kp = toy_keypair(config, [11])
    message = b"degenerate"
    good = msign(message, kp, ListNonceSource([5]))
    probes = [
        (message, good.r, good.s[0]),
        (b"tampered", good.r, good.s[0]),
        (message, 0, good.s[0]),
        (message, TEST17.n, good.s[0]),
        (message, good.r, 0),
        (message, good.r, TEST17.n - good.s[0]),
        (message, (good.r + 1) % TEST17.n, good.s[0]),
    ]
    for msg, r, s in probes:
        as_multi = mverify(msg, MultiSignature(r, (s,)), kp.q, config)
        as_single = verify(msg, EcdsaSignature(r, s), kp.q[0], TEST17)
        assert as_multi == as_single, (msg, r, s)


def test_msign_matches_straight_line_oracle(toy_pair_config):
    toys = [toy_tuple(TEST17), toy_tuple(TOY23)]
    for d1, d2, k1, k2, message in [
        (4, 11, 8, 8, b"mv-a"),
        (12, 16, 5, 9, b"mv-b"),
        (13, 20, 11, 11, b"mv-c"),
    ]:
        want_r, want_ss = msign_oracle(message, [d1, d2], [k1, k2], toys)
        kp = toy_keypair(toy_pair_config, [d1, d2])
        got = msign(message, kp, ListNonceSource([k1, k2]))
        assert got.r == want_r
        assert got.s == tuple(want_ss)


def test_msign_r_stays_in_declared_interval(toy_pair_config):
    rng = SeededNonceSource(17)
    rnd = random.Random(17)
    kp = mkeygen(toy_pair_config, rng)
    t = toy_pair_config.t
    upper = toy_pair_config.order_sum - t
    for _ in range(200):
        sig = msign(rnd.randbytes(16), kp, rng)
        assert t <= sig.r <= upper


def test_msign_roundtrip_mixed_toys():
    config = MultiCurveConfig((TEST17, TOY23, TOY43))
    rng = SeededNonceSource(23)
    rnd = random.Random(23)
    kp = mkeygen(config, rng)
    for _ in range(50):
        message = rnd.randbytes(32)
        sig = msign(message, kp, rng)
        assert mverify(message, sig, kp.q, config)


def test_msign_roundtrip_duplicate_curves():
    config = MultiCurveConfig((TEST17, TEST17))
    rng = SeededNonceSource(29)
    kp = mkeygen(config, rng)
    assert kp.d[0] != kp.d[1]  # independent keys per index
    sig = msign(b"dup", kp, rng)
    assert mverify(b"dup", sig, kp.q, config)


def test_msign_roundtrip_builtin_pair():
    registry = default_registry()
    config = MultiCurveConfig((registry.get("secp256k1"), registry.get("p256")))
    rng = SeededNonceSource(31)
    kp = mkeygen(config, rng)
    sig = msign(b"builtin pair", kp, rng)
    assert mverify(b"builtin pair", sig, kp.q, config)
    assert not mverify(b"builtin pair!", sig, kp.q, config)


def test_full_restart_on_r_divisible_by_order(toy_pair_config):
    kp = toy_keypair(toy_pair_config, [4, 11])
    src = ListNonceSource(RESTART_NONCES)
    trace = Trace()
    message = b"restart"
    sig = msign(message, kp, src, trace)
    assert trace.restarts == 1
    assert src.consumed == 4  # both curves drew fresh nonces
    assert sig == msign(message, kp, ListNonceSource(CLEAN_NONCES))
    assert mverify(message, sig, kp.q, toy_pair_config)


def test_restart_exhaustion_raises(toy_pair_config):
    kp = toy_keypair(toy_pair_config, [4, 11])
    with pytest.raises(NonceExhaustedError):
        msign(b"restart", kp, ListNonceSource([1, 2, 1]))  # one nonce short


def test_mverify_rejects_out_of_range_r(toy_pair_config):
    kp = toy_keypair(toy_pair_config, [4, 11])
    sig = msign(b"bounds", kp, ListNonceSource(CLEAN_NONCES))
    t = toy_pair_config.t
    upper = toy_pair_config.order_sum - t
    assert not mverify(b"bounds", MultiSignature(t - 1, sig.s), kp.q, toy_pair_config)
    assert not mverify(b"bounds", MultiSignature(upper + 1, sig.s), kp.q, toy_pair_config)


def test_mverify_rejects_out_of_range_s(toy_pair_config):
    kp = toy_keypair(toy_pair_config, [4, 11])
    sig = msign(b"bounds", kp, ListNonceSource(CLEAN_NONCES))
    bad_low = (0, sig.s[1])
    bad_high = (sig.s[0], TOY23.n)
    for bad in (bad_low, bad_high):
        assert not mverify(b"bounds", MultiSignature(sig.r, bad), kp.q, toy_pair_config)


def test_mverify_rejects_swapped_components(toy_pair_config):
    kp = toy_keypair(toy_pair_config, [4, 11])
    message = b"swap 0"
    sig = msign(message, kp, ListNonceSource([8, 8]))
    swapped = MultiSignature(sig.r, (sig.s[1], sig.s[0]))
    assert not mverify(message, swapped, kp.q, toy_pair_config)


def test_mverify_rejects_wrong_arity(toy_pair_config):
    kp = toy_keypair(toy_pair_config, [4, 11])
    sig = msign(b"arity", kp, ListNonceSource(CLEAN_NONCES))
    assert not mverify(b"arity", MultiSignature(sig.r, (sig.s[0],)), kp.q, toy_pair_config)


def test_mverify_agrees_with_oracle(toy_pair_config):
    toys = [toy_tuple(TEST17), toy_tuple(TOY23)]
    kp = toy_keypair(toy_pair_config, [4, 11])
    message = b"oracle-check 0"
    sig = msign(message, kp, ListNonceSource([8, 8]))
    publics = [(q.x, q.y) for q in kp.q]
    want, _points = mverify_oracle(message, sig.r, list(sig.s), publics, toys)
    assert mverify(message, sig, kp.q, toy_pair_config) == want is True


def test_validity_identity_instrumented(toy_pair_config):
    # verification recovers exactly the signer's nonce points and residues
    kp = toy_keypair(toy_pair_config, [12, 16])
    message = b"identity 0"
    sign_trace, verify_trace = Trace(), Trace()
    sig = msign(message, kp, ListNonceSource([5, 9]), sign_trace)
    assert mverify(message, sig, kp.q, toy_pair_config, verify_trace)
    assert verify_trace.points == sign_trace.points
    assert verify_trace.r_values == sign_trace.r_values
    assert sum(verify_trace.r_values) == sig.r


def test_t_ecdsa_degenerate_single_curve():
    config = MultiCurveConfig((TEST17,))
    kp = toy_keypair(config, [11])
    sig = t_ecdsa_sign(b"baseline 0", kp, ListNonceSource([5]))
    assert sig.t == 1
    single = sign(b"baseline 0", Keypair(TEST17, 11, kp.q[0]), ListNonceSource([5]))
    assert sig.pairs[0] == single


def test_t_ecdsa_components_verify_individually(toy_pair_config):
    kp = toy_keypair(toy_pair_config, [4, 11])
    message = b"per-curve 0"
    sig = t_ecdsa_sign(message, kp, ListNonceSource([8, 8]))
    for c, pair, q in zip(toy_pair_config.curves, sig.pairs, kp.q):
        assert verify(message, pair, q, c)
    assert t_ecdsa_verify(message, sig, kp.q, toy_pair_config)


def test_t_ecdsa_zeroed_s_refused(toy_pair_config):
    kp = toy_keypair(toy_pair_config, [4, 11])
    message = b"zeroed 0"
    sig = t_ecdsa_sign(message, kp, ListNonceSource([8, 8]))
    broken = TEcdsaSignature(
        (sig.pairs[0], EcdsaSignature(sig.pairs[1].r, 0))
    )
    assert not t_ecdsa_verify(message, broken, kp.q, toy_pair_config)


def test_t_ecdsa_permuted_components_refused(toy_pair_config):
    kp = toy_keypair(toy_pair_config, [4, 11])
    message = b"permuted 0"
    sig = t_ecdsa_sign(message, kp, ListNonceSource([8, 8]))
    permuted = TEcdsaSignature((sig.pairs[1], sig.pairs[0]))
    assert not t_ecdsa_verify(message, permuted, kp.q, toy_pair_config)


def test_t_ecdsa_total_payload_is_twice_sum_of_order_bits(toy_pair_config):
    kp = toy_keypair(toy_pair_config, [4, 11])
    sig = t_ecdsa_sign(b"length 1", kp, ListNonceSource([8, 8]))
    bound = 2 * sum(c.n.bit_length() for c in toy_pair_config.curves)
    total = sum(p.r.bit_length() + p.s.bit_length() for p in sig.pairs)
    assert total <= bound
