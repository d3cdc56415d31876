#!/usr/bin/env python3
# Independent reference for the frozen golden vectors in tests/unit/entropy_test.cpp
# and tests/acceptance. Uses pycryptodome's Keccak-256 (original padding) and
# Python big integers; shares no code with the C++ implementation.
#
#   pip install pycryptodome && python3 tests/oracles/golden.py

from Crypto.Hash import keccak

U256_MAX = (1 << 256) - 1


def k256(data: bytes) -> bytes:
    h = keccak.new(digest_bits=256)
    h.update(data)
    return h.digest()


def u(x: int) -> bytes:
    assert 0 <= x <= U256_MAX
    return x.to_bytes(32, "big")


def as_int(d: bytes) -> int:
    return int.from_bytes(d, "big")


def airdrop_seed(number, ts, difficulty, gaslimit, coinbase: bytes, sender: bytes):
    s = ts + difficulty + as_int(k256(coinbase)) // ts + gaslimit + as_int(k256(sender)) // ts + number
    if s > U256_MAX:
        return None
    return as_int(k256(u(s)))


def lottery_random(difficulty, ts, players):
    return as_int(k256(u(difficulty) + u(ts) + b"".join(players)))


def show(name, value):
    if isinstance(value, bytes):
        print(f"{name} = {value.hex()}")
    elif value is None:
        print(f"{name} = OVERFLOW")
    else:
        print(f"{name} = 0x{value:064x}  (mod 1000 = {value % 1000})")


if __name__ == "__main__":
    show("keccak('')", k256(b""))
    show("keccak(00)", k256(b"\x00"))
    show("keccak('abc')", k256(b"abc"))
    show("keccak(0..134)", k256(bytes(range(135))))
    show("keccak(0..135)", k256(bytes(range(136))))
    show("keccak(0..199)", k256(bytes(range(200))))

    C = bytes([0x11] * 20)
    S = bytes([0x22] * 20)
    show("keccak(C)", k256(C))
    show("keccak(S)", k256(S))
    show("airdrop_seed(n7,ts2,d3,g5,C,S)", airdrop_seed(7, 2, 3, 5, C, S))
    show("airdrop_seed(n7,ts2,d3,g5,C,C)", airdrop_seed(7, 2, 3, 5, C, C))
    show("airdrop_seed(n=6100000,ts=1700000000,d=2**40+17,g=30000000,C,S)",
         airdrop_seed(6100000, 1700000000, 2**40 + 17, 30000000, C, S))

    # overflow vector: ts = 1 and both digests >= 2**255
    big = [i for i in range(1, 256) if as_int(k256(bytes([i] * 20))) >> 255]
    a, b = big[0], big[1]
    print(f"overflow bytes: coinbase=0x{a:02x}*20 sender=0x{b:02x}*20")
    show("airdrop_seed(n1,ts1,d1,g1,A,B)",
         airdrop_seed(1, 1, 1, 1, bytes([a] * 20), bytes([b] * 20)))

    show("lottery_random(d3,ts2,[])", lottery_random(3, 2, []))
    players = [bytes([i] * 20) for i in range(1, 7)]
    r = lottery_random(3, 2, players)
    show("lottery_random(d3,ts2,[01..06])", r)
    print(f"  winner index mod 6 = {r % 6}")

    show("commitment(42,7)", k256(u(42) + u(7)))
    show("multi_source([1,2])", as_int(k256(u(1) + u(2))))
    secret, seed, key_id = 5, 9, 1
    value = as_int(k256(u(secret) + u(seed)))
    show("oracle value(secret5,seed9)", value)
    show("oracle proof(key1,seed9)", k256(u(key_id) + u(seed) + u(value)))
