"""Pure-Python backend for the distance-scan kernels.

Words are compared through machine-word XOR: a length-n word packs into
an int, and the XOR of two packed words has a zero byte exactly at the
agreeing positions, so a Hamming distance costs one XOR plus a byte
count instead of a Python-level loop.
"""

from __future__ import annotations

__all__ = ["min_distance", "min_distance_batch", "coset_min_distances"]


def _packed_table(table: bytes, n: int) -> list[int]:
    return [int.from_bytes(table[off : off + n], "big") for off in range(0, len(table), n)]


def min_distance(word: bytes, table: bytes, n: int) -> int:
    """Minimum Hamming distance from one word to every row of the table."""
    return min_distance_batch(word, table, n)[0]


def min_distance_batch(words: bytes, table: bytes, n: int) -> bytearray:
    """Minimum distances of each packed word to the table, one byte each."""
    tints = _packed_table(table, n)
    out = bytearray(len(words) // n)
    for wi in range(len(out)):
        w = int.from_bytes(words[wi * n : (wi + 1) * n], "big")
        best = n
        for t in tints:
            d = n - (w ^ t).to_bytes(n, "big").count(0)
            if d < best:
                best = d
                if best == 0:
                    break
        out[wi] = best
    return out


def coset_min_distances(
    q: int, n: int, m: int, add: bytes, basis: bytes, table: bytes
) -> bytearray:
    """Distances to the table for every word sum_j c_j * basis_j.

    The m coefficients c_j range over all q**m encoded values in odometer
    order (digit 0 fastest), i.e. result index sum_j c_j * q**j.  `add`
    is the q*q field addition table on encodings and `basis` holds the
    scaled vectors basis[(j*q + v)*n : ...] = encoding of value v times
    basis word j.  Suffix partial sums make each odometer step cost a
    single vector addition on average.
    """
    tints = _packed_table(table, n)
    total = q**m
    out = bytearray(total)
    suffix = [bytes(n) for _ in range(m + 1)]
    digits = [0] * m
    for idx in range(total):
        w = int.from_bytes(suffix[0], "big")
        best = n
        for t in tints:
            d = n - (w ^ t).to_bytes(n, "big").count(0)
            if d < best:
                best = d
                if best == 0:
                    break
        out[idx] = best
        t = 0
        while t < m and digits[t] == q - 1:
            digits[t] = 0
            t += 1
        if t == m:
            break
        digits[t] += 1
        for tt in range(t, -1, -1):
            up = suffix[tt + 1]
            off = (tt * q + digits[tt]) * n
            suffix[tt] = bytes(add[up[i] * q + basis[off + i]] for i in range(n))
    return out
