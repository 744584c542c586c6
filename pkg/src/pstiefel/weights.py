"""Weight tuples and their complete homogeneous sums.

A circle acting on a complex Stiefel frame with integer weights
(l_1, ..., l_k) acts freely exactly when the weights are primitive
(gcd 1), so WeightTuple enforces that. The quantity driving everything
downstream is the complete homogeneous sum

    h_r(l_1, ..., l_k) = sum over i_1 + ... + i_k = r, i_j >= 0
                         of l_1^{i_1} * ... * l_k^{i_k},

computed by the one-weight-at-a-time recurrence. A direct enumeration
over compositions is kept as an independent oracle for small ranges.
The weighted line bundle sums over complex projective space have total
Chern class prod_j (1 + l_j x), and the complement's Chern series is its
inverse, whose x^r coefficient is (-1)^r h_r.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .ring import gcd_all
from .series import TruncatedSeries

BRUTEFORCE_MAX_R = 12
BRUTEFORCE_MAX_K = 6


@dataclass(frozen=True)
class WeightTuple:
    """A nonempty primitive tuple of integer circle weights."""

    weights: tuple[int, ...]

    def __init__(self, weights: Iterable[int]):
        ws = tuple(int(w) for w in weights)
        if not ws:
            raise ValueError("empty weight tuple")
        g = gcd_all(ws)
        if g != 1:
            raise ValueError(f"weights {ws} not primitive: gcd is {g}")
        object.__setattr__(self, "weights", ws)

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self) -> Iterator[int]:
        return iter(self.weights)

    def __getitem__(self, i: int) -> int:
        return self.weights[i]


def homogeneous_sum(ell: WeightTuple, r: int) -> int:
    """Complete homogeneous sum h_r of the weights, exact over Z.

    Adding one weight l at a time: h_r(..., l) = h_r(...) + l*h_{r-1}(..., l),
    so an in-place ascending sweep over r does the whole table.
    """
    if r < 0:
        raise ValueError(f"negative degree {r}")
    hs = [1] + [0] * r
    for w in ell.weights:
        for i in range(1, r + 1):
            hs[i] += w * hs[i - 1]
    return hs[r]


def homogeneous_sum_bruteforce(ell: WeightTuple, r: int) -> int:
    """Oracle for homogeneous_sum: explicit sum over all compositions.

    Exponential in its arguments, so guarded to r <= 12 and k <= 6.
    """
    if r < 0:
        raise ValueError(f"negative degree {r}")
    k = len(ell)
    if r > BRUTEFORCE_MAX_R or k > BRUTEFORCE_MAX_K:
        raise ValueError(
            f"oracle range exceeded (r <= {BRUTEFORCE_MAX_R}, "
            f"k <= {BRUTEFORCE_MAX_K}); got r={r}, k={k}")

    def compositions(total: int, parts: int):
        if parts == 1:
            yield (total,)
            return
        for head in range(total + 1):
            for rest in compositions(total - head, parts - 1):
                yield (head,) + rest

    total = 0
    for comp in compositions(r, k):
        term = 1
        for w, e in zip(ell.weights, comp):
            term *= w ** e
        total += term
    return total


def homogeneous_sum_pair(l1: int, l2: int, d: int) -> int:
    """Closed form for two weights: (l1^{d+1} - l2^{d+1}) / (l1 - l2).

    The division is exact; at l1 = l2 the limit is (d+1) * l1^d.
    Weights need not be primitive here.
    """
    if d < 0:
        raise ValueError(f"negative degree {d}")
    if l1 == l2:
        return (d + 1) * l1 ** d
    return (l1 ** (d + 1) - l2 ** (d + 1)) // (l1 - l2)


def total_chern(ell: WeightTuple, truncation: int) -> TruncatedSeries:
    """Total Chern series prod_j (1 + l_j x), exact over Z."""
    out = TruncatedSeries.one(truncation)
    for w in ell.weights:
        out = out.mul(TruncatedSeries([1, w], truncation))
    return out


def complement_chern(ell: WeightTuple, truncation: int) -> TruncatedSeries:
    """Chern series of the complementary bundle: the inverse of total_chern.

    Its x^r coefficient is (-1)^r * h_r(ell).
    """
    return total_chern(ell, truncation).inv()
