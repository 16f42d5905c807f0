"""Integer recurrence sequences U_n, V_n, G_n, H_n in Z[X].

U_0 = 1, V_0 = 0, U_{n+1} = -V_n, V_{n+1} = U_n + X V_n, so that
u**n = U_n(lam) + V_n(lam) u in R[u]. G_n = U_n + 2i V_n and
H_n(X) = (-i)**n G_n(iX), which obeys H_{n+2} = X H_{n+1} + H_n.
Indices run over all of Z; negative ones use the inverted recursions.
"""

from __future__ import annotations

import threading

from .errors import InternalInconsistency
from .field import I, GaussRat
from .poly import X, Poly, is_square_up_to_constant

_NEG_I = -I


class SequenceCache:
    """Memo of U_n, V_n, H_n, filled outward from index 0.

    All access goes through one lock, so concurrent callers see the same
    values they would see serially.
    """

    def __init__(self):
        self._lock = threading.RLock()
        self.u_polys: dict[int, Poly] = {0: Poly([1])}
        self.v_polys: dict[int, Poly] = {0: Poly()}
        self.h_polys: dict[int, Poly] = {0: Poly([1]), 1: Poly([2])}

    def uv(self, n: int) -> tuple[Poly, Poly]:
        with self._lock:
            if n not in self.u_polys:
                self._extend_uv(n)
            return self.u_polys[n], self.v_polys[n]

    def _extend_uv(self, n: int) -> None:
        U, V = self.u_polys, self.v_polys
        if n > 0:
            k = max(i for i in U if i >= 0)
            while k < n:
                U[k + 1] = -V[k]
                V[k + 1] = U[k] + X * V[k]
                self._check_uv(k)
                k += 1
        else:
            k = min(i for i in U if i <= 0)
            while k > n:
                # invert: V_{k-1} = -U_k, U_{k-1} = V_k - X V_{k-1}
                V[k - 1] = -U[k]
                U[k - 1] = V[k] + X * U[k]
                self._check_uv(k)
                k -= 1

    def _check_uv(self, k: int) -> None:
        U, V = self.u_polys, self.v_polys
        if k - 1 in U and k + 1 in U:
            if U[k + 1] != X * U[k] - U[k - 1] or V[k + 1] != X * V[k] - V[k - 1]:
                raise InternalInconsistency(f"U/V recurrence broken at index {k}")

    def h_recursive(self, n: int) -> Poly:
        with self._lock:
            H = self.h_polys
            if n not in H:
                if n > 1:
                    k = max(H)
                    while k < n:
                        H[k + 1] = X * H[k] + H[k - 1]
                        k += 1
                else:
                    k = min(H)
                    while k > n:
                        H[k - 1] = H[k + 1] - X * H[k]
                        k -= 1
            return H[n]

    def clear(self) -> None:
        with self._lock:
            self.__init__()


_cache = SequenceCache()


def seq_UV(n: int, cache: SequenceCache | None = None) -> tuple[Poly, Poly]:
    return (cache or _cache).uv(n)


def seq_G(n: int, cache: SequenceCache | None = None) -> tuple[Poly, Poly]:
    """``(G_n, conj G_n) = (U_n + 2i V_n, U_n - 2i V_n)``."""
    u, v = seq_UV(n, cache)
    two_i_v = v * GaussRat(0, 2)
    return u + two_i_v, u - two_i_v


def seq_H(n: int, cache: SequenceCache | None = None) -> Poly:
    """H_n from its own recursion, cross-checked against (-i)^n G_n(iX)."""
    h = (cache or _cache).h_recursive(n)
    g, _ = seq_G(n, cache)
    via_g = g.substitute_linear(I) * (_NEG_I**n)
    if via_g != h:
        raise InternalInconsistency(f"H_{n} disagrees with (-i)^n G_n(iX)")
    return h


def fib(l: int) -> int:
    """Fibonacci number with F_0 = 0, F_1 = 1."""
    if l < 0:
        raise ValueError("fib is defined here for nonnegative indices only")
    a, b = 0, 1
    for _ in range(l):
        a, b = b, a + b
    return a


def classify_square_exponents(N: int, cache: SequenceCache | None = None) -> list[int]:
    """Indices m in [-N, N] for which H_m is a constant times a square."""
    if N < 1:
        raise ValueError("N must be a positive integer")
    return [m for m in range(-N, N + 1) if is_square_up_to_constant(seq_H(m, cache)) is not None]
