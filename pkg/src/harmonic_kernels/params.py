"""Kernel parameter descriptors for the three harmonic families."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParamsError

REAL_CASE = "real"
COMPLEX_CASE = "complex"
SYMPLECTIC_CASE = "symplectic"


@dataclass(frozen=True)
class KernelParams:
    """(m, k) for the real case, (n, p, q) for complex and symplectic.

    `n` is the complex dimension in the complex case and the quaternionic
    dimension in the symplectic case (where the underlying complex dimension
    is 2n).  The symplectic case is normalized to p <= q; the mirrored
    degrees are handled by conjugation symmetry.
    """

    case: str
    m: int | None = None
    k: int | None = None
    n: int | None = None
    p: int | None = None
    q: int | None = None

    def __post_init__(self):
        if self.case == REAL_CASE:
            if self.m is None or self.k is None or self.n is not None:
                raise InvalidParamsError("real case needs m and k only")
            if self.m < 3:
                raise InvalidParamsError("real case requires m >= 3")
            if self.k < 0:
                raise InvalidParamsError("degree k must be non-negative")
        elif self.case == COMPLEX_CASE:
            if None in (self.n, self.p, self.q) or self.m is not None:
                raise InvalidParamsError("complex case needs n, p, q only")
            if self.n < 2:
                raise InvalidParamsError("complex case requires n >= 2")
            if self.p < 0 or self.q < 0:
                raise InvalidParamsError("bidegrees must be non-negative")
        elif self.case == SYMPLECTIC_CASE:
            if None in (self.n, self.p, self.q) or self.m is not None:
                raise InvalidParamsError("symplectic case needs n, p, q only")
            if self.n < 1:
                raise InvalidParamsError("symplectic case requires n >= 1")
            if self.p < 0 or self.q < 0:
                raise InvalidParamsError("bidegrees must be non-negative")
            if self.p > self.q:
                raise InvalidParamsError("symplectic case is normalized to p <= q")
        else:
            raise InvalidParamsError(f"unknown case {self.case!r}")

    @property
    def complex_dim(self) -> int:
        """Length of the underlying complex vector variable."""
        if self.case == COMPLEX_CASE:
            return self.n
        if self.case == SYMPLECTIC_CASE:
            return 2 * self.n
        raise InvalidParamsError("real parameters have no complex dimension")

    def as_json(self) -> dict:
        d = {"case": self.case}
        if self.case == REAL_CASE:
            d["m"] = self.m
            d["k"] = self.k
        else:
            d["n"] = self.n
            d["p"] = self.p
            d["q"] = self.q
        return d


def real_params(m: int, k: int) -> KernelParams:
    return KernelParams(REAL_CASE, m=m, k=k)


def complex_params(n: int, p: int, q: int) -> KernelParams:
    return KernelParams(COMPLEX_CASE, n=n, p=p, q=q)


def symplectic_params(n: int, p: int, q: int) -> KernelParams:
    return KernelParams(SYMPLECTIC_CASE, n=n, p=p, q=q)
