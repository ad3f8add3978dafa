"""Finite-dimensional Hilbert module model.

The algebra is A = M_n(C) and the module is V = M_{m x n}(C) with the
A-valued inner product <x, y> = x* y and right action x . a (matrix product).
With this choice <xa, y> = a* <x, y>, which is the rule the inequalities
below are proved with.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from numbers import Number

import numpy as np

from .errors import ShapeMismatch
from .linalg import as_cmatrix, operator_norm


@dataclass(frozen=True)
class ModuleShape:
    n: int  # algebra size, A = M_n
    m: int  # module rows, V = M_{m x n}

    def __post_init__(self):
        if int(self.n) < 1 or int(self.m) < 1:
            raise ValueError(f"n and m must be >= 1, got n={self.n}, m={self.m}")

    def __str__(self) -> str:
        return f"(n={self.n}, m={self.m})"


class _Element:
    """Shared vector-space arithmetic for algebra and module elements."""

    __slots__ = ("shape", "mat")

    def __init__(self, shape: ModuleShape, mat):
        mat = as_cmatrix(mat)
        expected = self._expected(shape)
        if mat.shape != expected:
            raise ShapeMismatch(f"{type(self).__name__} for {shape} must be {expected}, got {mat.shape}")
        mat.setflags(write=False)
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "mat", mat)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @staticmethod
    def _expected(shape):
        raise NotImplementedError

    def _check(self, other):
        if type(other) is not type(self):
            return NotImplemented
        if other.shape != self.shape:
            raise ShapeMismatch(f"shapes differ: {self.shape} vs {other.shape}")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return type(self)(self.shape, self.mat + other.mat)

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return type(self)(self.shape, self.mat - other.mat)

    def __neg__(self):
        return type(self)(self.shape, -self.mat)

    def __rmul__(self, alpha):
        if not isinstance(alpha, Number):
            return NotImplemented
        return type(self)(self.shape, complex(alpha) * self.mat)

    def __repr__(self):
        return f"{type(self).__name__}({self.shape}, {self.mat.tolist()!r})"


class AlgebraElement(_Element):
    """Element a of A = M_n(C)."""

    @staticmethod
    def _expected(shape):
        return (shape.n, shape.n)

    def adjoint(self) -> "AlgebraElement":
        return AlgebraElement(self.shape, self.mat.conj().T)

    @classmethod
    def identity(cls, shape: ModuleShape) -> "AlgebraElement":
        return cls(shape, np.eye(shape.n))


class ModuleElement(_Element):
    """Element x of V = M_{m x n}(C)."""

    @staticmethod
    def _expected(shape):
        return (shape.m, shape.n)

    @classmethod
    def zeros(cls, shape: ModuleShape) -> "ModuleElement":
        return cls(shape, np.zeros((shape.m, shape.n)))


def _same_shape(x, y):
    if x.shape != y.shape:
        raise ShapeMismatch(f"shapes differ: {x.shape} vs {y.shape}")


def inner_product(x: ModuleElement, y: ModuleElement) -> AlgebraElement:
    _same_shape(x, y)
    return AlgebraElement(x.shape, x.mat.conj().T @ y.mat)


def module_action(x: ModuleElement, a: AlgebraElement) -> ModuleElement:
    if x.shape.n != a.shape.n:
        raise ShapeMismatch(f"algebra sizes differ: {x.shape.n} vs {a.shape.n}")
    return ModuleElement(x.shape, x.mat @ a.mat)


def module_norm(x: ModuleElement) -> float:
    """||x|| = ||<x, x>||^(1/2)."""
    return math.sqrt(operator_norm(inner_product(x, x).mat))


def theta(x: ModuleElement, y: ModuleElement) -> np.ndarray:
    """The m x m matrix of z -> x <y, z>, i.e. x y*."""
    _same_shape(x, y)
    return x.mat @ y.mat.conj().T
