"""The linking algebra of V as (n+m) x (n+m) block matrices.

Layout::

    [[ a  (n x n),  l  (n x m) ],
     [ r  (m x n),  k  (m x m) ]]

T_a sits in the upper-left corner, r_x = x in the lower-left corner,
l_y = y* in the upper-right corner and theta_{x,y} = x y* in the lower-right.
The C*-norm is the operator norm of the assembled matrix.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .errors import NotUnitModulus, ShapeMismatch
from .linalg import as_cmatrix, operator_norm
from .module import (
    AlgebraElement,
    ModuleElement,
    ModuleShape,
    inner_product,
    module_action,
    theta,
)

UNIT_TOL = 1e-12
PRODUCT_TOL = 1e-11


@dataclass(frozen=True, eq=False)
class LinkingElement:
    shape: ModuleShape
    block_a: np.ndarray
    block_l: np.ndarray
    block_r: np.ndarray
    block_k: np.ndarray

    def __post_init__(self):
        n, m = self.shape.n, self.shape.m
        expected = {"block_a": (n, n), "block_l": (n, m), "block_r": (m, n), "block_k": (m, m)}
        for name, dims in expected.items():
            block = as_cmatrix(getattr(self, name))
            if block.shape != dims:
                raise ShapeMismatch(f"{name} must be {dims} for {self.shape}, got {block.shape}")
            block.setflags(write=False)
            object.__setattr__(self, name, block)

    @classmethod
    def zeros(cls, shape: ModuleShape) -> "LinkingElement":
        n, m = shape.n, shape.m
        return cls(shape, np.zeros((n, n)), np.zeros((n, m)), np.zeros((m, n)), np.zeros((m, m)))

    @classmethod
    def from_matrix(cls, shape: ModuleShape, M) -> "LinkingElement":
        M = as_cmatrix(M)
        n, m = shape.n, shape.m
        if M.shape != (n + m, n + m):
            raise ShapeMismatch(f"expected {(n + m, n + m)}, got {M.shape}")
        return cls(shape, M[:n, :n], M[:n, n:], M[n:, :n], M[n:, n:])

    def _other(self, other):
        if not isinstance(other, LinkingElement):
            return None
        if other.shape != self.shape:
            raise ShapeMismatch(f"shapes differ: {self.shape} vs {other.shape}")
        return other

    def __add__(self, other):
        if self._other(other) is None:
            return NotImplemented
        return LinkingElement(
            self.shape,
            self.block_a + other.block_a,
            self.block_l + other.block_l,
            self.block_r + other.block_r,
            self.block_k + other.block_k,
        )

    def __rmul__(self, alpha):
        alpha = complex(alpha)
        return LinkingElement(
            self.shape, alpha * self.block_a, alpha * self.block_l, alpha * self.block_r, alpha * self.block_k
        )

    def __matmul__(self, other):
        if self._other(other) is None:
            return NotImplemented
        return LinkingElement.from_matrix(self.shape, assemble(self) @ assemble(other))


def assemble(e: LinkingElement) -> np.ndarray:
    return np.block([[e.block_a, e.block_l], [e.block_r, e.block_k]])


def adjoint_linking(e: LinkingElement) -> LinkingElement:
    return LinkingElement(e.shape, e.block_a.conj().T, e.block_r.conj().T, e.block_l.conj().T, e.block_k.conj().T)


def linking_norm(e: LinkingElement) -> float:
    return operator_norm(assemble(e))


def embed_T(a: AlgebraElement) -> LinkingElement:
    z = LinkingElement.zeros(a.shape)
    return LinkingElement(a.shape, a.mat, z.block_l, z.block_r, z.block_k)


def embed_r(x: ModuleElement) -> LinkingElement:
    z = LinkingElement.zeros(x.shape)
    return LinkingElement(x.shape, z.block_a, z.block_l, x.mat, z.block_k)


def embed_l(y: ModuleElement) -> LinkingElement:
    z = LinkingElement.zeros(y.shape)
    return LinkingElement(y.shape, z.block_a, y.mat.conj().T, z.block_r, z.block_k)


def embed_theta(x: ModuleElement, y: ModuleElement) -> LinkingElement:
    k = theta(x, y)
    z = LinkingElement.zeros(x.shape)
    return LinkingElement(x.shape, z.block_a, z.block_l, z.block_r, k)


def check_unit(lam: complex) -> complex:
    lam = complex(lam)
    if abs(abs(lam) - 1.0) > UNIT_TOL:
        raise NotUnitModulus(f"|lambda| = {abs(lam)!r} is not 1")
    return lam


def omega_element(lam: complex, x: ModuleElement) -> LinkingElement:
    """[[0, conj(lam) l_x], [lam r_x, 0]]; self-adjoint for every unit lam."""
    lam = check_unit(lam)
    z = LinkingElement.zeros(x.shape)
    return LinkingElement(x.shape, z.block_a, lam.conjugate() * x.mat.conj().T, lam * x.mat, z.block_k)


def omega_element_stack(thetas, x: ModuleElement) -> np.ndarray:
    """Assembled omega_element(e^{i theta}, x) for every theta, stacked on axis 0."""
    lam = np.exp(1j * np.asarray(thetas, dtype=float))[:, None, None]
    lower = assemble(embed_r(x))
    upper = assemble(embed_l(x))
    return lam * lower + lam.conj() * upper


def sign_variant(x: ModuleElement, sign: int) -> LinkingElement:
    """[[0, sign * l_x], [r_x, 0]]."""
    z = LinkingElement.zeros(x.shape)
    return LinkingElement(x.shape, z.block_a, sign * x.mat.conj().T, x.mat, z.block_k)


def block_diag_corner(x: ModuleElement, y: ModuleElement) -> LinkingElement:
    """[[T_<x,y>, 0], [0, theta_{x,y}]], the product of the two omega elements."""
    return embed_T(inner_product(x, y)) + embed_theta(x, y)


def product_identity_errors(x: ModuleElement, y: ModuleElement, a: AlgebraElement) -> dict[str, float]:
    """Max entrywise error of each of the four corner product identities."""
    if x.shape != y.shape or x.shape.n != a.shape.n:
        raise ShapeMismatch("x, y and a must share a module shape")
    R = lambda v: assemble(embed_r(v))  # noqa: E731
    L = lambda v: assemble(embed_l(v))  # noqa: E731
    T = lambda b: assemble(embed_T(b))  # noqa: E731
    xa = module_action(x, a)
    pairs = {
        "l_x r_y = T_<x,y>": (L(x) @ R(y), T(inner_product(x, y))),
        "r_x l_y = theta_x,y": (R(x) @ L(y), assemble(embed_theta(x, y))),
        "r_xa = r_x T_a": (R(xa), R(x) @ T(a)),
        "l_xa = T_a* l_x": (L(xa), T(a.adjoint()) @ L(x)),
    }
    return {name: float(np.max(np.abs(lhs - rhs))) for name, (lhs, rhs) in pairs.items()}


def check_product_identities(x: ModuleElement, y: ModuleElement, a: AlgebraElement, tol: float = PRODUCT_TOL) -> bool:
    return all(err <= tol for err in product_identity_errors(x, y, a).values())


def unit(theta_: float) -> complex:
    return cmath.exp(1j * theta_)
