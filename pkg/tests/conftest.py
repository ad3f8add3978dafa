import numpy as np
import pytest

from modradius.linalg import random_ginibre
from modradius.module import AlgebraElement, ModuleElement, ModuleShape

SHAPES = [(n, m) for n in range(1, 5) for m in range(1, 5)]


def module_el(n, m, mat):
    return ModuleElement(ModuleShape(n, m), np.asarray(mat, dtype=complex).reshape(m, n))


def algebra_el(n, m, mat):
    return AlgebraElement(ModuleShape(n, m), np.asarray(mat, dtype=complex).reshape(n, n))


def random_module_el(n, m, seed):
    return ModuleElement(ModuleShape(n, m), random_ginibre(m, n, seed))


def random_algebra_el(n, m, seed):
    return AlgebraElement(ModuleShape(n, m), random_ginibre(n, n, seed))


def dense_grid_radius(M, samples=4096):
    """Independent oracle: loop over a dense theta grid, one eigvalsh per angle."""
    M = np.asarray(M, dtype=complex)
    best = 0.0
    for t in np.linspace(0.0, 2.0 * np.pi, samples, endpoint=False):
        lam = np.exp(1j * t)
        H = 0.5 * (lam * M + np.conj(lam) * M.conj().T)
        best = max(best, float(np.max(np.abs(np.linalg.eigvalsh(H)))))
    return best


def field_of_values_lower(M, seed, samples=2000):
    """max |xi* M xi| over random unit vectors: a lower bound on w(M)."""
    M = np.asarray(M, dtype=complex)
    rng = np.random.default_rng(seed)
    xi = rng.standard_normal((samples, M.shape[0])) + 1j * rng.standard_normal((samples, M.shape[0]))
    xi /= np.linalg.norm(xi, axis=1, keepdims=True)
    return float(np.max(np.abs(np.einsum("ki,ij,kj->k", xi.conj(), M, xi))))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
