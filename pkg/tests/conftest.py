import numpy as np
import pytest

from switchcap.pauli import PauliChannel, anticommutes, pauli_product


def random_channel(rng: np.random.Generator) -> PauliChannel:
    return PauliChannel(rng.dirichlet(np.ones(4)))


def random_channel_pairs(seed: int, n: int) -> list[tuple[PauliChannel, PauliChannel]]:
    rng = np.random.default_rng(seed)
    return [(random_channel(rng), random_channel(rng)) for _ in range(n)]


def random_density_matrix(rng: np.random.Generator, n_qubits: int) -> np.ndarray:
    """Random mixed state: an average of a few Haar-ish pure states."""
    dim = 2**n_qubits
    rho = np.zeros((dim, dim), dtype=np.complex128)
    weights = rng.dirichlet(np.ones(3))
    for w in weights:
        v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
        v /= np.linalg.norm(v)
        rho += w * np.outer(v, v.conj())
    return rho


def enumerate_switch_weights(d: PauliChannel, e: PauliChannel):
    """Second oracle for the switch decomposition: walk all 16 Kraus pairs.

    Classifies each pair by whether its two Paulis anti-commute and by the
    index of their product, instead of using any closed-form coefficients.
    """
    a0 = 0.0
    a_plus = np.zeros(3)
    a_minus = np.zeros(3)
    for i in range(4):
        for j in range(4):
            w = float(d.probs[i] * e.probs[j])
            idx = pauli_product(j, i).index
            if anticommutes(i, j):
                a_minus[idx - 1] += w
            elif idx == 0:
                a0 += w
            else:
                a_plus[idx - 1] += w
    return a0, a_plus, a_minus


def enumerate_classical_weights(d: PauliChannel, e: PauliChannel) -> np.ndarray:
    """Second oracle for the definite-order composition via Kraus pairs."""
    probs = np.zeros(4)
    for i in range(4):
        for j in range(4):
            probs[pauli_product(j, i).index] += float(d.probs[i] * e.probs[j])
    return probs


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(1234)
