"""Unitary coins, their row split, channel checks and Jones relations.

Algebraic relations are stated in terms of the raw matrix entries u_ij,
with any overall normalisation absorbed into the entries: for a 2x2 coin
split into P (row one) and Q (row two),

    P^2 = u11 P,  Q^2 = u22 Q,  PQP = u12 u21 P,  QPQ = u12 u21 Q,

where juxtaposition is the ordinary matrix product.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .graphs import KrausEntry

MATRIX_TOL = 1e-12


def assert_unitary(u: np.ndarray, tol: float = MATRIX_TOL) -> np.ndarray:
    u = np.asarray(u, dtype=complex)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {u.shape}")
    defect = np.max(np.abs(u @ u.conj().T - np.eye(u.shape[0])))
    if defect > tol:
        raise ValueError(f"matrix is not unitary (defect {defect:.3e})")
    return u


def hadamard() -> np.ndarray:
    return np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)


def coin_from_angles(theta: float, phi1: float = 0.0, phi2: float = 0.0) -> np.ndarray:
    """Three-angle family of 2x2 coins; theta = pi/4, phi = 0 is Hadamard."""
    c, s = np.cos(theta), np.sin(theta)
    return np.array(
        [
            [c, np.exp(1j * phi1) * s],
            [np.exp(1j * phi2) * s, -np.exp(1j * (phi1 + phi2)) * c],
        ]
    )


def random_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed unitary via QR with phase-fixed diagonal."""
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def row_split(u: np.ndarray, tol: float = MATRIX_TOL) -> list[KrausEntry]:
    """Split a unitary into one matrix per row: Q_h keeps row h, zeroes the rest.

    The split partitions entries, so sum_h Q_h = U exactly, and pointwise
    |(Q_h)_ij|^2 reproduces the row decomposition of the induced
    bistochastic matrix B_ij = |U_ij|^2.
    """
    u = assert_unitary(u, tol)
    n = u.shape[0]
    entries = []
    for h in range(n):
        rows = tuple(
            tuple(complex(u[i, j]) if i == h else 0j for j in range(n)) for i in range(n)
        )
        entries.append(KrausEntry(rows, h))
    return entries


@dataclass(frozen=True)
class CoinPair:
    """Row split of a 2x2 unitary: P is row one, Q is row two."""

    P: np.ndarray
    Q: np.ndarray

    def __post_init__(self):
        for name, m in (("P", self.P), ("Q", self.Q)):
            m = np.asarray(m, dtype=complex)
            if m.shape != (2, 2):
                raise ValueError(f"{name} must be 2x2")
            object.__setattr__(self, name, m)
            m.setflags(write=False)
        if np.any(self.P[1] != 0) or np.any(self.Q[0] != 0):
            raise ValueError("P must have a zero second row and Q a zero first row")

    @classmethod
    def from_unitary(cls, u: np.ndarray, tol: float = MATRIX_TOL) -> "CoinPair":
        u = assert_unitary(u, tol)
        if u.shape != (2, 2):
            raise ValueError("coin unitaries are 2x2")
        parts = row_split(u, tol)
        return cls(parts[0].dense(), parts[1].dense())

    @property
    def unitary(self) -> np.ndarray:
        return self.P + self.Q


def hadamard_coin() -> CoinPair:
    return CoinPair.from_unitary(hadamard())


@dataclass(frozen=True)
class ChannelReport:
    right_identity: bool
    left_identity: bool
    orthogonal: bool
    max_deviation: float

    @property
    def ok(self) -> bool:
        return self.right_identity and self.left_identity and self.orthogonal

    def __bool__(self) -> bool:
        return self.ok


def verify_channel(entries, tol: float = MATRIX_TOL) -> ChannelReport:
    """Kraus-family checks: sum QQ+ = I, sum Q+Q = I, and Q_l Q_h+ = 0 for l != h."""
    mats = [e.dense() if isinstance(e, KrausEntry) else np.asarray(e, dtype=complex) for e in entries]
    if not mats:
        raise ValueError("need at least one Kraus operator")
    n = mats[0].shape[0]
    eye = np.eye(n)
    dev_right = np.max(np.abs(sum(m @ m.conj().T for m in mats) - eye))
    dev_left = np.max(np.abs(sum(m.conj().T @ m for m in mats) - eye))
    dev_orth = 0.0
    for l, ml in enumerate(mats):
        for h, mh in enumerate(mats):
            if l != h:
                dev_orth = max(dev_orth, float(np.max(np.abs(ml @ mh.conj().T))))
    return ChannelReport(
        right_identity=bool(dev_right <= tol),
        left_identity=bool(dev_left <= tol),
        orthogonal=bool(dev_orth <= tol),
        max_deviation=float(max(dev_right, dev_left, dev_orth)),
    )


@dataclass(frozen=True)
class PQRelationsReport:
    ok: bool
    max_deviation: float
    deviations: dict[str, float]

    def __bool__(self) -> bool:
        return self.ok


def verify_pq_relations(u: np.ndarray, tol: float = MATRIX_TOL) -> PQRelationsReport:
    """Check P^2 = u11 P, Q^2 = u22 Q, PQP = u12 u21 P, QPQ = u12 u21 Q."""
    coin = CoinPair.from_unitary(u, tol)
    p, q = coin.P, coin.Q
    u = coin.unitary
    cross = u[0, 1] * u[1, 0]
    deviations = {
        "P^2 = u11 P": float(np.max(np.abs(p @ p - u[0, 0] * p))),
        "Q^2 = u22 Q": float(np.max(np.abs(q @ q - u[1, 1] * q))),
        "PQP = u12 u21 P": float(np.max(np.abs(p @ q @ p - cross * p))),
        "QPQ = u12 u21 Q": float(np.max(np.abs(q @ p @ q - cross * q))),
    }
    worst = max(deviations.values())
    return PQRelationsReport(ok=bool(worst <= tol), max_deviation=worst, deviations=deviations)


def jones_generators(
    u: np.ndarray, tol: float = MATRIX_TOL
) -> tuple[np.ndarray, np.ndarray, complex]:
    """Normalised idempotents e1 = P/u11, e2 = Q/u22 and the Jones parameter.

    lambda = u12 u21 / (u11 u22); the relations e1^2 = e1, e2^2 = e2,
    e1 e2 e1 = lambda e1 and e2 e1 e2 = lambda e2 are verified within tol.
    """
    coin = CoinPair.from_unitary(u, tol)
    w = coin.unitary
    if w[0, 0] == 0 or w[1, 1] == 0:
        raise ValueError("Jones generators undefined")
    e1 = coin.P / w[0, 0]
    e2 = coin.Q / w[1, 1]
    lam = complex(w[0, 1] * w[1, 0] / (w[0, 0] * w[1, 1]))
    checks = (
        np.max(np.abs(e1 @ e1 - e1)),
        np.max(np.abs(e2 @ e2 - e2)),
        np.max(np.abs(e1 @ e2 @ e1 - lam * e1)),
        np.max(np.abs(e2 @ e1 @ e2 - lam * e2)),
    )
    worst = float(max(checks))
    if worst > tol:
        raise ValueError(f"Jones relations violated (deviation {worst:.3e})")
    return e1, e2, lam


def coin_from_json(obj) -> np.ndarray:
    """Parse {re: [[..]], im: [[..]]} into a complex matrix."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    re = np.asarray(obj["re"], dtype=float)
    im = np.asarray(obj["im"], dtype=float)
    if re.shape != im.shape:
        raise ValueError("re and im blocks must have the same shape")
    return re + 1j * im
