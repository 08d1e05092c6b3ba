"""Direct numerical simulation of local-operator entanglement.

Haar unitaries are drawn by the Ginibre + QR construction with the
R-diagonal phase fix, so the distribution is exactly the Haar measure.
Entropies come from singular values of the vectorized Heisenberg operator
reshaped across the doubled-space bipartition (A, A) vs (Abar, Abar); the
D^2 x D^2 density matrix is never materialized.

Per-sample randomness derives deterministically from (master seed, sample
index), and aggregation happens in a fixed canonical order, so a given
(seed, samples) pair reproduces identical CSV bytes.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

import numpy as np

DEFAULT_MAX_QUBITS = 10
_EIG_CLAMP = 1e-14
_NORM_TOL = 1e-8

Order = int | str  # Renyi index >= 2, 1 or "vn" for von Neumann, "inf"

_PAULI = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


@dataclass(frozen=True)
class OperatorSpec:
    """A seed operator: named constructor or concrete matrix file.

    kinds:
      pauli_string  -- exact Pauli string, e.g. letters="Z1" or "X1Y3"
      random_traceless -- Haar-rotated traceless +-1 spectrum (kappa4 = -1)
      gaussian      -- GUE, traceless-projected and HS-normalized (kappa4 ~ 0)
      matrix        -- plain-text matrix file, projected and normalized
    """

    kind: str
    qubits: int
    local_dim: int = 2
    letters: str = ""
    seed: int | None = None
    path: str | None = None

    @classmethod
    def pauli(cls, qubits: int, letters: str = "Z1") -> "OperatorSpec":
        return cls("pauli_string", qubits, letters=letters)

    @classmethod
    def random_traceless(cls, qubits: int, seed: int, local_dim: int = 2) -> "OperatorSpec":
        return cls("random_traceless", qubits, local_dim=local_dim, seed=seed)

    @classmethod
    def gaussian(cls, qubits: int, seed: int, local_dim: int = 2) -> "OperatorSpec":
        return cls("gaussian", qubits, local_dim=local_dim, seed=seed)

    @classmethod
    def finite_trace(cls, qubits: int, weight: float) -> "OperatorSpec":
        """O = w 1 + sqrt(1 - w^2) Z_1, so <O> = w and <O^2> = 1."""
        return cls("finite_trace", qubits, letters=f"{weight!r}")

    @classmethod
    def matrix_file(cls, qubits: int, path: str, local_dim: int = 2) -> "OperatorSpec":
        return cls("matrix", qubits, local_dim=local_dim, path=path)

    def with_qubits(self, qubits: int) -> "OperatorSpec":
        return replace(self, qubits=qubits)

    @property
    def dim(self) -> int:
        return self.local_dim**self.qubits


def _parse_pauli_letters(letters: str, qubits: int) -> list[tuple[int, str]]:
    """Parse e.g. "Z1" or "X1Y3": letter followed by a 1-indexed site."""
    import re

    toks = re.findall(r"([IXYZ])(\d+)", letters)
    if not toks or "".join(a + b for a, b in toks) != letters:
        raise ValueError(f"malformed Pauli string {letters!r}")
    out = []
    for letter, site in toks:
        s = int(site)
        if not 1 <= s <= qubits:
            raise ValueError(f"site {s} outside 1..{qubits}")
        out.append((s - 1, letter))
    return out


def load_matrix_file(path: str) -> np.ndarray:
    """Plain-text matrix: first line dim, then row-major `re,im` entries."""
    with open(path) as fh:
        toks = fh.read().split()
    dim = int(toks[0])
    entries = toks[1:]
    if len(entries) != dim * dim:
        raise ValueError(f"expected {dim * dim} entries, got {len(entries)}")
    vals = []
    for t in entries:
        re_s, im_s = t.split(",")
        vals.append(complex(float(re_s), float(im_s)))
    return np.array(vals, dtype=complex).reshape(dim, dim)


def _hs_normalize(mat: np.ndarray, traceless: bool = True) -> np.ndarray:
    D = mat.shape[0]
    out = 0.5 * (mat + mat.conj().T)
    if traceless:
        out = out - (np.trace(out) / D) * np.eye(D)
    norm = math.sqrt(abs(np.trace(out.conj().T @ out)) / D)
    if norm == 0:
        raise ValueError("operator vanishes after traceless projection")
    return out / norm


def materialize(spec: OperatorSpec) -> np.ndarray:
    """Build the concrete Hermitian matrix; tr[O^dag O]/D = 1 guaranteed."""
    D = spec.dim
    if spec.kind == "pauli_string":
        if spec.local_dim != 2:
            raise ValueError("Pauli strings require qubits (local_dim = 2)")
        ops = [_PAULI["I"]] * spec.qubits
        for site, letter in _parse_pauli_letters(spec.letters, spec.qubits):
            ops[site] = ops[site] @ _PAULI[letter]
        out = ops[0]
        for op in ops[1:]:
            out = np.kron(out, op)
        return out
    if spec.kind == "finite_trace":
        w = float(spec.letters)
        if not 0 <= w < 1:
            raise ValueError("trace weight must lie in [0, 1)")
        z1 = materialize(OperatorSpec.pauli(spec.qubits, "Z1"))
        return w * np.eye(D) + math.sqrt(1 - w * w) * z1
    if spec.kind == "random_traceless":
        # Haar-rotated traceless +-1 spectrum: Pauli-like moments, kappa4 = -1
        rng = np.random.default_rng(spec.seed)
        signs = np.ones(D)
        signs[D // 2:] = -1.0
        V = haar_sample(D, rng)
        return _hs_normalize(V @ np.diag(signs) @ V.conj().T)
    if spec.kind == "gaussian":
        rng = np.random.default_rng(spec.seed)
        A = rng.standard_normal((D, D)) + 1j * rng.standard_normal((D, D))
        return _hs_normalize(A + A.conj().T)
    if spec.kind == "matrix":
        return _hs_normalize(load_matrix_file(spec.path))
    raise ValueError(f"unknown operator kind {spec.kind!r}")


def haar_sample(D: int, seed) -> np.ndarray:
    """Haar-random D x D unitary: QR of a complex Ginibre matrix with each
    column of Q rephased by r_ii / |r_ii| (Mezzadri construction)."""
    if D < 2:
        raise ValueError("D must be >= 2")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    Z = (rng.standard_normal((D, D)) + 1j * rng.standard_normal((D, D))) / math.sqrt(2)
    Q, R = np.linalg.qr(Z)
    d = np.diagonal(R)
    return Q * (d / np.abs(d))


def haar_sample_batch(D: int, count: int, seed) -> np.ndarray:
    """Stacked Haar unitaries of shape (count, D, D); batched QR."""
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    Z = (rng.standard_normal((count, D, D)) + 1j * rng.standard_normal((count, D, D))) / math.sqrt(2)
    Q, R = np.linalg.qr(Z)
    d = np.diagonal(R, axis1=-2, axis2=-1)
    return Q * (d / np.abs(d))[:, None, :]


def loe_spectrum(op, U: np.ndarray, nA: int, local_dim: int = 2) -> np.ndarray:
    """Squared Schmidt coefficients of |O_U>> across the (A, A)|(Abar, Abar)
    cut: singular values squared of the reshaped amplitude vector."""
    O = materialize(op) if isinstance(op, OperatorSpec) else np.asarray(op)
    D = O.shape[0]
    qubits = round(math.log(D, local_dim))
    if local_dim**qubits != D:
        raise ValueError(f"dimension {D} is not a power of {local_dim}")
    if not 0 <= nA <= qubits:
        raise ValueError(f"cut {nA} outside 0..{qubits}")
    OU = U.conj().T @ O @ U
    dA, dB = local_dim**nA, local_dim ** (qubits - nA)
    amp = (OU / math.sqrt(D)).reshape(dA, dB, dA, dB)
    amp = amp.transpose(0, 2, 1, 3).reshape(dA * dA, dB * dB)
    sv = np.linalg.svd(amp, compute_uv=False)
    return sv * sv


def entropies_from_spectrum(
    spectrum: np.ndarray, orders: Sequence[Order]
) -> dict[Order, float]:
    """Renyi entropies of a Schmidt spectrum; order 1/"vn" is von Neumann,
    "inf" the min-entropy.  Eigenvalues below 1e-14 are clamped to zero."""
    lam = np.asarray(spectrum, dtype=float)
    if np.any(lam < -_NORM_TOL):
        raise ValueError("negative spectrum")
    total = float(lam.sum())
    if abs(total - 1.0) > _NORM_TOL:
        raise ValueError(f"spectrum normalization violated: sum = {total}")
    lam = np.where(lam < _EIG_CLAMP, 0.0, lam)
    out: dict[Order, float] = {}
    for k in orders:
        if k == "vn" or k == 1:
            nz = lam[lam > 0]
            out[k] = float(-(nz * np.log(nz)).sum())
        elif k == "inf":
            out[k] = float(-math.log(lam.max()))
        else:
            kk = int(k)
            if kk < 2:
                raise ValueError(f"unsupported order {k!r}")
            out[k] = float(math.log((lam**kk).sum()) / (1 - kk))
    return out


def replica_purity_contraction(OU: np.ndarray, dA: int, dB: int, k: int) -> float:
    """Independent oracle for the k-purity: the explicit 2k-replica tensor
    contraction D^-k tr[O_U^(x 2k) (T_tau_gamma^A x T_tau_e^Abar)]."""
    from .perm import staggered_pairings

    D = OU.shape[0]
    if dA * dB != D:
        raise ValueError("dA * dB must equal the operator dimension")
    n = 2 * k
    tau_e, tau_g = staggered_pairings(k)
    T = OU.reshape(dA, dB, dA, dB)
    letters = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"
    a_idx = letters[:n]
    b_idx = letters[n : 2 * n]
    terms = []
    for r in range(n):
        terms.append(a_idx[r] + b_idx[r] + a_idx[tau_g(r)] + b_idx[tau_e(r)])
    val = np.einsum(",".join(terms), *([T] * n))
    return float(np.real(val) / D**k)


@dataclass(frozen=True)
class CurveRow:
    nA: int
    k: Order
    mean_entropy: float
    std_error: float
    annealed_entropy: float
    mean_purity: float
    purity_variance: float
    samples: int


@dataclass(frozen=True)
class EntropyCurve:
    rows: tuple[CurveRow, ...]

    CSV_HEADER = "nA,k,mean_entropy,std_error,annealed_entropy,mean_purity,purity_variance,samples"

    def to_csv(self) -> str:
        lines = [self.CSV_HEADER]
        for r in self.rows:
            lines.append(
                f"{r.nA},{r.k},{_fmt(r.mean_entropy)},{_fmt(r.std_error)},"
                f"{_fmt(r.annealed_entropy)},{_fmt(r.mean_purity)},"
                f"{_fmt(r.purity_variance)},{r.samples}"
            )
        return "\n".join(lines) + "\n"

    def row(self, nA: int, k: Order) -> CurveRow:
        for r in self.rows:
            if r.nA == nA and str(r.k) == str(k):
                return r
        raise KeyError((nA, k))


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _sample_seed(master: int, index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(entropy=master, spawn_key=(index,)))


def _scan(
    spectra_fn,
    qubits: int,
    samples: int,
    orders: Sequence[Order],
    local_dim: int,
) -> EntropyCurve:
    cuts = list(range(qubits + 1))
    ent: dict[tuple[int, Order], list[float]] = {(c, k): [] for c in cuts for k in orders}
    pur: dict[tuple[int, Order], list[float]] = {(c, k): [] for c in cuts for k in orders}
    for i in range(samples):
        for c, spectrum in spectra_fn(i):
            es = entropies_from_spectrum(spectrum, orders)
            for k in orders:
                ent[(c, k)].append(es[k])
                if k == "vn" or k == 1:
                    pur[(c, k)].append(float("nan"))
                elif k == "inf":
                    pur[(c, k)].append(float(spectrum.max()))
                else:
                    pur[(c, k)].append(float((spectrum ** int(k)).sum()))
    rows = []
    for c in cuts:
        for k in orders:
            e = np.array(ent[(c, k)])
            p = np.array(pur[(c, k)])
            mean_e = float(e.mean())
            stderr = float(e.std(ddof=1) / math.sqrt(samples)) if samples > 1 else 0.0
            if k == "vn" or k == 1:
                annealed, mean_p, var_p = mean_e, float("nan"), float("nan")
            else:
                mean_p = float(p.mean())
                var_p = float(p.var(ddof=1)) if samples > 1 else 0.0
                kk = 2 if k == "inf" else int(k)
                annealed = float(math.log(mean_p) / (1 - kk)) if k != "inf" else -math.log(mean_p)
            rows.append(
                CurveRow(c, k, mean_e, stderr, annealed, mean_p, var_p, samples)
            )
    return EntropyCurve(tuple(rows))


def page_curve_scan(
    op: OperatorSpec,
    samples: int,
    orders: Sequence[Order],
    seed: int,
    max_qubits: int = DEFAULT_MAX_QUBITS,
) -> EntropyCurve:
    """Monte Carlo LOE page curve over all cuts nA = 0..N."""
    if op.qubits > max_qubits:
        raise ValueError(f"{op.qubits} qubits exceeds the resource guard {max_qubits}")
    if samples < 2:
        raise ValueError("need at least 2 samples")
    O = materialize(op)
    D = op.dim

    def spectra(i: int):
        U = haar_sample(D, _sample_seed(seed, i))
        for c in range(op.qubits + 1):
            yield c, loe_spectrum(O, U, c, op.local_dim)

    return _scan(spectra, op.qubits, samples, orders, op.local_dim)


def state_page_scan(
    samples: int,
    qubits: int,
    orders: Sequence[Order],
    seed: int,
    local_dim: int = 2,
    max_qubits: int = DEFAULT_MAX_QUBITS,
) -> EntropyCurve:
    """Haar-random pure states in the doubled space of dimension D^2,
    scanned over the same cut grid as the operator curve."""
    if qubits > max_qubits:
        raise ValueError(f"{qubits} qubits exceeds the resource guard {max_qubits}")
    if samples < 2:
        raise ValueError("need at least 2 samples")
    D = local_dim**qubits

    def spectra(i: int):
        rng = _sample_seed(seed, i)
        psi = rng.standard_normal(D * D) + 1j * rng.standard_normal(D * D)
        psi /= np.linalg.norm(psi)
        for c in range(qubits + 1):
            dA = local_dim ** (2 * c)
            sv = np.linalg.svd(psi.reshape(dA, (D * D) // dA), compute_uv=False)
            yield c, sv * sv

    return _scan(spectra, qubits, samples, orders, local_dim)


def purity_samples(
    op: OperatorSpec, nA: int, k: int, samples: int, seed: int, batch: int = 512
) -> np.ndarray:
    """k-purity samples at one cut, drawn in deterministic batches.

    Fast path for large-sample purity statistics (cross-engine oracle,
    fluctuation scans); per-batch seeds derive from (seed, batch index).
    """
    O = materialize(op)
    D = op.dim
    q = op.local_dim
    dA, dB = q**nA, q ** (op.qubits - nA)
    out = np.empty(samples)
    done = 0
    bidx = 0
    while done < samples:
        m = min(batch, samples - done)
        U = haar_sample_batch(D, m, _sample_seed(seed, bidx))
        OU = np.einsum("sji,jk,skl->sil", U.conj(), O, U, optimize=True)
        amp = (OU / math.sqrt(D)).reshape(m, dA, dB, dA, dB)
        amp = amp.transpose(0, 1, 3, 2, 4).reshape(m, dA * dA, dB * dB)
        if amp.shape[2] < amp.shape[1]:
            amp = amp.conj().transpose(0, 2, 1)
        # purity from Gram-matrix traces, cheaper than a singular value pass:
        # sum lambda^k = tr[(A A^dag)^k]
        G = amp @ amp.conj().transpose(0, 2, 1)
        if k == 2:
            out[done : done + m] = np.einsum("sij,sji->s", G, G).real
        else:
            P = G
            for _ in range(k - 2):
                P = P @ G
            out[done : done + m] = np.einsum("sij,sji->s", P, G).real
        done += m
        bidx += 1
    return out


@dataclass(frozen=True)
class FluctuationRow:
    qubits: int
    dim: int
    k: int
    mean_purity: float
    relative_variance: float
    samples: int


def fluctuation_scan(
    op: OperatorSpec,
    orders: Sequence[int],
    dims: Sequence[int],
    samples: int,
    seed: int,
) -> list[FluctuationRow]:
    """Empirical relative variance of the half-chain k-purity per system size."""
    rows = []
    for qi, N in enumerate(dims):
        spec = op.with_qubits(N)
        for k in orders:
            p = purity_samples(spec, N // 2, int(k), samples, seed + qi)
            mean = float(p.mean())
            rel = float(p.var(ddof=1) / mean**2)
            rows.append(FluctuationRow(N, spec.dim, int(k), mean, rel, samples))
    return rows


def loglog_slope(xs: Iterable[float], ys: Iterable[float]) -> float:
    """Least-squares slope of log(y) against log(x)."""
    lx = np.log(np.array(list(xs), dtype=float))
    ly = np.log(np.array(list(ys), dtype=float))
    return float(np.polyfit(lx, ly, 1)[0])
