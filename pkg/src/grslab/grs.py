"""Dual biorthogonal systems phi_n = exp(Q/2) e_n, psi_n = exp(-Q/2) e_n.

Built at finite truncation N from a metric generator Q and an orthonormal
basis; all the Hilbert-space identities asserted for such pairs are exposed
as defect numbers rather than booleans, so the same kernels serve both
pass/fail gates and convergence studies.  Weighted inner products are always
evaluated in the factored form <exp(sQ/2) f, exp(sQ/2) g>, which halves the
dynamic range compared to applying exp(sQ) whole.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable, Sequence

import numpy as np
from numpy.typing import NDArray

from .basis import BasisSet, QuadratureRule
from .defaults import DECAY_THRESHOLD, QUAD_ORDER_PAD
from .errors import DomainError, NumericError
from .krein import CoefficientRep, FunctionRep, SampleRep, inner, to_samples, unit_vector
from .metric_ops import (
    MetricOperatorQ,
    Multiplication,
    apply_exp_q,
    decay_scores,
    working_rule,
)

__all__ = [
    "BiorthogonalSystem",
    "build_system",
    "biorthogonality_defect",
    "gq_basis_defect",
    "g0_quadratic_check",
    "weighted_inner",
    "weighted_product",
    "family_samples",
    "truncated",
]


@dataclass(frozen=True)
class BiorthogonalSystem:
    """The triple ({e_n}, {phi_n}, {psi_n}) at truncation size n.

    ``phi``/``psi`` hold the most structured representation each generator
    admits (coefficient form with an exact argument shift for translation
    generators, samples for multiplication symbols); ``phi_samples`` and
    ``psi_samples`` cache the same families on the working rule for
    quadrature work.  Values are immutable after build.
    """

    basis: BasisSet
    q: MetricOperatorQ
    n: int
    rule: QuadratureRule
    phi: tuple[FunctionRep, ...]
    psi: tuple[FunctionRep, ...]
    phi_samples: NDArray
    psi_samples: NDArray
    min_decay_score: float
    biorth_defect: float
    signs: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        for name in ("phi_samples", "psi_samples"):
            a = np.ascontiguousarray(getattr(self, name))
            a.setflags(write=False)
            object.__setattr__(self, name, a)


def _coefficient_family(reps: Sequence[FunctionRep]) -> bool:
    return all(isinstance(r, CoefficientRep) and r.shift == 0 for r in reps)


def build_system(
    q_op: MetricOperatorQ,
    basis: BasisSet,
    n: int,
    rule: QuadratureRule | None = None,
    quad_order: int | None = None,
    decay_threshold: float = DECAY_THRESHOLD,
) -> BiorthogonalSystem:
    """Materialize both families and record their quality numbers.

    Every basis member must clear the domain-decay gate for both signs of
    exp(+-Q/2); the offending index and sign are named otherwise.
    """
    if not 1 <= n <= basis.size:
        raise DomainError(f"truncation {n} must lie in [1, basis size {basis.size}]")
    if rule is None:
        rule = working_rule(basis, quad_order or 2 * n + QUAD_ORDER_PAD)

    min_score = 1.0
    phi: list[FunctionRep] = []
    psi: list[FunctionRep] = []
    for k in range(n):
        e_k = unit_vector(basis, k)
        scores = decay_scores(q_op, e_k, rule)
        for t, s in scores.items():
            if s < decay_threshold:
                raise DomainError(
                    f"basis member {k}: exp({t:+g} Q) mass escapes the window "
                    f"(score {s:.3f} < {decay_threshold}); the generator does not "
                    "admit this basis at the working resolution"
                )
        min_score = min(min_score, *scores.values())
        phi.append(apply_exp_q(q_op, 0.5, e_k, rule))
        psi.append(apply_exp_q(q_op, -0.5, e_k, rule))

    phi_s = np.vstack([to_samples(f, rule).samples for f in phi])
    psi_s = np.vstack([to_samples(f, rule).samples for f in psi])

    sys = BiorthogonalSystem(
        basis=basis,
        q=q_op,
        n=int(n),
        rule=rule,
        phi=tuple(phi),
        psi=tuple(psi),
        phi_samples=phi_s,
        psi_samples=psi_s,
        min_decay_score=float(min_score),
        biorth_defect=0.0,
    )
    return replace(sys, biorth_defect=biorthogonality_defect(sys))


# ---------------------------------------------------------------------------
# grams and defects
# ---------------------------------------------------------------------------

def _cross_gram(sys: BiorthogonalSystem, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """G[n, m] = <a_n, b_m> from cached sample rows."""
    w = sys.rule.dx_weights
    return (a * w) @ np.conj(b.T)


def biorthogonality_defect(sys: BiorthogonalSystem) -> float:
    """max_{n,m} |<phi_n, psi_m> - delta_nm|."""
    if _coefficient_family(sys.phi) and _coefficient_family(sys.psi):
        g = np.array([[inner(f, g) for g in sys.psi] for f in sys.phi])
    else:
        g = _cross_gram(sys, sys.phi_samples, sys.psi_samples)
    return float(np.max(np.abs(g - np.eye(sys.n))))


def gq_basis_defect(
    sys: BiorthogonalSystem,
    f: FunctionRep,
    g: FunctionRep,
    upto: int | None = None,
    decay_threshold: float = DECAY_THRESHOLD,
) -> tuple[float, float]:
    """Defects of the two quasi-basis resolutions of <f, g>.

    Returns (|<f,g> - sum <f,phi_n><psi_n,g>|, |<f,g> - sum <f,psi_n><phi_n,g>|)
    over the first ``upto`` members (all of them by default).  Both f and g
    must clear the domain-decay gate for both signs.
    """
    m = sys.n if upto is None else int(upto)
    if not 1 <= m <= sys.n:
        raise DomainError(f"upto must lie in [1, {sys.n}], got {m}")
    for name, h in (("f", f), ("g", g)):
        scores = decay_scores(sys.q, h, sys.rule)
        bad = min(scores.values())
        if bad < decay_threshold:
            raise DomainError(
                f"{name} fails the domain gate (score {bad:.3f} < {decay_threshold})"
            )
    w = sys.rule.dx_weights
    fs = to_samples(f, sys.rule).samples
    gs = to_samples(g, sys.rule).samples
    fg = np.sum(w * fs * np.conj(gs))
    f_phi = np.conj(sys.phi_samples[:m] * w) @ fs      # <f, phi_n>
    psi_g = (sys.psi_samples[:m] * w) @ np.conj(gs)    # <psi_n, g>
    f_psi = np.conj(sys.psi_samples[:m] * w) @ fs
    phi_g = (sys.phi_samples[:m] * w) @ np.conj(gs)
    d1 = abs(fg - np.sum(f_phi * psi_g))
    d2 = abs(fg - np.sum(f_psi * phi_g))
    return float(d1), float(d2)


def g0_quadratic_check(sys: BiorthogonalSystem, c: Sequence[complex]) -> tuple[float, float]:
    """Quadratic form of the map phi_n -> psi_n against sum |c_n|^2.

    For f = sum c_n phi_n the pairing <sum c_n psi_n, f> must equal
    sum |c_n|^2 (and in particular be strictly positive for c != 0); returns
    (sum |c_n|^2, quadrature value).
    """
    c = np.asarray(c, dtype=complex)
    if c.ndim != 1 or c.size == 0 or c.size > sys.n:
        raise DomainError(f"need 1 <= len(c) <= {sys.n}, got shape {c.shape}")
    u = c @ sys.psi_samples[: c.size]
    v = c @ sys.phi_samples[: c.size]
    z = np.sum(sys.rule.dx_weights * u * np.conj(v))
    if abs(z.imag) > 1e-6 * max(1.0, abs(z)):
        raise NumericError(f"quadratic form came out non-real: {z!r}")
    return float(np.sum(np.abs(c) ** 2)), float(z.real)


# ---------------------------------------------------------------------------
# weighted inner products
# ---------------------------------------------------------------------------

def weighted_inner(
    q_op: MetricOperatorQ,
    sign: int,
    f: FunctionRep,
    g: FunctionRep,
    rule: QuadratureRule | None = None,
) -> complex:
    """<exp(sign Q/2) f, exp(sign Q/2) g> for sign in {-1, +1}.

    This is the factored form of the metric-weighted product; the whole
    weight exp(sign Q) is never applied.
    """
    if sign not in (-1, 1):
        raise DomainError(f"sign must be -1 or +1, got {sign!r}")
    tf = apply_exp_q(q_op, 0.5 * sign, f, rule)
    tg = apply_exp_q(q_op, 0.5 * sign, g, rule)
    if (
        isinstance(tf, CoefficientRep)
        and isinstance(tg, CoefficientRep)
        and tf.shift == 0
        and tg.shift == 0
    ):
        return inner(tf, tg)
    if rule is None:
        if isinstance(tf, SampleRep):
            rule = tf.rule
        elif isinstance(tg, SampleRep):
            rule = tg.rule
        else:
            rule = working_rule(tf.basis)
    return inner(to_samples(tf, rule), to_samples(tg, rule))


def weighted_product(
    q_op: MetricOperatorQ,
    sign: int,
    rule: QuadratureRule | None = None,
) -> Callable[[FunctionRep, FunctionRep], complex]:
    """The weighted product as a callable, for :func:`grslab.krein.gram_matrix`."""
    return lambda f, g: weighted_inner(q_op, sign, f, g, rule)


# ---------------------------------------------------------------------------
# re-materialization helpers
# ---------------------------------------------------------------------------

def family_samples(
    sys: BiorthogonalSystem,
    which: str,
    rule: QuadratureRule | None = None,
) -> np.ndarray:
    """Rows of phi, psi or e sampled on ``rule`` (the working rule by default).

    Analytic systems can be re-materialized on any rule; numeric bases exist
    only on their own grid.
    """
    if which not in ("phi", "psi", "e"):
        raise DomainError(f"which must be phi, psi or e, got {which!r}")
    if rule is None or rule is sys.rule:
        if which == "phi":
            return np.asarray(sys.phi_samples)
        if which == "psi":
            return np.asarray(sys.psi_samples)
        return sys.basis.table(sys.rule)[: sys.n]
    table = sys.basis.table(rule)[: sys.n]  # StructureError for numeric bases
    if which == "e":
        return table
    t = 0.5 if which == "phi" else -0.5
    if isinstance(sys.q, Multiplication):
        return np.exp(t * sys.q.values(rule.nodes)) * table
    reps = sys.phi if which == "phi" else sys.psi
    return np.vstack([to_samples(r, rule).samples for r in reps])


def truncated(sys: BiorthogonalSystem, m: int) -> BiorthogonalSystem:
    """The same system restricted to its first m members."""
    if not 1 <= m <= sys.n:
        raise DomainError(f"truncation {m} must lie in [1, {sys.n}]")
    if m == sys.n:
        return sys
    cut = replace(
        sys,
        n=int(m),
        phi=sys.phi[:m],
        psi=sys.psi[:m],
        phi_samples=np.array(sys.phi_samples[:m]),
        psi_samples=np.array(sys.psi_samples[:m]),
        signs=sys.signs[:m] if sys.signs is not None else None,
    )
    return replace(cut, biorth_defect=biorthogonality_defect(cut))
