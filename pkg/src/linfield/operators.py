"""First-order operators L + q and the structure of their solution sets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .derivations import VectorA, apply_derivation, grad, inner_product
from .errors import PreconditionError, ZeroEtaError
from .field import RatFunc, _as_ratfunc
from .independence import jacobian, rank


@dataclass(frozen=True)
class NHOperator:
    """L + q with L = sum a_i d_i.  Equality is coefficient-wise on (a_1..a_n, q)."""

    a: VectorA
    q: RatFunc

    def __post_init__(self):
        q = _as_ratfunc(self.q, self.a.nvars)
        object.__setattr__(self, "q", q)

    @classmethod
    def homogeneous(cls, a: VectorA) -> NHOperator:
        return cls(a, RatFunc.zero(a.nvars))

    @property
    def nvars(self):
        return self.a.nvars

    def is_homogeneous(self):
        return self.q.is_zero()

    def coefficients(self) -> tuple:
        """The vector (a_1, ..., a_n, q) in A^(n+1)."""
        return self.a.coords + (self.q,)

    def __call__(self, psi):
        return nh_apply(self, psi)

    def __str__(self):
        return format_operator(self)


def _signed_text(c: RatFunc):
    """(negative?, magnitude text) for one operator coefficient."""
    if c.is_polynomial() and len(c.num.terms) == 1:
        if c.num.leading_coeff() < 0:
            return True, str(-c)
        return False, str(c)
    return False, f"({c})"


def format_operator(op: NHOperator) -> str:
    """Text form like ``x1*d1 + x2*d2 - 1``."""
    parts = []
    for i, c in enumerate(op.a, start=1):
        if c:
            neg, text = _signed_text(c)
            parts.append((neg, f"d{i}" if text == "1" else f"{text}*d{i}"))
    if op.q:
        parts.append(_signed_text(op.q))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] else "") + parts[0][1]
    for neg, text in parts[1:]:
        out += (" - " if neg else " + ") + text
    return out


def nh_apply(op: NHOperator, psi: RatFunc) -> RatFunc:
    psi = _as_ratfunc(psi, op.nvars)
    out = apply_derivation(op.a, psi)
    if op.q and psi:
        out = out + op.q * psi
    return out


def in_kernel(op: NHOperator, psi: RatFunc) -> bool:
    return nh_apply(op, psi).is_zero()


def conjugate(a: VectorA, eta: RatFunc) -> NHOperator:
    """The operator eta L eta^-1 = L + q with q = -(L eta) / eta."""
    eta = _as_ratfunc(eta, a.nvars)
    if eta.is_zero():
        raise ZeroEtaError("eta must be nonzero")
    return NHOperator(a, -apply_derivation(a, eta) / eta)


def conjugated_apply(a: VectorA, eta: RatFunc, psi: RatFunc) -> RatFunc:
    """eta * L(psi / eta), computed literally as a composite of three maps."""
    eta = _as_ratfunc(eta, a.nvars)
    if eta.is_zero():
        raise ZeroEtaError("eta must be nonzero")
    return eta * apply_derivation(a, _as_ratfunc(psi, a.nvars) / eta)


def _require(cond, msg):
    if not cond:
        raise PreconditionError(msg)


def verify_product_structure(a: VectorA, q: RatFunc, eta: RatFunc, phi: RatFunc) -> bool:
    """eta in Ker(L+q) and phi in Ker L imply eta*phi in Ker(L+q)."""
    op = NHOperator(a, q)
    _require(in_kernel(op, eta), "eta is not in Ker(L + q)")
    _require(in_kernel(NHOperator.homogeneous(a), phi), "phi is not in Ker L")
    return in_kernel(op, eta * phi)


def verify_quotient_structure(a: VectorA, q: RatFunc, eta: RatFunc, psi: RatFunc) -> bool:
    """Reverse inclusion: psi, eta in Ker(L+q), eta != 0 imply psi/eta in Ker L."""
    op = NHOperator(a, q)
    if _as_ratfunc(eta, a.nvars).is_zero():
        raise ZeroEtaError("eta must be nonzero")
    _require(in_kernel(op, eta), "eta is not in Ker(L + q)")
    _require(in_kernel(op, psi), "psi is not in Ker(L + q)")
    return in_kernel(NHOperator.homogeneous(a), psi / eta)


def ratio_in_homogeneous_kernel(a: VectorA, q: RatFunc, xi: RatFunc, eta: RatFunc) -> bool:
    op = NHOperator(a, q)
    if _as_ratfunc(eta, a.nvars).is_zero():
        raise PreconditionError("eta must be nonzero")
    _require(in_kernel(op, xi), "xi is not in Ker(L + q)")
    _require(in_kernel(op, eta), "eta is not in Ker(L + q)")
    return in_kernel(NHOperator.homogeneous(a), xi / eta)


def verify_affine_solutions(op: NHOperator, b: RatFunc, chi0: RatFunc, psi: RatFunc) -> bool:
    """chi0 solves (L+q)chi = b and psi is in Ker(L+q); check chi0 + psi solves it too."""
    b = _as_ratfunc(b, op.nvars)
    chi0 = _as_ratfunc(chi0, op.nvars)
    _require(nh_apply(op, chi0) == b, "chi0 does not solve (L + q) chi = b")
    _require(in_kernel(op, psi), "psi is not in Ker(L + q)")
    return nh_apply(op, chi0 + psi) == b


def solutions_differ_by_kernel(op: NHOperator, chi0: RatFunc, chi: RatFunc) -> bool:
    """Two solutions of (L+q)chi = b differ by an element of Ker(L+q)."""
    _require(nh_apply(op, chi0) == nh_apply(op, chi), "chi0 and chi solve different equations")
    return in_kernel(op, _as_ratfunc(chi, op.nvars) - chi0)


def kernel_rank_bound(a: VectorA, candidates: Sequence[RatFunc]) -> bool:
    """Kernel elements of a homogeneous L have Jacobian rank at most n - 1."""
    op = NHOperator.homogeneous(a)
    for c in candidates:
        _require(in_kernel(op, c), f"{c} is not in Ker L")
    return rank(jacobian(list(candidates))) <= a.nvars - 1


def bordered_rows(candidates: Sequence[RatFunc]) -> list[list[RatFunc]]:
    return [list(grad(c).coords) + [c] for c in candidates]


def bordered_kernel_rank(op: NHOperator, candidates: Sequence[RatFunc]) -> int:
    """Rank of the matrix with rows (grad psi_k, psi_k) for psi_k in Ker(L+q).

    Every such row is orthogonal to (a_1..a_n, q), so the rank is at most n.
    """
    for c in candidates:
        _require(in_kernel(op, c), f"{c} is not in Ker(L + q)")
    return rank(bordered_rows(candidates))


def orthogonality_form(a: VectorA, phi: RatFunc) -> RatFunc:
    """<a | grad phi>, which vanishes exactly on Ker L."""
    return inner_product(a, grad(phi))
