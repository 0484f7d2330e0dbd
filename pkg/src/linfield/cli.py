"""Command-line interface: ``linfield <command> -n N [options] EXPR...``.

Expressions are read from the positional arguments, or one per line from
stdin when none are given.  Exit status is 0 on success or a true verdict,
1 on a false verdict and 2 on any error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import annihilator, independence, operators, oracle
from .derivations import grad
from .errors import LinfieldError, PreconditionError
from .expr import parse_operator, parse_ratfunc
from .field import encode_sequence, format_scalar

EXIT_OK, EXIT_FALSE, EXIT_ERROR = 0, 1, 2


class UsageError(LinfieldError):
    pass


def _verdict(flag: bool) -> str:
    return "true" if flag else "false"


class Output:
    """Writes each result as a text line or a JSON object."""

    def __init__(self, as_json, stream):
        self.as_json = as_json
        self.stream = stream

    def emit(self, result, label=None):
        if self.as_json:
            print(json.dumps({"ok": True, "result": result, "error": None}), file=self.stream)
        elif isinstance(result, bool):
            print(f"{label}: {_verdict(result)}" if label else _verdict(result), file=self.stream)
        else:
            print(result, file=self.stream)

    def error(self, message):
        if self.as_json:
            print(json.dumps({"ok": False, "result": None, "error": message}), file=self.stream)
        else:
            print(f"error: {message}", file=sys.stderr)


def _exprs(args):
    if args.exprs:
        return list(args.exprs)
    return [line.strip() for line in sys.stdin if line.strip()]


def _parse_all(args):
    return [parse_ratfunc(s, args.n) for s in _exprs(args)]


def _need(args, name):
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"--{name.replace('_', '-')} is required for '{args.command}'")
    return value


def _op(args):
    return parse_operator(_need(args, "op"), args.n)


def _one(items, what):
    if not items:
        raise UsageError(f"expected at least one {what}")
    return items


# -- commands ------------------------------------------------------------------

def cmd_encode(args, out):
    for f in _one(_parse_all(args), "polynomial"):
        if not f.is_polynomial():
            raise LinfieldError(f"{f} is not a polynomial")
        seq = encode_sequence(f, args.cutoff)
        out.emit("(" + ", ".join(format_scalar(c) for c in seq) + ")")
    return True


def cmd_indep(args, out):
    flag = independence.is_functionally_independent(_one(_parse_all(args), "expression"))
    out.emit(flag, "independent")
    return flag


def cmd_grad(args, out):
    for f in _one(_parse_all(args), "expression"):
        out.emit(str(grad(f)))
    return True


def cmd_apply(args, out):
    op = _op(args)
    for f in _one(_parse_all(args), "expression"):
        out.emit(str(operators.nh_apply(op, f)))
    return True


def cmd_annihilate(args, out):
    out.emit(str(annihilator.annihilate(_one(_parse_all(args), "expression"))))
    return True


def _homogeneous_part(args):
    op = _op(args)
    if not op.is_homogeneous():
        raise UsageError("--op must be homogeneous (no zeroth-order term) here")
    return op.a


def cmd_conjugate(args, out):
    a = _homogeneous_part(args)
    eta = parse_ratfunc(_need(args, "eta"), args.n)
    out.emit(str(operators.conjugate(a, eta)))
    return True


def cmd_kernel_check(args, out):
    op = _op(args)
    ok = True
    for f in _one(_parse_all(args), "expression"):
        flag = operators.in_kernel(op, f)
        out.emit(flag, "in kernel")
        ok &= flag
    return ok


def cmd_coset_check(args, out):
    a = _op(args).a
    eta = parse_ratfunc(_need(args, "eta"), args.n)
    ok = True
    for xi in _one(_parse_all(args), "expression"):
        flag = annihilator.coset_membership(a, eta, xi)
        out.emit(flag, "in coset")
        ok &= flag
    return ok


def cmd_verify_prop2(args, out):
    op = _op(args)
    eta = parse_ratfunc(_need(args, "eta"), args.n)
    ok = True
    for f in _one(_parse_all(args), "expression"):
        if args.reverse:
            flag = operators.verify_quotient_structure(op.a, op.q, eta, f)
        else:
            flag = operators.verify_product_structure(op.a, op.q, eta, f)
        out.emit(flag, "coset structure")
        ok &= flag
    return ok


def cmd_verify_prop5(args, out):
    a = _homogeneous_part(args)
    eta = parse_ratfunc(_need(args, "eta"), args.n)
    conj = operators.conjugate(a, eta)
    ok = operators.in_kernel(conj, eta)
    for psi in _parse_all(args):
        ok &= operators.nh_apply(conj, psi) == operators.conjugated_apply(a, eta, psi)
    out.emit(ok, "conjugation identity")
    return ok


def cmd_verify_affine(args, out):
    op = _op(args)
    b = parse_ratfunc(_need(args, "b"), args.n)
    chi0 = parse_ratfunc(_need(args, "chi0"), args.n)
    ok = True
    for psi in _one(_parse_all(args), "kernel element"):
        flag = operators.verify_affine_solutions(op, b, chi0, psi)
        out.emit(flag, "affine")
        ok &= flag
    return ok


def cmd_oracle(args, out):
    exprs = _parse_all(args)
    if len(exprs) != 2:
        raise UsageError("oracle takes exactly two expressions: LHS RHS")
    flag = oracle.identity_check(exprs[0], exprs[1], trials=args.trials, seed=args.seed)
    out.emit(flag, "identity")
    return flag


COMMANDS = {
    "encode": (cmd_encode, "polynomial -> coefficient sequence on the graded monomial basis"),
    "indep": (cmd_indep, "decide functional independence of the given set"),
    "grad": (cmd_grad, "gradient of each expression"),
    "apply": (cmd_apply, "apply the operator --op to each expression"),
    "annihilate": (cmd_annihilate, "derivation annihilating n-1 independent functions"),
    "conjugate": (cmd_conjugate, "eta L eta^-1 as an operator L + q"),
    "kernel-check": (cmd_kernel_check, "is each expression in Ker(--op)?"),
    "coset-check": (cmd_coset_check, "is each expression in the coset eta Ker L?"),
    "verify-prop2": (cmd_verify_prop2, "check eta*phi in Ker(L+q) (or psi/eta in Ker L with --reverse)"),
    "verify-prop5": (cmd_verify_prop5, "check (L+q) = eta L eta^-1 on the given expressions"),
    "verify-affine": (cmd_verify_affine, "check chi0 + psi solves (L+q) chi = b"),
    "oracle": (cmd_oracle, "randomized identity check of LHS against RHS"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linfield", description="Exact first-order linear differential operators over Q(x1..xn).")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("-n", type=int, required=True, help="number of variables x1..xn")
        p.add_argument("--json", action="store_true", help="emit JSON objects instead of text")
        p.add_argument("exprs", nargs="*", metavar="EXPR")
        if name == "encode":
            p.add_argument("--cutoff", type=int, default=None)
        if name in ("apply", "conjugate", "kernel-check", "coset-check",
                    "verify-prop2", "verify-prop5", "verify-affine"):
            p.add_argument("--op", help='operator text, e.g. "x1*d1 + x2*d2 - 1"')
        if name in ("conjugate", "coset-check", "verify-prop2", "verify-prop5"):
            p.add_argument("--eta")
        if name == "verify-prop2":
            p.add_argument("--reverse", action="store_true",
                           help="inputs are in Ker(L+q); check psi/eta in Ker L")
        if name == "verify-affine":
            p.add_argument("--b")
            p.add_argument("--chi0")
        if name == "oracle":
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--trials", type=int, default=5)
    return parser


def main(argv=None, stream=None) -> int:
    stream = stream if stream is not None else sys.stdout
    args = build_parser().parse_args(argv)
    out = Output(args.json, stream)
    if args.n < 1:
        out.error("-n must be at least 1")
        return EXIT_ERROR
    handler, _ = COMMANDS[args.command]
    try:
        ok = handler(args, out)
    except PreconditionError as exc:
        out.error(f"precondition violated: {exc}")
        return EXIT_ERROR
    except (LinfieldError, ValueError) as exc:
        out.error(str(exc))
        return EXIT_ERROR
    return EXIT_OK if ok else EXIT_FALSE


if __name__ == "__main__":
    sys.exit(main())
