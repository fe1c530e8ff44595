"""Command-line front end.

Every command prints canonical text (re-parseable by the library parsers) or,
with ``--format records``, one ``key=value`` line per coefficient.

Exit codes: 0 success, 1 a verification came out false, 2 malformed input.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field

from .arith import MultiPoly, render_coeff
from .cayley_hamilton import char_poly_via_top_form, exp_ft, verify_ch_theorem_upto
from .exterior import Multivector, render_multivector
from .hs import apply_series, hs_from_endomorphism
from .matrices import Matrix, parse_matrix
from .symmetric import Partition, partitions_up_to, schur_jacobi_trudi
from .vertex import (convergence_check, gamma_r, gamma_star_r, giambelli_verify,
                     wedge_from_partition)

OK, FALSIFIED, MALFORMED = 0, 1, 2


class InputError(ValueError):
    pass


@dataclass
class Output:
    lines: list = field(default_factory=list)
    records: list = field(default_factory=list)
    status: int = OK

    def render(self, fmt: str) -> str:
        if fmt == "records":
            return "".join(f"{k}={v}\n" for k, v in self.records)
        return "".join(line + "\n" for line in self.lines)


# --------------------------------------------------------------------------
# input helpers
# --------------------------------------------------------------------------

def _read_matrix(args) -> Matrix:
    if args.input and args.input != "-":
        try:
            with open(args.input) as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {args.input}: {exc.strerror}") from None
    else:
        text = sys.stdin.read()
    if not text.strip():
        raise InputError("no matrix given (expected a file argument or standard input)")
    m = parse_matrix(text)
    if args.rank is not None and args.rank != m.n:
        raise InputError(f"--rank {args.rank} does not match the {m.n}x{m.n} matrix")
    return m


def _matrix_alphabet(m: Matrix):
    for row in m.rows:
        for c in row:
            if isinstance(c, MultiPoly) and c.alphabet is not None:
                return c.alphabet
    return None


def _need(value, flag: str):
    if value is None:
        raise InputError(f"{flag} is required for this command")
    return value


def _partition(args) -> Partition:
    text = _need(args.partition, "--partition")
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _nonneg(value: int, flag: str) -> int:
    if value < 0:
        raise InputError(f"{flag} must be nonnegative, got {value}")
    return value


def _rank_for(lam: Partition, args) -> int:
    r = args.rank if args.rank is not None else max(lam.length, 1)
    if r < 1:
        raise InputError(f"--rank must be positive, got {r}")
    if lam.length > r:
        raise InputError(f"partition {lam} has length {lam.length} > rank {r}")
    return r


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------

def cmd_charpoly(args) -> Output:
    m = _read_matrix(args)
    cp = char_poly_via_top_form(m)
    out = Output()
    out.lines.append(f"E(t) = {cp}")
    out.records = [(f"E[{i}]", render_coeff((-1) ** i * cp.coefficient(i))) for i in range(cp.r + 1)]
    return out


def cmd_hs_apply(args) -> Output:
    m = _read_matrix(args)
    order = _nonneg(args.order if args.order is not None else 3, "--order")
    u = Multivector.parse(args.vector, m.n, _matrix_alphabet(m))
    series = apply_series(hs_from_endomorphism(m, order), u, order)
    out = Output()
    for k, v in enumerate(series):
        out.lines.append(f"D_{k}({args.vector}) = {render_multivector(v)}")
        out.records.append((f"D[{k}]", render_multivector(v)))
    return out


def cmd_ch_verify(args) -> Output:
    m = _read_matrix(args)
    r = m.n
    if args.k is not None:
        if args.k < 1:
            raise InputError(f"--k must be at least 1, got {args.k}")
        ks = [args.k]
    else:
        ks = list(range(1, r + 4))
    reports = verify_ch_theorem_upto(m, max(ks))
    out = Output()
    for rep in reports:
        if rep.k not in ks:
            continue
        out.lines.append(rep.summary())
        if not rep.holds:
            out.status = FALSIFIED
            for b in rep.failures:
                out.lines.append(f"  nonzero on {b if b == 'classical' else render_multivector(Multivector({b: 1}, r))}")
        out.records.append((f"p[{rep.k}]", "OK" if rep.holds else "FAIL"))
    return out


def cmd_exp_ft(args) -> Output:
    m = _read_matrix(args)
    order = _nonneg(args.order if args.order is not None else 5, "--order")
    series = exp_ft(m, order)
    out = Output()
    for n in range(order + 1):
        out.lines.append(f"t^{n}: {series[n]}")
        for i in range(m.n):
            for j in range(m.n):
                out.records.append((f"exp[{n}][{i + 1},{j + 1}]", render_coeff(series[n][i, j])))
    return out


def cmd_schur(args) -> Output:
    lam = _partition(args)
    r = _rank_for(lam, args)
    p = schur_jacobi_trudi(lam, r)
    out = Output()
    out.lines.append(str(p))
    out.records = [(f"coeff[{MultiPoly({mono: 1}, p.alphabet)}]", render_coeff(c))
                   for mono, c in p.sorted_terms()]
    return out


def cmd_giambelli(args) -> Output:
    out = Output()
    if args.partition is not None:
        lam = _partition(args)
        cases = [(lam, _rank_for(lam, args))]
    else:
        r = _need(args.rank, "--rank (or --partition)")
        if r < 1:
            raise InputError(f"--rank must be positive, got {r}")
        w = _nonneg(args.order if args.order is not None else 4, "--order")
        cases = [(lam, r) for lam in partitions_up_to(w, r)]
    for lam, r in cases:
        ok = giambelli_verify(lam, r)
        blade = Multivector({wedge_from_partition(lam, r).blade: 1}, r + lam[1])
        tag = "OK" if ok else "FAIL"
        out.lines.append(f"{tag}: Delta_({lam})(H_{r}) [b]_0 = {render_multivector(blade)}")
        out.records.append((f"giambelli[{lam};r={r}]", tag))
        if not ok:
            out.status = FALSIFIED
    return out


def _gamma(args, star: bool) -> Output:
    lam = _partition(args)
    r = _rank_for(lam, args)
    order = _nonneg(args.order if args.order is not None else 3, "--order")
    L = (gamma_star_r if star else gamma_r)(lam, r, order)
    name = "Gamma*" if star else "Gamma"
    out = Output()
    out.lines.append(f"{name}_{r}(t) Delta_({lam}) = {L}")
    out.records = [(f"t[{k}]", render_coeff(c)) for k, c in sorted(L.terms().items())]
    out.records.append(("order", str(L.order)))
    return out


def cmd_gamma(args) -> Output:
    return _gamma(args, False)


def cmd_gamma_star(args) -> Output:
    return _gamma(args, True)


def cmd_converge(args) -> Output:
    lam = _partition(args)
    r_min = max(lam.length, 1)
    r_max = args.rank if args.rank is not None else r_min + 2
    if r_max < r_min:
        raise InputError(f"--rank {r_max} is below the length of {lam}")
    order = _nonneg(args.order if args.order is not None else 3, "--order")
    rep = convergence_check(lam, order, r_min, r_max)
    out = Output(lines=rep.lines())
    for row in rep.rows:
        key = f"{'gamma-star' if row.star else 'gamma'}[r={row.r}]"
        out.records.append((key + ".oracle", "yes" if row.matches_oracle else "no"))
        if row.stabilizes is not None:
            out.records.append((key + ".stable", "yes" if row.stabilizes else "no"))
    if not rep.ok:
        out.status = FALSIFIED
    return out


COMMANDS = {
    "charpoly": (cmd_charpoly, "characteristic polynomial E(t) = det(1 - f t) from the top exterior power"),
    "hs-apply": (cmd_hs_apply, "D_0 u, ..., D_n u for D(t) = wedge(sum f^i t^i)"),
    "ch-verify": (cmd_ch_verify, "check that p_k(D) vanishes where it should"),
    "exp-ft": (cmd_exp_ft, "exp(f t) through t^n via the characteristic ODE"),
    "schur": (cmd_schur, "Jacobi-Trudi determinant in e_1..e_r"),
    "giambelli": (cmd_giambelli, "check Delta_lambda(H_r) [b]_0 = [b]_lambda"),
    "gamma": (cmd_gamma, "Gamma_r(t) applied to Delta_lambda(H_r)"),
    "gamma-star": (cmd_gamma_star, "Gamma*_r(t) applied to Delta_lambda(H_r)"),
    "converge": (cmd_converge, "compare Gamma_r, Gamma*_r with the differential-operator formulas"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hasse-schmidt", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for name, (_, helptext) in COMMANDS.items():
        p = sub.add_parser(name, help=helptext, description=helptext)
        p.add_argument("input", nargs="?", help="matrix file ('-' or omitted: standard input)")
        p.add_argument("--rank", "-r", type=int, help="rank r")
        p.add_argument("--order", "-n", type=int, help="truncation order")
        p.add_argument("--partition", help="partition such as 3,1,1")
        p.add_argument("--k", type=int, help="index k of p_k(D)")
        p.add_argument("--format", choices=("plain", "records"), default="plain")
        if name == "hs-apply":
            p.add_argument("--vector", "-u", default="b1", help="multivector such as 'b1^b2 + 2*b3'")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fn = COMMANDS[args.command][0]
    try:
        out = fn(args)
    except ValueError as exc:   # InputError, ParseError, RankError, ...
        print(f"error: {exc}", file=sys.stderr)
        return MALFORMED
    sys.stdout.write(out.render(args.format))
    return out.status


if __name__ == "__main__":
    sys.exit(main())
