"""Command-line front end.

Exit codes: 0 success, 1 internal check failure, 2 usage error.  All output
is CSV or JSON on stdout (or --out); CSV bytes are deterministic for fixed
flags.  Variant policy for the ten-qubit curves: ``literal`` is the full
recursion (default), ``printed`` the simplified outer form that never
crosses the identity line for dq10, ``table`` the combination matching the
table1 threshold digits (differs from literal only for qd10).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import _tables, analytic, concat, dfs, mc, stabilizer, verify
from .analytic import Alphabet, NoiseModel


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(payload: object, out: Optional[str]) -> None:
    _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", out)


def _code_json(code: stabilizer.StabilizerCode) -> dict:
    return {
        "name": code.name,
        "n": code.n,
        "k": code.k,
        "generators": [str(g) for g in code.generators],
        "logical_x": [str(p) for p in code.logical_x],
        "logical_z": [str(p) for p in code.logical_z],
        "passive": list(code.passive_mask),
    }


def _efficiency_json(value) -> dict:
    if isinstance(value, Fraction):
        return {"value": float(value), "exact": str(value)}
    return {"value": float(value), "exact": None}


# ---------------------------------------------------------------------------
# Subcommand handlers
# ---------------------------------------------------------------------------


def _cmd_codes(args: argparse.Namespace) -> int:
    if args.action == "list":
        _emit_json(stabilizer.builtin_names(), args.out)
    else:
        _emit_json(_code_json(stabilizer.builtin(args.name)), args.out)
    return 0


def _cmd_concat(args: argparse.Namespace) -> int:
    order = concat.Order(args.order)
    cc = concat.build(
        stabilizer.builtin(args.outer), stabilizer.builtin(args.inner), order
    )
    phi, phi_prime = concat.hamming_efficiency(
        cc.equivalence, cc.spec.n_cc, cc.spec.k_cc
    )
    payload = _code_json(cc.code)
    payload.update(
        {
            "generator_classes": [
                {
                    "representatives": [str(r) for r in c.representatives],
                    "passive": c.passive,
                }
                for c in cc.classes
            ],
            "equivalence_class": [[str(e) for e in s] for s in cc.equivalence.sets],
            "phi": _efficiency_json(phi),
            "phi_prime": _efficiency_json(phi_prime),
        }
    )
    _emit_json(payload, args.out)
    return 0


def _cmd_dfs(args: argparse.Namespace) -> int:
    group = dfs.AbelianErrorGroup.from_strings(args.elements.split(","))
    chars = dfs.characters(group)
    payload = {
        "n": group.n,
        "elements": [str(g) for g in group.elements],
        "characters": [],
    }
    for index, chi in enumerate(chars):
        if args.character is not None and index != args.character:
            continue
        basis = dfs.df_basis(group, chi)
        payload["characters"].append(
            {
                "index": index,
                "signs": list(chi.signs(group)),
                "basis": [[[a.real, a.imag] for a in vec] for vec in basis],
            }
        )
    _emit_json(payload, args.out)
    return 0


def _cmd_fidelity(args: argparse.Namespace) -> int:
    pf = analytic.code_failure(args.code, args.variant)
    steps = int(round((args.pmax - args.pmin) / args.step))
    lines = ["p,mu,pf,fe"]
    for i in range(steps + 1):
        p = args.pmin + i * args.step
        value = pf(args.mu, p)
        lines.append(
            f"{p:.6g},{args.mu:.6g},{value:.6g},{1.0 - value:.6g}"
        )
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_threshold(args: argparse.Namespace) -> int:
    base = analytic.failure_curve(args.code, args.mu, args.variant)
    per_depth = {}
    for depth in range(1, args.depth + 1):
        thr = analytic.pseudothreshold(analytic.depth_recursion(base, depth))
        per_depth[str(depth)] = "no-crossing" if thr is None else thr
    payload = {
        "code": args.code,
        "mu": args.mu,
        "variant": args.variant,
        "depth": args.depth,
        "p_thres": per_depth[str(args.depth)],
        "per_depth": per_depth,
    }
    _emit_json(payload, args.out)
    return 0


def _cmd_mc(args: argparse.Namespace) -> int:
    alphabet = (
        Alphabet(args.alphabet) if args.alphabet else mc.default_alphabet(args.code)
    )
    model = NoiseModel(args.p, args.mu, alphabet)
    config = mc.SampleConfig(model, args.code, args.shots, args.seed)
    report = mc.compare(config, mc.analytic_reference(args.code, model))
    payload = {
        "code": args.code,
        "p": args.p,
        "mu": args.mu,
        "alphabet": alphabet.value,
        "pf_hat": report.estimate.pf_hat,
        "stderr": report.estimate.stderr,
        "shots": args.shots,
        "seed": args.seed,
        "analytic": report.analytic,
        "z": report.z,
        "backend": report.estimate.backend,
    }
    _emit_json(payload, args.out)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    names = [args.suite] if args.suite else None
    checks = verify.run_suites(names, code_filter=args.code, mc_shots=args.shots)
    failures = 0
    lines = []
    for name, ok, detail in checks:
        status = "PASS" if ok else "FAIL"
        failures += not ok
        suffix = f"  ({detail})" if detail and not ok else ""
        lines.append(f"[{status}] {name}{suffix}")
    lines.append(f"{len(checks) - failures}/{len(checks)} checks passed")
    _emit("\n".join(lines) + "\n", args.out)
    if failures:
        record = {"failed": [n for n, ok, _ in checks if not ok]}
        sys.stderr.write(json.dumps(record) + "\n")
        return 1
    return 0


def _cmd_table1(args: argparse.Namespace) -> int:
    codes = list(_tables.TABLE_CODES)
    phi_list = []
    phi_prime_list = []
    thresholds = []
    for cid, variant in zip(codes, _tables.TABLE_VARIANT):
        cc = concat.concatenated(cid)
        phi, phi_prime = concat.hamming_efficiency(
            cc.equivalence, cc.spec.n_cc, cc.spec.k_cc
        )
        phi_list.append(_efficiency_json(phi))
        phi_prime_list.append(_efficiency_json(phi_prime))
        thr = analytic.pseudothreshold(analytic.failure_curve(cid, 0.0, variant))
        thresholds.append({"value": thr, "variant": variant})
    payload = {
        "codes": codes,
        "e_type": list(_tables.TABLE_E_TYPE),
        "phi": phi_list,
        "phi_prime": phi_prime_list,
        "p_thres": thresholds,
    }
    _emit_json(payload, args.out)
    return 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _add_out(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", help="write output to this path instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qdq",
        description="Concatenated active/passive code construction and analysis",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    codes = sub.add_parser("codes", help="base code registry")
    codes_sub = codes.add_subparsers(dest="action", required=True)
    codes_list = codes_sub.add_parser("list", help="list built-in code names")
    _add_out(codes_list)
    codes_list.set_defaults(handler=_cmd_codes, action="list")
    codes_desc = codes_sub.add_parser("describe", help="JSON description of one code")
    codes_desc.add_argument("name")
    _add_out(codes_desc)
    codes_desc.set_defaults(handler=_cmd_codes, action="describe")

    conc = sub.add_parser("concat", help="build a concatenated code")
    conc_sub = conc.add_subparsers(dest="action", required=True)
    conc_build = conc_sub.add_parser("build", help="assemble and describe")
    conc_build.add_argument("--outer", required=True)
    conc_build.add_argument("--inner", required=True)
    conc_build.add_argument("--order", required=True, choices=["qd", "dq"])
    _add_out(conc_build)
    conc_build.set_defaults(handler=_cmd_concat)

    dfs_p = sub.add_parser("dfs", help="decoherence-free subspace construction")
    dfs_sub = dfs_p.add_subparsers(dest="action", required=True)
    dfs_build = dfs_sub.add_parser("build", help="characters and bases of a group")
    dfs_build.add_argument(
        "--elements", default="II,XX", help="comma-separated group elements"
    )
    dfs_build.add_argument("--character", type=int, default=None)
    _add_out(dfs_build)
    dfs_build.set_defaults(handler=_cmd_dfs)

    fid = sub.add_parser("fidelity", help="failure/fidelity curves")
    fid_sub = fid.add_subparsers(dest="action", required=True)
    sweep = fid_sub.add_parser("sweep", help="CSV sweep over p")
    sweep.add_argument("--code", required=True, choices=analytic.CODE_CURVE_IDS)
    sweep.add_argument("--mu", type=float, required=True)
    sweep.add_argument("--pmin", type=float, required=True)
    sweep.add_argument("--pmax", type=float, required=True)
    sweep.add_argument("--step", type=float, required=True)
    sweep.add_argument("--variant", default="literal", choices=analytic.VARIANTS)
    _add_out(sweep)
    sweep.set_defaults(handler=_cmd_fidelity)

    thr = sub.add_parser("threshold", help="pseudothreshold root finding")
    thr.add_argument("--code", required=True, choices=analytic.CODE_CURVE_IDS)
    thr.add_argument("--mu", type=float, default=0.0)
    thr.add_argument("--variant", default="literal", choices=analytic.VARIANTS)
    thr.add_argument("--depth", type=int, default=1)
    _add_out(thr)
    thr.set_defaults(handler=_cmd_threshold)

    mc_p = sub.add_parser("mc", help="Monte Carlo failure estimation")
    mc_sub = mc_p.add_subparsers(dest="action", required=True)
    run = mc_sub.add_parser("run", help="estimate and compare to the recursion")
    run.add_argument("--code", required=True, choices=analytic.CODE_CURVE_IDS)
    run.add_argument("--p", type=float, required=True)
    run.add_argument("--mu", type=float, required=True)
    run.add_argument("--shots", type=int, default=100_000)
    run.add_argument("--seed", type=int, default=2024)
    run.add_argument(
        "--alphabet",
        choices=[a.value for a in Alphabet],
        default=None,
        help="defaults per code family: bitflip for 6 qubits, depolarizing3 for 10",
    )
    _add_out(run)
    run.set_defaults(handler=_cmd_mc)

    ver = sub.add_parser("verify", help="run self-check suites")
    ver.add_argument("--suite", choices=list(verify.SUITES), default=None)
    ver.add_argument("--code", default=None, help="restrict codeword checks")
    ver.add_argument("--shots", type=int, default=100_000, help="MC suite shots")
    _add_out(ver)
    ver.set_defaults(handler=_cmd_verify)

    tab = sub.add_parser("table1", help="summary metrics for the four codes")
    _add_out(tab)
    tab.set_defaults(handler=_cmd_table1)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (ValueError, RuntimeError) as exc:
        sys.stderr.write(json.dumps({"error": str(exc)}) + "\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
