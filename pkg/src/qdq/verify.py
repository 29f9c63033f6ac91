"""Self-check suites behind the ``verify`` CLI subcommand.

Each suite returns (name, ok, detail) tuples; the CLI prints one line per
check and exits nonzero when any fails.  These are runtime re-checks of the
same contracts the test suite pins, so a packaged install can be validated
without pytest.
"""

from __future__ import annotations

import itertools
from typing import Callable, Iterable, Optional

import numpy as np

from . import _tables, analytic, concat, dfs, mc, pauli, stabilizer, statevec
from .analytic import Alphabet, NoiseModel
from .stabilizer import ErrorKind

Check = tuple[str, bool, str]


def _check(name: str, ok: bool, detail: str = "") -> Check:
    return (name, bool(ok), detail)


# ---------------------------------------------------------------------------


def suite_pauli() -> list[Check]:
    checks = []
    ok = True
    for n in (1, 2, 3):
        for phase in range(4):
            for letters in itertools.product("IXYZ", repeat=n):
                text = ("", "i", "-", "-i")[phase] + "".join(letters)
                if str(pauli.parse(text)) != text:
                    ok = False
    checks.append(_check("pauli.round-trip-exhaustive-n<=3", ok))
    checks.append(
        _check(
            "pauli.product-ZZ*XX",
            str(pauli.multiply(pauli.parse("ZZ"), pauli.parse("XX"))) == "-YY",
        )
    )
    a, b = pauli.parse("XZZXI"), pauli.parse("IXZZX")
    checks.append(_check("pauli.commutes-generators", pauli.commutes(a, b)))
    square_ok = all(
        pauli.multiply(p, p).x == 0 and pauli.multiply(p, p).z == 0
        for p in (pauli.parse(s) for s in ("X", "iY", "-ZZ", "XYZI"))
    )
    checks.append(_check("pauli.squares-to-phase", square_ok))
    return checks


def suite_stabilizer() -> list[Check]:
    checks = []
    for name in stabilizer.builtin_names():
        report = stabilizer.validate(stabilizer.builtin(name))
        checks.append(_check(f"stabilizer.validate-{name}", report.valid,
                             "; ".join(report.failures)))
    rep3 = stabilizer.builtin("repetition-3")
    checks.append(
        _check(
            "stabilizer.syndrome-rep3-XII",
            stabilizer.syndrome(rep3, pauli.parse("XII")) == (1, 1),
        )
    )
    checks.append(
        _check(
            "stabilizer.classify-rep3-XXX-logical",
            stabilizer.classify(rep3, pauli.parse("XXX")).kind is ErrorKind.LOGICAL,
        )
    )
    qd6 = concat.concatenated("qd6").code
    checks.append(
        _check(
            "stabilizer.syndrome-qd6-XIIIII",
            stabilizer.syndrome(qd6, pauli.parse("XIIIII")) == (0, 0, 0, 1, 1),
        )
    )
    return checks


def suite_dfs() -> list[Check]:
    checks = []
    group = dfs.AbelianErrorGroup.from_strings(["II", "XX"])
    plus, minus = dfs.characters(group)
    proj_plus = dfs.projector(group, plus)
    proj_minus = dfs.projector(group, minus)
    checks.append(
        _check(
            "dfs.projector-idempotent",
            np.allclose(proj_plus @ proj_plus, proj_plus, atol=1e-12),
        )
    )
    checks.append(
        _check(
            "dfs.projectors-resolve-identity",
            np.allclose(proj_plus + proj_minus, np.eye(4), atol=1e-12),
        )
    )
    basis = dfs.df_basis(group, plus)
    b00 = statevec.state_from_terms(2, [("00", 1), ("11", 1)])
    b01 = statevec.state_from_terms(2, [("01", 1), ("10", 1)])
    span_ok = (
        len(basis) == 2
        and statevec.states_equal_up_to_phase(basis[0], b00)
        and statevec.states_equal_up_to_phase(basis[1], b01)
    )
    checks.append(_check("dfs.plus-basis-span", span_ok))
    cross = (b00 + statevec.state_from_terms(2, [("00", 1), ("11", -1)])) / np.sqrt(2)
    checks.append(
        _check(
            "dfs.cross-irrep-not-invariant",
            not statevec.dfs_invariance(cross, group, plus),
        )
    )
    code = dfs.as_stabilizer_code(group, plus)
    same = (
        code.generators == stabilizer.builtin("dfs-2").generators
        and code.passive_mask == (True,)
    )
    checks.append(_check("dfs.plus-exports-passive-code", same))
    return checks


def suite_concat() -> list[Check]:
    checks = []
    expected_counts = {"qd6": (4, 8), "dq6": (16, 2), "qd10": (16, 32), "dq10": (256, 2)}
    for cid, (n_sets, per_set) in expected_counts.items():
        cc = concat.concatenated(cid)
        sizes = {len(s) for s in cc.equivalence.sets}
        checks.append(
            _check(
                f"concat.counts-{cid}",
                len(cc.equivalence.sets) == n_sets and sizes == {per_set},
                f"got {len(cc.equivalence.sets)} sets, sizes {sizes}",
            )
        )
        report = stabilizer.validate(cc.code)
        checks.append(_check(f"concat.representatives-valid-{cid}", report.valid,
                             "; ".join(report.failures)))

    for cid in ("qd6", "dq6", "qd10", "dq10"):
        cc = concat.concatenated(cid)
        fixture = _tables.GENERATOR_CLASSES[cid]
        built_passive = {
            frozenset(map(str, c.representatives)) for c in cc.classes if c.passive
        }
        want_passive = {frozenset(reps) for reps in fixture["passive"]}
        active_canonicals = {str(c.representative) for c in cc.classes if not c.passive}
        want_active = {reps[0] for reps in fixture["active"]}
        ok = built_passive == want_passive and active_canonicals == want_active
        if cid == "qd6":
            built_active = {
                frozenset(map(str, c.representatives))
                for c in cc.classes
                if not c.passive
            }
            ok = ok and built_active == {
                frozenset(
                    ["ZZZZII", "-YYZZII", "-ZZYYII", "YYYYII"]
                ),
                frozenset(["ZZIIZZ", "-YYIIZZ", "-ZZIIYY", "YYIIYY"]),
            }
        checks.append(_check(f"concat.generators-{cid}", ok))

    for cid, fixture_sets in (("qd6", _tables.EQUIV_SETS_QD6), ("dq6", _tables.EQUIV_SETS_DQ6)):
        cc = concat.concatenated(cid)
        built = {frozenset(map(str, s)) for s in cc.equivalence.sets}
        want = {frozenset(s) for s in fixture_sets}
        checks.append(_check(f"concat.equivalence-{cid}", built == want))

    # Generator degeneracy: same syndrome bit from every representative.
    for cid in ("qd6", "qd10"):
        cc = concat.concatenated(cid)
        errors = [e for s in cc.equivalence.sets for e in s]
        ok = True
        for gclass in cc.classes:
            for error in errors:
                bits = {pauli.commutes(rep, error) for rep in gclass.representatives}
                if len(bits) != 1:
                    ok = False
        checks.append(_check(f"concat.generator-degeneracy-{cid}", ok))

    # Passive errors form exactly one equivalence set, pairwise degenerate.
    for cid in ("qd6", "dq6", "qd10", "dq10"):
        cc = concat.concatenated(cid)
        in_sets = any(
            set(cc.passive) == set(s) for s in cc.equivalence.sets
        )
        degenerate = all(
            stabilizer.are_degenerate(cc.code, a, b)
            for a, b in itertools.combinations(cc.passive, 2)
        )
        checks.append(_check(f"concat.passive-single-set-{cid}", in_sets and degenerate))

    effs = {
        "qd6": ("1", "2/5"),
        "dq6": ("1", "4/5"),
        "qd10": ("1", "4/9"),
        "dq10": ("1", "8/9"),
    }
    for cid, (phi_s, phip_s) in effs.items():
        cc = concat.concatenated(cid)
        phi, phip = concat.hamming_efficiency(
            cc.equivalence, cc.spec.n_cc, cc.spec.k_cc
        )
        checks.append(
            _check(f"concat.efficiency-{cid}", (str(phi), str(phip)) == (phi_s, phip_s),
                   f"phi={phi} phi'={phip}")
        )
    return checks


def suite_codewords(code_filter: Optional[str] = None) -> list[Check]:
    checks = []
    pair0 = statevec.state_from_terms(2, [("00", 1), ("11", 1)])
    pair1 = statevec.state_from_terms(2, [("01", 1), ("10", 1)])
    expectations = {
        "qd6": (
            _kron(pair0, pair0, pair0),
            _kron(pair1, pair1, pair1),
        ),
        "dq6": (
            statevec.state_from_terms(6, [("000000", 1), ("111111", 1)]),
            statevec.state_from_terms(6, [("000111", 1), ("111000", 1)]),
        ),
        "qd10": _expected_qd10(),
        "dq10": _expected_dq10(),
    }
    for cid, (want0, want1) in expectations.items():
        if code_filter and cid != code_filter:
            continue
        got0, got1 = statevec.codewords(cid)
        ok0 = statevec.states_equal_up_to_phase(got0, want0)
        ok1 = statevec.states_equal_up_to_phase(got1, want1)
        detail = ""
        if not (ok0 and ok1):
            bad = got0 - want0 if not ok0 else got1 - want1
            detail = f"first failing amplitude index {int(np.argmax(np.abs(bad)))}"
        checks.append(_check(f"codewords.expansion-{cid}", ok0 and ok1, detail))

        cc = concat.concatenated(cid)
        ok = True
        for gclass in cc.classes:
            for rep in gclass.representatives:
                for w in (got0, got1):
                    if abs(statevec.expectation(w, rep) - 1.0) > 1e-9:
                        ok = False
        checks.append(_check(f"codewords.generator-eigenvalues-{cid}", ok))
    return checks


def _kron(*states: np.ndarray) -> np.ndarray:
    out = states[0]
    for s in states[1:]:
        out = np.kron(out, s)
    return out


def _expected_qd10() -> tuple[np.ndarray, np.ndarray]:
    pair = {
        "0": statevec.state_from_terms(2, [("00", 1), ("11", 1)]),
        "1": statevec.state_from_terms(2, [("01", 1), ("10", 1)]),
    }

    def build(terms):
        total = np.zeros(1 << 10, dtype=np.complex128)
        for bits, sign in terms:
            total += sign * _kron(*(pair[b] for b in bits))
        return total / np.linalg.norm(total)

    return build(_tables.FIVE_QUBIT_ZERO_TERMS), build(_tables.FIVE_QUBIT_ONE_TERMS)


def _expected_dq10() -> tuple[np.ndarray, np.ndarray]:
    w0 = statevec.state_from_terms(5, _tables.FIVE_QUBIT_ZERO_TERMS)
    w1 = statevec.state_from_terms(5, _tables.FIVE_QUBIT_ONE_TERMS)
    zero = (np.kron(w0, w0) + np.kron(w1, w1)) / np.sqrt(2)
    one = (np.kron(w0, w1) + np.kron(w1, w0)) / np.sqrt(2)
    return zero, one


def suite_kl() -> list[Check]:
    checks = []
    kl5 = statevec.codewords("knill-laflamme-5")
    errors = [pauli.identity(5)] + [
        pauli.single(5, q, letter) for letter in "XYZ" for q in range(5)
    ]
    checks.append(_check("kl.five-qubit-all-single-errors", bool(statevec.kl_check(kl5, errors))))

    rep3 = statevec.codewords("repetition-3")
    flips = [pauli.identity(3)] + [pauli.single(3, q, "X") for q in range(3)]
    checks.append(_check("kl.rep3-bitflips", bool(statevec.kl_check(rep3, flips))))
    with_z = flips + [pauli.single(3, 0, "Z")]
    result = statevec.kl_check(rep3, with_z)
    checks.append(
        _check("kl.rep3-z-fails-with-witness", not result.ok and result.witness is not None)
    )
    return checks


def suite_analytic() -> list[Check]:
    checks = []
    ps = np.linspace(0.0, 1.0, 11)
    rep3_ok = all(
        abs(analytic.standalone_pf("rep3", 0.0, p) - (3 * p**2 - 2 * p**3)) < 1e-12
        and abs(analytic.standalone_pf("rep3", 1.0, p) - p) < 1e-12
        for p in ps
    )
    checks.append(_check("analytic.rep3-limits", rep3_ok))

    worst = max(
        abs(
            analytic.cross_block_correlation(float(p), float(m))
            - analytic.cross_block_closed_form(float(p), float(m))
        )
        for p in np.linspace(0, 1, 21)
        for m in np.linspace(0, 1, 21)
    )
    checks.append(_check("analytic.cross-block-identity", worst < 1e-12, f"worst={worst:g}"))

    grid = np.arange(0.005, 0.5, 0.005)
    order_ok = True
    for fam in (("qd6", "dq6"), ("qd10", "dq10")):
        qd = analytic.code_failure(fam[0])
        dq = analytic.code_failure(fam[1])
        for p in grid:
            if dq(0.0, float(p)) > qd(0.0, float(p)) + 1e-12:
                order_ok = False
            if qd(0.75, float(p)) > dq(0.75, float(p)) + 1e-12:
                order_ok = False
    checks.append(_check("analytic.crossover-orderings", order_ok))

    for cid, variant, want, tol in (
        ("qd6", "literal", 0.1293, 5e-4),
        ("dq6", "literal", 0.2252, 5e-4),
        ("qd10", "table", 0.0298, 1e-3),
        ("dq10", "literal", 0.0579, 1e-3),
    ):
        thr = analytic.pseudothreshold(analytic.failure_curve(cid, 0.0, variant))
        checks.append(
            _check(
                f"analytic.threshold-{cid}-{variant}",
                thr is not None and abs(thr - want) <= tol,
                f"got {thr}",
            )
        )
    printed = analytic.pseudothreshold(analytic.failure_curve("dq10", 0.0, "printed"))
    checks.append(_check("analytic.dq10-printed-no-crossing", printed is None))
    return checks


def suite_mc(shots: int = 100_000, seed: int = 2024) -> list[Check]:
    checks = []
    for cid in ("qd6", "dq6"):
        worst = 0.0
        for p in (0.05, 0.1, 0.2):
            for m in (0.0, 0.5, 0.75):
                cfg = mc.SampleConfig(NoiseModel(p, m, Alphabet.BITFLIP), cid, shots, seed)
                rep = mc.compare(cfg, mc.analytic_reference(cid, cfg.model))
                worst = max(worst, rep.z)
        checks.append(_check(f"mc.analytic-agreement-{cid}", worst <= 4.0, f"max z={worst:.2f}"))
    return checks


SUITES: dict[str, Callable[..., list[Check]]] = {
    "pauli": suite_pauli,
    "stabilizer": suite_stabilizer,
    "dfs": suite_dfs,
    "concat": suite_concat,
    "codewords": suite_codewords,
    "kl": suite_kl,
    "analytic": suite_analytic,
    "mc": suite_mc,
}


def run_suites(
    names: Optional[Iterable[str]] = None,
    code_filter: Optional[str] = None,
    mc_shots: int = 100_000,
) -> list[Check]:
    selected = list(names) if names else list(SUITES)
    results: list[Check] = []
    for name in selected:
        if name not in SUITES:
            valid = ", ".join(SUITES)
            raise ValueError(f"unknown suite {name!r}; valid: {valid}")
        if name == "codewords":
            results.extend(suite_codewords(code_filter))
        elif name == "mc":
            results.extend(suite_mc(shots=mc_shots))
        else:
            results.extend(SUITES[name]())
    return results
