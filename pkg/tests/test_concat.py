import itertools
from fractions import Fraction

import numpy as np
import pytest

from qdq import _tables, concat, pauli, stabilizer, statevec
from qdq.concat import Order


@pytest.mark.parametrize(
    "args,want",
    [
        ((3, 1, 2, 1), (6, 1)),
        ((5, 1, 2, 1), (10, 1)),
        ((3, 1, 4, 2), (12, 2)),  # k_i does not divide n_o
        ((4, 2, 6, 2), (12, 2)),  # k_i divides n_o
    ],
)
def test_concat_size(args, want):
    assert concat.concat_size(*args) == want


def test_concat_size_domain_errors():
    with pytest.raises(ValueError):
        concat.concat_size(0, 1, 2, 1)
    with pytest.raises(ValueError):
        concat.concat_size(3, 4, 2, 1)


def test_lift_logical_dfs2():
    dfs2 = stabilizer.builtin("dfs-2")
    lifts = {
        label: [str(p) for p in concat.lift_logical(dfs2, label)]
        for label in "IXYZ"
    }
    assert lifts["I"] == ["II", "XX"]
    assert lifts["X"] == ["XI", "IX"]
    assert lifts["Y"] == ["YZ", "ZY"]
    assert lifts["Z"] == ["ZZ", "-YY"]


def test_lift_logical_rep3_x_has_four_realizations_acting_identically():
    rep3 = stabilizer.builtin("repetition-3")
    lifts = concat.lift_logical(rep3, "X")
    assert len(lifts) == 4
    assert str(lifts[0]) == "XXX"
    w0, w1 = statevec.codewords("repetition-3")
    for op in lifts:
        # Every realization is exactly the logical flip on the code space.
        assert np.allclose(statevec.apply_pauli(op, w0), w1, atol=1e-12)
        assert np.allclose(statevec.apply_pauli(op, w1), w0, atol=1e-12)


def test_lift_logical_realizations_act_identically_dfs2():
    dfs2 = stabilizer.builtin("dfs-2")
    w0, w1 = statevec.codewords("dfs-2")
    for label in "IXYZ":
        ops = concat.lift_logical(dfs2, label)
        for w in (w0, w1):
            images = [statevec.apply_pauli(op, w) for op in ops]
            for img in images[1:]:
                assert np.allclose(img, images[0], atol=1e-12)


def test_lift_logical_requires_k1():
    trivial = stabilizer.StabilizerCode(
        "t", 2, 2, (), (pauli.parse("XI"), pauli.parse("IX")),
        (pauli.parse("ZI"), pauli.parse("IZ")), ()
    )
    with pytest.raises(ValueError, match="k=1"):
        concat.lift_logical(trivial, "X")


# ---------------------------------------------------------------------------
# Generator classes
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("code_id", ["qd6", "dq6", "qd10", "dq10"])
def test_generator_class_structure_matches_reference(code_id):
    cc = concat.concatenated(code_id)
    fixture = _tables.GENERATOR_CLASSES[code_id]
    built_passive = [c for c in cc.classes if c.passive]
    built_active = [c for c in cc.classes if not c.passive]
    assert {frozenset(map(str, c.representatives)) for c in built_passive} == {
        frozenset(reps) for reps in fixture["passive"]
    }
    assert {str(c.representative) for c in built_active} == {
        reps[0] for reps in fixture["active"]
    }
    expected_mult = fixture.get("active_multiplicity", None)
    if expected_mult:
        assert all(len(c.representatives) == expected_mult for c in built_active)


def test_qd6_active_class_representatives_exact():
    cc = concat.concatenated("qd6")
    active = [c for c in cc.classes if not c.passive]
    got = {frozenset(map(str, c.representatives)) for c in active}
    assert got == {
        frozenset(["ZZZZII", "-YYZZII", "-ZZYYII", "YYYYII"]),
        frozenset(["ZZIIZZ", "-YYIIZZ", "-ZZIIYY", "YYIIYY"]),
    }


def test_dq_lifted_class_is_single_representative():
    for code_id, passive_rep in (("dq6", "XXXXXX"), ("dq10", "XXXXXXXXXX")):
        cc = concat.concatenated(code_id)
        passive = [c for c in cc.classes if c.passive]
        assert len(passive) == 1
        assert [str(p) for p in passive[0].representatives] == [passive_rep]


@pytest.mark.parametrize("code_id", ["qd6", "dq6", "qd10", "dq10"])
def test_one_representative_per_class_validates(code_id):
    cc = concat.concatenated(code_id)
    report = stabilizer.validate(cc.code)
    assert report.valid, report.failures
    assert len(cc.classes) == cc.spec.n_cc - cc.spec.k_cc


@pytest.mark.parametrize("code_id", ["qd6", "dq6", "qd10", "dq10"])
def test_generator_degeneracy_same_syndrome_on_all_correctable_errors(code_id):
    cc = concat.concatenated(code_id)
    errors = [e for s in cc.equivalence.sets for e in s]
    for gclass in cc.classes:
        for error in errors:
            bits = {pauli.commutes(rep, error) for rep in gclass.representatives}
            assert len(bits) == 1, (str(gclass.representative), str(error))


def test_class_representatives_have_plus_phase_leading():
    for code_id in ("qd6", "dq6", "qd10", "dq10"):
        cc = concat.concatenated(code_id)
        for gclass in cc.classes:
            assert gclass.representative.phase == 0


# ---------------------------------------------------------------------------
# Equivalence classes
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "code_id,n_sets,per_set",
    [("qd6", 4, 8), ("dq6", 16, 2), ("qd10", 16, 32), ("dq10", 256, 2)],
)
def test_equivalence_class_counts(code_id, n_sets, per_set):
    eq = concat.concatenated(code_id).equivalence
    assert len(eq.sets) == n_sets
    assert {len(s) for s in eq.sets} == {per_set}
    assert eq.total_elements == n_sets * per_set
    # Disjointness across sets (modulo phase).
    seen = set()
    for members in eq.sets:
        for e in members:
            key = (e.x, e.z)
            assert key not in seen
            seen.add(key)


def test_equivalence_sets_qd6_match_printed_listing():
    eq = concat.concatenated("qd6").equivalence
    got = {frozenset(map(str, s)) for s in eq.sets}
    want = {frozenset(s) for s in _tables.EQUIV_SETS_QD6}
    assert got == want


def test_equivalence_sets_dq6_match_printed_listing():
    eq = concat.concatenated("dq6").equivalence
    got = {frozenset(map(str, s)) for s in eq.sets}
    want = {frozenset(s) for s in _tables.EQUIV_SETS_DQ6}
    assert got == want


def test_equivalence_qd10_contains_signed_realizations():
    eq = concat.concatenated("qd10").equivalence
    texts = {frozenset(map(str, s)) for s in eq.sets}
    with_z = next(s for s in texts if "ZZIIIIIIII" in s)
    assert "-YYIIIIIIII" in with_z
    assert len(with_z) == 32


def test_within_set_degenerate_across_sets_not():
    for code_id in ("qd6", "dq6"):
        cc = concat.concatenated(code_id)
        sets = cc.equivalence.sets
        for members in sets:
            for a, b in itertools.combinations(members, 2):
                assert stabilizer.are_degenerate(cc.code, a, b)
        for s1, s2 in itertools.combinations(sets, 2):
            for a in s1:
                for b in s2:
                    assert not stabilizer.are_degenerate(cc.code, a, b)


def test_cross_set_non_degeneracy_sampled_ten_qubit():
    rng = np.random.default_rng(17)
    for code_id in ("qd10", "dq10"):
        cc = concat.concatenated(code_id)
        sets = cc.equivalence.sets
        for _ in range(1000):
            i, j = rng.integers(0, len(sets), size=2)
            a = sets[i][rng.integers(0, len(sets[i]))]
            b = sets[j][rng.integers(0, len(sets[j]))]
            assert stabilizer.are_degenerate(cc.code, a, b) == (i == j)


# ---------------------------------------------------------------------------
# Efficiencies, decoder tables, passive sets
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "code_id,phi,phi_prime",
    [
        ("qd6", Fraction(1), Fraction(2, 5)),
        ("dq6", Fraction(1), Fraction(4, 5)),
        ("qd10", Fraction(1), Fraction(4, 9)),
        ("dq10", Fraction(1), Fraction(8, 9)),
    ],
)
def test_hamming_efficiencies_exact(code_id, phi, phi_prime):
    cc = concat.concatenated(code_id)
    got_phi, got_phi_prime = concat.hamming_efficiency(
        cc.equivalence, cc.spec.n_cc, cc.spec.k_cc
    )
    assert isinstance(got_phi, Fraction) and got_phi == phi
    assert isinstance(got_phi_prime, Fraction) and got_phi_prime == phi_prime


def test_hamming_efficiency_trivial_case():
    eq = concat.EquivalenceClass(((pauli.identity(2),),))
    phi, phi_prime = concat.hamming_efficiency(eq, 2, 1)
    assert phi == 0 and phi_prime == 0


@pytest.mark.parametrize(
    "code_id,entries", [("qd6", 4), ("dq6", 16), ("qd10", 16), ("dq10", 256)]
)
def test_decoder_table_sizes_and_zero_entry(code_id, entries):
    cc = concat.concatenated(code_id)
    assert len(cc.table) == entries
    zero = (0,) * len(cc.code.generators)
    assert cc.table[zero] == pauli.identity(cc.spec.n_cc)


def test_decoder_corrections_share_set_syndrome():
    for code_id in ("qd6", "dq6"):
        cc = concat.concatenated(code_id)
        for syn, correction in cc.table.items():
            assert stabilizer.syndrome(cc.code, correction) == syn


def test_passive_sets():
    qd6 = concat.concatenated("qd6")
    got = {str(p) for p in qd6.passive}
    assert got == set(_tables.EQUIV_SETS_QD6[0])

    dq6 = concat.concatenated("dq6")
    assert {str(p) for p in dq6.passive} == {"IIIIII", "XXXXXX"}

    dq10 = concat.concatenated("dq10")
    assert {str(p) for p in dq10.passive} == {"I" * 10, "X" * 10}

    qd10 = concat.concatenated("qd10")
    assert len(qd10.passive) == 32
    for p in qd10.passive:
        assert set(p.letters) <= {"I", "X"}


@pytest.mark.parametrize("code_id", ["qd6", "dq6", "qd10", "dq10"])
def test_passive_set_is_single_equivalence_set_of_stabilizer_errors(code_id):
    cc = concat.concatenated(code_id)
    matches = [s for s in cc.equivalence.sets if set(s) == set(cc.passive)]
    assert len(matches) == 1
    for error in cc.passive:
        kind = stabilizer.classify(cc.code, error).kind
        assert kind is stabilizer.ErrorKind.STABILIZER
    # Generated by the passive generator classes alone.
    passive_code = stabilizer.StabilizerCode(
        "passive-part",
        cc.spec.n_cc,
        cc.spec.n_cc - sum(c.passive for c in cc.classes),
        tuple(c.representative for c in cc.classes if c.passive),
        (),
        (),
        tuple(True for c in cc.classes if c.passive),
    )
    generated = {
        (e.x, e.z) for e in stabilizer.stabilizer_group(passive_code)
    }
    assert {(e.x, e.z) for e in cc.passive} == generated


def test_build_rejects_k2_inner():
    outer = stabilizer.builtin("repetition-3")
    inner = stabilizer.StabilizerCode(
        "k2", 4, 2, (pauli.parse("XXXX"), pauli.parse("ZZZZ")),
        (pauli.parse("XIXI"), pauli.parse("IXXI")),
        (pauli.parse("ZIZI"), pauli.parse("IZZI")), (False, False)
    )
    with pytest.raises(ValueError, match="k=1"):
        concat.make_spec(outer, inner, Order.QD)


def test_registry_rejects_unknown_ids():
    with pytest.raises(ValueError, match="qd6"):
        concat.concatenated("qd7")
