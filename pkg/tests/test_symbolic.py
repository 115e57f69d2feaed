import copy
import random

import pytest

from homalt.core import hom_associator, random_element
from homalt.dsl import parse_identity, parse_monomial, parse_term, term_to_dsl
from homalt.linalg import format_scalar, parse_scalar, qq
from homalt.symbolic import (
    HomMonomial,
    HomPolynomial,
    build_instance,
    check_identity_on_algebra,
    evaluate_polynomial,
    evaluate_raw,
    expand_associator,
    hom_teichmuller_terms,
    identity_defect,
    identity_registry,
    load_certificates,
    mono,
    multilinearize,
    normalize_random,
    normalize_raw,
    poly_commutator,
    poly_mul,
    ra_polynomial,
    specialize_classical,
    teichmuller_f,
    var,
    verify_all_certificates,
    verify_certificate,
    verify_hom_teichmuller,
)


def random_raw_tree(rng, depth=0):
    r = rng.random()
    if depth > 4 or r < 0.3:
        return ("v", rng.choice("xyz"), rng.randrange(3))
    if r < 0.55:
        return ("a", random_raw_tree(rng, depth + 1))
    return ("m", random_raw_tree(rng, depth + 1), random_raw_tree(rng, depth + 1))


def rename_leaves(p, mapping):
    """A fresh polynomial with variable leaves renamed via mapping."""

    def go(t):
        if t[0] == "v":
            return ("v", mapping.get(t[1], t[1]), t[2])
        return ("m", go(t[1]), go(t[2]))

    return HomPolynomial({HomMonomial(go(m.tree)): c for m, c in p.terms()})


# -- polynomials and monomials -------------------------------------------------


def test_associator_expands_to_two_signed_terms():
    x, y, z = var("x"), var("y"), var("z")
    p = expand_associator(x, y, z)
    assert p.num_terms() == 2
    left = mono("x").mul(mono("y")).mul(mono("z", 1))
    right = mono("x", 1).mul(mono("y").mul(mono("z")))
    assert p.coefficient(left) == 1
    assert p.coefficient(right) == -1
    # free monomials do not merge just because an algebra law would equate them
    assert expand_associator(x, y, y).num_terms() == 2


def test_linearized_right_alternative_polynomial():
    p = ra_polynomial()
    assert p.num_terms() == 4
    x, y, z = var("x"), var("y"), var("z")
    assert p == expand_associator(x, y, z) + expand_associator(x, z, y)


def test_polynomial_arithmetic():
    x, y = var("x"), var("y")
    p = poly_mul(x, y) - poly_mul(y, x)
    assert p == poly_commutator(x, y)
    assert (p - p).is_zero()
    assert (-p) + p == HomPolynomial.zero()
    assert p.scale(0).is_zero()
    assert p.scale(qq(1, 2)) + p.scale(qq(1, 2)) == p
    assert p.alpha(2) == rename_leaves(p, {}).alpha(1).alpha(1)
    assert sorted(p.variables()) == ["x", "y"]


def test_monomial_ordering_is_deterministic():
    ms = [mono("x").mul(mono("y")), mono("x", 2), mono("x"), mono("y").mul(mono("x"))]
    assert sorted(ms) == sorted(reversed(ms))
    assert mono("x") < mono("x").mul(mono("y"))


# -- normalization of raw trees ------------------------------------------------


def test_normalize_raw_pushes_alpha_to_leaves():
    t = ("a", ("m", ("v", "x", 0), ("a", ("v", "y", 1))))
    assert normalize_raw(t) == ("m", ("v", "x", 1), ("v", "y", 3))


def test_random_rewrite_order_is_confluent():
    rng = random.Random(101)
    for _ in range(200):
        t = random_raw_tree(rng)
        assert normalize_random(t, rng) == normalize_raw(t)


def test_raw_evaluation_is_the_oracle_for_normal_forms(a230):
    rng = random.Random(55)
    for _ in range(100):
        t = random_raw_tree(rng)
        env = {v: random_element(a230, rng) for v in "xyz"}
        p = HomPolynomial({HomMonomial(normalize_raw(t)): 1})
        assert evaluate_polynomial(a230, p, env) == evaluate_raw(a230, t, env)


# -- evaluation ----------------------------------------------------------------


def test_evaluate_polynomial_matches_hom_associator(a230):
    p = expand_associator(var("x"), var("y"), var("z"))
    e, u = a230.basis_element(0), a230.basis_element(1)
    env = {"x": e, "y": e, "z": u}
    got = evaluate_polynomial(a230, p, env)
    assert got == hom_associator(a230, e, e, u)
    assert repr(got) == "9*v"
    assert evaluate_polynomial(a230, HomPolynomial.zero(), {}).is_zero()


def test_evaluate_polynomial_guards(a230, non_multiplicative):
    p = expand_associator(var("x"), var("y"), var("z"))
    with pytest.raises(ValueError, match="unassigned"):
        evaluate_polynomial(a230, p, {"x": a230.basis_element(0)})
    env = {v: non_multiplicative.basis_element(0) for v in "xyz"}
    with pytest.raises(ValueError, match="multiplicative"):
        evaluate_polynomial(non_multiplicative, p, env)


# -- the Hom-Teichmuller polynomial ---------------------------------------------


def test_teichmuller_expands_to_ten_terms_and_cancels():
    w, x, y, z = var("w"), var("x"), var("y"), var("z")
    terms = hom_teichmuller_terms(w, x, y, z)
    assert len(terms) == 5
    assert sum(t.num_terms() for t in terms) == 10
    assert teichmuller_f(w, x, y, z).is_zero()
    assert verify_hom_teichmuller()


def test_teichmuller_cancellation_needs_every_term():
    w, x, y, z = var("w"), var("x"), var("y"), var("z")
    terms = hom_teichmuller_terms(w, x, y, z)
    partial = HomPolynomial.zero()
    for t in terms[:-1]:
        partial = partial + t
    assert partial.num_terms() == 2
    assert partial == -terms[-1]


def test_teichmuller_vanishes_under_any_substitution():
    x = var("x")
    assert teichmuller_f(x, x, x, x).is_zero()
    y = poly_mul(x, x.alpha(1))
    assert teichmuller_f(x, y, x, y).is_zero()


# -- the identity registry ------------------------------------------------------


def test_registry_contents():
    reg = identity_registry()
    assert list(reg) == [
        "assoc-shift",
        "assoc-shift-linear",
        "commutator-exchange",
        "middle-square",
        "right-moufang",
        "associator-tail",
    ]
    for name, idf in reg.items():
        assert idf.name == name
        assert set(idf.variables) == set(idf.degrees)
        assert not idf.defect().is_zero()  # none are free identities


def test_registry_identities_hold(twisted):
    for name, idf in identity_registry().items():
        rep = check_identity_on_algebra(twisted, idf.lhs, idf.rhs, idf.degrees, name)
        assert rep.passed, name
        assert rep.note == "polarized sweep over all basis tuples"


def test_registry_identities_hold_classically(albert):
    # alpha = Id turns each identity into its ordinary right-alternative form
    for name, idf in identity_registry().items():
        lhs = specialize_classical(idf.lhs)
        rhs = specialize_classical(idf.rhs)
        rep = check_identity_on_algebra(albert, lhs, rhs, idf.degrees, name)
        assert rep.passed, name


def test_specialize_classical_strips_every_alpha():
    for idf in identity_registry().values():
        sp = specialize_classical(idf.defect())
        for m, _ in sp.terms():
            assert all(k == 0 for (_, k) in m.leaves())


def test_sign_flip_is_caught(a230):
    idf = identity_registry()["middle-square"]
    rep = check_identity_on_algebra(a230, idf.lhs, -idf.rhs, idf.degrees, "corrupt")
    assert not rep.passed
    assert rep.witness == (("x", (0,)), ("y", (0, 0)), ("z", (1,)))
    assert not rep.lhs.is_zero()


def test_cross_linearization_of_assoc_shift():
    reg = identity_registry()
    lin, groups = multilinearize(reg["assoc-shift"].defect(), reg["assoc-shift"].degrees)
    assert groups == {"x": ["x"], "y": ["y#0", "y#1"], "z": ["z"]}
    target = reg["assoc-shift-linear"].defect()
    assert rename_leaves(lin, {"y#0": "w", "y#1": "y"}) == target
    assert rename_leaves(lin, {"y#0": "y", "y#1": "w"}) == target


def test_check_identity_rejects_wrong_degrees(a230):
    idf = identity_registry()["middle-square"]
    with pytest.raises(ValueError, match="not homogeneous"):
        check_identity_on_algebra(a230, idf.lhs, idf.rhs, {"x": 1, "y": 1, "z": 1})


def test_identity_defect_lookup():
    assert identity_defect("middle-square") == identity_registry()["middle-square"].defect()
    with pytest.raises(ValueError, match="unknown identity"):
        identity_defect("nonsense")


# -- certificates ----------------------------------------------------------------


def test_shipped_certificates_all_verify():
    reports = verify_all_certificates()
    assert sorted(reports) == sorted(identity_registry())
    for name, rep in reports.items():
        assert rep.passed, name
        assert rep.law == "certificate:%s" % name


def test_certificate_instances_are_individually_nonzero():
    data = load_certificates()
    for entry in data.values():
        for inst in entry["instances"]:
            coeff, poly = build_instance(inst)
            assert coeff != 0
            assert not poly.is_zero()


def test_every_coefficient_corruption_is_detected():
    data = load_certificates()
    for name, entry in data.items():
        for i in range(len(entry["instances"])):
            bad = copy.deepcopy(entry["instances"])
            bad[i] = dict(
                bad[i], coeff=format_scalar(parse_scalar(bad[i]["coeff"]) + 1)
            )
            ok, residue = verify_certificate(name, bad)
            assert not ok
            assert not residue.is_zero()


def test_build_instance_rejects_malformed_entries():
    with pytest.raises(ValueError, match="coeff and axiom"):
        build_instance({"axiom": "right-alternative"})
    with pytest.raises(ValueError, match="unknown certificate axiom"):
        build_instance({"coeff": "1", "axiom": "nope", "substitution": {}})
    with pytest.raises(ValueError, match="cover exactly"):
        build_instance({"coeff": "1", "axiom": "right-alternative",
                        "substitution": {"x": "x"}})
    with pytest.raises(ValueError, match="wrap"):
        build_instance({"coeff": "1", "axiom": "right-alternative",
                        "substitution": {"x": "x", "y": "y", "z": "z"},
                        "wrap": [["spin", 1]]})


# -- the S-expression DSL ---------------------------------------------------------


def test_parse_term_operators():
    x, y, z = var("x"), var("y"), var("z")
    assert parse_term("(as x y z)") == expand_associator(x, y, z)
    assert parse_term("(com x y)") == poly_commutator(x, y)
    assert parse_term("(add x y z)") == x + y + z
    assert parse_term("(sub x y)") == x - y
    assert parse_term("(neg x)") == -x
    assert parse_term("(scale 3/2 (mul x (a 2 y)))") == poly_mul(x, y.alpha(2)).scale(
        qq(3, 2)
    )


def test_parse_identity():
    lhs, rhs = parse_identity("(= (as x y y) (scale 0 x))")
    assert lhs == expand_associator(var("x"), var("y"), var("y"))
    assert rhs.is_zero()


def test_dsl_round_trip():
    rng = random.Random(77)
    for _ in range(50):
        m = HomMonomial(normalize_raw(random_raw_tree(rng)))
        assert parse_monomial(term_to_dsl(m)) == m


def test_parse_monomial_requires_unit_coefficient():
    assert parse_monomial("(a 1 x)") == mono("x", 1)
    with pytest.raises(ValueError, match="single monomial"):
        parse_monomial("(add x y)")
    with pytest.raises(ValueError, match="single monomial"):
        parse_monomial("(scale 2 x)")


@pytest.mark.parametrize(
    "bad",
    ["(mul x", "(bogus x y)", "(a -1 x)", "(a x y)", "x y", "()", "(= x)"],
)
def test_parse_errors_carry_positions(bad):
    with pytest.raises(ValueError, match=r"\(at position \d+\)"):
        parse_identity(bad) if bad.startswith("(=") else parse_term(bad)
