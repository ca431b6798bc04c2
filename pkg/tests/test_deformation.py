"""Formal one-parameter deformations: derived identity systems and instances.

The three reference systems below (six, seven, and nine cross-term
equations) are frozen as published; the derivation engine must reproduce
each as term multisets after expanding named composite operations into
generators.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction

import pytest

from splitalg import (
    FOUR_OP_SYSTEM,
    NINE_OP_SYSTEM,
    THREE_OP_SYSTEM,
    TWO_OP_SYSTEM,
    EpsilonBialgebra,
    WeightedDigraph,
    baxter_deformation,
    chain_coproduct,
    check_deformation_instance,
    check_system,
    cross_term_system,
    deformed_structure_check,
    instance_operator_equation,
    path_algebra,
    two_operator_equation,
    weighted_coproduct,
)
from splitalg.bialgebra import convolution_structure

F = Fraction

# -- frozen reference systems -------------------------------------------------
#
# Each equation is (lhs, rhs) with lhs terms meaning outer(inner(x, y), z)
# and rhs terms meaning outer(x, inner(y, z)); every printed coefficient
# is 1.  Composite names are expanded through the dictionaries right below.

DENDRIFORM_WITH_LABELED_TRIDENDRIFORM = {
    "composites": {
        "star": ("prec", "succ"),
        "star1": ("prec1", "succ1", "circ1"),
    },
    "equations": [
        ([("prec1", "prec"), ("prec", "prec1")], [("star1", "prec"), ("star", "prec1")]),
        ([("succ1", "prec"), ("succ", "prec1")], [("prec", "succ1"), ("prec1", "succ")]),
        ([("star1", "succ"), ("star", "succ1")], [("succ", "succ1"), ("succ1", "succ")]),
        ([("succ", "circ1")], [("circ1", "succ")]),
        ([("prec", "circ1")], [("succ", "circ1")]),
        ([("circ1", "prec")], [("prec", "circ1")]),
    ],
}

TRIDENDRIFORM_WITH_LABELED_TRIDENDRIFORM = {
    "composites": {
        "star": ("prec", "succ", "circ"),
        "star1": ("prec1", "succ1", "circ1"),
    },
    "equations": [
        ([("prec1", "prec"), ("prec", "prec1")], [("star1", "prec"), ("star", "prec1")]),
        ([("succ1", "prec"), ("succ", "prec1")], [("prec", "succ1"), ("prec1", "succ")]),
        ([("star1", "succ"), ("star", "succ1")], [("succ", "succ1"), ("succ1", "succ")]),
        ([("succ", "circ1"), ("succ1", "circ")], [("circ1", "succ"), ("circ", "succ1")]),
        ([("prec", "circ1"), ("prec1", "circ")], [("succ", "circ1"), ("succ1", "circ")]),
        ([("circ1", "prec"), ("circ", "prec1")], [("prec", "circ1"), ("prec1", "circ")]),
        ([("circ1", "circ"), ("circ", "circ1")], [("circ", "circ1"), ("circ1", "circ")]),
    ],
}

QUADRI_WITH_LABELED_QUADRI = {
    "composites": {
        "lhd": ("nw", "sw"),
        "rhd": ("ne", "se"),
        "wedge": ("nw", "ne"),
        "vee": ("sw", "se"),
        "starbar": ("nw", "ne", "sw", "se"),
        "lhd1": ("nw1", "sw1"),
        "rhd1": ("ne1", "se1"),
        "wedge1": ("nw1", "ne1"),
        "vee1": ("sw1", "se1"),
        "starbar1": ("nw1", "ne1", "sw1", "se1"),
    },
    "equations": [
        ([("nw1", "nw"), ("nw", "nw1")], [("starbar1", "nw"), ("starbar", "nw1")]),
        ([("ne", "nw1"), ("ne1", "nw")], [("lhd1", "ne"), ("lhd", "ne1")]),
        ([("wedge1", "ne"), ("wedge", "ne1")], [("rhd1", "ne"), ("rhd", "ne1")]),
        ([("sw1", "nw"), ("sw", "nw1")], [("wedge1", "sw"), ("wedge", "sw1")]),
        ([("se1", "nw"), ("se", "nw1")], [("nw", "se1"), ("nw1", "se")]),
        ([("vee1", "ne"), ("vee", "ne1")], [("ne1", "se"), ("ne", "se1")]),
        ([("lhd", "sw1"), ("lhd1", "sw")], [("vee", "sw1"), ("vee1", "sw")]),
        ([("rhd", "sw1"), ("rhd1", "sw")], [("sw1", "se"), ("sw", "se1")]),
        ([("starbar", "se1"), ("starbar1", "se")], [("se1", "se"), ("se", "se1")]),
    ],
}

GENERIC_T = F(7)  # a point no built-in coefficient polynomial vanishes at


def expand_reference_side(composites, terms):
    out: Counter = Counter()
    for inner, outer in terms:
        for gi in composites.get(inner, (inner,)):
            for go in composites.get(outer, (outer,)):
                out[(gi, go)] += 1
    return tuple(sorted(out.items()))


def reference_canonical(data):
    eqs = [
        (
            expand_reference_side(data["composites"], lhs),
            expand_reference_side(data["composites"], rhs),
        )
        for lhs, rhs in data["equations"]
    ]
    return sorted(eqs)


def expand_derived_side(system, terms):
    out: Counter = Counter()
    for coeff, inner, outer in terms:
        c = coeff.eval(GENERIC_T)
        for pi, gi in system.resolve(inner):
            for po, go in system.resolve(outer):
                out[(gi, go)] += c * pi.eval(GENERIC_T) * po.eval(GENERIC_T)
    return tuple(sorted((k, v) for k, v in out.items() if v))


def derived_canonical(deformed):
    system = deformed.system
    eqs = [
        (expand_derived_side(system, rel.lhs), expand_derived_side(system, rel.rhs))
        for rel in deformed.degree1_relations()
    ]
    return sorted(eqs)


# -- derived systems reproduce the frozen references --------------------------


def test_six_equation_system_is_reproduced_exactly():
    deformed = cross_term_system(THREE_OP_SYSTEM, ("prec", "succ"))
    assert len(deformed.degree1) == 6
    assert derived_canonical(deformed) == reference_canonical(
        DENDRIFORM_WITH_LABELED_TRIDENDRIFORM
    )


def test_seven_equation_system_is_reproduced_exactly():
    deformed = cross_term_system(THREE_OP_SYSTEM, THREE_OP_SYSTEM.generators)
    assert len(deformed.degree1) == 7
    assert derived_canonical(deformed) == reference_canonical(
        TRIDENDRIFORM_WITH_LABELED_TRIDENDRIFORM
    )


def test_nine_equation_system_is_reproduced_exactly():
    deformed = cross_term_system(FOUR_OP_SYSTEM, FOUR_OP_SYSTEM.generators)
    assert len(deformed.degree1) == 9
    assert derived_canonical(deformed) == reference_canonical(QUADRI_WITH_LABELED_QUADRI)


# -- structure of the polarized systems ---------------------------------------


def test_polarized_system_shapes():
    cases = [
        (TWO_OP_SYSTEM, ("prec", "succ"), (3, 3, 3), 4),
        (THREE_OP_SYSTEM, ("prec", "succ"), (3, 6, 7), 5),
        (THREE_OP_SYSTEM, THREE_OP_SYSTEM.generators, (7, 7, 7), 6),
        (FOUR_OP_SYSTEM, FOUR_OP_SYSTEM.generators, (9, 9, 9), 8),
        (NINE_OP_SYSTEM, NINE_OP_SYSTEM.generators, (49, 49, 49), 18),
    ]
    for base, nonzero, (d0, d1, d2), gens in cases:
        deformed = cross_term_system(base, nonzero)
        assert len(deformed.degree0) == d0
        assert len(deformed.degree1) == d1
        assert len(deformed.degree2) == d2
        assert len(deformed.system.generators) == gens
        assert len(deformed.system.relations) == d0 + d1 + d2
        assert deformed.system.name == base.name + "_deformed"


def test_total_operation_names():
    assert cross_term_system(THREE_OP_SYSTEM, ("prec", "succ")).total_name == "star_total"
    assert (
        cross_term_system(NINE_OP_SYSTEM, NINE_OP_SYSTEM.generators).total_name
        == "starbar_total"
    )


def test_unknown_kept_generator_is_rejected():
    with pytest.raises(ValueError):
        cross_term_system(THREE_OP_SYSTEM, ("prec", "bogus"))


def test_degree2_relations_are_the_relabeled_base():
    deformed = cross_term_system(THREE_OP_SYSTEM, ("prec", "succ"))
    by_name = {r.name: r for r in deformed.system.relations}
    for base_rel in THREE_OP_SYSTEM.relations:
        rel = by_name[f"d2:{base_rel.name}"]
        assert [(c, i + "1", o + "1") for c, i, o in base_rel.lhs] == list(rel.lhs)
        assert [(c, i + "1", o + "1") for c, i, o in base_rel.rhs] == list(rel.rhs)


# -- concrete instances on End(A) ---------------------------------------------


def two_vertex_setup():
    pa = path_algebra(WeightedDigraph.build(2, [(0, 1, 1)]))
    return pa.algebra, weighted_coproduct(pa), chain_coproduct(pa)


def test_two_three_instance_passes_all_generated_relations():
    alg, dw, dch = two_vertex_setup()
    inst = baxter_deformation("two_three", alg, dw, dch, 0, -1)
    assert inst.t_eval == 0 and (inst.r, inst.r1) == (0, -1)
    report = check_deformation_instance(inst)
    assert report.passed, report.summary()
    assert report.checks_run == 16 * 9**3


def test_three_three_instance_passes():
    alg, dw, dch = two_vertex_setup()
    inst = baxter_deformation("three_three", alg, dw, dch, 0, -1)
    report = check_deformation_instance(inst)
    assert report.passed
    assert report.checks_run == 21 * 9**3


def test_four_four_instance_passes():
    pa = path_algebra(WeightedDigraph.build(2, [(0, 1, 1)]))
    alg = pa.algebra
    d1 = weighted_coproduct(pa)
    d2 = weighted_coproduct(pa, weights=[F(3, 2)])
    inst = baxter_deformation("four_four", alg, d1, d2, 0, 0)
    report = check_deformation_instance(inst)
    assert report.passed
    assert report.checks_run == 27 * 9**3


def test_nine_nine_identical_pair_is_the_trivial_deformation():
    alg, _, dch = two_vertex_setup()
    inst = baxter_deformation("nine_nine", alg, dch, dch, -1, -1)
    assert inst.t_eval == -1
    report = check_deformation_instance(inst)
    assert report.passed
    assert report.checks_run == 147 * 9**3


def test_variant_preconditions_are_enforced():
    alg, dw, dch = two_vertex_setup()
    with pytest.raises(ValueError):
        baxter_deformation("bogus", alg, dw, dch, 0, -1)
    with pytest.raises(ValueError):  # first coproduct is not a 1-compatible one
        baxter_deformation("two_three", alg, dw, dch, 1, -1)
    with pytest.raises(ValueError):  # shared nonzero parameter required
        baxter_deformation("nine_nine", alg, dch, dw, -1, 0)
    with pytest.raises(ValueError):  # exchange law fails for two chain weightings
        dch2 = chain_coproduct(path_algebra(WeightedDigraph.build(2, [(0, 1, 1)])), weights=[F(3, 2)])
        baxter_deformation("nine_nine", alg, dch, dch2, -1, -1)


def test_operator_level_equation_on_convolution_operators():
    alg, dw, dch = two_vertex_setup()
    assert instance_operator_equation(alg, dw, dch, 0, -1).passed
    # and directly on the two left-convolution operators
    cs = convolution_structure(EpsilonBialgebra(alg, dw, F(0)))
    cs1 = convolution_structure(EpsilonBialgebra(alg, dch, F(-1)))
    assert two_operator_equation(cs.end, cs.left_conv, cs1.left_conv, F(0), F(-1)).passed
    # a wrong weight pair breaks it
    assert not two_operator_equation(cs.end, cs.left_conv, cs1.left_conv, F(1), F(-1)).passed


@pytest.mark.parametrize("tau", [F(0), F(1), F(2)])
@pytest.mark.parametrize("order", [3, 4])
def test_series_structure_check(tau, order):
    alg, dw, dch = two_vertex_setup()
    inst = baxter_deformation("two_three", alg, dw, dch, 0, -1)
    report = deformed_structure_check(
        inst.deformed.base, inst.series, inst.t_eval, order=order, tau=tau
    )
    assert report.passed, report.summary()
    assert report.checks_run == 7 * order * 9**3


def test_tau_zero_equals_the_truncated_series():
    alg, dw, dch = two_vertex_setup()
    inst = baxter_deformation("two_three", alg, dw, dch, 0, -1)
    tau_zero = deformed_structure_check(
        inst.deformed.base, inst.series, inst.t_eval, order=3, tau=F(0)
    )
    truncated = deformed_structure_check(
        inst.deformed.base,
        {name: s[:1] for name, s in inst.series.items()},
        inst.t_eval,
        order=3,
        tau=F(1),
    )
    assert tau_zero.passed and truncated.passed
    assert tau_zero.checks_run == truncated.checks_run


def test_broken_series_is_caught():
    alg, dw, dch = two_vertex_setup()
    inst = baxter_deformation("two_three", alg, dw, dch, 0, -1)
    series = dict(inst.series)
    series["prec"] = [series["prec"][0], series["succ"][1]]  # wrong order-1 part
    report = deformed_structure_check(inst.deformed.base, series, inst.t_eval, order=3)
    assert not report.passed
    assert report.witnesses


def test_instance_tensors_satisfy_relations_via_check_system_directly():
    alg, dw, dch = two_vertex_setup()
    inst = baxter_deformation("two_three", alg, dw, dch, 0, -1)
    report = check_system(inst.deformed.system, inst.ops, inst.t_eval)
    assert report.passed
