"""Mechanical one-parameter formal deformations of splitting structures.

Deform every operation of a splitting structure as  op(h) = op0 + h op1.
Substituting into a quadratic identity and collecting powers of h gives

* degree 0 — the base identities on the unlabeled operations (terms through
  operations with zero base part drop; identities with no terms left drop),
* degree 1 — the cross-term system mixing unlabeled and labeled operations,
* degree 2 — the base identities on the labeled operations.

:func:`cross_term_system` performs that bookkeeping over the relation tables
of :mod:`splitalg.relations`, producing a new quadratic presentation over a
doubled alphabet (labeled generators get a ``1`` suffix, and composite slots
stay unexpanded so the printed systems and the unit checks can use them).

The second half of the module builds concrete instances on End(A) from a
pair of coproducts on one algebra (via the convolution Baxter operators) and
verifies them: against the generated presentation, against the one remaining
operator-level equation, and order by order as a truncated power series.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .algebra_core import CoalgebraData, FiniteAlgebra
from .bialgebra import (
    EpsilonBialgebra,
    check_eps_bialgebra,
    check_hypercubic,
    convolution_structure,
)
from .baxter import commute
from .exactlin import (
    ONE,
    ZERO,
    CompositionMap,
    LinearOperator,
    Scalar,
    Tensor3,
    accumulate,
    basis_vector,
    combine,
    compose_left,
    compose_right,
    first_discrepancy,
    rat,
    vec_add,
    vec_scale,
)
from .relations import (
    FOUR_OP_SYSTEM,
    NINE_OP_SYSTEM,
    THREE_OP_SYSTEM,
    TWO_OP_SYSTEM,
    AxiomSystem,
    Relation,
    Term,
    check_system,
)
from .report import Report, Witness
from .splitting import ennea_from_commuting_pair, trialgebra_from_baxter


@dataclasses.dataclass(frozen=True)
class DeformedSystem:
    """The quadratic presentation of a one-parameter deformation."""

    base: AxiomSystem
    nonzero_base: frozenset[str]
    system: AxiomSystem
    degree0: tuple[str, ...]
    degree1: tuple[str, ...]
    degree2: tuple[str, ...]
    total_name: str | None  # unital total operation (base total + labeled total)

    def degree1_relations(self) -> tuple[Relation, ...]:
        wanted = set(self.degree1)
        return tuple(r for r in self.system.relations if r.name in wanted)


def _labeled(name: str) -> str:
    return name + "1"


def cross_term_system(base: AxiomSystem, nonzero_base: Iterable[str]) -> DeformedSystem:
    """Polarize a relation table for op(h) = op0 + h op1.

    ``nonzero_base`` lists the generators whose base part op0 is kept;
    the others deform from zero (only their op1 exists).
    """
    nonzero = frozenset(nonzero_base)
    unknown = nonzero - set(base.generators)
    if unknown:
        raise ValueError(f"not generators of {base.name}: {sorted(unknown)}")

    generators = tuple(g for g in base.generators if g in nonzero) + tuple(
        _labeled(g) for g in base.generators
    )
    composites: dict[str, tuple] = {}
    base0_ok: dict[str, bool] = {g: g in nonzero for g in base.generators}
    for name, parts in base.composites.items():
        kept = tuple((poly, g) for poly, g in parts if g in nonzero)
        base0_ok[name] = bool(kept)
        if kept:
            composites[name] = kept
        composites[_labeled(name)] = tuple((poly, _labeled(g)) for poly, g in parts)

    def at0(name: str) -> str | None:
        return name if base0_ok[name] else None

    def polarize_terms(terms: Sequence[Term], degree: int) -> tuple[Term, ...]:
        out: list[Term] = []
        for coeff, inner, outer in terms:
            if degree == 0:
                if at0(inner) and at0(outer):
                    out.append(Term(coeff, inner, outer))
            elif degree == 2:
                out.append(Term(coeff, _labeled(inner), _labeled(outer)))
            else:
                if at0(inner):
                    out.append(Term(coeff, inner, _labeled(outer)))
                if at0(outer):
                    out.append(Term(coeff, _labeled(inner), outer))
        return tuple(out)

    relations: list[Relation] = []
    names_by_degree: dict[int, list[str]] = {0: [], 1: [], 2: []}
    for degree in (0, 1, 2):
        for rel in base.relations:
            lhs = polarize_terms(rel.lhs, degree)
            rhs = polarize_terms(rel.rhs, degree)
            if not lhs and not rhs:
                continue
            name = f"d{degree}:{rel.name}"
            relations.append(Relation(name, lhs, rhs))
            names_by_degree[degree].append(name)

    total_name = None
    for candidate in ("starbar", "star"):
        if candidate in base.composites:
            total = tuple(composites.get(candidate, ())) + composites[_labeled(candidate)]
            total_name = f"{candidate}_total"
            composites[total_name] = total
            break

    system = AxiomSystem(
        name=f"{base.name}_deformed",
        generators=generators,
        composites=composites,
        relations=tuple(relations),
    )
    return DeformedSystem(
        base=base,
        nonzero_base=nonzero,
        system=system,
        degree0=tuple(names_by_degree[0]),
        degree1=tuple(names_by_degree[1]),
        degree2=tuple(names_by_degree[2]),
        total_name=total_name,
    )


# ---------------------------------------------------------------------------
# concrete instances on End(A) from a pair of coproducts
# ---------------------------------------------------------------------------

VARIANTS = ("two_three", "three_three", "four_four", "nine_nine")


@dataclasses.dataclass(frozen=True)
class DeformationInstance:
    """A deformed splitting structure on End(A) built from two coproducts."""

    variant: str
    deformed: DeformedSystem
    end: FiniteAlgebra
    ops: dict[str, Tensor3]                 # doubled-alphabet generators
    series: dict[str, list[Tensor3]]        # base generator -> [order0, order1]
    t_eval: Fraction                        # family parameter for coefficients
    r: Fraction
    r1: Fraction


def two_operator_equation(
    end: FiniteAlgebra,
    first: LinearOperator,
    second: LinearOperator,
    r: Scalar,
    r1: Scalar,
) -> Report:
    """The single operator identity equivalent to the cross-term system when
    both operator families come from Baxter operators (first with parameter
    r, second with parameter r1):

        first(T second(S)) + first(second(T) S) + r1 first(T S)
      + second(T first(S)) + second(first(T) S) + r  second(T S)
      = second(T) first(S) + first(T) second(S).
    """
    r, r1 = rat(r), rat(r1)
    n = end.dim
    img1 = [first.column(j) for j in range(n)]
    img2 = [second.column(j) for j in range(n)]
    report = Report(title="two-operator deformation equation", passed=True)
    for i in range(n):
        e_i = basis_vector(n, i)
        for j in range(n):
            e_j = basis_vector(n, j)
            lhs = vec_add(
                first.apply(end.multiply(e_i, img2[j])),
                first.apply(end.multiply(img2[i], e_j)),
                vec_scale(r1, first.apply(end.multiply(e_i, e_j))),
                second.apply(end.multiply(e_i, img1[j])),
                second.apply(end.multiply(img1[i], e_j)),
                vec_scale(r, second.apply(end.multiply(e_i, e_j))),
            )
            rhs = vec_add(
                end.multiply(img2[i], img1[j]), end.multiply(img1[i], img2[j])
            )
            report.checks_run += 1
            if lhs != rhs:
                report.add_failure(Witness("operator-equation", (i, j), lhs, rhs))
                return report
    return report


def baxter_deformation(
    variant: str,
    algebra: FiniteAlgebra,
    delta: CoalgebraData,
    delta1: CoalgebraData,
    t: Scalar,
    t1: Scalar,
    validate: bool = True,
) -> DeformationInstance:
    """Build a deformation instance on End(A) from two compatible coproducts.

    Both (algebra, delta, t) and (algebra, delta1, t1) must be t-twisted
    bialgebras.  Variants that mix one coproduct's left convolution with the
    other's right convolution also need the pairwise coproduct exchange law
    (checked where required); the purely left-sided variants only need the
    two-operator deformation identity, which ``instance_operator_equation``
    verifies directly.  The variant picks the structure being deformed:

    * ``two_three``   two-op base (t must be 0) deformed with labeled
                      three-op operations from delta1;
    * ``three_three`` three-op base deformed with labeled three-op ops;
    * ``four_four``   four-corner base (t = t1 = 0) from the commuting
                      convolution pair, labeled corners swap in delta1;
    * ``nine_nine``   full nine-op base (t = t1, nonzero recommended),
                      labeled ops swap in delta1.
    """
    t, t1 = rat(t), rat(t1)
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; pick one of {VARIANTS}")
    b = EpsilonBialgebra(algebra, delta, t)
    b1 = EpsilonBialgebra(algebra, delta1, t1)
    if validate:
        reports = [check_eps_bialgebra(b), check_eps_bialgebra(b1)]
        if variant == "four_four":
            # the labeled corners pair delta1's left convolution with
            # delta's right convolution, which needs the exchange law
            reports.append(check_hypercubic([delta, delta1]))
        for rep in reports:
            if not rep.passed:
                raise ValueError("precondition failed:\n" + rep.summary())
    cs = convolution_structure(b)
    cs1 = convolution_structure(b1)
    end = cs.end
    n2 = end.dim
    beta, gamma, beta1 = cs.left_conv, cs.right_conv, cs1.left_conv
    zero = Tensor3.zero(n2)

    if variant == "two_three":
        if t != 0:
            raise ValueError("two_three needs the unlabeled coproduct at parameter 0")
        dsys = cross_term_system(THREE_OP_SYSTEM, ("prec", "succ"))
        base_tri = trialgebra_from_baxter(end, beta, 0, validate=False)
        lab_tri = trialgebra_from_baxter(end, beta1, t1, validate=False)
        ops = {
            "prec": base_tri.prec,
            "succ": base_tri.succ,
            "prec1": lab_tri.prec,
            "succ1": lab_tri.succ,
            "circ1": lab_tri.circ,
        }
        series = {
            "prec": [base_tri.prec, lab_tri.prec],
            "succ": [base_tri.succ, lab_tri.succ],
            "circ": [zero, lab_tri.circ],
        }
        t_eval = ZERO
    elif variant == "three_three":
        dsys = cross_term_system(THREE_OP_SYSTEM, ("prec", "succ", "circ"))
        base_tri = trialgebra_from_baxter(end, beta, t, validate=False)
        lab_tri = trialgebra_from_baxter(end, beta1, t1, validate=False)
        ops = {
            "prec": base_tri.prec,
            "succ": base_tri.succ,
            "circ": base_tri.circ,
            "prec1": lab_tri.prec,
            "succ1": lab_tri.succ,
            "circ1": lab_tri.circ,
        }
        series = {
            "prec": [base_tri.prec, lab_tri.prec],
            "succ": [base_tri.succ, lab_tri.succ],
            "circ": [base_tri.circ, lab_tri.circ],
        }
        t_eval = ZERO
    elif variant == "four_four":
        if t != 0 or t1 != 0:
            raise ValueError("four_four needs both coproducts at parameter 0")
        if validate and not commute(beta1, gamma):
            raise ValueError("labeled operator must commute with the right convolution")
        dsys = cross_term_system(FOUR_OP_SYSTEM, FOUR_OP_SYSTEM.generators)
        corners = ("nw", "ne", "sw", "se")
        base_e = ennea_from_commuting_pair(end, beta, gamma, 0, validate=False)
        lab_e = ennea_from_commuting_pair(end, beta1, gamma, 0, validate=False)
        ops = {name: base_e.ops[name] for name in corners}
        ops.update({_labeled(name): lab_e.ops[name] for name in corners})
        series = {name: [base_e.ops[name], lab_e.ops[name]] for name in corners}
        t_eval = ZERO
    else:  # nine_nine
        if t != t1:
            raise ValueError("nine_nine needs one shared nonzero parameter")
        if validate and not commute(beta1, gamma):
            raise ValueError("labeled operator must commute with the right convolution")
        dsys = cross_term_system(NINE_OP_SYSTEM, NINE_OP_SYSTEM.generators)
        base_e = ennea_from_commuting_pair(end, beta, gamma, t, validate=False)
        lab_e = ennea_from_commuting_pair(end, beta1, gamma, t, validate=False)
        ops = dict(base_e.ops)
        ops.update({_labeled(name): tensor for name, tensor in lab_e.ops.items()})
        series = {name: [base_e.ops[name], lab_e.ops[name]] for name in base_e.ops}
        t_eval = t

    return DeformationInstance(
        variant=variant,
        deformed=dsys,
        end=end,
        ops=ops,
        series=series,
        t_eval=t_eval,
        r=t,
        r1=t1,
    )


def check_deformation_instance(instance: DeformationInstance) -> Report:
    """All generated relations (degrees 0, 1, 2) on the instance tensors."""
    return check_system(
        instance.deformed.system,
        instance.ops,
        instance.t_eval,
        f"deformed system ({instance.variant})",
    )


def instance_operator_equation(
    instance_algebra: FiniteAlgebra,
    delta: CoalgebraData,
    delta1: CoalgebraData,
    t: Scalar,
    t1: Scalar,
) -> Report:
    """The operator-level equation for the two left-convolution operators."""
    cs = convolution_structure(EpsilonBialgebra(instance_algebra, delta, rat(t)))
    cs1 = convolution_structure(EpsilonBialgebra(instance_algebra, delta1, rat(t1)))
    return two_operator_equation(cs.end, cs.left_conv, cs1.left_conv, t, t1)


# ---------------------------------------------------------------------------
# truncated power-series verification
# ---------------------------------------------------------------------------


def deformed_structure_check(
    base: AxiomSystem,
    series: Mapping[str, Sequence[Tensor3]],
    t_eval: Scalar = 0,
    order: int = 3,
    tau: Scalar = 1,
) -> Report:
    """Check the base identities order by order for op(h) = sum_m h^m op_m.

    ``series`` maps each base generator to its list of h-coefficients
    (missing orders are zero); ``tau`` rescales every order-1 coefficient,
    giving the one-parameter family op0 + (tau h) op1.  All coefficients of
    h^m for m < order must vanish identically.
    """
    t_eval, tau = rat(t_eval), rat(tau)
    dims = {s[0].dim for s in series.values() if s}
    if len(dims) != 1:
        raise ValueError("series tensors must share one dimension")
    dim = dims.pop()
    zero = Tensor3.zero(dim)

    def scaled(name: str, m: int) -> Tensor3:
        coeffs = series.get(name, ())
        if m >= len(coeffs):
            return zero
        tensor = coeffs[m]
        return tensor.scale(tau**m) if m > 0 else tensor

    cache: dict[tuple[str, int], Tensor3] = {}

    def op_series(name: str, m: int) -> Tensor3:
        key = (name, m)
        if key not in cache:
            if name in base.composites:
                cache[key] = combine(
                    dim,
                    [
                        (poly.eval(t_eval), op_series(gen, m))
                        for poly, gen in base.composites[name]
                    ],
                )
            else:
                cache[key] = scaled(name, m)
        return cache[key]

    report = Report(
        title=f"order-by-order deformation check (order<{order}, tau={tau})",
        passed=True,
    )
    for rel in base.relations:
        for m in range(order):
            total: CompositionMap = {}
            for sign, terms, composer in (
                (ONE, rel.lhs, compose_left),
                (-ONE, rel.rhs, compose_right),
            ):
                for coeff, inner, outer in terms:
                    value = coeff.eval(t_eval) * sign
                    if value == 0:
                        continue
                    for p in range(m + 1):
                        part = composer(op_series(inner, p), op_series(outer, m - p))
                        accumulate(total, part, value)
            report.checks_run += dim**3
            diff = first_discrepancy(total, {})
            if diff is not None:
                key, lvec, _ = diff
                report.add_failure(Witness(f"{rel.name}@h^{m}", key, lvec, {}))
    return report
