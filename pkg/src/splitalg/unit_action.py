"""Adjoining a formal unit to a splitting structure.

A splitting structure has no unit of its own: the identities force any
two-sided unit for the total operation to act one-sidedly through the
individual operations.  One therefore *chooses* a unit action: for every
generating operation, two scalars saying what ``x op 1`` and ``1 op x``
are (each either ``x`` or ``0``).  Composite operations inherit their
scalars linearly, so a well-chosen rule table can make the associative
total operation genuinely unital even though every single generator is
one-sided.

Two corner evaluations may stay undefined: ``1 op 1`` only makes sense
when both one-sided scalars agree.  The compatibility check below runs
every identity on the augmented space ``k·1 ⊕ A`` and skips exactly the
argument triples whose expansion would evaluate an undefined corner,
counting them in the report.

The coherence check goes one step further: given unit actions on two
structures A and B of the same kind, it builds the standard structure on

    A ⊗ 1  ⊕  1 ⊗ B  ⊕  A ⊗ B,

where a product ``(a ⊗ b) op (a' ⊗ b')`` multiplies the left factors
with the unital total operation and the right factors with ``op`` itself
— except that when both right factors are the unit, the *left* factors
are multiplied with ``op`` instead.  The unit action is called coherent
when this mixed space satisfies all the identities again; coherence is
what lets the augmented free algebras carry bialgebra structures.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .exactlin import (
    ONE,
    ZERO,
    CompositionMap,
    Scalar,
    Tensor3,
    accumulate,
    combine,
    compose_left,
    compose_right,
    rat,
)
from .relations import (
    NINE_OP_GENERATORS,
    NINE_OP_SYSTEM,
    AxiomSystem,
    Relation,
)
from .report import Report, Witness
from .splitting import EnneaStructure, check_ennea

# Rule scalars: the unit acts as the identity, or kills the argument.
IDENTITY: Scalar = ONE
NOTHING: Scalar = ZERO

# A rule table maps each generator name to (right, left) with
#   x op 1 = right * x      and      1 op x = left * x.
UnitRules = Mapping[str, tuple[Scalar, Scalar]]


def unit_rules(
    generators: Sequence[str],
    *,
    right_identity: Iterable[str] = (),
    left_identity: Iterable[str] = (),
) -> dict[str, tuple[Scalar, Scalar]]:
    """Rule table where the named generators absorb the unit as the identity.

    ``right_identity`` lists the operations with ``x op 1 = x``;
    ``left_identity`` those with ``1 op x = x``; every other unit action
    is zero.
    """
    right = set(right_identity)
    left = set(left_identity)
    unknown = (right | left) - set(generators)
    if unknown:
        raise KeyError(f"rule names not among the generators: {sorted(unknown)}")
    return {
        gen: (
            IDENTITY if gen in right else NOTHING,
            IDENTITY if gen in left else NOTHING,
        )
        for gen in generators
    }


def nine_op_unit_rules() -> dict[str, tuple[Scalar, Scalar]]:
    """The standard unit action for the nine-operation family.

    The north-west operation absorbs the unit on the right and the
    south-east one on the left; all other unit actions are zero.  Then
    the left and right halves, the vertical splittings, and the total
    operation all absorb the unit on their natural sides, and the total
    operation is genuinely unital.
    """
    return unit_rules(NINE_OP_GENERATORS, right_identity=("nw",), left_identity=("se",))


@dataclasses.dataclass(frozen=True)
class UnitScalars:
    """One operation's unit action: x op 1 = right*x, 1 op x = left*x."""

    right: Scalar
    left: Scalar

    @property
    def defined(self) -> bool:
        """Whether ``1 op 1`` makes sense (both sides give the same value)."""
        return self.right == self.left


def op_unit_scalars(
    system: AxiomSystem, rules: UnitRules, t: Fraction, name: str
) -> UnitScalars:
    """Unit-action scalars of a possibly composite operation at parameter t."""
    right = ZERO
    left = ZERO
    for poly, gen in system.resolve(name):
        value = poly.eval(t)
        r, l = rules[gen]
        right += value * rat(r)
        left += value * rat(l)
    return UnitScalars(right, left)


def augment_tensor(tensor: Tensor3, scalars: UnitScalars) -> Tensor3:
    """Structure tensor of one operation on ``k·1 ⊕ A`` (unit at index 0).

    The undefined corner (both arguments the unit) is stored as zero; the
    compatibility check never reads it because it skips those triples.
    """
    n = tensor.dim
    items: list[tuple[int, int, int, Scalar]] = [
        (i + 1, j + 1, k + 1, c) for i, j, k, c in tensor.nonzeros()
    ]
    if scalars.left != 0:
        items.extend((0, j, j, scalars.left) for j in range(1, n + 1))
    if scalars.right != 0:
        items.extend((i, 0, i, scalars.right) for i in range(1, n + 1))
    if scalars.defined and scalars.right != 0:
        items.append((0, 0, 0, scalars.right))
    return Tensor3.from_sparse(n + 1, items)


def augmented_ops(
    system: AxiomSystem, ops: dict[str, Tensor3], t: Fraction, rules: UnitRules
) -> dict[str, Tensor3]:
    """Augment every operation — composites included — by the unit action.

    Composites must be augmented as wholes, not resolved from augmented
    generators: a composite can be defined at the unit-by-unit corner
    even though its constituents are not (the total operation is the
    standard example, with both one-sided sums equal to 1), and only the
    composite's own scalars put the right value there.  Away from that
    corner the two readings agree, since the one-sided scalars combine
    linearly.
    """
    missing = set(system.generators) - set(rules)
    if missing:
        raise KeyError(f"unit rules missing for generators: {sorted(missing)}")
    dim = next(iter(ops.values())).dim
    out: dict[str, Tensor3] = {}
    for name in system.operation_names():
        interior = combine(
            dim, [(poly.eval(t), ops[gen]) for poly, gen in system.resolve(name)]
        )
        out[name] = augment_tensor(interior, op_unit_scalars(system, rules, t, name))
    return out


def relation_skip_set(
    system: AxiomSystem,
    rules: UnitRules,
    t: Fraction,
    relation: Relation,
    dim: int,
) -> set[tuple[int, int, int]]:
    """Augmented argument triples on which one identity is not defined.

    A left-nested term ``outer(inner(x, y), z)`` is undefined when
    ``inner`` has no unit-by-unit value and (x, y) is (unit, unit) — any
    z — or when ``inner(1, 1)`` is a nonzero multiple of the unit but
    ``outer`` has no unit-by-unit value, which pins (x, y, z) to the all-
    unit triple.  Right-nested terms mirror this in the last two slots.
    An identity instance is skipped when any of its terms is undefined.
    """
    skip: set[tuple[int, int, int]] = set()
    for terms, left_nested in ((relation.lhs, True), (relation.rhs, False)):
        for coeff, inner_name, outer_name in terms:
            if coeff.eval(t) == 0:
                continue
            s_inner = op_unit_scalars(system, rules, t, inner_name)
            s_outer = op_unit_scalars(system, rules, t, outer_name)
            if not s_inner.defined:
                if left_nested:
                    skip.update((0, 0, k) for k in range(dim + 1))
                else:
                    skip.update((i, 0, 0) for i in range(dim + 1))
            elif s_inner.right != 0 and not s_outer.defined:
                skip.add((0, 0, 0))
    return skip


def check_unit_compatibility(
    system: AxiomSystem,
    ops: dict[str, Tensor3],
    t: Fraction,
    rules: UnitRules,
    title: str | None = None,
) -> Report:
    """Verify every identity of a system on the unit-augmented space.

    Argument triples whose expansion hits an undefined unit-by-unit
    corner are skipped and counted in ``skipped_undefined``; everything
    else must hold exactly.
    """
    dims = {tensor.dim for tensor in ops.values()}
    if len(dims) != 1:
        raise ValueError("all operation tensors must share one dimension")
    dim = dims.pop()
    aug = augmented_ops(system, ops, t, rules)
    report = Report(
        title=title or f"{system.name} unit compatibility", passed=True
    )

    def side(terms, left_nested: bool) -> CompositionMap:
        # compose straight from the augmented table so composite corner
        # values are used as stored, never re-resolved from generators
        total: CompositionMap = {}
        for coeff, inner_name, outer_name in terms:
            value = coeff.eval(t)
            if value == 0:
                continue
            compose = compose_left if left_nested else compose_right
            accumulate(total, compose(aug[inner_name], aug[outer_name]), value)
        return total

    for relation in system.relations:
        skip = relation_skip_set(system, rules, t, relation, dim)
        lhs = side(relation.lhs, True)
        rhs = side(relation.rhs, False)
        report.checks_run += (dim + 1) ** 3 - len(skip)
        report.skipped_undefined += len(skip)
        worst = None
        for key in lhs.keys() | rhs.keys():
            if key in skip:
                continue
            lvec = {m: c for m, c in lhs.get(key, {}).items() if c != 0}
            rvec = {m: c for m, c in rhs.get(key, {}).items() if c != 0}
            if lvec != rvec and (worst is None or key < worst):
                worst = key
        if worst is not None:
            lvec = {m: c for m, c in lhs.get(worst, {}).items() if c != 0}
            rvec = {m: c for m, c in rhs.get(worst, {}).items() if c != 0}
            report.add_failure(
                Witness(f"{system.name}:{relation.name}+unit", worst, lvec, rvec)
            )
    return report


def coherence_ops(
    system: AxiomSystem,
    ops_a: dict[str, Tensor3],
    ops_b: dict[str, Tensor3],
    t: Fraction,
    rules: UnitRules,
    total_name: str,
) -> dict[str, Tensor3]:
    """Structure tensors on ``A⊗1 ⊕ 1⊗B ⊕ A⊗B`` for a unit action.

    Products multiply the left factors with the total operation and the
    right factors with the operation at hand, resolving units on the
    right factors through the rule table — except that two unit right
    factors flip the operation onto the left factors.  The rule table
    must make the total operation unital, otherwise the mixed space has
    no consistent product and a ValueError is raised.

    Basis layout: ``x_i ⊗ 1`` at i, ``1 ⊗ y_j`` at p + j, and
    ``x_i ⊗ y_j`` at p + q + i*q + j.
    """
    s_total = op_unit_scalars(system, rules, t, total_name)
    if not (s_total.defined and s_total.right == ONE):
        raise ValueError(
            f"the rule table does not make {total_name!r} unital; "
            "the mixed-space construction needs a genuine unit"
        )
    p = next(iter(ops_a.values())).dim
    q = next(iter(ops_b.values())).dim
    dim = p + q + p * q

    def pair(i: int, j: int) -> int:
        return p + q + i * q + j

    total_a = combine(
        p, [(poly.eval(t), ops_a[gen]) for poly, gen in system.resolve(total_name)]
    )

    out: dict[str, Tensor3] = {}
    for gen in system.generators:
        ta, tb = ops_a[gen], ops_b[gen]
        u, l = (rat(s) for s in rules[gen])
        items: list[tuple[int, int, int, Scalar]] = []
        # (x⊗1)(x'⊗1): both right factors are the unit, so op moves left.
        items.extend((i, i2, k, c) for i, i2, k, c in ta.nonzeros())
        # (x⊗1)(1⊗y') = (x *total* 1) ⊗ (1 op y') = l * x⊗y'
        if l != 0:
            items.extend(
                (i, p + j2, pair(i, j2), l) for i in range(p) for j2 in range(q)
            )
        # (x⊗1)(x'⊗y') = (x total x') ⊗ (1 op y')
        if l != 0:
            items.extend(
                (i, pair(i2, j2), pair(m, j2), l * c)
                for i, i2, m, c in total_a.nonzeros()
                for j2 in range(q)
            )
        # (1⊗y)(x'⊗1) = (1 total x') ⊗ (y op 1) = u * x'⊗y
        if u != 0:
            items.extend(
                (p + j, i2, pair(i2, j), u) for j in range(q) for i2 in range(p)
            )
        # (1⊗y)(1⊗y') = (1 total 1) ⊗ (y op y') = 1 ⊗ (y op y')
        items.extend((p + j, p + j2, p + k, c) for j, j2, k, c in tb.nonzeros())
        # (1⊗y)(x'⊗y') = (1 total x') ⊗ (y op y') = x' ⊗ (y op y')
        items.extend(
            (p + j, pair(i2, j2), pair(i2, k), c)
            for j, j2, k, c in tb.nonzeros()
            for i2 in range(p)
        )
        # (x⊗y)(x'⊗1) = (x total x') ⊗ (y op 1)
        if u != 0:
            items.extend(
                (pair(i, j), i2, pair(m, j), u * c)
                for i, i2, m, c in total_a.nonzeros()
                for j in range(q)
            )
        # (x⊗y)(1⊗y') = (x total 1) ⊗ (y op y') = x ⊗ (y op y')
        items.extend(
            (pair(i, j), p + j2, pair(i, k), c)
            for j, j2, k, c in tb.nonzeros()
            for i in range(p)
        )
        # (x⊗y)(x'⊗y') = (x total x') ⊗ (y op y')
        items.extend(
            (pair(i, j), pair(i2, j2), pair(m, k), c1 * c2)
            for i, i2, m, c1 in total_a.nonzeros()
            for j, j2, k, c2 in tb.nonzeros()
        )
        out[gen] = Tensor3.from_sparse(dim, items)
    return out


def check_coherence(
    system: AxiomSystem,
    ops_a: dict[str, Tensor3],
    ops_b: dict[str, Tensor3],
    t: Fraction,
    rules: UnitRules,
    total_name: str,
    title: str | None = None,
) -> Report:
    """Verify that a unit action is coherent: the mixed space on
    ``A⊗1 ⊕ 1⊗B ⊕ A⊗B`` satisfies all the identities again."""
    from .relations import check_system

    mixed = coherence_ops(system, ops_a, ops_b, t, rules, total_name)
    report = check_system(
        system, mixed, t, title=title or f"{system.name} coherence"
    )
    report.notes.append(
        f"mixed space of dimensions {next(iter(ops_a.values())).dim} and "
        f"{next(iter(ops_b.values())).dim}"
    )
    return report


def ennea_coherence(
    a: EnneaStructure, b: EnneaStructure, rules: UnitRules | None = None
) -> EnneaStructure:
    """The mixed-space nine-operation structure for two structures."""
    if a.t != b.t:
        raise ValueError("both structures must share the family parameter t")
    mixed = coherence_ops(
        NINE_OP_SYSTEM, a.ops, b.ops, a.t, rules or nine_op_unit_rules(), "starbar"
    )
    return EnneaStructure(t=a.t, ops=mixed)


def check_ennea_coherence(
    a: EnneaStructure, b: EnneaStructure, rules: UnitRules | None = None
) -> Report:
    """Coherence of a unit action for two nine-operation structures."""
    report = check_ennea(ennea_coherence(a, b, rules))
    report.title = "nine-operation coherence on the mixed space"
    return report
