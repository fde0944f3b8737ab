"""Dimension filtrations and (sequential, approximate) Cohen-Macaulay tests.

Everything is relative to a torsion variable set ``T`` (the x-block, the
y-block or all variables).  Inputs are squarefree, so the reduced primary
decomposition of ``0`` in ``S/I`` is exactly the list of minimal primes and
each filtration step is an intersection of primes modulo ``I``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Union

from .cech import (
    CohomologyProfile,
    QuotientModule,
    cd_of_prime,
    cohomology_profile,
    profile_of,
)
from .combinatorics import (
    GeneralMonomialIdeal,
    MonomialPrime,
    SquarefreeIdeal,
    associated_primes,
    intersect_primes,
    minimal_primes,
)
from .linalg import QQ, FieldSpec, StructuralError


class TheoremViolation(StructuralError):
    """A statement that must hold under its hypotheses failed: a bug report."""


@dataclass(frozen=True)
class FiltrationResult:
    """The dimension filtration ``0 = D_0 ⊊ D_1 ⊊ ... ⊊ D_r = S/I``.

    ``ideals[i]`` is ``J_i`` with ``D_i = J_i / I``; ``J_0 = I`` and ``J_r`` is
    the unit ideal.  ``groups[i-1]`` holds the minimal primes whose quotient
    has cohomological dimension ``cd_values[i-1]``.
    """

    ideal: SquarefreeIdeal
    torsion: int
    cd_values: tuple[int, ...]
    groups: tuple[tuple[MonomialPrime, ...], ...]
    ideals: tuple[SquarefreeIdeal, ...]

    @property
    def r(self) -> int:
        return len(self.cd_values)

    def submodule(self, i: int) -> QuotientModule:
        """``D_i`` as the pair ``(J_i, I)``."""
        return QuotientModule(self.ideals[i], self.ideal)

    def primes_up_to(self, i: int) -> list[MonomialPrime]:
        """``B_i``: the primes in the first ``i`` groups."""
        return [p for g in self.groups[:i] for p in g]

    @property
    def unmixed_ideal(self) -> SquarefreeIdeal:
        """``J_{r-1}``; the unmixed component is ``J_{r-1}/I`` (zero when r = 1)."""
        return self.ideals[self.r - 1]


def dimension_filtration(I: SquarefreeIdeal, T: int, *, verify: bool = True) -> FiltrationResult:
    primes = minimal_primes(I)
    values = sorted({cd_of_prime(p.vars, T) for p in primes})
    groups = tuple(tuple(p for p in primes if cd_of_prime(p.vars, T) == q) for q in values)
    ideals = [I]
    for q in values[:-1]:
        ideals.append(intersect_primes(I.ring, [p for p in primes if cd_of_prime(p.vars, T) > q]))
    ideals.append(SquarefreeIdeal.unit(I.ring))
    result = FiltrationResult(I, T, tuple(values), groups, tuple(ideals))
    if verify:
        for i in range(1, result.r + 1):
            got = cohomology_profile(result.submodule(i), T).cd
            if got != values[i - 1]:
                raise TheoremViolation(
                    f"cd(T, D_{i}) = {got}, expected {values[i - 1]} for {I}")
    return result


def unmixed_component(I: SquarefreeIdeal, T: int) -> SquarefreeIdeal:
    """``J_{r-1}``: the intersection of minimal primes of non-maximal cd.

    The unmixed submodule is ``J_{r-1}/I``; when every prime attains the
    maximum (r = 1) this is ``I`` itself and the submodule is zero.
    """
    return dimension_filtration(I, T, verify=False).unmixed_ideal


@dataclass(frozen=True)
class Verdicts:
    """Cohen-Macaulay type verdicts of ``S/I`` relative to one torsion set."""

    torsion: int
    field: FieldSpec
    grade: int
    cd: int
    r: int
    cd_values: tuple[int, ...]
    cm: bool
    seq_cm: bool
    seq_certificates: tuple[int, ...]
    seq_failing_index: int | None
    approx_cm: bool
    unmixed_quotient: tuple[int, int]
    relatively_unmixed: bool


@dataclass(frozen=True)
class ClassificationReport:
    relative: Verdicts
    classical: Verdicts
    filtration: FiltrationResult


def _grade_cd(I: SquarefreeIdeal, T: int, field: FieldSpec) -> tuple[int, int]:
    prof = profile_of(I, T, field)
    return prof.grade, prof.cd


def seq_cm_certificates(filt: FiltrationResult, field: FieldSpec) -> tuple[int, ...]:
    """``grade(T, S/J_{i-1})`` for ``i = 1..r``; sequential CM iff these equal the cd values."""
    return tuple(profile_of(filt.ideals[i - 1], filt.torsion, field).grade
                 for i in range(1, filt.r + 1))


def verdicts(I: SquarefreeIdeal, T: int, field: FieldSpec = QQ,
             filt: FiltrationResult | None = None) -> Verdicts:
    if filt is None:
        filt = dimension_filtration(I, T)
    grade, cd = _grade_cd(I, T, field)
    certs = seq_cm_certificates(filt, field)
    failing = next((i + 1 for i, (g, q) in enumerate(zip(certs, filt.cd_values)) if g != q), None)
    seq_cm = failing is None
    u_grade, u_cd = _grade_cd(filt.unmixed_ideal, T, field)
    near = grade >= cd - 1
    by_definition = u_grade == u_cd and near
    by_sequence = seq_cm and near
    if by_definition != by_sequence:
        raise TheoremViolation(
            f"approximate CM verdicts disagree for {I}: definition {by_definition}, "
            f"sequential {by_sequence}")
    return Verdicts(T, field, grade, cd, filt.r, filt.cd_values, grade == cd, seq_cm, certs,
                    failing, by_definition, (u_grade, u_cd), filt.r == 1)


def classify(I: SquarefreeIdeal, T: int, field: FieldSpec = QQ) -> ClassificationReport:
    filt = dimension_filtration(I, T)
    rel = verdicts(I, T, field, filt)
    full = I.ring.all_mask
    classical = rel if T == full else verdicts(I, full, field)
    return ClassificationReport(rel, classical, filt)


@dataclass(frozen=True)
class InvariantLine:
    name: str
    lhs: int
    rhs: int
    holds: bool


@dataclass(frozen=True)
class InvariantReport:
    status: str  # "ok" or "declined"
    reason: str = ""
    lines: tuple[InvariantLine, ...] = ()
    context: dict = dc_field(default_factory=dict)


def filtration_length(I: Union[SquarefreeIdeal, GeneralMonomialIdeal], T: int) -> int:
    """Number of distinct ``cd(T, S/p)`` over the associated primes of ``S/I``."""
    if isinstance(I, SquarefreeIdeal):
        primes = minimal_primes(I)
    else:
        primes = associated_primes(I)
    return len({cd_of_prime(p.vars, T) for p in primes})


def cm_invariant_report(I: Union[SquarefreeIdeal, GeneralMonomialIdeal],
                        field: FieldSpec = QQ) -> InvariantReport:
    """Check the identities that hold for a Cohen-Macaulay ``S/I`` that is
    sequentially Cohen-Macaulay with respect to the y-block.

    Declines (without failing) when the hypotheses are not met.  A violated
    line raises :class:`TheoremViolation`.
    """
    ring = I.ring
    P, Q, full = ring.x_mask, ring.y_mask, ring.all_mask
    m_prof = profile_of(I, full, field)
    q_prof = profile_of(I, Q, field)
    p_prof = profile_of(I, P, field)
    depth, dim = m_prof.grade, m_prof.cd
    r = filtration_length(I, Q)
    cd_sum = p_prof.cd + q_prof.cd
    context = {
        "depth": depth, "dim": dim, "r": r,
        "grade_Q": q_prof.grade, "cd_Q": q_prof.cd, "cd_P": p_prof.cd,
        "q_profile_full": q_prof.full_interval,
        "cdP_plus_cdQ": cd_sum, "dim_plus_r_minus_1": dim + r - 1,
    }
    if depth != dim:
        return InvariantReport("declined", f"S/I is not Cohen-Macaulay (depth {depth} < dim {dim})",
                               context=context)
    if isinstance(I, GeneralMonomialIdeal):
        if not I.is_squarefree:
            return InvariantReport("declined", "dimension filtration needs a squarefree ideal",
                                   context=context)
        I = I.to_squarefree()
    filt = dimension_filtration(I, Q)
    ver = verdicts(I, Q, field, filt)
    if not ver.seq_cm:
        return InvariantReport(
            "declined", f"S/I is not sequentially Cohen-Macaulay with respect to Q "
                        f"(fails at i = {ver.seq_failing_index})", context=context)
    lines = []
    for i in range(1, filt.r + 1):
        D = filt.submodule(i)
        cd_p = cohomology_profile(D, P, field).cd
        grade_q = cohomology_profile(D, Q, field).grade
        dim_d = cohomology_profile(D, full, field).cd
        lines.append(InvariantLine(f"cd(P, D_{i}) = cd(P, M)", cd_p, p_prof.cd, cd_p == p_prof.cd))
        lines.append(InvariantLine(f"grade(Q, D_{i}) + cd(P, D_{i}) = dim D_{i}",
                                   grade_q + cd_p, dim_d, grade_q + cd_p == dim_d))
        lines.append(InvariantLine(f"grade(Q, D_{i}) = grade(Q, M)", grade_q, q_prof.grade,
                                   grade_q == q_prof.grade))
    lhs = cd_sum == dim + filt.r - 1
    lines.append(InvariantLine("[cd(P)+cd(Q) = dim+r-1] iff [H^s_Q != 0 on grade..cd]",
                               int(lhs), int(q_prof.full_interval), lhs == q_prof.full_interval))
    report = InvariantReport("ok", "", tuple(lines), context)
    bad = [ln.name for ln in lines if not ln.holds]
    if bad:
        raise TheoremViolation(f"invariant lines failed for {I}: {bad}")
    return report


def approx_cm_wrt(I: SquarefreeIdeal, T: int, field: FieldSpec = QQ) -> bool:
    return verdicts(I, T, field).approx_cm


def profile_pair(A: SquarefreeIdeal, B: SquarefreeIdeal, T: int,
                 field: FieldSpec = QQ) -> CohomologyProfile:
    return cohomology_profile(QuotientModule(A, B), T, field)
