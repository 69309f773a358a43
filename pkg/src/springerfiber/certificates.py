"""Exact-arithmetic certificates for two explicit component geometries.

Singularity of the shape (3,2,2) component labelled by 1,2,5/3,4/6,7:
a six-parameter polynomial family of strictly lower triangular matrices
parametrizes flags inside the cell whenever a handful of coordinates stay
nonzero, and seven curves of the family through the origin have linearly
independent tangent vectors there.  Seven independent tangents at a point
of a six-dimensional variety certify a singular point.  Tangents are read
off with first-order jet arithmetic; every membership test is an exact
cell check.

Smoothness certificates for the components labelled by ``Q(k,k,1)``: for
every special flag (d) an explicit affine (k+2)-parameter family of flags
in the chart around it fixes the special flag at zero, lands in the open
cell whenever all parameters are nonzero, and has chart coordinates from
which the parameters can be read back affinely, witnessing a closed
immersion of affine space through each special flag of the component.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .exactlin import (
    Flag,
    Matrix,
    NilpotentOperator,
    Vector,
    as_fraction,
    chart_coords,
    in_cell,
    in_springer_fiber,
    jordan_operator,
    special_flag,
    special_operator,
    unit_vector,
    vec_add,
    vec_scale,
)
from .tableaux import StandardTableau, make_Q


# Parameter conventions: VParams lists the recurrence coefficients
# alpha_3..alpha_{k+1}; PhiParams lists the k+2 chart-family parameters in
# the order documented on phi_map.
VParams = Sequence
PhiParams = Sequence


class CertificateError(Exception):
    """A certificate sub-check failed."""


class Jet:
    """First-order jet a + b*eps with eps^2 = 0, over exact rationals.

    Supports ring operations with jets and plain numbers; the derivative
    slot follows the Leibniz rule, extracting tangent vectors of
    polynomial curves exactly.
    """

    __slots__ = ("value", "deriv")

    def __init__(self, value, deriv=0):
        self.value = as_fraction(value)
        self.deriv = as_fraction(deriv)

    @staticmethod
    def _coerce(x) -> "Jet":
        return x if isinstance(x, Jet) else Jet(x)

    def __add__(self, other):
        o = Jet._coerce(other)
        return Jet(self.value + o.value, self.deriv + o.deriv)

    __radd__ = __add__

    def __sub__(self, other):
        o = Jet._coerce(other)
        return Jet(self.value - o.value, self.deriv - o.deriv)

    def __rsub__(self, other):
        return Jet._coerce(other).__sub__(self)

    def __mul__(self, other):
        o = Jet._coerce(other)
        return Jet(self.value * o.value, self.value * o.deriv + self.deriv * o.value)

    __rmul__ = __mul__

    def __neg__(self):
        return Jet(-self.value, -self.deriv)

    def __eq__(self, other) -> bool:
        o = Jet._coerce(other) if isinstance(other, (Jet, int, Fraction)) else None
        if o is None:
            return NotImplemented
        return self.value == o.value and self.deriv == o.deriv

    def __hash__(self) -> int:
        return hash((self.value, self.deriv))

    def __repr__(self) -> str:
        return f"Jet({self.value}, {self.deriv})"


CELL_TABLEAU_322 = StandardTableau(((1, 2, 5), (3, 4), (6, 7)))
BASIS_TABLEAU_322 = StandardTableau(((1, 4, 7), (2, 5), (3, 6)))


@lru_cache(maxsize=None)
def operator_322() -> NilpotentOperator:
    """The shape (3,2,2) operator: e7 -> e4 -> e1 -> 0, e5 -> e2, e6 -> e3."""
    return jordan_operator(BASIS_TABLEAU_322)


def f_entries(t: Sequence) -> dict[tuple[int, int], object]:
    """Strictly lower entries of the six-parameter matrix family, any ring."""
    t1, t2, t3, t4, t5, t6 = t
    return {
        (2, 1): t1,
        (3, 1): t1 * t2,
        (3, 2): t2 + t3,
        (4, 2): t3 * t4 * t5,
        (4, 3): t4 * t5,
        (5, 2): t1 * t3 * t4 * t5,
        (5, 3): t1 * t4 * t5,
        (5, 4): t4,
        (6, 2): t1 * t2 * t3 * t4 * t5,
        (6, 3): t1 * t2 * t4 * t5,
        (6, 4): t2 * t4,
        (6, 5): t2 + t6,
        (7, 5): t5 * t6 * (t4 - t1),
        (7, 6): t5 * (t4 - t1),
    }


def f_family(t: Sequence) -> Matrix:
    """The 7x7 strictly lower triangular matrix of the family at rational ``t``."""
    if len(t) != 6:
        raise ValueError("the family takes six parameters")
    values = f_entries(tuple(as_fraction(x) for x in t))
    rows = [[Fraction(0)] * 7 for _ in range(7)]
    for (i, j), v in values.items():
        rows[i - 1][j - 1] = v
    return Matrix(rows)


def _membership_conditions(t: Sequence[Fraction]) -> list[tuple[str, Fraction]]:
    return [
        ("t3", t[2]),
        ("t4", t[3]),
        ("t5", t[4]),
        ("t6", t[5]),
        ("t4 - t1", t[3] - t[0]),
    ]


def verify_curve_membership(t: Sequence) -> bool:
    """Exact check that the unipotent translate of the base flag is in the cell.

    Requires t3, t4, t5, t6 and t4 - t1 to be nonzero; the flag is spanned
    by the columns of f(t) + I over the (3,2,2) Jordan basis and must lie in
    the cell of the tableau 1,2,5/3,4/6,7.
    """
    t = tuple(as_fraction(x) for x in t)
    if len(t) != 6:
        raise ValueError("the family takes six parameters")
    for name, value in _membership_conditions(t):
        if value == 0:
            raise ValueError(f"membership precondition violated: {name} must be nonzero")
    g = f_family(t)
    columns = [list(g.column(i)) for i in range(1, 8)]
    for i in range(7):
        columns[i][i] += Fraction(1)
    flag = Flag(tuple(tuple(col) for col in columns))
    return in_cell(flag, operator_322(), CELL_TABLEAU_322)


# Each witness curve is affine in one parameter s: t_i(s) = const_i + slope_i * s.
WITNESS_CURVES: tuple[tuple[str, tuple[int, ...], tuple[int, ...]], ...] = (
    ("t = (s,0,0,0,0,0)", (0, 0, 0, 0, 0, 0), (1, 0, 0, 0, 0, 0)),
    ("t = (0,0,s,0,0,0)", (0, 0, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0)),
    ("t = (0,0,0,s,0,0)", (0, 0, 0, 0, 0, 0), (0, 0, 0, 1, 0, 0)),
    ("t = (0,0,0,0,0,s)", (0, 0, 0, 0, 0, 0), (0, 0, 0, 0, 0, 1)),
    ("t = (s,1,-1,0,0,-1)", (0, 1, -1, 0, 0, -1), (1, 0, 0, 0, 0, 0)),
    ("t = (0,1,-1,s,0,-1)", (0, 1, -1, 0, 0, -1), (0, 0, 0, 1, 0, 0)),
    ("t = (0,0,0,s,1,0)", (0, 0, 0, 0, 1, 0), (0, 0, 0, 1, 0, 0)),
)

_FILL_POOL = (Fraction(1, 7), Fraction(1, 11), Fraction(1, 13), Fraction(1, 17))


def curve_tangent(const: Sequence, slope: Sequence) -> Matrix:
    """Tangent matrix at s = 0 of the curve s -> f(const + slope*s), via jets."""
    jets = [Jet(c, b) for c, b in zip(const, slope, strict=True)]
    values = f_entries(jets)
    rows = [[Fraction(0)] * 7 for _ in range(7)]
    for (i, j), v in values.items():
        jet = v if isinstance(v, Jet) else Jet(v)
        if jet.value != 0:
            raise CertificateError(f"curve does not pass through the origin at ({i},{j})")
        rows[i - 1][j - 1] = jet.deriv
    return Matrix(rows)


def _admissible_point(
    const: Sequence[int], slope: Sequence[int], s0: Fraction
) -> tuple[Fraction, ...]:
    """A nearby point of the curve family meeting every nonvanishing condition."""
    t = [as_fraction(c) + as_fraction(b) * s0 for c, b in zip(const, slope)]
    pool = iter(_FILL_POOL)
    for idx in (2, 3, 4, 5):
        if t[idx] == 0:
            t[idx] = next(pool)
    if t[3] == t[0]:
        replacement = next(x for x in _FILL_POOL if x != t[0] and x != 0)
        t[3] = replacement
    point = tuple(t)
    if any(value == 0 for _, value in _membership_conditions(point)):
        raise AssertionError("perturbation failed to clear the nonvanishing conditions")
    return point


def _strictly_lower_coords(m: Matrix) -> Vector:
    return tuple(m.rows[i][j] for i in range(7) for j in range(i))


@dataclass(frozen=True)
class SingularityCertificate:
    """Outcome of the shape (3,2,2) singularity computation."""

    shape: tuple[int, ...]
    tableau: str
    tangent_dim_lower_bound: int
    component_dim: int
    witness_curves: tuple[str, ...]
    membership_points: int
    singular: bool

    def to_json(self) -> dict:
        return {
            "case": "(3,2,2) singular component",
            "checks": [
                {
                    "name": "tangent-rank",
                    "status": "pass",
                    "detail": f"rank {self.tangent_dim_lower_bound} at the origin",
                },
                {
                    "name": "component-dimension",
                    "status": "pass",
                    "detail": f"dimension {self.component_dim}",
                },
                {
                    "name": "cell-membership",
                    "status": "pass",
                    "detail": f"{self.membership_points} exact membership confirmations",
                },
            ],
            "shape": list(self.shape),
            "tableau": self.tableau,
            "witness_curves": list(self.witness_curves),
            "verdict": "singular" if self.singular else "not certified",
        }


def certify_322() -> SingularityCertificate:
    """Certify that the (3,2,2) component of 1,2,5/3,4/6,7 is singular.

    Computes the seven tangent vectors with jet arithmetic, checks their
    rank is 7 against the component dimension 6, and confirms membership
    of perturbed points of every witness curve family in the cell, two
    exact confirmations per curve.  Raises CertificateError if any
    sub-check fails.
    """
    from .partitions import Partition

    tangents = [curve_tangent(const, slope) for _, const, slope in WITNESS_CURVES]
    rank = Matrix([_strictly_lower_coords(m) for m in tangents]).rank()
    if rank != 7:
        raise CertificateError(f"expected tangent rank 7, got {rank}")
    component_dim = Partition((3, 2, 2)).springer_dim()
    if component_dim != 6:
        raise CertificateError(f"expected component dimension 6, got {component_dim}")
    memberships = 0
    for name, const, slope in WITNESS_CURVES:
        for s0 in (Fraction(1), Fraction(1, 2)):
            point = _admissible_point(const, slope, s0)
            if not verify_curve_membership(point):
                raise CertificateError(f"membership failed for {name} near s={s0}")
            memberships += 1
    return SingularityCertificate(
        shape=(3, 2, 2),
        tableau=CELL_TABLEAU_322.text(),
        tangent_dim_lower_bound=rank,
        component_dim=component_dim,
        witness_curves=tuple(name for name, _, _ in WITNESS_CURVES),
        membership_points=memberships,
        singular=rank > component_dim,
    )


def _w_shift(v: Vector, n: int) -> Vector:
    """The partial inverse of the shape-(k,k,1) operator: e_i -> e_{i+2}.

    Defined on the span of e_1..e_{n-1}, killing e_{n-2} and e_{n-1};
    the coefficient on e_n must vanish.
    """
    if v[n - 1] != 0:
        raise ValueError("shift map is undefined on the last coordinate")
    out = [Fraction(0)] * n
    for i in range(n - 3):
        out[i + 2] = v[i]
    return tuple(out)


def v_vectors(k: int, alpha: Sequence) -> tuple[Vector, ...]:
    """The recurrence v_1 = e_1, v_2 = e_2, v_i = w(v_{i-2}) + alpha_i w(v_{i-1}).

    ``alpha`` lists alpha_3..alpha_{k+1}; returns v_1..v_{k+1} in the
    ambient dimension n = 2k+1.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    alpha = tuple(as_fraction(a) for a in alpha)
    if len(alpha) != k - 1:
        raise ValueError(f"expected {k - 1} coefficients alpha_3..alpha_{k + 1}")
    n = 2 * k + 1
    vs = [unit_vector(n, 1), unit_vector(n, 2)]
    for i in range(3, k + 2):
        a = alpha[i - 3]
        vs.append(vec_add(_w_shift(vs[i - 3], n), vec_scale(a, _w_shift(vs[i - 2], n))))
    return tuple(vs)


def r_vectors(
    k: int, i: int, alpha: Sequence
) -> tuple[tuple[Vector, ...], tuple[Fraction, ...]]:
    """Level-``i`` auxiliary vectors r_1..r_i and their coefficients beta.

    Level k+1 is the v-recurrence itself (beta_j = alpha_j, with
    alpha_1 = alpha_2 = 0); each next level re-seeds e_1, e_2 and shifts
    the previous level by w.
    """
    n = 2 * k + 1
    if not k + 1 <= i <= n - 1:
        raise ValueError(f"level {i} out of range {k + 1}..{n - 1}")
    alpha = tuple(as_fraction(a) for a in alpha)
    rs = list(v_vectors(k, alpha))
    betas: list[Fraction] = [Fraction(0), Fraction(0), *alpha]
    for level in range(k + 2, i + 1):
        rs = [unit_vector(n, 1), unit_vector(n, 2)] + [
            _w_shift(rs[j - 3], n) for j in range(3, level + 1)
        ]
        betas = [Fraction(0), Fraction(0)] + betas[: level - 2]
    return tuple(rs), tuple(betas)


def _v_full(k: int, alpha: Sequence) -> tuple[Vector, ...]:
    """v_1..v_{n-1}: the base recurrence followed by the diagonal of the levels."""
    n = 2 * k + 1
    vs = list(v_vectors(k, alpha))
    for level in range(k + 2, n):
        rs, _ = r_vectors(k, level, alpha)
        vs.append(rs[level - 1])
    return tuple(vs)


def _check_d(k: int, d: int) -> None:
    if not 3 <= d <= k + 2:
        raise ValueError(f"d must lie in 3..{k + 2}, got {d}")


def phi_map(k: int, d: int, params: Sequence) -> Flag:
    """The affine chart family through the special flag (d) for shape (k,k,1).

    ``params`` has k+2 rational entries.  For d = k+2 they are
    (alpha_1, alpha_3, .., alpha_{k+1}, gamma_k, gamma_{k+1}); for d < k+2
    they are (alpha_1, alpha_3, .., alpha_d, alpha_{d+2}, .., alpha_{k+2},
    gamma_{d-1}, nu) with alpha_{d+1} = -nu * gamma_{d-1} derived.  The
    remaining gammas satisfy gamma_i = -alpha_{i+2} gamma_{i+1} downwards,
    with gamma_1 = -(alpha_3 - alpha_1) gamma_2.
    """
    _check_d(k, d)
    params = tuple(as_fraction(p) for p in params)
    if len(params) != k + 2:
        raise ValueError(f"expected {k + 2} parameters, got {len(params)}")
    n = 2 * k + 1
    e = [None] + [unit_vector(n, i) for i in range(1, n + 1)]
    alpha1 = params[0]

    if d == k + 2:
        alpha = {i: params[i - 2] for i in range(3, k + 2)}
        gamma = {k: params[k], k + 1: params[k + 1]}
        for i in range(k - 1, 1, -1):
            gamma[i] = -alpha[i + 2] * gamma[i + 1]
        if k >= 2:
            gamma[1] = -(alpha[3] - alpha1) * gamma[2]
        vs = _v_full(k, tuple(alpha[i] for i in range(3, k + 2)))
        etas = [
            vec_add(vec_add(e[1], vec_scale(alpha1, e[2])), vec_scale(gamma[1], e[n])),
            vec_add(e[2], vec_scale(gamma[2], e[n])),
        ]
        for i in range(3, k + 2):
            etas.append(vec_add(vs[i - 1], vec_scale(gamma[i], e[n])))
        etas.append(e[n])
        for i in range(k + 3, n + 1):
            etas.append(vs[i - 2])
        return Flag(etas)

    # 3 <= d < k+2 forces k >= 2
    alpha = {i: params[i - 2] for i in range(3, d + 1)}
    for i in range(d + 2, k + 3):
        alpha[i] = params[i - 3]
    gamma_d1 = params[k]
    nu = params[k + 1]
    alpha[d + 1] = -nu * gamma_d1
    gamma = {d - 1: gamma_d1}
    for i in range(d - 2, 1, -1):
        gamma[i] = -alpha[i + 2] * gamma[i + 1]
    gamma[1] = -(alpha[3] - alpha1) * gamma[2]
    vs = _v_full(k, tuple(alpha[i] for i in range(3, k + 2)))
    etas = [
        vec_add(vec_add(e[1], vec_scale(alpha1, e[2])), vec_scale(gamma[1], e[n])),
        vec_add(e[2], vec_scale(gamma[2], e[n])),
    ]
    for i in range(3, d):
        etas.append(vec_add(vs[i - 1], vec_scale(gamma[i], e[n])))
    etas.append(vec_add(e[n], vec_scale(nu, vs[d - 1])))
    for i in range(d + 1, k + 2):
        etas.append(vec_add(vs[i - 2], vec_scale(alpha[i + 1], vs[i - 1])))
    etas.append(vs[k])
    for i in range(k + 3, n + 1):
        etas.append(vs[i - 2])
    return Flag(etas)


def _alpha_tilde(alpha: dict[int, Fraction], top: int) -> dict[int, Fraction]:
    """Accumulated coefficients: tilde_1 = tilde_2 = 0, tilde_i = tilde_{i-2} + alpha_i."""
    tilde = {1: Fraction(0), 2: Fraction(0)}
    for i in range(3, top + 1):
        tilde[i] = tilde[i - 2] + alpha[i]
    return tilde


def default_chart_parameters(k: int) -> tuple[tuple[Fraction, ...], ...]:
    """Three deterministic all-nonzero parameter tuples of length k+2."""
    m = k + 2
    ones = tuple(Fraction(1) for _ in range(m))
    harmonic = tuple(Fraction(1, i + 2) for i in range(m))
    alternating = tuple(
        Fraction((-1) ** i * (i + 2), 2 * i + 3) for i in range(m)
    )
    return (ones, harmonic, alternating)


def _recovery_identities(
    k: int, d: int, params: tuple[Fraction, ...], coords
) -> list[tuple[str, Fraction, Fraction]]:
    """(name, chart value, expected value) triples for the parameter read-back."""
    phi = coords.phi
    alpha1 = params[0]
    out = [("alpha_1 = phi(1,2)", phi[(1, 2)], alpha1)]

    if d == k + 2:
        alpha = {i: params[i - 2] for i in range(3, k + 2)}
        tilde = _alpha_tilde(alpha, k + 1)
        for i in range(3, k + 1):
            out.append((f"alpha~_{i} = phi({i},{i + 1})", phi[(i, i + 1)], tilde[i]))
        if k >= 2:
            out.append(
                (f"alpha~_{k + 1} = phi({k + 1},{k + 3})", phi[(k + 1, k + 3)], tilde[k + 1])
            )
        out.append((f"gamma_{k} = phi({k},{k + 2})", phi[(k, k + 2)], params[k]))
        out.append(
            (f"gamma_{k + 1} = phi({k + 1},{k + 2})", phi[(k + 1, k + 2)], params[k + 1])
        )
        # read every alpha back from chart values alone
        tilde_rec = {1: Fraction(0), 2: Fraction(0)}
        for i in range(3, k + 1):
            tilde_rec[i] = phi[(i, i + 1)]
        if k >= 2:
            tilde_rec[k + 1] = phi[(k + 1, k + 3)]
        for i in range(3, k + 2):
            out.append(
                (
                    f"alpha_{i} recovered",
                    tilde_rec[i] - tilde_rec[i - 2],
                    alpha[i],
                )
            )
        return out

    alpha = {i: params[i - 2] for i in range(3, d + 1)}
    for i in range(d + 2, k + 3):
        alpha[i] = params[i - 3]
    gamma_d1 = params[k]
    nu = params[k + 1]
    alpha[d + 1] = -nu * gamma_d1
    tilde = _alpha_tilde(alpha, k + 2)
    for i in range(3, d - 1):
        out.append((f"alpha~_{i} = phi({i},{i + 1})", phi[(i, i + 1)], tilde[i]))
    if d >= 4:
        out.append(
            (f"alpha~_{d - 1} = phi({d - 1},{d + 1})", phi[(d - 1, d + 1)], tilde[d - 1])
        )
    out.append((f"gamma_{d - 1} = phi({d - 1},{d})", phi[(d - 1, d)], gamma_d1))
    out.append((f"nu = phi({d},{d + 1})", phi[(d, d + 1)], nu))
    for i in range(d + 2, k + 3):
        out.append((f"alpha~_{i} = phi({i - 1},{i})", phi[(i - 1, i)], tilde[i]))
    pivot = 2 * k + 2 - d
    out.append(
        (
            f"alpha~_{d} = phi({pivot + 1},{pivot + 2})",
            phi[(pivot + 1, pivot + 2)],
            tilde[d],
        )
    )
    # read every alpha back from chart values alone
    tilde_rec = {1: Fraction(0), 2: Fraction(0)}
    for i in range(3, d - 1):
        tilde_rec[i] = phi[(i, i + 1)]
    if d >= 4:
        tilde_rec[d - 1] = phi[(d - 1, d + 1)]
    tilde_rec[d] = phi[(pivot + 1, pivot + 2)]
    alpha_d1_rec = -phi[(d, d + 1)] * phi[(d - 1, d)]
    tilde_rec[d + 1] = tilde_rec[d - 1] + alpha_d1_rec
    for i in range(d + 2, k + 3):
        tilde_rec[i] = phi[(i - 1, i)]
    for i in range(3, k + 3):
        out.append(
            (f"alpha_{i} recovered", tilde_rec[i] - tilde_rec[i - 2], alpha[i])
        )
    return out


def verify_smooth_chart(
    k: int, d: int, parameter_tuples: Sequence[Sequence] | None = None
) -> dict:
    """Verify the chart family through the special flag (d) of shape (k,k,1).

    Checks, all exact: the family at zero is the special flag; at three (or
    more) all-nonzero parameter tuples it lies in the open cell of
    ``Q(k,k,1)`` (the all-nonzero hypothesis is required of every
    parameter); the chart coordinates of each such flag read the parameters
    back; and a mixed tuple with zero entries still lands in the fiber and
    the chart.  Returns a JSON-ready report with one entry per check.
    """
    _check_d(k, d)
    if parameter_tuples is None:
        tuples = default_chart_parameters(k)
    else:
        tuples = tuple(tuple(as_fraction(p) for p in ps) for ps in parameter_tuples)
    u = special_operator(k)
    target = make_Q(k)
    checks = []

    zero = tuple(Fraction(0) for _ in range(k + 2))
    at_zero = phi_map(k, d, zero)
    checks.append(
        {
            "name": "zero-parameters-give-special-flag",
            "status": "pass" if at_zero.same_flag(special_flag(d, k)) else "fail",
            "detail": f"family at 0 compared with the coordinate flag ({d})",
        }
    )

    for idx, ps in enumerate(tuples):
        if any(p == 0 for p in ps):
            raise ValueError("cell membership tuples must be entirely nonzero")
        flag = phi_map(k, d, ps)
        ok = in_cell(flag, u, target)
        checks.append(
            {
                "name": f"nonzero-tuple-{idx}-in-cell",
                "status": "pass" if ok else "fail",
                "detail": "used: all k+2 parameters nonzero; exact cell membership",
            }
        )
        identities = _recovery_identities(k, d, ps, chart_coords(flag, d))
        bad = [name for name, got, want in identities if got != want]
        checks.append(
            {
                "name": f"nonzero-tuple-{idx}-chart-recovery",
                "status": "pass" if not bad else "fail",
                "detail": "; ".join(bad) if bad else f"{len(identities)} identities hold",
            }
        )

    mixed = tuple(Fraction(1) if i % 2 else Fraction(0) for i in range(k + 2))
    flag = phi_map(k, d, mixed)
    in_fiber = in_springer_fiber(flag, u)
    in_chart = True
    try:
        chart_coords(flag, d)
    except Exception:
        in_chart = False
    checks.append(
        {
            "name": "mixed-tuple-in-fiber-and-chart",
            "status": "pass" if in_fiber and in_chart else "fail",
            "detail": "zero entries allowed away from the open-cell check",
        }
    )

    passed = all(c["status"] == "pass" for c in checks)
    return {
        "case": {"k": k, "d": d},
        "checks": checks,
        "verdict": "pass" if passed else "fail",
    }
