"""Combinatorics of Springer fiber components in type A.

Partitions and tableaux with the jeu-de-taquin slide calculus, the
equinonsingularity move classes, exact rational linear algebra for flags
and Spaltenstein cells, and machine-checked certificates: a singular
component of shape (3,2,2) and smooth charts through the special flags of
the components labelled by Q(k,k,1).
"""

from .partitions import Partition, SmoothnessVerdict, partitions_of
from .tableaux import (
    StandardTableau,
    Tableau,
    concat,
    dist,
    enumerate_tableaux,
    j_stat,
    make_P,
    make_P_shift,
    make_Q,
    parse_tableau,
    restrict,
    schuetzenberger,
    shape_chain,
    standardize,
    tableau,
    tau,
    truncate,
)
from .eqsmoves import (
    EqsClass,
    MoveLabel,
    MoveError,
    block_move,
    c_inverse,
    c_move,
    cut_points,
    dist_class_invariant,
    eqs_class,
    eqs_partition,
)
from .exactlin import (
    ChartCoordinates,
    ChartError,
    Flag,
    Matrix,
    NilpotentOperator,
    Permutation,
    StabilityError,
    bilinear_form,
    cell_of,
    cell_prime_of,
    chart_coords,
    chart_flag,
    degenerate_to_special,
    in_cell,
    jordan_flag,
    jordan_operator,
    perp_flag,
    quotient_type,
    restricted_type,
    shuffles,
    special_flag,
    special_perm,
)
from .certificates import (
    CertificateError,
    Jet,
    SingularityCertificate,
    certify_322,
    f_family,
    phi_map,
    r_vectors,
    v_vectors,
    verify_curve_membership,
    verify_smooth_chart,
)

__version__ = "0.1.0"
