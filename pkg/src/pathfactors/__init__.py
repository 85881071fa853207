"""Path factors of graphs: sun components, the P>=3-factor criterion, and
checkers for degree- and binding-number conditions on factor deleted and
factor critical graphs."""

from .budget import DEFAULT_BUDGET, BudgetExceeded
from .connectivity import BindingNumber, binding_number, edge_connectivity, vertex_connectivity
from .factor import KanekoCertificate, PathFactor, find_path_factor, has_p3_factor, kaneko_check
from .graph import (
    Graph,
    GraphError,
    GraphFormatError,
    complete,
    components,
    corona_of,
    cycle,
    delete_edges,
    delete_vertices,
    disjoint_union,
    empty,
    isolated_count,
    join,
    omega,
    path,
    read_graph,
    star,
    write_graph,
)
from .matching import has_perfect_matching, is_factor_critical, maximum_matching
from .sun import SunDecomposition, SunKind, classify_sun, is_big_sun, sun_count
from .theorems import (
    TheoremParams,
    TheoremReport,
    check_theorem,
    degree_condition,
    kano_lu_yu_condition,
    remark1_family,
    remark2_family,
    theorem_scan,
    verify_factor_critical,
    verify_factor_deleted,
)

__version__ = "0.1.0"
