"""Independence complexes of square grid graphs.

Construct grid graphs and their last-column families, fold-reduce their
independence complexes, compute homology exactly, evaluate Euler
characteristics by transfer matrix, and compare everything against the
closed-form homotopy types.
"""

from .faces import (
    DEFAULT_FACE_BUDGET,
    FaceBudgetExceeded,
    FVector,
    count_faces,
    deletion_graph,
    enumerate_faces,
    euler_from_fvector,
    f_vector,
    faces_by_dimension,
    link_graph,
)
from .fold import (
    Cone,
    Fold,
    Move,
    ReductionTrace,
    StripK2,
    find_fold,
    homotopy_type_if_closed,
    reduce_graph,
)
from .graphs import (
    Family,
    Graph,
    GraphError,
    Vertex,
    build_family,
    build_gamma,
    delete_vertices,
    graph_from_json_dict,
    graph_to_json_dict,
    neighborhood,
)
from .homology import (
    BettiProfile,
    BoundaryMatrix,
    betti_of_family,
    betti_of_graph,
    betti_over_field,
    boundary_matrix,
    integral_homology,
)
from .predictor import (
    chi_of_wedge,
    decompose_even,
    decompose_odd,
    expected_f6,
    predict_family,
    predict_gamma,
)
from .transfer import (
    TransferModel,
    build_transfer_model,
    column_states,
    euler_chi,
    euler_sweep,
    period_detect,
)
from .wedge import WedgeOfSpheres, wedge_sum

__version__ = "0.1.0"

__all__ = [
    "BettiProfile",
    "BoundaryMatrix",
    "Cone",
    "DEFAULT_FACE_BUDGET",
    "FVector",
    "FaceBudgetExceeded",
    "Family",
    "Fold",
    "Graph",
    "GraphError",
    "Move",
    "ReductionTrace",
    "StripK2",
    "TransferModel",
    "Vertex",
    "WedgeOfSpheres",
    "betti_of_family",
    "betti_of_graph",
    "betti_over_field",
    "boundary_matrix",
    "build_family",
    "build_gamma",
    "build_transfer_model",
    "chi_of_wedge",
    "column_states",
    "count_faces",
    "decompose_even",
    "decompose_odd",
    "delete_vertices",
    "deletion_graph",
    "enumerate_faces",
    "euler_chi",
    "euler_from_fvector",
    "euler_sweep",
    "expected_f6",
    "f_vector",
    "faces_by_dimension",
    "find_fold",
    "graph_from_json_dict",
    "graph_to_json_dict",
    "homotopy_type_if_closed",
    "integral_homology",
    "link_graph",
    "neighborhood",
    "period_detect",
    "predict_family",
    "predict_gamma",
    "reduce_graph",
    "wedge_sum",
]
