"""Cut ideals of finite simple graphs: matrices, bases, Koszulness, minors.

The package splits along the pipeline:

  graphs    graphs, named families, clique sums, isomorphism classes
  cuts      cuts, cut vectors, the homogenized cut matrix, its semigroup
  toric     binomials of the cut ideal: Markov generators, Buchberger,
            closed-form bases for stars and two-apex bipartite graphs,
            compressedness probes
  koszul    degree-bounded strong Koszulness of pair intersections
  minors    K4/C5 minor tests (fast paths + generic search), contraction
            witnesses onto the three 5-vertex obstruction shapes
  classify  theorem-level classification and computational cross-checks
  cli       command-line front end
"""

from .cuts import Cut, CutMatrix, cut_matrix, cut_vector, enumerate_cuts
from .classify import (
    ClassificationReport,
    CheckResult,
    ResourceGuardError,
    classify,
    cross_validate,
    induced_cycles,
)
from .graphs import (
    Graph,
    GraphError,
    GraphFamily,
    GraphParseError,
    canonical_form,
    clique_sum,
    complete_graph,
    complete_multipartite,
    connected_graph_classes,
    cycle_graph,
    graph,
    graph_classes,
    is_isomorphic,
    read_graph_text,
    recognize_family,
    star_graph,
    write_graph_text,
    zero_sum,
)
from .koszul import (
    KoszulVerdict,
    KoszulWitness,
    failing_pairs,
    intersection_elements,
    is_pair_degree2_generated,
    is_strongly_koszul_up_to,
    semigroup_membership,
)
from .minors import (
    ContractionWitness,
    contraction_witness,
    has_c5_minor,
    has_k4_minor,
    has_minor,
)
from .toric import (
    Binomial,
    KernelValidationError,
    Monomial,
    MonomialOrder,
    bipartite_groebner_family,
    buchberger,
    compressed_probe,
    fiber,
    groebner_text,
    is_groebner_basis,
    markov_generators_up_to,
    minsize_order,
    random_grevlex_order,
    star_groebner_family,
)

__version__ = "0.1.0"
