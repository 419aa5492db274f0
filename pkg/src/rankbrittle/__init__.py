"""Exact cut-rank width parameters, vertex-minor search, and executable
lemma witnesses for dense-graph depth measures."""

from .caps import Caps, DEFAULT_CAPS
from .combinat import (Sunflower, bipartite_pattern, find_sunflower,
                       is_sunflower, monochromatic_subset,
                       path_or_high_degree, sunflower_threshold)
from .cutrank import CutRankTable, cut_rank, gf2_rank, rho_width
from .decomposition import Decomposition, decomposition_width
from .errors import (FormatError, InputError, RankBrittleError,
                     ResourceLimitError, WitnessError)
from .graph6 import decode as graph6_decode
from .graph6 import encode as graph6_encode
from .graphs import (Graph, LinkMatrix, ProductKind, blown_product,
                     complement, connected_components, disjoint_union,
                     from_edgelist_text, graph_from_edges, make_family,
                     product, to_edgelist_text, twin_classes)
from .isomorphism import are_isomorphic, find_isomorphism
from .solvers import (CutCertificate, LinearLayout, beta_rho_k,
                      check_cut_certificate, colorful_cut_witness,
                      dfs_layout, layout_width, lrw_exact, rank_depth_exact,
                      rbrit_exact)
from .vm import (VMWitness, apply_witness, has_vertex_minor_isomorphic,
                 local_complement, local_orbit, locally_equivalent, pivot,
                 reduce_triple_twin)

__all__ = [name for name in dir() if not name.startswith("_")]
