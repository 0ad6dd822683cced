"""Chain-level coalgebra structure on simplicial chains over the bar-resolution operad.

Submodules: ``chains`` (tensor words and signs), ``operad`` (permutations and
the normalized bar resolution), ``simplicial`` (complexes and contractions),
``cartan`` (the structure maps), ``reconstruction`` (recovering a complex
from its coalgebra), ``topology`` (edge-path presentations and homology).
"""

from .cartan import (CoalgebraEvaluator, DiagonalSequence, Sq0Report, big_phi, check_operad_compat,
                     direct_f, invariant_condition, iterated_diagonal, verify_sq0, xi)
from .chains import (ChainElement, GradedMap, apply_tensor, boundary_map, hom_diff, identity_map,
                     normalize, tensor_boundary)
from .corpus import corpus_names, resolve
from .exceptions import *  # noqa: F401,F403
from .operad import (BarChain, BarWord, Permutation, bar_compose, bar_differential, build_F, e,
                     parse_bar_word, parse_permutation, s0_gamma, tmap)
from .reconstruction import (CoalgebraPresentation, SimplexMorphism, enumerate_simplex_morphisms,
                             find_coalgebra_isomorphism, reconstruct_skeleton, unit_map,
                             vandermonde_independent)
from .simplicial import (SimplicialComplex, VertexMap, augment, boundary, induced_map, iota,
                         load_complex, phi, read_facet_file, skeleton, standard_simplex)
from .topology import (Presentation, abelianization, h1, pi1_presentation, presentations_match,
                       smith_normal_form)

__version__ = "0.1.0"
