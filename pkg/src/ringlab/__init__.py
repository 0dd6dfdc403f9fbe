"""ringlab: exhaustive computational algebra for finite rings and semirings.

Build finite rings from structure constants or Cayley tables, construct
group rings and quaternion algebras, and decide structural properties
(central essentiality, essential ideals, semiprimeness, reducedness,
central rationality, strong boundedness) with re-verifiable
certificates.
"""

from .constructions import (build_preset, class_sum_center, corpus, delta_decomposition,
                            delta_ideal, group_element_vector, group_ring, matrix_delta,
                            matrix_ring2, quaternion_algebra, quaternion_center_formula,
                            upper_triangular2)
from .groups import (GroupTable, group_cyclic, group_elementary_abelian_2, group_from_table,
                     group_product, group_q8)
from .ideals import (AdditiveSubgroup, additive_closure, all_ideals, commutator,
                     generated_ideal, idempotents, is_nilpotent_subgroup, left_annihilator,
                     left_ideal_generated, nilpotency_index, right_annihilator,
                     right_ideal_generated, two_sided_annihilator, two_sided_ideal_generated)
from .modules import ZnModule
from .predicates import (Certificate, center, central_idempotents, find_central_multiplier,
                         is_centrally_essential, is_centrally_rational, is_commutative,
                         is_essential_right_ideal, is_essential_submodule, is_reduced,
                         is_semiprime, is_strongly_bounded, minimal_right_ideals)
from .rings import (AxiomError, CapExceeded, Ring, RingError, StructureRing, TableRing,
                    direct_sum, make_table_ring, make_zn, reify_subring, zero_mult_ring,
                    zero_ring)
from .semirings import (Semiring, example_order5, is_ce_semiring, is_commutative_semiring,
                        is_semisubtractive, make_semiring, ring_as_semiring, semiring_center)
from .specdoc import parse_ring_spec, serialize_ring_spec
from .suite import search_nilpotent_minimal_ideals, verify_paper

__version__ = "0.1.0"
