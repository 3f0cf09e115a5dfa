"""
Moufang twin trees from two fields: U+ = A_0 * A_1, B = T x| U+, the amalgam
Lambda = P_0 *_B P_1 and the twin tree it acts on.
"""

from twinlab.treetwin.groups import (TreeConfig, TorusElem, UPlusWord, BorelElem,
                                     torus_act, uplus_mul, borel_mul, levi_act,
                                     verify_product_relation, branch_summary)
from twinlab.treetwin.amalgam import (LambdaWord, lambda_mul, lambda_inv, lambda_eq,
                                      identity, m_elem, root_elem, chamber_elem, n_word)
from twinlab.treetwin.building import (Ball, build_ball, w_distance, sequence_distance,
                                       verify_trd, verify_rt2c, verify_moufang, uw_counts,
                                       commensurability_index, verify_faithfulness)
from twinlab.treetwin.twin import (birkhoff_part, codistance, verify_twin, verify_birkhoff,
                                   neg_chamber_elem)
from twinlab.treetwin.parahoric import (parahoric_restrict, commensurability_orbit,
                                        verify_commensurability)
