"""
Right-angled Fuchsian buildings: the partially commutative U+, generators of
U^{i,i+1} and their Levi actions, and the Bourdon lattice model of I_{r,1+q}.
"""

from twinlab.fuchsian.groups import (FuchsianConfig, FuchsianUWord, UGenerator,
                                     fuchsian_umul, fuchsian_torus_act, fuchsian_levi_act,
                                     verify_fuchsian_product_relation, classify_window,
                                     make_generator, generator_word, gen_type, uw_subgroup)
from twinlab.fuchsian.lattice import (GammaWord, gamma_mul, gamma_gen, gamma_one, gamma_order,
                                      commuting_pairs, FuchsianBall, build_fuchsian_ball,
                                      local_structure, verify_loops, verify_growth)
