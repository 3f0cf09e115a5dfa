"""
A walk around the twin tree with panels of thickness 3 and 4, built from
K_0 = GF(2) and K_1 = GF(3).

We build a ball, read W-distances three ways, and then measure how far some
negative chambers are from the base chamber across the twinning.
"""

import random

from twinlab.gfield import field_new
from twinlab.treetwin import TreeConfig, amalgam as am
from twinlab.treetwin.building import Ball, w_distance, bfs_distance, sequence_distance
from twinlab.treetwin.twin import codistance, neg_chamber_elem

cfg = TreeConfig(field_new(2), field_new(3))
ball = Ball(cfg, 3)
print("ball of radius 3: %d chambers, tree: %s" % (len(ball), ball.is_tree()))
print("panels by (type, size):", dict(ball.valencies()))

rng = random.Random(7)
g = ball.chamber_graph()
print("\nW-distance: group normal form / letter sequences / shortest gallery")
for _ in range(5):
    c, d = rng.choice(ball.chambers), rng.choice(ball.chambers)
    print("  %-22s %-22s %s %s %s" % (c, d, w_distance(cfg, c, d), sequence_distance(c, d),
                                      bfs_distance(ball, c, d, g)))

# codistance from the base chamber E_+ to negative chambers: the chambers
# opposite E_+ are exactly those at codistance ()
one = am.identity(cfg)
print("\ncodistance d*(E_+, y) for negative chambers y")
for letters in [(), ((0, cfg.K[0](0)),), ((0, cfg.K[0](1)),), ((1, cfg.K[1](2)), (0, cfg.K[0](1)))]:
    y = neg_chamber_elem(cfg, letters)
    print("  y = %-30s d* = %s" % (letters, codistance(cfg, one, y)))
