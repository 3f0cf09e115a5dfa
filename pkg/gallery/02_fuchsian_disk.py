"""
Draw the standard apartment of the right-angled Fuchsian building I_{5,3}
in the Poincare disk.  Each chamber is shaded by how many chambers of a
radius 3 ball retract onto it, so the picture shows the branching: a chamber
w of the apartment has q^l(w) preimages.
"""

import sys

from twinlab.fuchsian import FuchsianBall
from twinlab.render import ball_svg

out = sys.argv[1] if len(sys.argv) > 1 else "fuchsian_ball.svg"
ball = FuchsianBall(5, 2, 3)
print("chambers by syllable length:", ball.counts_by_length())
with open(out, "w") as f:
    f.write(ball_svg(ball, size=640))
print("wrote", out)
