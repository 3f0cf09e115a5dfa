"""
Poincare disk pictures of the standard apartment of I_{r,1+q}.

The base chamber is the regular right-angled r-gon centred at the origin.
Side j lies on a circle orthogonal to the unit circle and is the mirror of
r_j; sides j and j+1 meet at a right angle, as they must for commuting
reflections.  The chamber w = s_1 ... s_k is the image of the base chamber
under the inversions, applied from the right.
"""

import cmath
import math

from twinlab.coxeter import polygon_ball, _check_rank


def base_polygon(r):
    """(vertices, mirrors): the vertices of the base r-gon and, for each side,
    the (centre, radius) of its circle."""
    _check_rank(r)
    # cosh R = cot(pi/r) cot(alpha/2) with alpha = pi/2
    R = math.acosh(1/math.tan(math.pi/r))
    rho = math.tanh(R/2)
    verts = [rho*cmath.exp(2j*math.pi*k/r) for k in range(r)]
    phi = math.pi/r
    d = (rho*rho + 1)/(2*rho*math.cos(phi))
    mirrors = []
    for j in range(r):
        c = d*cmath.exp(1j*(2*math.pi*j/r + phi))
        mirrors.append((c, math.sqrt(d*d - 1)))
    return verts, mirrors


def invert(z, mirror):
    c, rad = mirror
    w = z - c
    return c + rad*rad/w.conjugate()


def side_points(r, samples=12):
    "boundary of the base chamber, side j running from vertex j to vertex j+1"
    verts, mirrors = base_polygon(r)
    pts = []
    for j in range(r):
        c, _ = mirrors[j]
        a, b = verts[j], verts[(j + 1) % r]
        ta, tb = cmath.phase(a - c), cmath.phase(b - c)
        # take the short way round the circle
        dt = (tb - ta + math.pi) % (2*math.pi) - math.pi
        rad = abs(a - c)
        for k in range(samples):
            pts.append(c + rad*cmath.exp(1j*(ta + dt*k/samples)))
    return pts


def chamber_outline(word, r, samples=12):
    _, mirrors = base_polygon(r)
    pts = side_points(r, samples)
    for i in reversed(word):
        pts = [invert(z, mirrors[i]) for z in pts]
    return pts


def _fmt(x):
    return ("%.4f" % x).rstrip("0").rstrip(".")


def apartment_svg(r, radius, weights=None, size=480, samples=12):
    """SVG of the apartment chambers of length <= radius.  weights maps Weyl
    words to nonnegative numbers; chambers are shaded by weight (none = white)."""
    weights = weights or {}
    top = max(weights.values(), default=0)
    half = size/2
    out = ['<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" '
           'viewBox="0 0 %d %d">' % (size, size, size, size),
           '<circle cx="%s" cy="%s" r="%s" fill="none" stroke="#888" stroke-width="1"/>'
           % (_fmt(half), _fmt(half), _fmt(half - 1))]
    for level in polygon_ball(r, radius):
        for w in level:
            pts = chamber_outline(w, r, samples)
            path = " ".join("%s,%s" % (_fmt(half + (half - 1)*z.real), _fmt(half - (half - 1)*z.imag))
                            for z in pts)
            wt = weights.get(w, 0)
            if top and wt:
                s = math.log1p(wt)/math.log1p(top)
                g = int(round(235 - 170*s))
                fill = "rgb(%d,%d,255)" % (g, g)
            else:
                fill = "white"
            label = "".join("s%d" % i for i in w) or "E"
            out.append('<polygon points="%s" fill="%s" stroke="black" stroke-width="0.6">'
                       '<title>%s %s</title></polygon>' % (path, fill, label, wt))
    out.append("</svg>")
    return "\n".join(out) + "\n"


def ball_svg(ball, size=480):
    """Shade the apartment by the number of ball chambers that retract onto
    each apartment chamber (their Weyl-group image)."""
    weights = {}
    for g in ball.chambers:
        w = g.weyl()
        weights[w] = weights.get(w, 0) + 1
    return apartment_svg(ball.r, ball.radius, weights, size)
