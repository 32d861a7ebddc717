#!/usr/bin/env python3
"""Generate PD-code fixtures from polygonal links in R^3.

Each component is sampled as a closed polyline, projected to the xy-plane,
and every transverse self/mutual intersection of the projection becomes a
crossing. Edge labels are assigned consecutively along each component.

Crossing lines follow the `X a b c d sign` convention used by the library:
a is the incoming under edge, c the outgoing under edge, and b, d complete
the counterclockwise order around the crossing.

Usage: gen_pd.py {trefoil,hopf,borromean,mt_link} > out.pd
"""
import math
import sys


def braid_closure(word, strands, radius=6.0, samples=41, gap=0.0):
    """Closed braid around the z-axis. `word` holds signed generator indices
    (1-based). Returns the component polylines and the angular sector
    [0, gap) left free of crossings."""
    n = len(word)
    span = 2 * math.pi - gap
    pos = list(range(strands))  # pos[s] = current position of strand s
    tracks = [[] for _ in range(strands)]
    for step, g in enumerate(word):
        i = abs(g) - 1
        a = [s for s in range(strands) if pos[s] == i][0]
        b = [s for s in range(strands) if pos[s] == i + 1][0]
        for k in range(samples):
            u = k / samples
            th = gap + span * (step + u) / n
            for s in range(strands):
                if s == a:
                    r, z = i + u, (1 if g > 0 else -1) * math.sin(math.pi * u)
                elif s == b:
                    r, z = i + 1 - u, -(1 if g > 0 else -1) * math.sin(math.pi * u)
                else:
                    r, z = pos[s], 0.0
                rr = radius + r
                tracks[s].append((rr * math.cos(th), rr * math.sin(th), 0.3 * z, pos[s]))
        pos[a], pos[b] = i + 1, i
    # the sector [0, gap) is straight: continue each track at constant radius
    for k in range(samples):
        th = gap * k / samples
        for s in range(strands):
            rr = radius + pos[s]
            tracks[s].append((rr * math.cos(th + 2 * math.pi), rr * math.sin(th + 2 * math.pi), 0.0, pos[s]))
    # glue tracks into components: track s ends where track with start pos == end pos begins
    start = {}
    for s in range(strands):
        start[s] = s  # initial position of strand s is s
    comps, used = [], set()
    for s0 in range(strands):
        if s0 in used:
            continue
        comp, s = [], s0
        while s not in used:
            used.add(s)
            comp += [p[:3] for p in tracks[s]]
            s = pos[s]  # strand that starts at the final position of s
        comps.append(comp)
    return comps


def encircling_loop(theta, center_r, half, samples=120):
    """A loop around the braid strands at angle theta, tilted so that its
    projection is an ellipse crossing every strand twice."""
    er = (math.cos(theta), math.sin(theta), 0.0)
    et = (-math.sin(theta), math.cos(theta), 0.0)
    c = (center_r * er[0], center_r * er[1], 0.0)
    pts = []
    for k in range(samples):
        ph = 2 * math.pi * k / samples
        a, b = half * math.cos(ph), math.sin(ph)
        pts.append((c[0] + a * er[0] + 0.4 * b * et[0],
                    c[1] + a * er[1] + 0.4 * b * et[1],
                    2.0 * b))
    return pts


def torus_knot(p, q, samples=300):
    pts = []
    for k in range(samples):
        s = 2 * math.pi * k / samples
        r = 2 + math.cos(q * s)
        pts.append((r * math.cos(p * s), r * math.sin(p * s), -math.sin(q * s)))
    return pts


def circle(cx, cy, r, tilt, samples=120):
    pts = []
    for k in range(samples):
        s = 2 * math.pi * k / samples
        x, y = cx + r * math.cos(s), cy + r * math.sin(s)
        pts.append((x, y, tilt(x, y)))
    return pts


def seg_intersect(p, q, r, s):
    d = (q[0] - p[0]) * (s[1] - r[1]) - (q[1] - p[1]) * (s[0] - r[0])
    if abs(d) < 1e-14:
        return None
    t = ((r[0] - p[0]) * (s[1] - r[1]) - (r[1] - p[1]) * (s[0] - r[0])) / d
    u = ((r[0] - p[0]) * (q[1] - p[1]) - (r[1] - p[1]) * (q[0] - p[0])) / d
    if 0 <= t < 1 and 0 <= u < 1:
        return t, u
    return None


def pd_from_polylines(comps):
    segs = []
    for ci, c in enumerate(comps):
        for k in range(len(c)):
            segs.append((ci, k, c[k], c[(k + 1) % len(c)]))
    events = {ci: [] for ci in range(len(comps))}
    crossings = []
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            ci, ki, p, q = segs[i]
            cj, kj, r, s = segs[j]
            if ci == cj and (abs(ki - kj) <= 1 or abs(ki - kj) == len(comps[ci]) - 1):
                continue
            hit = seg_intersect(p, q, r, s)
            if not hit:
                continue
            t, u = hit
            zi = p[2] + t * (q[2] - p[2])
            zj = r[2] + u * (s[2] - r[2])
            assert abs(zi - zj) > 1e-6, "projection is not generic"
            di = (q[0] - p[0], q[1] - p[1])
            dj = (s[0] - r[0], s[1] - r[1])
            x = len(crossings)
            if zi > zj:
                over, under, do, du = (ci, ki + t), (cj, kj + u), di, dj
            else:
                over, under, do, du = (cj, kj + u), (ci, ki + t), dj, di
            sign = 1 if do[0] * du[1] - do[1] * du[0] > 0 else -1
            crossings.append({"sign": sign})
            events[over[0]].append((over[1], x, "over"))
            events[under[0]].append((under[1], x, "under"))
    # label edges: edge e of a component runs from one crossing passage to the next
    label = 1
    comp_lines = []
    for ci in range(len(comps)):
        ev = sorted(events[ci])
        labels = []
        first = label
        for idx, (_, x, role) in enumerate(ev):
            inc = label - 1 if idx > 0 else None
            out = label
            labels.append(out)
            crossings[x].setdefault(role, {})["out"] = out
            crossings[x][role]["in_idx"] = idx
            label += 1
        n = len(ev)
        for idx, (_, x, role) in enumerate(ev):
            crossings[x][role]["in"] = labels[(idx - 1) % n]
        comp_lines.append(labels)
    lines = [f"pd {len(crossings)} {len(comps)}"]
    for c in crossings:
        a, cc = c["under"]["in"], c["under"]["out"]
        if c["sign"] > 0:
            b, d = c["over"]["out"], c["over"]["in"]
        else:
            b, d = c["over"]["in"], c["over"]["out"]
        lines.append(f"X {a} {b} {cc} {d} {'+1' if c['sign'] > 0 else '-1'}")
    for labels in comp_lines:
        lines.append("comp " + " ".join(map(str, labels)))
    return "\n".join(lines) + "\n"


def main():
    which = sys.argv[1] if len(sys.argv) > 1 else "mt_link"
    if which == "trefoil":
        comps = [torus_knot(2, 3)]
    elif which == "hopf":
        comps = [circle(0, 0, 1, lambda x, y: -0.3 * x),
                 circle(1, 0, 1, lambda x, y: -0.3 * (y + 0.2))]
    elif which == "borromean":
        comps = braid_closure([1, -2, 1, -2, 1, -2], 3)
    elif which == "mt_link":
        gap = 0.5
        comps = braid_closure([1, -2, 1, -2, 1, -2], 3, gap=gap)
        comps.append(encircling_loop(gap / 2, 7.0, 2.2))
    else:
        sys.exit(f"unknown fixture {which}")
    sys.stdout.write(pd_from_polylines(comps))


if __name__ == "__main__":
    main()
