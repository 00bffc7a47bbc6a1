#!/usr/bin/env python3
"""Generates the two-train, two-passenger product automaton.

Train 1 loops A -> B -> C -> D (travel 100, stop D1), starting on the track
towards D.  Train 2 loops B -> D (travel 55, stop D2), starting on the track
towards B.  Alice goes from A to D, Bob from B to A.  Boarding and alighting
take no time and need the train to be stopped at the passenger's station.
A never-reset clock `day` bounds the horizon so the zone graph is finite.

usage: gen_train.py [--scale K] [--horizon H] > train.pta
"""
import argparse
from collections import deque

T1_CYCLE = ["A", "B", "C", "D"]
T2_CYCLE = ["B", "D"]


def train_moves(cycle, travel_name, clock, travel, delay):
    """(from, to, guard) for a train alternating stops and travels."""
    moves = []
    n = len(cycle)
    for i, station in enumerate(cycle):
        track = travel_name(station)
        nxt = cycle[(i + 1) % n]
        moves.append((station, track, f"{clock} = {delay}"))
        moves.append((track, nxt, f"{clock} = {travel}"))
    return moves


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--scale", type=int, default=1)
    ap.add_argument("--horizon", type=int, default=500)
    args = ap.parse_args()
    k = args.scale
    travel1, travel2 = 100 * k, 55 * k
    horizon = args.horizon * k

    t1 = train_moves(T1_CYCLE, lambda s: s + "p", "x1", travel1, "D1")
    t2 = train_moves(T2_CYCLE, lambda s: s + "pp", "x2", travel2, "D2")
    t1_inv = {s: "x1 <= D1" for s in T1_CYCLE}
    t1_inv.update({s + "p": f"x1 <= {travel1}" for s in T1_CYCLE})
    t2_inv = {s: "x2 <= D2" for s in T2_CYCLE}
    t2_inv.update({s + "pp": f"x2 <= {travel2}" for s in T2_CYCLE})

    dest = {"alice": "D", "bob": "A"}
    init = ("Cp", "Dpp", "A", "B")

    def is_goal(state):
        return state[2] == dest["alice"] and state[3] == dest["bob"]

    def passenger_moves(state, who):
        t1loc, t2loc = state[0], state[1]
        pos = state[2 + who]
        name = ("alice", "bob")[who]
        out = []
        if pos in ("T1", "T2"):
            stop = t1loc if pos == "T1" else t2loc
            if stop in (T1_CYCLE if pos == "T1" else T2_CYCLE):
                out.append(stop)
        elif pos != dest[name]:
            if t1loc == pos:
                out.append("T1")
            if t2loc == pos:
                out.append("T2")
        return out

    def successors(state):
        for src, dst, guard in t1:
            if state[0] == src:
                yield (dst,) + state[1:], guard, "x1"
        for src, dst, guard in t2:
            if state[1] == src:
                yield (state[0], dst) + state[2:], guard, "x2"
        for who in (0, 1):
            for pos in passenger_moves(state, who):
                nxt = list(state)
                nxt[2 + who] = pos
                yield tuple(nxt), None, None

    name = lambda s: "_".join(s)
    seen = {init}
    order = [init]
    edges = []
    queue = deque([init])
    while queue:
        s = queue.popleft()
        for t, guard, reset in successors(s):
            if is_goal(t):
                edges.append((name(s), "goal", guard, reset))
                continue
            edges.append((name(s), name(t), guard, reset))
            if t not in seen:
                seen.add(t)
                order.append(t)
                queue.append(t)

    print(f"// two trains, two passengers; generated by gen_train.py --scale {k} --horizon {args.horizon}")
    print("clocks x1, x2, day;")
    print("params D1, D2;")
    print("actions ;")
    print("global day;")
    print()
    for i, s in enumerate(order):
        inv = f"{t1_inv[s[0]]} && {t2_inv[s[1]]} && day <= {horizon}"
        print(f"{'init ' if i == 0 else ''}loc {name(s)} inv {inv};")
    print(f"loc goal inv day <= {horizon};")
    print()
    for src, dst, guard, reset in edges:
        line = f"edge {src} -> {dst}"
        if guard:
            line += f" when {guard}"
        if reset:
            line += f" reset {{{reset}}}"
        print(line + ";")


if __name__ == "__main__":
    main()
