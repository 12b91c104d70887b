#!/usr/bin/env python3
"""Run the three protocols on a small cast of players and print the results.

Usage: python3 scripts/protocol_demo.py
"""

from fractions import Fraction

from cakecalc import (
    Player,
    bundled_config_path,
    check_envy_free,
    check_proportional,
    cut_and_choose,
    evaluate,
    last_diminisher,
    load_valuation,
    moving_knife,
    render_interval_set,
)


def report(title, alloc, players):
    print(f"== {title} ==")
    for pid in sorted(alloc.pieces):
        piece = alloc.pieces[pid]
        own = evaluate(players[pid].valuation, piece)
        print(f"  player {pid}: {render_interval_set(piece)}  value {own}")
    prop = check_proportional(alloc, players)
    envy = check_envy_free(alloc, players)
    print(f"  proportional: {prop['proportional']}  envy_free: {envy['envy_free']}")
    print()


def main():
    uniform = load_valuation(bundled_config_path("uniform"))
    fig2 = load_valuation(bundled_config_path("fig2"))

    pair = [Player(0, fig2), Player(1, uniform)]
    report("cut and choose (boxes vs uniform)", cut_and_choose(*pair), pair)

    trio = [Player(0, uniform), Player(1, fig2), Player(2, uniform)]
    report("last diminisher (3 players)", last_diminisher(trio), trio)
    report("moving knife (3 players)", moving_knife(trio), trio)


if __name__ == "__main__":
    main()
