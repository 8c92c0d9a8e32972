"""
Command line tour
=================

Everything above is also reachable from the `sympbw` entry point; this
script just drives the same verbs in-process.
"""

from sympbw.cli import main

for argv in (
    ["roots", "--n", "2"],
    ["polytope", "--n", "2", "--lambda", "1,1"],
    ["tableaux", "--n", "3", "--lambda", "0,0,1", "--format", "json"],
    ["relations", "--n", "2", "--kind", "degenerate"],
    ["straighten", "--n", "2", "--ring", "classical", "--columns", "1,3;2,4"],
    ["verify", "--n", "2", "--suite", "counts", "--lambda", "1,1"],
    ["verify", "--n", "2", "--suite", "degenerate-ideal", "--seeds", "5"],
):
    print(f"$ sympbw {' '.join(argv)}")
    code = main(argv)
    print(f"(exit {code})\n")
