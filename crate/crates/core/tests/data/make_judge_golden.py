"""Regenerates judge_golden.csv from the rule table.

Run from this directory: python3 make_judge_golden.py > judge_golden.csv
"""

import csv
import itertools
import sys

SHAPES = ["linear_suffix", "non_linear", "expansion_only"]
ORDERS = ["full_first", "reduced_first", "not_applicable"]
CATEGORIES = ["1", "2", "3", "unknown"]
FAST = ["false", "true"]


def expected(shape, order, category, fast):
    rules = []
    if shape == "linear_suffix" and order == "full_first" and category == "1":
        rules.append(("likely_anaphoric", "1"))
    if shape == "linear_suffix" and (order == "reduced_first" or category == "3"):
        rules.append(("unlikely_anaphoric", "2"))
    if shape in ("non_linear", "expansion_only") and fast == "true":
        rules.append(("possible_lexical", "3"))
    assert len(rules) <= 1, (shape, order, category, fast)
    return rules[0] if rules else ("undetermined", "none")


writer = csv.writer(sys.stdout, lineterminator="\n")
writer.writerow(["shape", "order", "category", "domain_fast_evolving", "label", "rule"])
for shape, order, category, fast in itertools.product(SHAPES, ORDERS, CATEGORIES, FAST):
    writer.writerow([shape, order, category, fast, *expected(shape, order, category, fast)])
