#!/usr/bin/env python3
"""Write the printed decomposition tables as JSON fixtures.

Tables are transcribed verbatim in compact cycle notation ("(1243)",
"(12)(34)"). Pairs ((a),(b)) in S3 x S3 map the second factor to points 4..6.
Each table also gets a tampered copy: the first element of B1 that commutes
with some element of B2 is moved into B2 (so the copy has a commuting pair).

usage: make_fixtures.py <fixtures dir>
"""
import json
import os
import re
import sys

S4_KLEIN = {
    "A": "(1), (12)(34),(13)(24),(14)(23)",
    "B": ["(123),(124),(134),(234),(1234),(1243),(1324),(12),(13),(14)",
          "(132),(142),(143),(243),(1432),(1342),(1423),(34),(24),(23)"],
}
S3_PAIR = {"A": "1, (12)", "B": ["(13), (123)", "(23), (132)"]}
A4_ORDER2 = {
    "A": "(1), (12)(34)",
    "B": ["(13)(24), (123),(124),(134),(234)", "(14)(23), (132),(142),(143),(243)"],
}
S4_TRIVIAL = {
    "A": "",
    "B": ["(12)(34), (13), (14), (1234), (1243), (123), (142), (234)",
          "(13)(24), (12), (23), (1324), (1342), (132), (134), (243)",
          "(14)(23), (34), (24), (1423), (1432), (124), (143)"],
}
A4_TRIVIAL = {
    "A": "",
    "B": ["(12)(34), (123), (142),(234)", "(13)(24), (132), (134), (243)", "(14)(23), (124), (143)"],
}
A4_ORDER3 = {
    "A": "1, (123), (132)",
    "B": ["(12)(34), (124), (234)", "(13)(24), (142), (143)", "(14)(23), (134), (243)"],
}
S4_NONNORMAL = [
    ("s4_order2_3split", {
        "A": "(1), (12)(34)",
        "B": ["(13)(24), (123), (134), (234), (1243), (1324), (12), (14)",
              "(14)(23), (132), (142), (143), (1432), (1423), (34), (24)",
              "(1234), (1342), (124), (243), (13), (23)"]}),
    ("s4_transposition_3split", {
        "A": "(1), (24)",
        "B": ["(13)(24),(123),(134),(234),(1243),(1324),(12),(14)",
              "(14)(23), (132), (142), (143), (1432),  (1423), (34)",
              "(12)(34), (1234), (1342),(124),(243), (13),(23)"]}),
    ("s4_order3_3split", {
        "A": "(1), (123), (132)",
        "B": ["(13)(24), (134), (234), (1243), (1324), (12), (14)",
              "(14)(23), (142), (143), (1432), (1423), (34), (24)",
              "(12)(34), (1234), (1342), (124), (243), (13), (23)"]}),
    ("s4_klein_nonnormal_3split", {
        "A": "(1), (12), (34), (12)(34)",
        "B": ["(13)(24),(123), (134), (234), (1243), (1324), (14)",
              "(14)(23), (132), (142), (143), (1432), (1423), (24)",
              "(1234), (1342), (124), (243), (13), (23)"]}),
    ("s4_cyclic4_3split", {
        "A": "1,  (1234), (13)(24), (1432)",
        "B": ["(13), (23), (123), (124), (1243), (1324)",
              "(34), (14), (12)(34), (132), (243), (143), (1342)",
              "(12), (24), (14)(23), (134), (234), (142), (1423)"]}),
]
# The printed C4 table has the commuting pair (34), (12)(34) in B2; moving
# (34) to B1 gives a valid table with part sizes 7, 6, 7.
S4_CYCLIC4_CORRECTED = {
    "A": "1,  (1234), (13)(24), (1432)",
    "B": ["(13), (23), (123), (124), (1243), (1324), (34)",
          "(14), (12)(34), (132), (243), (143), (1342)",
          "(12), (24), (14)(23), (134), (234), (142), (1423)"],
}
S3XS3 = {
    "A": "((1),(1)), ((123),(1)), ((132),(1)), ((1),(123)), ((1),(132)), ((123),(123)), "
         "((123),(132)), ((132),(123)), ((132),(132))",
    "B": ["((12),(1)), ((13),(1)), ((23),(1)), ((123),(12)), ((123),(13)), ((123),(23))",
          "((12),(123)), ((13),(123)), ((23),(123)), ((1),(12)), ((1),(13)), ((1),(23))",
          "((12),(132)), ((13),(132)), ((23),(132)), ((132),(12)), ((132),(13)), "
          "((132),(23)), ((12),(12)), ((12),(13)),((12),(23)), ((13),(12)), ((13),(13)), "
          "((13),(23)), ((23),(12)), ((23),(13)), ((23),(23))"],
}


def split_cycles(text):
    """'(12)(34), (123)' -> ['(1 2)(3 4)', '(1 2 3)']; '1' and '(1)' are the identity."""
    out = []
    for tok in re.findall(r"\((?:[^()]*|\([^()]*\))*\)(?:\([0-9]*\))*|\b1\b", text):
        out.append(tok)
    return out


def spaced(cyc):
    if cyc in ("1", "(1)"):
        return "()"
    cycles = re.findall(r"\(([0-9]+)\)", cyc)
    body = "".join("(" + " ".join(c) + ")" for c in cycles if len(c) > 1)
    return body or "()"


def pair(tok):
    a, b = re.fullmatch(r"\(\s*(\([0-9]*\))\s*,\s*(\([0-9]*\))\s*\)", tok).groups()
    left = spaced(a)
    right = spaced(b)
    if right != "()":
        right = re.sub(r"[0-9]", lambda m: str(int(m.group()) + 3), right)
    if left == "()":
        return right
    if right == "()":
        return left
    return left + right


def elements(text, pairs=False):
    if not text.strip():
        return []
    if pairs:
        return [pair(t) for t in re.findall(r"\(\s*\([0-9]*\)\s*,\s*\([0-9]*\)\s*\)", text)]
    return [spaced(t) for t in split_cycles(text)]


def perm(cyc, n):
    img = list(range(n))
    for c in re.findall(r"\(([0-9 ]+)\)", cyc):
        pts = [int(x) - 1 for x in c.split()]
        for i, a in enumerate(pts):
            img[a] = pts[(i + 1) % len(pts)]
    return img


def commute(a, b, n):
    pa, pb = perm(a, n), perm(b, n)
    return all(pb[pa[i]] == pa[pb[i]] for i in range(n))


def tampered(doc, n):
    parts = [list(p) for p in doc["parts"]]
    for x in parts[0]:
        if any(commute(x, y, n) for y in parts[1]):
            parts[0].remove(x)
            parts[1].append(x)
            out = dict(doc)
            out["parts"] = parts
            return out
    raise ValueError("no tampering move found")


def write(directory, name, group, table, n, pairs=False):
    doc = {
        "group": group,
        "A": elements(table["A"], pairs) or ["()"],
        "parts": [elements(b, pairs) for b in table["B"]],
    }
    with open(os.path.join(directory, name + ".json"), "w") as f:
        json.dump(doc, f, indent=2)
        f.write("\n")
    with open(os.path.join(directory, name + "_tampered.json"), "w") as f:
        json.dump(tampered(doc, n), f, indent=2)
        f.write("\n")


def main():
    d = sys.argv[1] if len(sys.argv) > 1 else "fixtures"
    os.makedirs(d, exist_ok=True)
    write(d, "s3_order2_2split", "S3", S3_PAIR, 3)
    write(d, "s4_klein_2split", "S4", S4_KLEIN, 4)
    write(d, "a4_order2_2split", "A4", A4_ORDER2, 4)
    write(d, "s4_trivial_3split", "S4", S4_TRIVIAL, 4)
    write(d, "a4_trivial_3split", "A4", A4_TRIVIAL, 4)
    write(d, "a4_order3_3split", "A4", A4_ORDER3, 4)
    for name, table in S4_NONNORMAL:
        write(d, name, "S4", table, 4)
    write(d, "s4_cyclic4_3split_corrected", "S4", S4_CYCLIC4_CORRECTED, 4)
    write(d, "s3xs3_3split", "S3xS3", S3XS3, 6, pairs=True)


if __name__ == "__main__":
    main()
