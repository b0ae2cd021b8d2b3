#!/usr/bin/env python3
"""Instantiates the reference-table families into data/golden/*.json.

Everything here transcribes the printed tables directly: epsilon-coordinate
formulas for the classical strings, simple-root coefficient arrays and
fundamental-weight indices (table numbering) for the exceptional types.
Regenerate with:  python3 scripts/gen_golden.py
"""

import json
import os

OUT = os.path.join(os.path.dirname(__file__), "..", "data", "golden")


def eps(n, *pairs):
    v = [0] * n
    for idx, c in pairs:
        v[idx - 1] += c
    return v


def table1_rows():
    rows = []

    # sl_n, partition (2^r, 1^{n-2r}): gamma_i = e_i - e_{n-i+1},
    # lambda_i = w_i + w_{n-i}
    for n in range(2, 9):
        for r in range(1, n // 2 + 1):
            part = [2] * r + [1] * (n - 2 * r)
            ucs = [eps(n, (i, 1), (n - i + 1, -1)) for i in range(1, r + 1)]
            lams = []
            for i in range(1, r + 1):
                lam = {}
                lam[i] = lam.get(i, 0) + 1
                lam[n - i] = lam.get(n - i, 0) + 1
                lams.append(lam)
            rows.append({
                "type": "A%d" % (n - 1),
                "partition": part,
                "ucs_eps": ucs,
                "lambdas": lams,
            })

    # sp_2n, partition (2^r, 1^{2n-2r}): gamma_i = 2 e_i, lambda_i = 2 w_i
    for n in range(2, 6):
        for r in range(1, n + 1):
            part = [2] * r + [1] * (2 * n - 2 * r)
            rows.append({
                "type": "C%d" % n,
                "partition": part,
                "ucs_eps": [eps(n, (i, 2)) for i in range(1, r + 1)],
                "lambdas": [{i: 2} for i in range(1, r + 1)],
            })

    # so_n, partition (3, 1^l), l >= 4: gamma_1 = e1 + e2, gamma_2 = e1 - e2;
    # lambda_1 = w2, lambda_2 = 2 w1
    for l in range(4, 9):
        n = 3 + l
        rank = n // 2
        rows.append({
            "type": ("B%d" if n % 2 else "D%d") % rank,
            "partition": [3] + [1] * l,
            "ucs_eps": [eps(rank, (1, 1), (2, 1)), eps(rank, (1, 1), (2, -1))],
            "lambdas": [{2: 1}, {1: 2}],
        })

    # so_n, partition (2^{2r}, 1^l): gamma_i = e_{2i-1} + e_{2i};
    # lambda_i = w_{2i} (i < r); the last lambda depends on l
    for n in range(5, 12):
        for r in range(1, n // 4 + 1):
            l = n - 4 * r
            rank = n // 2
            part = [2] * (2 * r) + [1] * l
            ucs = [eps(rank, (2 * i - 1, 1), (2 * i, 1)) for i in range(1, r + 1)]
            lams = [{2 * i: 1} for i in range(1, r)]
            if l <= 1:
                lams.append({2 * r: 2})
            elif l == 2:
                lams.append({2 * r: 1, 2 * r + 1: 1})
            else:
                lams.append({2 * r: 1})
            row = {
                "type": ("B%d" if n % 2 else "D%d") % rank,
                "partition": part,
                "ucs_eps": ucs,
                "lambdas": lams,
            }
            if l == 0:  # very even: the second orbit replaces the last entries
                row["second_variant"] = {
                    "gamma_eps": eps(rank, (2 * r - 1, 1), (2 * r, -1)),
                    "lambda": {2 * r - 1: 2},
                }
            rows.append(row)

    # exceptional rows, table numbering throughout
    rows += [
        {
            "type": "E6",
            "diagram": [1, 0, 0, 0, 1, 0],
            "ucs_coeffs": [[1, 2, 3, 2, 1, 2], [1, 1, 1, 1, 1, 0]],
            "lambdas": [{6: 1}, {1: 1, 5: 1}],
        },
        {
            "type": "E7",
            "diagram": [0, 1, 0, 0, 0, 0, 0],
            "ucs_coeffs": [[1, 2, 3, 4, 3, 2, 2], [1, 2, 2, 2, 1, 0, 1]],
            "lambdas": [{6: 1}, {2: 1}],
        },
        {
            "type": "E7",
            "diagram": [2, 0, 0, 0, 0, 0, 0],
            "ucs_coeffs": [[1, 2, 3, 4, 3, 2, 2], [1, 2, 2, 2, 1, 0, 1],
                           [1, 0, 0, 0, 0, 0, 0]],
            "lambdas": [{6: 1}, {2: 1}, {1: 2}],
        },
        {
            "type": "E8",
            "diagram": [0, 0, 0, 0, 0, 0, 1, 0],
            "ucs_coeffs": [[2, 3, 4, 5, 6, 4, 2, 3], [0, 1, 2, 3, 4, 3, 2, 2]],
            "lambdas": [{1: 1}, {7: 1}],
        },
        {
            "type": "F4",
            "diagram": [1, 0, 0, 0],
            "ucs_coeffs": [[2, 4, 3, 2], [2, 2, 1, 0]],
            "lambdas": [{4: 1}, {1: 2}],
        },
    ]
    return rows


def table2_rows():
    def gens(*pairs):
        return [{"weight": w, "degree": d} for w, d in pairs]

    rows = []
    # so_{4t+3} = B_{2t+1}, (3, 2^{2t}): (w_{2i-1}, i), (w_{2i}, i) i<=t,
    # (2 w_{2t+1}, t+1)
    for t in (1, 2):
        g = []
        for i in range(1, t + 1):
            g.append(({2 * i - 1: 1}, i))
        for i in range(1, t + 1):
            g.append(({2 * i: 1}, i))
        g.append(({2 * t + 1: 2}, t + 1))
        rows.append({
            "type": "B%d" % (2 * t + 1),
            "partition": [3] + [2] * (2 * t),
            "dim_gamma_tilde": 2 * t + 1,
            "generators": gens(*g),
            "normality": "-",
        })

    # so_{4t+4} = D_{2t+2}, (3, 2^{2t}, 1)
    for t in (1,):
        g = []
        for i in range(1, t + 1):
            for j in range(i, t + 1):
                w = {}
                w[2 * i - 1] = w.get(2 * i - 1, 0) + 1
                w[2 * j - 1] = w.get(2 * j - 1, 0) + 1
                g.append((w, i + j))
        for i in range(1, t + 1):
            g.append(({2 * i: 1}, i))
        for j in range(1, t + 1):
            w = {2 * j - 1: 1}
            w[2 * t + 1] = w.get(2 * t + 1, 0) + 1
            w[2 * t + 2] = w.get(2 * t + 2, 0) + 1
            g.append((w, t + j + 1))
        g.append(({2 * t + 1: 2}, t + 1))
        g.append(({2 * t + 2: 2}, t + 1))
        rows.append({
            "type": "D%d" % (2 * t + 2),
            "partition": [3] + [2] * (2 * t) + [1],
            "dim_gamma_tilde": 2 * t + 2,
            "generators": gens(*g),
            "normality": "+",
        })

    # so_{4t+l+3}, (3, 2^{2t}, 1^l), l >= 2, at t = 1, l in {2, 3, 4}
    for l in (2, 3, 4):
        t = 1
        n = 4 * t + l + 3
        rank = n // 2
        g = [({2 * i: 1}, i) for i in range(1, t + 1)]
        for i in range(1, t + 2):
            for j in range(i, t + 2):
                w = {}
                w[2 * i - 1] = w.get(2 * i - 1, 0) + 1
                w[2 * j - 1] = w.get(2 * j - 1, 0) + 1
                g.append((w, i + j))
        if l == 2:
            g.append(({2 * t + 2: 2}, t + 1))
        elif l == 3:
            g.append(({2 * t + 2: 1, 2 * t + 3: 1}, t + 1))
        else:
            g.append(({2 * t + 2: 1}, t + 1))
        rows.append({
            "type": ("B%d" if n % 2 else "D%d") % rank,
            "partition": [3] + [2] * (2 * t) + [1] * l,
            "dim_gamma_tilde": 2 * t + 2,
            "generators": gens(*g),
            "normality": "+",
        })

    rows += [
        {
            "type": "E6",
            "diagram": [0, 0, 1, 0, 0, 0],
            "dim_gamma_tilde": 4,
            "generators": gens(({6: 1}, 1), ({1: 1, 5: 1}, 2), ({3: 1}, 3), ({2: 1, 4: 1}, 4)),
            "normality": "+",
        },
        {
            "type": "E7",
            "diagram": [0, 0, 0, 0, 1, 0, 0],
            "dim_gamma_tilde": 4,
            "generators": gens(({6: 1}, 1), ({2: 1}, 2), ({5: 1}, 3), ({4: 1}, 4)),
            "normality": "+",
        },
        {
            "type": "E7",
            "diagram": [1, 0, 0, 0, 0, 0, 1],
            "dim_gamma_tilde": 7,
            "generators": gens(({6: 1}, 1), ({2: 1}, 2), ({5: 1}, 3), ({1: 2}, 3),
                               ({4: 1}, 4), ({1: 1, 7: 1}, 4), ({1: 1, 3: 1}, 5),
                               ({7: 2}, 5), ({3: 1, 7: 1}, 6), ({3: 2}, 7)),
            "normality": "+",
        },
        {
            "type": "E8",
            "diagram": [0, 1, 0, 0, 0, 0, 0, 0],
            "dim_gamma_tilde": 4,
            "generators": gens(({1: 1}, 1), ({7: 1}, 2), ({2: 1}, 3), ({3: 1}, 4)),
            "normality": "+",
        },
        {
            "type": "E8",
            "diagram": [0, 0, 0, 0, 0, 0, 0, 1],
            "dim_gamma_tilde": 8,
            "generators": gens(({1: 1}, 1), ({7: 1}, 2), ({2: 1}, 3), ({3: 1}, 4),
                               ({8: 1}, 4), ({6: 1}, 5), ({4: 1}, 6), ({5: 1}, 7)),
            "normality": "+",
        },
        {
            "type": "F4",
            "diagram": [0, 0, 1, 0],
            "dim_gamma_tilde": 4,
            "generators": gens(({4: 1}, 1), ({1: 2}, 2), ({3: 1}, 3), ({2: 2}, 4)),
            "normality": "+",
        },
        {
            "type": "G2",
            "diagram": [1, 0],
            "dim_gamma_tilde": 2,
            "generators": gens(({1: 1}, 1), ({2: 1}, 1)),
            "normality": "-",
        },
    ]
    return rows


def e7_example():
    return {
        "schema": 1,
        "type": "E7",
        "diagram": [1, 0, 0, 0, 0, 0, 1],
        "orbit_dimension": 70,
        "bala_carter": "4A1",
        "f_generators": [
            {"weight": {6: 1}, "degree": 1},
            {"weight": {2: 1}, "degree": 2},
            {"weight": {5: 1, 1: 1, 7: -1}, "degree": 2},
            {"weight": {4: 1, 1: 1, 7: -1}, "degree": 3},
            {"weight": {1: 2}, "degree": 3},
            {"weight": {7: 1, 1: -1}, "degree": 1},
            {"weight": {3: 1, 7: -1}, "degree": 1},
        ],
        "dominant_monomials": [
            [1, 0, 0, 0, 0, 0, 0],
            [0, 1, 0, 0, 0, 0, 0],
            [0, 0, 1, 0, 0, 1, 0],
            [0, 0, 0, 0, 1, 0, 0],
            [0, 0, 0, 1, 0, 1, 0],
            [0, 0, 0, 0, 1, 1, 0],
            [0, 0, 0, 0, 1, 1, 1],
            [0, 0, 0, 0, 1, 2, 0],
            [0, 0, 0, 0, 1, 2, 1],
            [0, 0, 0, 0, 1, 2, 2],
        ],
    }


def normalize(rows):
    out = []
    for r in rows:
        r = dict(r)
        if "lambdas" in r:
            r["lambdas"] = [{str(k): v for k, v in lam.items()} for lam in r["lambdas"]]
        if "second_variant" in r:
            sv = dict(r["second_variant"])
            sv["lambda"] = {str(k): v for k, v in sv["lambda"].items()}
            r["second_variant"] = sv
        if "generators" in r:
            r["generators"] = [{"weight": {str(k): v for k, v in g["weight"].items()},
                                "degree": g["degree"]} for g in r["generators"]]
        out.append(r)
    return out


def main():
    os.makedirs(OUT, exist_ok=True)
    with open(os.path.join(OUT, "table1.json"), "w") as f:
        json.dump({"schema": 1, "rows": normalize(table1_rows())}, f, indent=1)
        f.write("\n")
    with open(os.path.join(OUT, "table2.json"), "w") as f:
        json.dump({"schema": 1, "rows": normalize(table2_rows())}, f, indent=1)
        f.write("\n")
    ex = e7_example()
    ex["f_generators"] = [{"weight": {str(k): v for k, v in g["weight"].items()},
                           "degree": g["degree"]} for g in ex["f_generators"]]
    with open(os.path.join(OUT, "e7_example.json"), "w") as f:
        json.dump(ex, f, indent=1)
        f.write("\n")
    print("wrote golden tables to", OUT)


if __name__ == "__main__":
    main()
