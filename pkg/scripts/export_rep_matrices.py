#!/usr/bin/env python3
"""Print the matrices of the stock monoid representation as dense tables.

For the chosen dimension this writes the plain R-matrix and diagonal twist
together with their flip-composed (braided) forms, as JSON keyed by operator
name.  Row/column index of the basis pair e_a (x) e_b is ``a*dim + b``;
entries are exact Laurent-polynomial strings in q and t.
"""

import argparse
import json
import sys

from gvbraid.rmatrix import (
    FUNDAMENTAL_WEIGHTS,
    braided_r_matrix,
    braided_twist,
    pair_table_dense,
    r_matrix,
    twist_table,
)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--dim",
        type=int,
        default=3,
        choices=sorted(FUNDAMENTAL_WEIGHTS),
        help="dimension of the underlying vector space",
    )
    args = parser.parse_args(argv)
    dim = args.dim
    weights = FUNDAMENTAL_WEIGHTS[dim]
    tables = {
        "r_matrix": r_matrix(dim),
        "twist": twist_table(weights),
        "braided_r_matrix": braided_r_matrix(dim),
        "braided_twist": braided_twist(weights),
    }
    doc = {
        "dim": dim,
        "weights": [list(w) for w in weights],
        "index": "e_a (x) e_b at a*dim + b",
        "matrices": {
            name: pair_table_dense(table, dim) for name, table in tables.items()
        },
    }
    json.dump(doc, sys.stdout, indent=2)
    print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
