#!/usr/bin/env python3
"""Pretty-print the canonical section of the (p,q)-shuffles.

One row per shuffle: its one-line images, bubble profile, the reduced words
of its bubble components, and the formal sum of monoid words the section
assigns to it (crossing letters s_i, virtual letters x_i).
"""

import argparse
import sys

from gvbraid.section import section_table


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("left", type=int)
    parser.add_argument("right", type=int)
    parser.add_argument(
        "--kind",
        choices=("full", "braid", "involutive"),
        default="full",
        help="full lift, crossing-only section, or square-free lift",
    )
    args = parser.parse_args(argv)
    rows = section_table(args.left, args.right, args.kind)
    total = 0
    for row in rows:
        sigma = row["shuffle"]
        value = row["value"]
        if args.kind == "braid":
            words = [str(value)]
        else:
            words = [str(w) for w, _ in value.sorted_terms()]
        total += len(words)
        print(f"shuffle {sigma.images}  profile {row['profile']}")
        print(f"  components: {' | '.join(row['components'])}")
        print(f"  lift ({len(words)} word{'s' if len(words) != 1 else ''}):")
        for word in words:
            print(f"    {word}")
    print(f"{len(rows)} shuffles, {total} words in total")
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
