#!/usr/bin/env python3
"""Run the complete verification battery and exit nonzero on any failure.

Thin wrapper over ``gvbraid verify-all`` so the whole certificate can be
reproduced with one command; any extra arguments are forwarded (for example
``--max-degree 4`` for a quick pass, or ``--only theorem``).  Set
``GVB_WORKERS=K`` to spread the degree sweeps over K processes.
"""

import sys

from gvbraid.cli import main

if __name__ == "__main__":
    sys.exit(main(["verify-all", *sys.argv[1:]]))
