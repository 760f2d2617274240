#!/usr/bin/env python3
"""Print every worked table, in order, for eyeball comparison or golden
regeneration.

Usage: python3 scripts/reproduce_tables.py [table-id ...]
"""

import sys

from groupdual.tables import PAPER_TABLES, paper_table


def main() -> int:
    ids = sys.argv[1:] or sorted(PAPER_TABLES)
    for table_id in ids:
        print(f"== table {table_id}")
        sys.stdout.write(paper_table(table_id))
        print()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
